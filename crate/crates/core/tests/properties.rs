use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use tricm::graphs::{is_vertex_cover, parse_edge_list, write_edge_list};
use tricm::homology::rank::{rank_mod_p, rank_rational_bareiss, rank_rational_sparse};
use tricm::{
    boundary_matrix, complement, f_vector, h_vector, independence_complex, independent_sets,
    minimal_vertex_covers, reduced_betti_table, FieldSpec, Graph, SimplicialComplex, SparseMatrix,
};

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges, None).unwrap()
        })
    })
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec(1u32..(1 << n), 1..7).prop_map(move |masks| {
            let facets = masks
                .iter()
                .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect::<Vec<usize>>());
            SimplicialComplex::from_faces(n, facets).unwrap()
        })
    })
}

fn matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
            let entries = vals
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(k, &v)| (k / c, k % c, v))
                .collect();
            SparseMatrix::new(r, c, entries).unwrap()
        })
    })
}

fn fields() -> [FieldSpec; 3] {
    [FieldSpec::RATIONALS, FieldSpec::new(2).unwrap(), FieldSpec::new(3).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in graph()) {
        let twice = complement(&complement(&g));
        prop_assert_eq!(twice.edges(), g.edges());
        let c = complement(&g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.vertex_count() * (g.vertex_count() - 1) / 2);
    }

    #[test]
    fn independence_complex_faces_are_independent_sets(g in graph()) {
        let c = independence_complex(&g);
        let faces: Vec<Vec<usize>> = c.iter_faces().map(|f| f.to_vec()).collect();
        let mut sets: Vec<Vec<usize>> = independent_sets(&g, None).into_iter().filter(|s| !s.is_empty()).collect();
        let mut sorted = faces.clone();
        sorted.sort();
        sets.sort();
        prop_assert_eq!(sorted, sets);
    }

    #[test]
    fn minimal_covers_are_minimal(g in graph()) {
        for c in minimal_vertex_covers(&g) {
            prop_assert!(is_vertex_cover(&g, &c));
            for &v in &c {
                let smaller: Vec<usize> = c.iter().copied().filter(|&u| u != v).collect();
                prop_assert!(!is_vertex_cover(&g, &smaller));
            }
        }
    }

    #[test]
    fn edge_lists_round_trip(g in graph()) {
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn boundary_of_boundary_vanishes(c in complex()) {
        for p in fields() {
            for i in 0..=c.dim() {
                let a = boundary_matrix(&c, i - 1, p).unwrap();
                let b = boundary_matrix(&c, i, p).unwrap();
                let prod = a.checked_mul(&b).unwrap();
                let modulus = i64::from(p.characteristic());
                let nonzero = prod.rows().iter().flatten().any(|&(_, v)| if modulus == 0 { v != 0 } else { v % modulus != 0 });
                prop_assert!(!nonzero);
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers(c in complex()) {
        let chi = f_vector(&c).unwrap().reduced_euler_characteristic();
        for p in fields() {
            let b = reduced_betti_table(&c, p);
            prop_assert_eq!(BigInt::from(b.alternating_sum()), chi.clone());
        }
    }

    #[test]
    fn betti_numbers_ignore_relabeling(c in complex(), seed in any::<u64>()) {
        let n = c.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let map: BTreeMap<usize, usize> = perm.iter().copied().enumerate().collect();
        let moved = c.relabeled(&map, n).unwrap();
        for p in fields() {
            prop_assert_eq!(reduced_betti_table(&moved, p).dims, reduced_betti_table(&c, p).dims);
        }
    }

    #[test]
    fn field_betti_numbers_dominate_rational_ones(c in complex()) {
        let q = reduced_betti_table(&c, FieldSpec::RATIONALS);
        for p in [2, 3] {
            let b = reduced_betti_table(&c, FieldSpec::new(p).unwrap());
            for (x, y) in b.dims.iter().zip(&q.dims) {
                prop_assert!(x >= y);
            }
        }
    }

    #[test]
    fn h_vector_sums_to_top_face_count(c in complex()) {
        let f = f_vector(&c).unwrap();
        let h = h_vector(&f);
        prop_assert_eq!(&h.entries[0], &BigInt::from(1));
        let sum: BigInt = h.entries.iter().sum();
        prop_assert_eq!(&sum, f.entries.last().unwrap());
    }

    #[test]
    fn prime_ranks_bound_rational_rank(m in matrix()) {
        let q = rank_rational_sparse(&m);
        prop_assert_eq!(q, rank_rational_bareiss(&m));
        prop_assert_eq!(q, rank_rational_sparse(&m.transpose()));
        for p in [2, 3, 5, 1_000_003] {
            prop_assert!(rank_mod_p(&m, p) <= q);
        }
        // minors of a 6x6 matrix with entries below 5 stay below the prime
        prop_assert_eq!(rank_mod_p(&m, 1_000_003), q);
    }
}
