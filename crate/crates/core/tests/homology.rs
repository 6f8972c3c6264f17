use tricm::homology::rank::{rank_mod_p, rank_rational, rank_rational_bareiss, rank_rational_sparse};
use tricm::{boundary_matrix, reduced_betti_table, triangular_complex, FieldSpec, SimplicialComplex, SparseMatrix};

fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn dense(rows: &[&[i64]]) -> SparseMatrix {
    let mut e = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                e.push((r, c, v));
            }
        }
    }
    SparseMatrix::new(rows.len(), rows.first().map_or(0, |r| r.len()), e).unwrap()
}

// reference values cross-checked with an independent exact-rank script
#[test]
fn triangular_betti_tables() {
    let q = FieldSpec::RATIONALS;
    assert_eq!(reduced_betti_table(&triangular_complex(4), q).dims, [0, 2, 0]);
    assert_eq!(reduced_betti_table(&triangular_complex(5), q).dims, [0, 0, 6]);
    assert_eq!(reduced_betti_table(&triangular_complex(6), q).dims, [0, 0, 16, 0]);
    for p in [0, 2, 5, 7] {
        assert_eq!(reduced_betti_table(&triangular_complex(7), field(p)).dims, [0, 0, 0, 20], "p = {p}");
    }
    assert_eq!(reduced_betti_table(&triangular_complex(7), field(3)).dims, [0, 0, 1, 21]);
}

#[test]
fn empty_face_and_void() {
    let e = SimplicialComplex::empty_face(0);
    assert_eq!(reduced_betti_table(&e, FieldSpec::RATIONALS).dims, [1]);
    assert!(reduced_betti_table(&SimplicialComplex::void(0), FieldSpec::RATIONALS).dims.is_empty());
    let point = SimplicialComplex::from_faces(1, [vec![0]]).unwrap();
    assert_eq!(reduced_betti_table(&point, FieldSpec::RATIONALS).dims, [0, 0]);
}

#[test]
fn torsion_of_projective_plane() {
    let rp2 = SimplicialComplex::from_faces(
        6,
        [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ],
    )
    .unwrap();
    assert_eq!(reduced_betti_table(&rp2, field(0)).dims, [0, 0, 0, 0]);
    assert_eq!(reduced_betti_table(&rp2, field(3)).dims, [0, 0, 0, 0]);
    assert_eq!(reduced_betti_table(&rp2, field(2)).dims, [0, 0, 1, 1]);
}

#[test]
fn boundary_shapes() {
    let d5 = triangular_complex(5);
    let q = FieldSpec::RATIONALS;
    let b0 = boundary_matrix(&d5, 0, q).unwrap();
    assert_eq!((b0.row_count(), b0.col_count(), b0.nnz()), (1, 10, 10));
    let b1 = boundary_matrix(&d5, 1, q).unwrap();
    assert_eq!((b1.row_count(), b1.col_count(), b1.nnz()), (10, 15, 30));
    assert_eq!(boundary_matrix(&d5, 2, q).unwrap().col_count(), 0);
    assert!(boundary_matrix(&SimplicialComplex::void(1), 0, q).is_err());
    let b2 = boundary_matrix(&d5, 1, field(2)).unwrap();
    assert!(b2.rows().iter().flatten().all(|&(_, v)| v == 1));
}

#[test]
fn ranks_over_fields() {
    let m = dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    assert_eq!(rank_rational(&m), 2);
    assert_eq!(rank_mod_p(&m, 3), 1);
    assert_eq!(rank_mod_p(&m, 7), 2);

    let vand = dense(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
    assert_eq!(rank_rational(&vand), 3);
    assert_eq!(rank_mod_p(&vand, 2), 2);

    // entries near i64::MAX force the big-integer path
    let big = i64::MAX / 3;
    let m = dense(&[&[big, big - 1, 1], &[big - 2, big, 1], &[2 * big - 2, 2 * big - 1, 2]]);
    assert_eq!(rank_rational_sparse(&m), 2);
    assert_eq!(rank_rational_bareiss(&m), 2);
    assert_eq!(rank_mod_p(&SparseMatrix::zero(4, 5), 2), 0);
}

#[test]
fn sparse_and_bareiss_agree_on_boundaries() {
    for n in 4..=7 {
        let d = triangular_complex(n);
        for i in 1..=d.dim() {
            let b = boundary_matrix(&d, i, FieldSpec::RATIONALS).unwrap();
            let s = rank_rational_sparse(&b);
            if b.row_count().min(b.col_count()) <= 120 {
                assert_eq!(s, rank_rational_bareiss(&b), "n = {n}, i = {i}");
            }
            assert!(rank_mod_p(&b, 2) <= s);
        }
    }
}
