//! `Δ(n)`, the independence complex of `T_n`: closed-form face counts and
//! the explicit identification of links with smaller `Δ(l)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{independence_complex, FVector, SimplicialComplex};
use crate::combinat::factorial;
use crate::error::{invalid, Result};
use crate::graphs::{triangular, VertexPairLabel};

/// `Δ(n)`; the void complex when `n < 2`.
pub fn triangular_complex(n: usize) -> SimplicialComplex {
    match triangular(n) {
        Ok(g) => independence_complex(&g),
        Err(_) => SimplicialComplex::void(0),
    }
}

/// The complex a link of `Δ(n)` is identified with when `l = n - 2|F|`
/// symbols survive: `Δ(l)` for `l >= 2`, and `{∅}` for `l < 2` (the link of
/// a facet).
pub fn link_target_complex(l: usize) -> SimplicialComplex {
    if l < 2 {
        SimplicialComplex::empty_face(0)
    } else {
        triangular_complex(l)
    }
}

/// f-vector of `Δ(n)` from `f_i = n! / (2^{i+1} (i+1)! (n - 2(i+1))!)`:
/// the number of `(i+1)`-edge matchings of `K_n`.
pub fn triangular_f_closed(n: usize) -> Result<FVector> {
    if n < 2 {
        return invalid(format!("closed form needs n >= 2, got {n}"));
    }
    let n_fact = factorial(n as u64);
    let mut entries = vec![BigInt::from(1)];
    for size in 1..=n / 2 {
        let denom = (BigInt::from(1) << size) * factorial(size as u64) * factorial((n - 2 * size) as u64);
        entries.push(&n_fact / denom);
    }
    Ok(FVector { entries })
}

/// Vertex map from the link of `face` in `Δ(n)` onto `Δ(n - 2m)`, `m = |face|`.
///
/// The symbols of `{1..n}` not used by `face` are renumbered `1..n-2m` in
/// increasing order, and each surviving pair is sent to the renumbered pair.
/// When fewer than two symbols survive the link is `{∅}` and the map is empty.
pub fn link_triangular_witness(n: usize, face: &[usize]) -> Result<BTreeMap<usize, usize>> {
    if n < 2 {
        return invalid(format!("Δ({n}) has no faces"));
    }
    let vertex_count = n * (n - 1) / 2;
    let mut used = vec![false; n + 1];
    let mut seen = std::collections::BTreeSet::new();
    for &v in face {
        if v >= vertex_count || !seen.insert(v) {
            return invalid(format!("{face:?} is not a face of Δ({n})"));
        }
        let p = VertexPairLabel::from_index(n, v)?;
        if used[p.i] || used[p.j] {
            return invalid(format!("{face:?} is not a face of Δ({n}): {p} meets another pair"));
        }
        used[p.i] = true;
        used[p.j] = true;
    }
    let surviving: Vec<usize> = (1..=n).filter(|&s| !used[s]).collect();
    let l = surviving.len();
    let mut map = BTreeMap::new();
    if l < 2 {
        return Ok(map);
    }
    for (ra, &a) in surviving.iter().enumerate() {
        for (rb, &b) in surviving.iter().enumerate().skip(ra + 1) {
            let source = VertexPairLabel { i: a, j: b }.index(n);
            let target = VertexPairLabel { i: ra + 1, j: rb + 1 }.index(l);
            map.insert(source, target);
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{f_vector, link};

    fn counts(v: &FVector) -> Vec<i64> {
        v.entries.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(counts(&triangular_f_closed(11).unwrap()), vec![1, 55, 990, 6930, 17325, 10395]);
        assert_eq!(counts(&triangular_f_closed(9).unwrap()), vec![1, 36, 378, 1260, 945]);
        assert_eq!(counts(&triangular_f_closed(2).unwrap()), vec![1, 1]);
        assert!(triangular_f_closed(1).is_err());
    }

    #[test]
    fn degenerate_conventions() {
        assert!(triangular_complex(0).is_void());
        assert!(triangular_complex(1).is_void());
        assert_eq!(link_target_complex(1), SimplicialComplex::empty_face(0));
    }

    #[test]
    fn witness_for_single_vertex_in_delta5() {
        // (1 2) leaves symbols {3,4,5}; the link is three isolated points
        let d5 = triangular_complex(5);
        let lk = link(&d5, &[0]).unwrap();
        let map = link_triangular_witness(5, &[0]).unwrap();
        assert_eq!(map.len(), 3);
        let image = lk.relabeled(&map, 3).unwrap();
        assert_eq!(image, triangular_complex(3));
        assert_eq!(counts(&f_vector(&image).unwrap()), vec![1, 3]);
    }

    #[test]
    fn witness_rejects_non_faces() {
        // (1 2) and (1 3) share the symbol 1
        assert!(link_triangular_witness(5, &[0, 1]).is_err());
        assert!(link_triangular_witness(5, &[10]).is_err());
        assert!(link_triangular_witness(5, &[0, 0]).is_err());
    }

    #[test]
    fn facet_link_is_empty_face() {
        let d4 = triangular_complex(4);
        let facet = d4.faces(1)[0].clone();
        assert!(link_triangular_witness(4, &facet).unwrap().is_empty());
        assert_eq!(link(&d4, &facet).unwrap(), SimplicialComplex::empty_face(6));
    }
}
