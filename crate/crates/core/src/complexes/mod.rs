//! Simplicial complexes built from graphs, their face counts, and links.

mod format;
mod triangular;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::binomial;
use crate::error::{invalid, Result};
use crate::graphs::{complement, for_each_independent_set, Graph};

pub use format::{parse_complex, read_complex, write_complex};
pub use triangular::{
    link_triangular_witness, link_target_complex, triangular_complex, triangular_f_closed,
};

/// A finite simplicial complex on the ambient vertex set `0..vertex_count`.
///
/// Faces are stored per dimension as strictly increasing index lists, sorted
/// lexicographically. The void complex (no faces at all) is distinct from the
/// complex `{∅}` whose only face is the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces_by_dim: Vec<Vec<Vec<usize>>>,
    includes_empty_face: bool,
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces_by_dim: Vec::new(),
            includes_empty_face: false,
        }
    }

    /// The complex `{∅}`.
    pub fn empty_face(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces_by_dim: Vec::new(),
            includes_empty_face: true,
        }
    }

    /// Smallest complex containing every given face (downward closure).
    /// Faces may be unsorted; duplicates are merged.
    pub fn from_faces<I, F>(vertex_count: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<usize>>> = Vec::new();
        for face in faces {
            let mut f = face.as_ref().to_vec();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return invalid(format!("face {f:?} repeats a vertex"));
            }
            if let Some(&v) = f.last() {
                if v >= vertex_count {
                    return invalid(format!("vertex {v} out of range for {vertex_count} vertices"));
                }
            }
            insert_closure(&mut by_dim, f);
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces_by_dim: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
            includes_empty_face: true,
        })
    }

    /// Builds a complex from faces already grouped by dimension, sorted and
    /// closed under subsets. Only checked in debug builds.
    pub(crate) fn from_sorted_parts(vertex_count: usize, faces_by_dim: Vec<Vec<Vec<usize>>>) -> Self {
        let mut faces_by_dim = faces_by_dim;
        while faces_by_dim.last().is_some_and(|d| d.is_empty()) {
            faces_by_dim.pop();
        }
        let c = SimplicialComplex {
            vertex_count,
            faces_by_dim,
            includes_empty_face: true,
        };
        debug_assert!(c.check_invariants().is_ok());
        c
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        !self.includes_empty_face
    }

    /// Dimension; `-1` for both `{∅}` and the void complex (use
    /// [`is_void`](Self::is_void) to tell them apart).
    pub fn dim(&self) -> isize {
        self.faces_by_dim.len() as isize - 1
    }

    /// Faces of dimension `i`; empty for out-of-range `i`. Dimension `-1`
    /// is not represented here, see [`face_count`](Self::face_count).
    pub fn faces(&self, i: isize) -> &[Vec<usize>] {
        if i < 0 {
            return &[];
        }
        self.faces_by_dim.get(i as usize).map_or(&[], |v| v.as_slice())
    }

    /// Number of `i`-faces, counting the empty face in dimension `-1`.
    pub fn face_count(&self, i: isize) -> usize {
        match i {
            -1 => usize::from(self.includes_empty_face),
            i if i < -1 => 0,
            i => self.faces(i).len(),
        }
    }

    pub fn total_faces(&self) -> usize {
        usize::from(self.includes_empty_face) + self.faces_by_dim.iter().map(Vec::len).sum::<usize>()
    }

    /// Position of `face` (sorted) within its dimension.
    pub fn index_of(&self, face: &[usize]) -> Option<usize> {
        if face.is_empty() {
            return self.includes_empty_face.then_some(0);
        }
        self.faces(face.len() as isize - 1)
            .binary_search_by(|f| f.as_slice().cmp(face))
            .ok()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.index_of(&f).is_some()
    }

    /// Vertices that are 0-faces.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces(0).iter().map(|f| f[0]).collect()
    }

    /// Nonempty faces, by dimension then lexicographically.
    pub fn iter_faces(&self) -> impl Iterator<Item = &[usize]> {
        self.faces_by_dim.iter().flatten().map(Vec::as_slice)
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        if self.faces_by_dim.is_empty() {
            return if self.includes_empty_face { vec![Vec::new()] } else { Vec::new() };
        }
        let mut covered = std::collections::HashSet::new();
        for f in self.iter_faces() {
            for skip in 0..f.len() {
                let mut sub = f.to_vec();
                sub.remove(skip);
                covered.insert(sub);
            }
        }
        self.iter_faces()
            .filter(|f| !covered.contains(*f))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Applies an injective vertex map. Every vertex of the complex must be
    /// mapped; the image is sorted again.
    pub fn relabeled(&self, map: &BTreeMap<usize, usize>, vertex_count: usize) -> Result<Self> {
        if self.is_void() {
            return Ok(Self::void(vertex_count));
        }
        let mut faces = Vec::with_capacity(self.total_faces());
        for f in self.iter_faces() {
            let mut g = Vec::with_capacity(f.len());
            for v in f {
                match map.get(v) {
                    Some(&w) if w < vertex_count => g.push(w),
                    _ => return invalid(format!("vertex {v} has no valid image")),
                }
            }
            faces.push(g);
        }
        let image = Self::from_faces(vertex_count, faces)?;
        if image.total_faces() != self.total_faces() {
            return invalid("vertex map is not injective on the complex");
        }
        Ok(image)
    }

    /// Order-preserving relabeling of the complex's own vertices onto
    /// `0..k`. Two complexes that differ only by such a relabeling compress
    /// to equal values.
    pub fn compressed(&self) -> Self {
        let verts = self.vertices();
        let map: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        if self.is_void() {
            return Self::void(0);
        }
        // order-preserving maps keep every dimension sorted
        let faces_by_dim = self
            .faces_by_dim
            .iter()
            .map(|d| d.iter().map(|f| f.iter().map(|v| map[v]).collect()).collect())
            .collect();
        SimplicialComplex {
            vertex_count: verts.len(),
            faces_by_dim,
            includes_empty_face: true,
        }
    }

    /// Checks subset closure, sortedness, and vertex ranges.
    pub fn check_invariants(&self) -> Result<()> {
        if !self.includes_empty_face && !self.faces_by_dim.is_empty() {
            return invalid("nonempty faces without the empty face");
        }
        for (k, faces) in self.faces_by_dim.iter().enumerate() {
            if faces.is_empty() {
                return invalid(format!("dimension {k} is empty below the top"));
            }
            for w in faces.windows(2) {
                if w[0] >= w[1] {
                    return invalid(format!("faces in dimension {k} not strictly sorted"));
                }
            }
            for f in faces {
                if f.len() != k + 1 || f.windows(2).any(|w| w[0] >= w[1]) {
                    return invalid(format!("malformed face {f:?}"));
                }
                if f.iter().any(|&v| v >= self.vertex_count) {
                    return invalid(format!("face {f:?} leaves the vertex range"));
                }
                if k > 0 {
                    for skip in 0..f.len() {
                        let mut sub = f.clone();
                        sub.remove(skip);
                        if self.index_of(&sub).is_none() {
                            return invalid(format!("face {f:?} is missing the subface {sub:?}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn insert_closure(by_dim: &mut Vec<std::collections::BTreeSet<Vec<usize>>>, f: Vec<usize>) {
    if f.is_empty() {
        return;
    }
    let k = f.len() - 1;
    if by_dim.len() <= k {
        by_dim.resize_with(k + 1, Default::default);
    }
    if by_dim[k].contains(&f) {
        return;
    }
    for skip in 0..f.len() {
        let mut sub = f.clone();
        sub.remove(skip);
        insert_closure(by_dim, sub);
    }
    by_dim[k].insert(f);
}

/// The complex of independent sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    for_each_independent_set(g, None, |s| {
        if s.is_empty() {
            return;
        }
        if by_dim.len() < s.len() {
            by_dim.resize_with(s.len(), Vec::new);
        }
        by_dim[s.len() - 1].push(s.to_vec());
    });
    SimplicialComplex::from_sorted_parts(g.vertex_count(), by_dim)
}

/// The complex of cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    independence_complex(&complement(g))
}

/// Face counts `(f_{-1}, f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub entries: Vec<BigInt>,
}

/// `(h_0, ..., h_{d+1})`; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    pub entries: Vec<BigInt>,
}

impl FVector {
    pub fn from_counts<T: Into<BigInt>>(counts: impl IntoIterator<Item = T>) -> Self {
        FVector {
            entries: counts.into_iter().map(Into::into).collect(),
        }
    }

    /// Dimension `d` of the complex the vector describes.
    pub fn dim(&self) -> isize {
        self.entries.len() as isize - 2
    }

    /// Reduced Euler characteristic `-f_{-1} + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> BigInt {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, f)| if k % 2 == 0 { -f } else { f.clone() })
            .sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl HVector {
    /// Index and value of the first negative entry.
    pub fn first_negative(&self) -> Option<(usize, &BigInt)> {
        self.entries.iter().enumerate().find(|(_, h)| h.is_negative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

pub fn f_vector(c: &SimplicialComplex) -> Result<FVector> {
    if c.is_void() {
        return invalid("the void complex has no f-vector");
    }
    Ok(FVector::from_counts(
        (-1..=c.dim()).map(|i| BigInt::from(c.face_count(i))),
    ))
}

/// `h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}` for `0 <= k <= d+1`.
pub fn h_vector(f: &FVector) -> HVector {
    let top = f.entries.len(); // d + 2
    let d1 = top as u64 - 1; // d + 1
    let entries = (0..top)
        .map(|k| {
            let mut h = BigInt::zero();
            for i in 0..=k {
                let term = binomial(d1 - i as u64, (k - i) as u64) * &f.entries[i];
                if (k - i) % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
            }
            h
        })
        .collect();
    HVector { entries }
}

/// `lk(F) = { H in c : H ∩ F = ∅, H ∪ F in c }`, on the same ambient vertices.
pub fn link(c: &SimplicialComplex, face: &[usize]) -> Result<SimplicialComplex> {
    let mut f = face.to_vec();
    f.sort_unstable();
    if c.index_of(&f).is_none() {
        return invalid(format!("{f:?} is not a face of the complex"));
    }
    if f.is_empty() {
        return Ok(c.clone());
    }
    let max_dim = c.dim() - f.len() as isize;
    let mut by_dim = Vec::new();
    let mut union = Vec::with_capacity(c.dim().max(0) as usize + 1);
    for i in 0..=max_dim {
        let mut level = Vec::new();
        for h in c.faces(i) {
            if !disjoint_sorted(h, &f) {
                continue;
            }
            merge_sorted(h, &f, &mut union);
            if c.index_of(&union).is_some() {
                level.push(h.clone());
            }
        }
        if level.is_empty() {
            break;
        }
        by_dim.push(level);
    }
    Ok(SimplicialComplex::from_sorted_parts(c.vertex_count(), by_dim))
}

fn disjoint_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn merge_sorted(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
}

/// Number of connected components of the 1-skeleton, over the complex's own
/// vertices.
pub fn component_count(c: &SimplicialComplex) -> usize {
    let verts = c.vertices();
    let mut uf = UnionFind::new(c.vertex_count());
    for e in c.faces(1) {
        uf.union(e[0], e[1]);
    }
    let mut roots: Vec<usize> = verts.iter().map(|&v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// True iff the 1-skeleton is connected with at least one vertex. `{∅}`
/// has no vertices and is reported as disconnected.
pub fn is_connected(c: &SimplicialComplex) -> Result<bool> {
    if c.is_void() {
        return invalid("connectivity of the void complex is undefined");
    }
    Ok(component_count(c) == 1)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, triangular};

    fn counts(v: &FVector) -> Vec<i64> {
        v.entries.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn delta4_structure() {
        let c = independence_complex(&triangular(4).unwrap());
        assert_eq!(c.dim(), 1);
        assert_eq!(counts(&f_vector(&c).unwrap()), vec![1, 6, 3]);
        assert_eq!(component_count(&c), 3);
        assert!(!is_connected(&c).unwrap());
        assert!(c.check_invariants().is_ok());
    }

    #[test]
    fn complete_graph_complex_is_points() {
        let c = independence_complex(&complete(5).unwrap());
        assert_eq!(c.dim(), 0);
        assert_eq!(c.face_count(0), 5);
    }

    #[test]
    fn clique_complexes() {
        let t5 = triangular(5).unwrap();
        assert_eq!(clique_complex(&complement(&t5)), independence_complex(&t5));
        assert_eq!(clique_complex(&Graph::edgeless(4)).dim(), 0);
        let simplex = clique_complex(&complete(3).unwrap());
        assert_eq!(simplex.total_faces(), 8);
        assert_eq!(simplex.dim(), 2);
    }

    #[test]
    fn h_vectors() {
        let h = |f: &[i64]| counts(&FVector { entries: h_vector(&FVector::from_counts(f.iter().copied())).entries });
        assert_eq!(h(&[1, 10, 15]), vec![1, 8, 6]);
        assert_eq!(h(&[1, 1]), vec![1, 0]);
        assert_eq!(h(&[1, 6, 3]), vec![1, 4, -2]);
        assert_eq!(h(&[1, 15, 45, 15]), vec![1, 12, 18, -16]);
        assert_eq!(
            h(&[1, 55, 990, 6930, 17325, 10395]),
            vec![1, 50, 780, 4280, 6220, -936]
        );
    }

    #[test]
    fn void_and_empty_face() {
        let void = SimplicialComplex::void(3);
        assert!(f_vector(&void).is_err());
        assert!(is_connected(&void).is_err());
        let e = SimplicialComplex::empty_face(3);
        assert_eq!(counts(&f_vector(&e).unwrap()), vec![1]);
        assert_ne!(void, e);
        assert_eq!(e.facets(), vec![Vec::<usize>::new()]);
        assert!(!is_connected(&e).unwrap());
    }

    #[test]
    fn single_point() {
        let p = SimplicialComplex::from_faces(1, [[0]]).unwrap();
        assert_eq!(counts(&f_vector(&p).unwrap()), vec![1, 1]);
        assert!(is_connected(&p).unwrap());
    }

    #[test]
    fn from_faces_closes_downward() {
        let c = SimplicialComplex::from_faces(4, [vec![2, 0, 1], vec![3]]).unwrap();
        assert_eq!(counts(&f_vector(&c).unwrap()), vec![1, 4, 3, 1]);
        assert_eq!(c.facets(), vec![vec![3], vec![0, 1, 2]]);
        assert!(SimplicialComplex::from_faces(2, [[0, 2]]).is_err());
        assert!(SimplicialComplex::from_faces(3, [[1, 1]]).is_err());
    }

    #[test]
    fn links() {
        let d7 = independence_complex(&triangular(7).unwrap());
        assert_eq!(link(&d7, &[]).unwrap(), d7);
        let lk = link(&d7, &[0]).unwrap();
        assert_eq!(counts(&f_vector(&lk).unwrap()), vec![1, 10, 15]);
        assert!(lk.check_invariants().is_ok());
        let facet = d7.faces(2)[0].clone();
        assert_eq!(link(&d7, &facet).unwrap(), SimplicialComplex::empty_face(21));
        // (1 2) and (1 3) intersect, so they do not form a face
        assert!(link(&d7, &[0, 1]).is_err());
    }

    #[test]
    fn compression_and_relabel() {
        let c = SimplicialComplex::from_faces(6, [[1, 4], [4, 5]]).unwrap();
        let z = c.compressed();
        assert_eq!(z, SimplicialComplex::from_faces(3, [[0, 1], [1, 2]]).unwrap());
        let map: BTreeMap<usize, usize> = [(1, 2), (4, 0), (5, 1)].into_iter().collect();
        let r = c.relabeled(&map, 3).unwrap();
        assert_eq!(r, SimplicialComplex::from_faces(3, [[0, 2], [0, 1]]).unwrap());
        let bad: BTreeMap<usize, usize> = [(1, 0), (4, 0), (5, 1)].into_iter().collect();
        assert!(c.relabeled(&bad, 3).is_err());
    }
}
