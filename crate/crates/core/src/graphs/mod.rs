//! Simple graphs: triangular graphs, complete graphs, complements, and the
//! independent-set machinery used by the complexes and ideals modules.

mod edgelist;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexMask;
use crate::error::{invalid, Result};

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored as `(u, v)` with `u < v`, deduplicated and sorted.
#[derive(Clone, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    adjacency: Vec<VertexMask>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges == other.edges
            && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Endpoints may come in either order;
    /// duplicate edges are merged. Self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != vertex_count {
                return invalid(format!(
                    "{} labels given for {} vertices",
                    l.len(),
                    vertex_count
                ));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return invalid(format!("self-loop at vertex {a}"));
            }
            if a >= vertex_count || b >= vertex_count {
                return invalid(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                ));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![VertexMask::empty(vertex_count); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Graph {
            vertex_count,
            edges,
            labels,
            adjacency,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        Graph::new(vertex_count, [], None).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or its decimal index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn neighbors(&self, v: usize) -> &VertexMask {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != self.vertex_count {
                return invalid("label count does not match vertex count");
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub(crate) fn all_vertices(&self) -> VertexMask {
        VertexMask::full(self.vertex_count, self.vertex_count)
    }
}

/// The vertex `(i j)` of `T_n`, with `1 <= i < j <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexPairLabel {
    pub i: usize,
    pub j: usize,
}

impl VertexPairLabel {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return invalid(format!("({i} {j}) is not a pair with 1 <= i < j"));
        }
        Ok(VertexPairLabel { i, j })
    }

    /// Rank of the pair in lexicographic order over `1 <= i < j <= n`.
    pub fn index(&self, n: usize) -> usize {
        debug_assert!(self.j <= n);
        // pairs starting with a < i: sum_{a=1}^{i-1} (n - a)
        let before = (self.i - 1) * n - (self.i - 1) * self.i / 2;
        before + (self.j - self.i - 1)
    }

    pub fn from_index(n: usize, mut index: usize) -> Result<Self> {
        for i in 1..n {
            let row = n - i;
            if index < row {
                return Ok(VertexPairLabel { i, j: i + 1 + index });
            }
            index -= row;
        }
        invalid(format!("index out of range for T_{n}"))
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }

    /// All pairs over `1..=n` in index order.
    pub fn all(n: usize) -> Vec<VertexPairLabel> {
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| VertexPairLabel { i, j }))
            .collect()
    }
}

impl std::fmt::Display for VertexPairLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

fn pair_labels(n: usize) -> Vec<String> {
    VertexPairLabel::all(n).iter().map(ToString::to_string).collect()
}

/// The triangular graph `T_n`: vertices are the 2-subsets of `{1..n}`, adjacent
/// iff they intersect.
pub fn triangular(n: usize) -> Result<Graph> {
    if n < 2 {
        return invalid(format!("triangular graph needs n >= 2, got {n}"));
    }
    let pairs = VertexPairLabel::all(n);
    let mut edges = Vec::new();
    for (a, p) in pairs.iter().enumerate() {
        for (b, q) in pairs.iter().enumerate().skip(a + 1) {
            if p.intersects(q) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(pairs.len(), edges, Some(pair_labels(n)))
}

/// Builds `T_n` from `T_{n-1}` by adding a clique on `(1 n), ..., (n-1 n)` and
/// joining each `(i j)` to `(i n)` and `(j n)`.
pub fn triangular_recursive(n: usize) -> Result<Graph> {
    if n < 2 {
        return invalid(format!("triangular graph needs n >= 2, got {n}"));
    }
    let mut vertices = vec![VertexPairLabel { i: 1, j: 2 }];
    let mut edges: Vec<(VertexPairLabel, VertexPairLabel)> = Vec::new();
    for m in 3..=n {
        let fresh: Vec<_> = (1..m).map(|i| VertexPairLabel { i, j: m }).collect();
        for (a, p) in fresh.iter().enumerate() {
            for q in &fresh[a + 1..] {
                edges.push((*p, *q));
            }
        }
        for old in &vertices {
            edges.push((*old, VertexPairLabel { i: old.i, j: m }));
            edges.push((*old, VertexPairLabel { i: old.j, j: m }));
        }
        vertices.extend(fresh);
    }
    let indexed = edges.into_iter().map(|(p, q)| (p.index(n), q.index(n)));
    Graph::new(n * (n - 1) / 2, indexed, Some(pair_labels(n)))
}

/// Complement graph; labels are preserved.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges, g.labels.clone()).expect("complement of a valid graph is valid")
}

/// The complete graph `K_N`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return invalid("complete graph needs at least one vertex");
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges, None)
}

/// Calls `visit` on every independent set of size at most `max_size`
/// (including the empty set), in lexicographic order.
pub fn for_each_independent_set(
    g: &Graph,
    max_size: Option<usize>,
    mut visit: impl FnMut(&[usize]),
) {
    let limit = max_size.unwrap_or(usize::MAX);
    let mut current = Vec::new();
    independent_dfs(g, &g.all_vertices(), &mut current, limit, &mut visit);
}

fn independent_dfs(
    g: &Graph,
    candidates: &VertexMask,
    current: &mut Vec<usize>,
    limit: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(current);
    if current.len() >= limit {
        return;
    }
    let mut rest = candidates.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        let next = rest.and_not(g.neighbors(v));
        current.push(v);
        independent_dfs(g, &next, current, limit, visit);
        current.pop();
    }
}

/// All independent sets of size at most `max_size` (all sizes when `None`),
/// including the empty set, in lexicographic order.
pub fn independent_sets(g: &Graph, max_size: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_independent_set(g, max_size, |s| out.push(s.to_vec()));
    out
}

/// Inclusion-maximal independent sets, sorted lexicographically.
///
/// Bron–Kerbosch with pivoting, run on the complement adjacency.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    bron_kerbosch(
        g,
        &mut chosen,
        g.all_vertices(),
        VertexMask::empty(n),
        &mut out,
    );
    out.sort();
    out
}

fn non_neighbors(g: &Graph, v: usize) -> VertexMask {
    let mut m = g.all_vertices().and_not(g.neighbors(v));
    m.remove(v);
    m
}

fn bron_kerbosch(
    g: &Graph,
    chosen: &mut Vec<usize>,
    candidates: VertexMask,
    excluded: VertexMask,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            let mut set = chosen.clone();
            set.sort_unstable();
            out.push(set);
        }
        return;
    }
    let pool = candidates.or(&excluded);
    let pivot = pool
        .iter()
        .max_by_key(|&u| candidates.and(&non_neighbors(g, u)).len())
        .expect("pool is nonempty");
    let branch = candidates.and(g.neighbors(pivot)).or(&{
        let mut p = VertexMask::empty(g.vertex_count());
        if candidates.contains(pivot) {
            p.insert(pivot);
        }
        p
    });
    let mut candidates = candidates;
    let mut excluded = excluded;
    for v in branch.iter() {
        let nn = non_neighbors(g, v);
        chosen.push(v);
        bron_kerbosch(g, chosen, candidates.and(&nn), excluded.and(&nn), out);
        chosen.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Size of a largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    let mut current = Vec::new();
    max_independent(g, &g.all_vertices(), &mut current, &mut best);
    best
}

fn max_independent(g: &Graph, candidates: &VertexMask, current: &mut Vec<usize>, best: &mut usize) {
    if current.len() > *best {
        *best = current.len();
    }
    let mut rest = candidates.clone();
    while let Some(v) = rest.first() {
        if current.len() + rest.len() <= *best {
            return;
        }
        rest.remove(v);
        let next = rest.and_not(g.neighbors(v));
        current.push(v);
        max_independent(g, &next, current, best);
        current.pop();
    }
}

/// True when all maximal independent sets have the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let sets = maximal_independent_sets(g);
    sets.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Minimal vertex covers, i.e. complements of maximal independent sets,
/// sorted lexicographically. These index the minimal primes of the edge ideal.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut covers: Vec<Vec<usize>> = maximal_independent_sets(g)
        .into_iter()
        .map(|s| {
            let m = VertexMask::from_indices(n, &s);
            (0..n).filter(|v| !m.contains(*v)).collect()
        })
        .collect();
    covers.sort();
    covers
}

/// True when every edge has an endpoint in `cover`.
pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let m = VertexMask::from_indices(g.vertex_count(), cover);
    g.edges()
        .iter()
        .all(|&(u, v)| m.contains(u) || m.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)], None).unwrap()
    }

    #[test]
    fn pair_index_round_trip() {
        for n in 2..10 {
            for (k, p) in VertexPairLabel::all(n).iter().enumerate() {
                assert_eq!(p.index(n), k);
                assert_eq!(VertexPairLabel::from_index(n, k).unwrap(), *p);
            }
            assert!(VertexPairLabel::from_index(n, binom(n, 2)).is_err());
        }
    }

    #[test]
    fn small_triangular_graphs() {
        let t2 = triangular(2).unwrap();
        assert_eq!((t2.vertex_count(), t2.edge_count()), (1, 0));
        let t3 = triangular(3).unwrap();
        assert_eq!(t3.edges(), complete(3).unwrap().edges());
        let t4 = triangular(4).unwrap();
        assert_eq!((t4.vertex_count(), t4.edge_count()), (6, 12));
        assert_eq!(t4.label(0), "(1 2)");
        assert!(triangular(1).is_err());
        assert!(triangular_recursive(0).is_err());
    }

    #[test]
    fn recursive_matches_direct() {
        for n in 2..=9 {
            assert_eq!(triangular(n).unwrap(), triangular_recursive(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)], None).is_err());
        assert!(Graph::new(3, [(0, 3)], None).is_err());
        assert!(Graph::new(2, [], Some(vec!["a".into()])).is_err());
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)], None).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&complete(5).unwrap()).edge_count(), 0);
        let c4 = complement(&triangular(4).unwrap());
        assert_eq!(c4.edge_count(), 3);
        assert!((0..6).all(|v| c4.degree(v) == 1));
        let c5 = complement(&triangular(5).unwrap());
        assert_eq!((c5.vertex_count(), c5.edge_count()), (10, 15));
        assert!((0..10).all(|v| c5.degree(v) == 3));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete(1).unwrap().edge_count(), 0);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert!(complete(0).is_err());
    }

    #[test]
    fn independent_set_listing() {
        assert_eq!(independent_sets(&Graph::edgeless(3), None).len(), 8);
        let k4 = independent_sets(&complete(4).unwrap(), None);
        assert_eq!(k4, vec![vec![], vec![0], vec![1], vec![2], vec![3]]);
        let t5 = independent_sets(&triangular(5).unwrap(), None);
        let mut counts = [0usize; 3];
        for s in &t5 {
            counts[s.len()] += 1;
        }
        assert_eq!(counts, [1, 10, 15]);
        let capped = independent_sets(&triangular(5).unwrap(), Some(1));
        assert_eq!(capped.len(), 11);
        let mut sorted = t5.clone();
        sorted.sort();
        assert_eq!(sorted, t5);
    }

    #[test]
    fn maximal_sets_and_covers() {
        let k = complete(4).unwrap();
        assert_eq!(maximal_independent_sets(&k), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(maximal_independent_sets(&path3()), vec![vec![0, 2], vec![1]]);
        let t5 = maximal_independent_sets(&triangular(5).unwrap());
        assert_eq!(t5.len(), 15);
        assert!(t5.iter().all(|s| s.len() == 2));

        let covers = minimal_vertex_covers(&k);
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|c| c.len() == 3));
        let t4 = minimal_vertex_covers(&triangular(4).unwrap());
        assert_eq!(t4.len(), 3);
        assert!(t4.iter().all(|c| c.len() == 4));
        assert_eq!(minimal_vertex_covers(&Graph::edgeless(3)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&triangular(9).unwrap()), 4);
        assert_eq!(independence_number(&triangular(11).unwrap()), 5);
        assert_eq!(independence_number(&complete(6).unwrap()), 1);
        assert_eq!(independence_number(&Graph::edgeless(4)), 4);
    }

    #[test]
    fn unmixed() {
        for n in 2..=8 {
            assert!(is_unmixed(&triangular(n).unwrap()), "T_{n}");
        }
        assert!(!is_unmixed(&path3()));
        assert!(is_unmixed(&complete(5).unwrap()));
    }
}
