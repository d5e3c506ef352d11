//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.
//!
//! Besides the basic structure queries this module holds the generator
//! families used throughout the crate: paths, cycles, complete graphs, the
//! Petersen graph, complete multipartite graphs and their single-edge
//! augmentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., 63}` packed into a machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `{0,3,5}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl std::str::FromStr for VertexSet {
    type Err = Error;

    /// Accepts `{0,3,5}`, `0,3,5` or `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body);
        let mut set = VertexSet::EMPTY;
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::input(format!("bad vertex `{tok}` in set `{s}`")))?;
            if v >= MAX_VERTICES {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            set.insert(v);
        }
        Ok(set)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from raw adjacency words, validating symmetry.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let range = VertexSet::full(n).bits();
        for (u, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::input(format!(
                    "vertex {u} has out-of-range neighbours"
                )));
            }
            if row >> u & 1 == 1 {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            for v in VertexSet(row).iter() {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::input(format!("asymmetric adjacency at ({u},{v})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Minimum degree; 0 for the one-vertex graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components of the subgraph induced on `V \ removed`,
    /// ordered by their minimum vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut left = self.vertices().difference(removed);
        let mut out = Vec::new();
        while let Some(seed) = left.min() {
            let comp = self.reach(seed, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Number of components of `V \ removed`, without materialising them.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut left = self.vertices().difference(removed);
        let mut c = 0;
        while let Some(seed) = left.min() {
            left = left.difference(self.reach(seed, left));
            c += 1;
        }
        c
    }

    /// Vertices reachable from `seed` inside `within`.
    fn reach(&self, seed: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << seed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()) == self.vertices()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Outer pentagon `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::new(10, &edges).expect("petersen edges are valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Part sizes `n1 >= n2 >= .. >= ns` of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::input(format!(
                "a complete multipartite graph needs at least 2 parts, got {}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::input("part sizes must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!(
                "part sizes must be non-increasing, got {parts:?}"
            )));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part size `n1`.
    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Number of parts of size `n1`.
    pub fn largest_count(&self) -> usize {
        self.parts
            .iter()
            .take_while(|&&p| p == self.parts[0])
            .count()
    }

    /// Vertex block of part `i` (1-based, as `V_1 .. V_s`). Blocks are
    /// consecutive index ranges in part order.
    pub fn block(&self, i: usize) -> VertexSet {
        assert!(
            i >= 1 && i <= self.parts.len(),
            "part index {i} out of range"
        );
        let start: usize = self.parts[..i - 1].iter().sum();
        (start..start + self.parts[i - 1]).collect()
    }

    pub fn blocks(&self) -> Vec<VertexSet> {
        (1..=self.parts.len()).map(|i| self.block(i)).collect()
    }

    /// 1-based part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        let mut start = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if v < start + p {
                return Some(i + 1);
            }
            start += p;
        }
        None
    }

    /// Checks the hypotheses under which adding an edge inside part `i`
    /// preserves minimum degree, algebraic connectivity and spectral radius.
    pub fn check_augmentable(&self, i: usize) -> std::result::Result<(), String> {
        if self.largest() < 3 {
            return Err(format!("n1 >= 3 (n1 = {})", self.largest()));
        }
        if self.largest_count() == 1 && self.parts[1] < 3 {
            return Err(format!(
                "n2 >= 3 when the largest part is unique (n2 = {})",
                self.parts[1]
            ));
        }
        if i < 2 || i > self.parts.len() {
            return Err(format!("part index in 2..={} (got {i})", self.parts.len()));
        }
        if self.parts[i - 1] < 3 {
            return Err(format!("|V{i}| >= 3 (|V{i}| = {})", self.parts[i - 1]));
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for PartitionSpec {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        PartitionSpec::new(parts)
    }
}

impl From<PartitionSpec> for Vec<usize> {
    fn from(spec: PartitionSpec) -> Self {
        spec.parts
    }
}

impl std::str::FromStr for PartitionSpec {
    type Err = Error;

    /// Parses `3,3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad part size `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionSpec::new(parts)
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K_{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

pub fn complete_multipartite(spec: &PartitionSpec) -> Graph {
    let n = spec.order();
    let full = VertexSet::full(n).bits();
    let mut adj = vec![0u64; n];
    for block in spec.blocks() {
        for v in block.iter() {
            adj[v] = full & !block.bits();
        }
    }
    Graph { n, adj }
}

/// A complete multipartite graph with one extra edge inside a part.
#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    pub graph: Graph,
    pub spec: PartitionSpec,
    /// 1-based part that received the edge.
    pub part: usize,
    pub added_edge: (usize, usize),
}

/// Adds the edge `pair` inside part `part` (1-based) of `K_spec`.
pub fn augment_multipartite(
    spec: &PartitionSpec,
    part: usize,
    pair: (usize, usize),
) -> Result<AugmentedGraph> {
    spec.check_augmentable(part)
        .map_err(|clause| Error::precondition(None, clause))?;
    let base = complete_multipartite(spec);
    let graph = add_intra_part_edge(&base, spec, part, pair)
        .map_err(|clause| Error::precondition(None, clause))?;
    let (u, v) = pair;
    Ok(AugmentedGraph {
        graph,
        spec: spec.clone(),
        part,
        added_edge: (u.min(v), u.max(v)),
    })
}

/// Adds `pair` to `g`, requiring both ends inside part `part` and the pair to
/// be a non-edge. Returns the violated clause on failure.
pub(crate) fn add_intra_part_edge(
    g: &Graph,
    spec: &PartitionSpec,
    part: usize,
    (u, v): (usize, usize),
) -> std::result::Result<Graph, String> {
    let block = spec.block(part);
    if u == v {
        return Err(format!("pair ({u},{v}) must be two distinct vertices"));
    }
    if !block.contains(u) || !block.contains(v) {
        return Err(format!("pair ({u},{v}) must lie inside V{part} = {block}"));
    }
    if g.has_edge(u, v) {
        return Err(format!("pair ({u},{v}) is already an edge"));
    }
    Ok(g.with_edge(u, v).expect("pair validated against the block"))
}

/// First non-adjacent pair inside part `part` of `g`, in lexicographic order.
pub fn first_free_pair(g: &Graph, spec: &PartitionSpec, part: usize) -> Option<(usize, usize)> {
    let block = spec.block(part);
    block.iter().find_map(|u| {
        block
            .iter()
            .filter(|&v| v > u)
            .find(|&v| !g.has_edge(u, v))
            .map(|v| (u, v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn path_construction() {
        let g = p3();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn self_loop_and_range_rejected() {
        assert!(matches!(Graph::new(4, &[(0, 0)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(65, &[]), Err(Error::Capacity { .. })));
    }

    #[test]
    fn components_examples() {
        let g = p3();
        assert_eq!(
            g.components(VertexSet::singleton(1)),
            vec![VertexSet::singleton(0), VertexSet::singleton(2)]
        );
        let c4 = Graph::cycle(4);
        let removed: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(
            c4.components(removed),
            vec![VertexSet::singleton(1), VertexSet::singleton(3)]
        );
        let k4 = Graph::complete(4);
        assert_eq!(k4.components(VertexSet::EMPTY), vec![VertexSet::full(4)]);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(p3().min_degree(), 1);
        assert_eq!(complete_multipartite(&spec(&[3, 3])).min_degree(), 3);
        let pet = Graph::petersen();
        assert_eq!(pet.degrees(), vec![3; 10]);
        assert_eq!(pet.min_degree(), 3);
        assert_eq!(pet.edge_count(), 15);
    }

    #[test]
    fn complement_examples() {
        let k4c = Graph::complete(4).complement();
        assert_eq!(k4c.edge_count(), 0);
        assert!(!k4c.is_connected());
        // The 5-cycle complement is the pentagram 0-2-4-1-3-0.
        let c5c = Graph::cycle(5).complement();
        let pentagram = Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5c, pentagram);
        assert_eq!(c5c.degrees(), vec![2; 5]);
        assert!(!complete_multipartite(&spec(&[3, 3])).is_complete());
    }

    #[test]
    fn multipartite_examples() {
        let k22 = complete_multipartite(&spec(&[2, 2]));
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(k22.degrees(), vec![2; 4]);
        // K_{2,2} with blocks {0,1},{2,3} is the cycle 0-2-1-3-0.
        assert_eq!(k22, Graph::cycle(4).permuted(&[0, 2, 1, 3]));

        let k33 = complete_multipartite(&spec(&[3, 3]));
        assert_eq!(k33.degrees(), vec![3; 6]);
        assert_eq!(k33.edge_count(), 9);

        let k333 = complete_multipartite(&spec(&[3, 3, 3]));
        assert_eq!(k333.order(), 9);
        assert_eq!(k333.degrees(), vec![6; 9]);
        assert_eq!(k333.edge_count(), 27);
        assert_eq!(k333.complement().components(VertexSet::EMPTY).len(), 3);
    }

    #[test]
    fn partition_spec_validation() {
        assert!(PartitionSpec::new(vec![3]).is_err());
        assert!(PartitionSpec::new(vec![2, 3]).is_err());
        assert!(PartitionSpec::new(vec![2, 0]).is_err());
        let s: PartitionSpec = "4,2,2,1".parse().unwrap();
        assert_eq!(s.largest_count(), 1);
        assert_eq!(s.block(2), [4, 5].into_iter().collect());
        assert_eq!(s.part_of(8), Some(4));
        assert_eq!(s.part_of(9), None);
    }

    #[test]
    fn augment_examples() {
        let a = augment_multipartite(&spec(&[3, 3]), 2, (3, 4)).unwrap();
        assert_eq!(a.graph.order(), 6);
        assert_eq!(a.graph.edge_count(), 10);
        assert_eq!(a.graph.min_degree(), 3);
        assert_eq!(a.added_edge, (3, 4));

        let a = augment_multipartite(&spec(&[3, 3, 3]), 2, (4, 3)).unwrap();
        assert_eq!(a.graph.edge_count(), 28);
        assert_eq!(a.graph.min_degree(), 6);
        assert_eq!(a.added_edge, (3, 4));
    }

    #[test]
    fn augment_preconditions() {
        let err = augment_multipartite(&spec(&[3, 2]), 2, (3, 4)).unwrap_err();
        match err {
            // With a unique largest part the n2 clause fires first.
            Error::Precondition { clause, .. } => assert!(clause.contains("n2"), "{clause}"),
            e => panic!("unexpected {e}"),
        }
        let err = augment_multipartite(&spec(&[3, 3, 2]), 3, (6, 7)).unwrap_err();
        assert!(err.to_string().contains("|V3| >= 3"), "{err}");
        let err = augment_multipartite(&spec(&[3, 3]), 1, (0, 1)).unwrap_err();
        assert!(err.to_string().contains("part index"), "{err}");
        let err = augment_multipartite(&spec(&[2, 2]), 2, (2, 3)).unwrap_err();
        assert!(err.to_string().contains("n1 >= 3"), "{err}");
        let err = augment_multipartite(&spec(&[3, 3]), 2, (0, 4)).unwrap_err();
        assert!(err.to_string().contains("inside V2"), "{err}");
    }

    #[test]
    fn vertex_set_text_forms() {
        let s: VertexSet = "{0,3,5}".parse().unwrap();
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.to_string(), "{0,3,5}");
        assert_eq!("1, 2".parse::<VertexSet>().unwrap().len(), 2);
        assert_eq!("{}".parse::<VertexSet>().unwrap(), VertexSet::EMPTY);
        assert!("{64}".parse::<VertexSet>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..=12).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..40).prop_map(move |pairs| {
                    let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                    Graph::new(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn components_partition_the_remainder(g in arb_graph(), mask in any::<u64>()) {
                let removed = VertexSet::from_bits(mask).intersection(g.vertices());
                let comps = g.components(removed);
                let mut union = VertexSet::EMPTY;
                for (i, a) in comps.iter().enumerate() {
                    prop_assert!(!a.is_empty());
                    prop_assert!(union.intersection(*a).is_empty());
                    union = union.union(*a);
                    for b in &comps[i + 1..] {
                        for v in a.iter() {
                            prop_assert!(g.neighbors(v).intersection(*b).is_empty());
                        }
                    }
                }
                prop_assert_eq!(union, g.vertices().difference(removed));
                prop_assert_eq!(comps.len(), g.component_count(removed));
            }

            #[test]
            fn complement_is_an_involution(g in arb_graph()) {
                prop_assert_eq!(g.complement().complement(), g.clone());
                let n = g.order();
                prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
            }

            #[test]
            fn multipartite_edge_count_and_degree(mut parts in proptest::collection::vec(1usize..=5, 2..=5)) {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let s = PartitionSpec::new(parts.clone()).unwrap();
                let g = complete_multipartite(&s);
                let n = s.order();
                let sq: usize = parts.iter().map(|p| p * p).sum();
                prop_assert_eq!(g.edge_count(), (n * n - sq) / 2);
                prop_assert_eq!(g.min_degree(), n - parts[0]);
            }

            #[test]
            fn augmentation_adds_exactly_one_edge(extra in proptest::collection::vec(3usize..=4, 1..=3)) {
                let mut parts = vec![4usize];
                parts.extend(extra);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let s = PartitionSpec::new(parts).unwrap();
                let base = complete_multipartite(&s);
                let pair = first_free_pair(&base, &s, 2).unwrap();
                let a = augment_multipartite(&s, 2, pair).unwrap();
                prop_assert_eq!(a.graph.edge_count(), base.edge_count() + 1);
                let diff: usize = (0..s.order())
                    .map(|v| (a.graph.neighbors(v).bits() ^ base.neighbors(v).bits()).count_ones() as usize)
                    .sum();
                prop_assert_eq!(diff, 2);
            }
        }
    }
}
