//! Simple undirected graphs on at most 64 vertices with one adjacency word
//! per vertex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported order. Adjacency rows are single `u64` words.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// A set of vertices of some host graph, stored as a bitmask. Serialized
/// as an ascending vertex list.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Vec<usize> {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = GraphError;
    fn try_from(vs: Vec<usize>) -> Result<VertexSet, GraphError> {
        vs.into_iter().try_fold(VertexSet::EMPTY, |s, v| {
            if v < MAX_ORDER {
                Ok(s.with(v))
            } else {
                Err(GraphError::VertexOutOfRange { vertex: v, order: MAX_ORDER })
            }
        })
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within all 64 slots; intersect with [`VertexSet::full`] to
/// stay inside a host graph.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
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

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edge additions return new values, so a `Graph` can be shared freely
/// between threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Wraps adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_ORDER);
        let twice: u32 = adj.iter().map(|r| r.count_ones()).sum();
        Graph { n: adj.len(), adj, edge_count: twice as usize / 2 }
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let range = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                let bad = (row & !range).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet::from_bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
                }
            }
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER);
        Graph::from_rows_unchecked(vec![0; n])
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_ORDER);
        let full = VertexSet::full(n).bits();
        Graph::from_rows_unchecked((0..n).map(|v| full & !(1 << v)).collect())
    }

    /// `C_n` on `0..n` in cyclic order. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// `P_n` on `0..n` in path order.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v)))
    }

    /// Returns a new graph with the given edges added.
    pub fn with_edges<I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = self.adj.clone();
        for (u, v) in edges {
            assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph::from_rows_unchecked(adj)
    }

    /// Returns a new graph in which `set` induces a clique.
    pub fn with_clique(&self, set: VertexSet) -> Graph {
        let mut adj = self.adj.clone();
        for v in set {
            adj[v] |= set.without(v).bits();
        }
        Graph::from_rows_unchecked(adj)
    }

    /// `true` if every edge of `self` is an edge of `other` (same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|` in ascending
    /// vertex order. The second value maps new labels to old ones.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let adj = map
            .iter()
            .map(|&v| {
                map.iter().enumerate().filter(|&(_, &u)| self.has_edge(v, u)).fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        (Graph::from_rows_unchecked(adj), map)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        Graph::from_rows_unchecked((0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect())
    }

    #[inline]
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Hop distance between `u` and `v`; `None` when they are in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distance_within(self.vertices(), u, v))
    }

    /// Distance in the subgraph induced by `within` (which must contain both
    /// endpoints).
    pub fn distance_within(&self, within: VertexSet, u: usize, v: usize) -> Option<usize> {
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.contains(v) {
            if frontier.is_empty() {
                return None;
            }
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | self.neighbors(w);
            }
            frontier = next & (within - seen);
            seen = seen | frontier;
            d += 1;
        }
        Some(d)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach_within(&self, within: VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | self.neighbors(w);
            }
            frontier = next & (within - seen);
            seen = seen | frontier;
        }
        seen
    }

    /// Components of the subgraph induced by `within`, ordered by smallest
    /// member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut parts = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach_within(rest, v);
            rest = rest - c;
            parts.push(c);
        }
        parts
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach_within(within, v) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Cut vertices of the subgraph induced by `within` (low-link DFS).
    pub fn cut_vertices_within(&self, within: VertexSet) -> VertexSet {
        let mut disc = [0u8; MAX_ORDER];
        let mut low = [0u8; MAX_ORDER];
        let mut cuts = VertexSet::EMPTY;
        let mut timer = 0u8;
        for root in within {
            if disc[root] != 0 {
                continue;
            }
            // Iterative DFS: (vertex, parent, remaining neighbours, child count)
            let mut stack: Vec<(usize, usize, u64, u32)> = Vec::new();
            timer += 1;
            disc[root] = timer;
            low[root] = timer;
            stack.push((root, usize::MAX, self.adj[root] & within.bits(), 0));
            while let Some(top) = stack.last_mut() {
                let (v, parent, ref mut rest, _) = *top;
                if *rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    *rest &= *rest - 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == 0 {
                        top.3 += 1;
                        timer += 1;
                        disc[w] = timer;
                        low[w] = timer;
                        stack.push((w, v, self.adj[w] & within.bits(), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let (v, parent, _, children) = stack.pop().expect("non-empty");
                    if parent == usize::MAX {
                        if children >= 2 {
                            cuts.insert(v);
                        }
                    } else {
                        low[parent] = low[parent].min(low[v]);
                        let grand = stack.last().map(|t| t.1).unwrap_or(usize::MAX);
                        let parent_is_root = grand == usize::MAX;
                        if !parent_is_root && low[v] >= disc[parent] {
                            cuts.insert(parent);
                        }
                    }
                }
            }
        }
        cuts
    }

    /// `n >= 3`, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices_within(self.vertices()).is_empty()
    }

    /// Connected with no cut vertex; `K_1` and `K_2` count as nonseparable.
    pub fn is_nonseparable_within(&self, within: VertexSet) -> bool {
        !within.is_empty() && self.is_connected_within(within) && self.cut_vertices_within(within).is_empty()
    }

    /// All inclusion-maximal cliques, sorted lexicographically by their
    /// ascending member lists.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        self.maximal_cliques_within(self.vertices())
    }

    /// Maximal cliques of the subgraph induced by `within` (Bron–Kerbosch
    /// with pivoting).
    pub fn maximal_cliques_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if !within.is_empty() {
            self.bron_kerbosch(VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
        }
        out.sort_by_cached_key(|c| c.to_vec());
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & self.neighbors(u)).len()).expect("p non-empty");
        for v in p - self.neighbors(pivot) {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r.with(v), p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::write_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        crate::graph6::parse_graph6(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} ", self.to_graph6())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_sets_serialize_as_lists() {
        let s = VertexSet::from_bits(0b1011);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,1,3]");
        assert_eq!(serde_json::from_str::<VertexSet>("[3,1,0]").unwrap(), s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn build_examples() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(g(4, &[]).edge_count(), 0);
        assert_eq!(g(4, &[(0, 1), (0, 1), (1, 2)]).edge_count(), 2);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(65, []), Err(GraphError::OrderTooLarge(65)));
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn distances() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.distance(0, 2), Ok(Some(2)));
        assert_eq!(c5.distance(3, 3), Ok(Some(0)));
        let two = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(two.distance(0, 3), Ok(None));
        assert_eq!(Graph::path(4).distance(0, 3), Ok(Some(3)));
        assert!(Graph::path(4).distance(0, 4).is_err());
    }

    #[test]
    fn components() {
        let k3k1 = g(4, &[(0, 1), (1, 2), (0, 2)]);
        let parts = k3k1.connected_components();
        assert_eq!(parts.iter().map(|p| p.len()).collect::<Vec<_>>(), vec![3, 1]);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
        assert_eq!(Graph::cycle(6).connected_components(), vec![VertexSet::full(6)]);
    }

    #[test]
    fn two_connectivity() {
        assert!(Graph::cycle(4).is_two_connected());
        assert!(!Graph::path(4).is_two_connected());
        assert!(!Graph::complete(2).is_two_connected());
        // bowtie: cut vertex 0
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        assert!(!bowtie.is_two_connected());
        assert_eq!(bowtie.cut_vertices_within(bowtie.vertices()), VertexSet::singleton(0));
    }

    #[test]
    fn cliques() {
        assert_eq!(Graph::complete(4).maximal_cliques(), vec![VertexSet::full(4)]);
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(paw.maximal_cliques(), vec![VertexSet::from_iter([0, 1, 2]), VertexSet::from_iter([2, 3])]);
        let c5 = Graph::cycle(5).maximal_cliques();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn induced_relabels() {
        let c6 = Graph::cycle(6);
        let (h, map) = c6.induced(VertexSet::from_iter([1, 2, 3, 5]));
        assert_eq!(map, vec![1, 2, 3, 5]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
