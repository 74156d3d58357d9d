//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so every vertex subset
//! of a graph fits in a single machine word ([`VertexSet`]). Graphs produced by
//! [`Graph::delete_vertices`] remember which vertex of the original input each
//! of their vertices came from, see [`Graph::label`].

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count representable; matches the single-byte graph6 size range.
pub const MAX_VERTICES: usize = 62;

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

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

    /// The set `{0, 1, ..., n - 1}`.
    #[inline]
    pub const fn range(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
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
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph.
///
/// Equality compares structure only (vertex count and adjacency); the original
/// labels carried by induced subgraphs are ignored.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: (0..n).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op; loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n() });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        let n = self.n();
        if n == MAX_VERTICES {
            return Err(Error::TooManyVertices { n: n + 1, cap: MAX_VERTICES });
        }
        self.adj.push(0);
        let fresh = self.labels.iter().max().map_or(0, |&m| m + 1).max(n);
        self.labels.push(fresh);
        Ok(n)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexOutOfRange { vertex: n, n: 3 });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::range(n).bits() & !(1 << v);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let mut g = Graph::new(n + other.n())?;
        g.adj[..n].copy_from_slice(&self.adj);
        for (v, &nb) in other.adj.iter().enumerate() {
            g.adj[n + v] = nb << n;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |v| {
            VertexSet(self.adj[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// Index of `v` in the graph this one was (transitively) derived from.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Maps a vertex set of this graph to sorted original labels.
    pub fn original_labels(&self, s: VertexSet) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|v| self.labels[v]).collect();
        out.sort_unstable();
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    /// `N[v]`: `v` together with its neighbours.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | 1 << v))
    }

    /// `G - S`. Surviving vertices keep their relative order.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced(self.vertices().difference(s)))
    }

    /// `G[S]` for `S` within range. Surviving vertices keep their relative order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let order: Vec<usize> = keep.iter().collect();
        let adj = order
            .iter()
            .map(|&v| {
                let nb = self.adj[v] & keep.bits();
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| nb >> u & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph {
            adj,
            labels: order.iter().map(|&v| self.labels[v]).collect(),
        }
    }

    /// Connected components, each listed once, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Number of connected components, `q(G)`.
    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// True iff the graph is a forest, tested as `e = n - q`.
    pub fn is_acyclic(&self) -> bool {
        self.is_forest_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    // Mask-level primitives shared by the solvers. All masks must lie within
    // `self.vertices()`.

    #[inline]
    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    pub(crate) fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.bits();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, within.bits());
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    pub(crate) fn edges_within(&self, within: VertexSet) -> usize {
        within
            .iter()
            .map(|v| (self.adj[v] & within.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub(crate) fn is_forest_within(&self, within: VertexSet) -> bool {
        let q = self.components_within(within).len();
        self.edges_within(within) + q == within.len()
    }

    /// True iff `v` lies on some cycle of `G[within]` (`v` in `within`).
    pub(crate) fn on_cycle_within(&self, v: usize, within: u64) -> bool {
        let rest = within & !(1u64 << v);
        let mut nbrs = self.adj[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            let reached = self.reach(u, rest);
            if (nbrs & reached) != (1u64 << u) {
                return true;
            }
            nbrs &= !reached;
        }
        false
    }

    /// Vertices of the whole graph that lie on at least one cycle.
    pub fn cycle_vertices(&self) -> VertexSet {
        let all = self.vertices().bits();
        self.vertices()
            .iter()
            .filter(|&v| self.on_cycle_within(v, all))
            .collect()
    }
}

/// Parses whitespace-separated edge lists: a header `n m` followed by `m`
/// pairs `u v` (0-indexed). Several graphs may follow one another.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(i, line)| line.split_whitespace().map(move |t| (i + 1, t)));
    let mut graphs = Vec::new();
    let next_number = |what: &str, tokens: &mut dyn Iterator<Item = (usize, &str)>| {
        tokens.next().map(|(line, tok)| {
            tok.parse::<usize>().map_err(|_| Error::EdgeList {
                line,
                message: format!("expected {what}, found {tok:?}"),
            }).map(|value| (line, value))
        })
    };
    while let Some(n) = next_number("vertex count", &mut tokens) {
        let (line, n) = n?;
        let (_, m) = next_number("edge count", &mut tokens).ok_or(Error::EdgeList {
            line,
            message: "missing edge count".into(),
        })??;
        let mut g = Graph::new(n).map_err(|e| Error::EdgeList { line, message: e.to_string() })?;
        for _ in 0..m {
            let mut endpoint = || {
                next_number("edge endpoint", &mut tokens).ok_or(Error::EdgeList {
                    line,
                    message: "unexpected end of input inside edge list".into(),
                })?
            };
            let (line, u) = endpoint()?;
            let (_, v) = endpoint()?;
            if u == v {
                return Err(Error::EdgeList { line, message: format!("self-loop at vertex {u}") });
            }
            if u < n && v < n && g.has_edge(u, v) {
                return Err(Error::EdgeList { line, message: format!("duplicate edge {u} {v}") });
            }
            g.add_edge(u, v)
                .map_err(|e| Error::EdgeList { line, message: e.to_string() })?;
        }
        graphs.push(g);
    }
    Ok(graphs)
}
