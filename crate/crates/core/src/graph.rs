//! Immutable simple undirected graphs on at most 64 vertices.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency is not symmetric at ({u},{v})")]
    Asymmetric { u: usize, v: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("disjoint union would have {n} vertices; at most {MAX_VERTICES} are supported")]
    UnionTooLarge { n: usize },
}

/// A simple undirected graph with bit-mask adjacency.
///
/// Immutable once built; every "modification" produces a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks, validating symmetry
    /// and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let all = VertexSet::full(n).bits();
        for (u, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                let v = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if (row >> u) & 1 == 1 {
                return Err(GraphError::SelfLoop { v: u });
            }
            for v in VertexSet::from_bits(row) {
                if (adj[v] >> u) & 1 == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Attaches display names, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Number of vertices, n(G).
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !VertexSet::full(u + 1).bits())
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// N(S): union of the open neighborhoods of the members of `s`.
    #[inline]
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in s {
            out |= self.adj[v];
        }
        VertexSet::from_bits(out)
    }

    /// N[S] = N(S) ∪ S.
    #[inline]
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighborhood(s) | s
    }

    #[inline]
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.neighbors(v).intersects(s))
    }

    /// `s` dominates the whole graph: N[S] = V(G).
    #[inline]
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.closed_neighborhood(s) == self.vertices()
    }

    /// Independent and dominating, i.e. an inclusion-maximal independent set.
    pub fn is_maximal_independent(&self, s: VertexSet) -> bool {
        self.is_independent(s) && self.is_dominating(s)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// First edge with both ends in `s`, if any.
    pub fn edge_within(&self, s: VertexSet) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            (self.neighbors(u) & s)
                .iter()
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
    }

    /// G[S], with the map back to the vertices of `self`.
    pub fn induced_subgraph(&self, s: VertexSet) -> InducedSubgraph {
        let vertices = s.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                (self.neighbors(v) & s)
                    .iter()
                    .fold(0u64, |acc, w| acc | (1 << pos[w]))
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        InducedSubgraph {
            graph: Graph {
                n: vertices.len(),
                adj,
                labels,
            },
            vertices,
        }
    }

    /// G − N[I]. Independence of `i` is not required.
    pub fn delete_closed_neighborhood(&self, i: VertexSet) -> InducedSubgraph {
        self.induced_subgraph(self.closed_neighborhood(i).complement(self.n))
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.min() {
            let comp = self.reach(VertexSet::singleton(v), left);
            out.push(comp);
            left -= comp;
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start;
        let mut frontier = start;
        while !frontier.is_empty() {
            let next = (self.neighborhood(frontier) & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// At most one component. The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(VertexSet::singleton(0), self.vertices()) == self.vertices()
    }

    /// Order at least 2 and connected.
    pub fn is_nontrivial_connected(&self) -> bool {
        self.n >= 2 && self.is_connected()
    }

    /// G₀: the isolated vertices.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Splits into (G₀, G⁺), where G⁺ = G − G₀.
    pub fn split_isolated(&self) -> (VertexSet, InducedSubgraph) {
        let g0 = self.isolated_vertices();
        (g0, self.induced_subgraph(g0.complement(self.n)))
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (d == self.max_degree()).then_some(d)
    }

    /// Every edge `uv` has a common neighbor of `u` and `v`.
    pub fn every_edge_in_triangle(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.neighbors(u).intersects(self.neighbors(v)))
    }

    /// Length of a shortest cycle, found as the shortest `u`–`v` path
    /// avoiding the edge `uv`, minimized over all edges.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            let cap = best.map_or(usize::MAX, |b| b - 1);
            if let Some(d) = self.distance_avoiding_edge(u, v, cap) {
                best = Some(d + 1);
                if d == 2 {
                    break;
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    /// BFS distance from `u` to `v` with edge `uv` removed, giving up past `cap`.
    fn distance_avoiding_edge(&self, u: usize, v: usize, cap: usize) -> Option<usize> {
        let mut seen = VertexSet::singleton(u);
        let mut frontier = self.neighbors(u).without(v) - seen;
        seen |= frontier;
        let mut d = 1;
        while !frontier.is_empty() && d < cap {
            let next = self.neighborhood(frontier) - seen;
            d += 1;
            if next.contains(v) {
                return Some(d);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// A proper 2-coloring if one exists, returned as the color class that
    /// contains the least vertex of each component.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        for comp in self.components() {
            let start = VertexSet::singleton(comp.min().unwrap());
            let mut seen = start;
            let mut frontier = start;
            let mut even = true;
            while !frontier.is_empty() {
                if even {
                    side |= frontier;
                }
                let next = self.neighborhood(frontier) - seen;
                seen |= next;
                frontier = next;
                even = !even;
            }
        }
        let other = side.complement(self.n);
        (self.edge_within(side).is_none() && self.edge_within(other).is_none()).then_some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::UnionTooLarge { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph {
            n: self.n,
            adj,
            labels: None,
        }
    }

    /// Same vertex count and edges, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// An induced subgraph together with the map from its vertices back to the
/// vertices of the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent vertex that became vertex `i`.
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    #[inline]
    pub fn original(&self, v: usize) -> usize {
        self.vertices[v]
    }

    /// Maps a set over the subgraph to the parent's vertex ids.
    pub fn to_original(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.vertices[v]).collect()
    }

    /// Maps a set over the parent into the subgraph, dropping vertices
    /// that were removed.
    pub fn from_original(&self, s: VertexSet) -> VertexSet {
        self.vertices
            .iter()
            .enumerate()
            .filter(|&(_, &o)| s.contains(o))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Length of a shortest cycle, or [`Girth::Infinite`] for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("infinite"),
        }
    }
}
