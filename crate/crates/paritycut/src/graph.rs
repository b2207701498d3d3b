//! Core data model: simple graphs, edge signs, signed graphs, vertex
//! labellings, and bipartitions.
//!
//! Vertices are dense integers `0..n` internally; file formats and display
//! are 1-based. Edges are stored canonically (smaller endpoint first, sorted),
//! so equality on [`Graph`] and [`SignedGraph`] is structural.

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// Sign of an edge. Positive edges join vertices whose labels share parity,
/// negative edges join opposite parities. The derived order (`+` before `-`)
/// exists only for deterministic serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An undirected edge as a canonical pair `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// Returns the canonical form of an edge.
pub fn canonical_edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops, no duplicate edges; `n >= 1`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

fn validate_edges(n: usize, pairs: impl IntoIterator<Item = Edge>) -> Result<Vec<Edge>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if a >= n {
            return Err(Error::VertexOutOfRange { vertex: a, n });
        }
        if b >= n {
            return Err(Error::VertexOutOfRange { vertex: b, n });
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        edges.push(canonical_edge(a, b));
    }
    Ok(edges)
}

impl Graph {
    /// Builds a graph from unordered endpoint pairs.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = validate_edges(n, pairs.iter().copied())?;
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&canonical_edge(u, v)).is_ok()
    }

    /// True iff the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &pairs).expect("complement of a valid graph is valid")
    }

    /// Vertex sequence along the graph if it is a path: starts at the
    /// lower-numbered endpoint (the single vertex for `n = 1`).
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if self.n == 1 {
            return self.edges.is_empty().then(|| vec![0]);
        }
        if self.edge_count() != self.n - 1 || !self.is_connected() {
            return None;
        }
        let mut endpoints = (0..self.n).filter(|&v| self.degree(v) == 1);
        let start = endpoints.next()?;
        if (0..self.n).any(|v| self.degree(v) > 2) {
            return None;
        }
        Some(self.walk_from(start, self.n - 1))
    }

    /// Vertex sequence around the graph if it is a cycle: starts at vertex 0
    /// and proceeds toward its lower-numbered neighbor.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || self.edge_count() != self.n || !self.is_connected() {
            return None;
        }
        if (0..self.n).any(|v| self.degree(v) != 2) {
            return None;
        }
        Some(self.walk_from(0, self.n - 1))
    }

    /// Walks `steps` edges from `start` without immediately backtracking,
    /// always preferring the lowest-numbered unvisited direction.
    fn walk_from(&self, start: usize, steps: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut here = start;
        for _ in 0..steps {
            let next = self.adj[here]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("degree checked by caller");
            order.push(next);
            prev = here;
            here = next;
        }
        order
    }
}

/// A signed graph: a simple graph plus a total sign assignment on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<Sign>,
}

impl SignedGraph {
    /// Builds a signed graph from `(u, v, sign)` triples.
    pub fn from_edges(n: usize, signed: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut triples: Vec<(Edge, Sign)> =
            validate_edges(n, signed.iter().map(|&(a, b, _)| (a, b)))?
                .into_iter()
                .zip(signed.iter().map(|&(_, _, s)| s))
                .collect();
        triples.sort_unstable_by_key(|&(e, _)| e);
        if let Some(w) = triples.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateEdge(w[0].0 .0, w[0].0 .1));
        }
        let pairs: Vec<Edge> = triples.iter().map(|&(e, _)| e).collect();
        let signs: Vec<Sign> = triples.iter().map(|&(_, s)| s).collect();
        let graph = Graph::from_edges(n, &pairs)?;
        Ok(SignedGraph { graph, signs })
    }

    /// Wraps a graph with a uniform sign on every edge.
    pub fn homogeneous(graph: Graph, sign: Sign) -> Self {
        let signs = vec![sign; graph.edge_count()];
        SignedGraph { graph, signs }
    }

    /// Replaces the signs, edge-by-edge in canonical order.
    pub fn resign(&self, signs: &[Sign]) -> Result<Self> {
        if signs.len() != self.edge_count() {
            return Err(Error::InvalidParameters(format!(
                "sign pattern has {} entries, graph has {} edges",
                signs.len(),
                self.edge_count()
            )));
        }
        Ok(SignedGraph {
            graph: self.graph.clone(),
            signs: signs.to_vec(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Canonical edge list paired with signs.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.graph
            .edges()
            .iter()
            .copied()
            .zip(self.signs.iter().copied())
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.graph
            .edges()
            .binary_search(&canonical_edge(u, v))
            .ok()
            .map(|i| self.signs[i])
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn positive_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_positive()).count()
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.negative_count() == 0
    }

    pub fn is_all_negative(&self) -> bool {
        self.positive_count() == 0
    }
}

/// A bijection from vertices onto the labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityLabelling {
    labels: Vec<usize>,
}

impl ParityLabelling {
    /// `labels[v]` is the label of vertex `v`; must be a bijection onto `1..=n`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidLabelling("no labels given".into()));
        }
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n {
                return Err(Error::InvalidLabelling(format!(
                    "label {l} outside 1..={n}"
                )));
            }
            if seen[l] {
                return Err(Error::InvalidLabelling(format!("label {l} repeated")));
            }
            seen[l] = true;
        }
        Ok(ParityLabelling { labels })
    }

    /// The labelling `v -> v + 1`.
    pub fn identity(n: usize) -> Result<Self> {
        ParityLabelling::new((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// True iff vertex `v` carries an odd label.
    pub fn is_odd(&self, v: usize) -> bool {
        self.labels[v] % 2 == 1
    }

    /// The set of vertices carrying odd labels, ascending.
    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_odd(v)).collect()
    }
}

/// A two-block vertex partition; `block 0` / `block 1` indices are stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    in_block1: Vec<bool>,
}

impl Bipartition {
    /// Builds a bipartition from per-vertex membership in block 1.
    pub fn from_membership(in_block1: Vec<bool>) -> Self {
        Bipartition { in_block1 }
    }

    /// Builds a bipartition of `0..n` whose block 0 is the given vertex set.
    pub fn from_block0(n: usize, block0: &[usize]) -> Self {
        let mut in_block1 = vec![true; n];
        for &v in block0 {
            in_block1[v] = false;
        }
        Bipartition { in_block1 }
    }

    pub fn n(&self) -> usize {
        self.in_block1.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        usize::from(self.in_block1[v])
    }

    /// Vertices of the given block, ascending.
    pub fn block(&self, b: usize) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.block_of(v) == b).collect()
    }

    pub fn sizes(&self) -> (usize, usize) {
        let ones = self.in_block1.iter().filter(|&&x| x).count();
        (self.n() - ones, ones)
    }

    pub fn size_difference(&self) -> usize {
        let (a, b) = self.sizes();
        a.abs_diff(b)
    }

    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.in_block1[u] != self.in_block1[v]
    }

    /// Swaps the two block indices.
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            in_block1: self.in_block1.iter().map(|&x| !x).collect(),
        }
    }

    /// Number of edges of `g` with endpoints in different blocks.
    pub fn cut_size(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| self.separates(u, v))
            .count()
    }
}

/// The signature induced on `g` by the labelling `f`: an edge is positive
/// iff its endpoint labels share parity.
pub fn induced_signature(g: &Graph, f: &ParityLabelling) -> Result<SignedGraph> {
    if f.n() != g.n() {
        return Err(Error::LabellingMismatch {
            expected: g.n(),
            found: f.n(),
        });
    }
    let signs = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if f.is_odd(u) == f.is_odd(v) {
                Sign::Positive
            } else {
                Sign::Negative
            }
        })
        .collect();
    Ok(SignedGraph {
        graph: g.clone(),
        signs,
    })
}
