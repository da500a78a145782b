//! Hypergraphs, simplicial complexes (downward closures), complements,
//! and the digraph bridge: path hypergraphs of acyclic digraphs, face
//! digraphs and inclusion digraphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("hyperedge must contain at least one vertex")]
    EmptyHyperedge,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("digraph has a closed allowed path: {}", format_cycle(.cycle))]
    CyclicDigraph { cycle: Vec<Vertex> },
}

fn format_cycle(cycle: &[Vertex]) -> String {
    cycle
        .iter()
        .map(|v| v.label())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Vertex with an opaque label. The derived lexicographic order on
/// labels is the fixed global order every simplex is sorted by.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(String);

impl Vertex {
    pub fn new(label: impl Into<String>) -> Self {
        Vertex(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Nonempty set of vertices, stored strictly increasing. Doubles as a
/// simplex of the associated simplicial complex; orientation is the
/// one induced by the vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<Vertex>);

impl Hyperedge {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self, HypergraphError> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        if set.is_empty() {
            return Err(HypergraphError::EmptyHyperedge);
        }
        Ok(Hyperedge(set.into_iter().collect()))
    }

    pub fn from_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        Hyperedge::new(labels.into_iter().map(Vertex::new)).expect("nonempty labels")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// The i-th codimension-1 face `d_i`: delete the i-th vertex in
    /// sorted order. `None` for a 0-simplex.
    pub fn face(&self, i: usize) -> Option<Hyperedge> {
        assert!(i < self.0.len(), "face index out of range");
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Hyperedge(v))
    }

    /// All codimension-1 faces `d_0, ..., d_n` in order.
    pub fn faces(&self) -> Vec<Hyperedge> {
        (0..self.0.len()).filter_map(|i| self.face(i)).collect()
    }

    /// All nonempty subsets, including the simplex itself.
    pub fn nonempty_subsets(&self) -> Vec<Hyperedge> {
        let n = self.0.len();
        (1..(1usize << n))
            .map(|mask| {
                Hyperedge(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i].clone())
                        .collect(),
                )
            })
            .collect()
    }

    pub fn is_subset_of(&self, other: &Hyperedge) -> bool {
        let set: BTreeSet<&Vertex> = other.0.iter().collect();
        self.0.iter().all(|v| set.contains(v))
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.0.iter().map(Vertex::label).collect();
        f.write_str(&labels.join(" "))
    }
}

/// Finite set of hyperedges. The vertex set is derived, so the
/// standing assumption that every vertex lies in a hyperedge holds by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    pub fn new(edges: impl IntoIterator<Item = Hyperedge>) -> Self {
        Hypergraph {
            edges: edges.into_iter().collect(),
        }
    }

    pub fn from_labels<S: Into<String> + Clone>(edges: &[&[S]]) -> Self {
        Hypergraph::new(
            edges
                .iter()
                .map(|e| Hyperedge::from_labels(e.iter().cloned())),
        )
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .flat_map(|e| e.vertices().iter().cloned())
            .collect()
    }

    /// Largest simplex dimension present.
    pub fn top_dimension(&self) -> Option<usize> {
        self.edges.iter().map(Hyperedge::dimension).max()
    }

    /// Hyperedges of a fixed dimension, in sorted order.
    pub fn edges_of_dimension(&self, n: usize) -> Vec<Hyperedge> {
        self.edges
            .iter()
            .filter(|e| e.dimension() == n)
            .cloned()
            .collect()
    }

    /// Downward closure: the smallest simplicial complex containing
    /// this hypergraph.
    pub fn closure(&self) -> SimplicialComplex {
        let edges: BTreeSet<Hyperedge> = self
            .edges
            .iter()
            .flat_map(Hyperedge::nonempty_subsets)
            .collect();
        SimplicialComplex(Hypergraph { edges })
    }

    /// Complement inside the closure. The returned edge set may leave
    /// some closure vertices uncovered; the flag is true when it
    /// covers them all.
    pub fn complement(&self) -> (Hypergraph, bool) {
        let closure = self.closure();
        let edges: BTreeSet<Hyperedge> = closure
            .hypergraph()
            .edges
            .difference(&self.edges)
            .cloned()
            .collect();
        let comp = Hypergraph { edges };
        let covers = comp.vertex_set() == closure.hypergraph().vertex_set();
        (comp, covers)
    }

    pub fn is_simplicial_complex(&self) -> bool {
        self.closure().hypergraph() == self
    }

    /// Disjoint union, prefixing every vertex label to keep the parts
    /// apart.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        fn relabel(h: &Hypergraph, prefix: &str) -> Vec<Hyperedge> {
            h.edges
                .iter()
                .map(|e| {
                    Hyperedge(
                        e.vertices()
                            .iter()
                            .map(|v| Vertex::new(format!("{prefix}{v}")))
                            .collect(),
                    )
                })
                .collect()
        }
        let mut edges = relabel(self, "l.");
        edges.extend(relabel(other, "r."));
        Hypergraph::new(edges)
    }
}

/// Hypergraph closed under taking nonempty subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex(Hypergraph);

impl SimplicialComplex {
    /// Wraps a hypergraph that is already subset-closed; `None` otherwise.
    pub fn from_hypergraph(h: Hypergraph) -> Option<Self> {
        if h.is_simplicial_complex() {
            Some(SimplicialComplex(h))
        } else {
            None
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn simplices_of_dimension(&self, n: usize) -> Vec<Hyperedge> {
        self.0.edges_of_dimension(n)
    }

    pub fn top_dimension(&self) -> Option<usize> {
        self.0.top_dimension()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.0.contains(e)
    }
}

/// Directed graph on labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Digraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Digraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Self {
        let mut g = Digraph {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        };
        for (a, b) in &g.edges.clone() {
            g.vertices.insert(a.clone());
            g.vertices.insert(b.clone());
        }
        g
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    fn successors(&self, v: &Vertex) -> Vec<&Vertex> {
        self.edges
            .iter()
            .filter(|(a, _)| a == v)
            .map(|(_, b)| b)
            .collect()
    }

    /// A directed cycle if one exists, as the vertex sequence
    /// `v0 v1 ... v0`. Self-loops count.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark: BTreeMap<&Vertex, Mark> =
            self.vertices.iter().map(|v| (v, Mark::New)).collect();
        // Iterative DFS keeping the active path for the witness.
        for start in &self.vertices {
            if mark[start] != Mark::New {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            let mut path = vec![start];
            mark.insert(start, Mark::Active);
            while let Some((v, i)) = stack.pop() {
                let succ = self.successors(v);
                if i < succ.len() {
                    stack.push((v, i + 1));
                    let next = succ[i];
                    match mark[next] {
                        Mark::Active => {
                            let pos = path.iter().position(|&p| p == next).unwrap();
                            let mut cycle: Vec<Vertex> =
                                path[pos..].iter().map(|&p| p.clone()).collect();
                            cycle.push(next.clone());
                            return Some(cycle);
                        }
                        Mark::New => {
                            mark.insert(next, Mark::Active);
                            path.push(next);
                            stack.push((next, 0));
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark.insert(v, Mark::Done);
                    path.pop();
                }
            }
        }
        None
    }

    /// All allowed elementary paths with at most `max_edges` edges, as
    /// vertex sequences.
    pub fn elementary_paths(&self, max_edges: usize) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        for start in &self.vertices {
            let mut stack = vec![vec![start.clone()]];
            while let Some(path) = stack.pop() {
                out.push(path.clone());
                if path.len() > max_edges {
                    continue;
                }
                let last = path.last().unwrap();
                for next in self.successors(last) {
                    if !path.contains(next) {
                        let mut p = path.clone();
                        p.push(next.clone());
                        stack.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Digraph with positive integer edge weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightedDigraph {
    pub digraph: Digraph,
    pub weights: BTreeMap<(Vertex, Vertex), usize>,
}

/// Path hypergraph of a digraph: vertex sets of allowed elementary
/// paths with at most `max_len` edges. Requires the digraph to have no
/// closed allowed path; rejection carries a witness cycle.
pub fn digraph_to_hypergraph(
    g: &Digraph,
    max_len: usize,
) -> Result<Hypergraph, HypergraphError> {
    if let Some(cycle) = g.find_cycle() {
        return Err(HypergraphError::CyclicDigraph { cycle });
    }
    let paths = g.elementary_paths(max_len);
    let edges: Result<Vec<Hyperedge>, _> = paths
        .iter()
        .map(|p| Hyperedge::new(p.iter().cloned()))
        .collect();
    Ok(Hypergraph::new(edges?))
}

/// Face digraph of the closure: one digraph vertex per simplex of the
/// closure, an edge from each simplex to each of its codimension-1
/// faces, plus the subset of digraph vertices that are hyperedges of
/// `h` itself.
pub fn face_digraph(h: &Hypergraph) -> (Digraph, BTreeSet<Vertex>) {
    let closure = h.closure();
    let label = |e: &Hyperedge| {
        Vertex::new(
            e.vertices()
                .iter()
                .map(Vertex::label)
                .collect::<Vec<_>>()
                .join(","),
        )
    };
    let vertices: Vec<Vertex> = closure.hypergraph().edges().map(label).collect();
    let mut edges = Vec::new();
    for sigma in closure.hypergraph().edges() {
        for tau in sigma.faces() {
            edges.push((label(sigma), label(&tau)));
        }
    }
    let marked: BTreeSet<Vertex> = h.edges().map(label).collect();
    (Digraph::new(vertices, edges), marked)
}

/// Inclusion digraph: one vertex per hyperedge, an edge from each
/// hyperedge to each strictly smaller one with weight equal to the
/// dimension gap.
pub fn inclusion_digraph(h: &Hypergraph) -> WeightedDigraph {
    let label = |e: &Hyperedge| {
        Vertex::new(
            e.vertices()
                .iter()
                .map(Vertex::label)
                .collect::<Vec<_>>()
                .join(","),
        )
    };
    let vertices: Vec<Vertex> = h.edges().map(label).collect();
    let mut edges = Vec::new();
    let mut weights = BTreeMap::new();
    for sigma in h.edges() {
        for tau in h.edges() {
            if tau != sigma && tau.is_subset_of(sigma) {
                let key = (label(sigma), label(tau));
                weights.insert(key.clone(), sigma.dimension() - tau.dimension());
                edges.push(key);
            }
        }
    }
    WeightedDigraph {
        digraph: Digraph::new(vertices, edges),
        weights,
    }
}

/// Parses the hypergraph text format: one hyperedge per line,
/// whitespace-separated vertex labels, `#` starts a comment.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let edge = Hyperedge::new(line.split_whitespace().map(Vertex::new)).map_err(|_| {
            HypergraphError::Parse {
                line: lineno + 1,
                message: "empty hyperedge".into(),
            }
        })?;
        edges.push(edge);
    }
    Ok(Hypergraph::new(edges))
}

/// Canonical text form: sorted hyperedges, one per line.
pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

/// Parses the digraph text format: one `a -> b` per line, `#` comments.
/// A line with a single token declares an isolated vertex.
pub fn parse_digraph(text: &str) -> Result<Digraph, HypergraphError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((a, b)) = line.split_once("->") {
            let (a, b) = (a.trim(), b.trim());
            if a.is_empty() || b.is_empty() || a.split_whitespace().count() != 1 {
                return Err(HypergraphError::Parse {
                    line: lineno + 1,
                    message: format!("expected `a -> b`, got `{line}`"),
                });
            }
            edges.push((Vertex::new(a), Vertex::new(b)));
        } else if line.split_whitespace().count() == 1 {
            vertices.push(Vertex::new(line));
        } else {
            return Err(HypergraphError::Parse {
                line: lineno + 1,
                message: format!("expected `a -> b` or a vertex, got `{line}`"),
            });
        }
    }
    Ok(Digraph::new(vertices, edges))
}

/// Canonical text form: isolated vertices first, then sorted edges.
pub fn format_digraph(g: &Digraph) -> String {
    let mut out = String::new();
    let with_edges: BTreeSet<&Vertex> = g
        .edges()
        .iter()
        .flat_map(|(a, b)| [a, b])
        .collect();
    for v in g.vertices() {
        if !with_edges.contains(v) {
            out.push_str(v.label());
            out.push('\n');
        }
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} -> {b}\n"));
    }
    out
}
