//! Seeded random hypergraphs and evaluation weights for property
//! suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::hypergraph::{Hyperedge, Hypergraph, Vertex};
use crate::scalar::{rat, rat_int, Rat};
use crate::weight::Weight;

use std::collections::BTreeMap;

/// Parameters of the random hypergraph distribution: every nonempty
/// subset of `vertices` labelled vertices with at most
/// `max_dimension + 1` elements is included independently with
/// probability `edge_probability`.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorParams {
    pub vertices: usize,
    pub max_dimension: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "max_dimension": self.max_dimension,
            "edge_probability": self.edge_probability,
            "seed": self.seed,
        })
    }
}

fn subset_edge(mask: usize, labels: &[Vertex]) -> Hyperedge {
    let vs: Vec<Vertex> = labels
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask & (1 << i) != 0)
        .map(|(_, v)| v.clone())
        .collect();
    Hyperedge::new(vs).expect("mask is nonzero")
}

/// Draws a nonempty hypergraph; an empty draw falls back to a single
/// random vertex so downstream analyses always have content.
pub fn random_hypergraph(params: &GeneratorParams) -> Hypergraph {
    assert!(params.vertices > 0 && params.vertices <= 16);
    assert!((0.0..=1.0).contains(&params.edge_probability));
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let labels: Vec<Vertex> = (0..params.vertices)
        .map(|i| Vertex::new(format!("v{i}")))
        .collect();
    let mut edges = Vec::new();
    for mask in 1..(1usize << params.vertices) {
        if mask.count_ones() as usize > params.max_dimension + 1 {
            continue;
        }
        if rng.gen_bool(params.edge_probability) {
            edges.push(subset_edge(mask, labels.as_slice()));
        }
    }
    if edges.is_empty() {
        let i = rng.gen_range(0..params.vertices);
        edges.push(subset_edge(1 << i, labels.as_slice()));
    }
    Hypergraph::new(edges)
}

/// A random evaluation weight covering the whole closure of `h`:
/// positive rational values with numerators and denominators in
/// 1..=9, and a positive integer constant in 1..=3.
pub fn random_evaluation_weight(h: &Hypergraph, seed: u64) -> Weight {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = BTreeMap::new();
    for edge in h.closure().hypergraph().edges() {
        let num = rng.gen_range(1..=9);
        let den = rng.gen_range(1..=9);
        w.insert(edge.clone(), rat(num, den));
    }
    let c: Rat = rat_int(rng.gen_range(1..=3));
    Weight::Evaluation { w, c }
}
