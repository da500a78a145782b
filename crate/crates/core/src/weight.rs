//! Weight functions twisting the boundary operator: the coefficient
//! `phi(sigma, tau)` attached to each codimension-1 face pair, the
//! compatibility condition making the twisted boundary square to zero,
//! and the JSON exchange format.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, SimplicialComplex};
use crate::scalar::{format_rat, parse_rat, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("missing table entry for face pair `{0}`")]
    MissingPair(String),
    #[error("missing evaluation value for simplex `{0}`")]
    MissingValue(String),
    #[error("value for `{key}` must be a positive rational, got `{value}`")]
    NonPositive { key: String, value: String },
    #[error("invalid weight JSON at `{key}`: {message}")]
    Json { key: String, message: String },
}

/// A violation of the compatibility condition: the simplex and the
/// face-index pair `j < i` where the two deletion orders disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightViolation {
    pub simplex: Hyperedge,
    pub i: usize,
    pub j: usize,
}

/// Coefficient assignment on codimension-1 face pairs of a simplicial
/// complex. `Trivial` is the classical boundary, `Zero` kills it,
/// `Evaluation` is `phi(sigma, tau) = C * w(sigma) / w(tau)` for a
/// positive simplex evaluation `w`, and `Table` stores explicit values.
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Trivial,
    Zero,
    Evaluation { w: BTreeMap<Hyperedge, Rat>, c: Rat },
    Table { values: BTreeMap<(Hyperedge, Hyperedge), Rat> },
}

fn pair_key(sigma: &Hyperedge, tau: &Hyperedge) -> String {
    format!("{sigma}|{tau}")
}

impl Weight {
    /// `phi(sigma, tau)` for a codimension-1 face `tau` of `sigma`.
    pub fn phi(&self, sigma: &Hyperedge, tau: &Hyperedge) -> Result<Rat, WeightError> {
        match self {
            Weight::Trivial => Ok(Rat::one()),
            Weight::Zero => Ok(Rat::zero()),
            Weight::Evaluation { w, c } => {
                let ws = w
                    .get(sigma)
                    .ok_or_else(|| WeightError::MissingValue(sigma.to_string()))?;
                let wt = w
                    .get(tau)
                    .ok_or_else(|| WeightError::MissingValue(tau.to_string()))?;
                Ok(c.clone() * ws / wt)
            }
            Weight::Table { values } => values
                .get(&(sigma.clone(), tau.clone()))
                .cloned()
                .ok_or_else(|| WeightError::MissingPair(pair_key(sigma, tau))),
        }
    }

    /// Checks the compatibility condition on every simplex of
    /// dimension >= 2: deleting vertex `i` then `j` must pick up the
    /// same total coefficient as deleting `j` then `i`, for `j < i`.
    /// Returns the first violation, or `None` when the weight is valid.
    /// Trivial, Zero and Evaluation weights satisfy the condition
    /// identically, but Evaluation coverage and positivity are checked.
    pub fn first_violation(
        &self,
        k: &SimplicialComplex,
    ) -> Result<Option<WeightViolation>, WeightError> {
        match self {
            Weight::Trivial | Weight::Zero => Ok(None),
            Weight::Evaluation { w, c } => {
                for sigma in k.hypergraph().edges() {
                    match w.get(sigma) {
                        None => return Err(WeightError::MissingValue(sigma.to_string())),
                        Some(v) if *v <= Rat::zero() => {
                            return Err(WeightError::NonPositive {
                                key: sigma.to_string(),
                                value: format_rat(v),
                            })
                        }
                        _ => {}
                    }
                }
                if *c <= Rat::zero() {
                    return Err(WeightError::NonPositive {
                        key: "C".into(),
                        value: format_rat(c),
                    });
                }
                Ok(None)
            }
            Weight::Table { .. } => {
                for sigma in k.hypergraph().edges() {
                    if sigma.dimension() < 2 {
                        continue;
                    }
                    let m = sigma.vertices().len();
                    for i in 0..m {
                        for j in 0..i {
                            let di = sigma.face(i).unwrap();
                            let dj = sigma.face(j).unwrap();
                            // d_j d_i sigma: drop both vertices.
                            let dij = di.face(j).unwrap();
                            let lhs = self.phi(&di, &dij)? * self.phi(sigma, &di)?;
                            let rhs = self.phi(&dj, &dij)? * self.phi(sigma, &dj)?;
                            if lhs != rhs {
                                return Ok(Some(WeightViolation {
                                    simplex: sigma.clone(),
                                    i,
                                    j,
                                }));
                            }
                        }
                    }
                }
                Ok(None)
            }
        }
    }

    pub fn is_valid(&self, k: &SimplicialComplex) -> Result<bool, WeightError> {
        Ok(self.first_violation(k)?.is_none())
    }

    /// JSON form: `{"kind": ..., "C": "p/q", "values": {...}}`.
    /// Evaluation keys are sorted-vertex simplex strings; table keys
    /// are `"sigma|tau"` pairs.
    pub fn to_json(&self) -> Value {
        match self {
            Weight::Trivial => json!({"kind": "trivial"}),
            Weight::Zero => json!({"kind": "zero"}),
            Weight::Evaluation { w, c } => {
                let mut values = Map::new();
                for (e, v) in w {
                    values.insert(e.to_string(), Value::String(format_rat(v)));
                }
                json!({"kind": "evaluation", "C": format_rat(c), "values": values})
            }
            Weight::Table { values } => {
                let mut map = Map::new();
                for ((s, t), v) in values {
                    map.insert(pair_key(s, t), Value::String(format_rat(v)));
                }
                json!({"kind": "table", "values": map})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Weight, WeightError> {
        let bad = |key: &str, message: &str| WeightError::Json {
            key: key.into(),
            message: message.into(),
        };
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("kind", "expected a string"))?;
        match kind {
            "trivial" => Ok(Weight::Trivial),
            "zero" => Ok(Weight::Zero),
            "evaluation" => {
                let c = match v.get("C") {
                    None => Rat::one(),
                    Some(c) => parse_value_rat(c, "C")?,
                };
                let values = v
                    .get("values")
                    .and_then(Value::as_object)
                    .ok_or_else(|| bad("values", "expected an object"))?;
                let mut w = BTreeMap::new();
                for (key, val) in values {
                    w.insert(parse_simplex_key(key)?, parse_value_rat(val, key)?);
                }
                Ok(Weight::Evaluation { w, c })
            }
            "table" => {
                let values = v
                    .get("values")
                    .and_then(Value::as_object)
                    .ok_or_else(|| bad("values", "expected an object"))?;
                let mut map = BTreeMap::new();
                for (key, val) in values {
                    let (s, t) = key
                        .split_once('|')
                        .ok_or_else(|| bad(key, "expected `sigma|tau`"))?;
                    map.insert(
                        (parse_simplex_key(s)?, parse_simplex_key(t)?),
                        parse_value_rat(val, key)?,
                    );
                }
                Ok(Weight::Table { values: map })
            }
            other => Err(bad("kind", &format!("unknown kind `{other}`"))),
        }
    }
}

fn parse_simplex_key(key: &str) -> Result<Hyperedge, WeightError> {
    Hyperedge::new(
        key.split_whitespace()
            .map(crate::hypergraph::Vertex::new),
    )
    .map_err(|_| WeightError::Json {
        key: key.into(),
        message: "empty simplex key".into(),
    })
}

fn parse_value_rat(v: &Value, key: &str) -> Result<Rat, WeightError> {
    let s = v.as_str().ok_or_else(|| WeightError::Json {
        key: key.into(),
        message: "expected a rational string".into(),
    })?;
    parse_rat(s).ok_or_else(|| WeightError::Json {
        key: key.into(),
        message: format!("cannot parse rational `{s}`"),
    })
}
