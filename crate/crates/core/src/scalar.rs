//! Scalar backends for the linear algebra layer.
//!
//! Two backends realize the real field: arbitrary-precision rationals
//! (`Rat`, the certified backend used for ranks, kernels and subspace
//! calculus) and `f64` (used for eigenvalue computations and as a
//! cross-checking pipeline). A computation never mixes backends: all
//! matrix and subspace types are generic over one `Scalar`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator by `num_rational`.
pub type Rat = num_rational::BigRational;

/// Float tolerances, overridable through the `HODGEHYPER_TOL` env var
/// (`"zero"` or `"zero,bin"`). Defaults: zero threshold 1e-9,
/// eigenvalue binning width 1e-7.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// A float magnitude below `zero * max(1, scale)` counts as zero.
    pub zero: f64,
    /// Eigenvalues within `bin * max(1, |lambda_max|)` merge into one bin.
    pub bin: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { zero: 1e-9, bin: 1e-7 }
    }
}

static TOLERANCES: Lazy<Tolerances> = Lazy::new(|| {
    let mut t = Tolerances::default();
    if let Ok(s) = std::env::var("HODGEHYPER_TOL") {
        let mut parts = s.split(',');
        if let Some(z) = parts.next().and_then(|v| v.trim().parse::<f64>().ok()) {
            t.zero = z;
        }
        if let Some(b) = parts.next().and_then(|v| v.trim().parse::<f64>().ok()) {
            t.bin = b;
        }
    }
    t
});

/// Process-wide tolerances (read once from the environment).
pub fn tolerances() -> Tolerances {
    *TOLERANCES
}

/// Field scalar used by [`crate::matrix::Matrix`] and
/// [`crate::subspace::Subspace`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True when this backend is exact (no thresholds anywhere).
    const EXACT: bool;

    fn from_rat(r: &Rat) -> Self;

    fn from_i64(v: i64) -> Self;

    /// Magnitude used for pivot selection.
    fn pivot_magnitude(&self) -> f64;

    /// Whether the value is treated as zero at the given scale
    /// (largest magnitude seen in the matrix being eliminated).
    fn is_negligible(&self, scale: f64) -> bool;

    fn to_f64(&self) -> f64;
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn from_i64(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn pivot_magnitude(&self) -> f64 {
        // Only used to order pivot candidates; any positive value works
        // for a nonzero rational.
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rat(r: &Rat) -> Self {
        Scalar::to_f64(r)
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn pivot_magnitude(&self) -> f64 {
        self.abs()
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= tolerances().zero * scale.max(1.0)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Formats a rational as `"p/q"` (or `"p"` when the denominator is 1).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}
