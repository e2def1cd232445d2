//! Scalar backends for measurements: exact arbitrary-precision rationals
//! where the arithmetic is polynomial, 64-bit floats where it is
//! trigonometric. Projective comparison lives here too.

use num::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar used by the move-invariance and enumeration paths.
pub type Rat = BigRational;

/// Common interface for the two numeric backends.
///
/// `sin_of` is only available on the float backend; exact points that would
/// require evaluating a sine are rejected by the callers.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    const EXACT: bool;

    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Injects a float; `None` for exact scalars.
    fn from_f64(x: f64) -> Option<Self>;
    fn abs_val(&self) -> Self;
    /// sin(x) for the float backend; `None` for exact scalars.
    fn sin_of(&self) -> Option<Self>;
}

impl Coeff for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn sin_of(&self) -> Option<Self> {
        Some(self.sin())
    }
}

impl Coeff for Rat {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rat::from_integer(v.into())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat::new(num.into(), den.into())
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn from_f64(_x: f64) -> Option<Self> {
        None
    }
    fn abs_val(&self) -> Self {
        Signed::abs(self)
    }
    fn sin_of(&self) -> Option<Self> {
        None
    }
}

/// Parses a weight literal: either a decimal float or an exact `p/q` string.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: num::BigInt = num.trim().parse().ok()?;
        let d: num::BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: num::BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Formats a rational as `p/q` (or `p` when the denominator is one).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floats serialized with 17 significant digits so reports round-trip.
pub fn format_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Exact projective equality of two coordinate vectors: cross-multiplication
/// against the first coordinate that is nonzero in either vector.
pub fn projectively_equal_exact(a: &[Rat], b: &[Rat]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let pivot = match (0..a.len()).find(|&i| !a[i].is_zero() || !b[i].is_zero()) {
        Some(i) => i,
        None => return true,
    };
    if a[pivot].is_zero() || b[pivot].is_zero() {
        return false;
    }
    for i in 0..a.len() {
        if a[i].clone() * b[pivot].clone() != b[i].clone() * a[pivot].clone() {
            return false;
        }
    }
    true
}

/// Normalizes a float vector by its maximum-absolute coordinate, fixing the
/// sign so that coordinate becomes +1.
pub fn normalize_max_abs(v: &[f64]) -> Vec<f64> {
    let mut best = 0usize;
    for i in 1..v.len() {
        if v[i].abs() > v[best].abs() {
            best = i;
        }
    }
    let m = v[best];
    assert!(m != 0.0, "cannot normalize the zero vector");
    v.iter().map(|x| x / m).collect()
}

/// Projective distance between float vectors: Chebyshev distance after
/// max-abs normalization.
pub fn projective_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    let na = normalize_max_abs(a);
    let nb = normalize_max_abs(b);
    na.iter()
        .zip(nb.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_parsing_roundtrip() {
        let r = parse_rat("3/7").unwrap();
        assert_eq!(format_rat(&r), "3/7");
        assert_eq!(parse_rat("5").unwrap(), Rat::from_integer(5.into()));
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn exact_projective_equality() {
        let a = vec![Rat::from_ratio(1, 2), Rat::from_ratio(1, 3)];
        let b = vec![Rat::from_int(3), Rat::from_int(2)];
        assert!(projectively_equal_exact(&a, &b));
        let c = vec![Rat::from_int(3), Rat::from_int(1)];
        assert!(!projectively_equal_exact(&a, &c));
    }

    #[test]
    fn float_projective_distance() {
        let a = [2.0, 4.0, 6.0];
        let b = [1.0, 2.0, 3.0];
        assert!(projective_distance(&a, &b) < 1e-15);
        let c = [1.0, 2.0, 3.1];
        assert!(projective_distance(&a, &c) > 1e-3);
    }
}
