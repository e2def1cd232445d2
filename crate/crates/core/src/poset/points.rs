//! Order-polytope points: for a finite tube, a sum-zero vector normalized
//! so the cover increments sum to one; for the whole poset, an angle vector
//! with theta_1 = 0 and pi-periodic extension. The tubing partition of a
//! point collects its flat blocks, split into Hasse components.

use super::tubes::Tube;
use super::AffinePoset;
use crate::error::PosetError;
use crate::num::Coeff;
use std::collections::BTreeSet;

/// Flatness tolerance for float data; exact data compares exactly.
pub fn flat_eps<S: Coeff>() -> f64 {
    if S::EXACT { 0.0 } else { 1e-9 }
}

fn close<S: Coeff>(a: &S, b: &S) -> bool {
    if S::EXACT {
        a == b
    } else {
        (a.to_f64() - b.to_f64()).abs() <= flat_eps::<S>()
    }
}

/// theta extended to the integers: theta_{p+n} = theta_p + pi. Exact
/// backends carry the period offset separately, so the extension is only
/// meaningful through [`ExtendedTheta::gap`] and equality of same-period
/// values; float backends get genuine angle values.
pub struct ExtendedTheta<'a, S: Coeff> {
    pub n: usize,
    pub theta: &'a [S],
}

impl<'a, S: Coeff> ExtendedTheta<'a, S> {
    pub fn period_and_residue(&self, p: i64) -> (i64, usize) {
        let n = self.n as i64;
        let r = (p - 1).rem_euclid(n);
        ((p - 1 - r) / n, r as usize)
    }

    /// theta~_q - theta~_p as (rational part, multiple of pi).
    pub fn gap(&self, p: i64, q: i64) -> (S, i64) {
        let (dp, rp) = self.period_and_residue(p);
        let (dq, rq) = self.period_and_residue(q);
        (self.theta[rq].clone() - self.theta[rp].clone(), dq - dp)
    }

    /// Equality of extended values. For exact data a rational base never
    /// matches a pi offset, so only same-period values can coincide; floats
    /// compare the genuine angles (theta_p = 0 against theta_q = pi lands
    /// one period over).
    pub fn values_equal(&self, p: i64, q: i64) -> bool {
        let (diff, periods) = self.gap(p, q);
        if S::EXACT {
            periods == 0 && diff.is_zero()
        } else {
            (diff.to_f64() + periods as f64 * std::f64::consts::PI).abs() <= flat_eps::<S>()
        }
    }

    /// Strictly less in the extended order; ties broken by period.
    pub fn value_lt(&self, p: i64, q: i64) -> bool {
        let (diff, periods) = self.gap(p, q);
        if S::EXACT {
            if periods != 0 {
                // diff + periods*pi: sign decided by periods unless diff
                // overwhelms; base values lie within one period on valid
                // points, so the period decides.
                return periods > 0;
            }
            S::zero() < diff
        } else {
            diff.to_f64() + periods as f64 * std::f64::consts::PI > flat_eps::<S>()
        }
    }
}

/// Validates the whole-tube datum: theta_1 = 0 and monotone along all
/// generating relations (non-strict, closure membership).
pub fn validate_whole_point<S: Coeff>(
    poset: &AffinePoset,
    theta: &[S],
) -> Result<(), PosetError> {
    if theta.len() != poset.n() {
        return Err(PosetError::BadPoint(format!(
            "expected {} coordinates, got {}",
            poset.n(),
            theta.len()
        )));
    }
    if !close(&theta[0], &S::zero()) {
        return Err(PosetError::BadPoint("theta_1 must be zero".into()));
    }
    let ext = ExtendedTheta { n: poset.n(), theta };
    for &(a, b) in poset.generators() {
        let (diff, periods) = ext.gap(a, b);
        let bad = if S::EXACT {
            periods < 0 || (periods == 0 && diff < S::zero())
        } else {
            diff.to_f64() + periods as f64 * std::f64::consts::PI < -flat_eps::<S>()
        };
        if bad {
            return Err(PosetError::BadPoint(format!("monotonicity fails along ({a}, {b})")));
        }
    }
    Ok(())
}

/// Validates a finite-tube datum: coordinates aligned with the tube's
/// elements, sum zero, cover increments summing to one, monotone.
pub fn validate_finite_point<S: Coeff>(
    poset: &AffinePoset,
    tube: &Tube,
    x: &[S],
) -> Result<(), PosetError> {
    if x.len() != tube.len() {
        return Err(PosetError::BadPoint("coordinate count mismatch".into()));
    }
    let sum = x.iter().fold(S::zero(), |a, b| a + b.clone());
    if !close(&sum, &S::zero()) {
        return Err(PosetError::BadPoint("coordinates must sum to zero".into()));
    }
    let alpha = alpha_value(poset, tube.elems(), x, tube.elems());
    if !close(&alpha, &S::one()) {
        return Err(PosetError::BadPoint("cover increments must sum to one".into()));
    }
    let idx = |e: i64| tube.elems().iter().position(|&y| y == e).unwrap();
    for (i, &p) in tube.elems().iter().enumerate() {
        for &q in &tube.elems()[i + 1..] {
            if poset.less(p, q) {
                let (a, b) = (&x[idx(p)], &x[idx(q)]);
                if !close(a, b) && b < a {
                    return Err(PosetError::BadPoint(format!(
                        "monotonicity fails at ({p}, {q})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Sum of x_q - x_p over covering relations (p, q) of the poset with both
/// ends inside `subset`, where coordinates are aligned with `support`.
pub fn alpha_value<S: Coeff>(
    poset: &AffinePoset,
    subset: &[i64],
    x: &[S],
    support: &[i64],
) -> S {
    let idx = |e: i64| support.iter().position(|&y| y == e).expect("element in support");
    let mut total = S::zero();
    for (a, b) in poset.covers_within(subset) {
        total = total + x[idx(b)].clone() - x[idx(a)].clone();
    }
    total
}

/// Tubing partition of a finite-tube point: maximal flat runs split into
/// Hasse components, returned as sub-tubes (instances inside the tube).
pub fn point_partition_finite<S: Coeff>(
    poset: &AffinePoset,
    tube: &Tube,
    x: &[S],
) -> Vec<Vec<i64>> {
    let elems = tube.elems();
    let mut groups: Vec<Vec<i64>> = Vec::new();
    let mut used = vec![false; elems.len()];
    for i in 0..elems.len() {
        if used[i] {
            continue;
        }
        let mut flat: Vec<i64> = vec![elems[i]];
        used[i] = true;
        for j in 0..elems.len() {
            if !used[j] && close(&x[i], &x[j]) {
                flat.push(elems[j]);
                used[j] = true;
            }
        }
        flat.sort_unstable();
        groups.extend(hasse_components(poset, &flat));
    }
    groups.sort();
    groups
}

/// Tubing partition of a whole-tube point: flat blocks of the pi-periodic
/// extension over a two-period window, reduced to one representative per
/// class.
pub fn point_partition_whole<S: Coeff>(poset: &AffinePoset, theta: &[S]) -> Vec<Vec<i64>> {
    let n = poset.n() as i64;
    let ext = ExtendedTheta { n: poset.n(), theta };
    // Equal extended values lie within one period of each other, so a block
    // whose minimum is in [1, n] fits inside [1 - 2n, 3n] entirely; clipped
    // copies from other shifts canonicalize to strict subsets and are
    // dropped below.
    let window: Vec<i64> = (1 - 2 * n..=3 * n).collect();
    let mut used: BTreeSet<i64> = BTreeSet::new();
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    for &p in &window {
        if used.contains(&p) {
            continue;
        }
        let flat: Vec<i64> =
            window.iter().copied().filter(|&q| ext.values_equal(p, q)).collect();
        for comp in hasse_components(poset, &flat) {
            for &x in &comp {
                used.insert(x);
            }
            blocks.push(comp);
        }
    }
    let mut canon: BTreeSet<Vec<i64>> = BTreeSet::new();
    for b in blocks {
        let shift = (b[0] - 1).div_euclid(n);
        let c: Vec<i64> = b.iter().map(|x| x - shift * n).collect();
        canon.insert(c);
    }
    // Drop clipped copies: subsets of a larger block up to an integer shift
    // of the period.
    let list: Vec<Vec<i64>> = canon.iter().cloned().collect();
    list.iter()
        .filter(|b| {
            !list.iter().any(|other| {
                other.len() > b.len()
                    && (-2..=2i64).any(|d| {
                        b.iter().all(|x| other.contains(&(x + d * n)))
                    })
            })
        })
        .cloned()
        .collect()
}

fn hasse_components(poset: &AffinePoset, elems: &[i64]) -> Vec<Vec<i64>> {
    let mut remaining: BTreeSet<i64> = elems.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let mut comp = vec![seed];
        remaining.remove(&seed);
        let mut frontier = vec![seed];
        while let Some(x) = frontier.pop() {
            let nearby: Vec<i64> = remaining
                .iter()
                .copied()
                .filter(|&y| poset.is_cover(x.min(y), x.max(y)))
                .collect();
            for y in nearby {
                remaining.remove(&y);
                comp.push(y);
                frontier.push(y);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_partition_of_strict_point() {
        let p = AffinePoset::total_order(4);
        let theta = vec![0.0, 0.3, 0.6, 0.9];
        validate_whole_point(&p, &theta).unwrap();
        let blocks = point_partition_whole(&p, &theta);
        assert!(blocks.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn whole_partition_with_collisions() {
        let p = AffinePoset::total_order(4);
        let theta = vec![0.0, 0.0, 0.5, 0.5];
        let blocks = point_partition_whole(&p, &theta);
        let non_singleton: Vec<_> = blocks.iter().filter(|b| b.len() > 1).collect();
        assert_eq!(non_singleton.len(), 2);
        assert!(non_singleton.contains(&&vec![1, 2]));
        assert!(non_singleton.contains(&&vec![3, 4]));
    }

    #[test]
    fn example_vertex_block_crosses_period() {
        // The two-triangle poset vertex theta = (0, 0, 0, 0, pi): the block
        // is the maximal proper tube {0, 1, 2, 3, 4}.
        let p = super::super::tests::two_triangles_poset();
        let theta = vec![0.0, 0.0, 0.0, 0.0, std::f64::consts::PI];
        validate_whole_point(&p, &theta).unwrap();
        let blocks = point_partition_whole(&p, &theta);
        let big: Vec<_> = blocks.iter().filter(|b| b.len() == 5).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0], &vec![5, 6, 7, 8, 9]); // canonical shift of {0..4}
    }
}
