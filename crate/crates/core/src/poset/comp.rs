//! Points of the compactified open order polytope: a proper tubing together
//! with one order-polytope datum per tube class (plus the whole-poset
//! datum), subject to the recursive stratum condition. The zeta maps read
//! off nested distance ratios along circular chains.

use super::points::{
    alpha_value, point_partition_finite, point_partition_whole, validate_finite_point,
    validate_whole_point, ExtendedTheta,
};
use super::tubes::Tube;
use super::tubing::Tubing;
use super::AffinePoset;
use crate::error::PosetError;
use crate::num::Coeff;
use rand::Rng;
use std::collections::BTreeMap;

pub type TubingData<S> = BTreeMap<Tube, Vec<S>>;

#[derive(Debug, Clone)]
pub struct CompPoint<S: Coeff> {
    poset: AffinePoset,
    tubing: Tubing,
    whole: Vec<S>,
    data: TubingData<S>,
}

impl<S: Coeff> CompPoint<S> {
    /// Builds a compactification point and validates the recursive stratum
    /// condition: the flat blocks of each member's datum are exactly the
    /// maximal members properly below it.
    pub fn new(
        poset: AffinePoset,
        tubing: Tubing,
        whole: Vec<S>,
        data: TubingData<S>,
    ) -> Result<Self, PosetError> {
        validate_whole_point(&poset, &whole)?;
        for t in &tubing.tubes {
            if !data.contains_key(t) {
                return Err(PosetError::MissingData { tube: t.key() });
            }
        }
        for t in data.keys() {
            if !tubing.tubes.contains(t) {
                return Err(PosetError::BadPoint(format!(
                    "datum supplied for tube {} outside the tubing",
                    t.key()
                )));
            }
        }
        for (t, x) in &data {
            validate_finite_point(&poset, t, x)?;
        }
        let point = CompPoint { poset, tubing, whole, data };
        point.check_stratum_condition()?;
        Ok(point)
    }

    /// An interior point: empty tubing, strictly admissible angles.
    pub fn interior(poset: AffinePoset, theta: Vec<S>) -> Result<Self, PosetError> {
        Self::new(poset, Tubing::empty(), theta, BTreeMap::new())
    }

    pub fn poset(&self) -> &AffinePoset {
        &self.poset
    }

    pub fn tubing(&self) -> &Tubing {
        &self.tubing
    }

    pub fn whole(&self) -> &[S] {
        &self.whole
    }

    pub fn datum(&self, t: &Tube) -> Option<&[S]> {
        self.data.get(t).map(|v| v.as_slice())
    }

    fn check_stratum_condition(&self) -> Result<(), PosetError> {
        // Children of the whole poset: maximal tubing classes.
        let maximal: Vec<&Tube> = self
            .tubing
            .tubes
            .iter()
            .filter(|t| {
                !self.tubing.tubes.iter().any(|bigger| {
                    bigger.len() > t.len() && instance_inside(&self.poset, t, bigger).is_some()
                })
            })
            .collect();
        let blocks = point_partition_whole(&self.poset, &self.whole);
        let nonsingleton: Vec<&Vec<i64>> = blocks.iter().filter(|b| b.len() > 1).collect();
        let want: Vec<Vec<i64>> = maximal.iter().map(|t| t.elems().to_vec()).collect();
        let mut got: Vec<Vec<i64>> = nonsingleton.iter().map(|b| (*b).clone()).collect();
        let mut want_sorted = want.clone();
        want_sorted.sort();
        got.sort();
        if got != want_sorted {
            return Err(PosetError::StratumMismatch { tube: "whole".into() });
        }
        // Children of each tube class.
        for (t, x) in &self.data {
            let children: Vec<Vec<i64>> = self
                .tubing
                .tubes
                .iter()
                .filter(|c| c.len() < t.len())
                .filter_map(|c| instance_inside(&self.poset, c, t))
                .filter(|inst| {
                    // keep only maximal among contained instances
                    !self
                        .tubing
                        .tubes
                        .iter()
                        .filter(|c2| c2.len() < t.len())
                        .filter_map(|c2| instance_inside(&self.poset, c2, t))
                        .any(|other| {
                            other.len() > inst.len() && inst.iter().all(|e| other.contains(e))
                        })
                })
                .collect();
            let blocks = point_partition_finite(&self.poset, t, x);
            let mut got: Vec<Vec<i64>> =
                blocks.into_iter().filter(|b| b.len() > 1).collect();
            let mut want: Vec<Vec<i64>> = children;
            want.sort();
            want.dedup();
            got.sort();
            if got != want {
                return Err(PosetError::StratumMismatch { tube: t.key() });
            }
        }
        Ok(())
    }

    /// The members of the augmented tubing that can carry chain data,
    /// smallest first, ending with the whole poset.
    fn members_by_size(&self) -> Vec<&Tube> {
        let mut v: Vec<&Tube> = self.tubing.tubes.iter().collect();
        v.sort_by_key(|t| t.len());
        v
    }

    /// The zeta map along a circular chain: ratios of sines of angle gaps
    /// when the chain only fits in the whole poset, nested difference
    /// ratios inside the minimal tube containing its residues otherwise.
    /// Entry i is the weight of the gap (chain[i] -> chain[i+1]), cyclically.
    pub fn zeta(&self, chain: &[i64]) -> Result<Vec<S>, PosetError> {
        let r = chain.len();
        if r < 2 || !self.poset.is_circular_chain(chain) {
            return Err(PosetError::NotAChain);
        }
        let n = self.poset.n();
        for tube in self.members_by_size() {
            if let Some((s, lifted)) = fit_chain_in_tube(tube, chain, n) {
                let x = &self.data[tube];
                let idx = |e: i64| tube.elems().iter().position(|&y| y == e).unwrap();
                let mut computed = Vec::with_capacity(r);
                for j in 0..r - 1 {
                    computed.push(x[idx(lifted[j + 1])].clone() - x[idx(lifted[j])].clone());
                }
                computed.push(x[idx(lifted[r - 1])].clone() - x[idx(lifted[0])].clone());
                let mut out = vec![S::zero(); r];
                for (j, val) in computed.into_iter().enumerate() {
                    out[(s + j) % r] = val;
                }
                ensure_nonzero(&out)?;
                return Ok(out);
            }
        }
        // Whole-poset case: sines of the angle gaps.
        let ext = ExtendedTheta { n, theta: &self.whole };
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let p = chain[i];
            let q = if i + 1 < r { chain[i + 1] } else { chain[0] + n as i64 };
            let (diff, periods) = ext.gap(p, q);
            let angle = diff.to_f64() + periods as f64 * std::f64::consts::PI;
            let s = S::from_f64(angle.sin()).ok_or(PosetError::ExactSine)?;
            out.push(s);
        }
        ensure_nonzero(&out)?;
        Ok(out)
    }

    /// The datum of an arbitrary tube, derived through the coherence
    /// condition when it is not a tubing member: restrict the minimal
    /// containing member's datum, center it, and normalize its cover
    /// increments to one.
    pub fn derived_datum(&self, tube: &Tube) -> Result<Vec<S>, PosetError> {
        if let Some(x) = self.data.get(tube) {
            return Ok(x.clone());
        }
        let n = self.poset.n();
        for member in self.members_by_size() {
            if member.len() <= tube.len() {
                continue;
            }
            if let Some(inst) = instance_inside(&self.poset, tube, member) {
                let xm = &self.data[member];
                let idx = |e: i64| member.elems().iter().position(|&y| y == e).unwrap();
                let vals: Vec<S> = inst.iter().map(|&e| xm[idx(e)].clone()).collect();
                return normalize_datum(&self.poset, &inst, vals).map_err(|_| {
                    PosetError::StratumMismatch { tube: tube.key() }
                });
            }
        }
        // Restriction of the whole datum. When the instance stays inside one
        // period window, the values are exact base differences; otherwise
        // pi enters and only the float backend can represent them.
        let ext = ExtendedTheta { n, theta: &self.whole };
        let elems = tube.elems();
        let base = elems[0];
        let gaps: Vec<(S, i64)> = elems.iter().map(|&e| ext.gap(base, e)).collect();
        let vals: Vec<S> = if gaps.iter().all(|(_, d)| *d == 0) {
            gaps.into_iter().map(|(diff, _)| diff).collect()
        } else {
            let mut out = Vec::with_capacity(elems.len());
            for (diff, periods) in gaps {
                let v = diff.to_f64() + periods as f64 * std::f64::consts::PI;
                out.push(S::from_f64(v).ok_or(PosetError::ExactSine)?);
            }
            out
        };
        normalize_datum(&self.poset, elems, vals)
            .map_err(|_| PosetError::StratumMismatch { tube: tube.key() })
    }
}

fn ensure_nonzero<S: Coeff>(v: &[S]) -> Result<(), PosetError> {
    let nonzero = v.iter().any(|x| {
        if S::EXACT { !x.is_zero() } else { x.to_f64().abs() > 1e-13 }
    });
    if nonzero {
        Ok(())
    } else {
        Err(PosetError::BadPoint("zeta vector vanished identically".into()))
    }
}

/// Centers a value vector and scales it so the cover increments inside
/// `elems` sum to one.
fn normalize_datum<S: Coeff>(
    poset: &AffinePoset,
    elems: &[i64],
    vals: Vec<S>,
) -> Result<Vec<S>, PosetError> {
    let alpha = alpha_value(poset, elems, &vals, elems);
    let zero_alpha = if S::EXACT { alpha.is_zero() } else { alpha.to_f64().abs() < 1e-13 };
    if zero_alpha {
        return Err(PosetError::BadPoint("flat restriction".into()));
    }
    let len = S::from_int(elems.len() as i64);
    let mean = vals.iter().fold(S::zero(), |a, b| a + b.clone()) / len;
    Ok(vals.into_iter().map(|v| (v - mean.clone()) / alpha.clone()).collect())
}

/// The unique instance of class `small` contained in the canonical
/// representative of `big`, if any.
pub fn instance_inside(poset: &AffinePoset, small: &Tube, big: &Tube) -> Option<Vec<i64>> {
    let n = poset.n();
    for d in -3..=3i64 {
        let inst = small.instance(d, n);
        if inst.iter().all(|e| big.elems().contains(e)) {
            return Some(inst);
        }
    }
    None
}

/// Finds the rotation sigma^s of the chain that lifts into the tube, with
/// the lifted elements.
fn fit_chain_in_tube(tube: &Tube, chain: &[i64], n: usize) -> Option<(usize, Vec<i64>)> {
    let r = chain.len();
    let ni = n as i64;
    // All residues must be present.
    for &p in chain {
        tube.rep_of_residue((p - 1).rem_euclid(ni) + 1, n)?;
    }
    for s in 0..r {
        let rotated: Vec<i64> = (0..r)
            .map(|j| {
                let idx = (s + j) % r;
                let wrap = if s + j >= r { ni } else { 0 };
                chain[idx] + wrap
            })
            .collect();
        // Common shift taking the rotated chain inside the tube.
        let rep0 = tube
            .rep_of_residue((rotated[0] - 1).rem_euclid(ni) + 1, n)
            .expect("residue present");
        let d = rep0 - rotated[0];
        if d % ni != 0 {
            continue;
        }
        let lifted: Vec<i64> = rotated.iter().map(|x| x + d).collect();
        if lifted.iter().all(|e| tube.elems().contains(e)) {
            return Some((s, lifted));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Samples a strictly admissible angle vector: ranks along the generator
/// DAG inside one window plus jitter, then pinned at theta_1 = 0.
pub fn sample_interior_theta<R: Rng>(poset: &AffinePoset, rng: &mut R) -> Vec<f64> {
    let n = poset.n();
    // Longest-path ranks over in-window generator edges.
    let edges: Vec<(usize, usize)> = poset
        .generators()
        .iter()
        .filter(|&&(_a, b)| b <= n as i64)
        .map(|&(a, b)| (a as usize - 1, b as usize - 1))
        .collect();
    let mut rank = vec![0usize; n];
    for _ in 0..n {
        for &(a, b) in &edges {
            if rank[b] < rank[a] + 1 {
                rank[b] = rank[a] + 1;
            }
        }
    }
    let max_rank = rank.iter().copied().max().unwrap_or(0);
    let scale = std::f64::consts::PI / (max_rank as f64 + 2.0);
    let theta: Vec<f64> = rank
        .iter()
        .map(|&r| (r as f64 + 0.1 + 0.8 * rng.gen::<f64>()) * scale)
        .collect();
    let base = theta[0];
    theta.into_iter().map(|t| t - base).collect()
}

/// Samples a point in the open cell of the given tubing: collapse a random
/// interior point onto the tubing's blocks, then supply strict nested data
/// for each tube. Retries on numeric collisions.
pub fn sample_cell_point<R: Rng>(
    poset: &AffinePoset,
    tubing: &Tubing,
    rng: &mut R,
) -> Result<CompPoint<f64>, PosetError> {
    for _ in 0..50 {
        if let Ok(p) = try_sample_cell_point(poset, tubing, rng) {
            return Ok(p);
        }
    }
    Err(PosetError::BadPoint("could not sample a generic cell point".into()))
}

fn try_sample_cell_point<R: Rng>(
    poset: &AffinePoset,
    tubing: &Tubing,
    rng: &mut R,
) -> Result<CompPoint<f64>, PosetError> {
    let n = poset.n();
    let ni = n as i64;
    let maximal: Vec<&Tube> = tubing
        .tubes
        .iter()
        .filter(|t| {
            !tubing.tubes.iter().any(|bigger| {
                bigger.len() > t.len() && instance_inside(poset, t, bigger).is_some()
            })
        })
        .collect();

    let mut theta = sample_interior_theta(poset, rng);
    // Collapse each maximal class to the mean of its extended values.
    for t in &maximal {
        let vals: Vec<f64> = t
            .elems()
            .iter()
            .map(|&p| {
                let r = (p - 1).rem_euclid(ni) as usize;
                let d = (p - 1 - (p - 1).rem_euclid(ni)) / ni;
                theta[r] + d as f64 * std::f64::consts::PI
            })
            .collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        for &p in t.elems() {
            let r = (p - 1).rem_euclid(ni) as usize;
            let d = (p - 1 - (p - 1).rem_euclid(ni)) / ni;
            theta[r] = mean - d as f64 * std::f64::consts::PI;
        }
    }
    let base = theta[0];
    let theta: Vec<f64> = theta.into_iter().map(|t| t - base).collect();

    let mut data: TubingData<f64> = BTreeMap::new();
    for t in &tubing.tubes {
        let children: Vec<Vec<i64>> = tubing
            .tubes
            .iter()
            .filter(|c| c.len() < t.len())
            .filter_map(|c| instance_inside(poset, c, t))
            .collect();
        data.insert((*t).clone(), sample_finite_datum(poset, t, &children, rng));
    }
    CompPoint::new(poset.clone(), tubing.clone(), theta, data)
}

fn sample_finite_datum<R: Rng>(
    poset: &AffinePoset,
    tube: &Tube,
    children: &[Vec<i64>],
    rng: &mut R,
) -> Vec<f64> {
    let elems = tube.elems();
    let covers = poset.covers_within(elems);
    let idx = |e: i64| elems.iter().position(|&y| y == e).unwrap();
    let mut rank = vec![0usize; elems.len()];
    for _ in 0..elems.len() {
        for &(a, b) in &covers {
            if rank[idx(b)] < rank[idx(a)] + 1 {
                rank[idx(b)] = rank[idx(a)] + 1;
            }
        }
    }
    let mut x: Vec<f64> =
        rank.iter().map(|&r| r as f64 + 0.1 + 0.8 * rng.gen::<f64>()).collect();
    for child in children {
        // Only keep maximal children; collapsing a nested child first and
        // its parent afterwards also lands on the parent's mean.
        let mean = child.iter().map(|&e| x[idx(e)]).sum::<f64>() / child.len() as f64;
        for &e in child {
            x[idx(e)] = mean;
        }
    }
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    for v in x.iter_mut() {
        *v -= mean;
    }
    let alpha: f64 = covers.iter().map(|&(a, b)| x[idx(b)] - x[idx(a)]).sum();
    for v in x.iter_mut() {
        *v /= alpha;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn pi() -> f64 {
        std::f64::consts::PI
    }

    #[test]
    fn interior_point_and_zeta() {
        let p = AffinePoset::total_order(4);
        let theta = vec![0.0, pi() / 4.0, pi() / 2.0, 3.0 * pi() / 4.0];
        let pt = CompPoint::interior(p, theta).unwrap();
        let z = pt.zeta(&[1, 2, 3, 4]).unwrap();
        let m = z.iter().cloned().fold(f64::MIN, f64::max);
        for v in &z {
            assert!((v / m - 1.0).abs() < 1e-12, "equal gaps give equal sines");
        }
    }

    #[test]
    fn example_nested_point_zeta_ratios() {
        // Two-triangle poset, tubing {0..4}, {0,1,2}, {3,4}; the inner
        // datum on {0,1,2} records the ratio (a : b).
        let p = super::super::tests::two_triangles_poset();
        let tau = Tube::new(&p, &[0, 1, 2, 3, 4]).unwrap();
        let tau1 = Tube::new(&p, &[0, 1, 2]).unwrap();
        let tau2 = Tube::new(&p, &[3, 4]).unwrap();
        let tubing = Tubing::new(&p, vec![tau.clone(), tau1.clone(), tau2.clone()]).unwrap();

        let theta = vec![0.0, 0.0, 0.0, 0.0, pi()];
        let (a, b) = (2.0, 3.0);
        // tau canonicalizes to {5,...,9}; positions s,s,s,t,t with the
        // cover-increment normalization alpha = t - s = 1 and sum zero.
        let (s, t) = (-2.0 / 5.0, 3.0 / 5.0);
        let mut data = TubingData::new();
        data.insert(tau.clone(), vec![s, s, s, t, t]);
        // tau1 canonicalizes to {5, 6, 7} (residues 5, 1, 2): positions
        // 0, a, a+b centered and scaled by alpha = x_7 - x_5 = a + b.
        let mean = (0.0 + a + (a + b)) / 3.0;
        data.insert(
            tau1.clone(),
            vec![(0.0 - mean) / (a + b), (a - mean) / (a + b), (a + b - mean) / (a + b)],
        );
        data.insert(tau2.clone(), vec![-0.5, 0.5]);
        let pt = CompPoint::new(p.clone(), tubing, theta, data).unwrap();

        // Chain (5, 6, 7) sits inside tau1: ratios (a : b : a+b).
        let z = pt.zeta(&[5, 6, 7]).unwrap();
        assert!((z[0] / z[1] - a / b).abs() < 1e-12);
        assert!((z[2] / z[1] - (a + b) / b).abs() < 1e-12);
    }

    #[test]
    fn stratum_mismatch_detected() {
        let p = AffinePoset::total_order(3);
        let t = Tube::new(&p, &[1, 2]).unwrap();
        let tubing = Tubing::new(&p, vec![t.clone()]).unwrap();
        // Strictly increasing whole datum contradicts the tube {1,2}.
        let theta = vec![0.0, 0.4, 0.8];
        let mut data = TubingData::new();
        data.insert(t, vec![-0.5, 0.5]);
        assert!(matches!(
            CompPoint::new(p, tubing, theta, data),
            Err(PosetError::StratumMismatch { .. })
        ));
    }

    #[test]
    fn sampled_cell_points_validate() {
        let p = AffinePoset::total_order(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for tubing in super::super::tubing::enumerate_proper_tubings(&p, 6).unwrap() {
            let pt = sample_cell_point(&p, &tubing, &mut rng).unwrap();
            assert_eq!(pt.tubing().tubes.len(), tubing.tubes.len());
        }
    }

    #[test]
    fn zeta_cyclic_equivariance() {
        let p = AffinePoset::total_order(5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let tubings = super::super::tubing::enumerate_proper_tubings(&p, 6).unwrap();
        for tubing in tubings.iter().take(12) {
            let pt = sample_cell_point(&p, tubing, &mut rng).unwrap();
            let chain = vec![1i64, 2, 4];
            let z = pt.zeta(&chain).unwrap();
            let shifted = pt.zeta(&[2, 4, 6]).unwrap();
            // sigma(chain) = (2, 4, 1+5): entries rotate by one.
            for i in 0..3 {
                let x = z[(i + 1) % 3];
                let y = shifted[i];
                let (mx, my) = (
                    z.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs())),
                    shifted.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs())),
                );
                assert!((x / mx - y / my).abs() < 1e-9);
            }
        }
    }
}
