//! The boundary measurement map: Plücker coordinates as weighted sums over
//! almost perfect matchings.

use super::graph::{EdgeId, PlabicGraph};
use super::matchings::{enumerate_matchings, matching_size_k};
use crate::error::PlabicError;
use crate::num::{projective_distance, projectively_equal_exact, Coeff, Rat};
use std::collections::BTreeMap;

/// Weights on edges, tagged by backend through the scalar type.
#[derive(Debug, Clone)]
pub struct EdgeWeighting<S: Coeff> {
    pub weights: BTreeMap<EdgeId, S>,
}

impl<S: Coeff> EdgeWeighting<S> {
    pub fn unit(g: &PlabicGraph) -> Self {
        EdgeWeighting { weights: g.live_edges().map(|(e, _)| (e, S::one())).collect() }
    }

    pub fn get(&self, e: EdgeId) -> Option<&S> {
        self.weights.get(&e)
    }

    /// Every live edge must carry a finite nonnegative weight.
    pub fn validate(&self, g: &PlabicGraph, strictly_positive: bool) -> Result<(), PlabicError> {
        for (e, _) in g.live_edges() {
            match self.weights.get(&e) {
                None => return Err(PlabicError::BadWeight { edge: e }),
                Some(w) => {
                    let bad = if strictly_positive { *w <= S::zero() } else { *w < S::zero() };
                    if bad || !w.to_f64().is_finite() {
                        return Err(PlabicError::BadWeight { edge: e });
                    }
                }
            }
        }
        Ok(())
    }

    /// Gauge transformation: rescale all edges at one interior vertex.
    pub fn gauged_at(&self, g: &PlabicGraph, v: usize, c: &S) -> Self {
        assert!(g.is_interior(v), "gauge only at interior vertices");
        let mut w = self.weights.clone();
        for &e in g.rotation(v) {
            let cur = w.get_mut(&e).expect("weight missing");
            *cur = cur.clone() * c.clone();
        }
        EdgeWeighting { weights: w }
    }
}

/// A projective vector of Plücker coordinates indexed by k-subsets of [n].
#[derive(Debug, Clone)]
pub struct GrassmannPoint<S: Coeff> {
    pub k: usize,
    pub n: usize,
    pub coords: BTreeMap<Vec<usize>, S>,
}

impl<S: Coeff> GrassmannPoint<S> {
    pub fn coord(&self, subset: &[usize]) -> S {
        self.coords.get(subset).cloned().unwrap_or_else(S::zero)
    }

    /// Coordinates in the canonical (lexicographic) subset order.
    pub fn dense(&self) -> Vec<S> {
        self.coords.values().cloned().collect()
    }

    pub fn dense_f64(&self) -> Vec<f64> {
        self.coords.values().map(|v| v.to_f64()).collect()
    }

    pub fn subsets(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.coords.keys()
    }

    /// Totally nonnegative up to a sign flip: after normalizing by the
    /// coordinate of maximum absolute value, the minimum is >= -tol.
    pub fn is_totally_nonnegative(&self, tol: f64) -> bool {
        let v = self.dense_f64();
        if v.iter().all(|x| *x == 0.0) {
            return false;
        }
        let normed = crate::num::normalize_max_abs(&v);
        normed.iter().all(|x| *x >= -tol)
    }

    /// Relabels boundary indices by p -> p + shift (mod n).
    pub fn relabeled(&self, shift: i64) -> Self {
        let n = self.n as i64;
        let mut coords = BTreeMap::new();
        for (subset, val) in &self.coords {
            let mut s: Vec<usize> =
                subset.iter().map(|&p| ((p as i64 - 1 + shift).rem_euclid(n) + 1) as usize).collect();
            s.sort_unstable();
            coords.insert(s, val.clone());
        }
        GrassmannPoint { k: self.k, n: self.n, coords }
    }
}

impl GrassmannPoint<Rat> {
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.k == other.k
            && self.n == other.n
            && projectively_equal_exact(&self.dense(), &other.dense())
    }
}

impl GrassmannPoint<f64> {
    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!((self.k, self.n), (other.k, other.n), "incompatible Grassmannians");
        projective_distance(&self.dense_f64(), &other.dense_f64())
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Computes Meas(G, wt): Delta_I is the weighted count of matchings with
/// boundary set I. The weighting must be strictly positive; use
/// [`super::limit::graph_limit`] first when zeros are present.
pub fn boundary_measurement<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
) -> Result<GrassmannPoint<S>, PlabicError> {
    wt.validate(g, true)?;
    measurement_nonneg(g, wt)
}

/// Measurement allowing zero weights on live edges (used internally by the
/// limit machinery after pruning).
pub(crate) fn measurement_nonneg<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
) -> Result<GrassmannPoint<S>, PlabicError> {
    let ms = enumerate_matchings(g);
    if ms.is_empty() {
        return Err(PlabicError::NoMatching);
    }
    let k = matching_size_k(&ms).ok_or_else(|| {
        PlabicError::BadSpec("matchings have unequal boundary sizes".into())
    })?;
    let mut coords: BTreeMap<Vec<usize>, S> =
        k_subsets(g.n(), k).into_iter().map(|s| (s, S::zero())).collect();
    for m in &ms {
        let mut w = S::one();
        for &e in &m.edges {
            w = w * wt.get(e).expect("validated weight").clone();
        }
        let slot = coords.get_mut(&m.boundary).expect("boundary is a k-subset");
        *slot = slot.clone() + w;
    }
    if coords.values().all(|v| v.is_zero()) {
        return Err(PlabicError::NoMatching);
    }
    Ok(GrassmannPoint { k, n: g.n(), coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plabic::graph::path_graph;

    #[test]
    fn path_measurement_is_ratio_of_weights() {
        let g = path_graph();
        let wt = EdgeWeighting {
            weights: BTreeMap::from([(0, Rat::from_int(2)), (1, Rat::from_int(3))]),
        };
        let m = boundary_measurement(&g, &wt).unwrap();
        assert_eq!(m.k, 1);
        assert_eq!(m.coord(&[1]), Rat::from_int(2));
        assert_eq!(m.coord(&[2]), Rat::from_int(3));
    }

    #[test]
    fn unit_weights_count_matchings() {
        let g = path_graph();
        let m = boundary_measurement(&g, &EdgeWeighting::<Rat>::unit(&g)).unwrap();
        assert_eq!(m.coord(&[1]), Rat::from_int(1));
        assert_eq!(m.coord(&[2]), Rat::from_int(1));
    }

    #[test]
    fn gauge_invariance_on_path() {
        let g = path_graph();
        let wt = EdgeWeighting {
            weights: BTreeMap::from([(0, Rat::from_int(2)), (1, Rat::from_int(3))]),
        };
        let gauged = wt.gauged_at(&g, 1, &Rat::from_ratio(7, 2));
        let a = boundary_measurement(&g, &wt).unwrap();
        let b = boundary_measurement(&g, &gauged).unwrap();
        assert!(a.projectively_equal(&b));
    }
}
