//! Affine posets: n-periodic partial orders on the integers with p < p+n,
//! their tubes and tubings, order-polytope points, and the compactification
//! of the open order polytope.

pub mod comp;
pub mod points;
pub mod tubes;
pub mod tubing;

pub use comp::{CompPoint, TubingData};
pub use points::{point_partition_finite, point_partition_whole, validate_finite_point, validate_whole_point};
pub use tubes::Tube;
pub use tubing::{classes_compatible, enumerate_proper_tubings, f_vector, is_tubing_partition, Tubing};

use crate::error::{PermError, PosetError};
use crate::perm::Bap;
use std::collections::BTreeSet;

/// An affine poset of order n: the n-periodic transitive closure of a
/// finite set of generating relations together with p < p+n.
///
/// Generators are stored normalized with the smaller element in [1, n];
/// every generator increases the integer value, so comparability implies
/// integer order and all searches are bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePoset {
    n: usize,
    /// (a, b) with a in [1, n], a < b <= a + n, meaning a < b in the order.
    gens: Vec<(i64, i64)>,
}

impl AffinePoset {
    pub fn from_covers(n: usize, covers: &[(i64, i64)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::BadPoset("order must be positive".into()));
        }
        let ni = n as i64;
        let mut gens = BTreeSet::new();
        for &(a, b) in covers {
            if b <= a {
                return Err(PosetError::BadPoset(format!(
                    "relation ({a}, {b}) does not increase; affine posets here are generated by increasing relations"
                )));
            }
            if b - a > ni {
                return Err(PosetError::BadPoset(format!(
                    "relation ({a}, {b}) spans more than one period"
                )));
            }
            let shift = (a - 1).div_euclid(ni);
            gens.insert((a - shift * ni, b - shift * ni));
        }
        let poset = AffinePoset { n, gens: gens.into_iter().collect() };
        poset.check_cofinal()?;
        Ok(poset)
    }

    /// The total order on the integers.
    pub fn total_order(n: usize) -> Self {
        let covers: Vec<(i64, i64)> = (1..=n as i64).map(|p| (p, p + 1)).collect();
        Self::from_covers(n, &covers).expect("total order is an affine poset")
    }

    /// The affine poset of a loopless permutation with connected strand
    /// diagram: generated by p < q < p+n over the f-crossings {p, q}.
    pub fn from_perm(f: &Bap) -> Result<Self, PermError> {
        let crossings = f.f_crossings()?;
        if !f.connected_strand_diagram()? {
            return Err(PermError::DisconnectedDiagram);
        }
        let n = f.n() as i64;
        let mut covers = Vec::new();
        for &(p, q) in &crossings {
            covers.push((p as i64, q as i64));
            covers.push((q as i64, p as i64 + n));
        }
        // Connectivity of the strand diagram guarantees cofinality.
        AffinePoset::from_covers(f.n(), &covers).map_err(|_| PermError::DisconnectedDiagram)
    }

    fn check_cofinal(&self) -> Result<(), PosetError> {
        let n = self.n as i64;
        for p in 1..=n {
            for q in 1..=n {
                let ok = (0..=2 * n).any(|d| self.leq(p, q + d * n));
                if !ok {
                    return Err(PosetError::BadPoset(format!(
                        "cofinality fails: {p} is below no shift of {q}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(i64, i64)] {
        &self.gens
    }

    /// p <= q in the order. Every relation increases the value, so a
    /// bounded upward search decides the question.
    pub fn leq(&self, p: i64, q: i64) -> bool {
        if p == q {
            return true;
        }
        if p > q {
            return false;
        }
        let n = self.n as i64;
        let mut seen = BTreeSet::new();
        let mut stack = vec![p];
        seen.insert(p);
        while let Some(x) = stack.pop() {
            let push = |y: i64, seen: &mut BTreeSet<i64>, stack: &mut Vec<i64>| {
                if y == q {
                    return true;
                }
                if y < q && seen.insert(y) {
                    stack.push(y);
                }
                false
            };
            if push(x + n, &mut seen, &mut stack) {
                return true;
            }
            let r = (x - 1).rem_euclid(n) + 1;
            let shift = x - r;
            for &(a, b) in &self.gens {
                if a == r && push(b + shift, &mut seen, &mut stack) {
                    return true;
                }
            }
        }
        false
    }

    pub fn less(&self, p: i64, q: i64) -> bool {
        p != q && self.leq(p, q)
    }

    /// Whether (a, b) is a covering relation of the poset.
    pub fn is_cover(&self, a: i64, b: i64) -> bool {
        self.less(a, b) && !((a + 1)..b).any(|c| self.less(a, c) && self.less(c, b))
    }

    /// All covering relations with both ends inside the given set.
    pub fn covers_within(&self, elems: &[i64]) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i + 1..] {
                // elems sorted ascending
                if self.is_cover(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Hasse-diagram connectivity of a finite subset (edges are ambient
    /// covers between its elements).
    pub fn hasse_connected(&self, elems: &[i64]) -> bool {
        if elems.is_empty() {
            return false;
        }
        let covers = self.covers_within(elems);
        let idx = |x: i64| elems.iter().position(|&y| y == x).unwrap();
        let mut dsu: Vec<usize> = (0..elems.len()).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for (a, b) in covers {
            let (ra, rb) = (find(&mut dsu, idx(a)), find(&mut dsu, idx(b)));
            if ra != rb {
                dsu[ra] = rb;
            }
        }
        let root = find(&mut dsu, 0);
        (1..elems.len()).all(|i| find(&mut dsu, i) == root)
    }

    /// Convexity of a finite subset: every element between two members (in
    /// the order) is a member. Increasing relations bound the search to the
    /// integer interval spanned by the set.
    pub fn is_convex(&self, elems: &[i64]) -> bool {
        let set: BTreeSet<i64> = elems.iter().copied().collect();
        let (lo, hi) = match (set.iter().next(), set.iter().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return false,
        };
        for c in lo..=hi {
            if set.contains(&c) {
                continue;
            }
            let below = set.iter().any(|&p| self.less(p, c));
            let above = set.iter().any(|&r| self.less(c, r));
            if below && above {
                return false;
            }
        }
        true
    }

    /// Circular chain test: p_1 < p_2 < ... < p_r < p_1 + n with strict
    /// order relations.
    pub fn is_circular_chain(&self, chain: &[i64]) -> bool {
        if chain.is_empty() {
            return false;
        }
        for w in chain.windows(2) {
            if !self.less(w[0], w[1]) {
                return false;
            }
        }
        self.less(chain[chain.len() - 1], chain[0] + self.n as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The example poset with order polytope a product of two triangles:
    /// 1 < 3 < 4 < 6 and 1 < 2 < 5 < 6, with 2, 3 incomparable.
    pub(crate) fn two_triangles_poset() -> AffinePoset {
        AffinePoset::from_covers(5, &[(1, 3), (3, 4), (4, 6), (1, 2), (2, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn total_order_comparisons() {
        let p = AffinePoset::total_order(3);
        assert!(p.leq(1, 5));
        assert!(p.leq(1, 4));
        assert!(!p.leq(4, 1));
        assert!(p.is_cover(1, 2));
        assert!(!p.is_cover(1, 3));
    }

    #[test]
    fn perm_poset_of_top_cell_is_total() {
        for (k, n) in [(2, 4), (2, 5), (3, 5), (2, 6)] {
            let f = Bap::top_cell(k, n);
            let p = AffinePoset::from_perm(&f).unwrap();
            let total = AffinePoset::total_order(n);
            for a in 1..=n as i64 {
                for b in a..=(a + 2 * n as i64) {
                    assert_eq!(p.leq(a, b), total.leq(a, b), "k={k} n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn figure_poset_incomparabilities() {
        let p = two_triangles_poset();
        assert!(p.leq(3, 4));
        assert!(!p.leq(2, 3));
        assert!(!p.leq(3, 2));
        assert!(p.leq(2, 5));
        assert!(p.leq(1, 6));
        assert!(p.leq(4, 6));
        // axiom p < p+n holds
        assert!(p.leq(2, 7));
    }

    #[test]
    fn n2_swap_poset() {
        let f = Bap::new(vec![2, 3]).unwrap();
        let p = AffinePoset::from_perm(&f).unwrap();
        assert!(p.leq(1, 2) && p.leq(2, 3) && !p.leq(2, 1));
    }

    #[test]
    fn chain_predicate() {
        let p = AffinePoset::total_order(4);
        assert!(p.is_circular_chain(&[1, 2, 3, 4]));
        assert!(!p.is_circular_chain(&[1, 1]));
        assert!(p.is_circular_chain(&[5, 6, 7]));
        assert!(!p.is_circular_chain(&[1, 2, 3, 4, 5]));
    }
}
