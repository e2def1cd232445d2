//! Tubes: convex connected subsets with at most one element per residue
//! class, stored by the representative whose minimum lies in [1, n].

use super::AffinePoset;
use crate::error::PosetError;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tube {
    elems: Vec<i64>,
}

impl Tube {
    /// Canonicalizes a set of integers as a tube representative and checks
    /// the tube axioms.
    pub fn new(poset: &AffinePoset, elems: &[i64]) -> Result<Self, PosetError> {
        if elems.is_empty() {
            return Err(PosetError::NotATube("empty set".into()));
        }
        let n = poset.n() as i64;
        let mut v: Vec<i64> = elems.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.len() != elems.len() {
            return Err(PosetError::NotATube("repeated element".into()));
        }
        let mut residues = BTreeSet::new();
        for &x in &v {
            if !residues.insert(x.rem_euclid(n)) {
                return Err(PosetError::NotATube("two elements share a residue class".into()));
            }
        }
        let shift = (v[0] - 1).div_euclid(n);
        let v: Vec<i64> = v.iter().map(|x| x - shift * n).collect();
        if !poset.is_convex(&v) {
            return Err(PosetError::NotATube("set is not convex".into()));
        }
        if !poset.hasse_connected(&v) {
            return Err(PosetError::NotATube("set is not connected".into()));
        }
        Ok(Tube { elems: v })
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Proper tubes have more than one element (and are not the whole
    /// poset, which is represented separately).
    pub fn is_proper(&self, n: usize) -> bool {
        self.elems.len() > 1 && self.elems.len() <= n
    }

    pub fn instance(&self, d: i64, n: usize) -> Vec<i64> {
        self.elems.iter().map(|x| x + d * n as i64).collect()
    }

    /// The shift d such that the instance tube + d*n contains x, if any.
    pub fn instance_containing(&self, x: i64, n: usize) -> Option<i64> {
        let ni = n as i64;
        for &e in &self.elems {
            if (x - e).rem_euclid(ni) == 0 {
                let d = (x - e) / ni;
                return Some(d);
            }
        }
        None
    }

    /// The representative of residue r (in [1, n]) inside this tube, if the
    /// tube meets that residue class.
    pub fn rep_of_residue(&self, r: i64, n: usize) -> Option<i64> {
        let ni = n as i64;
        self.elems.iter().copied().find(|&e| (e - r).rem_euclid(ni) == 0)
    }

    pub fn residues(&self, n: usize) -> BTreeSet<i64> {
        self.elems.iter().map(|x| x.rem_euclid(n as i64)).collect()
    }

    /// Serialization key, e.g. "3,4,5".
    pub fn key(&self) -> String {
        self.elems.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Enumerates all tube classes of sizes in [min_size, n] by growing
/// connected sets along Hasse covers and closing them up convexly.
pub fn enumerate_tubes(poset: &AffinePoset, min_size: usize) -> Vec<Tube> {
    let n = poset.n();
    let ni = n as i64;
    let span_cap = 2 * ni;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out: Vec<Tube> = Vec::new();
    let mut queue: Vec<Vec<i64>> = (1..=ni).map(|p| vec![p]).collect();

    while let Some(set) = queue.pop() {
        // Convex closure.
        let closed = match convex_close(poset, &set, span_cap) {
            Some(c) => c,
            None => continue,
        };
        if closed.len() > n || !one_per_residue(&closed, ni) {
            continue;
        }
        let shift = (closed[0] - 1).div_euclid(ni);
        let canon: Vec<i64> = closed.iter().map(|x| x - shift * ni).collect();
        if !seen.insert(canon.clone()) {
            continue;
        }
        if canon.len() >= min_size && poset.hasse_connected(&canon) {
            out.push(Tube { elems: canon.clone() });
        }
        // Grow by Hasse neighbors of the closed set.
        for &x in &canon {
            for y in (x - ni)..=(x + ni) {
                if canon.contains(&y) {
                    continue;
                }
                if poset.is_cover(x, y) || poset.is_cover(y, x) {
                    let mut next = canon.clone();
                    next.push(y);
                    next.sort_unstable();
                    if next.last().unwrap() - next.first().unwrap() <= span_cap
                        && one_per_residue(&next, ni)
                    {
                        queue.push(next);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn one_per_residue(set: &[i64], n: i64) -> bool {
    let mut seen = BTreeSet::new();
    set.iter().all(|&x| seen.insert(x.rem_euclid(n)))
}

fn convex_close(poset: &AffinePoset, set: &[i64], span_cap: i64) -> Option<Vec<i64>> {
    let mut cur: BTreeSet<i64> = set.iter().copied().collect();
    loop {
        let lo = *cur.iter().next().unwrap();
        let hi = *cur.iter().next_back().unwrap();
        if hi - lo > span_cap {
            return None;
        }
        let mut added = false;
        for c in lo..=hi {
            if cur.contains(&c) {
                continue;
            }
            if cur.iter().any(|&p| poset.less(p, c)) && cur.iter().any(|&r| poset.less(c, r)) {
                cur.insert(c);
                added = true;
            }
        }
        if !added {
            return Some(cur.into_iter().collect());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_tubes_are_intervals() {
        for n in 2..=5 {
            let p = AffinePoset::total_order(n);
            let proper: Vec<_> =
                enumerate_tubes(&p, 2).into_iter().filter(|t| t.is_proper(n)).collect();
            // intervals of sizes 2..n anchored at each residue
            assert_eq!(proper.len(), n * (n - 1), "n={n}");
        }
    }

    #[test]
    fn tube_validation() {
        let p = AffinePoset::total_order(4);
        assert!(Tube::new(&p, &[2, 3, 4]).is_ok());
        assert!(Tube::new(&p, &[2, 4]).is_err()); // not convex
        assert!(Tube::new(&p, &[1, 5]).is_err()); // same residue
        let t = Tube::new(&p, &[0, 1, 2]).unwrap();
        assert_eq!(t.elems(), &[4, 5, 6]); // canonical shift puts min in [1, n]
    }

    #[test]
    fn figure_poset_tube_classes() {
        let p = super::super::tests::two_triangles_poset();
        // {0,1,2} is a tube: 0 < 1 < 2 is a chain (covers (5,6)->(0,1), (1,2)).
        assert!(Tube::new(&p, &[0, 1, 2]).is_ok());
        // {2,3} is not connected: 2 and 3 are incomparable with no cover.
        assert!(Tube::new(&p, &[2, 3]).is_err());
        // maximal proper tube {0,1,2,3,4}
        assert!(Tube::new(&p, &[0, 1, 2, 3, 4]).is_ok());
    }
}
