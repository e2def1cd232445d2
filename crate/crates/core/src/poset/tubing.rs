//! Tubings: n-periodic families of tubes, pairwise nested or disjoint, with
//! an acyclic comparability digraph. Proper tubings index the faces of the
//! affine poset cyclohedron, ordered by reverse inclusion.

use super::tubes::{enumerate_tubes, Tube};
use super::AffinePoset;
use crate::error::PosetError;
use std::collections::{BTreeMap, BTreeSet};

/// A proper tubing: a set of equivalence classes of proper tubes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tubing {
    pub tubes: Vec<Tube>,
}

impl Tubing {
    pub fn empty() -> Self {
        Tubing { tubes: Vec::new() }
    }

    pub fn new(poset: &AffinePoset, tubes: Vec<Tube>) -> Result<Self, PosetError> {
        let mut sorted = tubes;
        sorted.sort();
        sorted.dedup();
        let t = Tubing { tubes: sorted };
        t.validate(poset)?;
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    fn validate(&self, poset: &AffinePoset) -> Result<(), PosetError> {
        let n = poset.n();
        for t in &self.tubes {
            if !t.is_proper(n) {
                return Err(PosetError::NotATubing(format!("tube {} is not proper", t.key())));
            }
        }
        for (i, a) in self.tubes.iter().enumerate() {
            for b in self.tubes.iter().skip(i) {
                if !classes_compatible(poset, a, b) {
                    return Err(PosetError::NotATubing(format!(
                        "tubes {} and {} are neither nested nor disjoint",
                        a.key(),
                        b.key()
                    )));
                }
            }
        }
        if has_directed_cycle(poset, &self.tubes) {
            return Err(PosetError::NotATubing("comparability digraph has a cycle".into()));
        }
        Ok(())
    }
}

/// All instance pairs of the two classes are nested or disjoint. Sets span
/// less than two periods, so nearby shifts suffice.
pub fn classes_compatible(poset: &AffinePoset, a: &Tube, b: &Tube) -> bool {
    let n = poset.n();
    let av: BTreeSet<i64> = a.elems().iter().copied().collect();
    for d in -3..=3i64 {
        if a == b && d == 0 {
            continue;
        }
        let bv: BTreeSet<i64> = b.instance(d, n).into_iter().collect();
        let inter = av.intersection(&bv).count();
        let nested = inter == av.len() || inter == bv.len();
        let disjoint = inter == 0;
        if !(nested || disjoint) {
            return false;
        }
    }
    true
}

/// Directed cycle detection for D_T over tube instances in a bounded shift
/// window: edges go from a tube to a disjoint tube containing something
/// strictly larger.
fn has_directed_cycle(poset: &AffinePoset, tubes: &[Tube]) -> bool {
    let n = poset.n();
    if tubes.is_empty() {
        return false;
    }
    let window: i64 = tubes.len() as i64 + 3;
    let mut nodes: Vec<(usize, i64)> = Vec::new();
    for (i, _) in tubes.iter().enumerate() {
        for d in -window..=window {
            nodes.push((i, d));
        }
    }
    let index: BTreeMap<(usize, i64), usize> =
        nodes.iter().enumerate().map(|(x, &nd)| (nd, x)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (x, &(i, di)) in nodes.iter().enumerate() {
        let a = tubes[i].instance(di, n);
        let aset: BTreeSet<i64> = a.iter().copied().collect();
        for &(j, dj) in nodes.iter() {
            if (i, di) == (j, dj) {
                continue;
            }
            let b = tubes[j].instance(dj, n);
            if b.iter().any(|x| aset.contains(x)) {
                continue; // not disjoint
            }
            let rel = a.iter().any(|&p| b.iter().any(|&q| poset.less(p, q)));
            if rel {
                adj[x].push(index[&(j, dj)]);
            }
        }
    }
    // DFS cycle detection.
    let mut state = vec![0u8; nodes.len()];
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &adj[v] {
            if state[w] == 1 {
                return true;
            }
            if state[w] == 0 && dfs(w, adj, state) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    (0..nodes.len()).any(|v| state[v] == 0 && dfs(v, &adj, &mut state))
}

/// Checks a set-partition-like family (blocks may include singletons) for
/// being a tubing partition: blocks are tubes, pairwise disjoint classes,
/// acyclic comparability.
pub fn is_tubing_partition(poset: &AffinePoset, blocks: &[Tube]) -> bool {
    let n = poset.n();
    let _ = n;
    let mut residues = BTreeSet::new();
    for b in blocks {
        for r in b.residues(n) {
            if !residues.insert(r) {
                return false;
            }
        }
    }
    if residues.len() != n {
        return false;
    }
    !has_directed_cycle(poset, blocks)
}

/// Enumerates all proper tubings (the face poset of the cyclohedron under
/// reverse inclusion). Bails out beyond the configured bound.
pub fn enumerate_proper_tubings(
    poset: &AffinePoset,
    max_order: usize,
) -> Result<Vec<Tubing>, PosetError> {
    let n = poset.n();
    if n > max_order {
        return Err(PosetError::TooLarge(format!(
            "tubing enumeration bounded at order {max_order}, got {n}"
        )));
    }
    let classes: Vec<Tube> =
        enumerate_tubes(poset, 2).into_iter().filter(|t| t.is_proper(n)).collect();
    let mut out = Vec::new();
    let mut current: Vec<Tube> = Vec::new();
    fn extend(
        poset: &AffinePoset,
        classes: &[Tube],
        from: usize,
        current: &mut Vec<Tube>,
        out: &mut Vec<Tubing>,
    ) {
        out.push(Tubing { tubes: current.clone() });
        for i in from..classes.len() {
            let c = &classes[i];
            if !current.iter().all(|t| classes_compatible(poset, t, c)) {
                continue;
            }
            current.push(c.clone());
            if !has_directed_cycle(poset, current) {
                extend(poset, classes, i + 1, current, out);
            }
            current.pop();
        }
    }
    extend(poset, &classes, 0, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// The f-vector of the cyclohedron: entry d counts tubings with
/// |E[T]| = n - 1 - d (faces of dimension d), d = 0 .. n-1.
pub fn f_vector(poset: &AffinePoset, max_order: usize) -> Result<Vec<usize>, PosetError> {
    let n = poset.n();
    let tubings = enumerate_proper_tubings(poset, max_order)?;
    let mut counts = vec![0usize; n];
    for t in &tubings {
        let dim = n - 1 - t.len();
        counts[dim] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_intervals_not_a_tubing() {
        let p = AffinePoset::total_order(3);
        let a = Tube::new(&p, &[1, 2]).unwrap();
        let b = Tube::new(&p, &[2, 3]).unwrap();
        assert!(Tubing::new(&p, vec![a.clone()]).is_ok());
        assert!(Tubing::new(&p, vec![a, b]).is_err());
    }

    #[test]
    fn figure_tubing_is_valid() {
        let p = super::super::tests::two_triangles_poset();
        let t1 = Tube::new(&p, &[0, 1, 2, 3, 4]).unwrap();
        let t2 = Tube::new(&p, &[0, 1, 2]).unwrap();
        let t3 = Tube::new(&p, &[3, 4]).unwrap();
        assert!(Tubing::new(&p, vec![t1, t2, t3]).is_ok());
    }

    #[test]
    fn cyclohedron_small_f_vectors() {
        let c2 = f_vector(&AffinePoset::total_order(2), 6).unwrap();
        assert_eq!(c2, vec![2, 1]);
        let c3 = f_vector(&AffinePoset::total_order(3), 6).unwrap();
        assert_eq!(c3, vec![6, 6, 1]);
        let c4 = f_vector(&AffinePoset::total_order(4), 6).unwrap();
        assert_eq!(c4[0], 20);
    }
}
