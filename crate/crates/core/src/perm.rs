//! Bounded affine permutations: windows, length, crossings, interval
//! partitions and the maximal-length permutations g_B attached to them.

use crate::error::PermError;
use std::collections::BTreeSet;

/// A (k,n)-bounded affine permutation stored by its window f(1..n).
///
/// The defining conditions: j <= f(j) <= j+n, the window is a system of
/// distinct residues mod n, and the sum of f(j) - j is k*n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedAffinePermutation {
    n: usize,
    window: Vec<i64>,
}

pub type Bap = BoundedAffinePermutation;

impl BoundedAffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self, PermError> {
        let n = window.len();
        if n == 0 {
            return Err(PermError::NotBijective);
        }
        let ni = n as i64;
        let mut seen = vec![false; n];
        let mut sum = 0i64;
        for (idx, &v) in window.iter().enumerate() {
            let j = idx as i64 + 1;
            if v < j || v > j + ni {
                return Err(PermError::OutOfBounds { j: idx + 1, value: v });
            }
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(PermError::NotBijective);
            }
            seen[r] = true;
            sum += v - j;
        }
        if sum % ni != 0 {
            return Err(PermError::BadSum { sum });
        }
        Ok(BoundedAffinePermutation { n, window })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        let s: i64 = self.window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        (s / self.n as i64) as usize
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// f(j) for any integer j, via n-periodicity.
    pub fn at(&self, j: i64) -> i64 {
        let n = self.n as i64;
        let r = (j - 1).rem_euclid(n); // 0-based residue
        let d = (j - 1 - r) / n;
        self.window[r as usize] + d * n
    }

    /// fbar(j) in [1, n].
    pub fn fbar(&self, j: usize) -> usize {
        let n = self.n as i64;
        ((self.at(j as i64) - 1).rem_euclid(n) + 1) as usize
    }

    pub fn fbar_vec(&self) -> Vec<usize> {
        (1..=self.n).map(|j| self.fbar(j)).collect()
    }

    /// The source s in [1, n] with fbar(s) = p.
    pub fn fbar_inverse(&self, p: usize) -> usize {
        (1..=self.n).find(|&s| self.fbar(s) == p).expect("fbar is a bijection")
    }

    pub fn is_loopless(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v != i as i64 + 1)
    }

    pub fn loops(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.at(j as i64) == j as i64).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&j| self.at(j as i64) == j as i64 + self.n as i64)
            .collect()
    }

    /// The top cell: f(p) = p + k.
    pub fn top_cell(k: usize, n: usize) -> Self {
        assert!(k <= n, "need k <= n");
        BoundedAffinePermutation {
            n,
            window: (1..=n as i64).map(|p| p + k as i64).collect(),
        }
    }

    pub fn is_top_cell(&self) -> bool {
        let k = self.k() as i64;
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1 + k)
    }

    /// The unique loopless bounded affine permutation over a permutation of
    /// [n]: f(j) = fbar(j) if fbar(j) > j, else fbar(j) + n.
    pub fn lift_loopless(fbar: &[usize]) -> Result<Self, PermError> {
        let n = fbar.len();
        let window = fbar
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let j = i as i64 + 1;
                if (v as i64) > j { v as i64 } else { v as i64 + n as i64 }
            })
            .collect();
        Self::new(window)
    }

    /// Number of affine inversions counted modulo n: pairs p in [n], q > p
    /// with f(p) > f(q). Only q < p + n can contribute.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for p in 1..=self.n as i64 {
            for q in (p + 1)..(p + self.n as i64) {
                if self.at(p) > self.at(q) {
                    count += 1;
                }
            }
        }
        count
    }

    /// f composed with the affine transposition exchanging positions i and
    /// j = i + gap (and all their shifts), for 1 <= i <= n, 0 < gap < n.
    pub fn compose_transposition(&self, i: usize, gap: usize) -> Result<Self, PermError> {
        assert!((1..=self.n).contains(&i) && gap >= 1 && gap < self.n);
        let n = self.n as i64;
        let j = i as i64 + gap as i64;
        let fi = self.at(i as i64);
        let fj = self.at(j);
        let mut w = self.window.clone();
        let mut assign = |pos: i64, val: i64| {
            let r = (pos - 1).rem_euclid(n);
            let d = (pos - 1 - r) / n;
            w[r as usize] = val - d * n;
        };
        assign(i as i64, fj);
        assign(j, fi);
        Self::new(w)
    }

    /// Relabels p -> p+1 cyclically: the conjugate window.
    pub fn shift_conjugate(&self) -> Self {
        let _n = self.n as i64;
        let mut w = vec![0i64; self.n];
        for j in 1..=self.n as i64 {
            w[j as usize - 1] = self.at(j - 1) + 1;
        }
        Self::new(w).expect("conjugate of a valid window is valid")
    }

    /// The f-crossings: unordered residue pairs {p, q} (of strand targets)
    /// whose strands cross. Two strands cross when some pair of lifts
    /// interleaves within one period: i < j <= f(i) < f(j) <= i + n.
    pub fn f_crossings(&self) -> Result<BTreeSet<(usize, usize)>, PermError> {
        if let Some(&j) = self.loops().first() {
            return Err(PermError::HasLoop { j });
        }
        let n = self.n as i64;
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in (i + 1)..(i + n) {
                let fi = self.at(i);
                let fj = self.at(j);
                if j <= fi && fi < fj && fj <= i + n {
                    let p = ((fi - 1).rem_euclid(n) + 1) as usize;
                    let q = ((fj - 1).rem_euclid(n) + 1) as usize;
                    debug_assert_ne!(p, q);
                    out.insert(if p < q { (p, q) } else { (q, p) });
                }
            }
        }
        Ok(out)
    }

    /// Connectivity of the union of the n strand arrows. Crossings connect
    /// strands; tangency at a shared boundary vertex (the strand into b_m
    /// touching the strand out of b_m) also connects but does not count as a
    /// crossing.
    pub fn connected_strand_diagram(&self) -> Result<bool, PermError> {
        let crossings = self.f_crossings()?;
        let n = self.n;
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        let union = |dsu: &mut Vec<usize>, a: usize, b: usize| {
            let ra = find(dsu, a);
            let rb = find(dsu, b);
            if ra != rb {
                dsu[ra] = rb;
            }
        };
        for &(p, q) in &crossings {
            union(&mut dsu, p - 1, q - 1);
        }
        for m in 1..=n {
            // strand labeled m ends at b_m; the strand leaving b_m is the one
            // labeled fbar(m).
            union(&mut dsu, m - 1, self.fbar(m) - 1);
        }
        let root = find(&mut dsu, 0);
        Ok((1..n).all(|x| find(&mut dsu, x) == root))
    }

    pub fn is_vacuum(&self) -> bool {
        let n = self.n as i64;
        (1..=self.n as i64).all(|j| {
            let v = self.at(j);
            v == j || v == j + n
        })
    }

    fn active_positions(&self) -> Vec<usize> {
        let n = self.n as i64;
        (1..=self.n)
            .filter(|&j| {
                let v = self.at(j as i64);
                v != j as i64 && v != j as i64 + n
            })
            .collect()
    }

    /// Bridge candidates for the upward peel: pairs of cyclically adjacent
    /// active positions (i, i + gap) where f ascends and the swap stays
    /// bounded. Only loops and coloops lie strictly between the pair, so the
    /// bridge spans nothing but isolated boundary vertices and bare leaves.
    fn peel_candidates(&self) -> Vec<(usize, usize)> {
        let n = self.n as i64;
        let active = self.active_positions();
        let m = active.len();
        if m < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for a in 0..m {
            let i = active[a];
            let nxt = active[(a + 1) % m] as i64;
            let j = if nxt > i as i64 { nxt } else { nxt + n };
            let gap = (j - i as i64) as usize;
            if gap >= self.n {
                continue;
            }
            let fi = self.at(i as i64);
            let fj = self.at(j);
            // ascent, and the swap keeps both values in their bounds
            if fi < fj && fj <= i as i64 + n && fi >= j {
                out.push((i, gap));
            }
        }
        out
    }

    /// Peels f up to a vacuum (all loops and coloops) through
    /// length-increasing transpositions of cyclically adjacent active
    /// positions. Returns the vacuum and the peeled (position, gap) pairs in
    /// peel order; replaying bridges at those pairs in reverse rebuilds f.
    ///
    /// `leftmost` selects which candidate is tried first and gives two
    /// genuinely different realizations downstream. A depth-first search
    /// backs out of dead ends.
    pub fn peel_to_vacuum(&self, leftmost: bool) -> Result<(Self, Vec<(usize, usize)>), PermError> {
        fn dfs(
            f: &BoundedAffinePermutation,
            leftmost: bool,
            acc: &mut Vec<(usize, usize)>,
        ) -> Option<BoundedAffinePermutation> {
            if f.is_vacuum() {
                return Some(f.clone());
            }
            let mut cands = f.peel_candidates();
            if !leftmost {
                cands.reverse();
            }
            for (i, gap) in cands {
                let h = match f.compose_transposition(i, gap) {
                    Ok(h) => h,
                    Err(_) => continue,
                };
                debug_assert_eq!(h.length(), f.length() + 1, "peel must increase length");
                acc.push((i, gap));
                if let Some(v) = dfs(&h, leftmost, acc) {
                    return Some(v);
                }
                acc.pop();
            }
            None
        }
        let mut acc = Vec::new();
        let vac = dfs(self, leftmost, &mut acc).ok_or(PermError::DisconnectedDiagram)?;
        Ok((vac, acc))
    }
}

// ---------------------------------------------------------------------------
// n-periodic interval partitions
// ---------------------------------------------------------------------------

/// An n-periodic partition of the integers into intervals of size < n,
/// stored by the blocks of one period. The first stored block contains 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    n: usize,
    /// (start, len) pairs; starts ascending, first start <= 1, consecutive.
    blocks: Vec<(i64, usize)>,
}

impl IntervalPartition {
    /// Builds from the block sizes read off cyclically starting at the block
    /// containing 1, with `offset` the start of that block (offset <= 1).
    pub fn from_starts(n: usize, first_start: i64, sizes: &[usize]) -> Result<Self, PermError> {
        if sizes.iter().sum::<usize>() != n || first_start > 1 || first_start + (sizes[0] as i64) <= 1 {
            return Err(PermError::BadPartition);
        }
        if sizes.iter().any(|&s| s == 0 || s >= n) {
            return Err(PermError::IntervalTooLong { len: *sizes.iter().max().unwrap(), n });
        }
        let mut blocks = Vec::new();
        let mut s = first_start;
        for &len in sizes {
            blocks.push((s, len));
            s += len as i64;
        }
        Ok(IntervalPartition { n, blocks })
    }

    /// Builds from explicit blocks given as integer sets (one period's
    /// worth, in any order).
    pub fn from_blocks(n: usize, blocks: &[Vec<i64>]) -> Result<Self, PermError> {
        let mut intervals: Vec<(i64, usize)> = Vec::new();
        for b in blocks {
            if b.is_empty() {
                return Err(PermError::BadPartition);
            }
            let mut s = b.clone();
            s.sort_unstable();
            for w in s.windows(2) {
                if w[1] != w[0] + 1 {
                    return Err(PermError::BadPartition);
                }
            }
            if s.len() >= n {
                return Err(PermError::IntervalTooLong { len: s.len(), n });
            }
            intervals.push((s[0], s.len()));
        }
        if intervals.iter().map(|&(_, l)| l).sum::<usize>() != n {
            return Err(PermError::BadPartition);
        }
        // Shift each block so its start lies in a single period window
        // anchored at the block containing 1, then sort and check
        // consecutiveness.
        let ni = n as i64;
        let mut normalized: Vec<(i64, usize)> = intervals
            .iter()
            .map(|&(s, l)| {
                let shift = (s - 1).div_euclid(ni);
                (s - shift * ni, l) // start in [1, n]
            })
            .collect();
        normalized.sort_unstable();
        // The block covering 1 may be the one wrapping from the top.
        let last = *normalized.last().unwrap();
        let mut ordered = Vec::new();
        if last.0 + last.1 as i64 > ni + 1 {
            ordered.push((last.0 - ni, last.1));
            ordered.extend_from_slice(&normalized[..normalized.len() - 1]);
        } else {
            ordered = normalized;
        }
        let mut s = ordered[0].0;
        if s > 1 || s + ordered[0].1 as i64 <= 1 {
            return Err(PermError::BadPartition);
        }
        for &(start, len) in &ordered {
            if start != s {
                return Err(PermError::BadPartition);
            }
            s += len as i64;
        }
        if s != ordered[0].0 + ni {
            return Err(PermError::BadPartition);
        }
        Ok(IntervalPartition { n, blocks: ordered })
    }

    pub fn all_singletons(n: usize) -> Self {
        IntervalPartition { n, blocks: (1..=n as i64).map(|s| (s, 1)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(i64, usize)] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing x, as its canonical (start, len) shifted so the
    /// interval actually contains x.
    pub fn block_of(&self, x: i64) -> (i64, usize) {
        let ni = self.n as i64;
        for &(s, l) in &self.blocks {
            let shift = (x - s).div_euclid(ni);
            let s2 = s + shift * ni;
            if x >= s2 && x < s2 + l as i64 {
                return (s2, l);
            }
        }
        unreachable!("blocks cover the integers")
    }

    /// Whether x and y lie in the same block modulo the period.
    pub fn same_block_class(&self, x: i64, y: i64) -> bool {
        let (s, l) = self.block_of(x);
        let y3 = s + (y - s).rem_euclid(self.n as i64);
        y3 < s + l as i64
    }

    /// Whether x and y lie in the same block as actual integers.
    pub fn same_block(&self, x: i64, y: i64) -> bool {
        let (s, l) = self.block_of(x);
        y >= s && y < s + l as i64
    }

    /// The cyclic interval [p, q) in [n]-labels of each block.
    pub fn cyclic_blocks(&self) -> Vec<(usize, usize)> {
        let ni = self.n as i64;
        self.blocks
            .iter()
            .map(|&(s, l)| {
                let p = ((s - 1).rem_euclid(ni) + 1) as usize;
                let q = ((s + l as i64 - 1 - 1).rem_euclid(ni) + 1) as usize;
                (p, q) // block is the cyclic interval [p, q] inclusive
            })
            .collect()
    }

    /// Generic partitions satisfy |B| <= min(k-1, n-k) for all blocks.
    pub fn is_generic(&self, k: usize) -> bool {
        let bound = std::cmp::min(k.saturating_sub(1), self.n - k);
        self.blocks.iter().all(|&(_, l)| l <= bound)
    }

    /// The special block is the one containing both n and n+1, if any.
    pub fn special_block(&self) -> Option<(i64, usize)> {
        let (s, l) = self.block_of(self.n as i64);
        let contains = |x: i64| x >= s && x < s + l as i64;
        (contains(self.n as i64) && contains(self.n as i64 + 1)).then_some((s, l))
    }

    /// Relabels x -> x + shift.
    pub fn shifted(&self, shift: i64) -> Self {
        let blocks: Vec<Vec<i64>> = self
            .blocks
            .iter()
            .map(|&(s, l)| (0..l as i64).map(|d| s + d + shift).collect())
            .collect();
        Self::from_blocks(self.n, &blocks).expect("shift preserves partitions")
    }
}

/// The unique loopless g_B of maximal length with g(B - k) = B for every
/// block, built per the explicit interval construction: the ov_R largest
/// elements of A step by +1, the ov_L smallest step by +n, the middle is
/// order-reversed onto the middle of B.
pub fn g_from_partition(part: &IntervalPartition, k: usize) -> Result<Bap, PermError> {
    let n = part.n();
    let ni = n as i64;
    let mut window = vec![0i64; n];
    let mut assign = |p: i64, v: i64| {
        let r = (p - 1).rem_euclid(ni);
        let d = (p - 1 - r) / ni;
        window[r as usize] = v - d * ni;
    };
    for &(bs, len) in part.blocks() {
        let l = len as i64;
        let a_start = bs - k as i64;
        // ov_L = |(A + n) cap B|, ov_R = |(A + 1) cap B| for intervals of
        // equal length: overlap of [a_start + n, ..] resp. [a_start + 1, ..]
        // with [bs, bs + l).
        let overlap = |x: i64| -> i64 {
            let lo = x.max(bs);
            let hi = (x + l).min(bs + l);
            (hi - lo).max(0)
        };
        let ov_l = overlap(a_start + ni);
        let ov_r = overlap(a_start + 1);
        if ov_l + ov_r > l {
            return Err(PermError::BadPartition);
        }
        // A_L: smallest ov_l, A_R: largest ov_r, A_M: middle.
        for t in 0..ov_l {
            let p = a_start + t;
            assign(p, p + ni);
        }
        for t in 0..ov_r {
            let p = a_start + l - 1 - t;
            assign(p, p + 1);
        }
        // Middle: order-reversing onto B_M = B minus B_L (bottom ov_r) and
        // B_R (top ov_l).
        let m = l - ov_l - ov_r;
        for t in 0..m {
            let p = a_start + ov_l + t; // ascending through A_M
            let v = bs + ov_r + (m - 1 - t); // descending through B_M
            assign(p, v);
        }
    }
    Bap::new(window)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_validation() {
        assert!(Bap::new(vec![3, 4, 5, 6]).is_ok());
        let f = Bap::new(vec![3, 4, 5, 6]).unwrap();
        assert_eq!(f.k(), 2);
        assert!(matches!(Bap::new(vec![0, 4, 5, 6]), Err(PermError::OutOfBounds { .. })));
        assert!(matches!(Bap::new(vec![3, 4, 5, 7]), Err(PermError::NotBijective)));
        // A residue-bijective window automatically has a sum divisible by n,
        // so NotBijective subsumes BadSum on malformed inputs.
        assert!(matches!(Bap::new(vec![2, 4, 5, 6]), Err(PermError::NotBijective)));
        let id = Bap::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(id.k(), 0);
    }

    #[test]
    fn lengths() {
        assert_eq!(Bap::top_cell(2, 4).length(), 0);
        assert_eq!(Bap::new(vec![4, 3, 6, 5]).unwrap().length(), 2);
    }

    #[test]
    fn lift_examples() {
        assert_eq!(Bap::lift_loopless(&[2, 1]).unwrap().window(), &[2, 3]);
        assert_eq!(Bap::lift_loopless(&[1, 2, 3]).unwrap().window(), &[4, 5, 6]);
        assert_eq!(Bap::lift_loopless(&[3, 4, 1, 2]).unwrap(), Bap::top_cell(2, 4));
    }

    #[test]
    fn crossings_smallest_cases() {
        // n = 2 swap: single crossing {1,2}.
        let f = Bap::new(vec![2, 3]).unwrap();
        let c = f.f_crossings().unwrap();
        assert_eq!(c, BTreeSet::from([(1, 2)]));
        assert!(f.connected_strand_diagram().unwrap());

        // Top cell (2,4): every pair at cyclic distance 1 or 2 crosses.
        let f = Bap::top_cell(2, 4);
        let c = f.f_crossings().unwrap();
        let expect: BTreeSet<(usize, usize)> =
            [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4)].into_iter().collect();
        assert_eq!(c, expect);

        // Two disjoint 2-cycles: crossings {1,2} and {3,4}; disconnected.
        let f = Bap::lift_loopless(&[2, 1, 4, 3]).unwrap();
        let c = f.f_crossings().unwrap();
        assert_eq!(c, BTreeSet::from([(1, 2), (3, 4)]));
        assert!(!f.connected_strand_diagram().unwrap());
    }

    #[test]
    fn crossings_require_loopless() {
        let f = Bap::new(vec![1, 2]).unwrap();
        assert!(matches!(f.f_crossings(), Err(PermError::HasLoop { j: 1 })));
    }

    #[test]
    fn g_from_partition_pairs() {
        // n=4, k=2, blocks {1,2},{3,4} -> window (4,3,6,5).
        let part = IntervalPartition::from_blocks(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let g = g_from_partition(&part, 2).unwrap();
        assert_eq!(g.window(), &[4, 3, 6, 5]);

        // All singletons give the top cell.
        let part = IntervalPartition::all_singletons(4);
        let g = g_from_partition(&part, 2).unwrap();
        assert_eq!(g, Bap::top_cell(2, 4));
    }

    #[test]
    fn peel_reaches_vacuum() {
        for f in [
            Bap::top_cell(2, 4),
            Bap::top_cell(3, 5),
            Bap::new(vec![4, 3, 6, 5]).unwrap(),
            Bap::new(vec![5, 4, 3, 6]).unwrap(),
        ] {
            for leftmost in [true, false] {
                let (vac, peeled) = f.peel_to_vacuum(leftmost).unwrap();
                assert!(vac.is_vacuum());
                assert_eq!(peeled.len(), vac.length() - f.length());
                let mut g = vac;
                for &(i, gap) in peeled.iter().rev() {
                    g = g.compose_transposition(i, gap).unwrap();
                }
                assert_eq!(g, f);
            }
        }
    }

    #[test]
    fn partition_block_lookup() {
        let part = IntervalPartition::from_blocks(4, &[vec![3, 4, 5], vec![2]]).unwrap();
        assert_eq!(part.block_of(1), (-1, 3)); // block {3,4,5} shifted down contains 1
        assert_eq!(part.block_of(4), (3, 3));
        assert!(part.special_block().is_some());
    }
}
