//! Grassmann necklaces, positroid membership through Gale orders, weak
//! separation, right-aligned sets, and the arch and square-face
//! certificates for interval-partition permutations.

use crate::error::PermError;
use crate::perm::{Bap, IntervalPartition};

pub type Necklace = Vec<Vec<usize>>;

/// The Grassmann necklace: I_q = { g(p) mod n : p < q <= g(p) }.
pub fn grassmann_necklace(g: &Bap) -> Necklace {
    let n = g.n() as i64;
    let mut out = Vec::with_capacity(g.n());
    for q in 1..=n {
        let mut set: Vec<usize> = ((q - n)..q)
            .filter(|&p| g.at(p) >= q)
            .map(|p| ((g.at(p) - 1).rem_euclid(n) + 1) as usize)
            .collect();
        set.sort_unstable();
        out.push(set);
    }
    out
}

/// I <= J in the Gale order based at q: compare the sorted-by-<=_q
/// sequences elementwise.
pub fn gale_leq(n: usize, q: usize, i_set: &[usize], j_set: &[usize]) -> bool {
    if i_set.len() != j_set.len() {
        return false;
    }
    let pos = |x: usize| (x + n - q) % n;
    let mut a: Vec<usize> = i_set.iter().map(|&x| pos(x)).collect();
    let mut b: Vec<usize> = j_set.iter().map(|&x| pos(x)).collect();
    a.sort_unstable();
    b.sort_unstable();
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// Membership in the positroid of g: the n Gale comparisons against the
/// necklace.
pub fn positroid_contains(g: &Bap, j_set: &[usize]) -> bool {
    let necklace = grassmann_necklace(g);
    positroid_contains_with(&necklace, g.n(), j_set)
}

pub fn positroid_contains_with(necklace: &Necklace, n: usize, j_set: &[usize]) -> bool {
    necklace
        .iter()
        .enumerate()
        .all(|(q0, i_q)| gale_leq(n, q0 + 1, i_q, j_set))
}

/// Weak separation: no cyclic alternation a, b, a, b between I \ J and
/// J \ I. Equivalent to at most two color changes around the circle.
pub fn is_weakly_separated(n: usize, i_set: &[usize], j_set: &[usize]) -> bool {
    let colors: Vec<i8> = (1..=n)
        .map(|x| {
            let in_i = i_set.contains(&x);
            let in_j = j_set.contains(&x);
            match (in_i, in_j) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            }
        })
        .collect();
    let cycle: Vec<i8> = colors.into_iter().filter(|&c| c != 0).collect();
    if cycle.is_empty() {
        return true;
    }
    let mut changes = 0;
    for i in 0..cycle.len() {
        if cycle[i] != cycle[(i + 1) % cycle.len()] {
            changes += 1;
        }
    }
    changes <= 2
}

/// The block of an interval partition as a cyclic [n]-interval (start,
/// exclusive end) in 1-based labels.
fn cyclic_block(part: &IntervalPartition, block: (i64, usize)) -> (usize, usize) {
    let n = part.n() as i64;
    let (s, l) = block;
    let start = ((s - 1).rem_euclid(n) + 1) as usize;
    let end = ((s + l as i64 - 1).rem_euclid(n) + 1) as usize;
    (start, end)
}

fn cyc_interval(n: usize, a: usize, b_excl: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut x = a;
    while x != b_excl {
        out.push(x);
        x = x % n + 1;
        if out.len() > n {
            break;
        }
    }
    out
}

/// Right-aligned sets: inside every block, J is a suffix.
pub fn is_right_aligned(part: &IntervalPartition, j_set: &[usize]) -> bool {
    for &blk in part.blocks() {
        let (start, end) = cyclic_block(part, blk);
        let members = cyc_interval(part.n(), start, end);
        let flags: Vec<bool> = members.iter().map(|x| j_set.contains(x)).collect();
        // Once inside J, stay inside until the block ends.
        for w in flags.windows(2) {
            if w[0] && !w[1] {
                return false;
            }
        }
    }
    true
}

/// The arch certificate at (j, t): both exchange sets
/// J = I_j + t - j and R = I_j + t - r (with r = g(j-1) reduced) lie in
/// the positroid and are weakly separated from the whole necklace.
pub fn arch_certificate(g: &Bap, j: usize, t: usize) -> Result<bool, PermError> {
    let n = g.n();
    let jm1 = (j + n - 2) % n + 1;
    let r = g.fbar(jm1);
    if t == j || j == r || r == t {
        return Err(PermError::DegenerateIndices);
    }
    let necklace = grassmann_necklace(g);
    let i_j = &necklace[j - 1];
    if i_j.contains(&t) || !i_j.contains(&j) || !i_j.contains(&r) {
        return Ok(false);
    }
    let build = |drop: usize| -> Vec<usize> {
        let mut s: Vec<usize> =
            i_j.iter().copied().filter(|&x| x != drop).chain(std::iter::once(t)).collect();
        s.sort_unstable();
        s
    };
    let j_exch = build(j);
    let r_exch = build(r);
    let good = positroid_contains_with(&necklace, n, &j_exch)
        && positroid_contains_with(&necklace, n, &r_exch)
        && necklace.iter().all(|i_q| {
            is_weakly_separated(n, &j_exch, i_q) && is_weakly_separated(n, &r_exch, i_q)
        });
    Ok(good)
}

/// The square-face certificate for four disjoint blocks of a generic
/// partition: builds a right-aligned set of size k+2 meeting all four
/// blocks, and checks that the six double-removals at the blocks' touch
/// points all pass positroid membership and necklace weak separation.
/// Returns the four touch points and the verdict.
pub fn square_face_certificate(
    part: &IntervalPartition,
    block_indices: &[usize; 4],
    k: usize,
) -> Result<([usize; 4], bool), PermError> {
    let n = part.n();
    if k > n - 2 {
        return Err(PermError::BadSquareInput);
    }
    let mut idx = block_indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != 4 || idx.iter().any(|&i| i >= part.num_blocks()) {
        return Err(PermError::BadSquareInput);
    }
    // Grow right-aligned suffixes: start with the last element of each
    // selected block, then extend suffixes round-robin over all blocks
    // until the set has k+2 elements.
    let blocks: Vec<Vec<usize>> = part
        .blocks()
        .iter()
        .map(|&b| {
            let (s, e) = cyclic_block(part, b);
            cyc_interval(n, s, e)
        })
        .collect();
    let mut taken: Vec<usize> = vec![0; blocks.len()];
    for &i in &idx {
        taken[i] = 1;
    }
    let mut total = 4;
    'grow: while total < k + 2 {
        for b in 0..blocks.len() {
            if taken[b] < blocks[b].len() {
                taken[b] += 1;
                total += 1;
                if total == k + 2 {
                    break 'grow;
                }
            }
        }
    }
    let mut i_set: Vec<usize> = Vec::new();
    for (b, &cnt) in blocks.iter().zip(taken.iter()) {
        for x in &b[b.len() - cnt..] {
            i_set.push(*x);
        }
    }
    i_set.sort_unstable();
    let touch: [usize; 4] = std::array::from_fn(|i| {
        let b = block_indices[i];
        blocks[b][blocks[b].len() - taken[b]]
    });

    let g = crate::perm::g_from_partition(part, k)?;
    let necklace = grassmann_necklace(&g);
    let mut ok = true;
    for a in 0..4 {
        for b in (a + 1)..4 {
            let sub: Vec<usize> = i_set
                .iter()
                .copied()
                .filter(|&x| x != touch[a] && x != touch[b])
                .collect();
            if sub.len() != k {
                ok = false;
                continue;
            }
            ok &= positroid_contains_with(&necklace, n, &sub)
                && necklace.iter().all(|i_q| is_weakly_separated(n, &sub, i_q));
        }
    }
    Ok((touch, ok))
}

/// The closed-form necklace of a generic partition: I_j = [j, p) u [r, q)
/// over blocks [p, q) and r in [p, q), with j = p + q - k - r mod n.
pub fn necklace_closed_form(part: &IntervalPartition, k: usize) -> Result<Necklace, PermError> {
    let n = part.n();
    let mut out: Vec<Option<Vec<usize>>> = vec![None; n];
    for &blk in part.blocks() {
        let (p, q_excl) = cyclic_block(part, blk);
        for &r in &cyc_interval(n, p, q_excl) {
            let j = ((p + q_excl + 2 * n - k - r - 1) % n) + 1;
            let mut set = cyc_interval(n, j, p);
            set.extend(cyc_interval(n, r, q_excl));
            set.sort_unstable();
            set.dedup();
            if set.len() != k || out[j - 1].is_some() {
                return Err(PermError::BadPartition);
            }
            out[j - 1] = Some(set);
        }
    }
    Ok(out.into_iter().map(|o| o.expect("every j covered once")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_cell_necklace_is_cyclic_intervals() {
        let f = Bap::top_cell(2, 4);
        let neck = grassmann_necklace(&f);
        assert_eq!(neck[0], vec![1, 2]);
        assert_eq!(neck[1], vec![2, 3]);
        assert_eq!(neck[2], vec![3, 4]);
        assert_eq!(neck[3], vec![1, 4]);
    }

    #[test]
    fn pair_block_necklace() {
        let g = Bap::new(vec![4, 3, 6, 5]).unwrap();
        let neck = grassmann_necklace(&g);
        assert_eq!(neck[0], vec![1, 2]);
        assert_eq!(neck[1], vec![2, 4]);
        assert_eq!(neck[2], vec![3, 4]);
        assert_eq!(neck[3], vec![2, 4]);
    }

    #[test]
    fn top_cell_positroid_is_everything() {
        let f = Bap::top_cell(2, 4);
        for a in 1..=4usize {
            for b in (a + 1)..=4 {
                assert!(positroid_contains(&f, &[a, b]));
            }
        }
    }

    #[test]
    fn pair_block_positroid_matches_matching_oracle() {
        // Ground truth from the unit-weight matching oracle on a reduced
        // realization: Delta_{14} = Delta_{23} = 0, all others positive.
        let g = Bap::new(vec![4, 3, 6, 5]).unwrap();
        let graph = crate::topcell::realize_bridge_graph(&g, true).unwrap();
        let m = crate::plabic::boundary_measurement(
            &graph,
            &crate::plabic::EdgeWeighting::<crate::num::Rat>::unit(&graph),
        )
        .unwrap();
        for (subset, value) in &m.coords {
            use num_traits::Zero;
            assert_eq!(
                positroid_contains(&g, subset),
                !value.is_zero(),
                "Gale vs matchings at {subset:?}"
            );
        }
        assert!(positroid_contains(&g, &[1, 2]));
        assert!(positroid_contains(&g, &[1, 3]));
        assert!(!positroid_contains(&g, &[1, 4]));
        assert!(!positroid_contains(&g, &[2, 3]));
    }

    #[test]
    fn weak_separation_basics() {
        assert!(is_weakly_separated(4, &[1, 2], &[1, 2]));
        assert!(!is_weakly_separated(4, &[1, 3], &[2, 4]));
        assert!(is_weakly_separated(4, &[1, 2], &[2, 3]));
    }

    #[test]
    fn right_aligned_basics() {
        let part = IntervalPartition::from_blocks(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(is_right_aligned(&part, &[2, 3, 6]));
        assert!(!is_right_aligned(&part, &[1, 3, 6])); // hole in a block
        assert!(is_right_aligned(&part, &[1, 2, 3])); // whole block
    }

    #[test]
    fn necklace_closed_form_matches_direct() {
        let part = IntervalPartition::from_blocks(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        for k in 3..=3usize {
            // generic requires |B| <= min(k-1, n-k): k = 3 works with pairs
            assert!(part.is_generic(k));
            let g = crate::perm::g_from_partition(&part, k).unwrap();
            let direct = grassmann_necklace(&g);
            let formula = necklace_closed_form(&part, k).unwrap();
            assert_eq!(direct, formula);
        }
    }

    #[test]
    fn arch_certificate_on_generic_partition() {
        // n = 6, k = 3, pair blocks: blocks disjoint from I_j give arches.
        let part = IntervalPartition::from_blocks(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        let g = crate::perm::g_from_partition(&part, 3).unwrap();
        let neck = grassmann_necklace(&g);
        for j in 1..=6usize {
            for (bs, bl) in part.blocks().iter().map(|&b| cyclic_block(&part, b)) {
                let members = cyc_interval(6, bs, bl);
                if members.iter().any(|x| neck[j - 1].contains(x)) {
                    continue;
                }
                let t = *members.last().unwrap();
                let jm1 = (j + 4) % 6 + 1;
                let r = g.fbar(jm1);
                if t == j || j == r || r == t {
                    continue;
                }
                assert!(
                    arch_certificate(&g, j, t).unwrap(),
                    "arch fails at j={j}, t={t}"
                );
            }
        }
    }

    #[test]
    fn square_certificate_singletons() {
        let part = IntervalPartition::all_singletons(8);
        let (_t, ok) = square_face_certificate(&part, &[0, 2, 4, 6], 4).unwrap();
        assert!(ok);
        let part4 = IntervalPartition::all_singletons(4);
        let (_t, ok) = square_face_certificate(&part4, &[0, 1, 2, 3], 2).unwrap();
        assert!(ok);
        assert!(square_face_certificate(&part4, &[0, 1, 2, 3], 3).is_err());
    }

    #[test]
    fn degenerate_arch_indices_rejected() {
        let f = Bap::top_cell(2, 4);
        // t = j is degenerate.
        assert!(matches!(arch_certificate(&f, 2, 2), Err(PermError::DegenerateIndices)));
    }
}
