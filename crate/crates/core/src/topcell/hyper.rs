//! The second hypersimplex and the top-cell maps: phi reads the side-length
//! ratios of the (possibly degenerate) inscribed polygon of group points
//! off a compactification point; preimage_of builds a canonical section of
//! phi from a hypersimplex point and nested seed ratios; psi composes the
//! section with the extended measurement.

use super::polygon::solve_inscribed_polygon;
use crate::error::CritError;
use crate::num::Coeff;
use crate::perm::{Bap, IntervalPartition};
use crate::plabic::measure::GrassmannPoint;
use crate::poset::{
    point_partition_finite, point_partition_whole, AffinePoset, CompPoint, Tube, Tubing,
    TubingData,
};
use std::collections::BTreeMap;

const ZERO_GAP: f64 = 1e-12;

pub fn validate_hypersimplex(n: usize, y: &[f64]) -> Result<(), CritError> {
    if y.len() != n {
        return Err(CritError::NotInHypersimplex(format!(
            "expected {n} coordinates, got {}",
            y.len()
        )));
    }
    let sum: f64 = y.iter().sum();
    if (sum - 2.0).abs() > 1e-9 {
        return Err(CritError::NotInHypersimplex(format!("coordinates sum to {sum}, not 2")));
    }
    if let Some(bad) = y.iter().find(|&&v| !(-1e-12..=1.0 + 1e-9).contains(&v)) {
        return Err(CritError::NotInHypersimplex(format!("coordinate {bad} outside [0, 1]")));
    }
    Ok(())
}

/// phi = xi of zeta along the chain (1, ..., n): the side-length vector of
/// the group polygon, normalized to sum two.
pub fn phi<S: Coeff>(point: &CompPoint<S>) -> Result<Vec<f64>, CritError> {
    let n = point.poset().n();
    let chain: Vec<i64> = (1..=n as i64).collect();
    let z = point.zeta(&chain).map_err(CritError::Poset)?;
    let zf: Vec<f64> = z.iter().map(|v| v.to_f64()).collect();
    let total: f64 = zf.iter().sum();
    Ok(zf.into_iter().map(|v| 2.0 * v / total).collect())
}

/// Nested seed ratios for the collided blocks: one vector of strictly
/// positive gap ratios per multi-element block, in order of block minimum.
/// The default is uniform spacing in every block.
#[derive(Debug, Clone, Default)]
pub struct Seed {
    pub ratios: Vec<Vec<f64>>,
}

/// The cyclic block structure of a hypersimplex point: maximal runs of
/// consecutive indices joined by zero gaps.
fn blocks_of(n: usize, y: &[f64]) -> Vec<Vec<i64>> {
    let nonzero: Vec<usize> = (0..n).filter(|&i| y[i] > ZERO_GAP).collect();
    // Gap i (0-based) separates point i+1 from i+2; a block ends at each
    // nonzero gap. Blocks are canonicalized with minimum in [1, n] and
    // listed in cyclic order of their closing gaps.
    let mut blocks = Vec::new();
    let m = nonzero.len();
    let ni = n as i64;
    for j in 0..m {
        let prev_end = nonzero[(j + m - 1) % m] as i64 + 1;
        let end = nonzero[j] as i64 + 1;
        let start = prev_end + 1;
        let block: Vec<i64> = (start..=if end >= start { end } else { end + ni }).collect();
        let shift = (block[0] - 1).div_euclid(ni);
        blocks.push(block.into_iter().map(|x| x - shift * ni).collect());
    }
    blocks
}

/// Lays the blocks consecutively over one period window starting at the
/// first block's canonical instance, assigning each instance its group
/// value. Returns the (integer -> value) assignment over the tile.
fn tile_values(n: usize, blocks: &[Vec<i64>], values: &[f64]) -> BTreeMap<i64, f64> {
    let ni = n as i64;
    let start = blocks[0][0];
    let mut out = BTreeMap::new();
    let mut cursor = start;
    for (j, b) in blocks.iter().enumerate() {
        // Blocks are listed in cyclic order, so the next block's start is
        // congruent to the cursor and the shift is exact.
        let shift = cursor - b[0];
        debug_assert_eq!(shift.rem_euclid(ni), 0, "blocks tile consecutively");
        for &p in b {
            out.insert(p + shift, values[j]);
        }
        cursor += b.len() as i64;
    }
    debug_assert_eq!(cursor, start + ni, "blocks tile one period");
    out
}

/// A canonical section of phi: groups the zero gaps into collided blocks,
/// solves the group polygon, and spreads each block by the seed ratios.
pub fn preimage_of(n: usize, y: &[f64], seed: Option<&Seed>) -> Result<CompPoint<f64>, CritError> {
    validate_hypersimplex(n, y)?;
    let poset = AffinePoset::total_order(n);
    let ni = n as i64;
    let blocks = blocks_of(n, y);
    let m = blocks.len();
    if m < 2 {
        return Err(CritError::NotInHypersimplex(
            "a hypersimplex point has at least two positive coordinates".into(),
        ));
    }
    // Side j separates block j from block j+1: the gap at block j's end.
    let sides: Vec<f64> =
        blocks.iter().map(|b| y[((b.last().unwrap() - 1).rem_euclid(ni)) as usize]).collect();

    let mut tubes: Vec<Tube> = Vec::new();
    let mut data: TubingData<f64> = BTreeMap::new();
    let seed_for_block = |bi: usize, len: usize| -> Result<Vec<f64>, CritError> {
        let gaps = match seed {
            None => vec![1.0; len - 1],
            Some(s) => {
                let multi: Vec<usize> = blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.len() > 1)
                    .map(|(i, _)| i)
                    .collect();
                let pos = multi.iter().position(|&i| i == bi).expect("multi-element block");
                let r = s.ratios.get(pos).ok_or_else(|| {
                    CritError::BadSeed(format!("missing ratios for block {pos}"))
                })?;
                if r.len() != len - 1 || r.iter().any(|&x| x <= 0.0) {
                    return Err(CritError::BadSeed(format!(
                        "block of size {len} needs {} positive ratios",
                        len - 1
                    )));
                }
                r.clone()
            }
        };
        Ok(gaps)
    };

    // Blocks of size >= 2 are tubes carrying their seed data.
    for (bi, b) in blocks.iter().enumerate() {
        if b.len() < 2 {
            continue;
        }
        let tube = Tube::new(&poset, b).map_err(CritError::Poset)?;
        let gaps = seed_for_block(bi, b.len())?;
        let mut pos = vec![0.0];
        for g in &gaps {
            pos.push(pos.last().unwrap() + g);
        }
        let span = *pos.last().unwrap();
        let mean = pos.iter().sum::<f64>() / pos.len() as f64;
        let datum: Vec<f64> = pos.iter().map(|p| (p - mean) / span).collect();
        data.insert(tube.clone(), datum);
        tubes.push(tube);
    }

    let ones = y.iter().filter(|&&v| v >= 1.0 - ZERO_GAP).count();
    let whole: Vec<f64>;
    if m == 2 {
        // Two groups of points at a free relative position: place them a
        // quarter circle apart.
        debug_assert_eq!(ones, 2);
        let theta_ext = tile_values(n, &blocks, &[0.0, std::f64::consts::FRAC_PI_2]);
        whole = collapse_to_window(n, &theta_ext);
    } else if ones > 0 {
        // Degenerate polygon: every point collides; the maximal proper tube
        // carries the line positions, anchored right after the unique
        // maximal gap so the positions increase along the chain.
        let imax = sides
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        // Reorder blocks to start right after the max gap; the line
        // positions then increase along the tile and the max side is the
        // return gap.
        let order: Vec<usize> = (1..=m).map(|j| (imax + j) % m).collect();
        let reordered: Vec<Vec<i64>> = order.iter().map(|&j| blocks[j].clone()).collect();
        let mut positions = vec![0.0];
        for &j in order.iter().take(m - 1) {
            positions.push(positions.last().unwrap() + sides[j]);
        }
        let tiled = tile_values(n, &reordered, &positions);
        let start = reordered[0][0];
        let elems: Vec<i64> = (start..start + ni).collect();
        let tau = Tube::new(&poset, &elems).map_err(CritError::Poset)?;
        let vals: Vec<f64> = tau
            .elems()
            .iter()
            .map(|&e| {
                tiled
                    .iter()
                    .find(|(&p, _)| (p - e).rem_euclid(ni) == 0)
                    .map(|(_, &v)| v)
                    .expect("position recorded for every residue")
            })
            .collect();
        let span = vals.iter().cloned().fold(f64::MIN, f64::max)
            - vals.iter().cloned().fold(f64::MAX, f64::min);
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let datum: Vec<f64> = vals.iter().map(|v| (v - mean) / span).collect();
        data.insert(tau.clone(), datum);
        tubes.push(tau);
        // All points collide at one spot on the circle.
        let theta_ext: BTreeMap<i64, f64> = (start..start + ni).map(|p| (p, 0.0)).collect();
        whole = collapse_to_window(n, &theta_ext);
    } else {
        // Circular polygon: group angles are half the central angles.
        let poly = solve_inscribed_polygon(&sides)?;
        let angles = poly.vertex_angles().expect("nondegenerate polygon");
        let halved: Vec<f64> = angles.iter().map(|a| a / 2.0).collect();
        let theta_ext = tile_values(n, &blocks, &halved);
        whole = collapse_to_window(n, &theta_ext);
    }

    let tubing = Tubing::new(&poset, tubes).map_err(CritError::Poset)?;
    CompPoint::new(poset, tubing, whole, data).map_err(CritError::Poset)
}

/// Converts extended angle assignments (over one period window of actual
/// integers) into the residue vector with theta_1 = 0.
fn collapse_to_window(n: usize, theta_ext: &BTreeMap<i64, f64>) -> Vec<f64> {
    let ni = n as i64;
    let mut theta = vec![f64::NAN; n];
    for (&p, &v) in theta_ext {
        let r = (p - 1).rem_euclid(ni);
        let d = (p - 1 - r) / ni;
        theta[r as usize] = v - d as f64 * std::f64::consts::PI;
    }
    let base = theta[0];
    theta.into_iter().map(|t| t - base).collect()
}

/// psi(y) = the extended measurement of the canonical section, for the top
/// cell f_{k,n}. Changing the seed does not change the result.
pub fn psi(
    k: usize,
    n: usize,
    y: &[f64],
    seed: Option<&Seed>,
) -> Result<GrassmannPoint<f64>, CritError> {
    let f = Bap::top_cell(k, n);
    let point = preimage_of(n, y, seed)?;
    crate::critical::measb(&f, &point, None)
}

/// The interval partition of collided groups at a compactification point
/// over the total order, normalized so that k and k+1 land in different
/// blocks. Returns the partition and the applied relabeling shift.
pub fn grouped_partition<S: Coeff>(
    point: &CompPoint<S>,
    k: usize,
) -> Result<(IntervalPartition, i64), CritError> {
    let poset = point.poset();
    let n = poset.n();
    let raw = raw_partition_blocks(point);
    let part = IntervalPartition::from_blocks(n, &raw).map_err(CritError::Perm)?;
    for s in 0..n as i64 {
        let shifted = part.shifted(s);
        let (bs, bl) = shifted.block_of(k as i64);
        let inside = (k as i64 + 1) >= bs && (k as i64 + 1) < bs + bl as i64;
        if !inside {
            return Ok((shifted, s));
        }
    }
    Err(CritError::BranchUnavailable)
}

/// The group blocks before normalization: the partition of the minimal
/// size-n member (the maximal proper tube when present, the whole poset
/// otherwise).
pub fn raw_partition_blocks<S: Coeff>(point: &CompPoint<S>) -> Vec<Vec<i64>> {
    let poset = point.poset();
    let n = poset.n();
    let tau = point.tubing().tubes.iter().find(|t| t.len() == n);
    match tau {
        Some(t) => point_partition_finite(poset, t, point.datum(t).expect("member datum")),
        None => point_partition_whole(poset, point.whole()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::projective_distance;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hypersimplex_point(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        loop {
            let mut y: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let s: f64 = y.iter().sum();
            for v in y.iter_mut() {
                *v *= 2.0 / s;
            }
            if y.iter().all(|&v| v < 1.0) {
                return y;
            }
        }
    }

    #[test]
    fn barycenter_roundtrip() {
        let n = 5;
        let y = vec![2.0 / n as f64; n];
        let p = preimage_of(n, &y, None).unwrap();
        let back = phi(&p).unwrap();
        assert!(projective_distance(&back, &y) < 1e-12);
        assert!(p.tubing().is_empty());
    }

    #[test]
    fn random_interior_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [4usize, 5, 6] {
            for _ in 0..50 {
                let y = random_hypersimplex_point(n, &mut rng);
                let p = preimage_of(n, &y, None).unwrap();
                let back = phi(&p).unwrap();
                for i in 0..n {
                    assert!((back[i] - y[i]).abs() < 1e-10, "n={n} coord {i}");
                }
            }
        }
    }

    #[test]
    fn example_vertex_point() {
        // y = (0, 0, 1, 1): points 1, 2, 3 collide; the seed ratio is free.
        let y = vec![0.0, 0.0, 1.0, 1.0];
        for seed in [
            None,
            Some(Seed { ratios: vec![vec![1.0, 2.0]] }),
            Some(Seed { ratios: vec![vec![5.0, 1.0]] }),
        ] {
            let p = preimage_of(4, &y, seed.as_ref()).unwrap();
            let back = phi(&p).unwrap();
            for i in 0..4 {
                assert!((back[i] - y[i]).abs() < 1e-10);
            }
            assert_eq!(p.tubing().len(), 1);
        }
    }

    #[test]
    fn degenerate_coordinate_one() {
        // y_1 = 1 with three groups: all points collide onto a line.
        let y = vec![1.0, 0.6, 0.4, 0.0];
        let p = preimage_of(4, &y, None).unwrap();
        let back = phi(&p).unwrap();
        for i in 0..4 {
            assert!((back[i] - y[i]).abs() < 1e-10, "coord {i}: {} vs {}", back[i], y[i]);
        }
        // The tubing contains a maximal proper tube.
        assert!(p.tubing().tubes.iter().any(|t| t.len() == 4));
    }

    #[test]
    fn grouped_partition_of_vertex() {
        let y = vec![0.0, 0.0, 1.0, 1.0];
        let p = preimage_of(4, &y, None).unwrap();
        let (part, shift) = grouped_partition(&p, 2).unwrap();
        // Blocks {1,2,3} and {4} relabeled so 2 and 3 separate.
        assert_eq!(part.num_blocks(), 2);
        let (bs, bl) = part.block_of(2);
        assert!(!(3 >= bs && 3 < bs + bl as i64), "2 and 3 split, shift {shift}");
    }
}
