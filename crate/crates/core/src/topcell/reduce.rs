//! Reduction of pruned top-cell limit graphs: black vertices are classified
//! by how many distinct collision blocks their strand endpoints meet, and
//! the graph is reduced to a realization of the interval-partition
//! permutation by leaf removals or by contractions, depending on which side
//! of the special block is free.

use super::graph::TopCellGraph;
use crate::error::{CritError, PlabicError};
use crate::num::Coeff;
use crate::perm::IntervalPartition;
use crate::plabic::graph::{Color, PlabicGraph, VertexId};
use crate::plabic::measure::EdgeWeighting;
use crate::plabic::moves::{apply_move, Move};
use crate::plabic::strands::StrandInfo;
use std::collections::BTreeMap;

/// The block class of a boundary label under the partition.
fn block_class(part: &IntervalPartition, x: usize) -> i64 {
    let (s, _) = part.block_of(x as i64);
    s.rem_euclid(part.n() as i64)
}

/// Type of a black vertex: the number of distinct partition blocks met by
/// its strand endpoints {S, E, NW}.
pub fn classify_black_vertices(
    tc: &TopCellGraph,
    info: &StrandInfo,
    part: &IntervalPartition,
) -> Result<BTreeMap<VertexId, u8>, PlabicError> {
    let coords = tc.black_endpoints(info)?;
    let mut out = BTreeMap::new();
    for (v, c) in coords {
        let mut classes = vec![
            block_class(part, c.s),
            block_class(part, c.e),
            block_class(part, c.nw),
        ];
        classes.sort_unstable();
        classes.dedup();
        out.insert(v, classes.len() as u8);
    }
    Ok(out)
}

/// Applies the reduction of a pruned weighted top-cell graph dictated by
/// the normalized partition: no special block means nothing to do; with a
/// special block, remove the type-(1) rectangle by leaf removals when k is
/// outside the block, else contract away the edges at type-(1,2) blacks.
pub fn reduce_limit_graph<S: Coeff>(
    pruned: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    tc: &TopCellGraph,
    info: &StrandInfo,
    part: &IntervalPartition,
) -> Result<(PlabicGraph, EdgeWeighting<S>), CritError> {
    let k = tc.k;
    let special = match part.special_block() {
        None => return Ok((pruned.clone(), wt.clone())),
        Some(b) => b,
    };
    let contains = |x: usize| {
        let (s, l) = special;
        let xi = x as i64;
        let x2 = s + (xi - s).rem_euclid(part.n() as i64);
        x2 < s + l as i64
    };
    let k_in = contains(k);
    let k1_in = contains(k + 1);
    if k_in && k1_in {
        return Err(CritError::BranchUnavailable);
    }
    let types = classify_black_vertices(tc, info, part)?;

    let mut g = pruned.clone();
    let mut w = wt.clone();
    // The grid realization is the mirror image of the textbook drawing, so
    // the free side of the special block selects the opposite procedure:
    // k+1 outside the block enables the leaf-removal cascade, k outside
    // enables the contraction cascade.
    let use_removal = !k1_in;
    if use_removal {
        // Removal branch: iterated leaf removals of degree-1 whites hanging
        // on type-(1) blacks.
        loop {
            let site = g.interior_vertices().find(|&v| {
                g.color(v) == Color::White && g.degree(v) == 1 && {
                    let b = g.other_end(g.rotation(v)[0], v);
                    types.get(&b) == Some(&1)
                }
            });
            match site {
                Some(leaf) => {
                    let (g2, w2) = apply_move(&g, &w, &Move::LeafRemoval { leaf })?;
                    g = g2;
                    w = w2;
                }
                None => break,
            }
        }
        let leftover = g
            .interior_vertices()
            .any(|v| g.color(v) == Color::Black && types.get(&v) == Some(&1));
        if leftover {
            return Err(CritError::Plabic(PlabicError::BadSpec(
                "removal branch stalled before deleting all type-(1) vertices".into(),
            )));
        }
    } else {
        // Contraction branch: parallel-reduce and contract until every
        // type-(1, 2) black is gone.
        loop {
            let targets: Vec<VertexId> = g
                .interior_vertices()
                .filter(|v| {
                    g.color(*v) == Color::Black && matches!(types.get(v), Some(&1) | Some(&2))
                })
                .collect();
            if targets.is_empty() {
                break;
            }
            let mut progressed = false;
            for b in targets {
                // A parallel pair at b reduces first.
                let rot = g.rotation(b).to_vec();
                let mut pair = None;
                'outer: for (i, &e1) in rot.iter().enumerate() {
                    for &e2 in rot.iter().skip(i + 1) {
                        let mut a1 = g.edge_ends(e1);
                        let mut a2 = g.edge_ends(e2);
                        a1.sort_unstable();
                        a2.sort_unstable();
                        if a1 == a2 {
                            pair = Some((e1, e2));
                            break 'outer;
                        }
                    }
                }
                if let Some((e1, e2)) = pair {
                    if let Ok((g2, w2)) =
                        apply_move(&g, &w, &Move::ParallelReduction { e1, e2 })
                    {
                        g = g2;
                        w = w2;
                        progressed = true;
                        break;
                    }
                }
                if g.degree(b) == 2 {
                    if let Ok((g2, w2)) = apply_move(&g, &w, &Move::Contract { vertex: b }) {
                        g = g2;
                        w = w2;
                        progressed = true;
                        break;
                    }
                }
            }
            if !progressed {
                return Err(CritError::Plabic(PlabicError::BadSpec(
                    "contraction branch stalled before removing all type-(1,2) vertices".into(),
                )));
            }
        }
    }
    Ok((g, w))
}

/// Faces removed for one block per the inversion bookkeeping:
/// C(|B|, 2) - C(ov_R, 2) - C(ov_L, 2).
pub fn block_face_budget(part: &IntervalPartition, k: usize) -> usize {
    let n = part.n() as i64;
    let choose2 = |x: i64| (x * (x - 1) / 2) as usize;
    part.blocks()
        .iter()
        .map(|&(bs, len)| {
            let l = len as i64;
            let a_start = bs - k as i64;
            let overlap = |x: i64| -> i64 {
                let lo = x.max(bs);
                let hi = (x + l).min(bs + l);
                (hi - lo).max(0)
            };
            choose2(l) - choose2(overlap(a_start + n)) - choose2(overlap(a_start + 1))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::measb_weights;
    use crate::perm::{g_from_partition, Bap};
    use crate::plabic::measure::boundary_measurement;
    use crate::plabic::{bounded_affine_perm_of, trace_strands};
    use crate::poset::{AffinePoset, CompPoint, Tube, Tubing, TubingData};
    use crate::topcell::{construct_top_cell_graph, preimage_of, Seed};

    #[test]
    fn no_special_block_is_identity() {
        // Blocks {1,2} and {3,4} on (2,4): split at 2|3, no block contains
        // both 4 and 5, so the pruned graph is already reduced for g_B.
        let (before, after) = run_reduction(&[0.0, 1.0, 0.0, 1.0]);
        assert_eq!(before, after, "no surgery without a special block");
    }

    fn run_reduction(y: &[f64]) -> (usize, usize) {
        let n = y.len();
        let k = 2;
        let p = preimage_of(n, y, None).unwrap();
        let f = Bap::top_cell(k, n);
        let tc = construct_top_cell_graph(k, n).unwrap();
        let info = trace_strands(&tc.graph).unwrap();
        let (part, shift) = crate::topcell::grouped_partition(&p, k).unwrap();
        assert_eq!(shift, 0, "fixture partitions are pre-normalized");
        let (g1, w1) = measb_weights(&f, &p, &tc.graph).unwrap();
        let before = boundary_measurement(&g1, &w1).unwrap();
        let (g2, w2) = reduce_limit_graph(&g1, &w1, &tc, &info, &part).unwrap();
        let after = boundary_measurement(&g2, &w2).unwrap();
        assert!(before.distance(&after) < 1e-10, "measurement preserved");
        let gb = g_from_partition(&part, k).unwrap();
        assert_eq!(bounded_affine_perm_of(&g2).unwrap(), gb, "strand permutation is g_B");
        assert_eq!(g2.count_faces(), k * (n - k) + 1 - gb.length(), "reduced face count");
        assert_eq!(block_face_budget(&part, k), gb.length(), "inversion bookkeeping");
        (g1.count_faces(), g2.count_faces())
    }

    #[test]
    fn special_block_removal_branch() {
        // Blocks {3,4,5} and {2} on (2,4): the special block holds k+1 = 3
        // but not k = 2, so type-(1) blacks leave by leaf removals.
        let (before, after) = run_reduction(&[1.0, 1.0, 0.0, 0.0]);
        assert!(before > after, "removal branch must delete faces");
    }

    #[test]
    fn special_block_contraction_branch() {
        // Blocks {4,5,6} and {3} on (2,4): the special block holds k = 2
        // but not k+1 = 3, so type-(1,2) blacks contract away.
        let (before, after) = run_reduction(&[0.0, 1.0, 1.0, 0.0]);
        assert!(before > after, "contraction branch must delete faces");
    }
}
