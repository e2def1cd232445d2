//! Planar bipartite graphs in a disk: construction, strands, matchings,
//! boundary measurements, moves, and limits.

pub mod graph;
pub mod io;
pub mod limit;
pub mod matchings;
pub mod measure;
pub mod moves;
pub mod strands;

pub use graph::{path_graph, Color, Dart, EdgeId, PlabicGraph, VertexId};
pub use limit::graph_limit;
pub use matchings::{enumerate_matchings, matching_size_k, Matching};
pub use measure::{boundary_measurement, EdgeWeighting, GrassmannPoint};
pub use moves::{apply_move, contract_fully, is_contracted, Move};
pub use strands::{double_cover_holds, trace_strands, StrandInfo};

use crate::error::PlabicError;
use crate::perm::Bap;

/// Lifts the strand permutation of G to its bounded affine permutation.
/// Fixed points are resolved through matchings: an index in no matching
/// boundary set is a loop, one in every boundary set is a coloop.
pub fn bounded_affine_perm_of(g: &PlabicGraph) -> Result<Bap, PlabicError> {
    let info = trace_strands(g)?;
    bounded_affine_perm_from_trace(g, &info)
}

pub fn bounded_affine_perm_from_trace(
    g: &PlabicGraph,
    info: &StrandInfo,
) -> Result<Bap, PlabicError> {
    let n = g.n();
    let fixed: Vec<usize> = (1..=n).filter(|&p| info.fbar[p - 1] == p).collect();
    let mut window: Vec<i64> = info.fbar
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let j = i as i64 + 1;
            if (v as i64) > j { v as i64 } else { v as i64 + n as i64 }
        })
        .collect();
    if !fixed.is_empty() {
        let ms = enumerate_matchings(g);
        if ms.is_empty() {
            return Err(PlabicError::NoMatching);
        }
        for p in fixed {
            let uses = ms.iter().filter(|m| m.boundary.contains(&p)).count();
            window[p - 1] = if uses == 0 {
                p as i64 // loop
            } else if uses == ms.len() {
                (p + n) as i64 // coloop
            } else {
                return Err(PlabicError::LoopColoopAmbiguous { index: p });
            };
        }
    }
    Bap::new(window).map_err(|e| PlabicError::BadSpec(format!("strand permutation invalid: {e}")))
}

/// Reducedness: no isolated connected components and exactly
/// k(n-k) + 1 - l(f_G) faces.
pub fn is_reduced(g: &PlabicGraph) -> Result<bool, PlabicError> {
    if g.has_isolated_component() {
        return Ok(false);
    }
    let f = bounded_affine_perm_of(g)?;
    let k = f.k();
    let n = g.n();
    let expected = k * (n - k) + 1 - f.length();
    Ok(g.count_faces() == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_bap() {
        let g = path_graph();
        let f = bounded_affine_perm_of(&g).unwrap();
        assert_eq!(f.window(), &[2, 3]);
        assert_eq!(f.k(), 1);
        assert!(is_reduced(&g).unwrap());
    }

    #[test]
    fn boundary_leaf_resolves_by_matchings() {
        // b1 attached to a white leaf (coloop), plus a path b2 - w - b3.
        use std::collections::BTreeMap;
        let g = PlabicGraph::build(
            3,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::White, None),
                (2, Color::Black, Some(2)),
                (3, Color::White, None),
                (4, Color::Black, Some(3)),
            ],
            vec![(0, [0, 1]), (1, [2, 3]), (2, [3, 4])],
            BTreeMap::from([
                (0, vec![0]),
                (1, vec![0]),
                (2, vec![1]),
                (3, vec![1, 2]),
                (4, vec![2]),
            ]),
        )
        .unwrap();
        let f = bounded_affine_perm_of(&g).unwrap();
        // Index 1 is a coloop (the leaf edge is forced), 2 <-> 3 swap.
        assert_eq!(f.window(), &[4, 3, 5]);
    }
}
