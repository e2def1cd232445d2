//! Graph limits: a weighting with zeros determines the limiting graph by
//! dropping its zero-weight edges, provided a matching survives.

use super::graph::PlabicGraph;
use super::matchings::enumerate_matchings;
use super::measure::EdgeWeighting;
use crate::error::PlabicError;
use crate::num::Coeff;

/// Keeps the vertex set and the strictly positive edges. Errors when the
/// pruned graph admits no almost perfect matching, which signals that gauge
/// fixing was needed before the limit.
pub fn graph_limit<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    wt.validate(g, false)?;
    let mut g2 = g.clone();
    let mut w2 = wt.weights.clone();
    for (e, _) in g.live_edges() {
        if wt.get(e).expect("validated").is_zero() {
            g2.remove_edge(e);
            w2.remove(&e);
        }
    }
    g2.validate(false)?;
    if enumerate_matchings(&g2).is_empty() {
        return Err(PlabicError::LimitNoMatching);
    }
    Ok((g2, EdgeWeighting { weights: w2 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Rat;
    use crate::plabic::graph::path_graph;
    use crate::plabic::measure::boundary_measurement;
    use std::collections::BTreeMap;

    #[test]
    fn positive_weights_keep_graph() {
        let g = path_graph();
        let wt = EdgeWeighting::<Rat>::unit(&g);
        let (g2, _) = graph_limit(&g, &wt).unwrap();
        assert_eq!(g2.live_edges().count(), 2);
    }

    #[test]
    fn zero_edge_forces_matching() {
        let g = path_graph();
        let wt = EdgeWeighting {
            weights: BTreeMap::from([(0, Rat::from_int(0)), (1, Rat::from_int(1))]),
        };
        let (g2, w2) = graph_limit(&g, &wt).unwrap();
        let m = boundary_measurement(&g2, &w2).unwrap();
        assert_eq!(m.coord(&[1]), Rat::from_int(0));
        assert_eq!(m.coord(&[2]), Rat::from_int(1));
    }

    #[test]
    fn all_zero_at_vertex_errors() {
        let g = path_graph();
        let wt = EdgeWeighting {
            weights: BTreeMap::from([(0, Rat::from_int(0)), (1, Rat::from_int(0))]),
        };
        assert!(matches!(graph_limit(&g, &wt), Err(PlabicError::LimitNoMatching)));
    }
}
