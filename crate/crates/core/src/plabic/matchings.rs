//! Almost perfect matchings: edge sets using each interior vertex exactly
//! once. Enumeration is plain backtracking over interior vertices in
//! degree-ascending order; desk scale needs nothing faster.

use super::graph::{EdgeId, PlabicGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Sorted boundary indices used by the matching.
    pub boundary: Vec<usize>,
}

/// Exhaustively enumerates almost perfect matchings in a deterministic order
/// (lexicographic by sorted edge ids). The empty return is allowed; callers
/// decide whether that is an error.
pub fn enumerate_matchings(g: &PlabicGraph) -> Vec<Matching> {
    let interior: Vec<VertexId> = {
        let mut v: Vec<VertexId> = g.interior_vertices().collect();
        v.sort_by_key(|&x| (g.degree(x), x));
        v
    };
    let vmax = g.vertex_ids().max().map_or(0, |m| m + 1);
    let mut covered = vec![false; vmax];
    let mut chosen: Vec<EdgeId> = Vec::new();
    let mut out: Vec<Matching> = Vec::new();
    backtrack(g, &interior, &mut covered, &mut chosen, &mut out);
    for m in &mut out {
        m.edges.sort_unstable();
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

fn backtrack(
    g: &PlabicGraph,
    interior: &[VertexId],
    covered: &mut Vec<bool>,
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<Matching>,
) {
    let next = interior.iter().copied().find(|&v| !covered[v]);
    let v = match next {
        Some(v) => v,
        None => {
            let mut boundary: Vec<usize> = (1..=g.n())
                .filter(|&p| covered[g.boundary_vertex(p)])
                .collect();
            boundary.sort_unstable();
            out.push(Matching { edges: chosen.clone(), boundary });
            return;
        }
    };
    for &e in g.rotation(v) {
        let w = g.other_end(e, v);
        if covered[w] {
            continue;
        }
        covered[v] = true;
        covered[w] = true;
        chosen.push(e);
        backtrack(g, interior, covered, chosen, out);
        chosen.pop();
        covered[v] = false;
        covered[w] = false;
    }
}

/// All matchings of a fixed graph have boundary sets of equal size k.
pub fn matching_size_k(matchings: &[Matching]) -> Option<usize> {
    let k = matchings.first()?.boundary.len();
    matchings.iter().all(|m| m.boundary.len() == k).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plabic::graph::path_graph;

    #[test]
    fn path_has_two_matchings() {
        let g = path_graph();
        let ms = enumerate_matchings(&g);
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].boundary, vec![1]);
        assert_eq!(ms[1].boundary, vec![2]);
        assert_eq!(matching_size_k(&ms), Some(1));
    }
}
