//! Graph realizations: the rectangular grid graph for the top cell and a
//! bridge-stack realization for arbitrary loopless bounded affine
//! permutations.
//!
//! Correctness is enforced by post-conditions (strand permutation, face
//! count, positroid oracle) rather than by reproducing any particular
//! published drawing.

use crate::error::{PermError, PlabicError};
use crate::perm::Bap;
use crate::plabic::graph::{Color, EdgeId, PlabicGraph, VertexId};
use crate::plabic::strands::{strand_endpoints_at, trace_strands, StrandInfo};
use std::collections::BTreeMap;

/// The top-cell grid graph together with its black-vertex coordinates.
///
/// Black interior vertices biject with pairs (E, S) in [k] x [k+1, n]; each
/// owns a dedicated "southwestern" white neighbor, reached by the edge
/// labeled {E, S}.
#[derive(Debug, Clone)]
pub struct TopCellGraph {
    pub graph: PlabicGraph,
    pub k: usize,
    pub n: usize,
    /// (E, S) -> black interior vertex.
    pub blacks: BTreeMap<(usize, usize), VertexId>,
    /// (E, S) -> its dedicated white neighbor.
    pub pair_whites: BTreeMap<(usize, usize), VertexId>,
    /// (E, S) -> the edge joining them (labeled {E, S}).
    pub pair_edges: BTreeMap<(usize, usize), EdgeId>,
}

/// Builds the grid realization of the top cell f_{k,n}.
///
/// Layout: rows E = 1..k exit east through buffer whites; columns
/// S = k+1..n exit south, with column k+1 rightmost. Interior degrees are
/// 2 or 3 and the face count is k(n-k) + 1.
pub fn construct_top_cell_graph(k: usize, n: usize) -> Result<TopCellGraph, PermError> {
    if !(2..=n.saturating_sub(1)).contains(&k) {
        return Err(PermError::OutOfBounds { j: k, value: n as i64 });
    }
    let mut vertices: Vec<(VertexId, Color, Option<usize>)> = Vec::new();
    let mut edges: Vec<(EdgeId, [VertexId; 2])> = Vec::new();
    let mut rotation: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    let mut next_v = 0usize;
    let mut next_e = 0usize;
    let mut new_vertex = |vertices: &mut Vec<_>, color, boundary| {
        let id = next_v;
        vertices.push((id, color, boundary));
        next_v += 1;
        id
    };

    let mut blacks = BTreeMap::new();
    let mut whites = BTreeMap::new();
    for r in 1..=k {
        for c in (k + 1)..=n {
            blacks.insert((r, c), new_vertex(&mut vertices, Color::Black, None));
            whites.insert((r, c), new_vertex(&mut vertices, Color::White, None));
        }
    }
    // South buffers between the bottom-row blacks and the south boundary.
    let south_buf: BTreeMap<usize, VertexId> = ((k + 1)..=n)
        .map(|c| (c, new_vertex(&mut vertices, Color::White, None)))
        .collect();
    let boundary: BTreeMap<usize, VertexId> =
        (1..=n).map(|p| (p, new_vertex(&mut vertices, Color::Black, Some(p)))).collect();

    let mut add_edge = |edges: &mut Vec<_>, a: VertexId, b: VertexId| -> EdgeId {
        let id = next_e;
        edges.push((id, [a, b]));
        next_e += 1;
        id
    };

    // Edge families. The pair edge carries the strand labels {E, S}; the
    // down edge continues the south strand of column c; the west edge
    // carries the staircase strand toward the next column.
    let mut pair_edges = BTreeMap::new();
    let mut down = BTreeMap::new(); // (r,c): B(r,c) - W(r+1,c), or to the south buffer
    let mut west = BTreeMap::new(); // (r,c): B(r,c) - W(r,c+1), absent at c = n
    for r in 1..=k {
        for c in (k + 1)..=n {
            let b = blacks[&(r, c)];
            pair_edges.insert((r, c), add_edge(&mut edges, b, whites[&(r, c)]));
            if r < k {
                down.insert((r, c), add_edge(&mut edges, b, whites[&(r + 1, c)]));
            } else {
                down.insert((r, c), add_edge(&mut edges, b, south_buf[&c]));
            }
            if c < n {
                west.insert((r, c), add_edge(&mut edges, b, whites[&(r, c + 1)]));
            }
        }
    }
    let east_exit: BTreeMap<usize, EdgeId> =
        (1..=k).map(|r| (r, add_edge(&mut edges, whites[&(r, k + 1)], boundary[&r]))).collect();
    let south_exit: BTreeMap<usize, EdgeId> = ((k + 1)..=n)
        .map(|c| (c, add_edge(&mut edges, south_buf[&c], boundary[&c])))
        .collect();

    // Clockwise rotations. Black passages under the turning convention are
    // pair->down (south strand), down->west (staircase), west->pair (east
    // strand); whites mirror them.
    for r in 1..=k {
        for c in (k + 1)..=n {
            let b = blacks[&(r, c)];
            let mut rot = vec![pair_edges[&(r, c)], down[&(r, c)]];
            if let Some(&e) = west.get(&(r, c)) {
                rot.push(e);
            }
            rotation.insert(b, rot);

            let w = whites[&(r, c)];
            let mut rot = vec![pair_edges[&(r, c)]];
            if r >= 2 {
                rot.push(down[&(r - 1, c)]);
            }
            if c >= k + 2 {
                rot.push(west[&(r, c - 1)]);
            } else {
                rot.push(east_exit[&r]);
            }
            rotation.insert(w, rot);
        }
    }
    for c in (k + 1)..=n {
        rotation.insert(south_buf[&c], vec![down[&(k, c)], south_exit[&c]]);
        rotation.insert(boundary[&c], vec![south_exit[&c]]);
    }
    for r in 1..=k {
        rotation.insert(boundary[&r], vec![east_exit[&r]]);
    }

    let graph = PlabicGraph::build(n, vertices, edges, rotation)
        .expect("grid construction is well-formed");
    Ok(TopCellGraph {
        graph,
        k,
        n,
        blacks: blacks.iter().map(|(&(r, c), &v)| ((r, c), v)).collect(),
        pair_whites: whites,
        pair_edges,
    })
}

/// Strand endpoint data of a black interior vertex of the top-cell grid:
/// E in [k], S in [k+1, n], and the third endpoint NW (equal to S for
/// degree-2 vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlackEndpoints {
    pub e: usize,
    pub s: usize,
    pub nw: usize,
}

impl TopCellGraph {
    /// Reads (E, S, NW) off the traced strands for every black interior
    /// vertex; the pair edge must carry the label {E, S}.
    pub fn black_endpoints(
        &self,
        info: &StrandInfo,
    ) -> Result<BTreeMap<VertexId, BlackEndpoints>, PlabicError> {
        let mut out = BTreeMap::new();
        for (&(e_coord, s_coord), &b) in &self.blacks {
            let ends = strand_endpoints_at(&self.graph, info, b)?;
            let label = info.edge_label(self.pair_edges[&(e_coord, s_coord)]).ok_or_else(|| {
                PlabicError::BadSpec("pair edge unlabeled".into())
            })?;
            let want = if e_coord <= s_coord { (e_coord, s_coord) } else { (s_coord, e_coord) };
            if label != want {
                return Err(PlabicError::BadSpec(format!(
                    "pair edge of black ({e_coord},{s_coord}) carries label {label:?}"
                )));
            }
            let nw = match ends.len() {
                2 => s_coord,
                3 => *ends
                    .iter()
                    .find(|&&x| x != e_coord && x != s_coord)
                    .expect("three distinct endpoints"),
                d => {
                    return Err(PlabicError::BadSpec(format!(
                        "black vertex of degree {d} in top-cell grid"
                    )))
                }
            };
            out.insert(b, BlackEndpoints { e: e_coord, s: s_coord, nw });
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Bridge-stack realization for general loopless f
// ---------------------------------------------------------------------------

/// Builds a reduced graph realizing `f` by stacking bridges over the vacuum
/// of its peel decomposition. The result is validated by re-tracing;
/// `leftmost` switches the peel order and yields a structurally different
/// realization.
pub fn realize_bridge_graph(f: &Bap, leftmost: bool) -> Result<PlabicGraph, PlabicError> {
    let n = f.n();
    let (vac, peeled) = f
        .peel_to_vacuum(leftmost)
        .map_err(|e| PlabicError::BadSpec(format!("no bridge decomposition: {e}")))?;

    // Vacuum: coloop j carries a bare boundary edge to a white leaf; loop j
    // is an isolated boundary vertex.
    let mut vertices: Vec<(VertexId, Color, Option<usize>)> = Vec::new();
    let mut edges: Vec<(EdgeId, [VertexId; 2])> = Vec::new();
    let mut rotation: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for p in 1..=n {
        vertices.push((p - 1, Color::Black, Some(p)));
        rotation.insert(p - 1, Vec::new());
    }
    let mut next_v = n;
    let mut next_e = 0;
    for &j in &vac.coloops() {
        let leaf = next_v;
        next_v += 1;
        vertices.push((leaf, Color::White, None));
        edges.push((next_e, [j - 1, leaf]));
        rotation.insert(j - 1, vec![next_e]);
        rotation.insert(leaf, vec![next_e]);
        next_e += 1;
    }
    let mut g = PlabicGraph::build_relaxed(n, vertices, edges, rotation)?;

    for &(i, gap) in peeled.iter().rev() {
        let ip = (i - 1 + gap) % n + 1;
        add_bridge(&mut g, i, ip)?;
        g.validate(false)?;
    }
    let (g, _) = g.compacted();
    // Sanity: the replay must realize fbar.
    let info = trace_strands(&g)?;
    if info.fbar != f.fbar_vec() {
        return Err(PlabicError::BadSpec(
            "bridge replay produced the wrong strand permutation".into(),
        ));
    }
    Ok(g)
}

/// Splices a bridge between wires i and ip (the clockwise-next active wire).
/// Wire i is always live; wire ip may be an isolated boundary vertex.
fn add_bridge(g: &mut PlabicGraph, i: usize, ip: usize) -> Result<(), PlabicError> {
    let bi = g.boundary_vertex(i);
    assert_eq!(g.degree(bi), 1, "bridge source wire must be live");
    let e_i = g.rotation(bi)[0];
    let x = g.other_end(e_i, bi);

    // Insert white omega and black bhat at the top of wire i, replacing its
    // boundary edge by the chain b_i - omega - bhat - x.
    let omega = g.add_vertex(Color::White);
    let bhat = g.add_vertex(Color::Black);
    let e_top = g.add_edge_unplaced(bi, omega);
    let e_mid = g.add_edge_unplaced(omega, bhat);
    let e_bot = g.add_edge_unplaced(bhat, x);
    g.splice_rotation(x, e_i, &[e_bot]);
    g.set_rotation(bi, vec![e_top]);
    g.remove_edge(e_i); // rotations already rewired; tombstone only

    let bip = g.boundary_vertex(ip);
    let bridge;
    if g.degree(bip) == 0 {
        // Dead wire: the bridge edge becomes b_ip's boundary edge.
        bridge = g.add_edge_unplaced(omega, bip);
        g.set_rotation(bip, vec![bridge]);
    } else {
        let e_ip = g.rotation(bip)[0];
        let y = g.other_end(e_ip, bip);
        let what = g.add_vertex(Color::White);
        let beta = g.add_vertex(Color::Black);
        let f_top = g.add_edge_unplaced(bip, what);
        let f_mid = g.add_edge_unplaced(what, beta);
        let f_bot = g.add_edge_unplaced(beta, y);
        g.splice_rotation(y, e_ip, &[f_bot]);
        g.set_rotation(bip, vec![f_top]);
        g.remove_edge(e_ip);
        bridge = g.add_edge_unplaced(omega, beta);
        // beta clockwise: [up to what, down to y, bridge to the left].
        g.set_rotation(beta, vec![f_mid, f_bot, bridge]);
        g.set_rotation(what, vec![f_top, f_mid]);
    }
    // omega clockwise: [up to b_i, bridge to the right, down to bhat].
    g.set_rotation(omega, vec![e_top, bridge, e_mid]);
    g.set_rotation(bhat, vec![e_mid, e_bot]);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plabic::{bounded_affine_perm_of, is_reduced};

    #[test]
    fn grid_2_4_postconditions() {
        let tc = construct_top_cell_graph(2, 4).unwrap();
        let g = &tc.graph;
        assert_eq!(tc.blacks.len(), 4);
        assert_eq!(g.count_faces(), 5);
        let info = trace_strands(g).unwrap();
        assert_eq!(info.fbar, vec![3, 4, 1, 2]);
        assert!(is_reduced(g).unwrap());
        let coords = tc.black_endpoints(&info).unwrap();
        assert_eq!(coords.len(), 4);
        for v in g.interior_vertices() {
            assert!((2..=3).contains(&g.degree(v)));
        }
    }

    #[test]
    fn grid_range_of_sizes() {
        for n in 3..=8 {
            for k in 2..n {
                let tc = construct_top_cell_graph(k, n).unwrap();
                let info = trace_strands(&tc.graph).unwrap();
                let expect: Vec<usize> = (1..=n).map(|p| (p + k - 1) % n + 1).collect();
                assert_eq!(info.fbar, expect, "fbar mismatch at k={k} n={n}");
                assert_eq!(tc.graph.count_faces(), k * (n - k) + 1);
                tc.black_endpoints(&info).unwrap();
            }
        }
    }

    #[test]
    fn bridge_realization_matches_trace() {
        for f in [
            Bap::top_cell(2, 4),
            Bap::new(vec![4, 3, 6, 5]).unwrap(),
            Bap::new(vec![5, 4, 3, 6]).unwrap(),
        ] {
            for leftmost in [true, false] {
                let g = realize_bridge_graph(&f, leftmost).unwrap();
                let got = bounded_affine_perm_of(&g).unwrap();
                assert_eq!(got, f, "realization mismatch for {:?}", f.window());
                assert!(is_reduced(&g).unwrap());
            }
        }
    }
}
