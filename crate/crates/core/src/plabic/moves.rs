//! Measurement-preserving moves: parallel edge reduction, leaf removal,
//! dipole removal, contraction/uncontraction, and the square move.
//!
//! Every move returns a fresh (graph, weighting) pair and revalidates the
//! result. Correctness of the weight bookkeeping is enforced by the exact
//! move-invariance tests over random rational weightings.

use super::graph::{EdgeId, PlabicGraph, VertexId};
use super::measure::EdgeWeighting;
use crate::error::PlabicError;
use crate::num::Coeff;

#[derive(Debug, Clone)]
pub enum Move {
    /// Two edges sharing both endpoints collapse into one of weight a + b.
    ParallelReduction { e1: EdgeId, e2: EdgeId },
    /// A degree-1 interior vertex forces its edge; the leaf, its neighbor,
    /// and the neighbor's other edges disappear.
    LeafRemoval { leaf: VertexId },
    /// An isolated interior black-white edge pair is forced and removed.
    DipoleRemoval { edge: EdgeId },
    /// A degree-2 interior vertex not adjacent to the boundary is dissolved,
    /// merging its two (same-colored) neighbors.
    Contract { vertex: VertexId },
    /// Splits an interior vertex in two along rotation positions `at..split`
    /// / `split..at`, joined through a new opposite-colored middle vertex by
    /// two unit edges.
    Uncontract { vertex: VertexId, at: usize, split: usize },
    /// Urban renewal on an interior quadrilateral face with alternating
    /// colors; corners listed in face order.
    SquareMove { corners: [VertexId; 4] },
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::ParallelReduction { .. } => "parallel_reduction",
            Move::LeafRemoval { .. } => "leaf_removal",
            Move::DipoleRemoval { .. } => "dipole_removal",
            Move::Contract { .. } => "contract",
            Move::Uncontract { .. } => "uncontract",
            Move::SquareMove { .. } => "square_move",
        }
    }
}

fn mismatch(move_name: &'static str, reason: impl Into<String>) -> PlabicError {
    PlabicError::PatternMismatch { move_name, reason: reason.into() }
}

pub fn apply_move<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    mv: &Move,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    wt.validate(g, true)?;
    let (g2, wt2) = match mv {
        Move::ParallelReduction { e1, e2 } => parallel_reduction(g, wt, *e1, *e2)?,
        Move::LeafRemoval { leaf } => leaf_removal(g, wt, *leaf)?,
        Move::DipoleRemoval { edge } => dipole_removal(g, wt, *edge)?,
        Move::Contract { vertex } => contract(g, wt, *vertex)?,
        Move::Uncontract { vertex, at, split } => uncontract(g, wt, *vertex, *at, *split)?,
        Move::SquareMove { corners } => square_move(g, wt, *corners)?,
    };
    g2.validate(false)?;
    wt2.validate(&g2, true)?;
    Ok((g2, wt2))
}

fn parallel_reduction<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "parallel_reduction";
    if e1 == e2 || !g.edge_is_live(e1) || !g.edge_is_live(e2) {
        return Err(mismatch(M, "need two distinct live edges"));
    }
    let mut a = g.edge_ends(e1);
    let mut b = g.edge_ends(e2);
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(mismatch(M, "edges do not share both endpoints"));
    }
    // The bigon must be empty: the two edges are cyclically adjacent in the
    // rotation at both endpoints.
    for v in a {
        let r1 = g.rot_next(v, e1);
        let r2 = g.rot_next(v, e2);
        if r1 != e2 && r2 != e1 {
            return Err(mismatch(M, format!("edges are not adjacent at vertex {v}")));
        }
    }
    let mut g2 = g.clone();
    g2.remove_edge(e2);
    let mut w = wt.weights.clone();
    let w2 = w.remove(&e2).expect("validated weight");
    let slot = w.get_mut(&e1).expect("validated weight");
    *slot = slot.clone() + w2;
    Ok((g2, EdgeWeighting { weights: w }))
}

fn leaf_removal<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    leaf: VertexId,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "leaf_removal";
    if !g.is_interior(leaf) || g.degree(leaf) != 1 {
        return Err(mismatch(M, "site is not a degree-1 interior vertex"));
    }
    let e = g.rotation(leaf)[0];
    let u = g.other_end(e, leaf);
    if !g.is_interior(u) {
        return Err(mismatch(M, "leaf neighbor is a boundary vertex"));
    }
    // The edge is forced in every matching; u's other edges can never be
    // used, so u and all its edges go too.
    let mut g2 = g.clone();
    let mut w = wt.weights.clone();
    for ue in g.rotation(u).to_vec() {
        g2.remove_edge(ue);
        w.remove(&ue);
    }
    g2.remove_vertex(leaf);
    g2.remove_vertex(u);
    Ok((g2, EdgeWeighting { weights: w }))
}

fn dipole_removal<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    edge: EdgeId,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "dipole_removal";
    if !g.edge_is_live(edge) {
        return Err(mismatch(M, "dead edge"));
    }
    let [a, b] = g.edge_ends(edge);
    if !g.is_interior(a) || !g.is_interior(b) || g.degree(a) != 1 || g.degree(b) != 1 {
        return Err(mismatch(M, "edge is not an isolated interior dipole"));
    }
    let mut g2 = g.clone();
    g2.remove_edge(edge);
    g2.remove_vertex(a);
    g2.remove_vertex(b);
    let mut w = wt.weights.clone();
    w.remove(&edge);
    Ok((g2, EdgeWeighting { weights: w }))
}

fn contract<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    v: VertexId,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "contract";
    if !g.is_interior(v) || g.degree(v) != 2 {
        return Err(mismatch(M, "site is not a degree-2 interior vertex"));
    }
    let e1 = g.rotation(v)[0];
    let e2 = g.rotation(v)[1];
    let u1 = g.other_end(e1, v);
    let u2 = g.other_end(e2, v);
    if u1 == u2 {
        return Err(mismatch(M, "parallel pair; reduce it first"));
    }
    if !g.is_interior(u1) || !g.is_interior(u2) {
        return Err(mismatch(M, "vertex is adjacent to the boundary"));
    }
    // Equalize the two edge weights by a gauge transformation at u1, then
    // dissolve v, attaching u2's other edges to u1.
    let w1 = wt.get(e1).expect("validated").clone();
    let w2 = wt.get(e2).expect("validated").clone();
    let gauge = w2 / w1;
    let mut w = wt.gauged_at(g, u1, &gauge).weights;
    w.remove(&e1);
    w.remove(&e2);

    let mut g2 = g.clone();
    // u2's edges other than e2, in clockwise order starting after e2.
    let rot2 = g2.rotation(u2).to_vec();
    let i2 = rot2.iter().position(|&x| x == e2).expect("edge at u2");
    let mut carried: Vec<EdgeId> = Vec::new();
    for d in 1..rot2.len() {
        carried.push(rot2[(i2 + d) % rot2.len()]);
    }
    for &e in &carried {
        g2.reattach_edge_end(e, u2, u1);
    }
    g2.splice_rotation(u1, e1, &carried.clone());
    g2.set_rotation(u2, vec![e2]);
    g2.remove_edge(e2);
    g2.set_rotation(v, Vec::new());
    // remove_edge already dropped e1 from rotations? e1 is still live.
    g2.remove_edge(e1);
    g2.remove_vertex(v);
    g2.remove_vertex(u2);
    Ok((g2, EdgeWeighting { weights: w }))
}

fn uncontract<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    v: VertexId,
    at: usize,
    split: usize,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "uncontract";
    if !g.is_interior(v) {
        return Err(mismatch(M, "can only split interior vertices"));
    }
    let rot = g.rotation(v).to_vec();
    let d = rot.len();
    if d < 2 || at >= d || split >= d || at == split {
        return Err(mismatch(M, "cut positions must be distinct rotation indices"));
    }
    let mut seg1 = Vec::new();
    let mut i = at;
    while i != split {
        seg1.push(rot[i]);
        i = (i + 1) % d;
    }
    let mut seg2 = Vec::new();
    let mut i = split;
    while i != at {
        seg2.push(rot[i]);
        i = (i + 1) % d;
    }
    let color = g.color(v);
    let mut g2 = g.clone();
    let mid = g2.add_vertex(color.other());
    let v2 = g2.add_vertex(color);
    let em1 = g2.add_edge_unplaced(v, mid);
    let em2 = g2.add_edge_unplaced(mid, v2);
    for &e in &seg2 {
        g2.reattach_edge_end(e, v, v2);
    }
    let mut r1 = seg1;
    r1.push(em1);
    let mut r2 = seg2;
    r2.push(em2);
    g2.set_rotation(v, r1);
    g2.set_rotation(v2, r2);
    g2.set_rotation(mid, vec![em1, em2]);
    let mut w = wt.weights.clone();
    w.insert(em1, S::one());
    w.insert(em2, S::one());
    Ok((g2, EdgeWeighting { weights: w }))
}

fn square_move<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
    corners: [VertexId; 4],
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    const M: &str = "square_move";
    // Find the interior quadrilateral face whose corner cycle matches.
    let faces = g.interior_faces();
    let mut found = None;
    'faces: for cyc in &faces {
        if cyc.len() != 4 {
            continue;
        }
        let heads: Vec<VertexId> = cyc.iter().map(|&d| g.dart_head(d)).collect();
        for off in 0..4 {
            if (0..4).all(|i| heads[(off + i) % 4] == corners[i]) {
                let darts: Vec<_> = (0..4).map(|i| cyc[(off + i) % 4]).collect();
                found = Some(darts);
                break 'faces;
            }
        }
    }
    let darts = found.ok_or_else(|| mismatch(M, "corners do not bound an interior quadrilateral face"))?;
    for i in 0..4 {
        if g.color(corners[i]) != g.color(corners[(i + 2) % 4])
            || g.color(corners[i]) == g.color(corners[(i + 1) % 4])
        {
            return Err(mismatch(M, "face colors do not alternate"));
        }
        if !g.is_interior(corners[i]) {
            return Err(mismatch(M, "face touches the boundary"));
        }
    }
    // Face edge i joins corners[i] and corners[i+1]: the dart arriving at
    // corners[i+1] is darts[(i+1) % 4].
    let face_edge = |i: usize| darts[(i + 1) % 4].e;

    // Auto-uncontract corners whose third edge leads to the boundary, then
    // recurse; afterwards every leg neighbor is interior.
    let mut work_g = g.clone();
    let mut work_wt = wt.clone();
    let mut changed = false;
    for i in 0..4 {
        let v = corners[i];
        if work_g.degree(v) != 3 {
            return Err(mismatch(M, format!("corner {v} is not trivalent")));
        }
        let leg = work_g
            .rotation(v)
            .iter()
            .copied()
            .find(|&e| e != face_edge(i) && e != face_edge((i + 3) % 4))
            .expect("trivalent corner has a third edge");
        if !work_g.is_interior(work_g.other_end(leg, v)) {
            // Split the corner: the face-side keeps the two face edges.
            let rot = work_g.rotation(v).to_vec();
            let li = rot.iter().position(|&x| x == leg).unwrap();
            let (g2, w2) = uncontract(&work_g, &work_wt, v, (li + 1) % 3, li)?;
            work_g = g2;
            work_wt = w2;
            changed = true;
        }
    }
    if changed {
        // Corner ids survive the uncontraction (the face side keeps `v`).
        return square_move(&work_g, &work_wt, corners);
    }

    let legs: Vec<EdgeId> = (0..4)
        .map(|i| {
            let v = corners[i];
            work_g
                .rotation(v)
                .iter()
                .copied()
                .find(|&e| e != face_edge(i) && e != face_edge((i + 3) % 4))
                .expect("trivalent corner")
        })
        .collect();
    let xs: Vec<VertexId> = (0..4).map(|i| work_g.other_end(legs[i], corners[i])).collect();
    for i in 0..4 {
        for j in 0..4 {
            if xs[i] == corners[j] || (i != j && xs[i] == xs[j]) {
                return Err(mismatch(M, "leg neighbors must be distinct and off the face"));
            }
        }
    }

    let a = work_wt.get(face_edge(0)).unwrap().clone();
    let b = work_wt.get(face_edge(1)).unwrap().clone();
    let c = work_wt.get(face_edge(2)).unwrap().clone();
    let d = work_wt.get(face_edge(3)).unwrap().clone();
    let l: Vec<S> = (0..4).map(|i| work_wt.get(legs[i]).unwrap().clone()).collect();
    let denom = a.clone() * c.clone() + b.clone() * d.clone();

    let mut g2 = work_g.clone();
    let mut w = work_wt.weights.clone();
    // New square on the leg neighbors; edge (x_i, x_{i+1}) gets the weight of
    // the opposite old face edge times the two adjacent legs, over ac + bd.
    let olds = [a, b, c, d];
    let mut new_edges = [0usize; 4];
    for i in 0..4 {
        let e = g2.add_edge_unplaced(xs[i], xs[(i + 1) % 4]);
        new_edges[i] = e;
        let opposite = olds[(i + 2) % 4].clone();
        w.insert(e, opposite * l[i].clone() * l[(i + 1) % 4].clone() / denom.clone());
    }
    for i in 0..4 {
        // At x_i the leg is replaced by the edges toward x_{i+1}, x_{i-1} in
        // clockwise order (corners are listed clockwise around the face).
        g2.splice_rotation(xs[i], legs[i], &[new_edges[i], new_edges[(i + 3) % 4]]);
    }
    for i in 0..4 {
        let fe = face_edge(i);
        if g2.edge_is_live(fe) {
            g2.remove_edge(fe);
        }
        g2.remove_edge(legs[i]);
        w.remove(&face_edge(i));
        w.remove(&legs[i]);
    }
    for i in 0..4 {
        g2.set_rotation(corners[i], Vec::new());
        g2.remove_vertex(corners[i]);
    }
    Ok((g2, EdgeWeighting { weights: w }))
}

/// Contracts every degree-2 interior vertex not adjacent to the boundary.
/// Used by graph constructors; weights must be strictly positive.
pub fn contract_fully<S: Coeff>(
    g: &PlabicGraph,
    wt: &EdgeWeighting<S>,
) -> Result<(PlabicGraph, EdgeWeighting<S>), PlabicError> {
    let mut g2 = g.clone();
    let mut w2 = wt.clone();
    loop {
        let site = g2.interior_vertices().find(|&v| {
            g2.degree(v) == 2 && {
                let u1 = g2.other_end(g2.rotation(v)[0], v);
                let u2 = g2.other_end(g2.rotation(v)[1], v);
                u1 != u2 && g2.is_interior(u1) && g2.is_interior(u2)
            }
        });
        match site {
            Some(v) => {
                let (g3, w3) = contract(&g2, &w2, v)?;
                g2 = g3;
                w2 = w3;
            }
            None => return Ok((g2, w2)),
        }
    }
}

/// True when the graph has no degree-2 interior vertex away from the
/// boundary.
pub fn is_contracted(g: &PlabicGraph) -> bool {
    g.interior_vertices().all(|v| {
        g.degree(v) != 2 || {
            g.rotation(v)
                .iter()
                .any(|&e| !g.is_interior(g.other_end(e, v)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Rat;
    use crate::plabic::graph::Color;
    use crate::plabic::measure::boundary_measurement;
    use std::collections::BTreeMap;

    fn bigon_fixture() -> (PlabicGraph, EdgeWeighting<Rat>) {
        // b1 - w = b - w' - b2 with a parallel pair between w and b.
        let g = PlabicGraph::build(
            2,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::White, None),
                (2, Color::Black, None),
                (3, Color::White, None),
                (4, Color::Black, Some(2)),
            ],
            vec![(0, [0, 1]), (1, [1, 2]), (2, [1, 2]), (3, [2, 3]), (4, [3, 4])],
            BTreeMap::from([
                (0, vec![0]),
                (1, vec![0, 1, 2]),
                (2, vec![2, 1, 3]),
                (3, vec![3, 4]),
                (4, vec![4]),
            ]),
        )
        .unwrap();
        let wt = EdgeWeighting {
            weights: BTreeMap::from([
                (0, Rat::from_int(1)),
                (1, Rat::from_ratio(2, 3)),
                (2, Rat::from_ratio(5, 7)),
                (3, Rat::from_int(4)),
                (4, Rat::from_int(1)),
            ]),
        };
        (g, wt)
    }

    #[test]
    fn parallel_reduction_sums_weights() {
        let (g, wt) = bigon_fixture();
        let before = boundary_measurement(&g, &wt).unwrap();
        let (g2, wt2) = apply_move(&g, &wt, &Move::ParallelReduction { e1: 1, e2: 2 }).unwrap();
        assert_eq!(
            wt2.get(1).unwrap(),
            &(Rat::from_ratio(2, 3) + Rat::from_ratio(5, 7))
        );
        let after = boundary_measurement(&g2, &wt2).unwrap();
        assert!(before.projectively_equal(&after));
        assert_eq!(g2.count_faces(), g.count_faces() - 1);
    }

    #[test]
    fn contract_preserves_measurement() {
        let (g, wt) = bigon_fixture();
        let (g1, wt1) = apply_move(&g, &wt, &Move::ParallelReduction { e1: 1, e2: 2 }).unwrap();
        // Vertex 1 (white) now has degree 2 with interior neighbors? Vertex 1
        // neighbors: boundary b1 and vertex 2, so not contractible; vertex 3
        // neighbors are vertex 2 and b2. Contract vertex 2 instead? It has
        // degree 2 with neighbors 1 and 3, both interior: valid.
        let before = boundary_measurement(&g1, &wt1).unwrap();
        let (g2, wt2) = apply_move(&g1, &wt1, &Move::Contract { vertex: 2 }).unwrap();
        let after = boundary_measurement(&g2, &wt2).unwrap();
        assert!(before.projectively_equal(&after));
    }

    #[test]
    fn uncontract_roundtrip_measurement() {
        let (g, wt) = bigon_fixture();
        let before = boundary_measurement(&g, &wt).unwrap();
        let (g2, wt2) = apply_move(&g, &wt, &Move::Uncontract { vertex: 1, at: 0, split: 2 }).unwrap();
        let after = boundary_measurement(&g2, &wt2).unwrap();
        assert!(before.projectively_equal(&after));
    }
}
