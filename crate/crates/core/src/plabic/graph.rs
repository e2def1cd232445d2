//! Planar bipartite graphs embedded in a disk, given by a rotation system.
//!
//! Boundary vertices b_1..b_n sit on the disk circle in clockwise order;
//! every vertex stores the clockwise cyclic order of its incident edges.
//! Planarity is validated through Euler characteristics of the face
//! traversal of the graph augmented with the n boundary arcs.

use crate::error::PlabicError;
use std::collections::BTreeMap;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexData {
    pub color: Color,
    /// 1-based boundary index p for the vertex b_p; `None` for interior.
    pub boundary: Option<usize>,
}

/// A directed edge: edge `e` oriented into `ends[head]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub e: EdgeId,
    pub head: u8,
}

impl Dart {
    pub fn reversed(self) -> Dart {
        Dart { e: self.e, head: 1 - self.head }
    }
}

#[derive(Debug, Clone)]
pub struct PlabicGraph {
    n: usize,
    verts: Vec<Option<VertexData>>,
    edges: Vec<Option<[VertexId; 2]>>,
    rot: Vec<Vec<EdgeId>>,
    /// boundary[p-1] = vertex id of b_p.
    boundary: Vec<VertexId>,
}

impl PlabicGraph {
    /// Builds and strictly validates a graph: every boundary vertex must be
    /// black with degree exactly one.
    pub fn build(
        n: usize,
        vertices: Vec<(VertexId, Color, Option<usize>)>,
        edges: Vec<(EdgeId, [VertexId; 2])>,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    ) -> Result<Self, PlabicError> {
        let g = Self::assemble(n, vertices, edges, rotation)?;
        g.validate(true)?;
        Ok(g)
    }

    /// Same as [`PlabicGraph::build`] but allows boundary vertices of degree
    /// zero. Limit graphs and move results use this.
    pub fn build_relaxed(
        n: usize,
        vertices: Vec<(VertexId, Color, Option<usize>)>,
        edges: Vec<(EdgeId, [VertexId; 2])>,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    ) -> Result<Self, PlabicError> {
        let g = Self::assemble(n, vertices, edges, rotation)?;
        g.validate(false)?;
        Ok(g)
    }

    fn assemble(
        n: usize,
        vertices: Vec<(VertexId, Color, Option<usize>)>,
        edges: Vec<(EdgeId, [VertexId; 2])>,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    ) -> Result<Self, PlabicError> {
        if n < 2 {
            return Err(PlabicError::BadSpec("need at least two boundary vertices".into()));
        }
        let vmax = vertices.iter().map(|v| v.0).max().ok_or_else(|| {
            PlabicError::BadSpec("graph has no vertices".into())
        })?;
        let mut verts: Vec<Option<VertexData>> = vec![None; vmax + 1];
        for (id, color, boundary) in &vertices {
            if verts[*id].is_some() {
                return Err(PlabicError::BadSpec(format!("duplicate vertex id {id}")));
            }
            verts[*id] = Some(VertexData { color: *color, boundary: *boundary });
        }
        let emax = edges.iter().map(|e| e.0).max().map_or(0, |m| m + 1);
        let mut es: Vec<Option<[VertexId; 2]>> = vec![None; emax];
        for (id, ends) in &edges {
            if es[*id].is_some() {
                return Err(PlabicError::BadSpec(format!("duplicate edge id {id}")));
            }
            for v in ends {
                if *v >= verts.len() || verts[*v].is_none() {
                    return Err(PlabicError::BadSpec(format!("edge {id} references missing vertex {v}")));
                }
            }
            es[*id] = Some(*ends);
        }
        let mut rot = vec![Vec::new(); verts.len()];
        for (v, list) in rotation {
            if v >= verts.len() || verts[v].is_none() {
                return Err(PlabicError::BadSpec(format!("rotation for missing vertex {v}")));
            }
            rot[v] = list;
        }
        let mut boundary = vec![usize::MAX; n];
        for (id, _, b) in &vertices {
            if let Some(p) = b {
                if *p < 1 || *p > n {
                    return Err(PlabicError::BadSpec(format!("boundary index {p} out of range")));
                }
                if boundary[*p - 1] != usize::MAX {
                    return Err(PlabicError::BadSpec(format!("duplicate boundary index {p}")));
                }
                boundary[*p - 1] = *id;
            }
        }
        if let Some(p) = boundary.iter().position(|&v| v == usize::MAX) {
            return Err(PlabicError::BadSpec(format!("missing boundary vertex b_{}", p + 1)));
        }
        Ok(PlabicGraph { n, verts, edges: es, rot, boundary })
    }

    pub(crate) fn validate(&self, strict_boundary: bool) -> Result<(), PlabicError> {
        for (id, e) in self.live_edges() {
            let [a, b] = e;
            let ca = self.color(a);
            let cb = self.color(b);
            if ca == cb {
                return Err(PlabicError::NonBipartite { edge: id });
            }
        }
        for p in 1..=self.n {
            let v = self.boundary[p - 1];
            let d = self.degree(v);
            if self.color(v) != Color::Black {
                return Err(PlabicError::BoundaryDegree { index: p });
            }
            if strict_boundary && d != 1 || d > 1 {
                return Err(PlabicError::BoundaryDegree { index: p });
            }
        }
        // Rotation lists must contain each incident edge exactly once.
        let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); self.verts.len()];
        for (id, [a, b]) in self.live_edges() {
            incident[a].push(id);
            incident[b].push(id);
        }
        for v in self.vertex_ids() {
            let mut want = incident[v].clone();
            let mut got = self.rot[v].clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(PlabicError::BadRotation { vertex: v });
            }
        }
        self.check_planarity()?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boundary_vertex(&self, p: usize) -> VertexId {
        assert!((1..=self.n).contains(&p), "boundary index out of range");
        self.boundary[p - 1]
    }

    /// The boundary index of a vertex, if it is a boundary vertex.
    pub fn boundary_index(&self, v: VertexId) -> Option<usize> {
        self.verts[v].as_ref().and_then(|d| d.boundary)
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.boundary_index(v).is_none()
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.verts[v].expect("dead vertex").color
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.verts.iter().enumerate().filter_map(|(i, v)| v.map(|_| i))
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_ids().filter(move |&v| self.is_interior(v))
    }

    pub fn live_edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| e.map(|ends| (i, ends)))
    }

    pub fn edge_ends(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e].expect("dead edge")
    }

    pub fn edge_is_live(&self, e: EdgeId) -> bool {
        self.edges.get(e).is_some_and(|x| x.is_some())
    }

    /// The black endpoint of an edge.
    pub fn black_end(&self, e: EdgeId) -> VertexId {
        let [a, b] = self.edge_ends(e);
        if self.color(a) == Color::Black { a } else { b }
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.edge_ends(e);
        if a == v { b } else { a }
    }

    /// Whether an edge touches a boundary vertex.
    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        let [a, b] = self.edge_ends(e);
        !self.is_interior(a) || !self.is_interior(b)
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rot[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn dart_head(&self, d: Dart) -> VertexId {
        self.edge_ends(d.e)[d.head as usize]
    }

    pub fn dart_tail(&self, d: Dart) -> VertexId {
        self.edge_ends(d.e)[1 - d.head as usize]
    }

    pub fn dart_into(&self, e: EdgeId, head_vertex: VertexId) -> Dart {
        let [a, b] = self.edge_ends(e);
        if b == head_vertex {
            Dart { e, head: 1 }
        } else {
            assert_eq!(a, head_vertex, "vertex not an endpoint");
            Dart { e, head: 0 }
        }
    }

    /// The next edge strictly clockwise from `e` at `v`.
    pub fn rot_next(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let list = &self.rot[v];
        let i = list.iter().position(|&x| x == e).expect("edge not at vertex");
        list[(i + 1) % list.len()]
    }

    /// The next edge strictly counterclockwise from `e` at `v`.
    pub fn rot_prev(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let list = &self.rot[v];
        let i = list.iter().position(|&x| x == e).expect("edge not at vertex");
        list[(i + list.len() - 1) % list.len()]
    }

    // ---- mutation primitives used by the move engine -------------------

    pub(crate) fn add_vertex(&mut self, color: Color) -> VertexId {
        self.verts.push(Some(VertexData { color, boundary: None }));
        self.rot.push(Vec::new());
        self.verts.len() - 1
    }

    pub(crate) fn add_edge_unplaced(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        self.edges.push(Some([a, b]));
        self.edges.len() - 1
    }

    pub(crate) fn set_rotation(&mut self, v: VertexId, list: Vec<EdgeId>) {
        self.rot[v] = list;
    }

    /// Replaces `old` with the edges `new` (in clockwise order) inside the
    /// rotation list of `v`.
    pub(crate) fn splice_rotation(&mut self, v: VertexId, old: EdgeId, new: &[EdgeId]) {
        let i = self.rot[v].iter().position(|&x| x == old).expect("edge not at vertex");
        self.rot[v].splice(i..=i, new.iter().copied());
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) {
        let [a, b] = self.edges[e].expect("dead edge");
        self.rot[a].retain(|&x| x != e);
        self.rot[b].retain(|&x| x != e);
        self.edges[e] = None;
    }

    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        assert!(self.rot[v].is_empty(), "removing vertex with incident edges");
        assert!(self.is_interior(v), "cannot remove a boundary vertex");
        self.verts[v] = None;
    }

    pub(crate) fn reattach_edge_end(&mut self, e: EdgeId, from: VertexId, to: VertexId) {
        let ends = self.edges[e].as_mut().expect("dead edge");
        if ends[0] == from {
            ends[0] = to;
        } else {
            assert_eq!(ends[1], from);
            ends[1] = to;
        }
    }

    // ---- faces ----------------------------------------------------------

    /// Face traversal of the graph augmented with the n boundary arcs.
    ///
    /// Walking rule: arriving at `v` along edge `e`, leave along the edge
    /// immediately counterclockwise from `e` (the face stays on the right).
    fn augmented_faces(&self) -> AugmentedFaces {
        // Arc p (0-based) joins boundary[p] to boundary[(p+1) % n].
        let arc_base = self.edges.len();
        let n = self.n;
        let arc_ends = |arc: usize| -> [VertexId; 2] {
            [self.boundary[arc], self.boundary[(arc + 1) % n]]
        };
        // Augmented rotations at boundary vertices: [arc to next, graph edge, arc to prev].
        let mut aug_rot: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for p in 0..n {
            let v = self.boundary[p];
            let mut list = vec![arc_base + p];
            list.extend(self.rot[v].iter().copied());
            list.push(arc_base + (p + n - 1) % n);
            aug_rot.insert(v, list);
        }
        let ends_of = |e: usize| -> [VertexId; 2] {
            if e >= arc_base { arc_ends(e - arc_base) } else { self.edge_ends(e) }
        };
        let rot_of = |v: VertexId| -> Vec<usize> {
            aug_rot.get(&v).cloned().unwrap_or_else(|| self.rot[v].clone())
        };

        // Enumerate darts: (edge, head) for graph edges and arcs.
        let mut darts: Vec<(usize, u8)> = Vec::new();
        for (id, _) in self.live_edges() {
            darts.push((id, 0));
            darts.push((id, 1));
        }
        for arc in 0..n {
            darts.push((arc_base + arc, 0));
            darts.push((arc_base + arc, 1));
        }

        let mut orbit_of: BTreeMap<(usize, u8), usize> = BTreeMap::new();
        let mut orbits: Vec<Vec<(usize, u8)>> = Vec::new();
        for &start in &darts {
            if orbit_of.contains_key(&start) {
                continue;
            }
            let id = orbits.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                orbit_of.insert(d, id);
                cycle.push(d);
                let v = ends_of(d.0)[d.1 as usize];
                let list = rot_of(v);
                let i = list.iter().position(|&x| x == d.0).expect("edge missing from rotation");
                let e2 = list[(i + list.len() - 1) % list.len()];
                let [a, b] = ends_of(e2);
                let w = if a == v { b } else { a };
                // Walking toward w; the dart arrives at w. Parallel edges and
                // arcs with equal endpoints are disambiguated by slot: leave
                // via the end that is `v`.
                let head = if b == w && a == v {
                    1
                } else if a == w && b == v {
                    0
                } else if a == v {
                    1
                } else {
                    0
                };
                d = (e2, head);
                if d == start {
                    break;
                }
            }
            orbits.push(cycle);
        }

        // Outer face: the orbit of arc 0 directed from boundary[1] to boundary[0].
        let _outer = orbit_of[&(arc_base, 0)];
        AugmentedFaces { orbits, orbit_of, arc_base }
    }

    /// The number of regions the disk is cut into by G together with the
    /// boundary circle. Disconnected pieces are handled by per-component
    /// Euler accounting.
    pub fn count_faces(&self) -> usize {
        let faces = self.augmented_faces();
        let comps = self.augmented_components();
        let mut orbit_reps: Vec<usize> = Vec::new();
        // Number of orbits per component: pick for each orbit the component
        // of any vertex on it.
        let mut per_comp = vec![0usize; comps.count];
        for (_i, cyc) in faces.orbits.iter().enumerate() {
            let (e, h) = cyc[0];
            let v = if e >= faces.arc_base {
                self.boundary[(e - faces.arc_base + if h == 1 { 1 } else { 0 }) % self.n]
            } else {
                self.edge_ends(e)[h as usize]
            };
            per_comp[comps.of[v]] += 1;
            orbit_reps.push(v);
        }
        // Degree-0 interior vertices form their own components with no darts.
        for c in per_comp.iter_mut() {
            if *c == 0 {
                *c = 1;
            }
        }
        per_comp.iter().sum::<usize>() - comps.count
    }

    fn check_planarity(&self) -> Result<(), PlabicError> {
        let faces = self.augmented_faces();
        let comps = self.augmented_components();
        let mut v_per = vec![0usize; comps.count];
        let mut e_per = vec![0usize; comps.count];
        let mut f_per = vec![0usize; comps.count];
        for v in self.vertex_ids() {
            v_per[comps.of[v]] += 1;
        }
        for (_, [a, _]) in self.live_edges() {
            e_per[comps.of[a]] += 1;
        }
        // Arcs live in the boundary component.
        let bc = comps.of[self.boundary[0]];
        e_per[bc] += self.n;
        for cyc in &faces.orbits {
            let (e, h) = cyc[0];
            let v = if e >= faces.arc_base {
                self.boundary[(e - faces.arc_base + if h == 1 { 1 } else { 0 }) % self.n]
            } else {
                self.edge_ends(e)[h as usize]
            };
            f_per[comps.of[v]] += 1;
        }
        for c in 0..comps.count {
            if v_per[c] == 1 && e_per[c] == 0 {
                continue; // isolated interior vertex
            }
            let chi = v_per[c] as i64 - e_per[c] as i64 + f_per[c] as i64;
            if chi != 2 {
                return Err(PlabicError::NonPlanarEmbedding);
            }
        }
        Ok(())
    }

    fn augmented_components(&self) -> Components {
        let mut of = vec![usize::MAX; self.verts.len()];
        let mut count = 0;
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); self.verts.len()];
        for (_, [a, b]) in self.live_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for p in 0..self.n {
            let a = self.boundary[p];
            let b = self.boundary[(p + 1) % self.n];
            adj[a].push(b);
            adj[b].push(a);
        }
        for s in self.vertex_ids() {
            if of[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            of[s] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if of[w] == usize::MAX {
                        of[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Components { of, count }
    }

    /// Components of G itself (without boundary arcs) that contain no
    /// boundary vertex.
    pub fn has_isolated_component(&self) -> bool {
        let mut of = vec![usize::MAX; self.verts.len()];
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); self.verts.len()];
        for (_, [a, b]) in self.live_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut count = 0;
        let mut touches_boundary = Vec::new();
        for s in self.vertex_ids() {
            if of[s] != usize::MAX {
                continue;
            }
            touches_boundary.push(false);
            let mut stack = vec![s];
            of[s] = count;
            while let Some(v) = stack.pop() {
                if !self.is_interior(v) {
                    touches_boundary[count] = true;
                }
                for &w in &adj[v] {
                    if of[w] == usize::MAX {
                        of[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        touches_boundary.iter().any(|&t| !t)
    }

    /// Interior faces of the graph as cycles of darts: all augmented-face
    /// orbits that contain no boundary arc.
    pub fn interior_faces(&self) -> Vec<Vec<Dart>> {
        let faces = self.augmented_faces();
        faces
            .orbits
            .iter()
            .filter(|cyc| cyc.iter().all(|&(e, _)| e < faces.arc_base))
            .map(|cyc| cyc.iter().map(|&(e, h)| Dart { e, head: h }).collect())
            .collect()
    }

    /// Compacts ids after surgery, renumbering vertices and edges densely.
    /// Returns the new graph plus the edge id translation map.
    pub fn compacted(&self) -> (PlabicGraph, BTreeMap<EdgeId, EdgeId>) {
        let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (new, old) in self.vertex_ids().enumerate() {
            vmap.insert(old, new);
        }
        let mut emap: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for (new, (old, _)) in self.live_edges().enumerate() {
            emap.insert(old, new);
        }
        let verts = self
            .vertex_ids()
            .map(|v| {
                let d = self.verts[v].unwrap();
                (vmap[&v], d.color, d.boundary)
            })
            .collect();
        let edges = self
            .live_edges()
            .map(|(e, [a, b])| (emap[&e], [vmap[&a], vmap[&b]]))
            .collect();
        let rotation = self
            .vertex_ids()
            .map(|v| (vmap[&v], self.rot[v].iter().map(|e| emap[e]).collect()))
            .collect();
        let g = PlabicGraph::assemble(self.n, verts, edges, rotation).expect("compaction is well-formed");
        (g, emap)
    }
}

struct AugmentedFaces {
    orbits: Vec<Vec<(usize, u8)>>,
    #[allow(dead_code)]
    orbit_of: BTreeMap<(usize, u8), usize>,
    arc_base: usize,
}

struct Components {
    of: Vec<usize>,
    count: usize,
}

/// Convenience constructor for the chord graph b_1 - w - b_2.
pub fn path_graph() -> PlabicGraph {
    PlabicGraph::build(
        2,
        vec![
            (0, Color::Black, Some(1)),
            (1, Color::White, None),
            (2, Color::Black, Some(2)),
        ],
        vec![(0, [0, 1]), (1, [1, 2])],
        BTreeMap::from([(0, vec![0]), (1, vec![0, 1]), (2, vec![1])]),
    )
    .expect("path graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_valid_and_two_faces() {
        let g = path_graph();
        assert_eq!(g.count_faces(), 2);
        assert!(!g.has_isolated_component());
    }

    #[test]
    fn non_bipartite_rejected() {
        let r = PlabicGraph::build(
            2,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::Black, None),
                (2, Color::Black, Some(2)),
            ],
            vec![(0, [0, 1]), (1, [1, 2])],
            BTreeMap::from([(0, vec![0]), (1, vec![0, 1]), (2, vec![1])]),
        );
        assert!(matches!(r, Err(PlabicError::NonBipartite { .. })));
    }

    #[test]
    fn boundary_degree_two_rejected() {
        let r = PlabicGraph::build(
            2,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::White, None),
                (2, Color::White, None),
                (3, Color::Black, Some(2)),
            ],
            vec![(0, [0, 1]), (1, [0, 2]), (2, [1, 3]), (3, [2, 3])],
            BTreeMap::from([
                (0, vec![0, 1]),
                (1, vec![0, 2]),
                (2, vec![1, 3]),
                (3, vec![2, 3]),
            ]),
        );
        assert!(matches!(r, Err(PlabicError::BoundaryDegree { index: 1 })));
    }

    #[test]
    fn bad_rotation_rejected() {
        let r = PlabicGraph::build(
            2,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::White, None),
                (2, Color::Black, Some(2)),
            ],
            vec![(0, [0, 1]), (1, [1, 2])],
            BTreeMap::from([(0, vec![0]), (1, vec![0]), (2, vec![1])]),
        );
        assert!(matches!(r, Err(PlabicError::BadRotation { vertex: 1 })));
    }

    #[test]
    fn bigon_has_one_more_face() {
        // Two parallel edges between an interior black-white pair hanging
        // off the path graph pattern: b1 - w = b - w' - b2.
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
        // The bigon contributes one extra region: path graph has 2.
        assert_eq!(g.count_faces(), 3);
    }

    #[test]
    fn crossed_rotation_is_nonplanar() {
        // A star from one white center to three boundary vertices with the
        // rotation at the center of b1, b3, b2 while the disk order is
        // b1, b2, b3: forces a crossing.
        let ok = PlabicGraph::build(
            3,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::Black, Some(2)),
                (2, Color::Black, Some(3)),
                (3, Color::White, None),
            ],
            vec![(0, [0, 3]), (1, [1, 3]), (2, [2, 3])],
            BTreeMap::from([(0, vec![0]), (1, vec![1]), (2, vec![2]), (3, vec![0, 1, 2])]),
        );
        assert!(ok.is_ok());
        let bad = PlabicGraph::build(
            3,
            vec![
                (0, Color::Black, Some(1)),
                (1, Color::Black, Some(2)),
                (2, Color::Black, Some(3)),
                (3, Color::White, None),
            ],
            vec![(0, [0, 3]), (1, [1, 3]), (2, [2, 3])],
            BTreeMap::from([(0, vec![0]), (1, vec![1]), (2, vec![2]), (3, vec![0, 2, 1])]),
        );
        assert!(matches!(bad, Err(PlabicError::NonPlanarEmbedding)));
    }
}
