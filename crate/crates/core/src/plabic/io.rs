//! JSON formats for graphs, weightings, and Grassmann points.

use super::graph::{Color, PlabicGraph};
use super::measure::{EdgeWeighting, GrassmannPoint};
use crate::error::PlabicError;
use crate::num::{format_f64, format_rat, parse_rat, Coeff, Rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub rotation: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub color: Color,
    pub boundary: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: usize,
    pub ends: [usize; 2],
}

/// A weight literal: exact "p/q" strings or floats.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    Exact(String),
    Float(f64),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightsJson {
    pub weights: BTreeMap<String, WeightJson>,
}

pub fn graph_from_json(j: &GraphJson) -> Result<PlabicGraph, PlabicError> {
    let vertices = j.vertices.iter().map(|v| (v.id, v.color, v.boundary)).collect();
    let edges = j.edges.iter().map(|e| (e.id, e.ends)).collect();
    let mut rotation = BTreeMap::new();
    for (k, v) in &j.rotation {
        let id: usize = k
            .parse()
            .map_err(|_| PlabicError::BadSpec(format!("rotation key {k} is not a vertex id")))?;
        rotation.insert(id, v.clone());
    }
    PlabicGraph::build(j.n, vertices, edges, rotation)
}

pub fn graph_to_json(g: &PlabicGraph) -> GraphJson {
    GraphJson {
        n: g.n(),
        vertices: g
            .vertex_ids()
            .map(|v| VertexJson { id: v, color: g.color(v), boundary: g.boundary_index(v) })
            .collect(),
        edges: g.live_edges().map(|(id, ends)| EdgeJson { id, ends }).collect(),
        rotation: g
            .vertex_ids()
            .map(|v| (v.to_string(), g.rotation(v).to_vec()))
            .collect(),
    }
}

/// Whether every weight in a file is exact.
pub fn weights_all_exact(j: &WeightsJson) -> bool {
    j.weights.values().all(|w| matches!(w, WeightJson::Exact(_)))
}

pub fn weights_exact(j: &WeightsJson) -> Result<EdgeWeighting<Rat>, PlabicError> {
    let mut weights = BTreeMap::new();
    for (k, v) in &j.weights {
        let e: usize = k
            .parse()
            .map_err(|_| PlabicError::BadSpec(format!("weight key {k} is not an edge id")))?;
        let r = match v {
            WeightJson::Exact(s) => {
                parse_rat(s).ok_or_else(|| PlabicError::BadSpec(format!("bad rational {s}")))?
            }
            WeightJson::Float(_) => {
                return Err(PlabicError::BadSpec("float weight in exact context".into()))
            }
        };
        weights.insert(e, r);
    }
    Ok(EdgeWeighting { weights })
}

pub fn weights_float(j: &WeightsJson) -> Result<EdgeWeighting<f64>, PlabicError> {
    let mut weights = BTreeMap::new();
    for (k, v) in &j.weights {
        let e: usize = k
            .parse()
            .map_err(|_| PlabicError::BadSpec(format!("weight key {k} is not an edge id")))?;
        let x = match v {
            WeightJson::Exact(s) => parse_rat(s)
                .ok_or_else(|| PlabicError::BadSpec(format!("bad rational {s}")))?
                .to_f64(),
            WeightJson::Float(f) => *f,
        };
        weights.insert(e, x);
    }
    Ok(EdgeWeighting { weights })
}

fn subset_key(s: &[usize]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn grassmann_to_json_exact(p: &GrassmannPoint<Rat>) -> serde_json::Value {
    let coords: BTreeMap<String, String> =
        p.coords.iter().map(|(s, v)| (subset_key(s), format_rat(v))).collect();
    serde_json::json!({ "k": p.k, "n": p.n, "coords": coords })
}

pub fn grassmann_to_json_float(p: &GrassmannPoint<f64>) -> serde_json::Value {
    let coords: BTreeMap<String, String> =
        p.coords.iter().map(|(s, v)| (subset_key(s), format_f64(*v))).collect();
    serde_json::json!({ "k": p.k, "n": p.n, "coords": coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plabic::graph::path_graph;

    #[test]
    fn graph_json_roundtrip() {
        let g = path_graph();
        let j = graph_to_json(&g);
        let text = serde_json::to_string(&j).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        let g2 = graph_from_json(&back).unwrap();
        assert_eq!(g2.n(), 2);
        assert_eq!(g2.live_edges().count(), 2);
    }

    #[test]
    fn weight_literals() {
        let text = r#"{"weights":{"0":"2/3","1":0.5}}"#;
        let j: WeightsJson = serde_json::from_str(text).unwrap();
        assert!(!weights_all_exact(&j));
        let w = weights_float(&j).unwrap();
        assert!((w.get(0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(*w.get(1).unwrap(), 0.5);
    }
}
