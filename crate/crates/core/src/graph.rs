//! Signed rotation systems.
//!
//! A [`RibbonGraph`] stores, for every vertex, the cyclic order of the
//! half-edges incident to it, and for every edge whether its band carries a
//! half twist. Edges are addressed by index internally and by label at the
//! public surface; labels survive every operation in the crate (duals,
//! deletions, contractions) so subsets can be tracked across them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    First,
    Second,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::First => End::Second,
            End::Second => End::First,
        }
    }

    pub fn index(self) -> usize {
        match self {
            End::First => 0,
            End::Second => 1,
        }
    }

    /// The suffix used in the text format (`e.1`, `e.2`).
    pub fn suffix(self) -> u8 {
        self.index() as u8 + 1
    }
}

/// One end of an edge, addressed by edge index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: usize,
    pub end: End,
}

impl HalfEdge {
    pub fn new(edge: usize, end: End) -> Self {
        HalfEdge { edge, end }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub rotation: Vec<HalfEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub twisted: bool,
}

/// A ribbon graph as a signed rotation system.
///
/// Values are immutable once built: every operation returns a new graph.
/// Equality (`==`) is structural; use [`crate::are_equivalent`] for
/// ribbon graph equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

pub(crate) fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| !c.is_whitespace() && !matches!(c, ':' | '#' | '<' | '>' | ',' | '"'))
}

impl RibbonGraph {
    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        RibbonGraph::default()
    }

    /// Builds a graph from named parts, checking every invariant.
    ///
    /// `vertices` pairs a vertex name with its rotation, written as
    /// `(edge label, end)`; `edges` lists every edge label with its twist.
    /// Edge indices follow the order of `edges`.
    pub fn from_named<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (String, Vec<(String, End)>)>,
        E: IntoIterator<Item = (String, bool)>,
    {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(label, twisted)| Edge { label, twisted })
            .collect();
        let mut index = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if !valid_label(&e.label) {
                return Err(GraphError::InvalidLabel(e.label.clone()).into());
            }
            if index.insert(e.label.clone(), i).is_some() {
                return Err(GraphError::DuplicateEdge(e.label.clone()).into());
            }
        }
        let mut built = Vec::new();
        for (name, rot) in vertices {
            let mut rotation = Vec::with_capacity(rot.len());
            for (label, end) in rot {
                match index.get(&label) {
                    Some(&edge) => rotation.push(HalfEdge { edge, end }),
                    None => {
                        return Err(GraphError::UnpairedEdge(format!("{}.{}", label, end.suffix())).into())
                    }
                }
            }
            built.push(Vertex { name, rotation });
        }
        let g = RibbonGraph {
            vertices: built,
            edges,
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds a graph from indexed parts, checking every invariant.
    pub fn from_parts(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let g = RibbonGraph { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        let g = RibbonGraph { vertices, edges };
        debug_assert_eq!(g.validate(), Ok(()));
        g
    }

    /// A one-vertex graph read off a word of edge labels, each occurring
    /// twice; the first occurrence of a label is its first end.
    ///
    /// ```
    /// use ribbon_core::RibbonGraph;
    /// let g = RibbonGraph::bouquet("e f e f", &["f"]).unwrap();
    /// assert_eq!(g.num_edges(), 2);
    /// ```
    pub fn bouquet(word: &str, twisted: &[&str]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut rotation = Vec::new();
        for tok in word.split_whitespace() {
            let end = if labels.iter().any(|l| l == tok) {
                End::Second
            } else {
                labels.push(tok.to_string());
                End::First
            };
            rotation.push((tok.to_string(), end));
        }
        for t in twisted {
            if !labels.iter().any(|l| l == t) {
                return Err(crate::Error::UnknownEdge(t.to_string()));
            }
        }
        let edges = labels
            .iter()
            .map(|l| (l.clone(), twisted.contains(&l.as_str())))
            .collect::<Vec<_>>();
        RibbonGraph::from_named(vec![("v".to_string(), rotation)], edges)
    }

    /// Checks every structural invariant and reports the first violation.
    pub fn validate(&self) -> std::result::Result<(), GraphError> {
        let mut labels = BTreeSet::new();
        for e in &self.edges {
            if !valid_label(&e.label) {
                return Err(GraphError::InvalidLabel(e.label.clone()));
            }
            if !labels.insert(e.label.as_str()) {
                return Err(GraphError::DuplicateEdge(e.label.clone()));
            }
        }
        let mut names = BTreeSet::new();
        let mut seen = vec![[false; 2]; self.edges.len()];
        for v in &self.vertices {
            if !valid_label(&v.name) {
                return Err(GraphError::InvalidLabel(v.name.clone()));
            }
            if !names.insert(v.name.as_str()) {
                return Err(GraphError::DuplicateVertex(v.name.clone()));
            }
            for h in &v.rotation {
                if h.edge >= self.edges.len() {
                    return Err(GraphError::UnpairedEdge(format!("#{}.{}", h.edge, h.end.suffix())));
                }
                let slot = &mut seen[h.edge][h.end.index()];
                if *slot {
                    return Err(GraphError::DuplicateHalfEdge(self.half_edge_name(*h)));
                }
                *slot = true;
            }
        }
        for (i, s) in seen.iter().enumerate() {
            for end in [End::First, End::Second] {
                if !s[end.index()] {
                    return Err(GraphError::DanglingHalfEdge(self.half_edge_name(HalfEdge::new(i, end))));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.edges.iter().map(|e| e.label.as_str())
    }

    pub fn half_edge_name(&self, h: HalfEdge) -> String {
        match self.edges.get(h.edge) {
            Some(e) => format!("{}.{}", e.label, h.end.suffix()),
            None => format!("#{}.{}", h.edge, h.end.suffix()),
        }
    }

    /// `(vertex index, position in rotation)` of both ends of every edge.
    pub fn end_positions(&self) -> Vec<[(usize, usize); 2]> {
        let mut pos = vec![[(usize::MAX, usize::MAX); 2]; self.edges.len()];
        for (vi, v) in self.vertices.iter().enumerate() {
            for (i, h) in v.rotation.iter().enumerate() {
                pos[h.edge][h.end.index()] = (vi, i);
            }
        }
        pos
    }

    /// Vertex indices of the two ends of every edge.
    pub fn endpoints(&self) -> Vec<[usize; 2]> {
        self.end_positions()
            .into_iter()
            .map(|p| [p[0].0, p[1].0])
            .collect()
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let p = self.endpoints();
        p[edge][0] == p[edge][1]
    }

    /// Reverses the rotation at `vertex` and toggles the twist of every
    /// non-loop edge with an end there. The result is equivalent to `self`.
    pub fn flip_vertex(&self, vertex: usize) -> RibbonGraph {
        let ends = self.endpoints();
        let mut g = self.clone();
        g.vertices[vertex].rotation.reverse();
        for (i, e) in g.edges.iter_mut().enumerate() {
            let [a, b] = ends[i];
            if (a == vertex) != (b == vertex) {
                e.twisted = !e.twisted;
            }
        }
        g
    }

    /// Renames vertices; `names` is indexed by vertex.
    pub fn with_vertex_names(&self, names: Vec<String>) -> Result<RibbonGraph> {
        assert_eq!(names.len(), self.vertices.len());
        let mut g = self.clone();
        for (v, n) in g.vertices.iter_mut().zip(names) {
            v.name = n;
        }
        g.validate()?;
        Ok(g)
    }

    /// Renames edges; `labels` is indexed by edge.
    pub fn with_edge_labels(&self, labels: Vec<String>) -> Result<RibbonGraph> {
        assert_eq!(labels.len(), self.edges.len());
        let mut g = self.clone();
        for (e, l) in g.edges.iter_mut().zip(labels) {
            e.label = l;
        }
        g.validate()?;
        Ok(g)
    }

    /// Disjoint union. Clashing vertex names or edge labels of `other` are
    /// suffixed with `'` until unique.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let mut vnames: BTreeSet<String> = self.vertices.iter().map(|v| v.name.clone()).collect();
        let mut elabels: BTreeSet<String> = self.edges.iter().map(|e| e.label.clone()).collect();
        let fresh = |taken: &mut BTreeSet<String>, base: &str| {
            let mut s = base.to_string();
            while taken.contains(&s) {
                s.push('\'');
            }
            taken.insert(s.clone());
            s
        };
        let offset = self.edges.len();
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(Edge {
                label: fresh(&mut elabels, &e.label),
                twisted: e.twisted,
            });
        }
        for v in &other.vertices {
            vertices.push(Vertex {
                name: fresh(&mut vnames, &v.name),
                rotation: v
                    .rotation
                    .iter()
                    .map(|h| HalfEdge::new(h.edge + offset, h.end))
                    .collect(),
            });
        }
        RibbonGraph::from_parts_unchecked(vertices, edges)
    }

    /// Keeps the edges flagged in `keep` (indexed by edge) and the vertices
    /// for which `keep_vertex` holds, re-indexing edges in order.
    pub(crate) fn filtered(&self, keep: &[bool], keep_vertex: impl Fn(usize, &Vertex) -> bool) -> RibbonGraph {
        let mut remap = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep[i] {
                remap[i] = edges.len();
                edges.push(e.clone());
            }
        }
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, v)| keep_vertex(*i, v))
            .map(|(_, v)| Vertex {
                name: v.name.clone(),
                rotation: v
                    .rotation
                    .iter()
                    .filter(|h| keep[h.edge])
                    .map(|h| HalfEdge::new(remap[h.edge], h.end))
                    .collect(),
            })
            .collect();
        RibbonGraph::from_parts_unchecked(vertices, edges)
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::to_rg_string(self))
    }
}

#[derive(Serialize, Deserialize)]
struct WireVertex {
    name: String,
    rotation: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct WireEdge {
    label: String,
    twisted: bool,
}

#[derive(Serialize, Deserialize)]
struct WireGraph {
    vertices: Vec<WireVertex>,
    edges: Vec<WireEdge>,
}

impl Serialize for RibbonGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| WireVertex {
                    name: v.name.clone(),
                    rotation: v.rotation.iter().map(|h| self.half_edge_name(*h)).collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| WireEdge {
                    label: e.label.clone(),
                    twisted: e.twisted,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RibbonGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = WireGraph::deserialize(d)?;
        let mut vertices = Vec::new();
        for v in w.vertices {
            let mut rot = Vec::new();
            for h in v.rotation {
                rot.push(crate::format::parse_half_edge(&h).map_err(D::Error::custom)?);
            }
            vertices.push((v.name, rot));
        }
        RibbonGraph::from_named(vertices, w.edges.into_iter().map(|e| (e.label, e.twisted)))
            .map_err(D::Error::custom)
    }
}
