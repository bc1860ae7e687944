//! Exhaustive generation of small ribbon graphs, one per equivalence class.
//!
//! Connected graphs are grown edge by edge: every connected graph with at
//! least one edge loses an edge and stays connected, either by deleting an
//! edge on a cycle or by pruning a leaf, so adding one edge in every
//! possible way to every class with `k − 1` edges reaches every class with
//! `k` edges. Bouquets come from signed double-occurrence words.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::canon::{canonical_form, from_canonical_form, CanonicalForm};
use crate::error::{check_cap, Result};
use crate::graph::{Edge, End, HalfEdge, RibbonGraph, Vertex};

pub const DEFAULT_GENERAL_CAP: usize = 4;
pub const DEFAULT_BOUQUET_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub max_edges: usize,
    /// Smallest edge count to yield; `0` yields everything up to the cap.
    pub min_edges: usize,
    pub connected_only: bool,
    pub bouquets_only: bool,
}

impl EnumerationSpec {
    pub fn connected(max_edges: usize) -> Self {
        EnumerationSpec {
            max_edges,
            min_edges: 0,
            connected_only: true,
            bouquets_only: false,
        }
    }

    /// All graphs with at most `max_edges` edges and `max_edges + 1` vertices.
    pub fn all(max_edges: usize) -> Self {
        EnumerationSpec {
            connected_only: false,
            ..EnumerationSpec::connected(max_edges)
        }
    }

    pub fn bouquets(max_edges: usize) -> Self {
        EnumerationSpec {
            bouquets_only: true,
            ..EnumerationSpec::connected(max_edges)
        }
    }

    pub fn exactly(self, edges: usize) -> Self {
        EnumerationSpec {
            max_edges: edges,
            min_edges: edges,
            ..self
        }
    }

    fn default_cap(&self) -> usize {
        if self.bouquets_only {
            DEFAULT_BOUQUET_CAP
        } else {
            DEFAULT_GENERAL_CAP
        }
    }
}

/// Class representatives in canonical labelling, ordered by canonical form.
pub fn enumerate(spec: EnumerationSpec) -> Result<Vec<RibbonGraph>> {
    enumerate_with_cap(spec, spec.default_cap())
}

pub fn enumerate_with_cap(spec: EnumerationSpec, cap: usize) -> Result<Vec<RibbonGraph>> {
    check_cap("enumeration", spec.max_edges, cap, "--max-edges")?;
    let classes = if spec.bouquets_only {
        bouquet_classes(spec.max_edges)
    } else if spec.connected_only {
        connected_classes(spec.max_edges)
    } else {
        all_classes(spec.max_edges)
    };
    Ok(classes
        .into_iter()
        .filter(|(c, _)| c.num_edges() >= spec.min_edges)
        .map(|(_, g)| g)
        .collect())
}

pub fn count_classes(spec: EnumerationSpec) -> Result<usize> {
    Ok(enumerate(spec)?.len())
}

fn insert_class(map: &mut BTreeMap<CanonicalForm, RibbonGraph>, g: &RibbonGraph) {
    if let Entry::Vacant(slot) = map.entry(canonical_form(g)) {
        let rep = from_canonical_form(slot.key());
        slot.insert(rep);
    }
}

fn single_vertex() -> RibbonGraph {
    RibbonGraph::from_parts_unchecked(
        vec![Vertex {
            name: "v1".into(),
            rotation: Vec::new(),
        }],
        Vec::new(),
    )
}

fn with_inserted(rot: &[HalfEdge], at: usize, h: HalfEdge) -> Vec<HalfEdge> {
    let mut r = rot.to_vec();
    r.insert(at, h);
    r
}

/// Every graph obtained from `g` by adding one edge.
fn one_edge_extensions(g: &RibbonGraph) -> Vec<RibbonGraph> {
    let e = g.num_edges();
    let label = (e + 1).to_string();
    let first = HalfEdge::new(e, End::First);
    let second = HalfEdge::new(e, End::Second);
    let mut out = Vec::new();
    let build = |vertices: Vec<Vertex>, twisted: bool| {
        let mut edges = g.edges().to_vec();
        edges.push(Edge {
            label: label.clone(),
            twisted,
        });
        RibbonGraph::from_parts_unchecked(vertices, edges)
    };
    let slots = |d: usize| d.max(1);
    for (vi, v) in g.vertices().iter().enumerate() {
        let d = v.rotation.len();
        for i in 0..slots(d) {
            let once = with_inserted(&v.rotation, i, first);
            for j in 0..=d + 1 {
                if j <= i {
                    continue;
                }
                let rot = with_inserted(&once, j, second);
                for twisted in [false, true] {
                    let mut vs = g.vertices().to_vec();
                    vs[vi].rotation = rot.clone();
                    out.push(build(vs, twisted));
                }
            }
        }
        for (wi, w) in g.vertices().iter().enumerate().skip(vi + 1) {
            for i in 0..slots(d) {
                for j in 0..slots(w.rotation.len()) {
                    for twisted in [false, true] {
                        let mut vs = g.vertices().to_vec();
                        vs[vi].rotation = with_inserted(&v.rotation, i, first);
                        vs[wi].rotation = with_inserted(&w.rotation, j, second);
                        out.push(build(vs, twisted));
                    }
                }
            }
        }
        for i in 0..slots(d) {
            let mut vs = g.vertices().to_vec();
            vs[vi].rotation = with_inserted(&v.rotation, i, first);
            vs.push(Vertex {
                name: format!("v{}", g.num_vertices() + 1),
                rotation: vec![second],
            });
            out.push(build(vs, false));
        }
    }
    out
}

fn connected_classes(max_edges: usize) -> BTreeMap<CanonicalForm, RibbonGraph> {
    let mut all = BTreeMap::new();
    let mut level = BTreeMap::new();
    insert_class(&mut level, &single_vertex());
    for _ in 0..max_edges {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for h in one_edge_extensions(g) {
                insert_class(&mut next, &h);
            }
        }
        all.append(&mut level);
        level = next;
    }
    all.append(&mut level);
    all
}

/// Double-occurrence words on `n` letters in which letters first appear
/// in increasing order.
pub fn double_occurrence_words(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, opened: usize, open: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        if opened < n {
            word.push(opened);
            open.push(opened);
            rec(n, opened + 1, open, word, out);
            open.pop();
            word.pop();
        }
        for k in 0..open.len() {
            let l = open.remove(k);
            word.push(l);
            rec(n, opened, open, word, out);
            word.pop();
            open.insert(k, l);
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn bouquet_classes(max_edges: usize) -> BTreeMap<CanonicalForm, RibbonGraph> {
    let mut map = BTreeMap::new();
    for n in 0..=max_edges {
        for word in double_occurrence_words(n) {
            let mut seen = vec![false; n];
            let rotation: Vec<HalfEdge> = word
                .iter()
                .map(|&l| {
                    let end = if seen[l] { End::Second } else { End::First };
                    seen[l] = true;
                    HalfEdge::new(l, end)
                })
                .collect();
            for twists in 0..1u32 << n {
                let edges = (0..n)
                    .map(|i| Edge {
                        label: (i + 1).to_string(),
                        twisted: twists >> i & 1 == 1,
                    })
                    .collect();
                let g = RibbonGraph::from_parts_unchecked(
                    vec![Vertex {
                        name: "v1".into(),
                        rotation: rotation.clone(),
                    }],
                    edges,
                );
                insert_class(&mut map, &g);
            }
        }
    }
    map
}

fn all_classes(max_edges: usize) -> BTreeMap<CanonicalForm, RibbonGraph> {
    let connected: Vec<RibbonGraph> = connected_classes(max_edges).into_values().collect();
    let mut map = BTreeMap::new();
    fn rec(
        pool: &[RibbonGraph],
        from: usize,
        current: &RibbonGraph,
        edges_left: usize,
        vertices_left: usize,
        map: &mut BTreeMap<CanonicalForm, RibbonGraph>,
    ) {
        insert_class(map, current);
        for (i, c) in pool.iter().enumerate().skip(from) {
            if c.num_edges() <= edges_left && c.num_vertices() <= vertices_left {
                let next = current.disjoint_union(c);
                rec(pool, i, &next, edges_left - c.num_edges(), vertices_left - c.num_vertices(), map);
            }
        }
    }
    rec(&connected, 0, &RibbonGraph::empty(), max_edges, max_edges + 1, &mut map);
    map
}
