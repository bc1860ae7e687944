//! Canonical forms and equivalence of ribbon graphs.
//!
//! Two ribbon graphs are equivalent when a bijection of vertices, edges and
//! half-edges carries one rotation system to the other after flipping some
//! vertices. A connected graph is read from a root (vertex, starting
//! position, direction); the root fixes the orientation of every other
//! vertex by requiring the edge through which it is discovered to be
//! untwisted. The reading lists each rotation by edge number plus the
//! resulting twists, and the least reading over all roots is the canonical
//! code. Disconnected graphs use the sorted list of component codes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, End, HalfEdge, RibbonGraph, Vertex};
use crate::structure::component_labels;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total edge count encoded in the form.
    pub fn num_edges(&self) -> usize {
        self.0[1] as usize
    }
}

/// Canonical form up to equivalence with edge labels kept: two graphs
/// share it iff an equivalence maps every edge to the edge with the same
/// label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledForm(Vec<u32>, Vec<String>);

struct Reading {
    vertex_order: Vec<usize>,
    forward: Vec<bool>,
    half_edges: Vec<HalfEdge>,
}

struct Reader<'a> {
    g: &'a RibbonGraph,
    pos: Vec<[(usize, usize); 2]>,
    fixed_numbers: Option<Vec<u32>>,
}

const UNSET: u32 = u32::MAX;

impl<'a> Reader<'a> {
    fn new(g: &'a RibbonGraph, fixed_numbers: Option<Vec<u32>>) -> Self {
        Reader {
            g,
            pos: g.end_positions(),
            fixed_numbers,
        }
    }

    /// Reads the component of `root` and appends its code to `out`.
    fn read(&self, root: usize, start: usize, fwd: bool, header: [u32; 2], out: &mut Vec<u32>, mut reading: Option<&mut Reading>) {
        let g = self.g;
        let nv = g.num_vertices();
        let mut forward = vec![true; nv];
        let mut begin = vec![0usize; nv];
        let mut seen = vec![false; nv];
        let mut numbers = vec![UNSET; g.num_edges()];
        let mut order_of_edges: Vec<usize> = Vec::with_capacity(header[1] as usize);
        let mut queue = Vec::with_capacity(header[0] as usize);
        queue.push(root);
        seen[root] = true;
        forward[root] = fwd;
        begin[root] = start;
        out.extend_from_slice(&header);
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            let rot = &g.vertices()[v].rotation;
            let d = rot.len();
            out.push(d as u32);
            for k in 0..d {
                let i = if forward[v] { (begin[v] + k) % d } else { (begin[v] + d - k) % d };
                let h = rot[i];
                if let Some(r) = reading.as_deref_mut() {
                    r.half_edges.push(h);
                }
                let e = h.edge;
                if numbers[e] == UNSET {
                    numbers[e] = match &self.fixed_numbers {
                        Some(f) => f[e],
                        None => order_of_edges.len() as u32,
                    };
                    order_of_edges.push(e);
                }
                out.push(numbers[e]);
                let (w, j) = self.pos[e][h.end.other().index()];
                if !seen[w] {
                    seen[w] = true;
                    forward[w] = forward[v] ^ g.edges()[e].twisted;
                    begin[w] = j;
                    queue.push(w);
                }
            }
        }
        for &e in &order_of_edges {
            let (a, b) = (self.pos[e][0].0, self.pos[e][1].0);
            let eff = g.edges()[e].twisted ^ (a != b && forward[a] != forward[b]);
            out.push(eff as u32);
        }
        if let Some(r) = reading {
            r.vertex_order = queue;
            r.forward = forward;
        }
    }

    /// Least code of the component containing vertex `v`, with the root
    /// achieving it.
    fn best(&self, v_members: &[usize], header: [u32; 2]) -> (Vec<u32>, (usize, usize, bool)) {
        let g = self.g;
        let mut best: Option<(Vec<u32>, (usize, usize, bool))> = None;
        let mut buf = Vec::new();
        for &v in v_members {
            let d = g.vertices()[v].rotation.len();
            if d == 0 && v_members.len() > 1 {
                continue;
            }
            for start in 0..d.max(1) {
                for fwd in [true, false] {
                    if d == 0 && !fwd {
                        continue;
                    }
                    buf.clear();
                    self.read(v, start, fwd, header, &mut buf, None);
                    if best.as_ref().is_none_or(|(b, _)| buf < *b) {
                        best = Some((buf.clone(), (v, start, fwd)));
                    }
                }
            }
        }
        best.expect("component has a vertex")
    }
}

struct Component {
    vertices: Vec<usize>,
    header: [u32; 2],
}

fn split_components(g: &RibbonGraph) -> Vec<Component> {
    let (label, count) = component_labels(g);
    let mut comps: Vec<Component> = (0..count)
        .map(|_| Component {
            vertices: Vec::new(),
            header: [0, 0],
        })
        .collect();
    for (v, &c) in label.iter().enumerate() {
        comps[c].vertices.push(v);
        comps[c].header[0] += 1;
    }
    for [a, _] in g.endpoints() {
        comps[label[a]].header[1] += 1;
    }
    comps
}

fn code_of(g: &RibbonGraph, fixed: Option<Vec<u32>>) -> Vec<u32> {
    let reader = Reader::new(g, fixed);
    let mut codes: Vec<Vec<u32>> = split_components(g)
        .iter()
        .map(|c| reader.best(&c.vertices, c.header).0)
        .collect();
    codes.sort();
    let mut out = vec![g.num_vertices() as u32, g.num_edges() as u32, codes.len() as u32];
    for c in codes {
        out.push(c.len() as u32);
        out.extend(c);
    }
    out
}

pub fn canonical_form(g: &RibbonGraph) -> CanonicalForm {
    CanonicalForm(code_of(g, None))
}

pub fn labeled_form(g: &RibbonGraph) -> LabeledForm {
    let mut labels: Vec<String> = g.edge_labels().map(String::from).collect();
    labels.sort();
    let rank: Vec<u32> = g
        .edge_labels()
        .map(|l| labels.binary_search_by(|x| x.as_str().cmp(l)).unwrap() as u32)
        .collect();
    LabeledForm(code_of(g, Some(rank)), labels)
}

pub fn are_equivalent(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    g.num_vertices() == h.num_vertices() && g.num_edges() == h.num_edges() && canonical_form(g) == canonical_form(h)
}

/// The graph a canonical form encodes, with vertices `v1, v2, ...` and
/// edges `1, 2, ...` numbered in reading order.
pub fn from_canonical_form(c: &CanonicalForm) -> RibbonGraph {
    let code = &c.0;
    let ncomp = code[2] as usize;
    let mut idx = 3;
    let mut vertices = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    for _ in 0..ncomp {
        let len = code[idx] as usize;
        let comp = &code[idx + 1..idx + 1 + len];
        idx += 1 + len;
        let (nv, ne) = (comp[0] as usize, comp[1] as usize);
        let base = edges.len();
        let mut used = vec![false; ne];
        let mut k = 2;
        for _ in 0..nv {
            let d = comp[k] as usize;
            let rotation = comp[k + 1..k + 1 + d]
                .iter()
                .map(|&n| {
                    let n = n as usize;
                    let end = if used[n] { End::Second } else { End::First };
                    used[n] = true;
                    HalfEdge::new(base + n, end)
                })
                .collect();
            k += 1 + d;
            vertices.push(Vertex {
                name: format!("v{}", vertices.len() + 1),
                rotation,
            });
        }
        for n in 0..ne {
            edges.push(Edge {
                label: (base + n + 1).to_string(),
                twisted: comp[k + n] == 1,
            });
        }
    }
    RibbonGraph::from_parts_unchecked(vertices, edges)
}

/// A canonically labelled representative of the class of `g`.
pub fn canonical_representative(g: &RibbonGraph) -> RibbonGraph {
    from_canonical_form(&canonical_form(g))
}

/// An explicit equivalence between two ribbon graphs: flip the listed
/// source vertices, exchange the ends of the listed source edges, then
/// rename.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
    pub flipped: BTreeSet<String>,
    pub swapped_ends: BTreeSet<String>,
}

fn is_cyclic_shift<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

impl Isomorphism {
    /// Checks that the maps are bijections carrying `g` onto `h`.
    pub fn check(&self, g: &RibbonGraph, h: &RibbonGraph) -> bool {
        if g.num_vertices() != h.num_vertices()
            || g.num_edges() != h.num_edges()
            || self.vertex_map.len() != g.num_vertices()
            || self.edge_map.len() != g.num_edges()
        {
            return false;
        }
        let vimg: BTreeSet<&String> = self.vertex_map.values().collect();
        let eimg: BTreeSet<&String> = self.edge_map.values().collect();
        if vimg.len() != g.num_vertices() || eimg.len() != g.num_edges() {
            return false;
        }
        let ends_g = g.endpoints();
        for (ei, e) in g.edges().iter().enumerate() {
            let Some(target) = self.edge_map.get(&e.label).and_then(|l| h.edge_index(l)) else {
                return false;
            };
            let [a, b] = ends_g[ei];
            let fa = self.flipped.contains(&g.vertices()[a].name);
            let fb = self.flipped.contains(&g.vertices()[b].name);
            if e.twisted ^ (a != b && fa != fb) != h.edges()[target].twisted {
                return false;
            }
        }
        for v in g.vertices() {
            let Some(img) = self.vertex_map.get(&v.name).and_then(|n| h.vertex_index(n)) else {
                return false;
            };
            let mut mapped: Vec<HalfEdge> = v
                .rotation
                .iter()
                .map(|he| {
                    let label = &g.edges()[he.edge].label;
                    let edge = h.edge_index(&self.edge_map[label]).unwrap();
                    let end = if self.swapped_ends.contains(label) { he.end.other() } else { he.end };
                    HalfEdge::new(edge, end)
                })
                .collect();
            if self.flipped.contains(&v.name) {
                mapped.reverse();
            }
            if !is_cyclic_shift(&mapped, &h.vertices()[img].rotation) {
                return false;
            }
        }
        true
    }
}

/// An equivalence from `g` to `h`, if one exists.
pub fn find_isomorphism(g: &RibbonGraph, h: &RibbonGraph) -> Option<Isomorphism> {
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return None;
    }
    let read_all = |x: &RibbonGraph| {
        let reader = Reader::new(x, None);
        let mut out: Vec<(Vec<u32>, Reading)> = split_components(x)
            .iter()
            .map(|c| {
                let (code, (v, s, f)) = reader.best(&c.vertices, c.header);
                let mut r = Reading {
                    vertex_order: Vec::new(),
                    forward: Vec::new(),
                    half_edges: Vec::new(),
                };
                reader.read(v, s, f, c.header, &mut Vec::new(), Some(&mut r));
                (code, r)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    };
    let rg = read_all(g);
    let rh = read_all(h);
    if rg.len() != rh.len() || rg.iter().zip(&rh).any(|(a, b)| a.0 != b.0) {
        return None;
    }
    let mut iso = Isomorphism::default();
    for ((_, a), (_, b)) in rg.iter().zip(&rh) {
        for (&u, &w) in a.vertex_order.iter().zip(&b.vertex_order) {
            iso.vertex_map
                .insert(g.vertices()[u].name.clone(), h.vertices()[w].name.clone());
            if a.forward[u] != b.forward[w] {
                iso.flipped.insert(g.vertices()[u].name.clone());
            }
        }
        for (x, y) in a.half_edges.iter().zip(&b.half_edges) {
            let label = &g.edges()[x.edge].label;
            iso.edge_map.insert(label.clone(), h.edges()[y.edge].label.clone());
            if x.end == End::First && y.end == End::Second {
                iso.swapped_ends.insert(label.clone());
            }
        }
    }
    debug_assert!(iso.check(g, h));
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_rg;

    #[test]
    fn relabelled_graphs_are_equivalent() {
        let g = RibbonGraph::bouquet("a b c a b c", &["b"]).unwrap();
        let h = RibbonGraph::bouquet("z x y z x y", &["x"]).unwrap();
        assert!(are_equivalent(&g, &h));
        let iso = find_isomorphism(&g, &h).unwrap();
        assert!(iso.check(&g, &h));
        assert_eq!(iso.edge_map["b"], "x");
    }

    #[test]
    fn orientability_separates_o1_n1() {
        let o1 = RibbonGraph::bouquet("e e", &[]).unwrap();
        let n1 = RibbonGraph::bouquet("e e", &["e"]).unwrap();
        assert!(!are_equivalent(&o1, &n1));
        assert!(find_isomorphism(&o1, &n1).is_none());
    }

    #[test]
    fn flipped_vertex_is_equivalent() {
        let g = parse_rg("vertex u : a.1 l.1 b.1 l.2\nvertex w : b.2 a.2\nedge a : +\nedge b : -\nedge l : +\n").unwrap();
        for v in 0..2 {
            let f = g.flip_vertex(v);
            // flip oracle: the flipped graph differs structurally but not up to equivalence
            assert_ne!(f, g);
            assert!(are_equivalent(&g, &f));
            assert!(find_isomorphism(&f, &g).unwrap().check(&f, &g));
        }
    }

    #[test]
    fn representative_round_trip() {
        let g = parse_rg("vertex u : a.1 l.1 b.1 l.2\nvertex w : b.2 a.2\nvertex z :\nedge a : +\nedge b : -\nedge l : +\n").unwrap();
        let r = canonical_representative(&g);
        assert!(are_equivalent(&g, &r));
        assert_eq!(canonical_form(&r), canonical_form(&g));
    }

    #[test]
    fn labeled_form_keeps_labels() {
        let g = RibbonGraph::bouquet("a a b b", &["a"]).unwrap();
        let h = RibbonGraph::bouquet("b b a a", &["b"]).unwrap();
        assert!(are_equivalent(&g, &h));
        assert_ne!(labeled_form(&g), labeled_form(&h));
        let k = RibbonGraph::bouquet("b b a a", &["a"]).unwrap();
        assert_eq!(labeled_form(&g), labeled_form(&k));
    }

    #[test]
    fn tampered_witness_fails() {
        let g = RibbonGraph::bouquet("a b a c b c", &[]).unwrap();
        let mut iso = find_isomorphism(&g, &g).unwrap();
        assert!(iso.check(&g, &g));
        let l = iso.edge_map.keys().next().unwrap().clone();
        if !iso.swapped_ends.remove(&l) {
            iso.swapped_ends.insert(l);
        }
        assert!(!iso.check(&g, &g));
    }
}
