//! Ribbon graph minors: edge deletion, edge contraction, and deletion of
//! vertices, plus a breadth-first minor search that returns a replayable
//! certificate.
//!
//! Contraction is `G/e = G^{e} \ e`. For a non-loop this merges the ends
//! of `e`; for a loop it may split the vertex in two.

use std::collections::{btree_map, BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, find_isomorphism, labeled_form, CanonicalForm, Isomorphism};
use crate::error::{check_cap, Error, Result};
use crate::graph::RibbonGraph;
use crate::pdual::partial_dual_flags;
use crate::structure::euler_genus;
use crate::subset::EdgeSubset;

pub const DEFAULT_HOST_CAP: usize = 10;
pub const DEFAULT_TARGET_CAP: usize = 4;
pub const DEFAULT_CLOSURE_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", content = "id", rename_all = "snake_case")]
pub enum MinorStep {
    DeleteEdge(String),
    ContractEdge(String),
    DeleteVertex(String),
}

impl fmt::Display for MinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorStep::DeleteEdge(e) => write!(f, "delete edge {e}"),
            MinorStep::ContractEdge(e) => write!(f, "contract edge {e}"),
            MinorStep::DeleteVertex(v) => write!(f, "delete vertex {v}"),
        }
    }
}

fn edge_of(g: &RibbonGraph, label: &str) -> Result<usize> {
    g.edge_index(label).ok_or_else(|| Error::UnknownEdge(label.to_string()))
}

pub fn delete_edge(g: &RibbonGraph, label: &str) -> Result<RibbonGraph> {
    let e = edge_of(g, label)?;
    Ok(delete_edge_index(g, e))
}

fn delete_edge_index(g: &RibbonGraph, e: usize) -> RibbonGraph {
    let keep: Vec<bool> = (0..g.num_edges()).map(|i| i != e).collect();
    g.filtered(&keep, |_, _| true)
}

pub fn contract_edge(g: &RibbonGraph, label: &str) -> Result<RibbonGraph> {
    let e = edge_of(g, label)?;
    Ok(contract_edge_index(g, e))
}

fn contract_edge_index(g: &RibbonGraph, e: usize) -> RibbonGraph {
    let flags: Vec<bool> = (0..g.num_edges()).map(|i| i == e).collect();
    delete_edge_index(&partial_dual_flags(g, &flags), e)
}

/// Removes a vertex together with every edge incident to it.
pub fn delete_vertex(g: &RibbonGraph, name: &str) -> Result<RibbonGraph> {
    let v = g
        .vertex_index(name)
        .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
    Ok(delete_vertex_index(g, v))
}

fn delete_vertex_index(g: &RibbonGraph, v: usize) -> RibbonGraph {
    let keep: Vec<bool> = g.endpoints().iter().map(|[a, b]| *a != v && *b != v).collect();
    g.filtered(&keep, |i, _| i != v)
}

pub fn apply_step(g: &RibbonGraph, step: &MinorStep) -> Result<RibbonGraph> {
    match step {
        MinorStep::DeleteEdge(e) => delete_edge(g, e),
        MinorStep::ContractEdge(e) => contract_edge(g, e),
        MinorStep::DeleteVertex(v) => delete_vertex(g, v),
    }
}

pub fn replay(g: &RibbonGraph, steps: &[MinorStep]) -> Result<RibbonGraph> {
    let mut h = g.clone();
    for s in steps {
        h = apply_step(&h, s)?;
    }
    Ok(h)
}

/// All single-step minors: edge deletions, then contractions, then vertex
/// deletions, each in index order.
pub fn one_step_minors(g: &RibbonGraph) -> Vec<(MinorStep, RibbonGraph)> {
    let mut out = Vec::with_capacity(2 * g.num_edges() + g.num_vertices());
    for (i, e) in g.edges().iter().enumerate() {
        out.push((MinorStep::DeleteEdge(e.label.clone()), delete_edge_index(g, i)));
    }
    for (i, e) in g.edges().iter().enumerate() {
        out.push((MinorStep::ContractEdge(e.label.clone()), contract_edge_index(g, i)));
    }
    for (i, v) in g.vertices().iter().enumerate() {
        out.push((MinorStep::DeleteVertex(v.name.clone()), delete_vertex_index(g, i)));
    }
    out
}

/// A replayable proof that `target_graph` is a minor of some host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub steps: Vec<MinorStep>,
    pub target: String,
    pub target_graph: RibbonGraph,
    /// Carries the result of replaying `steps` onto `target_graph`.
    pub witness: Isomorphism,
}

/// Replays the steps on `g` and checks the witness independently.
pub fn verify_certificate(g: &RibbonGraph, cert: &MinorCertificate) -> bool {
    match replay(g, &cert.steps) {
        Ok(h) => cert.witness.check(&h, &cert.target_graph),
        Err(_) => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorSearch {
    pub host_cap: usize,
    pub target_cap: usize,
    /// Skip states whose Euler genus is below every target's. Sound because
    /// Euler genus never increases under deletion or contraction.
    pub genus_pruning: bool,
}

impl Default for MinorSearch {
    fn default() -> Self {
        MinorSearch {
            host_cap: DEFAULT_HOST_CAP,
            target_cap: DEFAULT_TARGET_CAP,
            genus_pruning: true,
        }
    }
}

impl MinorSearch {
    /// Breadth-first search over minor classes of `g`, returning the first
    /// state equivalent to any of `targets`.
    pub fn find(&self, g: &RibbonGraph, targets: &[(&str, &RibbonGraph)]) -> Result<Option<MinorCertificate>> {
        check_cap("minor search host", g.num_edges(), self.host_cap, "--max-edges")?;
        for (_, t) in targets {
            check_cap("minor search target", t.num_edges(), self.target_cap, "--max-edges")?;
        }
        if targets.is_empty() {
            return Ok(None);
        }
        let codes: HashMap<CanonicalForm, usize> = targets
            .iter()
            .enumerate()
            .map(|(i, (_, t))| (canonical_form(t), i))
            .collect();
        let min_edges = targets.iter().map(|(_, t)| t.num_edges()).min().unwrap();
        let min_genus = targets.iter().map(|(_, t)| euler_genus(t)).min().unwrap();
        let min_vertices_gap = |h: &RibbonGraph| targets.iter().all(|(_, t)| h.num_vertices() + h.num_edges() < t.num_vertices());

        // (graph, parent, step into it)
        let mut states: Vec<(RibbonGraph, usize, Option<MinorStep>)> = Vec::new();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut queue = VecDeque::new();

        let finish = |states: &Vec<(RibbonGraph, usize, Option<MinorStep>)>, at: usize, ti: usize| {
            let mut steps = Vec::new();
            let mut i = at;
            while let Some(s) = &states[i].2 {
                steps.push(s.clone());
                i = states[i].1;
            }
            steps.reverse();
            let (name, target) = targets[ti];
            let witness = find_isomorphism(&states[at].0, target).expect("equal canonical forms");
            MinorCertificate {
                steps,
                target: name.to_string(),
                target_graph: target.clone(),
                witness,
            }
        };

        let c = canonical_form(g);
        if let Some(&ti) = codes.get(&c) {
            states.push((g.clone(), 0, None));
            return Ok(Some(finish(&states, 0, ti)));
        }
        seen.insert(c);
        states.push((g.clone(), 0, None));
        queue.push_back(0);
        while let Some(at) = queue.pop_front() {
            let current = states[at].0.clone();
            for (step, h) in one_step_minors(&current) {
                if h.num_edges() < min_edges {
                    continue;
                }
                if self.genus_pruning && euler_genus(&h) < min_genus {
                    continue;
                }
                // Vertex counts can only grow by contracting loops, one per edge.
                if min_vertices_gap(&h) {
                    continue;
                }
                let c = canonical_form(&h);
                if seen.contains(&c) {
                    continue;
                }
                let hit = codes.get(&c).copied();
                seen.insert(c);
                states.push((h, at, Some(step)));
                let idx = states.len() - 1;
                if let Some(ti) = hit {
                    return Ok(Some(finish(&states, idx, ti)));
                }
                queue.push_back(idx);
            }
        }
        Ok(None)
    }
}

pub fn has_minor(g: &RibbonGraph, h: &RibbonGraph) -> Result<Option<MinorCertificate>> {
    MinorSearch::default().find(g, &[("H", h)])
}

pub fn has_any_minor(g: &RibbonGraph, targets: &[(&str, &RibbonGraph)]) -> Result<Option<MinorCertificate>> {
    MinorSearch::default().find(g, targets)
}

/// Every minor class of `g`, keyed by canonical form, with one concrete
/// minor per class.
pub fn minor_classes(g: &RibbonGraph, cap: usize) -> Result<BTreeMap<CanonicalForm, RibbonGraph>> {
    check_cap("minor closure", g.num_edges(), cap, "--max-edges")?;
    let mut out = BTreeMap::new();
    let mut queue = VecDeque::new();
    out.insert(canonical_form(g), g.clone());
    queue.push_back(g.clone());
    while let Some(cur) = queue.pop_front() {
        for (_, h) in one_step_minors(&cur) {
            if let btree_map::Entry::Vacant(slot) = out.entry(canonical_form(&h)) {
                slot.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

/// Every minor of `g` up to equivalence that preserves edge labels.
pub fn labeled_minors(g: &RibbonGraph, cap: usize) -> Result<Vec<RibbonGraph>> {
    check_cap("minor closure", g.num_edges(), cap, "--max-edges")?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(labeled_form(g));
    queue.push_back(g.clone());
    while let Some(cur) = queue.pop_front() {
        for (_, h) in one_step_minors(&cur) {
            if seen.insert(labeled_form(&h)) {
                queue.push_back(h);
            }
        }
        out.push(cur);
    }
    Ok(out)
}

/// Compares `{J^{A ∩ E(J)} : J a minor of G}` with the minors of `G^A`,
/// both as sets of equivalence classes.
pub fn eq1_check(g: &RibbonGraph, a: &EdgeSubset) -> Result<bool> {
    let flags = a.flags(g)?;
    let lhs: BTreeSet<CanonicalForm> = labeled_minors(g, DEFAULT_CLOSURE_CAP)?
        .iter()
        .map(|j| {
            let sub = a.restricted_to(j);
            canonical_form(&crate::pdual::partial_dual(j, &sub).expect("labels restricted to J"))
        })
        .collect();
    let dual = partial_dual_flags(g, &flags);
    let rhs: BTreeSet<CanonicalForm> = minor_classes(&dual, DEFAULT_CLOSURE_CAP)?.into_keys().collect();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_equivalent;
    use crate::format::parse_rg;
    use crate::structure::num_components;

    fn path() -> RibbonGraph {
        parse_rg("vertex u : e.1\nvertex w : e.2\nedge e : +\n").unwrap()
    }

    #[test]
    fn contracting_a_non_loop_merges_its_ends() {
        let g = parse_rg("vertex u : a.1 e.1 b.1\nvertex w : e.2 a.2 b.2\nedge a : +\nedge b : -\nedge e : +\n").unwrap();
        let h = contract_edge(&g, "e").unwrap();
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.vertices()[0].name, "u+w");
        assert_eq!(euler_genus(&h), euler_genus(&g));
    }

    #[test]
    fn contracting_loops() {
        let o1 = RibbonGraph::bouquet("e e", &[]).unwrap();
        let h = contract_edge(&o1, "e").unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (2, 0));
        let n1 = RibbonGraph::bouquet("e e", &["e"]).unwrap();
        let h = contract_edge(&n1, "e").unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (1, 0));
    }

    #[test]
    fn deleting_a_vertex_drops_its_edges() {
        let h = delete_vertex(&path(), "u").unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (1, 0));
        assert!(delete_vertex(&path(), "z").is_err());
        assert!(delete_edge(&path(), "z").is_err());
    }

    #[test]
    fn single_vertex_is_a_minor_of_everything_nonempty() {
        let target = RibbonGraph::from_named([("v".to_string(), vec![])], Vec::<(String, bool)>::new()).unwrap();
        let g = RibbonGraph::bouquet("1 2 3 1 2 3", &[]).unwrap();
        let cert = has_minor(&g, &target).unwrap().unwrap();
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn n1_is_not_a_minor_of_a_plane_graph() {
        let g = RibbonGraph::bouquet("1 1 2 2 3 3", &[]).unwrap();
        let n1 = RibbonGraph::bouquet("e e", &["e"]).unwrap();
        assert!(has_minor(&g, &n1).unwrap().is_none());
        let with_twist = RibbonGraph::bouquet("1 1 2 2 3 3", &["2"]).unwrap();
        let cert = has_minor(&with_twist, &n1).unwrap().unwrap();
        assert!(verify_certificate(&with_twist, &cert));
        let replayed = replay(&with_twist, &cert.steps).unwrap();
        assert!(are_equivalent(&replayed, &n1));
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let g = RibbonGraph::bouquet("1 1 2 2", &["2"]).unwrap();
        let n1 = RibbonGraph::bouquet("e e", &["e"]).unwrap();
        let mut cert = has_minor(&g, &n1).unwrap().unwrap();
        cert.steps.push(MinorStep::DeleteEdge("nope".into()));
        assert!(!verify_certificate(&g, &cert));
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = RibbonGraph::bouquet("1 2 1 2", &[]).unwrap();
        let o1 = RibbonGraph::bouquet("e e", &[]).unwrap();
        let cert = has_minor(&g, &o1).unwrap().unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"op\":\"delete_edge\""));
        let back: MinorCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn closure_of_one_loop() {
        let o1 = RibbonGraph::bouquet("e e", &[]).unwrap();
        // O1, a vertex, two vertices, the empty graph
        let m = minor_classes(&o1, 5).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.values().any(|h| h.is_empty()));
        assert!(m.values().any(|h| h.num_edges() == 0 && num_components(h) == 2));
    }

    #[test]
    fn minors_of_partial_duals_small() {
        let g = RibbonGraph::bouquet("1 2 1 2", &["1"]).unwrap();
        for a in [vec![], vec!["1"], vec!["2"], vec!["1", "2"]] {
            assert!(eq1_check(&g, &EdgeSubset::from_labels(a)).unwrap());
        }
    }
}
