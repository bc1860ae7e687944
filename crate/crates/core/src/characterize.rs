//! Deciding whether a ribbon graph has a partial dual of Euler genus at
//! most one, three ways: brute force over all partial duals, biseparations,
//! and excluded minors.
//!
//! The excluded minors are not transcribed from anywhere. They are found by
//! [`obstruction_search`] and frozen as fixtures; a test re-runs the search
//! and compares.

use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::biseparation::{find_biseparation_with_cap, BiseparationCertificate, BiseparationKind};
use crate::canon::{are_equivalent, canonical_form, find_isomorphism, CanonicalForm};
use crate::enumerate::{enumerate_with_cap, EnumerationSpec, DEFAULT_GENERAL_CAP};
use crate::error::{check_cap, Error, Result};
use crate::format::parse_rg;
use crate::graph::RibbonGraph;
use crate::minors::{one_step_minors, MinorCertificate, MinorSearch, MinorStep};
use crate::pdual::{genus_profile_with_cap, min_partial_dual_genus, partial_dual, DEFAULT_BRUTE_CAP};
use crate::structure::{component_labels, components, is_connected};
use crate::subset::EdgeSubset;

const X1_RG: &str = include_str!("../fixtures/x1.rg");
const X2_RG: &str = include_str!("../fixtures/x2.rg");
const X3_RG: &str = include_str!("../fixtures/x3.rg");
const P1_RG: &str = include_str!("../fixtures/p1.rg");
const P2_RG: &str = include_str!("../fixtures/p2.rg");
const P3_RG: &str = include_str!("../fixtures/p3.rg");

fn load(cell: &'static OnceLock<Vec<(&'static str, RibbonGraph)>>, src: &[(&'static str, &str)]) -> &'static [(&'static str, RibbonGraph)] {
    cell.get_or_init(|| {
        src.iter()
            .map(|(name, text)| (*name, parse_rg(text).expect("fixture parses")))
            .collect()
    })
}

/// The excluded minors X1, X2, X3 for "partial dual of Euler genus ≤ 1".
pub fn pinned_obstructions() -> &'static [(&'static str, RibbonGraph)] {
    static CELL: OnceLock<Vec<(&'static str, RibbonGraph)>> = OnceLock::new();
    load(&CELL, &[("X1", X1_RG), ("X2", X2_RG), ("X3", X3_RG)])
}

/// The excluded minors for "partial dual of Euler genus 0".
pub fn pinned_plane_obstructions() -> &'static [(&'static str, RibbonGraph)] {
    static CELL: OnceLock<Vec<(&'static str, RibbonGraph)>> = OnceLock::new();
    load(&CELL, &[("P1", P1_RG), ("P2", P2_RG), ("P3", P3_RG)])
}

pub fn pinned(name: &str) -> Option<&'static RibbonGraph> {
    pinned_obstructions()
        .iter()
        .chain(pinned_plane_obstructions())
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}

/// A minor certificate whose target is one of the pinned obstructions (or
/// a disjoint union of them, named `A+B`) and whose replay checks out.
pub fn verify_obstruction_certificate(g: &RibbonGraph, cert: &MinorCertificate) -> bool {
    let expected = cert
        .target
        .split('+')
        .map(|n| pinned(n).cloned())
        .collect::<Option<Vec<_>>>()
        .map(|parts| parts.iter().fold(RibbonGraph::empty(), |acc, p| acc.disjoint_union(p)));
    match expected {
        Some(t) => are_equivalent(&t, &cert.target_graph) && crate::minors::verify_certificate(g, cert),
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub graph: RibbonGraph,
    pub edges: usize,
    pub min_genus: usize,
}

/// Connected classes with at most `max_edges` edges whose minimum
/// partial-dual Euler genus exceeds `k` while that of every single-step
/// minor is at most `k`.
pub fn obstruction_search(max_edges: usize) -> Result<Vec<Obstruction>> {
    obstruction_search_k(max_edges, 1, &Limits::default())
}

/// Caps for the exponential routines. Exceeding one is an error naming the
/// flag that raises it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count for scans over all partial duals.
    pub brute_cap: usize,
    /// Largest edge count for sweeps over enumerated classes.
    pub sweep_cap: usize,
    pub search: MinorSearch,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_cap: DEFAULT_BRUTE_CAP,
            sweep_cap: DEFAULT_GENERAL_CAP,
            search: MinorSearch::default(),
        }
    }
}

/// Minor-minimal connected classes whose minimum partial-dual Euler genus
/// exceeds `k`. Only `k = 1` is backed by a proof; other values are
/// experimental.
pub fn obstruction_search_k(max_edges: usize, k: usize, limits: &Limits) -> Result<Vec<Obstruction>> {
    check_cap("obstruction search", max_edges, limits.sweep_cap, "--max-edges")?;
    let classes = enumerate_with_cap(EnumerationSpec::connected(max_edges), limits.sweep_cap)?;
    let found: Vec<Option<Obstruction>> = classes
        .par_iter()
        .map(|g| {
            let min = min_partial_dual_genus(g).expect("within cap");
            if min <= k {
                return None;
            }
            let minimal = one_step_minors(g)
                .iter()
                .all(|(_, h)| min_partial_dual_genus(h).expect("within cap") <= k);
            minimal.then(|| Obstruction {
                graph: g.clone(),
                edges: g.num_edges(),
                min_genus: min,
            })
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// A breadth-first spanning forest from the lexicographically smallest
/// vertex name, and the partial dual over its edges.
pub fn spanning_tree_reduction(g: &RibbonGraph) -> Result<(EdgeSubset, RibbonGraph)> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let ends = g.endpoints();
    let root = (0..g.num_vertices())
        .min_by(|&a, &b| g.vertices()[a].name.cmp(&g.vertices()[b].name))
        .expect("connected graphs have a vertex");
    let mut seen = vec![false; g.num_vertices()];
    let mut tree = EdgeSubset::new();
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for h in &g.vertices()[v].rotation {
            let [a, b] = ends[h.edge];
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                tree.insert(g.edges()[h.edge].label.clone());
                queue.push_back(w);
            }
        }
    }
    let b = partial_dual(g, &tree)?;
    Ok((tree, b))
}

pub fn decide_brute(g: &RibbonGraph) -> Result<bool> {
    Ok(min_partial_dual_genus(g)? <= 1)
}

/// A plane- or RP²-biseparation of `g`, assembled component by component.
pub fn low_genus_biseparation(g: &RibbonGraph) -> Result<Option<BiseparationCertificate>> {
    low_genus_biseparation_with_cap(g, DEFAULT_BRUTE_CAP)
}

pub fn low_genus_biseparation_with_cap(g: &RibbonGraph, cap: usize) -> Result<Option<BiseparationCertificate>> {
    check_cap("biseparation search", g.num_edges(), cap, "--brute-cap")?;
    let mut a = EdgeSubset::new();
    let mut used_rp2 = false;
    for c in components(g) {
        let found = match find_biseparation_with_cap(&c, BiseparationKind::Plane, cap)? {
            Some(cert) => cert,
            None if !used_rp2 => match find_biseparation_with_cap(&c, BiseparationKind::Rp2, cap)? {
                Some(cert) => {
                    used_rp2 = true;
                    cert
                }
                None => return Ok(None),
            },
            None => return Ok(None),
        };
        for l in found.a.iter() {
            a.insert(l);
        }
    }
    let kind = if used_rp2 { BiseparationKind::Rp2 } else { BiseparationKind::Plane };
    let mut scanner = crate::biseparation::Scanner::new(g);
    let mask = a.mask(g)?;
    debug_assert_eq!(scanner.kind(mask), kind);
    Ok(Some(BiseparationCertificate {
        components: scanner.report(mask),
        a,
        kind,
    }))
}

pub fn decide_biseparation(g: &RibbonGraph) -> Result<bool> {
    Ok(low_genus_biseparation(g)?.is_some())
}

fn targets(set: &'static [(&'static str, RibbonGraph)]) -> Vec<(&'static str, &'static RibbonGraph)> {
    set.iter().map(|(n, g)| (*n, g)).collect()
}

/// Steps deleting every vertex outside the chosen components.
fn isolate(g: &RibbonGraph, keep: &[usize]) -> (Vec<MinorStep>, RibbonGraph) {
    let (label, _) = component_labels(g);
    let mut steps = Vec::new();
    let mut h = g.clone();
    for (v, vert) in g.vertices().iter().enumerate() {
        if !keep.contains(&label[v]) {
            let step = MinorStep::DeleteVertex(vert.name.clone());
            h = crate::minors::apply_step(&h, &step).expect("vertex exists");
            steps.push(step);
        }
    }
    (steps, h)
}

/// An excluded-minor certificate, if `g` has one. For a connected graph the
/// targets are X1, X2, X3. A disconnected graph has no partial dual of
/// Euler genus ≤ 1 exactly when some component does not, or when two
/// components each lack a plane partial dual; the second case yields a
/// certificate whose target is a disjoint union of two plane obstructions.
pub fn excluded_minor_certificate(g: &RibbonGraph, search: MinorSearch) -> Result<Option<MinorCertificate>> {
    let comps = components(g);
    if comps.len() <= 1 {
        return search.find(g, &targets(pinned_obstructions()));
    }
    let mut plane_hits: Vec<(usize, MinorCertificate)> = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        if let Some(cert) = search.find(c, &targets(pinned_obstructions()))? {
            let (mut steps, _) = isolate(g, &[i]);
            steps.extend(cert.steps);
            return Ok(Some(MinorCertificate { steps, ..cert }));
        }
        if plane_hits.len() < 2 {
            if let Some(cert) = search.find(c, &targets(pinned_plane_obstructions()))? {
                plane_hits.push((i, cert));
            }
        }
    }
    if plane_hits.len() < 2 {
        return Ok(None);
    }
    let (i, a) = &plane_hits[0];
    let (j, b) = &plane_hits[1];
    let (mut steps, _) = isolate(g, &[*i, *j]);
    steps.extend(a.steps.iter().cloned());
    steps.extend(b.steps.iter().cloned());
    let target_graph = a.target_graph.disjoint_union(&b.target_graph);
    let result = crate::minors::replay(g, &steps)?;
    let witness = find_isomorphism(&result, &target_graph).ok_or_else(|| {
        Error::Precondition("component certificates did not combine".into())
    })?;
    Ok(Some(MinorCertificate {
        steps,
        target: format!("{}+{}", a.target, b.target),
        target_graph,
        witness,
    }))
}

pub fn decide_excluded_minor(g: &RibbonGraph) -> Result<bool> {
    Ok(excluded_minor_certificate(g, MinorSearch::default())?.is_none())
}

/// Serialised as the biseparation certificate itself (`{"A": [...], ...}`)
/// or as `{"minor": certificate}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Biseparation(BiseparationCertificate),
    Minor { minor: MinorCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub admits_low_genus_partial_dual: bool,
    pub witness: Witness,
}

/// Runs all three deciders, fails if they disagree, and returns a witness
/// for the common answer.
pub fn decide(g: &RibbonGraph) -> Result<Decision> {
    decide_with(g, &Limits::default())
}

pub fn decide_with(g: &RibbonGraph, limits: &Limits) -> Result<Decision> {
    let brute = genus_profile_with_cap(g, limits.brute_cap)?.min <= 1;
    let bisep = low_genus_biseparation_with_cap(g, limits.brute_cap)?;
    let minor = excluded_minor_certificate(g, limits.search)?;
    if brute != bisep.is_some() || brute != minor.is_none() {
        return Err(Error::Precondition(format!(
            "deciders disagree: brute {brute}, biseparation {}, excluded minor {}",
            bisep.is_some(),
            minor.is_none()
        )));
    }
    let witness = match (bisep, minor) {
        (Some(b), _) => Witness::Biseparation(b),
        (None, Some(m)) => Witness::Minor { minor: m },
        (None, None) => unreachable!("checked above"),
    };
    Ok(Decision {
        admits_low_genus_partial_dual: brute,
        witness,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub checked: usize,
    /// Canonical text of every graph on which the deciders disagree.
    pub disagreements: Vec<String>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Runs the three deciders over every connected class with at most
/// `max_edges` edges.
pub fn verify_theorem1(max_edges: usize) -> Result<Theorem1Report> {
    verify_theorem1_with(max_edges, &Limits::default())
}

pub fn verify_theorem1_with(max_edges: usize, limits: &Limits) -> Result<Theorem1Report> {
    check_cap("theorem sweep", max_edges, limits.sweep_cap, "--max-edges")?;
    let classes = enumerate_with_cap(EnumerationSpec::connected(max_edges), limits.sweep_cap)?;
    let results: Vec<Option<String>> = classes
        .par_iter()
        .map(|g| {
            let a = decide_brute(g).expect("within cap");
            let b = decide_biseparation(g).expect("within cap");
            let c = excluded_minor_certificate(g, limits.search).expect("within cap").is_none();
            (a != b || a != c).then(|| g.to_string())
        })
        .collect();
    Ok(Theorem1Report {
        checked: classes.len(),
        disagreements: results.into_iter().flatten().collect(),
    })
}

/// Canonical forms of the graphs in an obstruction list, for set comparison.
pub fn obstruction_forms(obs: &[Obstruction]) -> BTreeMap<CanonicalForm, usize> {
    obs.iter().map(|o| (canonical_form(&o.graph), o.edges)).collect()
}
