//! Separating vertices and biseparations.
//!
//! `A` defines a biseparation when every vertex lying in both `G|_A` and
//! `G|_{A^c}` is separating, in the sense that it splits the components of
//! the two restrictions from one another: `G` is assembled from those
//! components by gluing at single vertices, tree-fashion. Being a
//! separating vertex of `G` somewhere else in the graph is not enough; a
//! digon with a loop at each end, split into one digon edge against the
//! rest, has two separating shared vertices and a partial dual of Euler
//! genus two. It is a plane-biseparation when every
//! component of both restrictions is plane, and an RP²-biseparation when
//! exactly one component has Euler genus one and the rest are plane. An
//! empty restriction contributes no components.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::RibbonGraph;
use crate::pdual::{partial_dual_mask, DEFAULT_BRUTE_CAP};
use crate::structure::{euler_genus, is_connected, restrict_flags};
use crate::subset::EdgeSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BiseparationKind {
    Plane,
    #[serde(rename = "RP2")]
    Rp2,
    Other,
    NotABiseparation,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// For each vertex `v`, the edge sets (as bitmasks) of the classes formed
/// by linking edges only through vertices other than `v`.
fn classes_around(g: &RibbonGraph) -> Vec<Vec<u64>> {
    let ends = g.endpoints();
    let m = g.num_edges();
    (0..g.num_vertices())
        .map(|v| {
            let mut parent: Vec<usize> = (0..m).collect();
            let mut at: HashMap<usize, usize> = HashMap::new();
            for (e, pair) in ends.iter().enumerate() {
                for &w in pair {
                    if w == v {
                        continue;
                    }
                    match at.get(&w) {
                        Some(&f) => union(&mut parent, e, f),
                        None => {
                            at.insert(w, e);
                        }
                    }
                }
            }
            let mut classes: Vec<(usize, u64)> = Vec::new();
            for e in 0..m {
                let r = find(&mut parent, e);
                match classes.iter_mut().find(|(x, _)| *x == r) {
                    Some((_, c)) => *c |= 1 << e,
                    None => classes.push((r, 1 << e)),
                }
            }
            classes.into_iter().map(|(_, c)| c).collect()
        })
        .collect()
}

/// `v` is separating iff the edges fall into at least two classes when
/// edges are linked only through vertices other than `v`. Such a split
/// gives nonempty `E₁`, `E₂` whose restrictions meet in `{v}` at most.
pub(crate) fn separating_flags(g: &RibbonGraph) -> Vec<bool> {
    classes_around(g).iter().map(|c| c.len() >= 2).collect()
}

pub fn separating_vertices(g: &RibbonGraph) -> BTreeSet<String> {
    separating_flags(g)
        .into_iter()
        .zip(g.vertices())
        .filter(|(s, _)| *s)
        .map(|(_, v)| v.name.clone())
        .collect()
}

pub fn defines_biseparation(g: &RibbonGraph, a: &EdgeSubset) -> Result<bool> {
    let mask = a.mask(g)?;
    Ok(Scanner::new(g).shared_vertices_ok(mask))
}

pub fn biseparation_kind(g: &RibbonGraph, a: &EdgeSubset) -> Result<BiseparationKind> {
    let mask = a.mask(g)?;
    Ok(Scanner::new(g).kind(mask))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGenus {
    /// `"A"` or `"complement"`.
    pub side: String,
    pub edges: Vec<String>,
    pub euler_genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiseparationCertificate {
    #[serde(rename = "A")]
    pub a: EdgeSubset,
    pub kind: BiseparationKind,
    pub components: Vec<ComponentGenus>,
}

impl BiseparationCertificate {
    /// Recomputes the kind and component genera from scratch.
    pub fn check(&self, g: &RibbonGraph) -> bool {
        let Ok(mask) = self.a.mask(g) else {
            return false;
        };
        let mut s = Scanner::new(g);
        s.kind(mask) == self.kind && s.report(mask) == self.components
    }
}

/// Classifies edge subsets of one graph, given as bitmasks, memoizing the
/// Euler genus of each component edge set.
pub(crate) struct Scanner<'a> {
    g: &'a RibbonGraph,
    ends: Vec<[usize; 2]>,
    incident: Vec<u64>,
    memo: HashMap<u64, usize>,
}

impl<'a> Scanner<'a> {
    pub fn new(g: &'a RibbonGraph) -> Self {
        let ends = g.endpoints();
        let mut incident = vec![0u64; g.num_vertices()];
        for (e, [a, b]) in ends.iter().enumerate() {
            incident[*a] |= 1 << e;
            incident[*b] |= 1 << e;
        }
        Scanner {
            g,
            ends,
            incident,
            memo: HashMap::new(),
        }
    }

    fn full(&self) -> u64 {
        if self.g.num_edges() == 64 {
            u64::MAX
        } else {
            (1u64 << self.g.num_edges()) - 1
        }
    }

    /// The components of `G|_A` and `G|_{A^c}` meet only at shared
    /// vertices; each shared vertex must cut them apart, so the incidence
    /// graph between components and shared vertices has to be a forest.
    pub fn shared_vertices_ok(&self, mask: u64) -> bool {
        let comp = self.full() & !mask;
        let mut pieces = self.component_masks(mask);
        pieces.extend(self.component_masks(comp));
        let n = self.g.num_vertices();
        let mut parent: Vec<usize> = (0..n + pieces.len()).collect();
        for (v, &inc) in self.incident.iter().enumerate() {
            if inc & mask == 0 || inc & comp == 0 {
                continue;
            }
            for (i, &p) in pieces.iter().enumerate() {
                if inc & p != 0 {
                    let (rv, rp) = (find(&mut parent, v), find(&mut parent, n + i));
                    if rv == rp {
                        return false;
                    }
                    parent[rv.max(rp)] = rv.min(rp);
                }
            }
        }
        true
    }

    /// Edge sets of the components of `G|_mask`.
    fn component_masks(&self, mask: u64) -> Vec<u64> {
        let n = self.g.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        for (e, [a, b]) in self.ends.iter().enumerate() {
            if mask >> e & 1 == 1 {
                union(&mut parent, *a, *b);
            }
        }
        let mut by_root: Vec<(usize, u64)> = Vec::new();
        for (e, [a, _]) in self.ends.iter().enumerate() {
            if mask >> e & 1 == 1 {
                let r = find(&mut parent, *a);
                match by_root.iter_mut().find(|(x, _)| *x == r) {
                    Some((_, m)) => *m |= 1 << e,
                    None => by_root.push((r, 1 << e)),
                }
            }
        }
        by_root.into_iter().map(|(_, m)| m).collect()
    }

    fn genus(&mut self, comp: u64) -> usize {
        if let Some(&k) = self.memo.get(&comp) {
            return k;
        }
        let keep: Vec<bool> = (0..self.g.num_edges()).map(|e| comp >> e & 1 == 1).collect();
        let k = euler_genus(&restrict_flags(self.g, &keep));
        self.memo.insert(comp, k);
        k
    }

    pub fn kind(&mut self, mask: u64) -> BiseparationKind {
        if !self.shared_vertices_ok(mask) {
            return BiseparationKind::NotABiseparation;
        }
        let mut comps = self.component_masks(mask);
        comps.extend(self.component_masks(self.full() & !mask));
        let mut ones = 0;
        for c in comps {
            match self.genus(c) {
                0 => {}
                1 => ones += 1,
                _ => return BiseparationKind::Other,
            }
        }
        match ones {
            0 => BiseparationKind::Plane,
            1 => BiseparationKind::Rp2,
            _ => BiseparationKind::Other,
        }
    }

    pub fn report(&mut self, mask: u64) -> Vec<ComponentGenus> {
        let mut out = Vec::new();
        for (side, m) in [("A", mask), ("complement", self.full() & !mask)] {
            for c in self.component_masks(m) {
                let edges = (0..self.g.num_edges())
                    .filter(|e| c >> e & 1 == 1)
                    .map(|e| self.g.edges()[e].label.clone())
                    .collect();
                out.push(ComponentGenus {
                    side: side.to_string(),
                    edges,
                    euler_genus: self.genus(c),
                });
            }
        }
        out
    }
}

pub fn find_biseparation(g: &RibbonGraph, kind: BiseparationKind) -> Result<Option<BiseparationCertificate>> {
    find_biseparation_with_cap(g, kind, DEFAULT_BRUTE_CAP)
}

/// The first qualifying subset in increasing bitmask order.
pub fn find_biseparation_with_cap(
    g: &RibbonGraph,
    kind: BiseparationKind,
    cap: usize,
) -> Result<Option<BiseparationCertificate>> {
    check_cap("biseparation search", g.num_edges(), cap.min(62), "--brute-cap")?;
    let mut s = Scanner::new(g);
    for mask in 0..1u64 << g.num_edges() {
        if s.kind(mask) == kind {
            return Ok(Some(BiseparationCertificate {
                a: EdgeSubset::from_mask(g, mask),
                kind,
                components: s.report(mask),
            }));
        }
    }
    Ok(None)
}

/// Subsets (as bitmasks) on which the Euler genus of the partial dual and
/// the biseparation kind disagree.
pub fn theorem2_mismatches(g: &RibbonGraph) -> Result<Vec<u64>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    check_cap("biseparation search", g.num_edges(), DEFAULT_BRUTE_CAP, "--brute-cap")?;
    let mut s = Scanner::new(g);
    Ok((0..1u64 << g.num_edges())
        .filter(|&mask| {
            let k = euler_genus(&partial_dual_mask(g, mask));
            let kind = s.kind(mask);
            (k == 0) != (kind == BiseparationKind::Plane) || (k == 1) != (kind == BiseparationKind::Rp2)
        })
        .collect())
}

pub fn theorem2_check(g: &RibbonGraph) -> Result<bool> {
    Ok(theorem2_mismatches(g)?.is_empty())
}
