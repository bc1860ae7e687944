//! Partial duality.
//!
//! `G^A` is built by walking the boundary of the spanning ribbon subgraph
//! `(V(G), A)`. Each boundary component becomes a vertex circle of the
//! dual. Crossing the attachment arc of an edge outside `A` copies its
//! arrow onto the new circle; running along a side of an `A`-band draws a
//! new arrow pointing from the band's first end towards its second. Vertex
//! circles that meet no `A`-band are kept as they are.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrows::{arrow_forward, IndexedArrows};
use crate::error::{check_cap, Result};
use crate::graph::{End, RibbonGraph};
use crate::structure::{euler_genus, BoundaryPoints, L, R};
use crate::subset::EdgeSubset;

pub const DEFAULT_BRUTE_CAP: usize = 20;

pub fn partial_dual(g: &RibbonGraph, a: &EdgeSubset) -> Result<RibbonGraph> {
    Ok(partial_dual_flags(g, &a.flags(g)?))
}

pub fn partial_dual_mask(g: &RibbonGraph, mask: u64) -> RibbonGraph {
    let flags: Vec<bool> = (0..g.num_edges()).map(|i| mask >> i & 1 == 1).collect();
    partial_dual_flags(g, &flags)
}

pub fn geometric_dual(g: &RibbonGraph) -> RibbonGraph {
    partial_dual_flags(g, &vec![true; g.num_edges()])
}

pub(crate) fn partial_dual_flags(g: &RibbonGraph, in_a: &[bool]) -> RibbonGraph {
    let pts = BoundaryPoints::new(g);
    let slots: Vec<(usize, End)> = g
        .vertices()
        .iter()
        .flat_map(|v| v.rotation.iter().map(|h| (h.edge, h.end)))
        .collect();
    let forward_at = |slot: usize| {
        let (e, end) = slots[slot];
        arrow_forward(g.edges()[e].twisted, end)
    };
    let mut seen = vec![false; pts.num_points()];
    let mut untouched: BTreeSet<&str> = BTreeSet::new();
    for v in g.vertices() {
        if !v.rotation.iter().any(|h| in_a[h.edge]) {
            untouched.insert(&v.name);
        }
    }
    let mut taken: BTreeSet<String> = untouched.iter().map(|s| s.to_string()).collect();
    let mut circles = Vec::new();
    for (vi, v) in g.vertices().iter().enumerate() {
        let base = pts.offsets[vi];
        if untouched.contains(v.name.as_str()) {
            let arrows = (0..v.rotation.len())
                .map(|i| (slots[base + i].0, forward_at(base + i)))
                .collect();
            circles.push((v.name.clone(), arrows));
            continue;
        }
        for i in 0..v.rotation.len() {
            for side in [L, R] {
                let start = 2 * (base + i) + side;
                if !in_a[slots[base + i].0] || seen[start] {
                    continue;
                }
                let mut arrows = Vec::new();
                let mut visited_vertices: Vec<usize> = Vec::new();
                let mut p = start;
                loop {
                    seen[p] = true;
                    // walk along the vertex circle to the next A-band
                    let owner = pts.owner[p / 2];
                    if !visited_vertices.contains(&owner) {
                        visited_vertices.push(owner);
                    }
                    let off = pts.offsets[owner];
                    let deg = g.vertices()[owner].rotation.len();
                    let step_forward = p % 2 == R;
                    let mut pos = p / 2 - off;
                    let arrival = loop {
                        pos = if step_forward { (pos + 1) % deg } else { (pos + deg - 1) % deg };
                        let slot = off + pos;
                        if in_a[slots[slot].0] {
                            break 2 * slot + if step_forward { L } else { R };
                        }
                        arrows.push((slots[slot].0, forward_at(slot) == step_forward));
                    };
                    seen[arrival] = true;
                    // then along the band side
                    let (e, end) = slots[arrival / 2];
                    arrows.push((e, end == End::First));
                    p = pts.band[arrival];
                    if p == start {
                        break;
                    }
                }
                let names: Vec<&str> = visited_vertices
                    .iter()
                    .map(|&u| g.vertices()[u].name.as_str())
                    .collect();
                let mut name = names.join("+");
                while taken.contains(&name) {
                    name.push('\'');
                }
                taken.insert(name.clone());
                circles.push((name, arrows));
            }
        }
    }
    IndexedArrows { circles }.into_graph(g.edges().iter().map(|e| e.label.clone()).collect())
}

/// How many edge subsets `A` give each value of the Euler genus of `G^A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusProfile {
    pub edges: usize,
    pub counts: BTreeMap<usize, u64>,
    pub min: usize,
}

pub fn genus_profile(g: &RibbonGraph) -> Result<GenusProfile> {
    genus_profile_with_cap(g, DEFAULT_BRUTE_CAP)
}

/// Exact profile over all `2^E` subsets, visited in Gray-code order.
pub fn genus_profile_with_cap(g: &RibbonGraph, cap: usize) -> Result<GenusProfile> {
    let e = g.num_edges();
    check_cap("partial-dual genus profile", e, cap.min(62), "--brute-cap")?;
    let counts = (0..1u64 << e)
        .into_par_iter()
        .map(|i| euler_genus(&partial_dual_mask(g, i ^ (i >> 1))))
        .fold(BTreeMap::new, |mut m: BTreeMap<usize, u64>, k| {
            *m.entry(k).or_default() += 1;
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        });
    let min = *counts.keys().next().expect("at least the empty subset");
    Ok(GenusProfile { edges: e, counts, min })
}

/// `min_A εg(G^A)`, stopping early once zero is seen.
pub fn min_partial_dual_genus(g: &RibbonGraph) -> Result<usize> {
    let e = g.num_edges();
    check_cap("partial-dual genus profile", e, DEFAULT_BRUTE_CAP, "--brute-cap")?;
    let mut best = usize::MAX;
    for m in 0..1u64 << e {
        best = best.min(euler_genus(&partial_dual_mask(g, m)));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}
