//! Boundary tracing and the structural invariants derived from it.
//!
//! Every half-edge contributes two points on its vertex circle: `L`, met
//! first when walking the rotation forwards, and `R`, met second. The
//! boundary of the ribbon surface is the 2-regular structure formed by
//! vertex corners (from `R` of one half-edge to `L` of the next) and band
//! sides. An untwisted band joins `R1–L2` and `L1–R2`; a twisted band joins
//! `R1–R2` and `L1–L2`.

use crate::error::Result;
use crate::graph::{End, RibbonGraph};
use crate::subset::EdgeSubset;

pub(crate) const L: usize = 0;
pub(crate) const R: usize = 1;

/// Point adjacency of a ribbon graph's boundary.
pub(crate) struct BoundaryPoints {
    /// `offsets[v]` is the global index of the first half-edge of vertex `v`.
    pub offsets: Vec<usize>,
    /// Owning vertex of each global half-edge slot.
    pub owner: Vec<usize>,
    /// Corner neighbour of each point.
    pub corner: Vec<usize>,
    /// Band-side neighbour of each point.
    pub band: Vec<usize>,
}

impl BoundaryPoints {
    pub fn new(g: &RibbonGraph) -> Self {
        let mut offsets = Vec::with_capacity(g.num_vertices());
        let mut owner = Vec::with_capacity(2 * g.num_edges());
        let mut slot_of = vec![[0usize; 2]; g.num_edges()];
        for (vi, v) in g.vertices().iter().enumerate() {
            offsets.push(owner.len());
            for h in &v.rotation {
                slot_of[h.edge][h.end.index()] = owner.len();
                owner.push(vi);
            }
        }
        let n = owner.len();
        let mut corner = vec![0; 2 * n];
        let mut band = vec![0; 2 * n];
        for (vi, v) in g.vertices().iter().enumerate() {
            let d = v.rotation.len();
            let base = offsets[vi];
            for i in 0..d {
                let here = base + i;
                let next = base + (i + 1) % d;
                corner[2 * here + R] = 2 * next + L;
                corner[2 * next + L] = 2 * here + R;
            }
        }
        for (e, edge) in g.edges().iter().enumerate() {
            let a = slot_of[e][0];
            let b = slot_of[e][1];
            let pairs = if edge.twisted {
                [(2 * a + R, 2 * b + R), (2 * a + L, 2 * b + L)]
            } else {
                [(2 * a + R, 2 * b + L), (2 * a + L, 2 * b + R)]
            };
            for (p, q) in pairs {
                band[p] = q;
                band[q] = p;
            }
        }
        BoundaryPoints {
            offsets,
            owner,
            corner,
            band,
        }
    }

    pub fn num_points(&self) -> usize {
        self.corner.len()
    }
}

/// One side of an edge band. Side 0 is the side through the `L` point of
/// the edge's first end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandSide {
    pub edge: usize,
    pub side: u8,
}

/// A boundary arc of a vertex disk: the arc following position `after`
/// in the rotation of `vertex`. An isolated vertex has a single corner
/// covering its whole circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub vertex: usize,
    pub after: usize,
}

/// A boundary component, as the cyclic sequence of corners and band sides
/// it runs along (corner `i` is followed by band side `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub corners: Vec<Corner>,
    pub sides: Vec<BandSide>,
}

pub fn boundary_components(g: &RibbonGraph) -> Vec<BoundaryWalk> {
    let pts = BoundaryPoints::new(g);
    let slot_end = slot_ends(g);
    let mut seen = vec![false; pts.num_points()];
    let mut walks = Vec::new();
    for (vi, v) in g.vertices().iter().enumerate() {
        if v.rotation.is_empty() {
            walks.push(BoundaryWalk {
                corners: vec![Corner { vertex: vi, after: 0 }],
                sides: Vec::new(),
            });
            continue;
        }
        for i in 0..v.rotation.len() {
            let start = 2 * (pts.offsets[vi] + i) + R;
            if seen[start] {
                continue;
            }
            let mut walk = BoundaryWalk {
                corners: Vec::new(),
                sides: Vec::new(),
            };
            let mut p = start;
            loop {
                let q = pts.corner[p];
                seen[p] = true;
                seen[q] = true;
                let r_point = if p % 2 == R { p } else { q };
                let slot = r_point / 2;
                walk.corners.push(Corner {
                    vertex: pts.owner[slot],
                    after: slot - pts.offsets[pts.owner[slot]],
                });
                let r = pts.band[q];
                let (e, end) = slot_end[q / 2];
                let first_point = if end == End::First { q } else { r };
                walk.sides.push(BandSide {
                    edge: e,
                    side: (first_point % 2) as u8,
                });
                if r == start {
                    break;
                }
                p = r;
            }
            walks.push(walk);
        }
    }
    walks
}

/// Edge and end occupying each global half-edge slot.
fn slot_ends(g: &RibbonGraph) -> Vec<(usize, End)> {
    g.vertices()
        .iter()
        .flat_map(|v| v.rotation.iter().map(|h| (h.edge, h.end)))
        .collect()
}

/// Number of boundary components, without materialising the walks.
pub fn face_count(g: &RibbonGraph) -> usize {
    let pts = BoundaryPoints::new(g);
    let mut seen = vec![false; pts.num_points()];
    let mut faces = g.vertices().iter().filter(|v| v.rotation.is_empty()).count();
    for start in 0..pts.num_points() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut p = start;
        loop {
            let q = pts.corner[p];
            seen[p] = true;
            seen[q] = true;
            p = pts.band[q];
            if p == start {
                break;
            }
        }
    }
    faces
}

/// Component index of every vertex, numbered in order of first vertex,
/// together with the number of components.
pub fn component_labels(g: &RibbonGraph) -> (Vec<usize>, usize) {
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for [a, b] in g.endpoints() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[v] = label[r];
    }
    (label, count)
}

pub fn num_components(g: &RibbonGraph) -> usize {
    component_labels(g).1
}

pub fn is_connected(g: &RibbonGraph) -> bool {
    num_components(g) == 1
}

/// Euler genus: `2k − V + E − F` over `k` components, i.e. the sum of the
/// per-component Euler genera.
pub fn euler_genus(g: &RibbonGraph) -> usize {
    let k = num_components(g) as isize;
    let v = g.num_vertices() as isize;
    let e = g.num_edges() as isize;
    let f = face_count(g) as isize;
    let eg = 2 * k - v + e - f;
    debug_assert!(eg >= 0);
    eg as usize
}

/// Whether some set of vertex flips leaves every edge untwisted.
pub fn is_orientable(g: &RibbonGraph) -> bool {
    orientation_flips(g).is_some()
}

/// Flip flags (one per vertex) that make every edge untwisted, if any.
pub fn orientation_flips(g: &RibbonGraph) -> Option<Vec<bool>> {
    let n = g.num_vertices();
    let ends = g.endpoints();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (e, [a, b]) in ends.iter().enumerate() {
        let t = g.edges()[e].twisted;
        if a == b {
            if t {
                return None;
            }
        } else {
            adj[*a].push((*b, t));
            adj[*b].push((*a, t));
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let fu = flip[u].unwrap();
            for &(w, t) in &adj[u] {
                let want = fu ^ t;
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        stack.push(w);
                    }
                    Some(fw) if fw != want => return None,
                    _ => {}
                }
            }
        }
    }
    Some(flip.into_iter().map(Option::unwrap).collect())
}

/// `G|_A`: the edges of `A` and the vertices incident to them.
pub fn restrict(g: &RibbonGraph, a: &EdgeSubset) -> Result<RibbonGraph> {
    Ok(restrict_flags(g, &a.flags(g)?))
}

pub(crate) fn restrict_flags(g: &RibbonGraph, keep: &[bool]) -> RibbonGraph {
    g.filtered(keep, |_, v| v.rotation.iter().any(|h| keep[h.edge]))
}

/// Connected components, ordered by their first vertex.
pub fn components(g: &RibbonGraph) -> Vec<RibbonGraph> {
    let (label, count) = component_labels(g);
    let ends = g.endpoints();
    (0..count)
        .map(|c| {
            let keep: Vec<bool> = ends.iter().map(|[a, _]| label[*a] == c).collect();
            g.filtered(&keep, |vi, _| label[vi] == c)
        })
        .collect()
}
