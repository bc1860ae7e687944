//! Bouquets (one-vertex ribbon graphs): interlacement, intersection graphs,
//! and the constructive search for an X1 or X2 minor in a non-orientable
//! bouquet that has no plane- or RP²-biseparation.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::biseparation::{biseparation_kind, find_biseparation, BiseparationKind};
use crate::canon::find_isomorphism;
use crate::characterize::pinned_obstructions;
use crate::error::{Error, Result};
use crate::graph::RibbonGraph;
use crate::minors::{apply_step, MinorCertificate, MinorSearch, MinorStep};
use crate::structure::is_orientable;
use crate::subset::EdgeSubset;

pub fn is_bouquet(g: &RibbonGraph) -> bool {
    g.num_vertices() == 1
}

fn require_bouquet(g: &RibbonGraph) -> Result<()> {
    if is_bouquet(g) {
        Ok(())
    } else {
        Err(Error::NotABouquet)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BouquetSplit {
    /// The orientable loops.
    pub orientable: RibbonGraph,
    /// The non-orientable loops.
    pub non_orientable: RibbonGraph,
    pub q: usize,
}

pub fn split(g: &RibbonGraph) -> Result<BouquetSplit> {
    require_bouquet(g)?;
    let twisted: Vec<bool> = g.edges().iter().map(|e| e.twisted).collect();
    let untwisted: Vec<bool> = twisted.iter().map(|t| !t).collect();
    Ok(BouquetSplit {
        orientable: g.filtered(&untwisted, |_, _| true),
        non_orientable: g.filtered(&twisted, |_, _| true),
        q: twisted.iter().filter(|t| **t).count(),
    })
}

/// Rotation positions of both ends of every loop.
fn loop_positions(g: &RibbonGraph) -> Vec<[usize; 2]> {
    g.end_positions().iter().map(|[(_, a), (_, b)]| [*a.min(b), *a.max(b)]).collect()
}

fn interlaced_at(p: [usize; 2], q: [usize; 2]) -> bool {
    let inside = |x: usize| p[0] < x && x < p[1];
    inside(q[0]) != inside(q[1])
}

/// Whether the ends of `e` and `f` alternate `e f e f` around the vertex.
pub fn interlaced(g: &RibbonGraph, e: &str, f: &str) -> Result<bool> {
    require_bouquet(g)?;
    let ei = g.edge_index(e).ok_or_else(|| Error::UnknownEdge(e.into()))?;
    let fi = g.edge_index(f).ok_or_else(|| Error::UnknownEdge(f.into()))?;
    if ei == fi {
        return Err(Error::Precondition("a loop is not interlaced with itself".into()));
    }
    let pos = loop_positions(g);
    Ok(interlaced_at(pos[ei], pos[fi]))
}

/// A simple graph with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    pub labels: Vec<String>,
    pub adjacency: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adjacency: vec![vec![false; n]; n],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn connect(&mut self, a: usize, b: usize) {
        if a != b {
            self.adjacency[a][b] = true;
            self.adjacency[b][a] = true;
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn neighbours(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[a].iter().enumerate().filter(|(_, x)| **x).map(|(i, _)| i)
    }

    /// A proper 2-colouring (`false`/`true` per vertex), if one exists.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.len()];
        for s in 0..self.len() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.neighbours(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    fn dot(&self, name: &str, negative: &[bool], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {name} {{")?;
        for (i, l) in self.labels.iter().enumerate() {
            let sign = if negative[i] { "-" } else { "+" };
            writeln!(f, "  n{i} [label=\"{l} ({sign})\"];")?;
        }
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.adjacent(a, b) {
                    writeln!(f, "  n{a} -- n{b};")?;
                }
            }
        }
        writeln!(f, "}}")
    }
}

/// Vertices are the loops of a bouquet, adjacent when interlaced; a vertex
/// is negative when its loop is twisted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionGraph {
    pub graph: SimpleGraph,
    pub negative: Vec<bool>,
}

pub fn intersection_graph(g: &RibbonGraph) -> Result<IntersectionGraph> {
    require_bouquet(g)?;
    let pos = loop_positions(g);
    let mut graph = SimpleGraph::new(g.edge_labels().map(String::from).collect());
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            if interlaced_at(pos[a], pos[b]) {
                graph.connect(a, b);
            }
        }
    }
    Ok(IntersectionGraph {
        graph,
        negative: g.edges().iter().map(|e| e.twisted).collect(),
    })
}

/// Writes Graphviz `dot` source.
pub struct Dot<'a>(pub &'a SimpleGraph, pub &'a [bool]);

impl fmt::Display for Dot<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.dot("I", self.1, f)
    }
}

/// The intersection graph with every negative vertex merged into a single
/// vertex `v` (the last one) and loops discarded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGraph {
    pub graph: SimpleGraph,
    pub merged: usize,
    /// For each quotient vertex, the intersection-graph vertices it stands for.
    pub members: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn negative_flags(&self) -> Vec<bool> {
        (0..self.graph.len()).map(|i| i == self.merged).collect()
    }
}

pub fn quotient_graph(i: &IntersectionGraph) -> Result<QuotientGraph> {
    if !i.negative.iter().any(|n| *n) {
        return Err(Error::Precondition("the intersection graph has no negative vertex".into()));
    }
    let mut index = vec![0; i.graph.len()];
    let mut labels = Vec::new();
    let mut members = Vec::new();
    for (x, neg) in i.negative.iter().enumerate() {
        if !neg {
            index[x] = labels.len();
            labels.push(i.graph.labels[x].clone());
            members.push(vec![x]);
        }
    }
    let merged = labels.len();
    labels.push("v".into());
    members.push((0..i.graph.len()).filter(|&x| i.negative[x]).collect());
    for (x, neg) in i.negative.iter().enumerate() {
        if *neg {
            index[x] = merged;
        }
    }
    let mut graph = SimpleGraph::new(labels);
    for a in 0..i.graph.len() {
        for b in i.graph.neighbours(a) {
            graph.connect(index[a], index[b]);
        }
    }
    Ok(QuotientGraph { graph, merged, members })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycle {
    /// Vertices in cycle order; starts at the required vertex if there was one.
    pub vertices: Vec<usize>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Length of a shortest odd closed walk through `s`, from a breadth-first
/// search of the bipartite double cover.
fn odd_walk_length(g: &SimpleGraph, s: usize) -> Option<usize> {
    let n = g.len();
    let mut dist = vec![usize::MAX; 2 * n];
    dist[2 * s] = 0;
    let mut queue = VecDeque::from([2 * s]);
    while let Some(x) = queue.pop_front() {
        let (u, parity) = (x / 2, x % 2);
        for w in g.neighbours(u) {
            let y = 2 * w + (1 - parity);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    (dist[2 * s + 1] != usize::MAX).then(|| dist[2 * s + 1])
}

/// Lexicographically smallest simple cycle of length `len` starting at `s`
/// whose other vertices all exceed `floor` (or any vertex when `None`).
fn smallest_cycle_from(g: &SimpleGraph, s: usize, len: usize, floor: Option<usize>) -> Option<Vec<usize>> {
    fn rec(g: &SimpleGraph, s: usize, len: usize, floor: Option<usize>, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = *path.last().unwrap();
        if path.len() == len {
            return g.adjacent(u, s) && path[1] < path[len - 1];
        }
        for w in g.neighbours(u) {
            if used[w] || floor.is_some_and(|f| w <= f) {
                continue;
            }
            used[w] = true;
            path.push(w);
            if rec(g, s, len, floor, path, used) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
        false
    }
    let mut used = vec![false; g.len()];
    used[s] = true;
    let mut path = vec![s];
    rec(g, s, len, floor, &mut path, &mut used).then_some(path)
}

/// A shortest odd cycle, through `through` when given. Ties go to the
/// lexicographically smallest vertex sequence. The cycle is checked to be
/// induced and an error is returned otherwise.
pub fn minimal_odd_cycle(g: &SimpleGraph, through: Option<usize>) -> Result<Option<OddCycle>> {
    let starts: Vec<usize> = match through {
        Some(v) => vec![v],
        None => (0..g.len()).collect(),
    };
    let bound = starts.iter().filter_map(|&s| odd_walk_length(g, s)).min();
    let Some(bound) = bound else {
        return Ok(None);
    };
    let mut len = bound;
    while len <= g.len() {
        let found = starts
            .iter()
            .filter_map(|&s| smallest_cycle_from(g, s, len, if through.is_some() { None } else { Some(s) }))
            .min();
        if let Some(vertices) = found {
            let next = |i: usize| vertices[(i + 1) % len];
            for i in 0..len {
                for j in i + 1..len {
                    let (a, b) = (vertices[i], vertices[j]);
                    if g.adjacent(a, b) && next(i) != b && next(j) != a {
                        return Err(Error::Precondition(format!("shortest odd cycle {vertices:?} has a chord")));
                    }
                }
            }
            return Ok(Some(OddCycle { vertices }));
        }
        len += 2;
    }
    Ok(None)
}

/// The edges of the colour class containing the twisted loops, when the
/// quotient graph is bipartite and that class gives an RP²-biseparation.
/// `None` when the quotient is not bipartite, or when the twisted loops are
/// not pairwise interlaced (then no colour class can give one).
pub fn two_colouring_to_rp2_biseparation(g: &RibbonGraph, q: &QuotientGraph) -> Result<Option<EdgeSubset>> {
    require_bouquet(g)?;
    if is_orientable(g) {
        return Err(Error::Precondition("the bouquet is orientable".into()));
    }
    let Some(colour) = q.graph.two_colouring() else {
        return Ok(None);
    };
    let side = colour[q.merged];
    let mut a = EdgeSubset::new();
    for (x, members) in q.members.iter().enumerate() {
        if colour[x] == side {
            for &e in members {
                a.insert(g.edges()[e].label.clone());
            }
        }
    }
    Ok((biseparation_kind(g, &a)? == BiseparationKind::Rp2).then_some(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcLabel {
    Alpha,
    Beta,
    Epsilon,
    Gamma(usize),
    Delta(usize),
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLabel::Alpha => write!(f, "alpha"),
            ArcLabel::Beta => write!(f, "beta"),
            ArcLabel::Epsilon => write!(f, "epsilon"),
            ArcLabel::Gamma(i) => write!(f, "gamma{i}"),
            ArcLabel::Delta(i) => write!(f, "delta{i}"),
        }
    }
}

/// The end pattern `1 2 1 3 2 4 3 ⋯ (2m) (2m−1) (2m)` of the orientable
/// loops of `H`, using loop numbers `1..=2m`.
fn canonical_pattern(m: usize) -> Vec<usize> {
    let mut p = vec![1, 2, 1];
    for k in 3..=2 * m {
        p.push(k);
        p.push(k - 1);
    }
    p.push(2 * m);
    p
}

/// The arc following position `j` of the canonical pattern.
fn arc_after(j: usize, m: usize) -> ArcLabel {
    let last = 4 * m - 1;
    match j {
        0 => ArcLabel::Alpha,
        j if j == last => ArcLabel::Epsilon,
        j if j == last - 1 => ArcLabel::Beta,
        j if j % 2 == 1 => ArcLabel::Gamma(j.div_ceil(2)),
        j => ArcLabel::Delta(j / 2),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcLabelling {
    /// Labels of the orientable loops in the roles `1..=2m`.
    pub orientable: Vec<String>,
    /// The arcs holding both ends of each twisted loop, sorted.
    pub twisted: BTreeMap<String, [ArcLabel; 2]>,
}

/// Places the twisted-loop ends of `h` on the arcs cut out by its
/// orientable loops. `cycle` lists the orientable loops as the odd cycle
/// meets them after `v` (both directions are tried; the smaller relabelling
/// that matches wins).
pub fn arc_labelling(h: &RibbonGraph, cycle: &[String]) -> Result<ArcLabelling> {
    require_bouquet(h)?;
    if cycle.is_empty() || cycle.len() % 2 == 1 {
        return Err(Error::Precondition("the cycle must have an even number of orientable loops".into()));
    }
    let m = cycle.len() / 2;
    let pattern = canonical_pattern(m);
    let rotation: Vec<usize> = h.vertices()[0].rotation.iter().map(|x| x.edge).collect();
    let mut orders = vec![cycle.to_vec(), cycle.iter().rev().cloned().collect()];
    orders.sort();
    for order in orders {
        let role = |e: usize| order.iter().position(|l| *l == h.edges()[e].label).map(|i| i + 1);
        let word: Vec<(usize, usize)> = rotation
            .iter()
            .enumerate()
            .filter_map(|(pos, &e)| role(e).map(|r| (pos, r)))
            .collect();
        if word.len() != pattern.len() {
            return Err(Error::Precondition("cycle loops are not loops of H".into()));
        }
        let n = word.len();
        for reflect in [false, true] {
            for shift in 0..n {
                let at = |i: usize| {
                    if reflect {
                        word[(shift + n - i) % n]
                    } else {
                        word[(shift + i) % n]
                    }
                };
                if !(0..n).all(|i| at(i).1 == pattern[i]) {
                    continue;
                }
                // which pattern index precedes each rotation position
                let len = rotation.len();
                let mut twisted: BTreeMap<String, Vec<ArcLabel>> = BTreeMap::new();
                for j in 0..n {
                    let (start, _) = at(j);
                    let (end, _) = at((j + 1) % n);
                    let mut p = start;
                    loop {
                        p = if reflect { (p + len - 1) % len } else { (p + 1) % len };
                        if p == end {
                            break;
                        }
                        let e = rotation[p];
                        if role(e).is_none() {
                            twisted.entry(h.edges()[e].label.clone()).or_default().push(arc_after(j, m));
                        }
                    }
                }
                let twisted = twisted
                    .into_iter()
                    .map(|(l, mut arcs)| {
                        arcs.sort();
                        (l, [arcs[0], arcs[1]])
                    })
                    .collect();
                return Ok(ArcLabelling {
                    orientable: order.clone(),
                    twisted,
                });
            }
        }
    }
    Err(Error::Precondition(
        "the orientable loops of H do not follow the pattern 1 2 1 3 2 ⋯ (2m) (2m-1) (2m)".into(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionBranch {
    /// Two twisted loops that do not interlace.
    NonInterlacedTwistedPair,
    /// An odd cycle among the orientable loops.
    OrientableOddCycle,
    /// `m = 1`, one twisted loop interlacing both orientable loops.
    SingleLoopShort,
    /// `m = 1`, two twisted loops each interlacing one orientable loop.
    PairShort,
    /// `m > 1`, one twisted loop interlacing both ends of the path.
    SingleLoopLong,
    /// `m > 1`, two twisted loops.
    PairLong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionExtraction {
    pub certificate: MinorCertificate,
    pub branch: ObstructionBranch,
    /// Set when the prescribed steps did not give the target and the
    /// certificate came from exhaustive search instead.
    pub fallback: bool,
    pub m: Option<usize>,
    pub arcs: Option<ArcLabelling>,
    /// The twisted loops singled out by the branch.
    pub chosen: Vec<String>,
}

pub fn find_obstruction_minor(g: &RibbonGraph) -> Result<MinorCertificate> {
    Ok(extract_obstruction(g)?.certificate)
}

fn pinned_target(name: &str) -> &'static RibbonGraph {
    &pinned_obstructions().iter().find(|(n, _)| *n == name).expect("pinned").1
}

/// Follows the case analysis for a non-orientable bouquet with no plane-
/// and no RP²-biseparation, returning the branch taken alongside the
/// certificate.
pub fn extract_obstruction(g: &RibbonGraph) -> Result<ObstructionExtraction> {
    require_bouquet(g)?;
    if is_orientable(g) {
        return Err(Error::Precondition("the bouquet is orientable".into()));
    }
    if find_biseparation(g, BiseparationKind::Plane)?.is_some() || find_biseparation(g, BiseparationKind::Rp2)?.is_some() {
        return Err(Error::Precondition("the bouquet has a plane- or RP²-biseparation".into()));
    }
    let labels: Vec<String> = g.edge_labels().map(String::from).collect();
    let pos = loop_positions(g);
    let inter = |a: usize, b: usize| interlaced_at(pos[a], pos[b]);
    let twisted: Vec<usize> = (0..labels.len()).filter(|&e| g.edges()[e].twisted).collect();
    let orientable: Vec<usize> = (0..labels.len()).filter(|&e| !g.edges()[e].twisted).collect();

    let plan = |keep: &[usize], contract: &[usize], branch, m, arcs, chosen: Vec<String>, target: &str| {
        build(g, keep, contract, branch, m, arcs, chosen, target)
    };

    // non-interlaced twisted pair
    for (i, &e) in twisted.iter().enumerate() {
        for &f in &twisted[i + 1..] {
            if !inter(e, f) {
                let chosen = vec![labels[e].clone(), labels[f].clone()];
                return plan(&[e, f], &[], ObstructionBranch::NonInterlacedTwistedPair, None, None, chosen, "X1");
            }
        }
    }

    // odd cycle among the orientable loops
    let ig = intersection_graph(g)?;
    let mut og = SimpleGraph::new(orientable.iter().map(|&e| labels[e].clone()).collect());
    for (a, &ea) in orientable.iter().enumerate() {
        for (b, &eb) in orientable.iter().enumerate() {
            if ig.graph.adjacent(ea, eb) {
                og.connect(a, b);
            }
        }
    }
    if let Some(c) = minimal_odd_cycle(&og, None)? {
        let loops: Vec<usize> = c.vertices.iter().map(|&i| orientable[i]).collect();
        return plan(&loops, &loops[3..], ObstructionBranch::OrientableOddCycle, None, None, Vec::new(), "X2");
    }

    // odd cycle through the merged twisted vertex
    let q = quotient_graph(&ig)?;
    let c = minimal_odd_cycle(&q.graph, Some(q.merged))?
        .ok_or_else(|| Error::Precondition("the quotient graph is bipartite".into()))?;
    let path: Vec<usize> = c.vertices[1..].iter().map(|&x| q.members[x][0]).collect();
    let m = path.len() / 2;
    let mut h_edges = path.clone();
    h_edges.extend(&twisted);
    h_edges.sort();
    let keep_h: Vec<bool> = (0..labels.len()).map(|e| h_edges.contains(&e)).collect();
    let h = g.filtered(&keep_h, |_, _| true);
    let cycle_labels: Vec<String> = path.iter().map(|&e| labels[e].clone()).collect();
    let arcs = arc_labelling(&h, &cycle_labels)?;
    let role: Vec<usize> = arcs
        .orientable
        .iter()
        .map(|l| g.edge_index(l).expect("loop of G"))
        .collect();
    let (first, last) = (role[0], role[2 * m - 1]);
    let single = twisted.iter().copied().find(|&e| inter(e, first) && inter(e, last));
    if let Some(e) = single {
        let mut keep = role.clone();
        keep.push(e);
        let (branch, contract) = if m == 1 {
            (ObstructionBranch::SingleLoopShort, vec![e])
        } else {
            let mut c = vec![e];
            c.extend(&role[1..2 * m - 1]);
            (ObstructionBranch::SingleLoopLong, c)
        };
        return plan(&keep, &contract, branch, Some(m), Some(arcs), vec![labels[e].clone()], "X1");
    }
    let e = twisted.iter().copied().find(|&e| inter(e, first) && !inter(e, last));
    let f = twisted.iter().copied().find(|&f| inter(f, last) && !inter(f, first));
    let (Some(e), Some(f)) = (e, f) else {
        return Err(Error::Precondition("no twisted loop meets the ends of the odd cycle".into()));
    };
    let mut keep = role.clone();
    keep.extend([e, f]);
    let branch = if m == 1 { ObstructionBranch::PairShort } else { ObstructionBranch::PairLong };
    plan(&keep, &role, branch, Some(m), Some(arcs), vec![labels[e].clone(), labels[f].clone()], "X1")
}

#[allow(clippy::too_many_arguments)]
fn build(
    g: &RibbonGraph,
    keep: &[usize],
    contract: &[usize],
    branch: ObstructionBranch,
    m: Option<usize>,
    arcs: Option<ArcLabelling>,
    chosen: Vec<String>,
    target: &str,
) -> Result<ObstructionExtraction> {
    let labels: Vec<String> = g.edge_labels().map(String::from).collect();
    let mut steps: Vec<MinorStep> = (0..labels.len())
        .filter(|e| !keep.contains(e))
        .map(|e| MinorStep::DeleteEdge(labels[e].clone()))
        .collect();
    steps.extend(contract.iter().map(|&e| MinorStep::ContractEdge(labels[e].clone())));
    let mut h = g.clone();
    for s in &steps {
        h = apply_step(&h, s)?;
    }
    // contracting orientable loops can leave bare vertices behind
    while h.num_vertices() > 1 {
        let Some(v) = h.vertices().iter().find(|v| v.rotation.is_empty()) else {
            break;
        };
        let s = MinorStep::DeleteVertex(v.name.clone());
        h = apply_step(&h, &s)?;
        steps.push(s);
    }
    let target_graph = pinned_target(target);
    if let Some(witness) = find_isomorphism(&h, target_graph) {
        return Ok(ObstructionExtraction {
            certificate: MinorCertificate {
                steps,
                target: target.to_string(),
                target_graph: target_graph.clone(),
                witness,
            },
            branch,
            fallback: false,
            m,
            arcs,
            chosen,
        });
    }
    let targets: Vec<(&str, &RibbonGraph)> = ["X1", "X2"].iter().map(|n| (*n, pinned_target(n))).collect();
    let search = MinorSearch {
        host_cap: g.num_edges().max(crate::minors::DEFAULT_HOST_CAP),
        ..MinorSearch::default()
    };
    let certificate = search
        .find(g, &targets)?
        .ok_or_else(|| Error::Precondition("no X1 or X2 minor found".into()))?;
    Ok(ObstructionExtraction {
        certificate,
        branch,
        fallback: true,
        m,
        arcs,
        chosen,
    })
}
