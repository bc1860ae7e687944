//! Link diagrams given as PD or signed Gauss codes, and their all-A ribbon
//! graphs.
//!
//! A PD crossing `X(a,b,c,d)` lists its four arc labels counterclockwise
//! starting from the incoming under-strand. The A-smoothing joins `a` with
//! `b` and `c` with `d`. Each resulting state circle is a vertex, and each
//! crossing contributes an edge between the two smoothing arcs it leaves.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characterize::{decide, Decision};
use crate::error::{Error, Result};
use crate::graph::{Edge, End, HalfEdge, RibbonGraph, Vertex};
use crate::structure::orientation_flips;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

impl PdCode {
    /// Parses `X(1,4,2,5) X(3,6,4,1) ...`; square brackets and commas
    /// between crossings are accepted too.
    pub fn parse(text: &str) -> Result<PdCode> {
        let bytes = text.as_bytes();
        let mut crossings = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() || c == b',' {
                i += 1;
                continue;
            }
            if c != b'X' {
                return Err(parse_err(i + 1, format!("unexpected {:?}, expected X(...)", c as char)));
            }
            let open = i + 1;
            let close_char = match bytes.get(open) {
                Some(b'(') => b')',
                Some(b'[') => b']',
                _ => return Err(parse_err(open + 1, "expected ( or [ after X")),
            };
            let close = bytes[open..]
                .iter()
                .position(|&b| b == close_char)
                .map(|p| open + p)
                .ok_or_else(|| parse_err(open + 1, "unterminated crossing"))?;
            let body = &text[open + 1..close];
            let mut labels = Vec::new();
            let mut col = open + 2;
            for part in body.split(',') {
                let t = part.trim();
                let n: u32 = t
                    .parse()
                    .map_err(|_| parse_err(col, format!("arc label {t:?} is not a number")))?;
                labels.push(n);
                col += part.len() + 1;
            }
            let arr: [u32; 4] = labels
                .try_into()
                .map_err(|l: Vec<u32>| parse_err(i + 1, format!("crossing has {} labels, expected 4", l.len())))?;
            crossings.push(arr);
            i = close + 1;
        }
        let code = PdCode { crossings };
        code.validate()?;
        Ok(code)
    }

    pub fn validate(&self) -> Result<()> {
        if self.crossings.is_empty() {
            return Err(Error::Diagram("a diagram code needs at least one crossing".into()));
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for l in x {
                *counts.entry(*l).or_default() += 1;
            }
        }
        match counts.iter().find(|(_, c)| **c != 2) {
            Some((l, c)) => Err(Error::Diagram(format!("arc {l} occurs {c} times, expected 2"))),
            None => Ok(()),
        }
    }

    /// Positions `(crossing, slot)` of each arc label.
    fn arc_ends(&self) -> BTreeMap<u32, Vec<(usize, usize)>> {
        let mut ends: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s, l) in x.iter().enumerate() {
                ends.entry(*l).or_default().push((i, s));
            }
        }
        ends
    }

    pub fn is_connected(&self) -> bool {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for ends in self.arc_ends().values() {
            let (a, b) = (find(&mut parent, ends[0].0), find(&mut parent, ends[1].0));
            parent[a.max(b)] = a.min(b);
        }
        (0..n).all(|x| find(&mut parent, x) == 0)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussEntry {
    pub crossing: u32,
    pub over: bool,
    pub positive: bool,
}

/// One sequence of crossing passages per link component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGaussCode {
    pub components: Vec<Vec<GaussEntry>>,
}

impl SignedGaussCode {
    /// Parses entries such as `O1- U2+`, with `;` between link components.
    pub fn parse(text: &str) -> Result<SignedGaussCode> {
        let mut components = Vec::new();
        let mut offset = 0;
        for comp in text.split(';') {
            let mut entries = Vec::new();
            let mut col = offset;
            for tok in comp.split(|c: char| c.is_whitespace() || c == ',') {
                let here = col + 1;
                col += tok.len() + 1;
                if tok.is_empty() {
                    continue;
                }
                let over = match tok.as_bytes()[0] {
                    b'O' | b'o' => true,
                    b'U' | b'u' => false,
                    _ => return Err(parse_err(here, format!("entry {tok:?} must start with O or U"))),
                };
                let positive = match tok.as_bytes()[tok.len() - 1] {
                    b'+' => true,
                    b'-' => false,
                    _ => return Err(parse_err(here, format!("entry {tok:?} must end with + or -"))),
                };
                let crossing: u32 = tok[1..tok.len() - 1]
                    .parse()
                    .map_err(|_| parse_err(here, format!("entry {tok:?} has no crossing number")))?;
                entries.push(GaussEntry {
                    crossing,
                    over,
                    positive,
                });
            }
            if !entries.is_empty() {
                components.push(entries);
            }
            offset += comp.len() + 1;
        }
        let code = SignedGaussCode { components };
        code.validate()?;
        Ok(code)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen: BTreeMap<u32, Vec<GaussEntry>> = BTreeMap::new();
        for e in self.components.iter().flatten() {
            seen.entry(e.crossing).or_default().push(*e);
        }
        if seen.is_empty() {
            return Err(Error::Diagram("a diagram code needs at least one crossing".into()));
        }
        for (c, es) in &seen {
            if es.len() != 2 || es[0].over == es[1].over || es[0].positive != es[1].positive {
                return Err(Error::Diagram(format!(
                    "crossing {c} must be passed once over and once under with one sign"
                )));
            }
        }
        Ok(())
    }

    /// Numbers the arcs consecutively along each component; arc `k` leaves
    /// the k-th passage.
    pub fn to_pd(&self) -> Result<PdCode> {
        self.validate()?;
        // (incoming, outgoing) arcs of the over and under passage of each crossing
        let mut under: BTreeMap<u32, (u32, u32, bool)> = BTreeMap::new();
        let mut over: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
        let mut order: Vec<u32> = Vec::new();
        let mut next = 1u32;
        for comp in &self.components {
            let first = next;
            let n = comp.len() as u32;
            for (k, e) in comp.iter().enumerate() {
                let outgoing = first + k as u32;
                let incoming = if k == 0 { first + n - 1 } else { outgoing - 1 };
                if e.over {
                    over.insert(e.crossing, (incoming, outgoing));
                } else {
                    under.insert(e.crossing, (incoming, outgoing, e.positive));
                    order.push(e.crossing);
                }
            }
            next = first + n;
        }
        let crossings = order
            .iter()
            .map(|c| {
                let (i, i2, positive) = under[c];
                let (j, j2) = over[c];
                if positive {
                    [i, j2, i2, j]
                } else {
                    [i, j, i2, j2]
                }
            })
            .collect();
        Ok(PdCode { crossings })
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ci, comp) in self.components.iter().enumerate() {
            if ci > 0 {
                write!(f, "; ")?;
            }
            for (i, e) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                let o = if e.over { 'O' } else { 'U' };
                let s = if e.positive { '+' } else { '-' };
                write!(f, "{o}{}{s}", e.crossing)?;
            }
        }
        Ok(())
    }
}

/// Partner slot under the A-smoothing.
fn a_partner(slot: usize) -> usize {
    [1, 0, 3, 2][slot]
}

/// The all-A ribbon graph. Vertices are the A-state circles `s1, s2, ...`
/// in order of discovery; edge `ck` belongs to the k-th crossing.
pub fn all_a_ribbon_graph(code: &PdCode) -> Result<RibbonGraph> {
    code.validate()?;
    if !code.is_connected() {
        return Err(Error::Diagram("the diagram is not connected".into()));
    }
    let n = code.crossings.len();
    let ends = code.arc_ends();
    let other_end = |(i, s): (usize, usize)| {
        let e = &ends[&code.crossings[i][s]];
        if e[0] == (i, s) {
            e[1]
        } else {
            e[0]
        }
    };
    // half-edge for (crossing, smoothing arc): arc 0 joins slots a,b and is the first end
    let end_of = |slot: usize| if slot < 2 { End::First } else { End::Second };
    let mut visited = vec![[false; 4]; n];
    let mut vertices = Vec::new();
    // entry slot of each half-edge, to read off L and R
    let mut entry: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];
    for i in 0..n {
        for s in 0..4 {
            if visited[i][s] {
                continue;
            }
            let mut rotation = Vec::new();
            let mut p = (i, s);
            while !visited[p.0][p.1] {
                let exit = a_partner(p.1);
                visited[p.0][p.1] = true;
                visited[p.0][exit] = true;
                let end = end_of(p.1);
                entry[p.0][end.index()] = p.1;
                rotation.push(HalfEdge::new(p.0, end));
                p = other_end((p.0, exit));
            }
            vertices.push(Vertex {
                name: format!("s{}", vertices.len() + 1),
                rotation,
            });
        }
    }
    // Band sides join the a-side of one smoothing arc to the d-side of the
    // other, and b to c. A traversal entering at slot x meets point x first.
    let edges: Vec<Edge> = (0..n)
        .map(|i| {
            let [e1, e2] = entry[i];
            // L1 is slot e1; untwisted bands join L1 to R2, i.e. the exit of arc 2
            let l1 = e1;
            let r2 = a_partner(e2);
            let side = |x: usize| match x {
                0 => 3,
                3 => 0,
                1 => 2,
                _ => 1,
            };
            Edge {
                label: format!("c{}", i + 1),
                twisted: side(l1) != r2,
            }
        })
        .collect();
    let g = RibbonGraph::from_parts_unchecked(vertices, edges);
    let flips = orientation_flips(&g)
        .ok_or_else(|| Error::Diagram("the state surface is not orientable".into()))?;
    let mut out = g;
    for (v, f) in flips.into_iter().enumerate() {
        if f {
            out = out.flip_vertex(v);
        }
    }
    Ok(out)
}

/// Whether the ribbon graph represents a checkerboard colourable link
/// diagram in real projective space, with the deciders' witness.
pub fn representable_in_rp3(g: &RibbonGraph) -> Result<Decision> {
    decide(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub ribbon_graph: RibbonGraph,
    pub representable_in_rp3: bool,
    pub witness: crate::characterize::Witness,
}

pub fn knot_report(code: &PdCode) -> Result<KnotReport> {
    let g = all_a_ribbon_graph(code)?;
    let d = representable_in_rp3(&g)?;
    Ok(KnotReport {
        ribbon_graph: g,
        representable_in_rp3: d.admits_low_genus_partial_dual,
        witness: d.witness,
    })
}
