//! Arrow presentations: circles carrying labelled, directed arrows, each
//! label on exactly two arrows. Bands are glued so that the heads of a
//! pair of arrows meet, as do their tails.
//!
//! With every vertex circle read in rotation order, the first end of an
//! edge always carries a forward arrow and the second end a backward arrow
//! when the edge is untwisted, forward when it is twisted. Reading back, a
//! pair of arrows with equal directions is a twisted edge.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{valid_label, Edge, End, HalfEdge, RibbonGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    fn symbol(self) -> char {
        match self {
            Direction::Forward => '>',
            Direction::Backward => '<',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub direction: Direction,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArrowPresentation {
    pub circles: Vec<Vec<Arrow>>,
}

impl ArrowPresentation {
    pub fn validate(&self) -> Result<()> {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for a in self.circles.iter().flatten() {
            *counts.entry(a.label.as_str()).or_default() += 1;
        }
        match counts.into_iter().find(|(_, c)| *c != 2) {
            Some((label, count)) => Err(Error::ArrowLabelCount {
                label: label.to_string(),
                count,
            }),
            None => Ok(()),
        }
    }

    /// Parses the `.arrows` format: one `circle : e> f< ...` line per circle.
    pub fn parse(text: &str) -> Result<Self> {
        let mut circles = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let err = |column: usize, message: String| Error::Parse {
                line: ln + 1,
                column,
                message,
            };
            let (head, body) = content
                .split_once(':')
                .ok_or_else(|| err(1, "expected `circle : <arrows>`".into()))?;
            if head.trim() != "circle" {
                return Err(err(content.len() - content.trim_start().len() + 1, "expected `circle`".into()));
            }
            let mut circle = Vec::new();
            let mut offset = head.len() + 1;
            for tok in body.split(' ') {
                let col = offset + 1;
                offset += tok.len() + 1;
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let (label, dir) = tok.split_at(tok.len() - tok.chars().last().map_or(0, char::len_utf8));
                let direction = match dir {
                    ">" => Direction::Forward,
                    "<" => Direction::Backward,
                    _ => return Err(err(col, format!("arrow {tok:?} must end in > or <"))),
                };
                if !valid_label(label) {
                    return Err(err(col, format!("invalid label {label:?}")));
                }
                circle.push(Arrow {
                    label: label.to_string(),
                    direction,
                });
            }
            circles.push(circle);
        }
        let p = ArrowPresentation { circles };
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for ArrowPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.circles {
            write!(f, "circle :")?;
            for a in c {
                write!(f, " {}{}", a.label, a.direction.symbol())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Direction of the arrow drawn at a half-edge, relative to rotation order.
pub(crate) fn arrow_forward(twisted: bool, end: End) -> bool {
    end == End::First || twisted
}

pub fn to_arrow_presentation(g: &RibbonGraph) -> ArrowPresentation {
    ArrowPresentation {
        circles: g
            .vertices()
            .iter()
            .map(|v| {
                v.rotation
                    .iter()
                    .map(|h| {
                        let e = &g.edges()[h.edge];
                        Arrow {
                            label: e.label.clone(),
                            direction: if arrow_forward(e.twisted, h.end) {
                                Direction::Forward
                            } else {
                                Direction::Backward
                            },
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Circles as `(edge index, forward)` arrows over a fixed edge list.
pub(crate) struct IndexedArrows {
    pub circles: Vec<(String, Vec<(usize, bool)>)>,
}

impl IndexedArrows {
    /// Builds the ribbon graph with the given edge labels in index order.
    /// Every index must occur exactly twice.
    pub fn into_graph(self, labels: Vec<String>) -> RibbonGraph {
        let mut dirs: Vec<Vec<bool>> = vec![Vec::with_capacity(2); labels.len()];
        let mut vertices = Vec::with_capacity(self.circles.len());
        for (name, circle) in self.circles {
            let rotation = circle
                .into_iter()
                .map(|(e, fwd)| {
                    let end = if dirs[e].is_empty() { End::First } else { End::Second };
                    dirs[e].push(fwd);
                    HalfEdge::new(e, end)
                })
                .collect();
            vertices.push(Vertex { name, rotation });
        }
        let edges = labels
            .into_iter()
            .zip(dirs)
            .map(|(label, d)| Edge {
                label,
                twisted: d[0] == d[1],
            })
            .collect();
        RibbonGraph::from_parts_unchecked(vertices, edges)
    }
}

/// Vertices are named `c1, c2, ...` after their circles; edges are indexed
/// in order of first appearance.
pub fn from_arrow_presentation(p: &ArrowPresentation) -> Result<RibbonGraph> {
    p.validate()?;
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let circles = p
        .circles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let arrows = c
                .iter()
                .map(|a| {
                    let e = *index.entry(a.label.as_str()).or_insert_with(|| {
                        labels.push(a.label.clone());
                        labels.len() - 1
                    });
                    (e, a.direction == Direction::Forward)
                })
                .collect();
            (format!("c{}", i + 1), arrows)
        })
        .collect();
    Ok(IndexedArrows { circles }.into_graph(labels))
}
