use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::RibbonGraph;

/// A set of edges, named by label so it can be carried across operations
/// that preserve labels (duals, deletions, contractions).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSubset(BTreeSet<String>);

impl EdgeSubset {
    pub fn new() -> Self {
        EdgeSubset::default()
    }

    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        EdgeSubset(labels.into_iter().map(Into::into).collect())
    }

    /// All edges of `g`.
    pub fn all(g: &RibbonGraph) -> Self {
        EdgeSubset::from_labels(g.edge_labels())
    }

    /// The edges of `g` whose index bit is set in `mask`.
    pub fn from_mask(g: &RibbonGraph, mask: u64) -> Self {
        EdgeSubset::from_labels(
            g.edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.label.clone()),
        )
    }

    pub fn contains(&self, label: &str) -> bool {
        self.0.contains(label)
    }

    pub fn insert(&mut self, label: impl Into<String>) -> bool {
        self.0.insert(label.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.0.iter().map(String::as_str)
    }

    /// Membership flags indexed by the edges of `g`; fails when a member is
    /// not an edge of `g`.
    pub fn flags(&self, g: &RibbonGraph) -> Result<Vec<bool>> {
        let mut flags = vec![false; g.num_edges()];
        for l in &self.0 {
            match g.edge_index(l) {
                Some(i) => flags[i] = true,
                None => return Err(Error::UnknownEdge(l.clone())),
            }
        }
        Ok(flags)
    }

    pub fn mask(&self, g: &RibbonGraph) -> Result<u64> {
        Ok(self
            .flags(g)?
            .iter()
            .enumerate()
            .fold(0, |m, (i, &f)| if f { m | 1 << i } else { m }))
    }

    /// `A ∩ E(g)`.
    pub fn restricted_to(&self, g: &RibbonGraph) -> EdgeSubset {
        EdgeSubset(g.edge_labels().filter(|l| self.0.contains(*l)).map(String::from).collect())
    }

    /// `E(g) \ A`.
    pub fn complement(&self, g: &RibbonGraph) -> EdgeSubset {
        EdgeSubset(g.edge_labels().filter(|l| !self.0.contains(*l)).map(String::from).collect())
    }

    pub fn symmetric_difference(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset(self.0.symmetric_difference(&other.0).cloned().collect())
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl<S: Into<String>> FromIterator<S> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        EdgeSubset::from_labels(iter)
    }
}
