//! Coverings and binary relations over a universe.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// A family of nonempty, pairwise distinct blocks whose union is the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    universe: Arc<Universe>,
    blocks: Vec<Subset>,
}

impl Covering {
    pub fn new(universe: Arc<Universe>, blocks: Vec<Subset>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidCovering("no blocks".into()));
        }
        let mut seen = HashSet::with_capacity(blocks.len());
        let mut union = Subset::EMPTY;
        for &block in &blocks {
            universe.check_within(block)?;
            if block.is_empty() {
                return Err(Error::InvalidCovering("empty block".into()));
            }
            if !seen.insert(block) {
                return Err(Error::InvalidCovering(format!(
                    "duplicate block {}",
                    universe.format_set(block)
                )));
            }
            union = union.union(block);
        }
        let missing = universe.full().difference(union);
        if !missing.is_empty() {
            return Err(Error::InvalidCovering(format!(
                "blocks do not cover {}",
                universe.format_set(missing)
            )));
        }
        Ok(Covering { universe, blocks })
    }

    /// Builds a covering from label lists, e.g. `[["a", "b"], ["b", "c"]]`.
    pub fn from_labels<B, I, S>(universe: Arc<Universe>, blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let blocks = blocks
            .into_iter()
            .map(|b| universe.subset(b))
            .collect::<Result<Vec<_>>>()?;
        Covering::new(universe, blocks)
    }

    /// The partition of the universe into singletons.
    pub fn singletons(universe: Arc<Universe>) -> Self {
        let blocks = (0..universe.len()).map(Subset::singleton).collect();
        Covering { universe, blocks }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// True when the blocks are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        self.blocks
            .iter()
            .map(|b| b.len())
            .sum::<usize>()
            == self.universe.len()
    }
}

/// A binary relation stored as successor sets: `successors[x] = {y : xRy}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRelation {
    universe: Arc<Universe>,
    successors: Vec<Subset>,
}

impl BinaryRelation {
    pub fn new(universe: Arc<Universe>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = universe.len();
        let mut successors = vec![Subset::EMPTY; n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidRelation(format!("pair ({x}, {y}) out of range")));
            }
            if successors[x].contains(y) {
                return Err(Error::InvalidRelation(format!(
                    "duplicate pair ({}, {})",
                    universe.label(x),
                    universe.label(y)
                )));
            }
            successors[x] = successors[x].with(y);
        }
        Ok(BinaryRelation {
            universe,
            successors,
        })
    }

    pub fn from_labels<I, S>(universe: Arc<Universe>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(x, y)| Ok((universe.index_of(x.as_ref())?, universe.index_of(y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        BinaryRelation::new(universe, &pairs)
    }

    pub fn from_successors(universe: Arc<Universe>, successors: Vec<Subset>) -> Result<Self> {
        if successors.len() != universe.len() {
            return Err(Error::UniverseMismatch(format!(
                "{} successor sets for {} elements",
                successors.len(),
                universe.len()
            )));
        }
        for &s in &successors {
            universe.check_within(s)?;
        }
        Ok(BinaryRelation {
            universe,
            successors,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn successors(&self) -> &[Subset] {
        &self.successors
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.successors[x].contains(y)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
            .collect()
    }
}
