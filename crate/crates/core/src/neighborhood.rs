//! Neighborhood operators and the approximation pair they induce.
//!
//! For a covering, `N(x)` is the intersection of the blocks containing `x`;
//! for a relation it is the successor set `{y : xRy}`. Both feed the same
//! lower/upper approximation operators:
//!
//! ```text
//! lower(X) = {u : N(u) ⊆ X}        upper(X) = {u : N(u) ∩ X ≠ ∅}
//! ```

use std::sync::Arc;

use crate::error::Result;
use crate::structure::{BinaryRelation, Covering};
use crate::universe::{Subset, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodSource {
    Covering,
    Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodMap {
    universe: Arc<Universe>,
    source: NeighborhoodSource,
    neighborhoods: Vec<Subset>,
}

pub fn neighborhoods_of_covering(c: &Covering) -> NeighborhoodMap {
    let n = c.universe().len();
    let neighborhoods = (0..n)
        .map(|x| {
            c.blocks()
                .iter()
                .filter(|b| b.contains(x))
                .fold(Subset::full(n), |acc, &b| acc.intersection(b))
        })
        .collect();
    NeighborhoodMap {
        universe: c.universe().clone(),
        source: NeighborhoodSource::Covering,
        neighborhoods,
    }
}

pub fn successor_neighborhoods(r: &BinaryRelation) -> NeighborhoodMap {
    NeighborhoodMap {
        universe: r.universe().clone(),
        source: NeighborhoodSource::Relation,
        neighborhoods: r.successors().to_vec(),
    }
}

impl NeighborhoodMap {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn source(&self) -> NeighborhoodSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.neighborhoods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighborhoods.is_empty()
    }

    pub fn of(&self, x: usize) -> Subset {
        self.neighborhoods[x]
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.neighborhoods
    }

    /// `{u : N(u) ⊆ X}` without the range check of [`lower_approx`].
    pub fn lower(&self, x: Subset) -> Subset {
        self.neighborhoods
            .iter()
            .enumerate()
            .filter(|(_, nb)| nb.is_subset(x))
            .map(|(u, _)| u)
            .collect()
    }

    /// `{u : N(u) ∩ X ≠ ∅}`.
    pub fn upper(&self, x: Subset) -> Subset {
        self.neighborhoods
            .iter()
            .enumerate()
            .filter(|(_, nb)| nb.intersects(x))
            .map(|(u, _)| u)
            .collect()
    }

    /// `⋃_{x ∈ X} N(x)`.
    pub fn union_over(&self, x: Subset) -> Subset {
        x.iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.neighborhoods[i]))
    }

    /// True when every neighborhood is the singleton of its element.
    pub fn all_singletons(&self) -> bool {
        self.neighborhoods
            .iter()
            .enumerate()
            .all(|(x, &nb)| nb == Subset::singleton(x))
    }

    pub fn check_universe(&self, x: Subset) -> Result<()> {
        self.universe.check_within(x)
    }
}

pub fn lower_approx(nm: &NeighborhoodMap, x: Subset) -> Result<Subset> {
    nm.check_universe(x)?;
    Ok(nm.lower(x))
}

pub fn upper_approx(nm: &NeighborhoodMap, x: Subset) -> Result<Subset> {
    nm.check_universe(x)?;
    Ok(nm.upper(x))
}

/// `lower(∼X) = ∼upper(X)`.
pub fn check_duality(nm: &NeighborhoodMap, x: Subset) -> Result<bool> {
    nm.check_universe(x)?;
    let n = nm.len();
    Ok(nm.lower(x.complement(n)) == nm.upper(x).complement(n))
}
