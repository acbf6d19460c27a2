use std::sync::Arc;

use crate::definable::definable_family;
use crate::error::Result;
use crate::family::SetFamily;
use crate::neighborhood::{neighborhoods_of_covering, successor_neighborhoods, NeighborhoodMap};
use crate::structure::{BinaryRelation, Covering};
use crate::universe::{Subset, Universe};

/// A neighborhood system together with its definable family, computed once
/// and shared by the axiom checkers.
#[derive(Clone, Debug)]
pub struct ApproximationSpace {
    neighborhoods: NeighborhoodMap,
    definable: SetFamily,
}

impl ApproximationSpace {
    pub fn from_neighborhoods(neighborhoods: NeighborhoodMap) -> Result<Self> {
        let definable = definable_family(&neighborhoods)?;
        Ok(ApproximationSpace {
            neighborhoods,
            definable,
        })
    }

    pub fn from_covering(c: &Covering) -> Result<Self> {
        Self::from_neighborhoods(neighborhoods_of_covering(c))
    }

    pub fn from_relation(r: &BinaryRelation) -> Result<Self> {
        Self::from_neighborhoods(successor_neighborhoods(r))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.neighborhoods.universe()
    }

    pub fn neighborhoods(&self) -> &NeighborhoodMap {
        &self.neighborhoods
    }

    pub fn definable(&self) -> &SetFamily {
        &self.definable
    }

    pub fn is_definable(&self, x: Subset) -> bool {
        self.definable.contains(x)
    }
}
