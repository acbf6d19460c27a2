use std::sync::Arc;

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// A deduplicated family of subsets, kept in canonical order
/// (cardinality, then member lists lexicographically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: Arc<Universe>,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new(universe: Arc<Universe>, mut members: Vec<Subset>) -> Result<Self> {
        for &m in &members {
            universe.check_within(m)?;
        }
        members.sort_by(Subset::canonical_cmp);
        members.dedup();
        Ok(SetFamily { universe, members })
    }

    /// Wraps members already in canonical order without duplicates.
    pub(crate) fn from_canonical(universe: Arc<Universe>, members: Vec<Subset>) -> Self {
        debug_assert!(members
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
        SetFamily { universe, members }
    }

    pub fn empty(universe: Arc<Universe>) -> Self {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    pub fn from_labels<F, I, S>(universe: Arc<Universe>, family: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let members = family
            .into_iter()
            .map(|m| universe.subset(m))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(universe, members)
    }

    /// Parses a whitespace-separated list of braced literals, e.g. `"{} {a} {a,b}"`.
    pub fn parse(universe: Arc<Universe>, text: &str) -> Result<Self> {
        let mut members = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let end = rest
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unterminated set literal in `{text}`")))?;
            members.push(universe.parse_set(&rest[..=end])?);
            rest = rest[end + 1..].trim_start_matches([',', ' ', '\t', '\n']);
        }
        SetFamily::new(universe, members)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: Subset) -> bool {
        self.position(set).is_some()
    }

    pub fn position(&self, set: Subset) -> Option<usize> {
        self.members
            .binary_search_by(|m| m.canonical_cmp(&set))
            .ok()
    }

    /// `⋃ fam`.
    pub fn support(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::EMPTY, |acc, &m| acc.union(m))
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Members selected by bit `i` of `mask`, `i` indexing [`Self::members`].
    pub fn subfamily(&self, mask: u64) -> SetFamily {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        SetFamily::from_canonical(self.universe.clone(), members)
    }

    pub fn filter(&self, pred: impl Fn(Subset) -> bool) -> SetFamily {
        let members = self.members.iter().copied().filter(|&m| pred(m)).collect();
        SetFamily::from_canonical(self.universe.clone(), members)
    }

    /// Member label lists in canonical order.
    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|&m| self.universe.member_labels(m))
            .collect()
    }

    pub fn format(&self) -> String {
        let inner: Vec<String> = self
            .members
            .iter()
            .map(|&m| self.universe.format_set(m))
            .collect();
        format!("{{{}}}", inner.join(", "))
    }

    pub(crate) fn require_universe(&self, universe: &Universe) -> Result<()> {
        if *self.universe == *universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "family is over {:?}, expected {:?}",
                self.universe.labels(),
                universe.labels()
            )))
        }
    }
}
