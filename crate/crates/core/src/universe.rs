//! Finite ground sets and their subsets.
//!
//! A [`Universe`] fixes an ordered list of distinct labels; element `i` is the
//! label at position `i`. A [`Subset`] is a bitmask over those positions, so
//! set algebra is a handful of word operations. Serializations always list
//! members in universe order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on universe size, fixed by the 64-bit subset representation.
pub const MAX_ELEMENTS: usize = 64;
/// Largest universe for which `2^n` subset scans are allowed.
pub const SUBSET_SCAN_LIMIT: usize = 20;
/// Largest universe for which family-level enumeration is allowed.
pub const FAMILY_ENUM_LIMIT: usize = 12;

#[derive(Clone, Debug)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        if labels.len() > SUBSET_SCAN_LIMIT {
            log::warn!(
                "universe has {} elements; exhaustive operations are limited to {}",
                labels.len(),
                SUBSET_SCAN_LIMIT
            );
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe { labels, index })
    }

    /// `n` elements labelled `a`, `b`, ... (`e26`, `e27`, ... past `z`).
    pub fn alphabetic(n: usize) -> Result<Self> {
        Universe::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Resolves labels to a subset; duplicates are rejected.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = Subset::EMPTY;
        for label in labels {
            let i = self.index_of(label.as_ref())?;
            if set.contains(i) {
                return Err(Error::DuplicateLabel(label.as_ref().to_string()));
            }
            set = set.with(i);
        }
        Ok(set)
    }

    /// Parses a braced literal such as `{a, d}`; `{}` is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<Subset> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("set literal must be braced: `{text}`")))?;
        if inner.trim().is_empty() {
            return Ok(Subset::EMPTY);
        }
        self.subset(inner.split(',').map(str::trim))
    }

    pub fn member_labels(&self, set: Subset) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Canonical text form, e.g. `{a,d}`.
    pub fn format_set(&self, set: Subset) -> String {
        format!("{{{}}}", self.member_labels(set).join(","))
    }

    pub(crate) fn check_within(&self, set: Subset) -> Result<()> {
        if set.is_within(self.len()) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "subset {:#x} has members outside a {}-element universe",
                set.bits(),
                self.len()
            )))
        }
    }

    /// Concatenates two label-disjoint universes; members of `other` are
    /// shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Universe) -> Result<Universe> {
        let shared: Vec<String> = other
            .labels
            .iter()
            .filter(|l| self.index.contains_key(*l))
            .cloned()
            .collect();
        if !shared.is_empty() {
            return Err(Error::NotDisjoint(shared));
        }
        Universe::new(self.labels.iter().chain(other.labels.iter()).cloned())
    }
}

/// A subset of a universe of at most [`MAX_ELEMENTS`] elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_within(self, n: usize) -> bool {
        self.is_subset(Subset::full(n))
    }

    /// Shifts every member up by `offset` positions.
    pub fn shifted(self, offset: usize) -> Subset {
        if self.0 == 0 {
            self
        } else {
            Subset(self.0 << offset)
        }
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, starting with `self` itself and ending with the empty set.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            set: self.0,
            next: Some(self.0),
        }
    }

    /// Canonical order: by cardinality, then lexicographically on the
    /// ascending member lists (the set holding the lowest differing element
    /// comes first).
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Descending enumeration of submasks.
pub struct SubsetsOf {
    set: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.set)
        };
        Some(Subset(cur))
    }
}
