//! Definable sets: `X` is definable when `X = ⋃_{x ∈ X} N(x)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::neighborhood::{NeighborhoodMap, NeighborhoodSource};
use crate::par;
use crate::report::{CheckReport, Witness};
use crate::universe::{Subset, SUBSET_SCAN_LIMIT};

pub fn is_definable(nm: &NeighborhoodMap, x: Subset) -> Result<bool> {
    nm.check_universe(x)?;
    Ok(nm.union_over(x) == x)
}

pub(crate) fn require_scan_size(nm: &NeighborhoodMap, operation: &'static str) -> Result<()> {
    if nm.len() > SUBSET_SCAN_LIMIT {
        Err(Error::SizeBound {
            operation,
            limit: SUBSET_SCAN_LIMIT,
            size: nm.len(),
        })
    } else {
        Ok(())
    }
}

/// All subsets `X` with `pred(X)`, in canonical order.
pub(crate) fn scan_subsets(nm: &NeighborhoodMap, pred: impl Fn(Subset) -> bool + Sync + Send) -> SetFamily {
    let hits = par::filter_range(0..1usize << nm.len(), |bits| {
        pred(Subset::from_bits(bits as u64))
    });
    let mut members: Vec<Subset> = hits.into_iter().map(|b| Subset::from_bits(b as u64)).collect();
    members.sort_by(Subset::canonical_cmp);
    SetFamily::from_canonical(nm.universe().clone(), members)
}

/// `D(U, ·)`: every definable subset, canonical order.
///
/// Covering neighborhoods are closed under union starting from `∅`; this is
/// exact because `x ∈ N(x)` and `y ∈ N(x) ⇒ N(y) ⊆ N(x)`. Relation
/// neighborhoods lack both properties and are scanned instead.
pub fn definable_family(nm: &NeighborhoodMap) -> Result<SetFamily> {
    require_scan_size(nm, "definable_family")?;
    match nm.source() {
        NeighborhoodSource::Covering => Ok(union_closure(nm)),
        NeighborhoodSource::Relation => Ok(scan_subsets(nm, |x| nm.union_over(x) == x)),
    }
}

fn union_closure(nm: &NeighborhoodMap) -> SetFamily {
    let mut generators: Vec<Subset> = nm.as_slice().to_vec();
    generators.sort_by(Subset::canonical_cmp);
    generators.dedup();

    let mut seen: HashSet<Subset> = HashSet::from([Subset::EMPTY]);
    let mut frontier = vec![Subset::EMPTY];
    while let Some(set) = frontier.pop() {
        for &g in &generators {
            let next = set.union(g);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    let mut members: Vec<Subset> = seen.into_iter().collect();
    members.sort_by(Subset::canonical_cmp);
    SetFamily::from_canonical(nm.universe().clone(), members)
}

/// `{X : lower(X) = X}`.
pub fn fixpoint_family_lower(nm: &NeighborhoodMap) -> Result<SetFamily> {
    require_scan_size(nm, "fixpoint_family_lower")?;
    Ok(scan_subsets(nm, |x| nm.lower(x) == x))
}

/// `{X : upper(X) = X}`.
///
/// By duality these are exactly the complements of the lower fixpoints, so
/// the family coincides with `D(U, C)` only when `D(U, C)` is closed under
/// complement (e.g. when the neighborhoods partition the universe).
pub fn fixpoint_family_upper(nm: &NeighborhoodMap) -> Result<SetFamily> {
    require_scan_size(nm, "fixpoint_family_upper")?;
    Ok(scan_subsets(nm, |x| nm.upper(x) == x))
}

/// Pairwise closure under union and intersection. The witness names the
/// first pair (canonical order) whose union or intersection is missing.
pub fn check_closure(fam: &SetFamily) -> CheckReport {
    let members = fam.members();
    let m = members.len();
    let u = fam.universe();
    let mut report = CheckReport::new("closure");
    let hit = par::find_first(0..m * m, |k| {
        let (i, j) = (k / m, k % m);
        if j < i {
            return None;
        }
        let (x, y) = (members[i], members[j]);
        if !fam.contains(x.union(y)) {
            Some(("union", x, y, x.union(y)))
        } else if !fam.contains(x.intersection(y)) {
            Some(("intersection", x, y, x.intersection(y)))
        } else {
            None
        }
    });
    match hit {
        Some((_, (op, x, y, missing))) => {
            report.record(
                format!("closed-under-{op}"),
                Some(
                    Witness::new()
                        .with(u, "X", x)
                        .with(u, "Y", y)
                        .with(u, "missing", missing),
                ),
            );
        }
        None => {
            report.record("closed-under-union", None);
            report.record("closed-under-intersection", None);
        }
    }
    report
}
