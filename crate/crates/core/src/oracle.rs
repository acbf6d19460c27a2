//! Brute-force oracles: plain 2^n scans, exhaustive family enumeration,
//! seeded random structures and the per-covering law suite.
//!
//! Nothing here reuses the fast paths it is meant to check. The definable
//! scan tests `X = ⋃ N(x)` on every subset, the rough-matroid enumerator
//! works on index masks over `D(U, C)` rather than on [`SetFamily`], and the
//! classical-matroid enumerator never touches a covering.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{
    covering_disjoint_sum, direct_sum, family_disjoint_sum, one_point_extension, uniform_report,
    DirectSumInput,
};
use crate::definable::{check_closure, fixpoint_family_lower, fixpoint_family_upper};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::lattice::{build_lattice, check_atomicity, check_lattice_laws};
use crate::neighborhood::{neighborhoods_of_covering, NeighborhoodMap};
use crate::par;
use crate::report::{CheckReport, Witness};
use crate::space::ApproximationSpace;
use crate::structure::{BinaryRelation, Covering};
use crate::universe::{Subset, Universe, FAMILY_ENUM_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationBudget {
    /// Largest universe for 2^n subset scans.
    pub max_universe: usize,
    /// Largest `|D(U, C)|` whose power set is enumerated.
    pub max_definable: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_universe: FAMILY_ENUM_LIMIT,
            max_definable: 18,
            trials: 16,
            seed: 0,
        }
    }
}

impl EnumerationBudget {
    pub fn with_seed(seed: u64) -> Self {
        EnumerationBudget {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_universe == 0 || self.max_definable == 0 || self.trials == 0 {
            return Err(Error::Budget("budgets must be positive".into()));
        }
        if self.max_definable > 30 {
            return Err(Error::Budget(format!(
                "max_definable={} would enumerate more than 2^30 families",
                self.max_definable
            )));
        }
        Ok(())
    }

    fn require_universe(&self, n: usize) -> Result<()> {
        if n > self.max_universe {
            return Err(Error::Budget(format!(
                "universe of {n} elements exceeds the scan budget of {}",
                self.max_universe
            )));
        }
        Ok(())
    }

    fn require_definable(&self, d: usize) -> Result<()> {
        if d > self.max_definable {
            return Err(Error::Budget(format!(
                "|D| = {d} exceeds the enumeration budget of {}",
                self.max_definable
            )));
        }
        Ok(())
    }
}

/// `D` by testing every subset of the universe.
pub fn definable_family_scan(nm: &NeighborhoodMap, budget: &EnumerationBudget) -> Result<SetFamily> {
    budget.require_universe(nm.len())?;
    let n = nm.len();
    let hits = par::filter_range(0..1usize << n, |bits| {
        let x = Subset::from_bits(bits as u64);
        let mut union = Subset::EMPTY;
        for i in 0..n {
            if x.contains(i) {
                union = union.union(nm.of(i));
            }
        }
        union == x
    });
    SetFamily::new(
        nm.universe().clone(),
        hits.into_iter().map(|b| Subset::from_bits(b as u64)).collect(),
    )
}

/// Rough-matroid test on subfamilies of `D`, encoded as bit masks over the
/// indices of `D`'s members.
struct MaskOracle {
    sizes: Vec<u32>,
    /// `down[i]`: members of `D` contained in `D[i]`.
    down: Vec<u64>,
    /// `between[i * m + j]`: members `I` with `D[i] ⊂ I ⊆ D[i] ∪ D[j]`.
    between: Vec<u64>,
    empty_bit: u64,
}

impl MaskOracle {
    fn new(definable: &[Subset]) -> Self {
        let m = definable.len();
        assert!(m <= 63);
        let mask_of = |pred: &dyn Fn(Subset) -> bool| {
            definable
                .iter()
                .enumerate()
                .filter(|&(_, &s)| pred(s))
                .fold(0u64, |acc, (k, _)| acc | 1 << k)
        };
        let down = definable.iter().map(|&d| mask_of(&|s| s.bits() & !d.bits() == 0)).collect();
        let mut between = vec![0; m * m];
        for (i, &a) in definable.iter().enumerate() {
            for (j, &b) in definable.iter().enumerate() {
                let bound = a.bits() | b.bits();
                between[i * m + j] =
                    mask_of(&|s| s.bits() & a.bits() == a.bits() && s != a && s.bits() & !bound == 0);
            }
        }
        let empty_bit = definable
            .iter()
            .position(|s| s.bits() == 0)
            .map_or(0, |k| 1 << k);
        MaskOracle {
            sizes: definable.iter().map(|s| s.bits().count_ones()).collect(),
            down,
            between,
            empty_bit,
        }
    }

    fn is_rough_matroid(&self, mask: u64) -> bool {
        if mask & self.empty_bit == 0 {
            return false;
        }
        let m = self.sizes.len();
        let members: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 1).collect();
        if members.iter().any(|&i| self.down[i] & !mask != 0) {
            return false;
        }
        members.iter().all(|&i| {
            members
                .iter()
                .all(|&j| self.sizes[i] >= self.sizes[j] || self.between[i * m + j] & mask != 0)
        })
    }
}

/// Every rough matroid on `c`, as subfamilies of `D(U, C)`.
///
/// Subfamily `k` consists of the members of `D` (canonical order) at the set
/// bits of `k`; output is in ascending `k`, so a run can be resumed by index.
pub fn enumerate_rough_matroids(c: &Covering, budget: &EnumerationBudget) -> Result<Vec<SetFamily>> {
    budget.validate()?;
    let space = ApproximationSpace::from_covering(c)?;
    enumerate_rough_matroids_in(&space, budget)
}

pub fn enumerate_rough_matroids_in(
    space: &ApproximationSpace,
    budget: &EnumerationBudget,
) -> Result<Vec<SetFamily>> {
    let d = space.definable();
    budget.require_definable(d.len())?;
    let oracle = MaskOracle::new(d.members());
    let masks = par::filter_range(0..1usize << d.len(), |k| oracle.is_rough_matroid(k as u64));
    log::debug!("{} of {} subfamilies are rough matroids", masks.len(), 1u64 << d.len());
    Ok(masks.into_iter().map(|k| d.subfamily(k as u64)).collect())
}

/// Re-checks every listed family and a seeded sample of omitted ones with
/// the full checker. Returns the first disagreement.
pub fn verify_enumeration(
    c: &Covering,
    listed: &[SetFamily],
    budget: &EnumerationBudget,
) -> Result<Option<SetFamily>> {
    let space = ApproximationSpace::from_covering(c)?;
    let d = space.definable();
    budget.require_definable(d.len())?;
    for fam in listed {
        if !space.check_rough_matroid(fam)?.pass {
            return Ok(Some(fam.clone()));
        }
    }
    let listed: HashSet<&[Subset]> = listed.iter().map(|f| f.members()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let total = 1u64 << d.len();
    for _ in 0..budget.trials {
        let fam = d.subfamily(rng.random_range(0..total));
        if !listed.contains(fam.members()) && space.check_rough_matroid(&fam)?.pass {
            return Ok(Some(fam));
        }
    }
    Ok(None)
}

/// Every matroid on `n` labelled elements, from I1–I3 directly over all
/// `2^(2^n)` families of subsets. `n ≤ 4`.
pub fn classical_matroids(n: usize) -> Result<Vec<SetFamily>> {
    if n == 0 || n > 4 {
        return Err(Error::Budget(format!("classical matroid enumeration needs 1 <= n <= 4, got {n}")));
    }
    let universe = Arc::new(Universe::alphabetic(n)?);
    let sets = 1usize << n;
    let is_matroid = |fam: u64| {
        let has = |s: usize| fam >> s & 1 == 1;
        if !has(0) {
            return false;
        }
        for i in (0..sets).filter(|&i| has(i)) {
            // heredity: dropping any one element stays inside, which
            // implies the full I2 by induction
            if (0..n).any(|e| i >> e & 1 == 1 && !has(i & !(1 << e))) {
                return false;
            }
            for j in (0..sets).filter(|&j| has(j)) {
                if (i.count_ones() < j.count_ones())
                    && !(0..n).any(|e| j >> e & 1 == 1 && i >> e & 1 == 0 && has(i | 1 << e))
                {
                    return false;
                }
            }
        }
        true
    };
    let hits = par::filter_range(0..1usize << sets, |fam| is_matroid(fam as u64));
    hits.into_iter()
        .map(|fam| {
            let members = (0..sets)
                .filter(|s| fam >> s & 1 == 1)
                .map(|s| Subset::from_bits(s as u64))
                .collect();
            SetFamily::new(universe.clone(), members)
        })
        .collect()
}

/// A seeded random covering of an `n`-element alphabetic universe: `n`
/// candidate blocks, each element joining each block with probability
/// `density`, then singleton patches for anything left uncovered.
pub fn random_covering(n: usize, density: f64, seed: u64) -> Result<Covering> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::Precondition(format!("density must lie in (0, 1], got {density}")));
    }
    let universe = Arc::new(Universe::alphabetic(n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<Subset> = Vec::new();
    for _ in 0..n {
        let block: Subset = (0..n).filter(|_| rng.random_bool(density)).collect();
        if !block.is_empty() && !blocks.contains(&block) {
            blocks.push(block);
        }
    }
    let covered = blocks.iter().fold(Subset::EMPTY, |acc, &b| acc.union(b));
    for x in universe.full().difference(covered).iter() {
        let patch = Subset::singleton(x);
        if !blocks.contains(&patch) {
            blocks.push(patch);
        }
    }
    Covering::new(universe, blocks)
}

/// A seeded random relation: each ordered pair with probability `density`.
pub fn random_relation(n: usize, density: f64, seed: u64) -> Result<BinaryRelation> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Precondition(format!("density must lie in [0, 1], got {density}")));
    }
    let universe = Arc::new(Universe::alphabetic(n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let successors = (0..n)
        .map(|_| (0..n).filter(|_| rng.random_bool(density)).collect())
        .collect();
    BinaryRelation::from_successors(universe, successors)
}

/// Every covering of an `n`-element alphabetic universe, `n ≤ 4`, in
/// ascending order of the block-set bitmask.
pub fn all_coverings(n: usize) -> Result<Vec<Covering>> {
    if n == 0 || n > 4 {
        return Err(Error::Budget(format!("covering enumeration needs 1 <= n <= 4, got {n}")));
    }
    let universe = Arc::new(Universe::alphabetic(n)?);
    let nonempty: Vec<Subset> = (1..1u64 << n).map(Subset::from_bits).collect();
    let full = universe.full();
    let picks = par::filter_range(1..1usize << nonempty.len(), |k| {
        let union = (0..nonempty.len())
            .filter(|b| k >> b & 1 == 1)
            .fold(Subset::EMPTY, |acc, b| acc.union(nonempty[b]));
        union == full
    });
    picks
        .into_iter()
        .map(|k| {
            let blocks = (0..nonempty.len())
                .filter(|b| k >> b & 1 == 1)
                .map(|b| nonempty[b])
                .collect();
            Covering::new(universe.clone(), blocks)
        })
        .collect()
}

/// One covering per distinct neighborhood map on `n ≤ 4` elements (the first
/// in [`all_coverings`] order). Every law here depends on a covering only
/// through its neighborhoods.
pub fn neighborhood_systems(n: usize) -> Result<Vec<Covering>> {
    let mut seen = HashSet::new();
    Ok(all_coverings(n)?
        .into_iter()
        .filter(|c| seen.insert(neighborhoods_of_covering(c).as_slice().to_vec()))
        .collect())
}

// ---- law suite -------------------------------------------------------------

fn first_difference(u: &Universe, expected: &SetFamily, actual: &SetFamily) -> Option<Witness> {
    let a: BTreeSet<u64> = expected.members().iter().map(|s| s.bits()).collect();
    let b: BTreeSet<u64> = actual.members().iter().map(|s| s.bits()).collect();
    let mut diff: Vec<Subset> = a.symmetric_difference(&b).map(|&x| Subset::from_bits(x)).collect();
    diff.sort_by(Subset::canonical_cmp);
    diff.first().map(|&x| {
        let role = if a.contains(&x.bits()) { "only-in-D" } else { "only-in-fixpoints" };
        Witness::new().with(u, role, x)
    })
}

/// `XL(~X) = ~XH(X)` for every `X ⊆ U`.
pub fn duality_violation(nm: &NeighborhoodMap) -> Option<Witness> {
    let n = nm.len();
    par::find_first(0..1usize << n, |bits| {
        let x = Subset::from_bits(bits as u64);
        (nm.lower(x.complement(n)) != nm.upper(x).complement(n)).then_some(x)
    })
    .map(|(_, x)| Witness::new().with(nm.universe(), "X", x))
}

/// First admissible `(D1, D2, d)` where the two sides of the one-point
/// extension biconditional differ. With `strict`, only `|D1| < |D2|`.
pub fn extension_violation(space: &ApproximationSpace, strict: bool) -> Option<Witness> {
    let d = space.definable().members();
    let m = d.len();
    par::find_first(0..m * m, |k| {
        let (d1, d2) = (d[k / m], d[k % m]);
        if strict && d1.len() >= d2.len() {
            return None;
        }
        d2.difference(d1).iter().find_map(|e| {
            let check = one_point_extension(space, d1, d2, e).expect("admissible by construction");
            (!check.agrees()).then_some((d1, d2, e))
        })
    })
    .map(|(_, (d1, d2, e))| {
        let u = space.universe();
        Witness::new()
            .with(u, "D1", d1)
            .with(u, "D2", d2)
            .with(u, "d", Subset::singleton(e))
    })
}

/// CI3′ and CI1–CI3 give the same verdict on `fam`.
pub fn ci3_prime_agrees(space: &ApproximationSpace, fam: &SetFamily) -> Result<bool> {
    Ok(space.check_ci3_prime(fam)?.pass == space.check_rough_matroid(fam)?.pass)
}

/// Runs [`ci3_prime_agrees`] on every subfamily of `D`; returns the first
/// disagreeing subfamily.
pub fn ci3_prime_exhaustive(space: &ApproximationSpace, budget: &EnumerationBudget) -> Result<Option<SetFamily>> {
    let d = space.definable();
    budget.require_definable(d.len())?;
    let hit = par::find_first(0..1usize << d.len(), |k| {
        let fam = d.subfamily(k as u64);
        (!ci3_prime_agrees(space, &fam).expect("same universe")).then_some(fam)
    });
    Ok(hit.map(|(_, f)| f))
}

/// Seeded subfamilies of `D`: half uniform random subsets (with `∅` added
/// half the time), half closed downward inside `D` from a few random
/// generators. The latter satisfy CI1 and CI2, so CI3 decides them.
pub fn sample_families(space: &ApproximationSpace, count: usize, rng: &mut impl Rng) -> Vec<SetFamily> {
    let d = space.definable();
    let members = d.members();
    (0..count)
        .map(|t| {
            if t % 2 == 0 {
                let mut fam: Vec<Subset> = members.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
                if rng.random_bool(0.5) {
                    fam.push(Subset::EMPTY);
                }
                SetFamily::new(d.universe().clone(), fam).expect("members of D")
            } else {
                let k = rng.random_range(1..=3usize);
                let gens: Vec<Subset> = (0..k).filter_map(|_| members.choose(rng).copied()).collect();
                d.filter(|s| gens.iter().any(|g| s.is_subset(*g)))
            }
        })
        .collect()
}

fn primed(u: &Universe) -> Result<Arc<Universe>> {
    Ok(Arc::new(Universe::new(u.labels().iter().map(|l| format!("{l}'")))?))
}

fn relabel_covering(c: &Covering, universe: Arc<Universe>) -> Result<Covering> {
    Covering::new(universe, c.blocks().to_vec())
}

/// The full law suite on one covering.
///
/// Laws are recorded as axioms, each with its first counterexample. The
/// literal statement that the `XH` fixpoints equal `D` is one of them and
/// fails whenever some neighborhood is not a block of a partition; the law
/// that they are the complements of `D` is recorded next to it. Atomicity is
/// reported as a fact only.
pub fn cross_check(c: &Covering, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let n = c.universe().len();
    budget.require_universe(n)?;
    let space = ApproximationSpace::from_covering(c)?;
    let u = space.universe().clone();
    let nm = space.neighborhoods();
    let d = space.definable();
    let mut report = CheckReport::new("cross-check");
    report.fact("seed", budget.seed);
    report.fact("trials", budget.trials);
    report.fact("universe-size", n);
    report.fact("definable-count", d.len());

    report.record("duality", duality_violation(nm));
    report.record("closure", check_closure(d).witness);
    let scan = definable_family_scan(nm, budget)?;
    report.record("scan-equals-closure", first_difference(&u, d, &scan));
    report.record("lower-fixpoints-equal-D", first_difference(&u, d, &fixpoint_family_lower(nm)?));
    let upper = fixpoint_family_upper(nm)?;
    report.record("upper-fixpoints-equal-D", first_difference(&u, d, &upper));
    let complements = SetFamily::new(u.clone(), d.members().iter().map(|s| s.complement(n)).collect())?;
    report.record("upper-fixpoints-equal-complements", first_difference(&u, &complements, &upper));

    let lattice = build_lattice(d)?;
    report.record("lattice-laws", check_lattice_laws(&lattice).witness);
    let atomic = check_atomicity(&lattice);
    report.fact("atomic", atomic.pass);
    if let Some(w) = &atomic.witness {
        report.fact("atomicity-witness", serde_json::to_value(w).expect("witness serializes"));
    }

    report.record("one-point-extension", extension_violation(&space, true));
    report.fact("one-point-extension-without-size-hypothesis", extension_violation(&space, false).is_none());

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut samples = sample_families(&space, budget.trials, &mut rng);
    samples.push(d.clone());
    let mut ci3_prime = None;
    let mut condition = None;
    let mut rough_samples = Vec::new();
    for fam in &samples {
        if ci3_prime.is_none() && !ci3_prime_agrees(&space, fam)? {
            ci3_prime = Some(fam.clone());
        }
        let rough = space.check_rough_matroid(fam)?;
        if rough.pass {
            let cond = space.check_matroid_condition(fam)?;
            if condition.is_none() && !cond.pass {
                condition = Some(fam.clone());
            }
            rough_samples.push(fam.clone());
        }
    }
    report.record("ci3-prime-agreement", ci3_prime.map(family_witness));
    report.record("matroid-condition", condition.map(family_witness));

    let mut sufficiency = None;
    for r in 1..=n {
        let fam = d.filter(|s| s.len() <= r);
        let uniform = uniform_report(&space, &fam, r);
        if sufficiency.is_none() && uniform.failed("sufficiency") {
            report.fact("uniform-sufficiency-r", r);
            sufficiency = uniform.outcome("sufficiency").and_then(|o| o.witness.clone());
        }
    }
    report.record("uniform-sufficiency", sufficiency);

    report.record("direct-sum", direct_sum_violation(c, &rough_samples)?);
    report.note(atomic.notes.join("; "));
    Ok(report)
}

fn family_witness(fam: SetFamily) -> Witness {
    let u = fam.universe().clone();
    fam.members()
        .iter()
        .enumerate()
        .fold(Witness::new(), |w, (k, &s)| w.with(&u, &format!("member{k}"), s))
}

/// Sums each small sampled rough matroid on `c` with the paper's two-element
/// summand relabelled onto primed labels, and also checks
/// `D(C ⊎ C') = D(C) ⊎ D(C')` for `c` and its primed copy.
fn direct_sum_violation(c: &Covering, rough: &[SetFamily]) -> Result<Option<Witness>> {
    let copy = relabel_covering(c, primed(c.universe())?)?;
    let summed = ApproximationSpace::from_covering(&covering_disjoint_sum(c, &copy)?)?;
    let left = ApproximationSpace::from_covering(c)?;
    let right = ApproximationSpace::from_covering(&copy)?;
    let product = family_disjoint_sum(left.definable(), right.definable())?;
    if let Some(w) = first_difference(summed.universe(), &product, summed.definable()) {
        return Ok(Some(w));
    }

    let (c2, f2) = crate::fixtures::direct_sum_left();
    let other = primed(c2.universe())?;
    let c2 = relabel_covering(&c2, other.clone())?;
    let f2 = SetFamily::new(other, f2.members().to_vec())?;
    for fam in rough.iter().filter(|f| f.len() <= 32) {
        let inp = DirectSumInput::new((c.clone(), fam.clone()), (c2.clone(), f2.clone()))?;
        let (_, sum, verdict) = direct_sum(&inp)?;
        if !verdict.pass {
            return Ok(Some(family_witness(sum)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::definable::definable_family;
    use crate::fixtures;

    #[test]
    fn scan_matches_closure_on_fixtures() {
        let budget = EnumerationBudget::default();
        for c in [
            fixtures::six_block_covering(),
            fixtures::two_block_covering(),
            fixtures::four_block_covering(),
            fixtures::singleton_neighborhood_covering(),
        ] {
            let nm = neighborhoods_of_covering(&c);
            assert_eq!(definable_family_scan(&nm, &budget).unwrap(), definable_family(&nm).unwrap());
        }
    }

    #[test]
    fn scan_respects_budget() {
        let c = random_covering(13, 0.3, 1).unwrap();
        let nm = neighborhoods_of_covering(&c);
        assert!(matches!(
            definable_family_scan(&nm, &EnumerationBudget::default()),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn classical_counts() {
        // labelled matroids on 1, 2, 3, 4 elements
        let counts: Vec<usize> = (1..=4).map(|n| classical_matroids(n).unwrap().len()).collect();
        assert_eq!(counts, [2, 5, 16, 68]);
    }

    #[test]
    fn enumeration_on_two_block_covering() {
        let c = fixtures::two_block_covering();
        let all = enumerate_rough_matroids(&c, &EnumerationBudget::default()).unwrap();
        let space = ApproximationSpace::from_covering(&c).unwrap();
        assert!(all.contains(space.definable()));
        // brute force with the full checker over all 2^5 subfamilies
        let expected: Vec<SetFamily> = (0..32u64)
            .map(|k| space.definable().subfamily(k))
            .filter(|f| space.check_rough_matroid(f).unwrap().pass)
            .collect();
        assert_eq!(all, expected);
        assert_eq!(verify_enumeration(&c, &all, &EnumerationBudget::default()).unwrap(), None);
    }

    #[test]
    fn frozen_enumeration_fixtures() {
        let data = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
        for name in ["two_block", "four_block"] {
            let s = crate::io::read_structure(&data.join(format!("{name}.json"))).unwrap();
            let text = std::fs::read_to_string(data.join(format!("enumerate_{name}.json"))).unwrap();
            let frozen = crate::io::Fixture::parse(&text).unwrap();
            let budget = EnumerationBudget::with_seed(frozen.seed);
            let families = enumerate_rough_matroids(s.as_covering().unwrap(), &budget).unwrap();
            assert_eq!(families, frozen.families_in(s.universe()).unwrap(), "{}", frozen.command);
        }
    }

    #[test]
    fn enumeration_budget() {
        let c = Covering::singletons(Arc::new(Universe::alphabetic(5).unwrap()));
        let err = enumerate_rough_matroids(&c, &EnumerationBudget::default()).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn random_covering_contract() {
        let one = random_covering(1, 0.01, 3).unwrap();
        assert_eq!(one.blocks(), [Subset::singleton(0)]);
        let a = random_covering(6, 0.4, 7).unwrap();
        assert_eq!(a, random_covering(6, 0.4, 7).unwrap());
        assert_eq!(a.universe().len(), 6);
        assert!(random_covering(4, 0.0, 1).is_err());
        assert!(random_covering(4, 1.5, 1).is_err());
    }

    #[test]
    fn random_relation_is_deterministic() {
        let r = random_relation(5, 0.3, 11).unwrap();
        assert_eq!(r, random_relation(5, 0.3, 11).unwrap());
        assert!(random_relation(5, 0.0, 1).unwrap().pairs().is_empty());
        assert_eq!(random_relation(3, 1.0, 1).unwrap().pairs().len(), 9);
    }

    #[test]
    fn neighborhood_system_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| neighborhood_systems(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 4, 29, 355]);
        // coverings of a 2-set: {ab}, {a,b}, {a,ab}, {b,ab}, {a,b,ab}
        assert_eq!(all_coverings(2).unwrap().len(), 5);
    }

    #[test]
    fn cross_check_singletons() {
        let c = Covering::singletons(Arc::new(Universe::alphabetic(4).unwrap()));
        let r = cross_check(&c, &EnumerationBudget::with_seed(5)).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.facts["atomic"], true);
    }

    #[test]
    fn cross_check_example_one() {
        let r = cross_check(&fixtures::six_block_covering(), &EnumerationBudget::with_seed(5)).unwrap();
        // the neighborhoods {a,d}, {b,c}, {e}, {f} partition U
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.facts["atomic"], true);
        assert_eq!(r.facts["one-point-extension-without-size-hypothesis"], true);
    }

    #[test]
    fn cross_check_is_deterministic() {
        let c = fixtures::two_block_covering();
        let a = cross_check(&c, &EnumerationBudget::with_seed(9)).unwrap();
        let b = cross_check(&c, &EnumerationBudget::with_seed(9)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.facts["atomic"], false);
        assert_eq!(a.failed_axioms(), ["upper-fixpoints-equal-D"]);
        let w = a.outcome("upper-fixpoints-equal-D").unwrap().witness.clone().unwrap();
        assert_eq!(w.get("only-in-fixpoints"), Some(Subset::singleton(0)));
    }
}

#[cfg(test)]
pub(crate) mod strategies {
    use proptest::prelude::*;

    use super::random_covering;
    use crate::structure::Covering;

    /// Seeded random coverings on `1..=max_n` elements.
    pub fn covering(max_n: usize) -> impl Strategy<Value = Covering> {
        (1..=max_n, 0.05f64..=1.0, any::<u64>())
            .prop_map(|(n, density, seed)| random_covering(n, density, seed).expect("valid parameters"))
    }
}
