//! Axiom checkers for matroids and rough matroids.
//!
//! Each axiom has an instance predicate (`*_at`) that decides it for one
//! instantiation of its quantifiers; the checkers search instantiations in
//! canonical order and report the first failing one as the witness, so a
//! witness can always be replayed through [`holds_at`].
//!
//! | system                    | axioms        | check name  |
//! |---------------------------|---------------|-------------|
//! | matroid                   | I1 I2 I3      | `matroid`   |
//! | rough matroid (covering)  | CI1 CI2 CI3   | `rough-cov` |
//! | lower rough (covering)    | LI1 LI2 LI3   | `lower-cov` |
//! | upper rough (covering)    | UI1 UI2 UI3   | `upper-cov` |
//! | lower rough (relation)    | LI1 LI2 LI3   | `lower-rel` |
//! | upper rough (relation)    | UI1 UI2 UI3   | `upper-rel` |
//!
//! The rough systems first require every member to be definable; when that
//! precondition fails it is the only outcome reported.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::neighborhood::NeighborhoodMap;
use crate::par;
use crate::report::{CheckReport, Witness};
use crate::space::ApproximationSpace;
use crate::structure::{BinaryRelation, Covering};
use crate::universe::Subset;

pub const DEFINABILITY: &str = "precondition:definable";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    I1,
    I2,
    I3,
    CI1,
    CI2,
    CI3,
    CI3Prime,
    LI1,
    LI2,
    LI3,
    UI1,
    UI2,
    UI3,
}

impl Axiom {
    pub fn as_str(self) -> &'static str {
        match self {
            Axiom::I1 => "I1",
            Axiom::I2 => "I2",
            Axiom::I3 => "I3",
            Axiom::CI1 => "CI1",
            Axiom::CI2 => "CI2",
            Axiom::CI3 => "CI3",
            Axiom::CI3Prime => "CI3'",
            Axiom::LI1 => "LI1",
            Axiom::LI2 => "LI2",
            Axiom::LI3 => "LI3",
            Axiom::UI1 => "UI1",
            Axiom::UI2 => "UI2",
            Axiom::UI3 => "UI3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I1" => Axiom::I1,
            "I2" => Axiom::I2,
            "I3" => Axiom::I3,
            "CI1" => Axiom::CI1,
            "CI2" => Axiom::CI2,
            "CI3" => Axiom::CI3,
            "CI3'" => Axiom::CI3Prime,
            "LI1" => Axiom::LI1,
            "LI2" => Axiom::LI2,
            "LI3" => Axiom::LI3,
            "UI1" => Axiom::UI1,
            "UI2" => Axiom::UI2,
            "UI3" => Axiom::UI3,
            other => return Err(Error::Parse(format!("unknown axiom `{other}`"))),
        })
    }
}

/// Which approximation operator a lower/upper system is stated over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Approximation {
    Lower,
    Upper,
}

impl Approximation {
    pub fn apply(self, nm: &NeighborhoodMap, x: Subset) -> Subset {
        match self {
            Approximation::Lower => nm.lower(x),
            Approximation::Upper => nm.upper(x),
        }
    }

    fn axioms(self) -> [Axiom; 3] {
        match self {
            Approximation::Lower => [Axiom::LI1, Axiom::LI2, Axiom::LI3],
            Approximation::Upper => [Axiom::UI1, Axiom::UI2, Axiom::UI3],
        }
    }
}

// ---- instance predicates -------------------------------------------------

/// I2 / heredity: `I ∈ fam ∧ I' ⊆ I ⇒ I' ∈ fam`.
pub fn i2_at(fam: &SetFamily, i: Subset, i_sub: Subset) -> bool {
    !(fam.contains(i) && i_sub.is_subset(i)) || fam.contains(i_sub)
}

/// I3: `|I1| < |I2| ⇒ ∃e ∈ I2 − I1 : I1 ∪ {e} ∈ fam`.
pub fn i3_at(fam: &SetFamily, i1: Subset, i2: Subset) -> bool {
    if !(fam.contains(i1) && fam.contains(i2)) || i1.len() >= i2.len() {
        return true;
    }
    i2.difference(i1).iter().any(|e| fam.contains(i1.with(e)))
}

/// CI2: `I ∈ fam ∧ I' ⊆ I ∧ I' definable ⇒ I' ∈ fam`.
pub fn ci2_at(space: &ApproximationSpace, fam: &SetFamily, i: Subset, i_sub: Subset) -> bool {
    !(fam.contains(i) && i_sub.is_subset(i) && space.is_definable(i_sub)) || fam.contains(i_sub)
}

/// CI3: `|I1| < |I2| ⇒ ∃I ∈ fam : I1 ⊂ I ⊆ I1 ∪ I2`.
pub fn ci3_at(fam: &SetFamily, i1: Subset, i2: Subset) -> bool {
    if !(fam.contains(i1) && fam.contains(i2)) || i1.len() >= i2.len() {
        return true;
    }
    let bound = i1.union(i2);
    fam.members()
        .iter()
        .any(|&i| i1.is_proper_subset(i) && i.is_subset(bound))
}

/// LI2/UI2: `I ∈ fam ∧ I' definable ∧ A(I') ⊆ A(I) ⇒ I' ∈ fam`.
pub fn approx2_at(
    space: &ApproximationSpace,
    op: Approximation,
    fam: &SetFamily,
    i: Subset,
    i_other: Subset,
) -> bool {
    let nm = space.neighborhoods();
    let applies = fam.contains(i)
        && space.is_definable(i_other)
        && op.apply(nm, i_other).is_subset(op.apply(nm, i));
    !applies || fam.contains(i_other)
}

/// LI3/UI3: `|A(I1)| < |A(I2)| ⇒ ∃I ∈ fam : A(I1) ⊂ A(I) ⊆ A(I1) ∪ A(I2)`.
pub fn approx3_at(
    space: &ApproximationSpace,
    op: Approximation,
    fam: &SetFamily,
    i1: Subset,
    i2: Subset,
) -> bool {
    let nm = space.neighborhoods();
    if !(fam.contains(i1) && fam.contains(i2)) {
        return true;
    }
    let (a1, a2) = (op.apply(nm, i1), op.apply(nm, i2));
    if a1.len() >= a2.len() {
        return true;
    }
    let bound = a1.union(a2);
    fam.members().iter().any(|&i| {
        let a = op.apply(nm, i);
        a1.is_proper_subset(a) && a.is_subset(bound)
    })
}

/// Re-evaluates `axiom` at the instance named by `witness`. Returns `None`
/// when the witness does not carry the roles the axiom needs.
pub fn holds_at(
    space: Option<&ApproximationSpace>,
    fam: &SetFamily,
    axiom: Axiom,
    witness: &Witness,
) -> Option<bool> {
    let pair = |a: &str, b: &str| Some((witness.get(a)?, witness.get(b)?));
    Some(match axiom {
        Axiom::I1 | Axiom::CI1 | Axiom::LI1 | Axiom::UI1 => fam.contains(Subset::EMPTY),
        Axiom::I2 => {
            let (i, s) = pair("I", "I'")?;
            i2_at(fam, i, s)
        }
        Axiom::I3 => {
            let (a, b) = pair("I1", "I2")?;
            i3_at(fam, a, b)
        }
        Axiom::CI2 => {
            let (i, s) = pair("I", "I'")?;
            ci2_at(space?, fam, i, s)
        }
        Axiom::CI3 => {
            let (a, b) = pair("I1", "I2")?;
            ci3_at(fam, a, b)
        }
        Axiom::CI3Prime => {
            let d = witness.get("D")?;
            let (a, b) = pair("I1", "I2")?;
            ci3_prime_at(fam, d, a, b)
        }
        Axiom::LI2 | Axiom::UI2 => {
            let op = if axiom == Axiom::LI2 { Approximation::Lower } else { Approximation::Upper };
            let (i, s) = pair("I", "I'")?;
            approx2_at(space?, op, fam, i, s)
        }
        Axiom::LI3 | Axiom::UI3 => {
            let op = if axiom == Axiom::LI3 { Approximation::Lower } else { Approximation::Upper };
            let (a, b) = pair("I1", "I2")?;
            approx3_at(space?, op, fam, a, b)
        }
    })
}

/// CI3′ at one definable set: two members maximal inside `d` must not differ
/// in size.
pub fn ci3_prime_at(fam: &SetFamily, d: Subset, i1: Subset, i2: Subset) -> bool {
    let maximal = |x: Subset| {
        fam.contains(x)
            && x.is_subset(d)
            && !fam.members().iter().any(|&y| y.is_subset(d) && x.is_proper_subset(y))
    };
    !(maximal(i1) && maximal(i2)) || i1.len() == i2.len()
}

// ---- search helpers ------------------------------------------------------

fn empty_set_witness(fam: &SetFamily) -> Option<Witness> {
    (!fam.contains(Subset::EMPTY)).then(|| Witness::new().with(fam.universe(), "missing", Subset::EMPTY))
}

/// First `(I, I')` in canonical order with `I' ∈ candidates(I)` and `!ok(I, I')`.
fn first_pair_violation<C, P>(fam: &SetFamily, candidates: C, ok: P) -> Option<Witness>
where
    C: Fn(Subset) -> Vec<Subset> + Sync + Send,
    P: Fn(Subset, Subset) -> bool + Sync + Send,
{
    let members = fam.members();
    par::find_first(0..members.len(), |k| {
        let i = members[k];
        let mut subs = candidates(i);
        subs.sort_by(Subset::canonical_cmp);
        subs.into_iter().find(|&s| !ok(i, s)).map(|s| (i, s))
    })
    .map(|(_, (i, s))| Witness::new().with(fam.universe(), "I", i).with(fam.universe(), "I'", s))
}

/// First `(I1, I2)` of members in canonical order with `!ok(I1, I2)`.
fn first_member_pair_violation<P>(fam: &SetFamily, ok: P) -> Option<Witness>
where
    P: Fn(Subset, Subset) -> bool + Sync + Send,
{
    let members = fam.members();
    let m = members.len();
    par::find_first(0..m * m, |k| {
        let (a, b) = (members[k / m], members[k % m]);
        (!ok(a, b)).then_some((a, b))
    })
    .map(|(_, (a, b))| Witness::new().with(fam.universe(), "I1", a).with(fam.universe(), "I2", b))
}

fn definability_violation(space: &ApproximationSpace, fam: &SetFamily) -> Option<Witness> {
    fam.members()
        .iter()
        .find(|&&m| !space.is_definable(m))
        .map(|&m| Witness::new().with(fam.universe(), "I", m))
}

// ---- checkers ------------------------------------------------------------

/// Classical matroid axioms I1–I3 over the family's universe.
pub fn check_matroid(fam: &SetFamily) -> CheckReport {
    let mut report = CheckReport::new("matroid");
    report.record(Axiom::I1.as_str(), empty_set_witness(fam));
    report.record(
        Axiom::I2.as_str(),
        first_pair_violation(fam, |i| i.subsets().collect(), |i, s| i2_at(fam, i, s)),
    );
    report.record(
        Axiom::I3.as_str(),
        first_member_pair_violation(fam, |a, b| i3_at(fam, a, b)),
    );
    report
}

fn require_family_universe(space: &ApproximationSpace, fam: &SetFamily) -> Result<()> {
    fam.require_universe(space.universe())
}

impl ApproximationSpace {
    /// CI1–CI3.
    pub fn check_rough_matroid(&self, fam: &SetFamily) -> Result<CheckReport> {
        require_family_universe(self, fam)?;
        let mut report = CheckReport::new("rough-cov");
        if let Some(w) = definability_violation(self, fam) {
            report.record(DEFINABILITY, Some(w));
            return Ok(report);
        }
        report.record(Axiom::CI1.as_str(), empty_set_witness(fam));
        report.record(
            Axiom::CI2.as_str(),
            first_pair_violation(
                fam,
                |i| i.subsets().filter(|&s| self.is_definable(s)).collect(),
                |i, s| ci2_at(self, fam, i, s),
            ),
        );
        report.record(
            Axiom::CI3.as_str(),
            first_member_pair_violation(fam, |a, b| ci3_at(fam, a, b)),
        );
        Ok(report)
    }

    /// LI1–LI3 or UI1–UI3, depending on `op`.
    pub fn check_approximation_matroid(
        &self,
        op: Approximation,
        fam: &SetFamily,
        check: &str,
    ) -> Result<CheckReport> {
        require_family_universe(self, fam)?;
        let [ax1, ax2, ax3] = op.axioms();
        let mut report = CheckReport::new(check);
        if let Some(w) = definability_violation(self, fam) {
            report.record(DEFINABILITY, Some(w));
            return Ok(report);
        }
        report.record(ax1.as_str(), empty_set_witness(fam));
        let definable = self.definable().members();
        report.record(
            ax2.as_str(),
            first_pair_violation(
                fam,
                |_| definable.to_vec(),
                |i, s| approx2_at(self, op, fam, i, s),
            ),
        );
        report.record(
            ax3.as_str(),
            first_member_pair_violation(fam, |a, b| approx3_at(self, op, fam, a, b)),
        );
        Ok(report)
    }

    pub fn check_lower_rough_matroid(&self, fam: &SetFamily, check: &str) -> Result<CheckReport> {
        self.check_approximation_matroid(Approximation::Lower, fam, check)
    }

    pub fn check_upper_rough_matroid(&self, fam: &SetFamily, check: &str) -> Result<CheckReport> {
        self.check_approximation_matroid(Approximation::Upper, fam, check)
    }

    /// Compares "fam is a matroid" with "N(x) = {x} on ⋃fam" for a family
    /// that is already a rough matroid.
    pub fn check_matroid_condition(&self, fam: &SetFamily) -> Result<CheckReport> {
        let rough = self.check_rough_matroid(fam)?;
        let mut report = CheckReport::new("matroid-cond");
        report.fact("rough-matroid", rough.pass);
        if !rough.pass {
            report.record("precondition:rough-matroid", rough.witness.clone());
            report.note(format!(
                "family is not a rough matroid ({} fails)",
                rough.failed_axiom.as_deref().unwrap_or("?")
            ));
            return Ok(report);
        }
        let matroid = check_matroid(fam);
        let nm = self.neighborhoods();
        let support = fam.support();
        let non_singleton = support.iter().find(|&x| nm.of(x) != Subset::singleton(x));
        report.fact("matroid", matroid.pass);
        report.fact("singleton-neighborhoods-on-support", non_singleton.is_none());
        let u = fam.universe();
        let witness = match (matroid.pass, non_singleton) {
            (true, Some(x)) => Some(
                Witness::new()
                    .with(u, "x", Subset::singleton(x))
                    .with(u, "N(x)", nm.of(x)),
            ),
            (false, None) => Some(matroid.witness.clone().unwrap_or_default()),
            _ => None,
        };
        report.record("equivalence", witness);
        Ok(report)
    }
}

pub fn check_rough_matroid_covering(c: &Covering, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_covering(c)?.check_rough_matroid(fam)
}

pub fn check_lower_rough_matroid_covering(c: &Covering, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_covering(c)?.check_lower_rough_matroid(fam, "lower-cov")
}

pub fn check_upper_rough_matroid_covering(c: &Covering, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_covering(c)?.check_upper_rough_matroid(fam, "upper-cov")
}

pub fn check_lower_rough_matroid_relation(r: &BinaryRelation, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_relation(r)?.check_lower_rough_matroid(fam, "lower-rel")
}

pub fn check_upper_rough_matroid_relation(r: &BinaryRelation, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_relation(r)?.check_upper_rough_matroid(fam, "upper-rel")
}

pub fn check_matroid_condition(c: &Covering, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_covering(c)?.check_matroid_condition(fam)
}
