//! Uniform rough matroids, the one-point-extension test, disjoint sums and
//! the CI3′ axiomatization.

use std::sync::Arc;

use serde::Serialize;

use crate::axioms::{check_matroid, ci3_prime_at, Axiom, DEFINABILITY};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::neighborhood::neighborhoods_of_covering;
use crate::par;
use crate::report::{CheckReport, Witness};
use crate::space::ApproximationSpace;
use crate::structure::Covering;
use crate::universe::Subset;

/// Admissible range of the cardinality bound in [`uniform_family`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum UniformRange {
    /// `0 < r < n`.
    Strict,
    /// `1 <= r <= n`.
    #[default]
    Inclusive,
}

/// `{I ∈ D(U, C) : |I| <= r}`.
pub fn uniform_family(c: &Covering, r: usize, range: UniformRange) -> Result<SetFamily> {
    let n = c.universe().len();
    let ok = match range {
        UniformRange::Strict => 0 < r && r < n,
        UniformRange::Inclusive => 1 <= r && r <= n,
    };
    if !ok {
        return Err(Error::Precondition(format!(
            "rank bound r={r} out of range for n={n} ({range:?})"
        )));
    }
    let space = ApproximationSpace::from_covering(c)?;
    Ok(space.definable().filter(|x| x.len() <= r))
}

/// Evaluates, for the uniform family of rank `r`:
/// (a) all neighborhoods are singletons, (b) the family is a rough matroid,
/// (c) the family is a matroid; and checks `(a) ⇒ (b)` and `(c) ⇔ (a)`.
pub fn check_uniform_proposition(c: &Covering, r: usize) -> Result<CheckReport> {
    let space = ApproximationSpace::from_covering(c)?;
    let fam = uniform_family(c, r, UniformRange::Inclusive)?;
    Ok(uniform_report(&space, &fam, r))
}

pub(crate) fn uniform_report(space: &ApproximationSpace, fam: &SetFamily, r: usize) -> CheckReport {
    let u = space.universe();
    let nm = space.neighborhoods();
    let singletons = nm.all_singletons();
    let rough = space
        .check_rough_matroid(fam)
        .expect("uniform family shares the covering universe");
    let matroid = check_matroid(fam);
    let support = fam.support();
    let support_singletons = support.iter().all(|x| nm.of(x) == Subset::singleton(x));

    let mut report = CheckReport::new("uniform");
    report.fact("r", r);
    report.fact("family-size", fam.len());
    report.fact("singleton-neighborhoods", singletons);
    report.fact("rough-matroid", rough.pass);
    report.fact("matroid", matroid.pass);
    report.fact("singleton-neighborhoods-on-support", support_singletons);

    let first_non_singleton = (0..u.len()).find(|&x| nm.of(x) != Subset::singleton(x));
    report.record(
        "sufficiency",
        (singletons && !rough.pass).then(|| rough.witness.clone().unwrap_or_default()),
    );
    let equivalence = match (matroid.pass, singletons) {
        (true, false) => {
            let x = first_non_singleton.expect("some neighborhood is not a singleton");
            Some(
                Witness::new()
                    .with(u, "x", Subset::singleton(x))
                    .with(u, "N(x)", nm.of(x)),
            )
        }
        (false, true) => Some(matroid.witness.clone().unwrap_or_default()),
        _ => None,
    };
    report.record("matroid-iff-singleton-neighborhoods", equivalence);
    if rough.pass && !singletons {
        report.note("rough matroid without singleton neighborhoods: the condition is sufficient, not necessary");
    }
    if matroid.pass && !singletons {
        report.note(
            "matroid although some neighborhoods are not singletons: those elements are loops \
             (in no member), and the equivalence only holds on the support",
        );
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionCheck {
    /// `D1 ∪ {d} ∉ D(U, C)`, decided directly.
    pub blocked: bool,
    /// `∃e ∈ D2 − D1 : e ≠ d ∧ e ∈ N(d)`.
    pub neighbor_criterion: bool,
}

impl ExtensionCheck {
    pub fn agrees(&self) -> bool {
        self.blocked == self.neighbor_criterion
    }
}

/// Evaluates both sides of the one-point-extension biconditional without
/// checking `|D1| < |D2|`; the other preconditions still apply.
pub fn one_point_extension(
    space: &ApproximationSpace,
    d1: Subset,
    d2: Subset,
    d: usize,
) -> Result<ExtensionCheck> {
    let u = space.universe();
    for set in [d1, d2] {
        u.check_within(set)?;
        if !space.is_definable(set) {
            return Err(Error::Precondition(format!("{} is not definable", u.format_set(set))));
        }
    }
    if d >= u.len() || !d2.difference(d1).contains(d) {
        return Err(Error::Precondition("d must lie in D2 - D1".into()));
    }
    let blocked = !space.is_definable(d1.with(d));
    let nd = space.neighborhoods().of(d);
    let neighbor_criterion = d2.difference(d1).without(d).intersects(nd);
    Ok(ExtensionCheck {
        blocked,
        neighbor_criterion,
    })
}

/// `D1 ∪ {d} ∉ D(U, C)` for definable `D1`, `D2` with `|D1| < |D2|` and
/// `d ∈ D2 − D1`. Errors with [`Error::LawViolated`] if the neighbor
/// criterion disagrees.
pub fn one_point_extension_blocked(c: &Covering, d1: Subset, d2: Subset, d: usize) -> Result<bool> {
    let space = ApproximationSpace::from_covering(c)?;
    if d1.len() >= d2.len() {
        return Err(Error::Precondition("requires |D1| < |D2|".into()));
    }
    let check = one_point_extension(&space, d1, d2, d)?;
    if !check.agrees() {
        let u = space.universe();
        return Err(Error::LawViolated(format!(
            "one-point extension: D1={}, D2={}, d={}",
            u.format_set(d1),
            u.format_set(d2),
            u.label(d)
        )));
    }
    Ok(check.blocked)
}

fn lift(fam: &SetFamily, offset: usize) -> Vec<Subset> {
    fam.members().iter().map(|m| m.shifted(offset)).collect()
}

/// `A1 ⊎ A2 = {X1 ∪ X2 : X1 ∈ A1, X2 ∈ A2}` on the concatenated universe.
pub fn family_disjoint_sum(f1: &SetFamily, f2: &SetFamily) -> Result<SetFamily> {
    let universe = Arc::new(f1.universe().disjoint_union(f2.universe())?);
    let offset = f1.universe().len();
    let right = lift(f2, offset);
    let members = f1
        .members()
        .iter()
        .flat_map(|&a| right.iter().map(move |&b| a.union(b)))
        .collect();
    SetFamily::new(universe, members)
}

/// Block-list union of two coverings on the concatenated universe.
pub fn covering_disjoint_sum(c1: &Covering, c2: &Covering) -> Result<Covering> {
    let universe = Arc::new(c1.universe().disjoint_union(c2.universe())?);
    let offset = c1.universe().len();
    let blocks = c1
        .blocks()
        .iter()
        .copied()
        .chain(c2.blocks().iter().map(|b| b.shifted(offset)))
        .collect();
    Covering::new(universe, blocks)
}

/// Two rough matroids over label-disjoint universes.
#[derive(Clone, Debug)]
pub struct DirectSumInput {
    first: (Covering, SetFamily),
    second: (Covering, SetFamily),
}

impl DirectSumInput {
    pub fn new(first: (Covering, SetFamily), second: (Covering, SetFamily)) -> Result<Self> {
        first.0.universe().disjoint_union(second.0.universe())?;
        for (side, (c, f)) in [("first", &first), ("second", &second)] {
            let report = ApproximationSpace::from_covering(c)?.check_rough_matroid(f)?;
            if !report.pass {
                return Err(Error::Precondition(format!(
                    "{side} summand is not a rough matroid ({} fails)",
                    report.failed_axiom.unwrap_or_default()
                )));
            }
        }
        Ok(DirectSumInput { first, second })
    }

    pub fn first(&self) -> &(Covering, SetFamily) {
        &self.first
    }

    pub fn second(&self) -> &(Covering, SetFamily) {
        &self.second
    }
}

/// Summed covering, summed family and the rough-matroid verdict on the sum.
pub fn direct_sum(inp: &DirectSumInput) -> Result<(Covering, SetFamily, CheckReport)> {
    let covering = covering_disjoint_sum(&inp.first.0, &inp.second.0)?;
    let family = family_disjoint_sum(&inp.first.1, &inp.second.1)?;
    let report = ApproximationSpace::from_covering(&covering)?.check_rough_matroid(&family)?;
    Ok((covering, family, report))
}

/// CI1, CI2 and CI3′: inside every definable `D`, the maximal members of
/// `fam` contained in `D` share one cardinality.
pub fn check_ci3_prime(c: &Covering, fam: &SetFamily) -> Result<CheckReport> {
    ApproximationSpace::from_covering(c)?.check_ci3_prime(fam)
}

impl ApproximationSpace {
    pub fn check_ci3_prime(&self, fam: &SetFamily) -> Result<CheckReport> {
        let rough = self.check_rough_matroid(fam)?;
        let mut report = CheckReport::new("ci3prime");
        if rough.failed(DEFINABILITY) {
            report.record(DEFINABILITY, rough.witness.clone());
            return Ok(report);
        }
        for axiom in [Axiom::CI1, Axiom::CI2] {
            let outcome = rough.outcome(axiom.as_str()).expect("evaluated");
            report.record(axiom.as_str(), outcome.witness.clone());
        }
        report.record(Axiom::CI3Prime.as_str(), ci3_prime_violation(self, fam));
        Ok(report)
    }
}

fn ci3_prime_violation(space: &ApproximationSpace, fam: &SetFamily) -> Option<Witness> {
    let u = space.universe();
    let definable = space.definable().members();
    par::find_first(0..definable.len(), |k| {
        let d = definable[k];
        let inside: Vec<Subset> = fam.members().iter().copied().filter(|m| m.is_subset(d)).collect();
        let maximal: Vec<Subset> = inside
            .iter()
            .copied()
            .filter(|&x| !inside.iter().any(|&y| x.is_proper_subset(y)))
            .collect();
        let smallest = *maximal.first()?;
        let larger = maximal.iter().copied().find(|m| m.len() != smallest.len())?;
        debug_assert!(!ci3_prime_at(fam, d, smallest, larger));
        Some(
            Witness::new()
                .with(u, "D", d)
                .with(u, "I1", smallest)
                .with(u, "I2", larger),
        )
    })
    .map(|(_, w)| w)
}

/// Neighborhoods in `c1 ⊎ c2` restrict to those of each summand.
pub fn sum_preserves_neighborhoods(c1: &Covering, c2: &Covering) -> Result<bool> {
    let sum = neighborhoods_of_covering(&covering_disjoint_sum(c1, c2)?);
    let left = neighborhoods_of_covering(c1);
    let right = neighborhoods_of_covering(c2);
    let offset = c1.universe().len();
    Ok((0..left.len()).all(|x| sum.of(x) == left.of(x))
        && (0..right.len()).all(|y| sum.of(offset + y) == right.of(y).shifted(offset)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::universe::Universe;

    fn fam(u: &Arc<Universe>, text: &str) -> SetFamily {
        SetFamily::parse(u.clone(), text).unwrap()
    }

    #[test]
    fn uniform_families() {
        let c = fixtures::four_block_covering();
        let u = c.universe().clone();
        assert_eq!(uniform_family(&c, 1, UniformRange::Strict).unwrap(), fam(&u, "{} {a} {c}"));
        let d = ApproximationSpace::from_covering(&c).unwrap().definable().clone();
        assert_eq!(uniform_family(&c, 4, UniformRange::Inclusive).unwrap(), d);
        assert!(uniform_family(&c, 4, UniformRange::Strict).is_err());
        assert!(uniform_family(&c, 0, UniformRange::Inclusive).is_err());
        assert!(uniform_family(&c, 5, UniformRange::Inclusive).is_err());

        let c = fixtures::two_block_covering();
        let u = c.universe().clone();
        assert_eq!(uniform_family(&c, 1, UniformRange::Strict).unwrap(), fam(&u, "{} {b}"));
    }

    #[test]
    fn uniform_proposition_on_four_block_covering() {
        let r = check_uniform_proposition(&fixtures::four_block_covering(), 1).unwrap();
        assert_eq!(r.facts["singleton-neighborhoods"], false);
        assert_eq!(r.facts["rough-matroid"], true);
        assert_eq!(r.facts["matroid"], true);
        assert_eq!(r.facts["singleton-neighborhoods-on-support"], true);
        assert!(r.outcome("sufficiency").unwrap().holds);
        // {∅,{a},{c}} is a matroid with loops b and d, so the unrestricted
        // equivalence fails here.
        assert_eq!(r.failed_axioms(), ["matroid-iff-singleton-neighborhoods"]);
        let w = r.witness.unwrap();
        assert_eq!(w.get("x"), Some(Subset::singleton(1)));
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn uniform_proposition_on_singletons() {
        let u = Arc::new(Universe::alphabetic(4).unwrap());
        let c = Covering::singletons(u);
        for r in 1..=4 {
            let report = check_uniform_proposition(&c, r).unwrap();
            assert!(report.pass, "{}", report.to_text());
            assert_eq!(report.facts["rough-matroid"], true);
            assert_eq!(report.facts["matroid"], true);
        }
    }

    #[test]
    fn one_point_extension_examples() {
        let c = fixtures::six_block_covering();
        let u = c.universe().clone();
        let s = |t: &str| u.parse_set(t).unwrap();
        let a = u.index_of("a").unwrap();
        let f = u.index_of("f").unwrap();
        assert!(one_point_extension_blocked(&c, s("{e}"), s("{a,d,f}"), a).unwrap());
        assert!(!one_point_extension_blocked(&c, s("{a,d}"), s("{a,d,f}"), f).unwrap());

        let sc = fixtures::singleton_neighborhood_covering();
        let v = sc.universe().clone();
        let b = v.index_of("b").unwrap();
        assert!(!one_point_extension_blocked(&sc, v.parse_set("{a}").unwrap(), v.parse_set("{a,b,c}").unwrap(), b).unwrap());
    }

    #[test]
    fn one_point_extension_preconditions() {
        let c = fixtures::six_block_covering();
        let u = c.universe().clone();
        let s = |t: &str| u.parse_set(t).unwrap();
        let a = u.index_of("a").unwrap();
        let e = u.index_of("e").unwrap();
        // not definable
        assert!(matches!(
            one_point_extension_blocked(&c, s("{b}"), s("{a,d,f}"), a),
            Err(Error::Precondition(_))
        ));
        // |D1| >= |D2|
        assert!(one_point_extension_blocked(&c, s("{a,d}"), s("{e}"), e).is_err());
        // d outside D2 - D1
        assert!(one_point_extension_blocked(&c, s("{e}"), s("{a,d,f}"), e).is_err());
    }

    #[test]
    fn paper_direct_sum() {
        let inp = DirectSumInput::new(fixtures::direct_sum_left(), fixtures::direct_sum_right()).unwrap();
        let (cov, sum, report) = direct_sum(&inp).unwrap();
        assert_eq!(cov.blocks().len(), 7);
        assert_eq!(cov.universe().len(), 7);
        assert_eq!(sum.len(), 18);
        assert_eq!(
            sum.format(),
            "{{}, {c}, {d}, {e}, {f}, {a,c}, {c,d}, {c,e}, {c,f}, {d,e}, {e,f}, \
             {a,c,d}, {a,c,e}, {a,c,f}, {c,d,e}, {c,e,f}, {a,c,d,e}, {a,c,e,f}}"
        );
        assert!(report.pass, "{}", report.to_text());
    }

    #[test]
    fn disjoint_sum_edge_cases() {
        let (c1, f1) = fixtures::direct_sum_left();
        let (c2, f2) = fixtures::direct_sum_right();
        let unit = fam(c1.universe(), "{}");
        let lifted = family_disjoint_sum(&unit, &f2).unwrap();
        assert_eq!(lifted.len(), f2.len());
        assert_eq!(lifted.members(), f2.members().iter().map(|m| m.shifted(3)).collect::<Vec<_>>());
        assert!(matches!(family_disjoint_sum(&f1, &f1), Err(Error::NotDisjoint(_))));
        assert!(matches!(covering_disjoint_sum(&c2, &c2), Err(Error::NotDisjoint(_))));
        assert!(sum_preserves_neighborhoods(&c1, &c2).unwrap());

        let s1 = Covering::singletons(Arc::new(Universe::new(["p", "q"]).unwrap()));
        let s2 = Covering::singletons(Arc::new(Universe::new(["r"]).unwrap()));
        let sum = covering_disjoint_sum(&s1, &s2).unwrap();
        assert!(sum.is_partition());
        assert_eq!(sum.blocks().len(), 3);
    }

    #[test]
    fn direct_sum_rejects_non_rough_summands() {
        let (c1, _) = fixtures::direct_sum_left();
        let bad = fam(c1.universe(), "{a}");
        assert!(matches!(
            DirectSumInput::new((c1, bad), fixtures::direct_sum_right()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ci3_prime_examples() {
        let c = fixtures::four_block_covering();
        let u = c.universe().clone();
        let space = ApproximationSpace::from_covering(&c).unwrap();
        let good = fam(&u, "{} {a} {c}");
        assert!(space.check_ci3_prime(&good).unwrap().pass);
        assert!(space.check_rough_matroid(&good).unwrap().pass);

        let bad = fam(&u, "{} {a,b} {a,c} {a,c,d}");
        let r = space.check_ci3_prime(&bad).unwrap();
        assert!(r.failed("CI3'"));
        let w = r.outcome("CI3'").unwrap().witness.clone().unwrap();
        assert_eq!(w.get("D"), Some(u.parse_set("{a,b,c,d}").unwrap()));
        assert_eq!(w.get("I1"), Some(u.parse_set("{a,b}").unwrap()));
        assert_eq!(w.get("I2"), Some(u.parse_set("{a,c,d}").unwrap()));

        assert!(space.check_ci3_prime(space.definable()).unwrap().pass);
    }
}

#[cfg(test)]
mod props {
    use std::collections::BTreeSet;

    use proptest::prelude::*;

    use super::*;
    use crate::oracle::strategies::covering;
    use crate::oracle::{enumerate_rough_matroids, EnumerationBudget};
    use crate::universe::Universe;

    fn relabel(c: &Covering, suffix: &str) -> Covering {
        let u = Universe::new(c.universe().labels().iter().map(|l| format!("{l}{suffix}"))).unwrap();
        Covering::new(Arc::new(u), c.blocks().to_vec()).unwrap()
    }

    fn as_labels(f: &SetFamily) -> BTreeSet<BTreeSet<String>> {
        f.to_labels().into_iter().map(|m| m.into_iter().collect()).collect()
    }

    fn definable(c: &Covering) -> SetFamily {
        ApproximationSpace::from_covering(c).unwrap().definable().clone()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn disjoint_sum_is_commutative_and_associative(a in covering(3), b in covering(3), c in covering(3)) {
            let (fa, fb, fc) = (definable(&a), definable(&relabel(&b, "'")), definable(&relabel(&c, "\"")));
            let ab = family_disjoint_sum(&fa, &fb).unwrap();
            let ba = family_disjoint_sum(&fb, &fa).unwrap();
            prop_assert_eq!(as_labels(&ab), as_labels(&ba));
            let left = family_disjoint_sum(&ab, &fc).unwrap();
            let right = family_disjoint_sum(&fa, &family_disjoint_sum(&fb, &fc).unwrap()).unwrap();
            prop_assert_eq!(as_labels(&left), as_labels(&right));
        }

        #[test]
        fn covering_sum_is_local(a in covering(6), b in covering(6)) {
            let b = relabel(&b, "'");
            prop_assert!(sum_preserves_neighborhoods(&a, &b).unwrap());
            let sum = covering_disjoint_sum(&a, &b).unwrap();
            prop_assert_eq!(definable(&sum), family_disjoint_sum(&definable(&a), &definable(&b)).unwrap());
        }

        #[test]
        fn direct_sums_of_rough_matroids(a in covering(4), b in covering(4), i in any::<usize>(), j in any::<usize>()) {
            let b = relabel(&b, "'");
            let budget = EnumerationBudget::default();
            let (fa, fb) = (enumerate_rough_matroids(&a, &budget), enumerate_rough_matroids(&b, &budget));
            prop_assume!(fa.is_ok() && fb.is_ok());
            let (fa, fb) = (fa.unwrap(), fb.unwrap());
            let inp = DirectSumInput::new((a, fa[i % fa.len()].clone()), (b, fb[j % fb.len()].clone())).unwrap();
            let (_, _, report) = direct_sum(&inp).unwrap();
            prop_assert!(report.pass, "{}", report.to_text());
        }

        #[test]
        fn uniform_on_singletons_is_a_matroid(n in 1usize..=6, r in 1usize..=6) {
            prop_assume!(r <= n);
            let c = Covering::singletons(Arc::new(Universe::alphabetic(n).unwrap()));
            let report = check_uniform_proposition(&c, r).unwrap();
            prop_assert!(report.pass);
            prop_assert_eq!(&report.facts["matroid"], &serde_json::Value::Bool(true));
        }

        #[test]
        fn uniform_sufficiency_on_random_coverings(c in covering(6), r in 1usize..=6) {
            prop_assume!(r <= c.universe().len());
            let report = check_uniform_proposition(&c, r).unwrap();
            prop_assert!(!report.failed("sufficiency"));
        }
    }
}
