//! The lattice `⟨fam, ⊆⟩` of a union/intersection-closed family: Hasse
//! diagram, lattice identities, atomicity and DOT export.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::definable::check_closure;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::par;
use crate::report::{CheckReport, Witness};
use crate::universe::{Subset, Universe};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDiagram {
    universe: Arc<Universe>,
    nodes: Vec<Subset>,
    /// Cover pairs `(lower, upper)` as node indices, sorted.
    edges: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

/// Hasse diagram of `⊆` over a closed family; join is union, meet is
/// intersection.
pub fn build_lattice(fam: &SetFamily) -> Result<LatticeDiagram> {
    if fam.is_empty() {
        return Err(Error::Precondition("a lattice needs at least one element".into()));
    }
    let closure = check_closure(fam);
    if !closure.pass {
        return Err(Error::NotALattice(Box::new(closure)));
    }
    let nodes = fam.members().to_vec();
    let meet_all = nodes.iter().fold(fam.universe().full(), |a, &b| a.intersection(b));
    let join_all = nodes.iter().fold(Subset::EMPTY, |a, &b| a.union(b));
    let bottom = fam.position(meet_all).expect("closed family holds its meet");
    let top = fam.position(join_all).expect("closed family holds its join");

    // Canonical order sorts by cardinality, so every strict subset of
    // nodes[j] has a smaller index.
    let covers: Vec<Vec<(usize, usize)>> = par::map_range(0..nodes.len(), |j| {
        let upper = nodes[j];
        let below: Vec<usize> = (0..j).filter(|&i| nodes[i].is_proper_subset(upper)).collect();
        below
            .iter()
            .filter(|&&i| !below.iter().any(|&k| k != i && nodes[i].is_proper_subset(nodes[k])))
            .map(|&i| (i, j))
            .collect()
    });
    let mut edges: Vec<(usize, usize)> = covers.into_iter().flatten().collect();
    edges.sort_unstable();

    Ok(LatticeDiagram {
        universe: fam.universe().clone(),
        nodes,
        edges,
        bottom,
        top,
    })
}

impl LatticeDiagram {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn nodes(&self) -> &[Subset] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bottom(&self) -> Subset {
        self.nodes[self.bottom]
    }

    pub fn top(&self) -> Subset {
        self.nodes[self.top]
    }

    fn family(&self) -> SetFamily {
        SetFamily::from_canonical(self.universe.clone(), self.nodes.clone())
    }

    /// Atoms: the elements covering the bottom.
    pub fn atoms(&self) -> Vec<Subset> {
        self.edges
            .iter()
            .filter(|&&(lo, _)| lo == self.bottom)
            .map(|&(_, hi)| self.nodes[hi])
            .collect()
    }

    pub fn to_dot(&self) -> String {
        export_dot(self)
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            nodes: self.nodes.iter().map(|&s| self.universe.member_labels(s)).collect(),
            edges: self.edges.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeJson {
    pub nodes: Vec<Vec<String>>,
    pub edges: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

/// Identities P1–P4 for `∨ = ∪`, `∧ = ∩` over every triple of nodes, plus
/// closure of both operations inside the node set.
pub fn check_lattice_laws(ld: &LatticeDiagram) -> CheckReport {
    let fam = ld.family();
    let nodes = ld.nodes();
    let u = ld.universe();
    let m = nodes.len();
    let mut report = CheckReport::new("lattice-laws");

    let join = |a: Subset, b: Subset| a.union(b);
    let meet = |a: Subset, b: Subset| a.intersection(b);

    let law_p1 = (0..m).find(|&i| join(nodes[i], nodes[i]) != nodes[i] || meet(nodes[i], nodes[i]) != nodes[i]);
    report.record(
        "P1-idempotence",
        law_p1.map(|i| Witness::new().with(u, "a", nodes[i])),
    );

    let pair = |pred: &(dyn Fn(Subset, Subset) -> bool + Sync)| {
        par::find_first(0..m * m, |k| {
            let (a, b) = (nodes[k / m], nodes[k % m]);
            (!pred(a, b)).then(|| Witness::new().with(u, "a", a).with(u, "b", b))
        })
        .map(|(_, w)| w)
    };
    report.record(
        "closure",
        pair(&|a, b| fam.contains(join(a, b)) && fam.contains(meet(a, b))),
    );
    report.record(
        "P2-commutativity",
        pair(&|a, b| join(a, b) == join(b, a) && meet(a, b) == meet(b, a)),
    );
    let p3 = par::find_first(0..m * m * m, |k| {
        let (a, b, c) = (nodes[k / (m * m)], nodes[k / m % m], nodes[k % m]);
        let ok = join(join(a, b), c) == join(a, join(b, c)) && meet(meet(a, b), c) == meet(a, meet(b, c));
        (!ok).then(|| Witness::new().with(u, "a", a).with(u, "b", b).with(u, "c", c))
    });
    report.record("P3-associativity", p3.map(|(_, w)| w));
    report.record(
        "P4-absorption",
        pair(&|a, b| join(a, meet(a, b)) == a && meet(a, join(a, b)) == a),
    );
    report
}

/// Distributivity of `∩` over `∪` on every triple.
pub fn check_distributivity(ld: &LatticeDiagram) -> CheckReport {
    let nodes = ld.nodes();
    let u = ld.universe();
    let m = nodes.len();
    let mut report = CheckReport::new("distributivity");
    let hit = par::find_first(0..m * m * m, |k| {
        let (a, b, c) = (nodes[k / (m * m)], nodes[k / m % m], nodes[k % m]);
        let ok = a.intersection(b.union(c)) == a.intersection(b).union(a.intersection(c))
            && a.union(b.intersection(c)) == a.union(b).intersection(a.union(c));
        (!ok).then(|| Witness::new().with(u, "a", a).with(u, "b", b).with(u, "c", c))
    });
    report.record("distributive", hit.map(|(_, w)| w));
    report
}

/// Whether every node is the join of the atoms below it. Informational: the
/// report carries the atom list and, on failure, the first offending node.
pub fn check_atomicity(ld: &LatticeDiagram) -> CheckReport {
    let u = ld.universe();
    let atoms = ld.atoms();
    let bottom = ld.bottom();
    let mut report = CheckReport::new("atomicity");
    let offender = ld.nodes().iter().copied().find(|&x| {
        let join = atoms
            .iter()
            .filter(|a| a.is_subset(x))
            .fold(bottom, |acc, &a| acc.union(a));
        join != x
    });
    report.record("atomic", offender.map(|x| Witness::new().with(u, "element", x)));
    report.fact(
        "atoms",
        atoms.iter().map(|&a| u.member_labels(a)).collect::<Vec<_>>(),
    );
    report.note("informational: atomicity uses the standard definition (every element is a join of atoms)");
    report
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT digraph; edges point from the smaller set to its cover.
pub fn export_dot(ld: &LatticeDiagram) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, &set) in ld.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", dot_escape(&ld.universe.format_set(set)));
    }
    for &(lo, hi) in &ld.edges {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
