//! Small reference structures used throughout the tests, benches and docs.

use std::sync::Arc;

use crate::family::SetFamily;
use crate::structure::{BinaryRelation, Covering};
use crate::universe::Universe;

fn universe(labels: &[&str]) -> Arc<Universe> {
    Arc::new(Universe::new(labels.iter().copied()).expect("valid fixture universe"))
}

fn covering(labels: &[&str], blocks: &[&str]) -> Covering {
    let u = universe(labels);
    Covering::from_labels(u, blocks.iter().map(|b| b.split(',').collect::<Vec<_>>()))
        .expect("valid fixture covering")
}

/// `{{e,f},{a,d,e},{a,d,f},{b,c,e},{b,c,f},{a,b,c,d}}` on `{a..f}`.
pub fn six_block_covering() -> Covering {
    covering(
        &["a", "b", "c", "d", "e", "f"],
        &["e,f", "a,d,e", "a,d,f", "b,c,e", "b,c,f", "a,b,c,d"],
    )
}

/// `{{a,b},{b,c}}` on `{a,b,c}`.
pub fn two_block_covering() -> Covering {
    covering(&["a", "b", "c"], &["a,b", "b,c"])
}

/// `{{a,b},{a,c},{a,b,c},{c,d}}` on `{a,b,c,d}`.
pub fn four_block_covering() -> Covering {
    covering(&["a", "b", "c", "d"], &["a,b", "a,c", "a,b,c", "c,d"])
}

/// `{{a,b,c},{a,b,d},{a,c,d},{b,c},{d}}` on `{a,b,c,d}`; every neighborhood
/// is a singleton.
pub fn singleton_neighborhood_covering() -> Covering {
    covering(&["a", "b", "c", "d"], &["a,b,c", "a,b,d", "a,c,d", "b,c", "d"])
}

/// `{(a1,a1),(a2,a1),(a2,a2),(a3,a1),(a3,a3)}` on `{a1..a4}`.
pub fn relation_r1() -> BinaryRelation {
    BinaryRelation::from_labels(
        universe(&["a1", "a2", "a3", "a4"]),
        [("a1", "a1"), ("a2", "a1"), ("a2", "a2"), ("a3", "a1"), ("a3", "a3")],
    )
    .expect("valid fixture relation")
}

/// [`relation_r1`] plus `(a4,a4)`.
pub fn relation_r2() -> BinaryRelation {
    BinaryRelation::from_labels(
        universe(&["a1", "a2", "a3", "a4"]),
        [
            ("a1", "a1"),
            ("a2", "a1"),
            ("a2", "a2"),
            ("a3", "a1"),
            ("a3", "a3"),
            ("a4", "a4"),
        ],
    )
    .expect("valid fixture relation")
}

/// Independent sets of the cycle matroid with edges `a1..a4`, where
/// `{a1,a2,a3}` is the only cycle.
pub fn cycle_matroid_family() -> SetFamily {
    SetFamily::parse(
        universe(&["a1", "a2", "a3", "a4"]),
        "{} {a1} {a2} {a3} {a4} {a1,a2} {a1,a3} {a1,a4} {a2,a3} {a2,a4} {a3,a4} \
         {a1,a2,a4} {a1,a3,a4} {a2,a3,a4}",
    )
    .expect("valid fixture family")
}

/// `{{b,c},{a,c}}` on `{a,b,c}` with the rough matroid `{∅,{c},{a,c}}`.
pub fn direct_sum_left() -> (Covering, SetFamily) {
    let c = covering(&["a", "b", "c"], &["b,c", "a,c"]);
    let f = SetFamily::parse(c.universe().clone(), "{} {c} {a,c}").expect("valid fixture family");
    (c, f)
}

/// `{{d,e,f},{d,e,g},{d,f,g},{e,f},{g}}` on `{d,e,f,g}` with the rough matroid
/// `{∅,{d},{e},{f},{d,e},{e,f}}`.
pub fn direct_sum_right() -> (Covering, SetFamily) {
    let c = covering(&["d", "e", "f", "g"], &["d,e,f", "d,e,g", "d,f,g", "e,f", "g"]);
    let f = SetFamily::parse(c.universe().clone(), "{} {d} {e} {f} {d,e} {e,f}")
        .expect("valid fixture family");
    (c, f)
}
