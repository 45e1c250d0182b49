//! Exhaustive comparisons of the library against brute-force definitions.

mod common;

use common::{from_bits, group, to_bits, Oracle, Set};
use semiaffine::search::{count_classes, presentations_up_to};
use semiaffine::structure::{all_subgroups, is_subgroup, Subgroup};
use semiaffine::{half_set, GroupSpec, DEFAULT_CAP};

fn small_groups(max_order: u64) -> Vec<GroupSpec> {
    presentations_up_to(max_order)
}

#[test]
fn predicates_agree_with_definitions() {
    for g in small_groups(9) {
        let oracle = Oracle::of(&g);
        let whole = Subgroup::whole(&g);
        for x in oracle.subsets() {
            let bits = to_bits(&g, &x);
            assert_eq!(bits.is_affine(), oracle.is_affine(&x), "affine {g} {bits}");
            assert_eq!(
                bits.is_semiaffine(),
                oracle.is_semiaffine(&x),
                "semiaffine {g} {bits}"
            );
            assert_eq!(
                bits.is_midconvex(&whole).unwrap(),
                oracle.is_midconvex(&x),
                "midconvex {g} {bits}"
            );
        }
    }
}

#[test]
fn difference_sets_agree() {
    for g in small_groups(10) {
        let oracle = Oracle::of(&g);
        for x in oracle.subsets() {
            let bits = to_bits(&g, &x);
            assert_eq!(from_bits(&bits.difference_set()), oracle.difference_set(&x));
            assert_eq!(is_subgroup(&bits), oracle.is_subgroup(&x), "{g} {bits}");
        }
    }
}

#[test]
fn subgroup_lists_agree() {
    for g in small_groups(12) {
        let oracle = Oracle::of(&g);
        let mut expected = oracle.subgroups();
        expected.sort();
        let mut found: Vec<Set> = all_subgroups(&g, DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(|h| from_bits(h.bits()))
            .collect();
        found.sort();
        assert_eq!(found, expected, "{g}");
    }
}

#[test]
fn midconvexity_inside_proper_subgroups_agrees() {
    for g in small_groups(8) {
        let oracle = Oracle::of(&g);
        for h in all_subgroups(&g, DEFAULT_CAP).unwrap() {
            let hs = from_bits(h.bits());
            for x in oracle.subsets().filter(|x| x.is_subset(&hs)) {
                let bits = to_bits(&g, &x);
                assert_eq!(
                    bits.is_midconvex(&h).unwrap(),
                    oracle.is_midconvex_in(&x, &hs),
                    "{g} H={} X={bits}",
                    h.bits()
                );
            }
        }
    }
}

#[test]
fn half_sets_agree() {
    for g in small_groups(12) {
        let oracle = Oracle::of(&g);
        for s in g.elements() {
            let hs = half_set(&g, &s).unwrap();
            assert_eq!(from_bits(&hs), oracle.half_set(s.coords()), "{g} s={s}");
        }
    }
}

#[test]
fn class_counts_match_reference_table() {
    // (group, total, affine, semiaffine, midconvex), computed by brute force.
    let table = [
        ("Z1", 2, 2, 2, 2),
        ("Z2", 4, 4, 4, 2),
        ("Z3", 8, 5, 8, 5),
        ("Z4", 16, 8, 12, 2),
        ("Z5", 32, 7, 22, 7),
        ("Z6", 64, 13, 28, 5),
        ("Z7", 128, 9, 37, 9),
        ("Z8", 256, 16, 44, 2),
        ("Z2xZ2", 16, 12, 12, 2),
        ("Z4xZ2", 256, 28, 52, 2),
        ("Z2xZ2xZ2", 256, 52, 52, 2),
        ("Z3xZ3", 512, 23, 80, 23),
        ("Z9", 512, 14, 62, 14),
    ];
    for (name, total, affine, semiaffine, midconvex) in table {
        let c = count_classes(&group(name), DEFAULT_CAP).unwrap();
        assert_eq!(
            (c.total, c.affine, c.semiaffine, c.midconvex),
            (total, affine, semiaffine, midconvex),
            "{name}"
        );
    }
}

#[test]
fn counts_agree_with_oracle_up_to_order_eight() {
    for g in small_groups(8) {
        let oracle = Oracle::of(&g);
        let (mut a, mut s, mut m) = (0, 0, 0);
        for x in oracle.subsets() {
            a += oracle.is_affine(&x) as u64;
            s += oracle.is_semiaffine(&x) as u64;
            m += oracle.is_midconvex(&x) as u64;
        }
        let c = count_classes(&g, DEFAULT_CAP).unwrap();
        assert_eq!((c.affine, c.semiaffine, c.midconvex), (a, s, m), "{g}");
    }
}

#[test]
fn isomorphic_presentations_have_equal_counts() {
    let pairs = [
        ("Z6", "Z2xZ3"),
        ("Z6", "Z3xZ2"),
        ("Z10", "Z5xZ2"),
        ("Z12", "Z4xZ3"),
        ("Z6xZ2", "Z2xZ2xZ3"),
    ];
    for (a, b) in pairs {
        let ca = count_classes(&group(a), DEFAULT_CAP).unwrap();
        let cb = count_classes(&group(b), DEFAULT_CAP).unwrap();
        assert_eq!(ca, cb, "{a} vs {b}");
    }
}
