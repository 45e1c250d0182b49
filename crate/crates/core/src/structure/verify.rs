use std::fmt;

use crate::group::{GroupSpec, DEFAULT_CAP};
use crate::structure::classify::{
    affine_decompose, classify, every_translate_is_subgroup, reconstruct, Classification,
    Decomposition,
};
use crate::structure::subgroup::{all_subgroups, is_subgroup, Subgroup};
use crate::subsets::SubsetBits;

/// Above this order the "no decomposition exists" search for
/// non-semiaffine sets is skipped.
pub const DEFAULT_CONVERSE_LIMIT: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub converse_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            converse_limit: DEFAULT_CONVERSE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Per-set verification of the main characterization. Failures are
/// entries, never panics or errors.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub classification: Option<Classification>,
    pub checks: Vec<CheckOutcome>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark} {}", c.name)?;
            } else {
                writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Verifies the characterization for many sets of one group, caching the
/// subgroup lattice used by the converse search.
#[derive(Debug, Clone)]
pub struct TheoremVerifier {
    group: GroupSpec,
    subgroups: Option<Vec<Subgroup>>,
}

impl TheoremVerifier {
    pub fn new(group: &GroupSpec, opts: VerifyOptions) -> Self {
        let subgroups = (group.order() <= opts.converse_limit.min(DEFAULT_CAP))
            .then(|| all_subgroups(group, DEFAULT_CAP).expect("order below cap"));
        TheoremVerifier {
            group: group.clone(),
            subgroups,
        }
    }

    pub fn verify(&self, set: &SubsetBits) -> TheoremReport {
        debug_assert_eq!(set.group(), &self.group);
        let mut report = TheoremReport {
            classification: None,
            checks: Vec::new(),
        };

        let semiaffine = set.is_semiaffine();
        let affine = set.is_affine();
        report.push(
            "affine_implies_semiaffine",
            !affine || semiaffine,
            if affine && !semiaffine {
                "affine set failed semiaffinity"
            } else {
                ""
            },
        );
        let nonempty = !set.is_empty();
        let p1 = affine && nonempty;
        let p2 = affine_decompose(set).is_some();
        let p3 = nonempty && every_translate_is_subgroup(set);
        report.push(
            "proposition",
            p1 == p2 && p2 == p3,
            format!("affine={p1} decomposes={p2} translates_subgroups={p3}"),
        );

        let classification = match classify(set) {
            Ok(c) => c,
            Err(e) => {
                report.push("classify", false, e.to_string());
                return report;
            }
        };
        report.push(
            "branch",
            classification.is_semiaffine() == semiaffine,
            format!(
                "variant={} semiaffine={semiaffine}",
                classification.variant_name()
            ),
        );

        match &classification.decomposition {
            Decomposition::NotSemiaffine { witness } => {
                report.push("witness", witness.replay(set, None), format!("{witness:?}"));
                if let Some(subgroups) = &self.subgroups {
                    let found = find_decomposition(set, subgroups);
                    report.push(
                        "no_decomposition",
                        found.is_none(),
                        found.unwrap_or_default(),
                    );
                }
            }
            d => {
                match reconstruct(&classification) {
                    Ok(r) => {
                        report.push("reconstruction", r == *set, format!("got {r}"));
                        report.push("converse", r.is_semiaffine(), "");
                    }
                    Err(e) => report.push("reconstruction", false, e.to_string()),
                }
                match d {
                    Decomposition::TwoCosets { h, a, b, lemma } => {
                        report.push("h_subgroup", is_subgroup(h.bits()), "");
                        let members =
                            set.contains(a).unwrap_or(false) && set.contains(b).unwrap_or(false);
                        report.push("members", members, format!("a={a} b={b}"));
                        report.push(
                            "lemma1_invariants",
                            lemma.invariants_hold(),
                            format!("D={:?} n={:?}", lemma.d_window, lemma.n_min),
                        );
                        report.push(
                            "lemma1_restriction",
                            lemma.restriction_claim_holds(set).unwrap_or(false),
                            "",
                        );
                    }
                    Decomposition::CosetMinusMidconvex { h, c, .. } => {
                        report.push("h_subgroup", is_subgroup(h.bits()), "");
                        let mid = c.is_midconvex(h).unwrap_or(false);
                        report.push("c_midconvex", mid, format!("C={c}"));
                    }
                    Decomposition::NotSemiaffine { .. } => unreachable!(),
                }
            }
        }
        report.classification = Some(classification);
        report
    }
}

/// Verifies one set with default options.
pub fn verify_theorem(set: &SubsetBits) -> TheoremReport {
    TheoremVerifier::new(set.group(), VerifyOptions::default()).verify(set)
}

/// Searches every subgroup `H` for either canonical form of `X`. Returns a
/// description of the first decomposition found.
///
/// Form 1 holds iff `X` is a nonempty union of at most two `H`-cosets.
/// Form 2 is tested for each `g` with `X - g ⊆ H`, where `C = H ∖ (X - g)`
/// is forced, so enumerating candidate `C` reduces to one midconvexity test.
pub fn find_decomposition(set: &SubsetBits, subgroups: &[Subgroup]) -> Option<String> {
    let g = set.group();
    for h in subgroups {
        if !set.is_empty() {
            let mut reps: Vec<usize> = Vec::new();
            let mut ok = true;
            for x in set.indices() {
                let coset = h.bits().shift_idx(x);
                if !coset.is_subset_of(set).unwrap_or(false) {
                    ok = false;
                    break;
                }
                if !reps.iter().any(|&r| coset.contains_index(r)) {
                    reps.push(x);
                }
            }
            if ok && reps.len() <= 2 {
                return Some(format!("two cosets of {:?}", h.bits()));
            }
        }
        for t in 0..g.order() as usize {
            let y = set.shift_idx(g.neg_idx(t));
            if !y.is_subset_of(h.bits()).unwrap_or(false) {
                continue;
            }
            let c = h.bits().difference(&y).expect("same group");
            if c.is_midconvex(h).unwrap_or(false) {
                return Some(format!(
                    "({:?} minus {c}) + {}",
                    h.bits(),
                    g.element_unchecked(t)
                ));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn set(g: &GroupSpec, lit: &str) -> SubsetBits {
        SubsetBits::parse_literal(g, lit).unwrap()
    }

    #[test]
    fn verify_semiaffine_example() {
        let z6 = grp("Z6");
        let r = verify_theorem(&set(&z6, "{1,2,4,5}"));
        assert!(r.passed(), "{r}");
        let names: Vec<&str> = r.checks.iter().map(|c| c.name).collect();
        assert!(names.contains(&"c_midconvex"));
        assert!(names.contains(&"reconstruction"));
    }

    #[test]
    fn verify_non_semiaffine_example() {
        let z7 = grp("Z7");
        let x = set(&z7, "{0,1,2}");
        // N = 7 is within the default converse limit
        let r = verify_theorem(&x);
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.name == "no_decomposition"));
        assert!(find_decomposition(&x, &all_subgroups(&z7, 24).unwrap()).is_none());
    }

    #[test]
    fn verify_empty_set() {
        let r = verify_theorem(&set(&grp("Z5"), "{}"));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn converse_search_finds_known_forms() {
        let z8 = grp("Z8");
        let subs = all_subgroups(&z8, 24).unwrap();
        assert!(find_decomposition(&set(&z8, "{0,1,4,5}"), &subs)
            .unwrap()
            .starts_with("two cosets"));
        let z6 = grp("Z6");
        let subs = all_subgroups(&z6, 24).unwrap();
        assert!(find_decomposition(&set(&z6, "{1,2,4,5}"), &subs).is_some());
        assert!(find_decomposition(&set(&z6, "{}"), &subs).is_some());
    }

    #[test]
    fn converse_skipped_above_limit() {
        let z9 = grp("Z9");
        let r = verify_theorem(&set(&z9, "{0,1,2}"));
        assert!(r.passed(), "{r}");
        assert!(!r.checks.iter().any(|c| c.name == "no_decomposition"));
        let v = TheoremVerifier::new(&z9, VerifyOptions { converse_limit: 12 });
        let r = v.verify(&set(&z9, "{0,1,2}"));
        assert!(r
            .checks
            .iter()
            .any(|c| c.name == "no_decomposition" && c.passed));
    }
}
