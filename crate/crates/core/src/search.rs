//! Exhaustive and seeded-random sweeps over the subsets of a group.
//!
//! A subset index is the bitset read as an integer: bit `i` is element index
//! `i`. Exhaustive sweeps partition `[lo, hi)` into contiguous blocks, one
//! per worker, and merge block results in index order, so reports do not
//! depend on the worker count.
//!
//! Random sweeps draw subset indices from ChaCha8 (`rand_chacha`), seeded
//! with `seed_from_u64(seed)`; each sample is the top `N` bits of one
//! `next_u64()` output. Given `(seed, samples, group)` the sampled sequence
//! is fixed.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupSpec, DEFAULT_CAP};
use crate::structure::{
    is_subgroup, periodic_midconvex_check, Subgroup, TheoremVerifier, VerifyOptions,
    DEFAULT_CONVERSE_LIMIT,
};
use crate::subsets::SubsetBits;
use crate::zline::midconvex_via_traces;

/// Independent checks a sweep can run on every subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckSet {
    /// Classification, reconstruction and side conditions of the main
    /// characterization, plus the affine/shifted-subgroup equivalence.
    pub theorem: bool,
    /// Internals of the two-coset construction.
    pub lemma1: bool,
    /// `X - X` is a subgroup iff it is closed under doubling.
    pub lemma2: bool,
    /// Pair-scan midconvexity against the subgroup-coset criterion.
    pub t2: bool,
    /// Pair-scan midconvexity against the trace criterion.
    pub t1: bool,
}

impl CheckSet {
    pub const ALL: CheckSet = CheckSet {
        theorem: true,
        lemma1: true,
        lemma2: true,
        t2: true,
        t1: true,
    };

    pub const NONE: CheckSet = CheckSet {
        theorem: false,
        lemma1: false,
        lemma2: false,
        t2: false,
        t1: false,
    };
}

impl Default for CheckSet {
    fn default() -> Self {
        CheckSet::ALL
    }
}

impl FromStr for CheckSet {
    type Err = Error;

    /// Comma-separated subset of `theorem,lemma1,lemma2,t2,t1`; `all` and
    /// `none` are accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = CheckSet::NONE;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.to_ascii_lowercase().as_str() {
                "all" => out = CheckSet::ALL,
                "none" => {}
                "theorem" => out.theorem = true,
                "lemma1" => out.lemma1 = true,
                "lemma2" => out.lemma2 = true,
                "t2" | "t2-equivalence" => out.t2 = true,
                "t1" | "t1-equivalence" => out.t1 = true,
                _ => return Err(Error::parse(tok, "unknown check")),
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub group: GroupSpec,
    /// Subset index range `[lo, hi)`; `None` is the full `[0, 2^N)`.
    pub range: Option<(u64, u64)>,
    pub mode: Mode,
    pub workers: usize,
    pub checks: CheckSet,
    /// Exhaustive sweeps require `N <= cap`.
    pub cap: u64,
    /// The no-decomposition search for non-semiaffine sets runs only for
    /// `N <= converse_limit`.
    pub converse_limit: u64,
    /// Check one representative per translation class and weight the
    /// class counts by the class size. Only meaningful on the full range.
    pub dedup_shifts: bool,
}

impl SweepConfig {
    pub fn exhaustive(group: &GroupSpec) -> Self {
        SweepConfig {
            group: group.clone(),
            range: None,
            mode: Mode::Exhaustive,
            workers: 1,
            checks: CheckSet::ALL,
            cap: DEFAULT_CAP,
            converse_limit: DEFAULT_CONVERSE_LIMIT,
            dedup_shifts: false,
        }
    }

    pub fn random(group: &GroupSpec, samples: u64, seed: u64) -> Self {
        SweepConfig {
            mode: Mode::Random { samples, seed },
            ..Self::exhaustive(group)
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_checks(mut self, checks: CheckSet) -> Self {
        self.checks = checks;
        self
    }

    pub fn with_range(mut self, lo: u64, hi: u64) -> Self {
        self.range = Some((lo, hi));
        self
    }
}

/// Subset counts by predicate (midconvexity in the whole group).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub total: u64,
    pub affine: u64,
    pub semiaffine: u64,
    pub midconvex: u64,
}

impl ClassCounts {
    fn merge(&mut self, other: &ClassCounts) {
        self.total += other.total;
        self.affine += other.affine;
        self.semiaffine += other.semiaffine;
        self.midconvex += other.midconvex;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The subset as a little-endian hex bitset.
    pub subset: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub group: String,
    #[serde(rename = "N")]
    pub order: u64,
    pub checked: u64,
    pub counts: ClassCounts,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn without_timing(mut self) -> Self {
        self.seconds = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for SweepReport {
    /// One-line summary, e.g. `group=Z4 N=4 checked=16 failures=0 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "group={} N={} checked={} failures={} total={} affine={} semiaffine={} midconvex={}",
            self.group,
            self.order,
            self.checked,
            self.failures.len(),
            self.counts.total,
            self.counts.affine,
            self.counts.semiaffine,
            self.counts.midconvex
        )?;
        if let Some(s) = self.seconds {
            write!(f, " seconds={s:.3}")?;
        }
        Ok(())
    }
}

/// Result of evaluating one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetOutcome {
    pub mask: u64,
    pub affine: bool,
    pub semiaffine: bool,
    pub midconvex: bool,
    pub failures: Vec<Failure>,
}

/// Per-group state shared by all workers of a sweep.
pub struct Sweeper {
    group: GroupSpec,
    whole: Subgroup,
    verifier: TheoremVerifier,
    checks: CheckSet,
}

impl Sweeper {
    pub fn new(group: &GroupSpec, checks: CheckSet, converse_limit: u64) -> Self {
        Sweeper {
            group: group.clone(),
            whole: Subgroup::whole(group),
            verifier: TheoremVerifier::new(group, VerifyOptions { converse_limit }),
            checks,
        }
    }

    /// Evaluates the subset with index `mask` (requires `N <= 64`).
    pub fn evaluate(&self, mask: u64) -> Result<SubsetOutcome> {
        let set = SubsetBits::from_mask(&self.group, mask)?;
        Ok(self.evaluate_set(&set, mask))
    }

    fn evaluate_set(&self, set: &SubsetBits, mask: u64) -> SubsetOutcome {
        let mut failures = Vec::new();
        let mut fail = |check: &str, detail: String| {
            failures.push(Failure {
                subset: set.to_hex(),
                check: check.to_string(),
                detail,
            })
        };
        let affine = set.is_affine();
        let semiaffine = set.is_semiaffine();
        let midconvex = set
            .is_midconvex(&self.whole)
            .expect("every subset lies in the whole group");

        if self.checks.theorem || self.checks.lemma1 {
            let report = self.verifier.verify(set);
            for c in report.failures() {
                let is_lemma1 = c.name.starts_with("lemma1");
                if (is_lemma1 && self.checks.lemma1) || (!is_lemma1 && self.checks.theorem) {
                    fail(c.name, format!("{set}: {}", c.detail));
                }
            }
        }
        if self.checks.lemma2 && semiaffine && !set.is_empty() {
            let subgroup = is_subgroup(&set.difference_set());
            let doubling = set.doubling_closed();
            if subgroup != doubling {
                fail(
                    "lemma2",
                    format!("{set}: X-X subgroup={subgroup} doubling_closed={doubling}"),
                );
            }
        }
        if self.checks.t2 {
            let periodic = periodic_midconvex_check(set, &self.whole)
                .expect("every subset lies in the whole group");
            if periodic != midconvex {
                fail(
                    "t2",
                    format!("{set}: pair-scan={midconvex} coset-criterion={periodic}"),
                );
            }
        }
        if self.checks.t1 {
            let traces = midconvex_via_traces(set);
            if traces != midconvex {
                fail(
                    "t1",
                    format!("{set}: pair-scan={midconvex} trace-criterion={traces}"),
                );
            }
        }
        SubsetOutcome {
            mask,
            affine,
            semiaffine,
            midconvex,
            failures,
        }
    }

    /// Smallest mask among all translates of `mask`, with the number of
    /// distinct translates.
    fn translation_class(&self, mask: u64) -> (u64, u64) {
        let set = SubsetBits::from_mask(&self.group, mask).expect("valid mask");
        let mut translates: Vec<u64> = (0..self.group.order() as usize)
            .map(|t| set.shift_idx(t).mask().expect("N <= 64"))
            .collect();
        translates.sort_unstable();
        translates.dedup();
        (translates[0], translates.len() as u64)
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    counts: ClassCounts,
    failures: Vec<Failure>,
}

impl Partial {
    fn absorb(&mut self, o: SubsetOutcome, weight: u64) {
        self.checked += 1;
        self.counts.total += weight;
        self.counts.affine += weight * o.affine as u64;
        self.counts.semiaffine += weight * o.semiaffine as u64;
        self.counts.midconvex += weight * o.midconvex as u64;
        self.failures.extend(o.failures);
    }
}

fn run_blocks<F>(n_items: u64, workers: usize, f: F) -> Vec<Partial>
where
    F: Fn(u64, u64) -> Partial + Sync,
{
    let workers = workers.max(1) as u64;
    let block = n_items.div_ceil(workers).max(1);
    let bounds: Vec<(u64, u64)> = (0..workers)
        .map(|w| ((w * block).min(n_items), ((w + 1) * block).min(n_items)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    if bounds.len() <= 1 {
        return bounds.into_iter().map(|(lo, hi)| f(lo, hi)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| {
                let f = &f;
                scope.spawn(move || f(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

fn finish(cfg: &SweepConfig, parts: Vec<Partial>, started: Instant) -> SweepReport {
    let mut report = SweepReport {
        group: cfg.group.to_string(),
        order: cfg.group.order(),
        checked: 0,
        counts: ClassCounts::default(),
        failures: Vec::new(),
        seconds: None,
    };
    for p in parts {
        report.checked += p.checked;
        report.counts.merge(&p.counts);
        report.failures.extend(p.failures);
    }
    report.seconds = Some(started.elapsed().as_secs_f64());
    report
}

/// Runs every enabled check on every subset index in the configured range.
pub fn exhaustive_verify(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.mode != Mode::Exhaustive {
        return Err(Error::Precondition(
            "exhaustive_verify needs exhaustive mode".into(),
        ));
    }
    let n = cfg.group.order();
    cfg.group.check_cap(cfg.cap.min(63))?;
    let limit = 1u64 << n;
    let (lo, hi) = cfg.range.unwrap_or((0, limit));
    if lo > hi || hi > limit {
        return Err(Error::InvalidRange {
            lo,
            hi,
            limit: limit as u128,
        });
    }
    let started = Instant::now();
    let sweeper = Sweeper::new(&cfg.group, cfg.checks, cfg.converse_limit);
    let parts = run_blocks(hi - lo, cfg.workers, |a, b| {
        let mut part = Partial::default();
        for mask in lo + a..lo + b {
            let weight = if cfg.dedup_shifts {
                let (rep, size) = sweeper.translation_class(mask);
                if rep != mask {
                    continue;
                }
                size
            } else {
                1
            };
            let set = SubsetBits::from_mask(&cfg.group, mask).expect("mask in range");
            part.absorb(sweeper.evaluate_set(&set, mask), weight);
        }
        part
    });
    Ok(finish(cfg, parts, started))
}

/// The subset indices a random sweep visits, in order.
pub fn random_masks(group: &GroupSpec, samples: u64, seed: u64) -> Result<Vec<u64>> {
    let n = group.order();
    if n > 63 {
        return Err(Error::Unsupported(format!(
            "random sweeps need N <= 63, group has order {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples).map(|_| rng.next_u64() >> (64 - n)).collect())
}

/// Runs every enabled check on uniformly sampled subsets.
pub fn random_verify(cfg: &SweepConfig) -> Result<SweepReport> {
    let Mode::Random { samples, seed } = cfg.mode else {
        return Err(Error::Precondition(
            "random_verify needs random mode".into(),
        ));
    };
    let masks = random_masks(&cfg.group, samples, seed)?;
    let started = Instant::now();
    let sweeper = Sweeper::new(&cfg.group, cfg.checks, cfg.converse_limit);
    let parts = run_blocks(masks.len() as u64, cfg.workers, |a, b| {
        let mut part = Partial::default();
        for &mask in &masks[a as usize..b as usize] {
            let set = SubsetBits::from_mask(&cfg.group, mask).expect("mask in range");
            part.absorb(sweeper.evaluate_set(&set, mask), 1);
        }
        part
    });
    Ok(finish(cfg, parts, started))
}

/// Dispatches on the configured mode.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    match cfg.mode {
        Mode::Exhaustive => exhaustive_verify(cfg),
        Mode::Random { .. } => random_verify(cfg),
    }
}

/// Affine, semiaffine and midconvex counts over all `2^N` subsets.
pub fn count_classes(group: &GroupSpec, cap: u64) -> Result<ClassCounts> {
    let cfg = SweepConfig {
        cap,
        ..SweepConfig::exhaustive(group).with_checks(CheckSet::NONE)
    };
    Ok(exhaustive_verify(&cfg)?.counts)
}

/// Every presentation `Z<n1> x ... x Z<nk>` (factors `>= 2`, order listed)
/// with `N <= max_order`, preceded by `Z1`. Presentations are ordered by
/// `N`, then lexicographically by factor list.
pub fn presentations_up_to(max_order: u64) -> Vec<GroupSpec> {
    fn extend(prefix: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        for f in 2..=max / product {
            prefix.push(f);
            out.push(prefix.clone());
            extend(prefix, product * f, max, out);
            prefix.pop();
        }
    }
    let mut all = vec![Vec::new()];
    if max_order >= 2 {
        extend(&mut Vec::new(), 1, max_order, &mut all);
    }
    let mut groups: Vec<GroupSpec> = all
        .iter()
        .map(|o| GroupSpec::new(o).expect("small orders"))
        .collect();
    groups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.orders().cmp(b.orders()))
    });
    groups
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtlasFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub struct AtlasOptions {
    pub format: AtlasFormat,
    pub workers: usize,
    pub checks: CheckSet,
    pub cap: u64,
    pub converse_limit: u64,
    pub timing: bool,
}

impl Default for AtlasOptions {
    fn default() -> Self {
        AtlasOptions {
            format: AtlasFormat::Csv,
            workers: 1,
            checks: CheckSet::ALL,
            cap: DEFAULT_CAP,
            converse_limit: DEFAULT_CONVERSE_LIMIT,
            timing: true,
        }
    }
}

/// One atlas line. Column order is part of the output format.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtlasRow {
    pub group: String,
    #[serde(rename = "N")]
    pub order: u64,
    pub total: u64,
    pub affine: u64,
    pub semiaffine: u64,
    pub midconvex: u64,
    pub failures: u64,
    pub seconds: Option<f64>,
}

impl From<&SweepReport> for AtlasRow {
    fn from(r: &SweepReport) -> Self {
        AtlasRow {
            group: r.group.clone(),
            order: r.order,
            total: r.counts.total,
            affine: r.counts.affine,
            semiaffine: r.counts.semiaffine,
            midconvex: r.counts.midconvex,
            failures: r.failures.len() as u64,
            seconds: r.seconds,
        }
    }
}

/// Sweeps each group exhaustively and writes one row per group. Returns the
/// rows written.
pub fn atlas_emit<W: Write>(
    groups: &[GroupSpec],
    sink: W,
    opts: &AtlasOptions,
) -> Result<Vec<AtlasRow>> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    let mut rows = Vec::with_capacity(groups.len());
    for g in groups {
        let cfg = SweepConfig {
            cap: opts.cap,
            converse_limit: opts.converse_limit,
            ..SweepConfig::exhaustive(g)
                .with_workers(opts.workers)
                .with_checks(opts.checks)
        };
        let mut report = exhaustive_verify(&cfg)?;
        if !opts.timing {
            report.seconds = None;
        }
        rows.push(AtlasRow::from(&report));
    }
    match opts.format {
        AtlasFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(sink);
            w.write_record([
                "group",
                "N",
                "total",
                "affine",
                "semiaffine",
                "midconvex",
                "failures",
                "seconds",
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
            for row in &rows {
                w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        AtlasFormat::Json => {
            let mut sink = sink;
            for row in &rows {
                let line = serde_json::to_string(row).expect("row serializes");
                writeln!(sink, "{line}").map_err(io)?;
            }
            sink.flush().map_err(io)?;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn exhaustive_examples() {
        let r = exhaustive_verify(&SweepConfig::exhaustive(&grp("Z4"))).unwrap();
        assert_eq!((r.checked, r.counts.semiaffine), (16, 12));
        assert!(r.passed(), "{:?}", r.failures);
        let r = exhaustive_verify(&SweepConfig::exhaustive(&grp("Z3"))).unwrap();
        assert_eq!((r.checked, r.counts.semiaffine), (8, 8));
        let r = exhaustive_verify(&SweepConfig::exhaustive(&grp("Z1"))).unwrap();
        assert_eq!((r.checked, r.counts.semiaffine), (2, 2));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_classes(&grp("Z2"), 24).unwrap().midconvex, 2);
        assert_eq!(count_classes(&grp("Z3"), 24).unwrap().midconvex, 5);
        assert_eq!(count_classes(&grp("Z4"), 24).unwrap().affine, 8);
        assert!(matches!(
            count_classes(&grp("Z5"), 4),
            Err(Error::CapExceeded { order: 5, cap: 4 })
        ));
    }

    #[test]
    fn range_is_validated() {
        let cfg = SweepConfig::exhaustive(&grp("Z3")).with_range(2, 9);
        assert!(matches!(
            exhaustive_verify(&cfg),
            Err(Error::InvalidRange { .. })
        ));
        let cfg = SweepConfig::exhaustive(&grp("Z3")).with_range(2, 5);
        assert_eq!(exhaustive_verify(&cfg).unwrap().checked, 3);
    }

    #[test]
    fn random_examples() {
        let cfg = SweepConfig::random(&grp("Z6"), 0, 1);
        let r = random_verify(&cfg).unwrap();
        assert_eq!(r.checked, 0);
        assert!(r.failures.is_empty());
        let cfg = SweepConfig::random(&grp("Z9"), 200, 7);
        let a = random_verify(&cfg).unwrap().without_timing();
        let b = random_verify(&cfg.clone().with_workers(3))
            .unwrap()
            .without_timing();
        assert_eq!(a, b);
        assert!(random_masks(&GroupSpec::cyclic(64).unwrap(), 1, 1).is_err());
    }

    #[test]
    fn random_masks_pinned() {
        // Frozen first draws for seed 1 on Z16; a change here breaks report
        // reproducibility.
        let masks = random_masks(&grp("Z16"), 3, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let expected: Vec<u64> = (0..3).map(|_| rng.next_u64() >> 48).collect();
        assert_eq!(masks, expected);
        assert!(masks.iter().all(|&m| m < 1 << 16));
    }

    #[test]
    fn dedup_shifts_preserves_counts() {
        let g = grp("Z6");
        let full = exhaustive_verify(&SweepConfig::exhaustive(&g)).unwrap();
        let cfg = SweepConfig {
            dedup_shifts: true,
            ..SweepConfig::exhaustive(&g)
        };
        let dedup = exhaustive_verify(&cfg).unwrap();
        assert_eq!(dedup.counts, full.counts);
        assert!(dedup.checked < full.checked);
    }

    #[test]
    fn presentations() {
        let names: Vec<String> = presentations_up_to(4)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(names, ["Z1", "Z2", "Z3", "Z2xZ2", "Z4"]);
        let twelve = presentations_up_to(12);
        assert!(twelve.iter().any(|g| g.orders() == [2, 2, 3]));
        assert!(twelve.iter().any(|g| g.orders() == [3, 2, 2]));
        assert!(twelve.iter().all(|g| g.order() <= 12));
    }

    #[test]
    fn check_set_parsing() {
        let c: CheckSet = "theorem,t1".parse().unwrap();
        assert!(c.theorem && c.t1 && !c.lemma1 && !c.lemma2 && !c.t2);
        assert_eq!("all".parse::<CheckSet>().unwrap(), CheckSet::ALL);
        assert!("bogus".parse::<CheckSet>().is_err());
    }

    #[test]
    fn atlas_rows() {
        let groups: Vec<GroupSpec> = ["Z1", "Z2", "Z3", "Z4"].iter().map(|s| grp(s)).collect();
        let mut out = Vec::new();
        let opts = AtlasOptions {
            timing: false,
            ..AtlasOptions::default()
        };
        let rows = atlas_emit(&groups, &mut out, &opts).unwrap();
        let semi: Vec<u64> = rows.iter().map(|r| r.semiaffine).collect();
        assert_eq!(semi, [2, 4, 8, 12]);
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "group,N,total,affine,semiaffine,midconvex,failures,seconds"
        );
        assert_eq!(text.lines().nth(4).unwrap(), "Z4,4,16,8,12,2,0,");

        let mut out = Vec::new();
        assert!(atlas_emit(&[], &mut out, &opts).unwrap().is_empty());

        let mut out = Vec::new();
        let json = AtlasOptions {
            format: AtlasFormat::Json,
            ..opts
        };
        atlas_emit(&[grp("Z2xZ2")], &mut out, &json).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "{\"group\":\"Z2xZ2\",\"N\":4,\"total\":16,\"affine\":12,\"semiaffine\":12,\"midconvex\":2,\"failures\":0,\"seconds\":null}\n"
        );
    }
}
