//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a property failure was found, 2 on
//! usage or parse errors. Machine output goes to stdout, diagnostics to
//! stderr.

use std::fs::File;
use std::io::{self, BufRead, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::group::{GroupSpec, DEFAULT_CAP};
use crate::search::{
    atlas_emit, count_classes, presentations_up_to, sweep, AtlasFormat, AtlasOptions, CheckSet,
    Mode, SweepConfig,
};
use crate::sphere::{
    is_1_spherical, line_semiaffine_witness, sphere_witness, LinePointSet, Rational,
};
use crate::structure::{
    classify, periodic_semiaffine_classify, ClassificationRecord, PeriodicForm, Subgroup,
    TheoremVerifier, VerifyOptions, WitnessRecord, DEFAULT_CONVERSE_LIMIT,
};
use crate::subsets::SubsetBits;
use crate::zline::{decompose_trace, trace};

#[derive(Debug, Parser)]
#[command(
    name = "semiaffine",
    version,
    about = "Affine, semiaffine and midconvex subsets of finite Abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the affine, semiaffine and midconvex predicates with witnesses.
    Check(SetArgs),
    /// Decompose a set into its canonical form, or rebuild a set from one.
    Classify(ClassifyArgs),
    /// Verify the characterization for one set or sweep many.
    Verify(VerifyArgs),
    /// Count affine, semiaffine and midconvex subsets of a group.
    Count(CountArgs),
    /// Print the traces {n : x + n·g ∈ X} and their decompositions.
    Trace(SetArgs),
    /// Decide 1-sphericity of a finite set of rationals on the line.
    Sphere(SphereArgs),
    /// Sweep several groups and write one row per group.
    Atlas(AtlasArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
    Tsv,
}

#[derive(Debug, Args)]
struct SetArgs {
    /// Group spec, e.g. Z4xZ2.
    #[arg(short = 'g', long = "group")]
    group: String,
    /// Set literal, e.g. {1,2,4,5} or {(0,1),(1,0)}.
    #[arg(short = 's', long = "set", conflicts_with = "bits")]
    set: Option<String>,
    /// Bitset over element indices as little-endian hex bytes.
    #[arg(long)]
    bits: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[command(flatten)]
    set: SetArgs,
    /// Read a classification JSON (stdin, or --input) and print its set.
    #[arg(long)]
    reconstruct: bool,
    #[arg(long, requires = "reconstruct")]
    input: Option<String>,
    /// Report the subgroup form (H ∖ P) + g instead of (H ∖ C) + g.
    #[arg(long, conflicts_with = "reconstruct")]
    periodic: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, conflicts_with = "exhaustive")]
    samples: Option<u64>,
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Subset index range lo:hi.
    #[arg(long)]
    range: Option<String>,
    /// Comma-separated subset of theorem,lemma1,lemma2,t2,t1.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, default_value_t = DEFAULT_CONVERSE_LIMIT)]
    converse_limit: u64,
    /// Check one subset per translation class.
    #[arg(long)]
    dedup_shifts: bool,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    set: SetArgs,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(short = 'g', long = "group")]
    group: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct SphereArgs {
    /// Comma-separated rationals, e.g. 0,1/2,3.
    #[arg(short = 'p', long = "points", allow_hyphen_values = true)]
    points: String,
}

#[derive(Debug, Args)]
struct AtlasArgs {
    /// Comma-separated group specs.
    #[arg(
        short = 'g',
        long = "groups",
        value_delimiter = ',',
        conflicts_with = "max_order"
    )]
    groups: Vec<String>,
    /// Every presentation of order up to this bound.
    #[arg(long)]
    max_order: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, default_value_t = DEFAULT_CONVERSE_LIMIT)]
    converse_limit: u64,
    #[arg(long)]
    no_timing: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

enum Outcome {
    Pass,
    PropertyFailure,
}

enum CliError {
    Usage(String),
    Failure(String),
    /// The reader went away (e.g. piped into `head`); not an error.
    Closed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError::Closed
        } else {
            CliError::Failure(format!("output error: {e}"))
        }
    }
}

type CliResult = Result<Outcome, CliError>;

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(
        std::env::args(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Runs one invocation with empty stdin.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_io(args, &mut io::empty(), out, err)
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run_with_io<I, S>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    // Keep the one line naming the offending token; drop the
                    // usage block and tips.
                    let text = e.to_string();
                    let _ = writeln!(err, "{}", text.lines().next().unwrap_or("error"));
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Check(a) => cmd_check(&a, out),
        Command::Classify(a) => cmd_classify(&a, input, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Trace(a) => cmd_trace(&a, out),
        Command::Sphere(a) => cmd_sphere(&a, out),
        Command::Atlas(a) => cmd_atlas(&a, out),
    };
    match result {
        Ok(Outcome::Pass) | Err(CliError::Closed) => 0,
        Ok(Outcome::PropertyFailure) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn format_or(f: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = f.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(CliError::Usage(format!(
            "format {f:?} is not available here (use one of {allowed:?})"
        )));
    }
    Ok(f)
}

fn parse_group(s: &str) -> Result<GroupSpec, CliError> {
    Ok(s.parse::<GroupSpec>()?)
}

fn parse_set(group: &GroupSpec, a: &SetArgs) -> Result<SubsetBits, CliError> {
    match (&a.set, &a.bits) {
        (Some(lit), None) => Ok(SubsetBits::parse_literal(group, lit)?),
        (None, Some(hex)) => Ok(SubsetBits::from_hex(group, hex)?),
        _ => Err(CliError::Usage(
            "exactly one of --set or --bits is required".into(),
        )),
    }
}

fn print_json(out: &mut dyn Write, v: &impl Serialize) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(v).expect("value serializes")
    )
}

fn cmd_check(a: &SetArgs, out: &mut dyn Write) -> CliResult {
    let format = format_or(a.format, Format::Json, &[Format::Json, Format::Text])?;
    let group = parse_group(&a.group)?;
    let set = parse_set(&group, a)?;
    let whole = Subgroup::whole(&group);
    let wit =
        |w: Option<crate::subsets::Witness>| w.map(|w| WitnessRecord::from_witness(&group, &w));
    let affine = wit(set.affine_witness());
    let semiaffine = wit(set.semiaffine_witness());
    let midconvex = wit(set.midconvex_witness(&whole)?);
    let doubling = set.doubling_violator();
    match format {
        Format::Text => {
            writeln!(out, "set {set} in {group}")?;
            for (name, w) in [
                ("affine", &affine),
                ("semiaffine", &semiaffine),
                ("midconvex", &midconvex),
            ] {
                match w {
                    None => writeln!(out, "{name}: yes")?,
                    Some(w) => writeln!(
                        out,
                        "{name}: no (tuple {:?}, missing {:?})",
                        w.tuple, w.missing
                    )?,
                }
            }
            match &doubling {
                None => writeln!(out, "doubling_closed: yes")?,
                Some(v) => writeln!(out, "doubling_closed: no (violator {v})")?,
            }
        }
        _ => {
            let entry = |w: &Option<WitnessRecord>| match w {
                None => json!({"holds": true}),
                Some(w) => json!({"holds": false, "witness": w}),
            };
            let doubling = match &doubling {
                None => json!({"holds": true}),
                Some(v) => json!({"holds": false, "violator": group.index_of(v)?}),
            };
            let v = json!({
                "group": group.to_string(),
                "set": set.to_string(),
                "affine": entry(&affine),
                "semiaffine": entry(&semiaffine),
                "midconvex": entry(&midconvex),
                "doubling_closed": doubling,
            });
            print_json(out, &v)?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_classify(a: &ClassifyArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CliResult {
    let group = parse_group(&a.set.group)?;
    if a.reconstruct {
        let mut text = String::new();
        match &a.input {
            Some(path) if path != "-" => {
                File::open(path)
                    .and_then(|mut f| f.read_to_string(&mut text))
                    .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
            }
            _ => {
                input
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            }
        }
        let rec: ClassificationRecord = serde_json::from_str(text.trim())
            .map_err(|e| CliError::Usage(format!("cannot parse classification JSON: {e}")))?;
        let set = rec.reconstruct(&group)?;
        writeln!(out, "{set}")?;
        return Ok(Outcome::Pass);
    }
    let set = parse_set(&group, &a.set)?;
    if a.periodic {
        let ix = |e| group.index_of(e);
        let v = match periodic_semiaffine_classify(&set)? {
            PeriodicForm::NotSemiaffine { witness } => json!({
                "variant": "not_semiaffine",
                "witness": WitnessRecord::from_witness(&group, &witness),
            }),
            PeriodicForm::TwoCosets { h, a, b } => json!({
                "variant": "two_cosets",
                "H": h.bits().indices().collect::<Vec<_>>(),
                "a": ix(&a)?,
                "b": ix(&b)?,
            }),
            PeriodicForm::CosetMinusSubgroup { h, p, g } => json!({
                "variant": "coset_minus_subgroup",
                "H": h.bits().indices().collect::<Vec<_>>(),
                "P": p.map(|p| p.bits().indices().collect::<Vec<_>>()),
                "g": ix(&g)?,
            }),
        };
        print_json(out, &v)?;
        return Ok(Outcome::Pass);
    }
    let c = classify(&set)?;
    print_json(out, &ClassificationRecord::from(&c))?;
    Ok(Outcome::Pass)
}

fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(Error::parse(s, "expected lo:hi").to_string());
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let format = format_or(a.set.format, Format::Json, &[Format::Json, Format::Text])?;
    let group = parse_group(&a.set.group)?;
    let s = &a.sweep;
    if a.set.set.is_some() || a.set.bits.is_some() {
        if s.exhaustive || s.samples.is_some() {
            return Err(CliError::Usage(
                "give either a set or a sweep mode, not both".into(),
            ));
        }
        let set = parse_set(&group, &a.set)?;
        let verifier = TheoremVerifier::new(
            &group,
            VerifyOptions {
                converse_limit: s.converse_limit,
            },
        );
        let report = verifier.verify(&set);
        match format {
            Format::Text => {
                writeln!(out, "set {set} in {group}")?;
                write!(out, "{report}")?;
            }
            _ => {
                let checks: Vec<Value> = report
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                    .collect();
                let v = json!({
                    "group": group.to_string(),
                    "set": set.to_string(),
                    "passed": report.passed(),
                    "classification": report.classification.as_ref().map(ClassificationRecord::from),
                    "checks": checks,
                });
                print_json(out, &v)?;
            }
        }
        return Ok(if report.passed() {
            Outcome::Pass
        } else {
            Outcome::PropertyFailure
        });
    }

    let mode = match (s.exhaustive, s.samples) {
        (true, _) => Mode::Exhaustive,
        (false, Some(samples)) => Mode::Random {
            samples,
            seed: s
                .seed
                .ok_or_else(|| CliError::Usage("--samples needs --seed".into()))?,
        },
        (false, None) => {
            return Err(CliError::Usage(
                "verify needs --set/--bits, --exhaustive, or --samples with --seed".into(),
            ))
        }
    };
    let cfg = SweepConfig {
        group: group.clone(),
        range: s.range.as_deref().map(parse_range).transpose()?,
        mode,
        workers: s.workers,
        checks: s.checks.parse::<CheckSet>()?,
        cap: s.cap,
        converse_limit: s.converse_limit,
        dedup_shifts: s.dedup_shifts,
    };
    let mut report = sweep(&cfg)?;
    if s.no_timing {
        report.seconds = None;
    }
    match format {
        Format::Text => writeln!(out, "{report}")?,
        _ => writeln!(out, "{}", report.to_json())?,
    }
    Ok(if report.passed() {
        Outcome::Pass
    } else {
        Outcome::PropertyFailure
    })
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> CliResult {
    let format = format_or(
        a.format,
        Format::Json,
        &[Format::Json, Format::Csv, Format::Text],
    )?;
    let group = parse_group(&a.group)?;
    let c = count_classes(&group, a.cap)?;
    match format {
        Format::Csv => {
            writeln!(out, "group,N,total,affine,semiaffine,midconvex")?;
            writeln!(
                out,
                "{group},{},{},{},{},{}",
                group.order(),
                c.total,
                c.affine,
                c.semiaffine,
                c.midconvex
            )?;
        }
        Format::Text => writeln!(
            out,
            "group={group} total={} affine={} semiaffine={} midconvex={}",
            c.total, c.affine, c.semiaffine, c.midconvex
        )?,
        _ => print_json(
            out,
            &json!({
                "group": group.to_string(),
                "N": group.order(),
                "total": c.total,
                "affine": c.affine,
                "semiaffine": c.semiaffine,
                "midconvex": c.midconvex,
            }),
        )?,
    }
    Ok(Outcome::Pass)
}

fn cmd_trace(a: &SetArgs, out: &mut dyn Write) -> CliResult {
    let format = format_or(a.format, Format::Json, &[Format::Json, Format::Tsv])?;
    let group = parse_group(&a.group)?;
    let set = parse_set(&group, a)?;
    if format == Format::Tsv {
        writeln!(out, "x\tg\tmodulus\tresidues\td")?;
    }
    for x in set.elements() {
        for g in group.elements() {
            let t = trace(&set, &x, &g)?;
            let d = decompose_trace(&t).map(|d| d.d);
            let residues = t.residues();
            if format == Format::Tsv {
                let rs: Vec<String> = residues.iter().map(u64::to_string).collect();
                let d = d.map_or_else(|| "FAIL".to_string(), |d| d.to_string());
                writeln!(out, "{x}\t{g}\t{}\t{}\t{d}", t.modulus(), rs.join(","))?;
            } else {
                print_json(
                    out,
                    &json!({
                        "x": group.index_of(&x)?,
                        "g": group.index_of(&g)?,
                        "modulus": t.modulus(),
                        "residues": residues,
                        "d": d,
                    }),
                )?;
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Integers as JSON numbers, other rationals as "p/q" strings.
fn rational_json(q: &Rational) -> Value {
    if q.is_integer() {
        json!(*q.numer() as i64)
    } else {
        json!(q.to_string())
    }
}

fn cmd_sphere(a: &SphereArgs, out: &mut dyn Write) -> CliResult {
    let points: LinePointSet = a.points.parse()?;
    let spherical = is_1_spherical(&points);
    let witness = sphere_witness(&points).map(|w| {
        vec![
            rational_json(&w.a),
            rational_json(&w.b),
            rational_json(&w.c),
        ]
    });
    let semiaffine = line_semiaffine_witness(&points).is_none();
    print_json(
        out,
        &json!({
            "spherical": spherical,
            "witness": witness,
            "equivalent_semiaffine": semiaffine,
        }),
    )?;
    Ok(if spherical == semiaffine {
        Outcome::Pass
    } else {
        Outcome::PropertyFailure
    })
}

fn cmd_atlas(a: &AtlasArgs, out: &mut dyn Write) -> CliResult {
    let format = match format_or(a.format, Format::Csv, &[Format::Csv, Format::Json])? {
        Format::Json => AtlasFormat::Json,
        _ => AtlasFormat::Csv,
    };
    let groups: Vec<GroupSpec> = match a.max_order {
        Some(m) => presentations_up_to(m),
        None => a
            .groups
            .iter()
            .map(|g| parse_group(g))
            .collect::<Result<_, _>>()?,
    };
    let opts = AtlasOptions {
        format,
        workers: a.workers,
        checks: a.checks.parse::<CheckSet>()?,
        cap: a.cap,
        converse_limit: a.converse_limit,
        timing: !a.no_timing,
    };
    let rows = match &a.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot create {path}: {e}")))?;
            atlas_emit(&groups, io::BufWriter::new(file), &opts)?
        }
        None => atlas_emit(&groups, &mut *out, &opts)?,
    };
    Ok(if rows.iter().all(|r| r.failures == 0) {
        Outcome::Pass
    } else {
        Outcome::PropertyFailure
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["semiaffine"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn range_parsing() {
        assert!(matches!(parse_range("3:9"), Ok((3, 9))));
        assert!(parse_range("3-9").is_err());
        assert!(parse_range("a:9").is_err());
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
        assert!(err.is_empty());
    }

    #[test]
    fn wrong_format_is_usage_error() {
        let (code, out, err) = run_capture(&["sphere", "-p", "0,1"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("\"spherical\":true"));
        let (code, out, err) = run_capture(&["count", "-g", "Z3", "--format", "tsv"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.starts_with("error:"));
    }
}
