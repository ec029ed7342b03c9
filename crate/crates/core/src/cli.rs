//! Command-line front end. Results go to stdout (or `--out`), diagnostics
//! to stderr. Exit codes: 0 success, 2 bad input, 3 a group check failed,
//! 4 too few points for a dimension estimate.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::families::{monotonicity, sweep, Family, FamilyRecord, SweepRow};
use crate::handlebody::{invariants, presentation_of, HandleDecomposition, IntersectionForm, InvariantReport};
use crate::kleinian::dimension::{box_counting_dimension, DimensionEstimate, ScaleLadder};
use crate::kleinian::group::{complex_twist, fuchsian_schottky, GroupSpec, SchottkyLayout};
use crate::kleinian::invariance::DEFAULT_DEPTH;
use crate::kleinian::limit_set::{limit_set_sample_with, read_csv, write_csv, DEFAULT_TAU_DEDUP};
use crate::kleinian::sign::{dimension_threshold_check, scalar_sign, ScalarSign, ThresholdHint};
use crate::kleinian::{first_combination, panelled, second_combination, KleinianError, Region};
use crate::moebius::{ComplexPoint, GeneralizedCircle, MoebiusTransform};
use crate::word::Label;

#[derive(Debug, Parser)]
#[command(name = "panelweb", version, about = "Invariants of panelled-web 4-manifolds and their Kleinian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology, Euler characteristic and intersection data of one manifold.
    Invariants(InvariantsArgs),
    /// Invariants over a parameter grid, with growth checks in the footer.
    FamilyTable(FamilyTableArgs),
    /// Assemble or emit group specs.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Orbit sample of a limit set as `re,im` CSV.
    Limitset(LimitsetArgs),
    /// Box-counting dimension of a point sample, optionally with the scalar-curvature sign.
    Dimension(DimensionArgs),
    /// The fundamental-group presentation `⟨gens | relators⟩`.
    Presentation(SourceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Family name: m1, m2, m3, m1g, m1gn, m3gn, m4n.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    pub family: Option<String>,
    #[arg(long)]
    pub g: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Handle-spec JSON file.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Limit-set dimension; adds the scalar-curvature sign to the report.
    #[arg(long)]
    pub dim: Option<f64>,
    /// Print the handle spec instead of the report.
    #[arg(long)]
    pub emit_spec: bool,
}

#[derive(Debug, Args)]
pub struct FamilyTableArgs {
    #[arg(long)]
    pub family: String,
    /// Parameter ranges, e.g. `g=1..10,n=1..10`. Missing ranges default to 1..10.
    #[arg(long, default_value = "g=1..10,n=1..10")]
    pub range: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Load a spec, apply combinations and twists in order, print the result.
    Build(BuildArgs),
    /// Emit the Fuchsian Schottky group of a surface of genus g with n holes.
    Schottky {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        holes: u32,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 3.0)]
        spacing: f64,
    },
    /// Emit the worked panelled-web group, checked to the given depth.
    Panelled {
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// Combination file (JSON); may be repeated.
    #[arg(long)]
    pub combine: Vec<PathBuf>,
    /// Complex twist: generator label, p, q.
    #[arg(long, num_args = 3, value_names = ["LABEL", "P", "Q"], allow_hyphen_values = true)]
    pub twist: Option<Vec<String>>,
    /// Multiplier for the twist; defaults to the generator's own.
    #[arg(long, requires = "twist")]
    pub lambda: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LimitsetArgs {
    #[arg(long)]
    pub group: PathBuf,
    #[arg(long)]
    pub depth: usize,
    #[arg(long, default_value_t = 10)]
    pub depth_cap: usize,
    #[arg(long, default_value_t = DEFAULT_TAU_DEDUP)]
    pub tau: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DimensionArgs {
    /// Points CSV with header `re,im`.
    #[arg(long = "in", conflicts_with_all = ["group", "d"])]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "depth", conflicts_with = "d")]
    pub group: Option<PathBuf>,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub depth_cap: usize,
    #[arg(long, default_value_t = DEFAULT_TAU_DEDUP)]
    pub tau: f64,
    /// Use this dimension instead of estimating one.
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long, default_value_t = 8)]
    pub scales: usize,
    #[arg(long, default_value_t = 0.5)]
    pub ratio: f64,
    #[arg(long)]
    pub largest: Option<f64>,
    /// Append the sign of n/2 - 1 - d.
    #[arg(long)]
    pub sign: bool,
    #[arg(long, default_value_t = 4)]
    pub n: u32,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<KleinianError> for CliError {
    fn from(e: KleinianError) -> Self {
        let code = match e {
            KleinianError::PreciseInvarianceFailed(_)
            | KleinianError::ConjugationFailed { .. }
            | KleinianError::RegionMapFailed { .. }
            | KleinianError::PowerCheckFailed(_)
            | KleinianError::ExtensionCheckFailed(_)
            | KleinianError::SharedGeneratorMismatch(_) => 3,
            KleinianError::TooFewPoints(_) => 4,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

macro_rules! input_err {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::input(e.to_string())
            }
        }
    )*};
}
input_err!(crate::handlebody::HandleError, crate::families::FamilyError, crate::kleinian::sign::SignError, csv::Error);

/// A handle decomposition as read from or written to disk. The
/// intersection form is optional; without it the form is derived when
/// `b2 = 0` and reported unknown otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HandleSpec {
    #[serde(flatten)]
    pub decomposition: HandleDecomposition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intersection_form: Option<IntersectionForm>,
}

impl From<&FamilyRecord> for HandleSpec {
    fn from(r: &FamilyRecord) -> Self {
        HandleSpec { decomposition: r.decomposition.clone(), intersection_form: Some(r.asserted_form) }
    }
}

/// One combination step applied by `group build --combine`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Combination {
    /// Amalgamate with the group in `with` (path relative to this file) over `shared`.
    First {
        with: PathBuf,
        shared: Label,
        separator: GeneralizedCircle,
        b1: Region,
        b2: Region,
        #[serde(default = "default_depth")]
        depth: usize,
    },
    /// Adjoin `f` conjugating `⟨h1⟩` to `⟨h2⟩`.
    Second {
        h1: Label,
        h2: Label,
        f: MoebiusTransform,
        b1: Region,
        b2: Region,
        #[serde(default)]
        label: Option<Label>,
        #[serde(default = "default_depth")]
        depth: usize,
    },
}

fn default_depth() -> usize {
    DEFAULT_DEPTH
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn family_record(family: &str, g: Option<u32>, n: Option<u32>) -> Result<FamilyRecord, CliError> {
    let f: Family = family.parse()?;
    if g.is_some() && !f.uses_g() {
        return Err(CliError::input(format!("family {f} takes no --g")));
    }
    if n.is_some() && !f.uses_n() {
        return Err(CliError::input(format!("family {f} takes no --n")));
    }
    Ok(f.build(g, n)?)
}

fn load_source(src: &SourceArgs) -> Result<HandleSpec, CliError> {
    match (&src.family, &src.spec) {
        (Some(f), None) => Ok(HandleSpec::from(&family_record(f, src.g, src.n)?)),
        (None, Some(path)) => {
            if src.g.is_some() || src.n.is_some() {
                return Err(CliError::input("--g and --n apply to --family only"));
            }
            let mut spec: HandleSpec = read_json(path)?;
            spec.decomposition.validate()?;
            if !spec.decomposition.doubled {
                spec.decomposition = spec.decomposition.double();
            }
            Ok(spec)
        }
        _ => Err(CliError::input("give exactly one of --family or --spec")),
    }
}

fn report_table(r: &InvariantReport) -> String {
    let b = r.betti;
    let mut rows = vec![
        ("chi", r.chi.to_string()),
        ("betti", format!("{} {} {} {} {}", b[0], b[1], b[2], b[3], b[4])),
        ("H1", r.h1.to_string()),
        ("H2", r.h2.to_string()),
        ("H3", if r.h3_rank == 0 { "0".into() } else if r.h3_rank == 1 { "Z".into() } else { format!("Z^{}", r.h3_rank) }),
        ("signature", r.signature.to_string()),
        ("form", r.intersection_form.to_string()),
        ("einstein", if r.einstein_obstructed { "obstructed".into() } else { "not obstructed".into() }),
    ];
    if let Some(s) = &r.scalar_sign {
        rows.push(("scalar_sign", format!("{} ({})", s.sign, s.quantity)));
    }
    rows.iter().map(|(k, v)| format!("{k:<12}{v}\n")).collect()
}

fn cmd_invariants(a: &InvariantsArgs) -> Result<String, CliError> {
    let spec = load_source(&a.source)?;
    if a.emit_spec {
        return Ok(to_json(&spec));
    }
    let report = invariants(&spec.decomposition, spec.intersection_form, a.dim)?;
    match a.format {
        Format::Json => Ok(to_json(&report)),
        Format::Table => Ok(report_table(&report)),
        Format::Csv => Err(CliError::input("invariants supports --format json or table")),
    }
}

/// Parses `g=1..10,n=2..4`; a single value `g=3` is allowed.
pub fn parse_ranges(s: &str) -> Result<(Vec<u32>, Vec<u32>), CliError> {
    let mut gs = (1..=10).collect();
    let mut ns = (1..=10).collect();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, val) = part.split_once('=').ok_or_else(|| CliError::input(format!("bad range {part:?}, expected key=lo..hi")))?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| CliError::input(format!("bad number {t:?} in {part:?}")));
        let (lo, hi) = match val.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
            None => (num(val)?, num(val)?),
        };
        if lo < 1 || hi < lo {
            return Err(CliError::input(format!("empty or nonpositive range {part:?}")));
        }
        let vals: Vec<u32> = (lo..=hi).collect();
        match key.trim() {
            "g" => gs = vals,
            "n" => ns = vals,
            k => return Err(CliError::input(format!("unknown parameter {k:?}"))),
        }
    }
    Ok((gs, ns))
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn cmd_family_table(a: &FamilyTableArgs) -> Result<String, CliError> {
    let family: Family = a.family.parse()?;
    let (gs, ns) = parse_ranges(&a.range)?;
    let rows = sweep(family, &gs, &ns)?;
    let mono = monotonicity(&rows);
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Table<'a> {
                family: &'a str,
                rows: &'a [SweepRow],
                monotonicity: crate::families::Monotonicity,
            }
            Ok(to_json(&Table { family: family.name(), rows: &rows, monotonicity: mono }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["g", "n", "b1", "b2", "chi", "torsion", "einstein_obstructed", "matches_closed_forms"])?;
            for r in &rows {
                let tors: Vec<String> = r.torsion.iter().map(u64::to_string).collect();
                w.write_record([
                    opt(r.g),
                    opt(r.n),
                    r.b1.to_string(),
                    r.b2.to_string(),
                    r.chi.to_string(),
                    tors.join(" "),
                    r.einstein_obstructed.to_string(),
                    r.matches_closed_forms.to_string(),
                ])?;
            }
            Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::input(e.to_string()))?).expect("utf8"))
        }
        Format::Table => {
            let mut out = format!("{:>3} {:>3} {:>4} {:>4} {:>6}  {:<10} {:<9} {}\n", "g", "n", "b1", "b2", "chi", "torsion", "einstein", "closed");
            for r in &rows {
                let tors = if r.torsion.is_empty() {
                    "-".to_string()
                } else {
                    r.torsion.iter().map(|t| format!("Z_{t}")).collect::<Vec<_>>().join("+")
                };
                out += &format!(
                    "{:>3} {:>3} {:>4} {:>4} {:>6}  {:<10} {:<9} {}\n",
                    opt(r.g),
                    opt(r.n),
                    r.b1,
                    r.b2,
                    r.chi,
                    tors,
                    if r.einstein_obstructed { "yes" } else { "no" },
                    if r.matches_closed_forms { "ok" } else { "MISMATCH" }
                );
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            out += &format!("# chi strictly decreasing: {}\n", yn(mono.chi_strictly_decreasing));
            out += &format!("# b1 strictly increasing: {}\n", yn(mono.b1_strictly_increasing));
            out += &format!("# einstein obstructed exactly when chi < 0: {}\n", yn(mono.einstein_flag_consistent));
            Ok(out)
        }
    }
}

fn apply_combination(group: &GroupSpec, c: Combination, base: &Path) -> Result<GroupSpec, CliError> {
    match c {
        Combination::First { with, shared, separator, b1, b2, depth } => {
            let other: GroupSpec = read_json(&base.join(with))?;
            Ok(first_combination(group, &other, &shared, separator, b1, b2, depth)?)
        }
        Combination::Second { h1, h2, f, b1, b2, label, depth } => Ok(second_combination(group, &h1, &h2, f, b1, b2, label, depth)?),
    }
}

fn cmd_group(c: &GroupCommand, stderr: &mut dyn Write) -> Result<String, CliError> {
    match c {
        GroupCommand::Build(a) => {
            let mut g: GroupSpec = read_json(&a.spec)?;
            for path in &a.combine {
                let comb: Combination = read_json(path)?;
                let base = path.parent().unwrap_or(Path::new("."));
                g = apply_combination(&g, comb, base).inspect_err(|e| {
                    let _ = writeln!(stderr, "{}: {}", path.display(), e.message);
                })?;
            }
            if let Some(t) = &a.twist {
                let label: Label = t[0].parse().map_err(|e| CliError::input(format!("twist label: {e}")))?;
                let p: i64 = t[1].parse().map_err(|_| CliError::input(format!("twist p: bad integer {:?}", t[1])))?;
                let q: i64 = t[2].parse().map_err(|_| CliError::input(format!("twist q: bad integer {:?}", t[2])))?;
                let lambda = match a.lambda {
                    Some(l) => l,
                    None => g.transform(&label)?.multiplier().map_err(KleinianError::from)?.norm(),
                };
                g = complex_twist(&g, &label, p, q, lambda, None)?;
            }
            Ok(to_json(&g))
        }
        GroupCommand::Schottky { genus, holes, radius, spacing } => {
            Ok(to_json(&fuchsian_schottky(*genus, *holes, SchottkyLayout { radius: *radius, spacing: *spacing })?))
        }
        GroupCommand::Panelled { depth } => Ok(to_json(&panelled::panelled_group(*depth)?)),
    }
}

fn check_depth(depth: usize, cap: usize) -> Result<(), CliError> {
    if depth > cap {
        return Err(CliError::input(format!("depth {depth} exceeds the cap {cap} (raise --depth-cap to allow it)")));
    }
    Ok(())
}

fn sample_group(path: &Path, depth: usize, cap: usize, tau: f64, stderr: &mut dyn Write) -> Result<Vec<ComplexPoint>, CliError> {
    check_depth(depth, cap)?;
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(CliError::input(format!("--tau must be positive, got {tau}")));
    }
    let g: GroupSpec = read_json(path)?;
    let s = limit_set_sample_with(&g, depth, None, tau);
    if s.elementary {
        let _ = writeln!(stderr, "warning: group is elementary; its limit set has at most two points");
    }
    Ok(s.points)
}

fn write_out(text: &[u8], out: &Option<PathBuf>) -> Result<Option<Vec<u8>>, CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text.to_vec())),
    }
}

#[derive(Serialize)]
struct DimensionReport {
    #[serde(flatten)]
    estimate: Option<DimensionEstimate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scalar_sign: Option<ScalarSign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<ThresholdHint>,
}

fn cmd_dimension(a: &DimensionArgs, stderr: &mut dyn Write) -> Result<String, CliError> {
    let (estimate, d) = match (&a.input, &a.group, a.d) {
        (_, _, Some(d)) => (None, d),
        (Some(path), None, None) => {
            let pts = read_csv(read_text(path)?.as_bytes()).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            let e = box_counting_dimension(&pts, &ScaleLadder { count: a.scales, ratio: a.ratio, largest: a.largest })?;
            let d = e.d;
            (Some(e), d)
        }
        (None, Some(path), None) => {
            let pts = sample_group(path, a.depth.expect("required by clap"), a.depth_cap, a.tau, stderr)?;
            let e = box_counting_dimension(&pts, &ScaleLadder { count: a.scales, ratio: a.ratio, largest: a.largest })?;
            let d = e.d;
            (Some(e), d)
        }
        _ => return Err(CliError::input("give one of --in, --group with --depth, or --d")),
    };
    let direct = estimate.is_none().then_some(d);
    let (scalar_sign, threshold) = if a.sign { (Some(scalar_sign(d, a.n)?), Some(dimension_threshold_check(d))) } else { (None, None) };
    Ok(to_json(&DimensionReport { estimate, d: direct, scalar_sign, threshold }))
}

/// Runs one parsed invocation. Returns the bytes for stdout.
pub fn execute(cli: &Cli, stderr: &mut dyn Write) -> Result<Vec<u8>, CliError> {
    let text = match &cli.command {
        Command::Invariants(a) => cmd_invariants(a)?,
        Command::FamilyTable(a) => cmd_family_table(a)?,
        Command::Group(c) => cmd_group(c, stderr)?,
        Command::Limitset(a) => {
            let pts = sample_group(&a.group, a.depth, a.depth_cap, a.tau, stderr)?;
            let mut buf = Vec::new();
            write_csv(&pts, &mut buf)?;
            return Ok(write_out(&buf, &a.out)?.unwrap_or_default());
        }
        Command::Dimension(a) => cmd_dimension(a, stderr)?,
        Command::Presentation(a) => format!("{}\n", presentation_of(&load_source(a)?.decomposition)?),
    };
    Ok(text.into_bytes())
}

/// Parses `args`, runs, and writes to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, stderr) {
        Ok(bytes) => {
            let _ = stdout.write_all(&bytes);
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["panelweb"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        let (g, n) = parse_ranges("g=2..4,n=3").unwrap();
        assert_eq!((g, n), (vec![2, 3, 4], vec![3]));
        assert_eq!(parse_ranges("").unwrap().0.len(), 10);
        assert!(parse_ranges("g=4..2").is_err());
        assert!(parse_ranges("k=1..2").is_err());
        assert!(parse_ranges("g=0..2").is_err());
    }

    #[test]
    fn invariants_table_and_json() {
        let (code, out, err) = run_str(&["invariants", "--family", "m1"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("chi         -4\n") && out.contains("H1          Z^4\n") && out.contains("form        H\n"), "{out}");
        let (_, json, _) = run_str(&["invariants", "--family", "m4n", "--n", "3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["chi"], -6);
    }

    #[test]
    fn bad_inputs_exit_two() {
        assert_eq!(run_str(&["invariants", "--family", "m9"]).0, 2);
        assert_eq!(run_str(&["invariants", "--family", "m1", "--g", "3"]).0, 2);
        assert_eq!(run_str(&["invariants"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        let (code, out, err) = run_str(&["limitset", "--group", "/nonexistent.json", "--depth", "3"]);
        assert_eq!((code, out.is_empty()), (2, true));
        assert!(err.starts_with("error: "));
        assert_eq!(run_str(&["limitset", "--group", "x.json", "--depth", "11"]).0, 2);
    }

    #[test]
    fn dimension_direct_sign() {
        let (code, out, _) = run_str(&["dimension", "--d", "1.2", "--sign"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["scalar_sign"]["sign"], "negative");
        assert_eq!(v["d"], 1.2);
    }

    #[test]
    fn presentation_of_m1() {
        let (code, out, _) = run_str(&["presentation", "--family", "m1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("⟨a, b, c, d, e, f | "), "{out}");
    }
}
