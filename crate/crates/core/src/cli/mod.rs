//! The `shiftkit` command line: `shift`, `op`, `verify` and `explore`.
//!
//! Exit codes: 0 on success, 1 on parse or usage errors, 2 when a generic
//! shift fails validation or a verification suite finds a violation.

mod explore;
mod format;
pub mod random;
mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use explore::{explore, ExploreInstance, ExploreReport, Outcome};
pub use format::{parse_complex, parse_matrix, print_complex};
pub use report::{ComplexReport, InstanceReport, SuiteReport, SCHEMA};
pub use suites::{run_suite, Suite, SuiteConfig};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{MatrixSpec, PrimeField, DEFAULT_PRIME};
use crate::operators::{
    antistar, clique_sum_shift, combine, disjoint_union_shift, intersection, lex_compare, link, near_cone_analyze,
    shifted_union_recursive, Construction,
};
use crate::par::ExecMode;
use crate::shift::{exterior_shift_with, ShiftOptions, DEFAULT_SEED};

/// Largest `--max-n` accepted by `verify` and `explore` without `--no-cap`.
pub const MAX_N_CAP: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "shiftkit", version, about = "Exterior algebraic shifting of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Seed for the generic matrix (and for random instances).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Prime modulus of the coefficient field.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Print a JSON report instead of a table.
    #[arg(long)]
    json: bool,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime)
    }

    fn exec(&self) -> ExecMode {
        if self.sequential {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shift a complex read from a facet file (`-` for stdin).
    Shift {
        file: PathBuf,
        /// `generic`, `block:<k>,<l>` or `explicit:<file>`.
        #[arg(long, default_value = "generic")]
        matrix: String,
        /// Print the shifted complex as a facet file.
        #[arg(long)]
        emit_complex: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a construction or a combinatorial shifting formula.
    Op {
        kind: OpKind,
        files: Vec<PathBuf>,
        /// Face for `link` and `antistar`, e.g. "1 3".
        #[arg(long)]
        face: Option<String>,
        /// Dimension of the shared simplex for `clique-sum`.
        #[arg(long, allow_hyphen_values = true)]
        dim: Option<isize>,
        #[arg(long)]
        emit_complex: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Allow `--max-n` above the default cap.
        #[arg(long)]
        no_cap: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare Δ(ΣK) with Δ(ΣΔK) on random complexes.
    Explore {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        no_cap: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    DisjointUnion,
    Union,
    Intersection,
    Join,
    Cone,
    Suspension,
    Link,
    Antistar,
    Betti,
    /// `K ⊔ L` by the recursion on links and antistars of vertex 1.
    Sqcup,
    /// `Δ(K ∪̇ L)` by the gap test.
    GapUnion,
    /// `Δ(K ∪_σ L)` by the gap test with a shared `--dim`-simplex.
    CliqueSum,
    NearCone,
    LexCompare,
}

impl OpKind {
    fn arity(self) -> usize {
        match self {
            OpKind::DisjointUnion
            | OpKind::Union
            | OpKind::Intersection
            | OpKind::Join
            | OpKind::Sqcup
            | OpKind::GapUnion
            | OpKind::CliqueSum
            | OpKind::LexCompare => 2,
            _ => 1,
        }
    }

    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit arguments and output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                1
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ValidationFailed { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&read_input(path)?)
}

/// Parses the `--matrix` flag.
pub fn parse_matrix_flag(flag: &str, seed: u64, field: PrimeField) -> Result<MatrixSpec> {
    if flag == "generic" {
        return Ok(MatrixSpec::Generic { seed });
    }
    if let Some(sizes) = flag.strip_prefix("block:") {
        let parts: Vec<&str> = sizes.split(',').collect();
        let parsed: Vec<usize> = parts.iter().filter_map(|p| p.trim().parse().ok()).collect();
        if parts.len() != 2 || parsed.len() != 2 {
            return Err(Error::Usage(format!("expected block:<k>,<l>, got {flag:?}")));
        }
        return Ok(MatrixSpec::BlockGeneric { upper: parsed[0], lower: parsed[1], seed });
    }
    if let Some(path) = flag.strip_prefix("explicit:") {
        let entries = parse_matrix(&read_input(Path::new(path))?, field)?;
        return Ok(MatrixSpec::Explicit { entries });
    }
    Err(Error::Usage(format!("unknown matrix kind {flag:?}")))
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, table: impl FnOnce() -> String) -> Result<()> {
    let text = if json { serde_json::to_string_pretty(value).expect("serializable") + "\n" } else { table() };
    out.write_all(text.as_bytes()).map_err(|e| Error::Usage(e.to_string()))
}

fn emit_report(out: &mut dyn Write, common: &Common, emit_complex: bool, k: &SimplicialComplex, report: &ComplexReport) -> Result<()> {
    if emit_complex {
        return out.write_all(print_complex(k).as_bytes()).map_err(|e| Error::Usage(e.to_string()));
    }
    emit(out, common.json, report, || report.to_table())
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Shift { file, matrix, emit_complex, common } => {
            let start = Instant::now();
            let field = common.field()?;
            let k = read_complex(&file)?;
            let spec = parse_matrix_flag(&matrix, common.seed, field)?;
            let opts = ShiftOptions { field, exec: common.exec(), ..ShiftOptions::default() };
            let res = exterior_shift_with(&k, &spec, &opts)?;
            let mut report = ComplexReport::new("shift", &res.shifted, field)
                .with_extra("matrix", json!(spec_label(&res.spec_used)));
            report.seed = res.seed_used;
            report.validated = Some(res.validated);
            report.retries = res.retries;
            report.timing_ms = elapsed_ms(start);
            emit_report(out, &common, emit_complex, &res.shifted, &report)?;
            Ok(0)
        }
        Command::Op { kind, files, face, dim, emit_complex, common } => {
            let start = Instant::now();
            let field = common.field()?;
            if files.len() != kind.arity() {
                return Err(Error::Usage(format!(
                    "op {} takes {} file(s), got {}",
                    kind.name(),
                    kind.arity(),
                    files.len()
                )));
            }
            let operands = files.iter().map(|f| read_complex(f)).collect::<Result<Vec<_>>>()?;
            let (result, extra) = run_op(kind, &operands, face.as_deref(), dim)?;
            let mut report = ComplexReport::new(&format!("op {}", kind.name()), &result, field);
            for (key, value) in extra {
                report = report.with_extra(key, value);
            }
            report.timing_ms = elapsed_ms(start);
            emit_report(out, &common, emit_complex, &result, &report)?;
            Ok(0)
        }
        Command::Verify { suite, trials, max_n, no_cap, common } => {
            let max_n = checked_max_n(max_n.unwrap_or(suite.default_max_n()), no_cap)?;
            let cfg = SuiteConfig {
                trials: trials.unwrap_or(suite.default_trials()),
                max_n,
                seed: common.seed,
                field: common.field()?,
                exec: common.exec(),
            };
            let report = run_suite(suite, &cfg);
            emit(out, common.json, &report, || report.to_table())?;
            Ok(if report.passed { 0 } else { 2 })
        }
        Command::Explore { trials, max_n, no_cap, common } => {
            let max_n = checked_max_n(max_n, no_cap)?;
            let report = explore(trials, max_n, common.seed, common.field()?, common.exec())?;
            emit(out, common.json, &report, || report.to_table())?;
            Ok(0)
        }
    }
}

fn checked_max_n(max_n: usize, no_cap: bool) -> Result<usize> {
    if max_n > MAX_N_CAP && !no_cap {
        return Err(Error::Usage(format!("--max-n {max_n} exceeds {MAX_N_CAP}; pass --no-cap to allow it")));
    }
    Ok(max_n)
}

fn spec_label(spec: &MatrixSpec) -> String {
    match spec {
        MatrixSpec::Generic { .. } => "generic".into(),
        MatrixSpec::BlockGeneric { upper, lower, .. } => format!("block:{upper},{lower}"),
        MatrixSpec::Explicit { .. } => "explicit".into(),
    }
}

type Extra = Vec<(&'static str, serde_json::Value)>;

fn parse_face(text: Option<&str>) -> Result<Face> {
    let text = text.ok_or_else(|| Error::Usage("this op needs --face".into()))?;
    let labels = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::Usage(format!("bad vertex label {t:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    Face::new(labels)
}

fn run_op(kind: OpKind, ks: &[SimplicialComplex], face: Option<&str>, dim: Option<isize>) -> Result<(SimplicialComplex, Extra)> {
    let k = &ks[0];
    let l = ks.get(1);
    let construction = |c: Construction| combine(&c, k, l);
    let out = match kind {
        OpKind::DisjointUnion => construction(Construction::DisjointUnion)?,
        OpKind::Union => construction(Construction::Union)?,
        OpKind::Intersection => intersection(k, l.unwrap()),
        OpKind::Join => construction(Construction::Join)?,
        OpKind::Cone => construction(Construction::Cone)?,
        OpKind::Suspension => construction(Construction::Suspension)?,
        OpKind::Link => link(parse_face(face)?, k)?,
        OpKind::Antistar => antistar(parse_face(face)?, k)?,
        OpKind::Betti => {
            let method = if k.is_shifted() { "shifted" } else { "direct" };
            return Ok((k.clone(), vec![("betti_method", json!(method))]));
        }
        OpKind::Sqcup => shifted_union_recursive(k, l.unwrap())?,
        OpKind::GapUnion => disjoint_union_shift(k, l.unwrap(), k.n() + l.unwrap().n())?,
        OpKind::CliqueSum => {
            let d = dim.ok_or_else(|| Error::Usage("clique-sum needs --dim".into()))?;
            let l = l.unwrap();
            let n = (k.n() + l.n()).saturating_sub((d + 1).max(0) as usize);
            clique_sum_shift(k, l, d, n)?
        }
        OpKind::NearCone => {
            let value = match near_cone_analyze(k) {
                Ok(cert) => json!({ "apexes": cert.apexes, "blocked_at": cert.blocked_at }),
                Err(refusal) => json!({ "refused_at": refusal.level }),
            };
            return Ok((k.clone(), vec![("near_cone", value)]));
        }
        OpKind::LexCompare => {
            let order = lex_compare(k, l.unwrap());
            return Ok((k.clone(), vec![("order", json!(order))]));
        }
    };
    Ok((out, Vec::new()))
}
