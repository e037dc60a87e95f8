//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a parse or validation error (message on
//! the error stream), 2 when a verification command ran but the property
//! it checks does not hold.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::forms::{self, SymForm};
use crate::handles;
use crate::io as fmt_io;
use crate::projection::{self, LiftAssignment, ProjectionExpr, DEFAULT_MU};
use crate::seifert::{KnotModel, SeifertMatrix};
use crate::spin;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FALSE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hdknot", version, about = "Invariants of high-dimensional knots and their projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical Alexander polynomial of a Seifert matrix.
    Alex { file: PathBuf },
    /// Print the signature of a Seifert matrix (odd k) or a form.
    Sig { file: PathBuf },
    /// Block sum of two Seifert matrices.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seifert matrix of the reversed mirror image.
    Mirror {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spin a knot and print the invariants carried along.
    Spin {
        /// Start from a Seifert matrix.
        #[arg(long, conflicts_with = "proj", required_unless_present = "proj")]
        seifert: Option<PathBuf>,
        /// Assert the Seifert hypersurface is simply connected.
        #[arg(long, requires = "seifert")]
        simple: bool,
        /// Start from the lift (all-plus assignment) of a projection.
        #[arg(long)]
        proj: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MU)]
        mu: usize,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// List lifts of a projection with their invariants.
    Lifts {
        file: PathBuf,
        /// Report the lifts as assignment classes.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MU)]
        mu: usize,
    },
    /// Write a projection all of whose lifts have signature 16r.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MU)]
        mu: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal list of sign-adjusting moves for a disk system.
    Adjust { file: PathBuf },
    /// Per-disk framings.
    Framing {
        file: PathBuf,
        /// Report framings after applying the minimal adjustment.
        #[arg(long)]
        adjusted: bool,
    },
    /// Check a form (or framed link) against the Kummer invariants.
    VerifyKummer { file: Option<PathBuf> },
    /// Decide liftability of an immersed sphere expression.
    Liftable { file: PathBuf },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

type CmdResult = Result<i32, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load<T, E: std::fmt::Display>(path: &Path, parse: impl Fn(&str) -> Result<T, E>) -> Result<T, String> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), String> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| e.to_string())?
    };
}

fn header_of(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
}

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Alex { file } => {
            let s = load(&file, fmt_io::parse_seifert)?;
            say!(out, "{}", s.alexander());
            Ok(EXIT_OK)
        }
        Command::Sig { file } => {
            let text = read(&file)?;
            let sig = match header_of(&text) {
                Some("FORM") => fmt_io::parse_form(&text).map_err(|e| format!("{}: {e}", file.display()))?.signature(),
                Some("FRAMEDLINK") => fmt_io::parse_framed_link(&text)
                    .map_err(|e| format!("{}: {e}", file.display()))?
                    .intersection_form()
                    .signature(),
                _ => fmt_io::parse_seifert(&text)
                    .map_err(|e| format!("{}: {e}", file.display()))?
                    .signature()
                    .map_err(|e| e.to_string())?,
            };
            say!(out, "{sig}");
            Ok(EXIT_OK)
        }
        Command::Sum { first, second, output } => {
            let a = load(&first, fmt_io::parse_seifert)?;
            let b = load(&second, fmt_io::parse_seifert)?;
            let s = a.connected_sum(&b).map_err(|e| e.to_string())?;
            emit(&fmt_io::render_seifert(&s), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Mirror { file, output } => {
            let s = load(&file, fmt_io::parse_seifert)?;
            emit(&fmt_io::render_seifert(&s.mirror_reverse()), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Spin { seifert, simple, proj, mu, times } => {
            let start = match (seifert, proj) {
                (Some(path), _) => {
                    let s: SeifertMatrix = load(&path, fmt_io::parse_seifert)?;
                    let simple = simple || s.size() == 0;
                    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                    KnotModel::from_seifert(s, simple, label)
                }
                (None, Some(path)) => {
                    let p = load(&path, |t| fmt_io::parse_proj_with_mu(t, mu))?;
                    p.lift(&LiftAssignment::all_plus(p.mu())).map_err(|e| e.to_string())?
                }
                (None, None) => return Err("one of --seifert or --proj is required".into()),
            };
            let k = spin::spin_times(&start, times).map_err(|e| e.to_string())?;
            say!(out, "{k}");
            let knotted = match projection::knottedness(&k) {
                Some(true) => "yes",
                Some(false) => "no",
                None => "unknown",
            };
            say!(out, "knotted={knotted}");
            Ok(EXIT_OK)
        }
        Command::Lifts { file, classify, sample, seed, mu } => {
            let p = load(&file, |t| fmt_io::parse_proj_with_mu(t, mu))?;
            lifts_report(&p, classify, sample, seed, out)?;
            Ok(EXIT_OK)
        }
        Command::Realize { r, output, mu, sample, seed } => {
            let p = projection::realize_signature_with_mu(r, mu);
            let report = p.classify_lifts(sample, seed).map_err(|e| e.to_string())?;
            let want = 16 * r;
            let certified =
                report.classes.iter().all(|c| c.invariants.sigma == Some(want) && c.invariants.knotted == Some(true))
                    && p.singular_components().iter().all(|c| c.double_points_only);
            emit(&fmt_io::render_proj(&p), output.as_deref(), out)?;
            if output.is_some() {
                say!(out, "{p}");
            }
            say!(out, "mu={}", p.mu());
            say!(
                out,
                "sigma={want} certified={} over {} {} lifts",
                if certified { "yes" } else { "no" },
                report.classes.len(),
                if report.exhaustive { "enumerated" } else { "sampled" }
            );
            Ok(if certified { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Adjust { file } => {
            let ds = load(&file, fmt_io::parse_disks)?;
            let moves = handles::adjust_to_targets(&ds);
            say!(out, "moves={}", moves.len());
            for m in &moves {
                say!(out, "{m}");
            }
            Ok(EXIT_OK)
        }
        Command::Framing { file, adjusted } => {
            let mut ds = load(&file, fmt_io::parse_disks)?;
            if adjusted {
                ds = ds.apply(&handles::adjust_to_targets(&ds)).map_err(|e| e.to_string())?;
            }
            for (i, f) in ds.framings().iter().enumerate() {
                say!(out, "disk {}: {f}", i + 1);
            }
            Ok(EXIT_OK)
        }
        Command::VerifyKummer { file } => {
            let form: SymForm = match file {
                None => forms::kummer_form(),
                Some(path) => {
                    let text = read(&path)?;
                    let parsed = if header_of(&text) == Some("FRAMEDLINK") {
                        fmt_io::parse_framed_link(&text).map(|fl| fl.intersection_form())
                    } else {
                        fmt_io::parse_form(&text)
                    };
                    parsed.map_err(|e| format!("{}: {e}", path.display()))?
                }
            };
            let report = handles::verify_kummer(&form);
            say!(out, "{report}");
            Ok(if report.passed() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Liftable { file } => {
            let e = load(&file, fmt_io::parse_imm)?;
            let v = e.liftable().map_err(|e| e.to_string())?;
            say!(out, "{}", v.status);
            for r in &v.rules {
                say!(out, "  {r}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn lifts_report(
    p: &ProjectionExpr,
    classify: bool,
    sample: Option<usize>,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), String> {
    let dim = p.dimension().map_err(|e| e.to_string())?;
    let comps = p.singular_components();
    say!(out, "projection={p}");
    say!(out, "dimension={dim} mu={}", p.mu());
    let depth = comps.first().map(|c| c.to_string()).unwrap_or_default();
    say!(out, "singular components: {} x {depth}, double points only", comps.len());
    let report = p.classify_lifts(sample, seed).map_err(|e| e.to_string())?;
    let how = if report.exhaustive { "all" } else { "sampled" };
    if classify {
        say!(
            out,
            "{} {how} assignment classes (equal assignments give equivalent lifts; at most 2^{} distinct)",
            report.classes.len(),
            report.mu
        );
    } else {
        say!(out, "{} {how} lifts", report.classes.len());
    }
    for c in &report.classes {
        say!(out, "rho={} {}", c.rho, c.invariants);
    }
    say!(out, "invariants identical: {}", if report.all_invariants_identical() { "yes" } else { "no" });
    Ok(())
}
