use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wradius_core::radius::{default_tolerance, numerical_radius};
use wradius_core::BlockOperatorMatrix;
use wradius_harness::catalogue::{evaluate, resolve, Selection};
use wradius_harness::error::exit;
use wradius_harness::fixtures;
use wradius_harness::report::{EnclosureJson, InputDescriptor};
use wradius_harness::verify::verify;
use wradius_harness::{
    EnsembleKind, EnsembleSpec, Format, HarnessError, MatrixFile, Report, Result,
};

/// Numerical radius enclosures and upper bounds.
#[derive(Debug, Parser)]
#[command(name = "wradius", version)]
struct Cli {
    /// Output format: json or md.
    #[arg(long, global = true, default_value = "json")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certified enclosure of w(A).
    Radius {
        path: PathBuf,
        /// Enclosure width; defaults to 1e-8·(1+‖A‖).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Bound report against the certified w(A).
    Bounds {
        path: PathBuf,
        /// Comma-separated bound names, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Parameter for t-families.
        #[arg(long, conflicts_with = "min_t")]
        t: Option<f64>,
        /// Use min-over-t variants where they exist.
        #[arg(long)]
        min_t: bool,
        /// Read a dense file as a block matrix with this block size.
        #[arg(long)]
        block_dim: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Check invariants on a seeded random ensemble.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// gaussian, nilpotent, normal, positive or shift.
        #[arg(default_value = "gaussian")]
        ensemble: String,
    },
    /// Recompute the published values on the bundled fixtures.
    Reproduce,
}

fn load(path: &Path, block_dim: Option<usize>) -> Result<MatrixFile> {
    let file = MatrixFile::read(path)?;
    match (file, block_dim) {
        (MatrixFile::Dense(m), Some(d)) => {
            Ok(MatrixFile::Block(BlockOperatorMatrix::from_flat(&m, d)?))
        }
        (MatrixFile::Block(_), Some(_)) => Err(HarnessError::Usage(
            "--block-dim applies to dense files only".into(),
        )),
        (file, None) => Ok(file),
    }
}

fn descriptor(path: &Path, file: &MatrixFile) -> InputDescriptor {
    let m = file.matrix();
    let (n, d) = match file {
        MatrixFile::Block(b) => (Some(b.n()), Some(b.d())),
        MatrixFile::Dense(_) => (None, None),
    };
    InputDescriptor {
        source: path.display().to_string(),
        kind: file.kind(),
        rows: m.rows(),
        cols: m.cols(),
        n,
        d,
    }
}

fn run(cli: Cli) -> Result<(String, u8)> {
    let format: Format = cli.format.parse()?;
    match cli.command {
        Command::Radius { path, tol } => {
            let m = load(&path, None)?.matrix();
            m.ensure_square()?;
            let tol = tol.unwrap_or_else(|| default_tolerance(&m));
            let e = EnclosureJson::from(numerical_radius(&m, tol)?);
            let text = match format {
                Format::Json => serde_json::to_string(&e).expect("serializes") + "\n",
                Format::Markdown => format!(
                    "| lo | hi | kind |\n|---:|---:|---|\n| {:.15} | {:.15} | {} |\n",
                    e.lo, e.hi, e.kind
                ),
            };
            Ok((text, exit::OK))
        }
        Command::Bounds {
            path,
            bounds,
            t,
            min_t,
            block_dim,
            tol,
        } => {
            let file = load(&path, block_dim)?;
            let sel = Selection::parse(&bounds, t, min_t)?;
            let ids = resolve(&file, &sel)?;
            let m = file.matrix();
            m.ensure_square()?;
            let tol = tol.unwrap_or_else(|| default_tolerance(&m));
            let w = numerical_radius(&m, tol)?;
            let results = evaluate(&file, &ids)?;
            let report = Report::new(descriptor(&path, &file), w, tol, &results);
            let unsound = report.unsound_rows();
            if !unsound.is_empty() {
                for r in &unsound {
                    eprintln!(
                        "soundness violation: {} = {} below w = {}",
                        r.bound, r.value, w
                    );
                }
                return Ok((report.render(format), exit::VIOLATION));
            }
            Ok((report.render(format), exit::OK))
        }
        Command::Verify {
            seed,
            count,
            n,
            d,
            ensemble,
        } => {
            let kind: EnsembleKind = ensemble.parse()?;
            let spec = EnsembleSpec::new(seed, count, n, d, kind)?.with_env_seed()?;
            let summary = verify(&spec)?;
            for v in &summary.violations {
                eprintln!(
                    "violation: instance {} of seed {}: {}: {}\n{}",
                    v.instance, v.seed, v.property, v.detail, v.matrix
                );
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&summary).expect("serializes") + "\n",
                Format::Markdown => summary.render_markdown(),
            };
            let code = if summary.passed() {
                exit::OK
            } else {
                exit::VIOLATION
            };
            Ok((text, code))
        }
        Command::Reproduce => {
            let rows = fixtures::reproduce()?;
            for r in rows.iter().filter(|r| !r.pass) {
                eprintln!(
                    "mismatch: {} on {}: expected {}, computed {}, diff {:e} > {:e}",
                    r.bound, r.fixture, r.expected, r.computed, r.diff, r.tolerance
                );
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&rows).expect("serializes") + "\n",
                Format::Markdown => fixtures::render_markdown(&rows),
            };
            let code = if rows.iter().all(|r| r.pass) {
                exit::OK
            } else {
                exit::VIOLATION
            };
            Ok((text, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("wradius: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
