//! Command-line interface: analyze, mesh, profile, optimize, verify.
//!
//! Exit codes: 0 success, 1 validation/runtime failure, 2 usage error
//! (from argument parsing), 3 property violation found by `verify`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cwrev::config::{parse_config, BodyConfig};
use cwrev::error::{Error, Result};
use cwrev::export;
use cwrev::functionals;
use cwrev::mesh;
use cwrev::profile::Body;
use cwrev::search::{self, SearchOptions};
use cwrev::verify;

#[derive(Parser)]
#[command(
    name = "cwrev",
    version,
    about = "Constant-width bodies of revolution: analysis, meshing, and deficit minimization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print w0, F, V, A and I for the body described by a JSON config.
    Analyze {
        /// Path to the JSON body config.
        config: PathBuf,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Tessellate the body and write an STL or OBJ mesh.
    Mesh {
        config: PathBuf,
        /// Latitude bands of the grid.
        #[arg(long, default_value_t = 128)]
        nt: usize,
        /// Meridians of the grid.
        #[arg(long, default_value_t = 128)]
        ntheta: usize,
        /// Output file.
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = MeshFormat::Stl)]
        format: MeshFormat,
    },
    /// Sample the generating curve to CSV (or an SVG outline with --svg).
    Profile {
        config: PathBuf,
        /// Number of samples on [-pi/2, pi/2].
        #[arg(short = 'n', long = "samples", default_value_t = 257)]
        samples: usize,
        #[arg(short, long)]
        output: PathBuf,
        /// Write an SVG outline of the closed curve instead of CSV.
        #[arg(long)]
        svg: bool,
    },
    /// Minimize the deficit over profiles with K interior breakpoints.
    Optimize {
        #[arg(long)]
        k: usize,
        /// Number of random restarts.
        #[arg(long, default_value_t = 32)]
        seeds: usize,
        /// RNG seed (overrides CWREV_SEED and the built-in default).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the property battery; exits 3 if any violation is found.
    Verify {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeshFormat {
    Stl,
    Obj,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("CWREV_SEED") {
        Ok(text) => text.parse().map_err(|_| Error::Config {
            message: format!("CWREV_SEED must be an unsigned integer (got {text:?})"),
        }),
        Err(_) => Ok(cwrev::DEFAULT_SEED),
    }
}

fn load_body(path: &PathBuf) -> Result<(BodyConfig, Body)> {
    let text = std::fs::read_to_string(path)?;
    let config = parse_config(&text)?;
    let body = config.body()?;
    Ok((config, body))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { config, json } => {
            let (_, body) = load_body(&config)?;
            let report = functionals::report(&body);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                println!("w      = {:.9}", report.half_width);
                println!("w0     = {:.9}", report.critical_half_width);
                println!("F      = {:.9}", report.deficit);
                println!("V      = {:.9}", report.volume);
                println!("A      = {:.9}", report.area);
                println!("I      = {:.9}", report.ratio);
                println!("method = {}", report.method);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mesh {
            config,
            nt,
            ntheta,
            output,
            format,
        } => {
            let (_, body) = load_body(&config)?;
            let mesh = mesh::tessellate(&body, nt, ntheta)?;
            let mut sink = BufWriter::new(File::create(&output)?);
            match format {
                MeshFormat::Stl => export::write_stl(&mesh, &mut sink)?,
                MeshFormat::Obj => export::write_obj(&mesh, &mut sink)?,
            }
            sink.flush()?;
            println!(
                "wrote {} ({} vertices, {} triangles, signed volume {:.9})",
                output.display(),
                mesh.vertices.len(),
                mesh.triangles.len(),
                mesh.signed_volume()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile {
            config,
            samples,
            output,
            svg,
        } => {
            let (_, body) = load_body(&config)?;
            let mut sink = BufWriter::new(File::create(&output)?);
            if svg {
                export::write_profile_svg(&body, samples, &mut sink)?;
            } else {
                export::write_profile_csv(&body, samples, &mut sink)?;
            }
            sink.flush()?;
            println!("wrote {}", output.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Optimize {
            k,
            seeds,
            seed,
            json,
        } => {
            let options = SearchOptions {
                breakpoints: k,
                seeds,
                rng_seed: resolve_seed(seed)?,
                leading_sign: 1.0,
            };
            let result = search::minimize(&options)?;
            // ratio of the best profile at its minimizing width w = w0 = 1
            let best_ratio = 1.0 + 3.0 * result.best_deficit;
            if json {
                let trace: Vec<serde_json::Value> = result
                    .trace
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "breakpoints": e.breakpoints,
                            "deficit": e.deficit,
                            "interior": e.interior,
                        })
                    })
                    .collect();
                let out = serde_json::json!({
                    "k": k,
                    "seeds": seeds,
                    "seed": options.rng_seed,
                    "converged": result.converged,
                    "best_deficit": result.best_deficit,
                    "best_ratio": best_ratio,
                    "best_breakpoints": result.best.breakpoints(),
                    "best_leading_sign": result.best.leading_sign(),
                    "trace": trace,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("result serializes")
                );
            } else {
                println!("k         = {k}");
                println!("seeds     = {seeds} (rng seed {})", options.rng_seed);
                println!("converged = {}", result.converged);
                println!("best F    = {:.9}", result.best_deficit);
                println!("best I    = {best_ratio:.9} (at w = w0)");
                for (i, tau) in result.best.breakpoints().iter().enumerate() {
                    println!("tau_{}     = {:.9}", i + 1, tau);
                }
                let interior = result.trace.iter().filter(|e| e.interior).count();
                println!(
                    "trace     = {} endpoints ({} interior)",
                    result.trace.len(),
                    interior
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            samples,
            seed,
            json,
        } => {
            let outcomes = verify::run_all(samples, resolve_seed(seed)?);
            let violations: usize = outcomes.iter().map(|o| o.violations).sum();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcomes).expect("outcomes serialize")
                );
            } else {
                for o in &outcomes {
                    println!(
                        "{:<12} samples={} violations={} worst_residual={:.3e} elapsed={:.2}s",
                        o.id, o.samples, o.violations, o.worst_residual, o.elapsed_secs
                    );
                }
            }
            if violations > 0 {
                eprintln!("property violations detected: {violations}");
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
