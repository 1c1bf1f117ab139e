use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::core::{evaluate, Instance, ShiftVector};
use crate::error::Error;
use crate::generators::{random_instance, InstanceShape};
use crate::reductions::{check_gadget_lemmas, decode_cover, encode_vc, is_vertex_cover, ruler};
use crate::solvers::{
    solve_exact, solve_greedy, solve_oracle, verify_certificate, Certificate, SolveOptions, SolveResult,
    DEFAULT_GUARD_LIMIT,
};

use super::format::{parse_certificate, parse_graph, parse_instance, render_certificate, render_instance};
use super::report::{digest, DecodeReport, ReduceReport, RunReport, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "soapy", version, about = "Minimum soapy union solvers and reduction gadgets")]
struct Cli {
    /// Worker threads for enumeration (defaults to available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Oracle,
    Greedy,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        #[arg(long, value_enum, default_value = "exact")]
        algo: Algo,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GUARD_LIMIT)]
        guard_limit: u128,
        /// Oracle box radius (defaults to (|A|-1)(max U - min U)).
        #[arg(long)]
        radius: Option<i64>,
        /// Also write a certificate for the returned solution.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Encode a vertex-cover instance (graph file, budget) as an instance file.
    Reduce {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode a vertex cover of a graph from a solve report on its encoding.
    Decode {
        #[arg(short, long)]
        input: PathBuf,
        /// A JSON report produced by `solve` on the encoded instance.
        #[arg(long)]
        shifts: PathBuf,
        #[arg(short, default_value_t = 0)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against an instance.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Budget, overriding the certificate's `budget` line.
        #[arg(short)]
        k: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the ruler of order N.
    Ruler { n: usize },
    /// Check the gadget identities of the encoding of a graph file.
    CheckGadgets {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, default_value_t = 0)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every solver on a seeded random corpus and emit CSV.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_GUARD_LIMIT)]
        guard_limit: u128,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardLimit { .. } => EXIT_REJECTED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

/// Prints `value` as one JSON line on stdout and mirrors it to `output`.
fn emit<T: serde::Serialize>(stdout: &mut dyn Write, output: Option<&Path>, value: &T) -> Result<(), Failure> {
    let json = serde_json::to_string(value).expect("reports serialize");
    if let Some(path) = output {
        write_file(path, &format!("{json}\n"))?;
    }
    writeln!(stdout, "{json}").map_err(|e| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    })
}

/// Runs one command line. Reports go to `stdout`, summaries and errors to
/// `stderr`; the return value is the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn options(threads: Option<usize>, guard_limit: u128) -> SolveOptions {
    SolveOptions {
        guard_limit,
        threads,
        cancel: None,
    }
}

fn solve_with(algo: Algo, instance: &Instance, opts: &SolveOptions, radius: Option<i64>) -> crate::Result<SolveResult> {
    match algo {
        Algo::Exact => solve_exact(instance, opts),
        Algo::Oracle => solve_oracle(instance, radius, opts),
        Algo::Greedy => solve_greedy(instance),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let threads = cli.threads;
    match cli.command {
        Command::Solve {
            algo,
            input,
            guard_limit,
            radius,
            cert,
            output,
        } => {
            let text = read(&input)?;
            let instance = parse_instance(&text)?;
            let started = Instant::now();
            let result = solve_with(algo, &instance, &options(threads, guard_limit), radius)?;
            let report = RunReport::new(&instance, &text, &result, started.elapsed())?;
            if let Some(path) = cert {
                let certificate = match &result.certificate {
                    Some(tree) => Certificate::new(tree.clone(), result.value as u64),
                    None => Certificate::from_solution(&instance, &result.shifts, result.value as u64)?,
                };
                write_file(&path, &render_certificate(&certificate))?;
            }
            let _ = writeln!(
                stderr,
                "{}: value {} ({} candidates, {:.1} ms){}",
                result.method,
                report.value,
                report.explored,
                report.wall_ms,
                if report.optimal { ", optimal" } else { "" }
            );
            emit(stdout, output.as_deref(), &report)?;
            Ok(EXIT_OK)
        }
        Command::Reduce { input, k, output } => {
            let text = read(&input)?;
            let graph = parse_graph(&text)?;
            let ri = encode_vc(&graph, k)?;
            let rendered = render_instance(&ri.instance);
            if let Some(path) = &output {
                write_file(path, &rendered)?;
            }
            let report = ReduceReport {
                input_digest: digest(&text),
                n: ri.n,
                k,
                s: ri.s,
                root_size: ri.root_set().len(),
                threshold: ri.threshold,
                trivially_yes: ri.trivially_yes,
                edges: ri
                    .edges
                    .iter()
                    .map(|e| {
                        let name = |v| ri.vertex_name(v).expect("endpoint").to_owned();
                        (e.label.clone(), [name(e.y), name(e.z)])
                    })
                    .collect(),
                instance: output.is_none().then_some(rendered),
            };
            let _ = writeln!(
                stderr,
                "reduced {} vertices / {} edges: {} sets, threshold {}{}",
                ri.n,
                ri.edges.len(),
                ri.instance.len(),
                ri.threshold,
                if ri.trivially_yes { " (k >= n: trivially yes)" } else { "" }
            );
            emit(stdout, None, &report)?;
            Ok(EXIT_OK)
        }
        Command::Decode { input, shifts, k, output } => {
            let text = read(&input)?;
            let graph = parse_graph(&text)?;
            let ri = encode_vc(&graph, k)?;
            let shifts = read_shifts(&shifts)?;
            let cover = decode_cover(&ri, &shifts)?;
            let value = evaluate(&ri.instance, &shifts)?.value;
            let report = DecodeReport {
                input_digest: digest(&text),
                value,
                excess: value as i64 - ri.root_set().len() as i64,
                cover_size: cover.len(),
                is_cover: is_vertex_cover(&graph, &cover),
                cover: cover.into_iter().collect(),
            };
            let _ = writeln!(stderr, "decoded a cover of size {}", report.cover_size);
            emit(stdout, output.as_deref(), &report)?;
            Ok(if report.is_cover { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Verify { input, cert, k, output } => {
            let text = read(&input)?;
            let instance = parse_instance(&text)?;
            let certificate = parse_certificate(&read(&cert)?)?.into_certificate(&instance, k)?;
            let verified = verify_certificate(&instance, &certificate)?;
            let solution = certificate.tree.solve((instance.label(0), 0))?;
            let solution = ShiftVector::new(instance.labels().map(|l| (l, solution.get(l).expect("spanning"))))?;
            let report = VerifyReport {
                input_digest: digest(&text),
                budget: certificate.budget,
                value: evaluate(&instance, &solution)?.value,
                verified,
            };
            let _ = writeln!(
                stderr,
                "certificate {} (value {}, budget {})",
                if verified { "accepted" } else { "rejected" },
                report.value,
                report.budget
            );
            emit(stdout, output.as_deref(), &report)?;
            Ok(if verified { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Ruler { n } => {
            let r = ruler(n)?;
            let line: Vec<String> = r.elements().iter().map(i64::to_string).collect();
            writeln!(stdout, "{}", line.join(" ")).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
            Ok(EXIT_OK)
        }
        Command::CheckGadgets { input, k, output } => {
            let graph = parse_graph(&read(&input)?)?;
            let ri = encode_vc(&graph, k)?;
            let report = check_gadget_lemmas(&ri);
            let _ = writeln!(
                stderr,
                "scanned translations {}..={}: {} violation(s)",
                report.window.0,
                report.window.1,
                report.violations.len()
            );
            for v in &report.violations {
                let _ = writeln!(stderr, "  {v}");
            }
            emit(stdout, output.as_deref(), &report)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Bench {
            seed,
            count,
            guard_limit,
            output,
        } => {
            let csv = bench(seed, count, &options(threads, guard_limit), stderr)?;
            if let Some(path) = &output {
                write_file(path, &csv)?;
            }
            write!(stdout, "{csv}").map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
            Ok(EXIT_OK)
        }
    }
}

fn read_shifts(path: &Path) -> Result<ShiftVector, Failure> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    let shifts = value.get("shifts").cloned().unwrap_or(value);
    serde_json::from_value(shifts).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: no shift object: {e}", path.display()),
    })
}

/// CSV rows `instance,method,value,explored,milliseconds` for every solver on
/// a seeded corpus.
pub fn bench(seed: u64, count: usize, opts: &SolveOptions, stderr: &mut dyn Write) -> crate::Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut csv = String::from("instance,method,value,explored,milliseconds\n");
    let (mut solved, mut greedy_hits) = (0usize, 0usize);
    for i in 0..count {
        let instance = random_instance(&mut rng, InstanceShape::default());
        let mut exact_value = None;
        for algo in [Algo::Exact, Algo::Oracle, Algo::Greedy] {
            let started = Instant::now();
            let result = match solve_with(algo, &instance, opts, None) {
                Ok(r) => r,
                Err(Error::GuardLimit { .. }) => continue,
                Err(e) => return Err(e),
            };
            let ms = started.elapsed().as_secs_f64() * 1e3;
            csv.push_str(&format!(
                "r{i:04},{},{},{},{ms:.3}\n",
                result.method, result.value, result.explored
            ));
            match algo {
                Algo::Exact => exact_value = Some(result.value),
                Algo::Greedy => {
                    if let Some(best) = exact_value {
                        solved += 1;
                        if result.value == best {
                            greedy_hits += 1;
                        }
                        if result.value < best {
                            let _ = writeln!(stderr, "error: greedy beat the exact optimum on r{i:04}");
                        }
                    }
                }
                Algo::Oracle => {}
            }
        }
    }
    if solved > 0 {
        let rate = greedy_hits as f64 / solved as f64;
        let _ = writeln!(
            stderr,
            "greedy matched the optimum on {greedy_hits}/{solved} instances ({:.0}%){}",
            rate * 100.0,
            if rate < 0.5 { " -- warning: below 50%" } else { "" }
        );
    }
    Ok(csv)
}
