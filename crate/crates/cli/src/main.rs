//! Command-line workbench: compute Jack expansions and Jack LR coefficients,
//! run the verification suites, and solve channel systems.
//!
//! Exit codes: 0 = all pass, 1 = any failure, 2 = usage error.

use clap::{Parser, Subcommand};
use jacklr_cli::report::Report;
use jacklr_cli::suites;
use jacklr_core::chansolve;
use jacklr_core::exactalg::BigRat;
use jacklr_core::jack::{schur_limit, JackCtx};
use jacklr_core::shapes::{jack_norm_hook, Partition};
use jacklr_core::windows::{window_factor, Window};
use num_bigint::BigInt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "jacklr", version, about = "Exact Jack Littlewood-Richardson workbench")]
struct Cli {
    /// Emit reports as JSON instead of TSV
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel suites (default: available cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Jack expansion cache directory (also honors JACKLR_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial expansion of the Jack function J_lambda
    Jack {
        #[arg(long)]
        lambda: String,
        /// Fixed rational parameter value p/q (default: symbolic)
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Jack LR coefficient g_{mu,nu}^{lambda}
    G {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Schur LR coefficient via the hook-rescaled limit
    SchurLr {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
    },
    /// Hook form of the Jack norm j_lambda
    Norm {
        #[arg(long)]
        lambda: String,
    },
    /// Window factor F for a pair mu inside lambda agreeing outside a window
    WindowFactor {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: String,
        /// Window literal, e.g. cols=1,2,3;rows=1,2,3,4
        #[arg(long)]
        window: String,
    },
    /// Composite window factor and windowed shapes for an ordered stage list
    CompositeFactor {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
        /// JSON stage list, e.g.
        /// [{"window":"cols=0,1;rows=0,1","arg":"mu-lambda"},
        ///  {"window":"cols=0,1,2;rows=0,1,2","arg":"nu-lambda"}]
        #[arg(long)]
        stages: String,
    },
    /// Run a verification suite
    Verify {
        /// One of: golden, engine, pieri, maxfill, rectangular, rect-union,
        /// locality, stanley-positivity, window-positivity, six-param-d20,
        /// six-param-h8, six-param-h4, kernel, factorization, schur-limit,
        /// identities, strong-stanley
        suite: String,
        /// Size cap where the suite sweeps by degree
        #[arg(long)]
        max_size: Option<usize>,
        /// Comma-separated rational samples p/q
        #[arg(long)]
        alphas: Option<String>,
        /// Named grid for the six-parameter suites
        #[arg(long, default_value = "default")]
        grid: String,
    },
    /// Build the channel system on the default grid and solve it
    SolveChannels {
        #[arg(long)]
        alphas: Option<String>,
        /// Materialize a kernel basis (large)
        #[arg(long)]
        kernel_basis: bool,
        /// Exactly solve for a particular solution and print its nonzero
        /// channels in the table data format (slow)
        #[arg(long)]
        emit_solution: bool,
    },
}

fn parse_alpha(s: &str) -> Result<BigRat, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    let d: BigInt = d.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    if d == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(BigRat::new(n, d))
}

fn parse_alpha_list(s: &str) -> Result<Vec<BigRat>, String> {
    s.split(',').map(|t| parse_alpha(t.trim())).collect()
}

/// Print a line, treating a closed pipe as a normal early exit.
fn out(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn emit(report: &Report, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_tsv());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("JACKLR_CACHE_DIR").map(PathBuf::from));

    match cli.command {
        Command::Jack { lambda, alpha } => {
            let lam = Partition::from_str(&lambda)?;
            match alpha {
                None => {
                    let ctx = JackCtx::symbolic().with_cache_dir(cache_dir);
                    let j = ctx.jack_expansion(&lam).map_err(|e| e.to_string())?;
                    for (mu, c) in &j.coeffs {
                        out(format_args!("{mu}\t{c}"));
                    }
                }
                Some(a) => {
                    let a = parse_alpha(&a)?;
                    let ctx = JackCtx::fixed(a).with_cache_dir(cache_dir);
                    let j = ctx.jack_expansion(&lam).map_err(|e| e.to_string())?;
                    for (mu, c) in &j.coeffs {
                        out(format_args!("{mu}\t{}/{}", c.numer(), c.denom()));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::G { mu, nu, lambda, alpha } => {
            let mu = Partition::from_str(&mu)?;
            let nu = Partition::from_str(&nu)?;
            let lam = Partition::from_str(&lambda)?;
            match alpha {
                None => {
                    let ctx = JackCtx::symbolic().with_cache_dir(cache_dir);
                    let g = ctx.lr_g(&mu, &nu, &lam).map_err(|e| e.to_string())?;
                    println!("{g}");
                }
                Some(a) => {
                    let a = parse_alpha(&a)?;
                    let ctx = JackCtx::fixed(a).with_cache_dir(cache_dir);
                    let g = ctx.lr_g(&mu, &nu, &lam).map_err(|e| e.to_string())?;
                    println!("{}/{}", g.numer(), g.denom());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SchurLr { mu, nu, lambda } => {
            let mu = Partition::from_str(&mu)?;
            let nu = Partition::from_str(&nu)?;
            let lam = Partition::from_str(&lambda)?;
            let c = schur_limit(&mu, &nu, &lam).map_err(|e| e.to_string())?;
            println!("{c}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Norm { lambda } => {
            let lam = Partition::from_str(&lambda)?;
            println!("{}", jack_norm_hook(&lam));
            Ok(ExitCode::SUCCESS)
        }
        Command::WindowFactor { mu, lambda, window } => {
            let mu = Partition::from_str(&mu)?;
            let lam = Partition::from_str(&lambda)?;
            let w: Window = window
                .parse()
                .map_err(|e: jacklr_core::windows::WindowError| e.0)?;
            let f = window_factor(&mu, &lam, &w).map_err(|e| e.0)?;
            println!("{}", f.value);
            Ok(ExitCode::SUCCESS)
        }
        Command::CompositeFactor {
            mu,
            nu,
            lambda,
            stages,
        } => {
            let mu = Partition::from_str(&mu)?;
            let nu = Partition::from_str(&nu)?;
            let lam = Partition::from_str(&lambda)?;
            #[derive(serde::Deserialize)]
            struct StageSpec {
                window: String,
                arg: String,
            }
            let specs: Vec<StageSpec> =
                serde_json::from_str(&stages).map_err(|e| format!("bad stage list: {e}"))?;
            let mut cw = jacklr_core::windows::CompositeWindow { stages: Vec::new() };
            for sp in specs {
                let w: Window = sp
                    .window
                    .parse()
                    .map_err(|e: jacklr_core::windows::WindowError| e.0)?;
                let arg = match sp.arg.as_str() {
                    "mu-lambda" => jacklr_core::windows::StageArg::MuLambda,
                    "nu-lambda" => jacklr_core::windows::StageArg::NuLambda,
                    other => return Err(format!("unknown stage argument {other:?}")),
                };
                cw.stages.push((w, arg));
            }
            let view = jacklr_core::windows::compose(&mu, &nu, &lam, &cw).map_err(|e| e.0)?;
            println!("factor	{}", view.factor);
            println!("mu_R	{}", view.mu_dw.inner);
            println!("nu_R	{}", view.nu_dw.inner);
            println!("lam_R	{}", view.lam_dw.inner);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_size,
            alphas,
            grid,
        } => {
            let env = suites::SuiteEnv::default();
            let alphas = match alphas {
                Some(s) => parse_alpha_list(&s)?,
                None => suites::default_alphas(),
            };
            if grid != "default" {
                return Err(format!("unknown grid {grid:?}"));
            }
            let report = match suite.as_str() {
                "golden" => suites::golden(&env),
                "engine" => suites::engine(&env, max_size.unwrap_or(10)),
                "schur-limit" => suites::schur_limit(&env, max_size.unwrap_or(8)),
                "pieri" => suites::pieri(&env, max_size.unwrap_or(9)),
                "maxfill" => suites::maxfill(&env, max_size.unwrap_or(9)),
                "rectangular" => suites::rectangular(&env, max_size.unwrap_or(3)),
                "rect-union" => suites::rect_union(
                    max_size.unwrap_or(12),
                    3,
                    &[parse_alpha("1/2")?, parse_alpha("2")?, parse_alpha("3")?],
                ),
                "locality" => suites::locality(&env, max_size.unwrap_or(9)),
                "stanley-positivity" => suites::stanley_positivity(&env, max_size.unwrap_or(8)),
                "window-positivity" => suites::window_positivity(&env),
                "six-param-d20" => suites::six_param_d20(&suites::six_param_grid(), &alphas),
                "six-param-h8" => suites::six_param_h8(&suites::six_param_grid(), &alphas),
                "six-param-h4" => suites::six_param_h4(&suites::six_param_grid(), &alphas),
                "kernel" => suites::kernel(&suites::six_param_grid(), &alphas),
                "factorization" => suites::factorization(&env, max_size.unwrap_or(8)),
                "identities" => suites::identities(6, max_size.unwrap_or(7)),
                "strong-stanley" => suites::strong_stanley(&env, max_size.unwrap_or(6)),
                other => return Err(format!("unknown suite {other:?}")),
            };
            Ok(emit(&report, cli.json))
        }
        Command::SolveChannels {
            alphas,
            kernel_basis,
            emit_solution,
        } => {
            let alphas = match alphas {
                Some(s) => parse_alpha_list(&s)?,
                None => suites::default_alphas(),
            };
            let grid: Vec<_> = suites::six_param_grid()
                .into_iter()
                .filter(|i| i.size() <= 12)
                .collect();
            let sys = chansolve::build_system(&grid, &alphas).map_err(|e| e.to_string())?;
            let mut report = Report::new("solve-channels");
            report.push(
                "system",
                jacklr_cli::Status::Finding,
                "",
                format!(
                    "{} rows, {} unknowns",
                    sys.rows.len(),
                    chansolve::NUM_UNKNOWNS
                ),
            );
            let d = chansolve::d20_vector().map_err(|e| e.to_string())?;
            let bad = chansolve::residuals(&sys, &d);
            report.check_bool(
                "d20 residual",
                bad.is_empty(),
                "identically 0",
                format!("{} nonzero rows", bad.len()),
            );
            let ranks = chansolve::system_rank_mod(&sys);
            for (p, rk) in &ranks {
                report.push(
                    format!("rank mod {p}"),
                    jacklr_cli::Status::Finding,
                    "",
                    format!("{rk} (kernel dimension {})", chansolve::NUM_UNKNOWNS - rk),
                );
            }
            if kernel_basis || emit_solution {
                let sol = chansolve::solve(&sys, kernel_basis);
                if kernel_basis {
                    report.push(
                        "kernel basis",
                        jacklr_cli::Status::Finding,
                        "",
                        format!("{} vectors (exact, rank {})", sol.kernel_basis.len(), sol.rank),
                    );
                }
                if emit_solution {
                    match &sol.particular {
                        Some(v) => {
                            for idx in 0..chansolve::NUM_CHANNELS {
                                let coeffs: Vec<String> = (0..4)
                                    .map(|i| v[chansolve::unknown_index(idx, i)].to_string())
                                    .collect();
                                if coeffs.iter().all(|c| c == "0") {
                                    continue;
                                }
                                let (m, n, l) = chansolve::decode_channel(idx);
                                let fmt_hooks = |h: [jacklr_core::shapes::Hook; 3]| -> String {
                                    h.iter().map(|x| x.as_char()).collect()
                                };
                                eprintln!(
                                    "{};{}|{}\t{}",
                                    fmt_hooks(m),
                                    fmt_hooks(n),
                                    fmt_hooks(l),
                                    coeffs.join(",")
                                );
                            }
                            report.push(
                                "particular solution",
                                jacklr_cli::Status::Finding,
                                "",
                                "emitted on stderr in the table data format".to_string(),
                            );
                        }
                        None => report.push(
                            "particular solution",
                            jacklr_cli::Status::Fail,
                            "consistent system",
                            format!("inconsistent at row {:?}", sol.certificate_row),
                        ),
                    }
                }
            }
            Ok(emit(&report, cli.json))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
