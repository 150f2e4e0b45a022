use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use extsq_core::identities::{
    even_slot_count, indices_within_caps, verify_bf, verify_bf_up_to_weight, verify_hecke_cached,
    verify_hecke_reindex, verify_littlewood, verify_theorem1, BfForm, Discrepancy, VerificationReport,
};
use extsq_core::lseries::{numeric_verify_theorem1_with, primes_up_to, random_unit_product, SatakeData};
use extsq_core::symmetric::{lambda_of_index, schur_oracle, schur_with, IndexConvention, Partition, SchurCache};
use extsq_core::{Exec, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "extsq", version, about = "Exact verification of exterior square L-function identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Partition labelling of Fourier exponents: `geq` (lambda_j = sum_{i>=j} k_i)
    /// or `paper-literal` (strict inequality).
    #[arg(long, global = true, default_value = "geq", value_parser = parse_convention)]
    convention: IndexConvention,

    /// Skip reduction modulo a1*...*an = 1 (negative control).
    #[arg(long, global = true)]
    no_quotient: bool,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, env = "EXTSQ_JOBS")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur generating function graded by odd columns.
    VerifyBf {
        #[arg(long, default_value = "2..6", value_parser = parse_ranks)]
        n: Ranks,
        #[arg(long = "capX", default_value_t = 4)]
        cap_x: u32,
        #[arg(long = "capY", default_value_t = 4)]
        cap_y: u32,
        /// Sum over all partitions with at most n parts, without quotient or L0.
        #[arg(long)]
        unconstrained: bool,
        /// With --unconstrained: compare every coefficient of total weight
        /// a + 2b up to this bound instead of using the caps.
        #[arg(long, requires = "unconstrained")]
        max_weight: Option<u32>,
    },
    /// Exterior square Euler factor against the even-slot coefficient sum.
    VerifyThm1 {
        #[arg(long, default_value = "2..6", value_parser = parse_ranks)]
        n: Ranks,
        #[arg(long = "capY", default_value_t = 5)]
        cap_y: u32,
    },
    /// Hecke relations A(p^k,1,..)A(1,p^e2,1,p^e4,..) as sums of single coefficients.
    VerifyHecke {
        #[arg(long, default_value = "3..5", value_parser = parse_ranks)]
        n: Ranks,
        /// Exponent of the first slot; all of 0..=2 when omitted.
        #[arg(long)]
        k: Option<u32>,
        /// Even-slot exponents e2,e4,...; every tuple with entries <= 2 when omitted.
        #[arg(long, value_delimiter = ',')]
        e: Option<Vec<u32>>,
        /// Check the reindexed double series instead of single relations.
        #[arg(long)]
        reindex: bool,
        #[arg(long = "capX", default_value_t = 3)]
        cap_x: u32,
        #[arg(long = "capY", default_value_t = 3)]
        cap_y: u32,
    },
    /// Littlewood expansion of the exterior square factor.
    VerifyLittlewood {
        #[arg(long, default_value = "2..6", value_parser = parse_ranks)]
        n: Ranks,
        /// Y-degree; all of 0..=5 when omitted.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Print a Schur polynomial.
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        /// Enumerate tableaux instead of expanding the Jacobi-Trudi determinant.
        #[arg(long)]
        oracle: bool,
    },
    /// List Fourier exponents within the caps with their partition and Schur polynomial.
    Coeffs {
        #[arg(long)]
        n: usize,
        #[arg(long = "capX", default_value_t = 2)]
        cap_x: u32,
        #[arg(long = "capY", default_value_t = 2)]
        cap_y: u32,
    },
    /// Compare Dirichlet and Euler coefficients for concrete Satake data.
    NumericCheck {
        /// Satake data file; random unit-product data is generated when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Rank for generated data.
        #[arg(long, default_value_t = 4, conflicts_with = "input")]
        n: usize,
        /// Seed for generated data.
        #[arg(long, default_value_t = 0, conflicts_with = "input")]
        seed: u64,
        #[arg(long = "max-m", default_value_t = 100)]
        max_m: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Write random Satake data with unit product as JSON.
    GenSatake {
        #[arg(long)]
        n: usize,
        /// Include every prime up to this bound.
        #[arg(long, default_value_t = 100)]
        primes: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
struct Ranks(Vec<usize>);

/// `4`, `2,3,5`, `2..6` or `2-6` (ranges inclusive), and combinations.
fn parse_ranks(s: &str) -> Result<Ranks, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bounds = item.split_once("..=").or_else(|| item.split_once("..")).or_else(|| item.split_once('-'));
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid rank `{t}`"));
        match bounds {
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                if lo > hi {
                    return Err(format!("empty range `{item}`"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse(item)?),
        }
    }
    if out.is_empty() {
        return Err("no ranks given".into());
    }
    out.sort_unstable();
    out.dedup();
    Ok(Ranks(out))
}

fn parse_convention(s: &str) -> Result<IndexConvention, String> {
    s.parse().map_err(|e: extsq_core::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: extsq_core::Error| e.to_string())
}

fn configure_exec(jobs: Option<usize>) -> anyhow::Result<Exec> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Ok(Exec::Sequential),
        _ if !Exec::parallel_available() => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(j) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .context("building the worker pool")?;
            Ok(Exec::Parallel)
        }
        _ => Ok(Exec::Parallel),
    }
}

/// Runs a batch of independent checks and returns their reports in
/// deterministic order.
fn run_checks<T: Sync>(
    exec: Exec,
    cases: &[T],
    check: impl Fn(&T) -> extsq_core::Result<VerificationReport> + Sync + Send,
) -> anyhow::Result<Vec<VerificationReport>> {
    let mut reports = exec.map(cases, check).into_iter().collect::<extsq_core::Result<Vec<_>>>()?;
    reports.sort_by_cached_key(VerificationReport::sort_key);
    Ok(reports)
}

fn hecke_tuples(n: usize) -> Vec<Vec<u32>> {
    let slots = even_slot_count(n);
    let mut out = vec![Vec::new()];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| (0..=2).map(move |v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

fn describe(d: &Discrepancy, nvars: Option<usize>) -> String {
    match d {
        Discrepancy::Coefficient {
            x_degree,
            y_degree,
            difference,
            poly,
        } => {
            let mut s = format!("first difference at X^{x_degree} Y^{y_degree}: {difference}");
            if let (Some(p), Some(n)) = (poly, nvars) {
                let rel = (1..=n).map(|i| format!("a{i}")).collect::<Vec<_>>().join("*");
                let yes = p.divide_by_unit_relation().is_some();
                s.push_str(&format!("\n      divisible by {rel} - 1: {}", if yes { "yes" } else { "no" }));
            }
            s
        }
        Discrepancy::Numeric {
            m,
            dirichlet,
            euler,
            relative_error,
        } => format!(
            "first difference at m={m}: dirichlet {:.12e}{:+.12e}i, euler {:.12e}{:+.12e}i, relative error {relative_error:.3e}",
            dirichlet[0], dirichlet[1], euler[0], euler[1]
        ),
    }
}

fn print_reports(reports: &[VerificationReport], format: Format) {
    for r in reports {
        match format {
            Format::Json => println!("{}", r.to_json()),
            Format::Table => {
                let params = r
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{tag}  {:<17} {params}  terms={} {:.1}ms",
                    r.identity.name(),
                    r.terms_checked,
                    r.elapsed_ms
                );
                if let Some(d) = &r.discrepancy {
                    let nvars = d.difference_poly().map(|p| p.nvars());
                    println!("      {}", describe(d, nvars));
                }
            }
        }
    }
    if format == Format::Table {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let exec = configure_exec(cli.global.jobs)?;
    let opts = VerifyOptions {
        convention: cli.global.convention,
        quotient: !cli.global.no_quotient,
        exec,
    };
    let format = cli.global.format;
    let reports = match cli.command {
        Command::VerifyBf {
            n,
            cap_x,
            cap_y,
            unconstrained,
            max_weight,
        } => match max_weight {
            Some(w) => run_checks(exec, &n.0, |&n| verify_bf_up_to_weight(n, w, &opts))?,
            None => {
                let form = if unconstrained {
                    BfForm::Unconstrained
                } else {
                    BfForm::Constrained
                };
                run_checks(exec, &n.0, |&n| verify_bf(n, cap_x, cap_y, form, &opts))?
            }
        },
        Command::VerifyThm1 { n, cap_y } => run_checks(exec, &n.0, |&n| verify_theorem1(n, cap_y, &opts))?,
        Command::VerifyHecke {
            n,
            k,
            e,
            reindex,
            cap_x,
            cap_y,
        } => {
            if reindex {
                run_checks(exec, &n.0, |&n| verify_hecke_reindex(n, cap_x, cap_y, &opts))?
            } else {
                let mut reports = Vec::new();
                for &n in &n.0 {
                    let cache = SchurCache::new(n, exec);
                    let ks: Vec<u32> = k.map_or_else(|| (0..=2).collect(), |k| vec![k]);
                    let es = e.clone().map_or_else(|| hecke_tuples(n), |e| vec![e]);
                    let cases: Vec<(u32, Vec<u32>)> =
                        ks.iter().flat_map(|&k| es.iter().map(move |e| (k, e.clone()))).collect();
                    reports.extend(run_checks(exec, &cases, |(k, e)| verify_hecke_cached(n, *k, e, &opts, &cache))?);
                }
                reports.sort_by_cached_key(VerificationReport::sort_key);
                reports
            }
        }
        Command::VerifyLittlewood { n, d } => {
            let ds: Vec<u32> = d.map_or_else(|| (0..=5).collect(), |d| vec![d]);
            let cases: Vec<(usize, u32)> = n.0.iter().flat_map(|&n| ds.iter().map(move |&d| (n, d))).collect();
            run_checks(exec, &cases, |&(n, d)| verify_littlewood(n, d, &opts))?
        }
        Command::NumericCheck {
            input,
            n,
            seed,
            max_m,
            tol,
        } => {
            let data = match input {
                Some(path) => {
                    SatakeData::load(&path).with_context(|| format!("reading Satake data from {}", path.display()))?
                }
                None => random_unit_product(n, &primes_up_to(max_m), seed)?,
            };
            vec![numeric_verify_theorem1_with(&data, max_m, tol, opts.convention, exec)?]
        }
        Command::Schur { lambda, n, oracle } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let poly = if oracle {
                schur_oracle(&lambda, n)?
            } else {
                schur_with(&lambda, n, exec)
            };
            let tableaux: num_bigint::BigInt = poly.terms().map(|(_, c)| c.clone()).sum();
            match format {
                Format::Table => {
                    println!("s_({lambda})(a1..a{n}) = {poly}");
                    println!("{} monomials, {tableaux} tableaux", poly.term_count());
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "lambda": lambda.to_string(),
                        "n": n,
                        "polynomial": poly.to_string(),
                        "monomials": poly.term_count(),
                        "tableaux": tableaux.to_string(),
                    })
                ),
            }
            return Ok(true);
        }
        Command::Coeffs { n, cap_x, cap_y } => {
            if n < 2 {
                bail!("--n must be at least 2");
            }
            let cache = SchurCache::new(n, exec);
            for k in indices_within_caps(n - 1, cap_x, cap_y) {
                let lambda = lambda_of_index(&k, opts.convention);
                let poly = cache.get(&lambda);
                let poly = if opts.quotient {
                    poly.quotient_normalize()
                } else {
                    (*poly).clone()
                };
                match format {
                    Format::Table => println!(
                        "{k}  X^{} Y^{}  lambda={lambda}  {poly}",
                        k.x_exponent(),
                        k.y_exponent()
                    ),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "k": k.slots(),
                            "x_degree": k.x_exponent(),
                            "y_degree": k.y_exponent(),
                            "lambda": lambda.to_string(),
                            "polynomial": poly.to_string(),
                        })
                    ),
                }
            }
            return Ok(true);
        }
        Command::GenSatake { n, primes, seed, output } => {
            let data = random_unit_product(n, &primes_up_to(primes), seed)?;
            let json = data.to_json();
            match output {
                Some(path) => std::fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => println!("{json}"),
            }
            return Ok(true);
        }
    };
    print_reports(&reports, format);
    Ok(reports.iter().all(VerificationReport::passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
