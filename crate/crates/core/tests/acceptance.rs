//! Acceptance gate: every criterion prints one PASS/FAIL line and the
//! process exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use extsq_core::algebra::{BiSeries, SymPoly};
use extsq_core::identities::{
    theorem1_product_side, verify_bf, verify_bf_up_to_weight, verify_hecke_cached, verify_littlewood,
    verify_theorem1, BfForm, Discrepancy, VerificationReport, VerifyOptions,
};
use extsq_core::lseries::{dirichlet_side, euler_side, numeric_verify_theorem1, primes_up_to, random_unit_product};
use extsq_core::symmetric::{enumerate_partitions, homogeneous_h, schur, schur_oracle, IndexConvention, SchurCache};
use extsq_core::{Exec, Result};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

fn first_failure<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Option<String> {
    reports.into_iter().find(|r| !r.passed()).map(VerificationReport::to_json)
}

fn all_pass(reports: &[VerificationReport], elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let mut detail = format!("{} reports, {:.2}s", reports.len(), elapsed.as_secs_f64());
    let mut ok = true;
    if let Some(bad) = first_failure(reports) {
        ok = false;
        detail = format!("{detail}; first failure {bad}");
    }
    if let Some(limit) = budget {
        if elapsed > limit {
            ok = false;
            detail = format!("{detail}; over the {}s budget", limit.as_secs());
        }
    }
    Outcome::new(ok, detail)
}

fn bf_constrained() -> Result<Outcome> {
    let started = Instant::now();
    let reports = (2..=6)
        .map(|n| verify_bf(n, 4, 4, BfForm::Constrained, &VerifyOptions::default()))
        .collect::<Result<Vec<_>>>()?;
    Ok(all_pass(&reports, started.elapsed(), Some(Duration::from_secs(60))))
}

fn bf_unconstrained() -> Result<Outcome> {
    let started = Instant::now();
    let reports = (2..=5)
        .map(|n| verify_bf_up_to_weight(n, 8, &VerifyOptions::default()))
        .collect::<Result<Vec<_>>>()?;
    Ok(all_pass(&reports, started.elapsed(), None))
}

/// `h_k(a2*a3, a1*a3, a1*a2)`: the dual form's coefficient `A(p^k, 1)`
/// written in the original parameters, using `a1*a2*a3 = 1`.
fn dual_h(k: u32) -> SymPoly {
    let h = homogeneous_h(k, 3);
    SymPoly::from_terms(
        3,
        h.terms().map(|(m, c)| {
            let e = m.exponents();
            (vec![e[1] + e[2], e[0] + e[2], e[0] + e[1]], c.clone())
        }),
    )
    .quotient_normalize()
}

fn theorem1() -> Result<Outcome> {
    let started = Instant::now();
    let opts = VerifyOptions::default();
    let reports = (2..=6).map(|n| verify_theorem1(n, 5, &opts)).collect::<Result<Vec<_>>>()?;
    let mut out = all_pass(&reports, started.elapsed(), None);
    let mut special = Vec::new();

    let gl2 = theorem1_product_side(2, 5, &opts)?;
    special.push(("n=2 zeta", (0..=5).all(|k| gl2.coeff_or_zero(0, k).is_one())));

    let gl3 = theorem1_product_side(3, 5, &opts)?;
    special.push(("n=3 dual", (0..=5).all(|k| gl3.coeff_or_zero(0, k) == dual_h(k))));

    let gl4 = theorem1_product_side(4, 5, &opts)?;
    let y2 = SymPoly::one(4);
    let middle = gl4.mul(&BiSeries::one_minus(&y2, 0, 2, 0, 5), true)?;
    let middle_ok = (0..=5).all(|k| {
        let lambda = format!("{k}+{k}").parse().expect("valid shape");
        middle.coeff_or_zero(0, k) == schur(&lambda, 4).quotient_normalize()
    });
    special.push(("n=4 zeta x middle", middle_ok));

    for (name, ok) in special {
        out.ok &= ok;
        out.detail.push_str(&format!("; {name} {}", if ok { "ok" } else { "MISMATCH" }));
    }
    Ok(out)
}

fn hecke() -> Result<Outcome> {
    let started = Instant::now();
    let opts = VerifyOptions::default();
    let mut reports = Vec::new();
    for n in 3..=5usize {
        let cache = SchurCache::new(n, opts.exec);
        let slots = (n - 1) / 2;
        let tuples: Vec<Vec<u32>> = (0..3u32.pow(slots as u32))
            .map(|mut code| {
                (0..slots)
                    .map(|_| {
                        let d = code % 3;
                        code /= 3;
                        d
                    })
                    .collect()
            })
            .collect();
        for k in 0..=2 {
            for e in &tuples {
                reports.push(verify_hecke_cached(n, k, e, &opts, &cache)?);
            }
        }
    }
    Ok(all_pass(&reports, started.elapsed(), None))
}

fn littlewood() -> Result<Outcome> {
    let started = Instant::now();
    let mut reports = Vec::new();
    for n in 2..=6 {
        for d in 0..=5 {
            reports.push(verify_littlewood(n, d, &VerifyOptions::default())?);
        }
    }
    Ok(all_pass(&reports, started.elapsed(), None))
}

fn oracle_equivalence() -> Result<Outcome> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for n in 1..=5 {
        for w in 0..=6 {
            for lambda in enumerate_partitions(w, n) {
                checked += 1;
                if schur(&lambda, n) != schur_oracle(&lambda, n)? {
                    mismatches.push(format!("{lambda} n={n}"));
                }
            }
        }
    }
    Ok(Outcome::new(
        mismatches.is_empty(),
        format!("{checked} shapes, {} mismatches {mismatches:?}", mismatches.len()),
    ))
}

fn negative_controls() -> Result<Outcome> {
    let opts = VerifyOptions {
        quotient: false,
        ..VerifyOptions::default()
    };
    let report = verify_bf(2, 4, 4, BfForm::Constrained, &opts)?;
    let relation = &SymPoly::from_terms(2, [([1, 1], 1)]) - &SymPoly::one(2);
    let exact_ok = match &report.discrepancy {
        Some(d @ Discrepancy::Coefficient { x_degree: 0, y_degree: 1, .. }) => d
            .difference_poly()
            .and_then(SymPoly::divide_by_unit_relation)
            .is_some_and(|q| &relation * &q == *d.difference_poly().expect("present")),
        _ => false,
    };

    let data = random_unit_product(4, &primes_up_to(100), 2024)?.scaled_at(2, 1.01);
    let numeric = numeric_verify_theorem1(&data, 100, 1e-9)?;
    let numeric_ok = !numeric.passed();
    let m = match numeric.discrepancy {
        Some(Discrepancy::Numeric { m, .. }) => m.to_string(),
        _ => "none".into(),
    };
    Ok(Outcome::new(
        exact_ok && numeric_ok,
        format!(
            "no-quotient n=2 fails at (0,1) divisible by a1*a2-1: {exact_ok}; scaled tuple fails (first m={m}): {numeric_ok}"
        ),
    ))
}

fn numeric_end_to_end() -> Result<Outcome> {
    let started = Instant::now();
    let data = random_unit_product(4, &primes_up_to(100), 7)?;
    let report = numeric_verify_theorem1(&data, 100, 1e-9)?;
    let elapsed = started.elapsed();
    let d = dirichlet_side(&data, 100, IndexConvention::Inclusive, Exec::Parallel)?;
    let e = euler_side(&data, 100)?;
    let worst = d.max_relative_error(&e);
    let ok = report.passed() && worst <= 1e-9 && elapsed < Duration::from_secs(5);
    Ok(Outcome::new(
        ok,
        format!("max relative error {worst:.3e}, {:.3}s", elapsed.as_secs_f64()),
    ))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("bf constrained, n=2..6, caps 4, <60s", bf_constrained),
        ("bf unconstrained, n=2..5, |lambda|<=8", bf_unconstrained),
        ("exterior square series per prime (theorem1), n=2..6, capY 5", theorem1),
        ("hecke relations, n=3..5, k<=2, e<=2", hecke),
        ("littlewood, n<=6, d<=5", littlewood),
        ("jacobi-trudi vs tableaux, |lambda|<=6, n<=5", oracle_equivalence),
        ("negative controls", negative_controls),
        ("numeric end to end, n=4, M=100, tol 1e-9, <5s", numeric_end_to_end),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{tag} {name}: {}", outcome.detail);
        failed += usize::from(!outcome.ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
