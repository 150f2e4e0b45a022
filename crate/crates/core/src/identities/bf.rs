//! The generating function of Schur polynomials graded by odd columns,
//! `sum_k S_lambda(k) X^(k1+k3+...) Y^(k2+k3+2k4+2k5+...)
//!   = L0 * prod (1 - a_i X)^(-1) * prod (1 - a_i a_j Y)^(-1)`,
//! in its constrained form (`lambda_n = 0`, modulo `a1*...*an = 1`, with the
//! correction `L0`) and its unconstrained form (all partitions with at most
//! `n` parts, no `L0`, no quotient).

use std::time::Instant;

use super::factors::{exterior_square_factor, standard_factor};
use super::report::{compare_series, params, with_options, IdentityKind, VerificationReport};
use super::VerifyOptions;
use crate::algebra::{BiSeries, SymPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::symmetric::{enumerate_partitions, lambda_of_index, FourierIndex, SchurCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfForm {
    Constrained,
    Unconstrained,
}

pub(crate) fn require_rank(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("n must be at least {min}, got {n}")));
    }
    Ok(())
}

/// `1 - Y^(n/2)` for even `n`, `1 - X Y^((n-1)/2)` for odd `n`.
pub fn l0_factor(n: usize, cap_x: u32, cap_y: u32) -> BiSeries {
    assert!(n >= 2);
    let one = SymPoly::one(n);
    let half = (n / 2) as u32;
    if n.is_multiple_of(2) {
        BiSeries::one_minus(&one, 0, half, cap_x, cap_y)
    } else {
        BiSeries::one_minus(&one, 1, half, cap_x, cap_y)
    }
}

/// All exponent vectors with `slots` entries whose X and Y exponents stay
/// within the caps, in lexicographic order.
pub fn indices_within_caps(slots: usize, cap_x: u32, cap_y: u32) -> Vec<FourierIndex> {
    fn rec(i: usize, x_left: u32, y_left: u32, cur: &mut Vec<u32>, out: &mut Vec<FourierIndex>) {
        if i == cur.len() {
            out.push(FourierIndex::new(cur.iter().copied()));
            return;
        }
        let slot = i as u32 + 1;
        let (wx, wy) = (slot % 2, slot / 2);
        let mut k = 0;
        while k * wx <= x_left && k * wy <= y_left {
            cur[i] = k;
            rec(i + 1, x_left - k * wx, y_left - k * wy, cur, out);
            k += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, cap_x, cap_y, &mut vec![0; slots], &mut out);
    out
}

/// Left side of the constrained identity: Schur polynomials of every index
/// `(k1, ..., k_{n-1})` within the caps, reduced when `opts.quotient`.
pub fn bf_sum_side(n: usize, cap_x: u32, cap_y: u32, opts: &VerifyOptions) -> Result<BiSeries> {
    require_rank(n, 2)?;
    let indices = indices_within_caps(n - 1, cap_x, cap_y);
    let cache = SchurCache::new(n, opts.exec);
    let values = opts.exec.map(&indices, |k| {
        let s = cache.get(&lambda_of_index(k, opts.convention));
        if opts.quotient {
            s.quotient_normalize()
        } else {
            (*s).clone()
        }
    });
    let mut out = BiSeries::zero(n, cap_x, cap_y);
    for (k, v) in indices.iter().zip(&values) {
        out.add_to(k.x_exponent(), k.y_exponent(), v);
    }
    Ok(out)
}

/// Right side of the constrained identity: `L0` times both Euler factors.
pub fn bf_product_side(n: usize, cap_x: u32, cap_y: u32, opts: &VerifyOptions) -> Result<BiSeries> {
    require_rank(n, 2)?;
    let q = opts.quotient;
    let euler = standard_factor(n, cap_x, cap_y, q, opts.exec).mul_with(
        &exterior_square_factor(n, cap_x, cap_y, q, opts.exec),
        q,
        opts.exec,
    )?;
    l0_factor(n, cap_x, cap_y).mul_with(&euler, q, opts.exec)
}

fn weight_filter(max_weight: Option<u32>) -> impl Fn(u32, u32) -> bool + Copy {
    move |a, b| max_weight.is_none_or(|w| a + 2 * b <= w)
}

/// `sum S_lambda X^o(lambda) Y^((|lambda| - o(lambda))/2)` over partitions
/// with at most `n` parts, `o` = number of odd columns. Exact, no quotient.
/// With `max_weight`, only partitions of weight at most that are summed.
pub fn bf_unconstrained_sum_side(n: usize, cap_x: u32, cap_y: u32, max_weight: Option<u32>, exec: Exec) -> Result<BiSeries> {
    require_rank(n, 2)?;
    let top = max_weight.unwrap_or(u32::MAX).min(cap_x + 2 * cap_y);
    let shapes: Vec<_> = (0..=top)
        .flat_map(|w| enumerate_partitions(w, n))
        .filter(|l| {
            let o = l.odd_columns();
            o <= cap_x && (l.weight() - o) / 2 <= cap_y
        })
        .collect();
    let cache = SchurCache::new(n, exec);
    let values = exec.map(&shapes, |l| cache.get(l));
    let mut out = BiSeries::zero(n, cap_x, cap_y);
    for (l, v) in shapes.iter().zip(&values) {
        let o = l.odd_columns();
        out.add_to(o, (l.weight() - o) / 2, v);
    }
    Ok(out)
}

/// Both Euler factors with no correction and no quotient.
pub fn bf_unconstrained_product_side(n: usize, cap_x: u32, cap_y: u32, max_weight: Option<u32>, exec: Exec) -> Result<BiSeries> {
    require_rank(n, 2)?;
    standard_factor(n, cap_x, cap_y, false, exec).mul_filtered(
        &exterior_square_factor(n, cap_x, cap_y, false, exec),
        false,
        exec,
        weight_filter(max_weight),
    )
}

/// Compare both sides of the identity coefficientwise up to the caps.
pub fn verify_bf(n: usize, cap_x: u32, cap_y: u32, form: BfForm, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    match form {
        BfForm::Constrained => {
            let lhs = bf_sum_side(n, cap_x, cap_y, opts)?;
            let rhs = bf_product_side(n, cap_x, cap_y, opts)?;
            let (disc, checked) = compare_series(&lhs, &rhs, opts.exec, |_, _| true);
            let p = with_options(
                params([("n", n.into()), ("cap_x", cap_x.into()), ("cap_y", cap_y.into())]),
                opts,
            );
            Ok(VerificationReport::finish(IdentityKind::Bf, p, disc, checked, started))
        }
        BfForm::Unconstrained => {
            let lhs = bf_unconstrained_sum_side(n, cap_x, cap_y, None, opts.exec)?;
            let rhs = bf_unconstrained_product_side(n, cap_x, cap_y, None, opts.exec)?;
            let (disc, checked) = compare_series(&lhs, &rhs, opts.exec, |_, _| true);
            let p = params([("n", n.into()), ("cap_x", cap_x.into()), ("cap_y", cap_y.into())]);
            Ok(VerificationReport::finish(IdentityKind::BfUnconstrained, p, disc, checked, started))
        }
    }
}

/// Unconstrained identity for every partition of weight at most
/// `max_weight`: all coefficients `X^a Y^b` with `a + 2b <= max_weight`.
pub fn verify_bf_up_to_weight(n: usize, max_weight: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let (cap_x, cap_y) = (max_weight, max_weight / 2);
    let lhs = bf_unconstrained_sum_side(n, cap_x, cap_y, Some(max_weight), opts.exec)?;
    let rhs = bf_unconstrained_product_side(n, cap_x, cap_y, Some(max_weight), opts.exec)?;
    let (disc, checked) = compare_series(&lhs, &rhs, opts.exec, weight_filter(Some(max_weight)));
    let p = params([("n", n.into()), ("max_weight", max_weight.into())]);
    Ok(VerificationReport::finish(IdentityKind::BfUnconstrained, p, disc, checked, started))
}
