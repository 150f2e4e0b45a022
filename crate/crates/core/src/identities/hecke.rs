//! Hecke relations at a single prime. For `m = p^k` and `m_{2j} = p^{e_{2j}}`,
//!
//! `A(p^k, 1, ..., 1) A(1, p^e2, 1, p^e4, ...)
//!    = sum A(p^g_n, p^(e2-g2), p^g2, p^(e4-g4), p^g4, ...)`
//!
//! over `g2 + g4 + ... + g_n = k` with `g_{2j} <= e_{2j}`. For odd `n` the
//! last `g_{n-1}` does not appear inside the coefficient.

use std::time::Instant;

use super::bf::{bf_sum_side, require_rank};
use super::report::{compare_series, params, with_options, Discrepancy, IdentityKind, ParamValue, VerificationReport};
use super::VerifyOptions;
use crate::algebra::{BiSeries, SymPoly};
use crate::error::{Error, Result};
use crate::symmetric::{lambda_of_index, FourierIndex, SchurCache};

/// Number of even slots `2, 4, ...` below `n`, i.e. `floor((n - 1) / 2)`.
pub fn even_slot_count(n: usize) -> usize {
    (n - 1) / 2
}

/// Which side of the Hecke relation a series is assembled from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeSide {
    Lhs,
    Rhs,
}

fn padded_exponents(n: usize, e: &[u32]) -> Result<Vec<u32>> {
    require_rank(n, 3)?;
    let slots = even_slot_count(n);
    if e.len() > slots {
        return Err(Error::TooManyEvenSlots { n, slots, got: e.len() });
    }
    let mut out = e.to_vec();
    out.resize(slots, 0);
    Ok(out)
}

fn weight_of(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(j, &x)| (j as u32 + 1) * x).sum()
}

fn even_index(n: usize, e: &[u32]) -> FourierIndex {
    let mut slots = vec![0u32; n - 1];
    for (j, &x) in e.iter().enumerate() {
        slots[2 * j + 1] = x;
    }
    FourierIndex::new(slots)
}

/// The Fourier indices summed on the right side, in lexicographic order
/// of `(g2, g4, ...)`.
pub fn hecke_rhs_indices(n: usize, k: u32, e: &[u32]) -> Result<Vec<FourierIndex>> {
    let e = padded_exponents(n, e)?;
    let mut out = Vec::new();
    fn rec(j: usize, left: u32, gamma: &mut Vec<u32>, e: &[u32], n: usize, out: &mut Vec<FourierIndex>) {
        if j == e.len() {
            let mut slots = vec![0u32; n - 1];
            slots[0] = left;
            for (j, (&ej, &gj)) in e.iter().zip(gamma.iter()).enumerate() {
                slots[2 * j + 1] = ej - gj;
                if 2 * j + 2 < n - 1 {
                    slots[2 * j + 2] = gj;
                }
            }
            out.push(FourierIndex::new(slots));
            return;
        }
        for g in 0..=e[j].min(left) {
            gamma[j] = g;
            rec(j + 1, left - g, gamma, e, n, out);
        }
        gamma[j] = 0;
    }
    rec(0, k, &mut vec![0; e.len()], &e, n, &mut out);
    Ok(out)
}

fn reduce(p: SymPoly, opts: &VerifyOptions) -> SymPoly {
    if opts.quotient {
        p.quotient_normalize()
    } else {
        p
    }
}

fn lhs_with(n: usize, k: u32, e: &[u32], opts: &VerifyOptions, cache: &SchurCache) -> Result<SymPoly> {
    let e = padded_exponents(n, e)?;
    let mut first = vec![0u32; n - 1];
    first[0] = k;
    let a = cache.get(&lambda_of_index(&FourierIndex::new(first), opts.convention));
    let b = cache.get(&lambda_of_index(&even_index(n, &e), opts.convention));
    Ok(reduce(a.mul_with(&b, opts.quotient, opts.exec)?, opts))
}

fn rhs_with(n: usize, k: u32, e: &[u32], opts: &VerifyOptions, cache: &SchurCache) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(n);
    for idx in hecke_rhs_indices(n, k, e)? {
        acc += &*cache.get(&lambda_of_index(&idx, opts.convention));
    }
    Ok(reduce(acc, opts))
}

/// `A(p^k, 1, ..., 1) * A(1, p^e2, 1, p^e4, ...)` as a polynomial.
pub fn hecke_lhs(n: usize, k: u32, e: &[u32], opts: &VerifyOptions) -> Result<SymPoly> {
    require_rank(n, 3)?;
    lhs_with(n, k, e, opts, &SchurCache::new(n, opts.exec))
}

/// The divisor sum on the right of the Hecke relation.
pub fn hecke_rhs(n: usize, k: u32, e: &[u32], opts: &VerifyOptions) -> Result<SymPoly> {
    require_rank(n, 3)?;
    rhs_with(n, k, e, opts, &SchurCache::new(n, opts.exec))
}

pub fn verify_hecke(n: usize, k: u32, e: &[u32], opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_hecke_cached(n, k, e, opts, &SchurCache::new(n.max(1), opts.exec))
}

/// [`verify_hecke`] sharing a Schur memo across a sweep.
pub fn verify_hecke_cached(
    n: usize,
    k: u32,
    e: &[u32],
    opts: &VerifyOptions,
    cache: &SchurCache,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let padded = padded_exponents(n, e)?;
    assert_eq!(cache.nvars(), n);
    let lhs = lhs_with(n, k, &padded, opts, cache)?;
    let rhs = rhs_with(n, k, &padded, opts, cache)?;
    let disc = (lhs != rhs).then(|| Discrepancy::coefficient(k, weight_of(&padded), &lhs - &rhs));
    let mut p = with_options(params([("n", n.into()), ("k", k.into())]), opts);
    for (j, &x) in padded.iter().enumerate() {
        p.insert(format!("e{}", 2 * j + 2), ParamValue::from(x));
    }
    Ok(VerificationReport::finish(IdentityKind::Hecke, p, disc, 1, started))
}

/// All exponent tuples `(e2, e4, ...)` for GL(n) with `e2 + 2 e4 + ... <= cap`.
fn exponent_tuples(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let slots = even_slot_count(n);
    let mut out = Vec::new();
    fn rec(j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == cur.len() {
            out.push(cur.clone());
            return;
        }
        let w = j as u32 + 1;
        let mut x = 0;
        while x * w <= left {
            cur[j] = x;
            rec(j + 1, left - x * w, cur, out);
            x += 1;
        }
        cur[j] = 0;
    }
    rec(0, cap, &mut vec![0; slots], &mut out);
    out
}

/// `sum_{k, e} side(k, e) X^k Y^(e2 + 2 e4 + ...)` up to the caps, i.e. the
/// per-prime double series obtained by summing the Hecke relation.
pub fn hecke_reindexed_series(n: usize, cap_x: u32, cap_y: u32, side: HeckeSide, opts: &VerifyOptions) -> Result<BiSeries> {
    require_rank(n, 3)?;
    let cache = SchurCache::new(n, opts.exec);
    let jobs: Vec<(u32, Vec<u32>)> = (0..=cap_x)
        .flat_map(|k| exponent_tuples(n, cap_y).into_iter().map(move |e| (k, e)))
        .collect();
    let values = opts.exec.map(&jobs, |(k, e)| match side {
        HeckeSide::Lhs => lhs_with(n, *k, e, opts, &cache),
        HeckeSide::Rhs => rhs_with(n, *k, e, opts, &cache),
    });
    let mut out = BiSeries::zero(n, cap_x, cap_y);
    for ((k, e), v) in jobs.iter().zip(values) {
        out.add_to(*k, weight_of(e), &v?);
    }
    Ok(out)
}

/// Summing the Hecke relation over all `k` and `e` and reindexing must
/// reproduce the constrained Schur generating function: exactly for even
/// `n`, and times `(1 - X Y^((n-1)/2))^(-1)` for odd `n`, whose extra
/// summation variable never enters a coefficient. Both the left-side and
/// right-side assemblies are checked.
pub fn verify_hecke_reindex(n: usize, cap_x: u32, cap_y: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    require_rank(n, 3)?;
    let mut target = bf_sum_side(n, cap_x, cap_y, opts)?;
    if n % 2 == 1 {
        let extra = BiSeries::geometric(&SymPoly::one(n), 1, ((n - 1) / 2) as u32, cap_x, cap_y, opts.quotient);
        target = target.mul_with(&extra, opts.quotient, opts.exec)?;
    }
    let mut checked = 0;
    let mut disc = None;
    for side in [HeckeSide::Rhs, HeckeSide::Lhs] {
        let assembled = hecke_reindexed_series(n, cap_x, cap_y, side, opts)?;
        let (d, c) = compare_series(&assembled, &target, opts.exec, |_, _| true);
        checked += c;
        disc = disc.or(d);
    }
    let p = with_options(
        params([("n", n.into()), ("cap_x", cap_x.into()), ("cap_y", cap_y.into())]),
        opts,
    );
    Ok(VerificationReport::finish(IdentityKind::HeckeReindex, p, disc, checked, started))
}
