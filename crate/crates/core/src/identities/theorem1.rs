//! Per-prime form of the Dirichlet series for the exterior square:
//! the Schur polynomials at indices supported on even slots, weighted by
//! `Y^(k2 + 2k4 + 3k6 + ...)`, times `(1 - Y^(n/2))^(-1)` for even `n`,
//! equal `prod_{i<j} (1 - a_i a_j Y)^(-1)` modulo `a1*...*an = 1`.

use std::time::Instant;

use super::bf::require_rank;
use super::factors::exterior_square_factor;
use super::report::{compare_series, params, with_options, IdentityKind, VerificationReport};
use super::VerifyOptions;
use crate::algebra::{BiSeries, SymPoly};
use crate::error::Result;
use crate::symmetric::{lambda_of_index, FourierIndex, SchurCache};

/// Exponent vectors for GL(n) with zeros in every odd slot and
/// `k2 + 2k4 + ... <= cap_y`.
pub(crate) fn even_slot_indices(n: usize, cap_y: u32) -> Vec<FourierIndex> {
    let evens = (n - 1) / 2;
    let mut out = Vec::new();
    let mut cur = vec![0u32; evens];
    fn rec(j: usize, left: u32, cur: &mut Vec<u32>, n: usize, out: &mut Vec<FourierIndex>) {
        if j == cur.len() {
            let mut slots = vec![0u32; n - 1];
            for (j, &e) in cur.iter().enumerate() {
                slots[2 * j + 1] = e;
            }
            out.push(FourierIndex::new(slots));
            return;
        }
        let weight = j as u32 + 1;
        let mut e = 0;
        while e * weight <= left {
            cur[j] = e;
            rec(j + 1, left - e * weight, cur, n, out);
            e += 1;
        }
        cur[j] = 0;
    }
    rec(0, cap_y, &mut cur, n, &mut out);
    out
}

/// Dirichlet side, per prime, as a series in `Y` (X-cap 0).
pub fn theorem1_sum_side(n: usize, cap_y: u32, opts: &VerifyOptions) -> Result<BiSeries> {
    require_rank(n, 2)?;
    let indices = even_slot_indices(n, cap_y);
    let cache = SchurCache::new(n, opts.exec);
    let values = opts.exec.map(&indices, |k| {
        let s = cache.get(&lambda_of_index(k, opts.convention));
        if opts.quotient {
            s.quotient_normalize()
        } else {
            (*s).clone()
        }
    });
    let mut sum = BiSeries::zero(n, 0, cap_y);
    for (k, v) in indices.iter().zip(&values) {
        sum.add_to(0, k.y_exponent(), v);
    }
    if n.is_multiple_of(2) {
        // local factor of zeta(n s / 2)
        let zeta = BiSeries::geometric(&SymPoly::one(n), 0, (n / 2) as u32, 0, cap_y, opts.quotient);
        sum = sum.mul_with(&zeta, opts.quotient, opts.exec)?;
    }
    Ok(sum)
}

/// Euler side, per prime: `prod_{i<j} (1 - a_i a_j Y)^(-1)`.
pub fn theorem1_product_side(n: usize, cap_y: u32, opts: &VerifyOptions) -> Result<BiSeries> {
    require_rank(n, 2)?;
    Ok(exterior_square_factor(n, 0, cap_y, opts.quotient, opts.exec))
}

pub fn verify_theorem1(n: usize, cap_y: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let lhs = theorem1_sum_side(n, cap_y, opts)?;
    let rhs = theorem1_product_side(n, cap_y, opts)?;
    let (disc, checked) = compare_series(&lhs, &rhs, opts.exec, |_, _| true);
    let p = with_options(params([("n", n.into()), ("cap_y", cap_y.into())]), opts);
    Ok(VerificationReport::finish(IdentityKind::Theorem1, p, disc, checked, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::{elementary_e, IndexConvention};

    fn opts() -> VerifyOptions {
        VerifyOptions::sequential()
    }

    #[test]
    fn even_slot_enumeration() {
        let ks = even_slot_indices(5, 3);
        // (k2, k4) with k2 + 2 k4 <= 3
        let expected: Vec<FourierIndex> = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (3, 0)]
            .iter()
            .map(|&(a, b)| FourierIndex::new([0, a, 0, b]))
            .collect();
        assert_eq!(ks, expected);
        assert_eq!(even_slot_indices(2, 4), vec![FourierIndex::new([0])]);
    }

    #[test]
    fn gl2_is_zeta() {
        let s = theorem1_sum_side(2, 4, &opts()).unwrap();
        for b in 0..=4 {
            assert_eq!(s.coeff_or_zero(0, b), SymPoly::one(2));
        }
    }

    #[test]
    fn first_coefficient_is_e2() {
        let s = theorem1_sum_side(4, 3, &opts()).unwrap();
        assert_eq!(s.coeff_or_zero(0, 1), elementary_e(2, 4));
        let s = theorem1_sum_side(3, 3, &opts()).unwrap();
        assert_eq!(s.coeff_or_zero(0, 1), elementary_e(2, 3));
    }

    #[test]
    fn small_ranks_pass() {
        for (n, cap) in [(2, 4), (3, 4), (4, 4), (5, 3)] {
            let r = verify_theorem1(n, cap, &opts()).unwrap();
            assert!(r.passed(), "n={n}: {:?}", r.discrepancy);
        }
    }

    #[test]
    fn paper_literal_fails_at_y1_for_gl3() {
        let o = VerifyOptions {
            convention: IndexConvention::PaperLiteral,
            ..opts()
        };
        let r = verify_theorem1(3, 2, &o).unwrap();
        assert!(!r.passed());
        match r.discrepancy.unwrap() {
            crate::identities::Discrepancy::Coefficient { x_degree, y_degree, .. } => {
                assert_eq!((x_degree, y_degree), (0, 1))
            }
            _ => unreachable!(),
        }
    }
}
