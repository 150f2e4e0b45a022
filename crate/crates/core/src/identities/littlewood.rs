//! `prod_{i<j} (1 - a_i a_j Y)^(-1) = sum S_lambda Y^(|lambda|/2)` over
//! partitions whose columns all have even height. Exact, no quotient.

use std::time::Instant;

use super::bf::require_rank;
use super::factors::exterior_square_factor;
use super::report::{params, Discrepancy, IdentityKind, VerificationReport};
use super::VerifyOptions;
use crate::algebra::SymPoly;
use crate::error::Result;
use crate::symmetric::{enumerate_partitions, SchurCache};

/// Compare the `Y^d` coefficient of the exterior square factor with the sum
/// of Schur polynomials over partitions of `2d` with even conjugate and at
/// most `n` parts.
pub fn verify_littlewood(n: usize, d: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    require_rank(n, 2)?;
    let lhs = exterior_square_factor(n, 0, d, false, opts.exec).coeff_or_zero(0, d);
    let shapes: Vec<_> = enumerate_partitions(2 * d, n)
        .into_iter()
        .filter(|l| l.is_conjugate_even())
        .collect();
    let cache = SchurCache::new(n, opts.exec);
    let terms = opts.exec.map(&shapes, |l| cache.get(l));
    let mut rhs = SymPoly::zero(n);
    for t in &terms {
        rhs += t;
    }
    let disc = (lhs != rhs).then(|| Discrepancy::coefficient(0, d, &lhs - &rhs));
    let p = params([("n", n.into()), ("d", d.into())]);
    Ok(VerificationReport::finish(IdentityKind::Littlewood, p, disc, 1, started))
}
