//! Truncated, exact verification of the exterior square identities.
//!
//! Every verifier returns a [`VerificationReport`]; a mathematical mismatch
//! is a `fail` report, never an `Err`. Errors are reserved for invalid
//! parameters.

mod bf;
mod factors;
mod hecke;
mod littlewood;
mod report;
mod theorem1;

use crate::exec::Exec;
use crate::symmetric::IndexConvention;

pub use bf::{bf_product_side, bf_sum_side, bf_unconstrained_product_side, bf_unconstrained_sum_side, indices_within_caps, l0_factor, verify_bf, verify_bf_up_to_weight, BfForm};
pub use factors::{exterior_square_factor, standard_factor};
pub use hecke::{even_slot_count, hecke_lhs, hecke_reindexed_series, hecke_rhs, hecke_rhs_indices, verify_hecke, verify_hecke_cached, verify_hecke_reindex, HeckeSide};
pub use littlewood::verify_littlewood;
pub use report::{Discrepancy, IdentityKind, ParamValue, Status, VerificationReport};
pub use theorem1::{theorem1_product_side, theorem1_sum_side, verify_theorem1};

/// Knobs shared by all exact verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Labelling of Fourier exponents by partitions.
    pub convention: IndexConvention,
    /// Reduce modulo `a1*...*an = 1`. Disabling this is a negative control.
    pub quotient: bool,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            convention: IndexConvention::Inclusive,
            quotient: true,
            exec: Exec::Parallel,
        }
    }
}

impl VerifyOptions {
    pub fn sequential() -> Self {
        VerifyOptions {
            exec: Exec::Sequential,
            ..Self::default()
        }
    }
}
