//! Numeric mode: Satake parameters supplied per prime, global Fourier
//! coefficients assembled by multiplicativity, and a floating point
//! re-check of the exterior square Dirichlet series.

mod arith;
mod numeric;
mod satake;

pub use arith::{factorize, is_prime, primes_up_to};
pub use numeric::{
    dirichlet_side, euler_side, global_coefficient, local_coefficient, numeric_verify_theorem1, numeric_verify_theorem1_with, DirichletSlice,
    LocalModel, DEFAULT_TOLERANCE,
};
pub use satake::{random_unit_product, SatakeData, UNIMODULAR_TOLERANCE};
