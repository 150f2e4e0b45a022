//! Partitions, the classical symmetric polynomials, Schur polynomials and
//! the labelling of prime-power Fourier coefficients by partitions.

mod index;
mod partition;
mod schur;

pub use index::{lambda_of_index, FourierIndex, IndexConvention};
pub use partition::{enumerate_partitions, Partition};
pub use schur::{elementary_e, homogeneous_h, schur, schur_oracle, schur_with, SchurCache, ORACLE_WEIGHT_GUARD};
