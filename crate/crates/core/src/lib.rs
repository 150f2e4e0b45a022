//! Exact symbolic model of prime-power Fourier coefficients of GL(n) cusp
//! forms as Schur polynomials in the Satake parameters, together with
//! truncated, coefficient-by-coefficient verifiers for the exterior square
//! Dirichlet series and the identities used to derive it.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: sparse integer polynomials in `a1..an`, the normal form
//!   modulo `a1*...*an = 1`, and truncated bivariate series in `X`, `Y`.
//! * [`symmetric`]: partitions, complete/elementary symmetric polynomials,
//!   Schur polynomials (Jacobi-Trudi and a tableau oracle) and the map from
//!   Fourier exponents to partitions.
//! * [`identities`]: the exact verifiers and their reports.
//! * [`lseries`]: numeric mode over user supplied Satake parameters.
//!
//! Inner loops fan out over rayon when the `parallel` feature is enabled;
//! every entry point also accepts [`Exec::Sequential`].

pub mod algebra;
pub mod error;
pub mod exec;
pub mod identities;
pub mod lseries;
pub mod symmetric;

pub use algebra::{BiSeries, Monomial, SymPoly};
pub use error::{Error, Result};
pub use exec::Exec;
pub use identities::{IdentityKind, Status, VerificationReport, VerifyOptions};
pub use lseries::{DirichletSlice, SatakeData};
pub use symmetric::{FourierIndex, IndexConvention, Partition};
