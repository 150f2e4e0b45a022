//! Exact polynomial and truncated series arithmetic.
//!
//! Polynomials live in `Z[a1, ..., an]` with arbitrary precision
//! coefficients. The relation `a1*a2*...*an = 1` is imposed on request by
//! [`SymPoly::quotient_normalize`], which subtracts the minimum exponent
//! from every monomial. Since the relation generates a principal ideal whose
//! leading monomial is `a1*...*an`, monomials with some zero exponent form a
//! basis of the quotient and the rewrite is a true normal form.

mod monomial;
mod poly;
mod series;

pub use monomial::Monomial;
pub use poly::SymPoly;
pub use series::BiSeries;
