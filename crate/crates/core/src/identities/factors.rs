//! Per-prime Euler factors as truncated series.

use crate::algebra::{BiSeries, Monomial, SymPoly};
use crate::exec::Exec;

/// `prod_i (1 - a_i X)^(-1)`, the local factor of the standard L-function.
pub fn standard_factor(n: usize, cap_x: u32, cap_y: u32, normalize: bool, exec: Exec) -> BiSeries {
    (0..n).fold(BiSeries::one(n, cap_x, cap_y), |acc, i| {
        let g = BiSeries::geometric(&SymPoly::variable(n, i), 1, 0, cap_x, cap_y, normalize);
        acc.mul_with(&g, normalize, exec).expect("compatible series")
    })
}

/// `prod_{i<j} (1 - a_i a_j Y)^(-1)`, the local exterior square factor.
pub fn exterior_square_factor(n: usize, cap_x: u32, cap_y: u32, normalize: bool, exec: Exec) -> BiSeries {
    let mut acc = BiSeries::one(n, cap_x, cap_y);
    for i in 0..n {
        for j in i + 1..n {
            let pair = Monomial::variable(n, i).mul(&Monomial::variable(n, j));
            let pair = SymPoly::from_term(pair, 1);
            let pair = if normalize { pair.quotient_normalize() } else { pair };
            let g = BiSeries::geometric(&pair, 0, 1, cap_x, cap_y, normalize);
            acc = acc.mul_with(&g, normalize, exec).expect("compatible series");
        }
    }
    acc
}
