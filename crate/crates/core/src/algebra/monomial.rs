use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial `a1^v1 * ... * an^vn`.
///
/// Ordering is lexicographic on the exponent tuple, which fixes the term
/// order of every [`SymPoly`](super::SymPoly).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exponents.into_iter().collect())
    }

    /// The monomial `a_{var+1}` (variables are zero-indexed).
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn min_exponent(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn is_quotient_normal(&self) -> bool {
        self.min_exponent() == 0
    }

    /// Divide out the largest power of `a1*...*an`.
    pub fn quotient_normalize(&self) -> Monomial {
        let m = self.min_exponent();
        if m == 0 {
            return self.clone();
        }
        Monomial(self.0.iter().map(|&e| e - m).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product followed by [`Self::quotient_normalize`], without the
    /// intermediate allocation.
    pub(crate) fn mul_normalized(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[u32; 8]> = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        let m = out.iter().copied().min().unwrap_or(0);
        if m > 0 {
            out.iter_mut().for_each(|e| *e -= m);
        }
        Monomial(out)
    }

    /// Multiply by `(a1*...*an)^t`.
    pub(crate) fn shift_all(&self, t: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e + t).collect())
    }

    /// Variable `perm[i]` of `self` becomes variable `i` of the result.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&j| self.0[j]).collect())
    }

    /// Drop one variable (which must have exponent zero).
    pub(crate) fn remove_var(&self, var: usize) -> Monomial {
        debug_assert_eq!(self.0[var], 0);
        Monomial(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != var)
                .map(|(_, &e)| e)
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    /// `a1^2*a3`, or `1` for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "a{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
