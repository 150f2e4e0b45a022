use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::Monomial;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Work size (product of term counts) above which `mul_with` splits the
/// left operand across the thread pool.
const PAR_MUL_THRESHOLD: usize = 1 << 14;

/// Sparse polynomial in `a1..an` with arbitrary precision integer
/// coefficients. Zero coefficients are never stored and terms iterate in
/// lexicographic order of their exponent tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::from_term(Monomial::one(nvars), c)
    }

    /// The polynomial `a_{var+1}`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::from_term(Monomial::variable(nvars, var), 1)
    }

    pub fn from_term(monomial: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(monomial.nvars());
        p.add_term(monomial, c.into());
        p
    }

    /// Build from `(exponents, coefficient)` pairs; repeated monomials are
    /// summed.
    ///
    /// Panics if an exponent tuple does not have `nvars` entries.
    pub fn from_terms<I, E, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: IntoIterator<Item = u32>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let m = Monomial::new(e);
            assert_eq!(m.nvars(), nvars, "monomial length must equal nvars");
            p.add_term(m, c.into());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::new(exponents.iter().copied()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &SymPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Distributive product; with `normalize` the result is reduced modulo
    /// `a1*...*an = 1`.
    pub fn checked_mul(&self, other: &SymPoly, normalize: bool) -> Result<SymPoly> {
        self.mul_with(other, normalize, Exec::Sequential)
    }

    /// [`Self::checked_mul`] with an explicit execution mode.
    pub fn mul_with(&self, other: &SymPoly, normalize: bool, exec: Exec) -> Result<SymPoly> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SymPoly::zero(self.nvars));
        }
        // Iterate over the shorter operand in the outer loop.
        let (outer, inner) = if self.term_count() <= other.term_count() {
            (self, other)
        } else {
            (other, self)
        };
        let outer_terms: Vec<(&Monomial, &BigInt)> = outer.terms.iter().collect();
        let work = outer.term_count() * inner.term_count();
        let acc = if exec.is_parallel() && work >= PAR_MUL_THRESHOLD && outer_terms.len() > 1 {
            let chunks: Vec<&[(&Monomial, &BigInt)]> = outer_terms
                .chunks(outer_terms.len().div_ceil(16).max(1))
                .collect();
            let partials = exec.map(&chunks, |chunk| accumulate_products(chunk, inner, normalize));
            let mut iter = partials.into_iter();
            let mut acc = iter.next().unwrap_or_default();
            for part in iter {
                merge_into(&mut acc, part);
            }
            acc
        } else {
            accumulate_products(&outer_terms, inner, normalize)
        };
        Ok(SymPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32, normalize: bool) -> SymPoly {
        let mut acc = SymPoly::one(self.nvars);
        for _ in 0..exp {
            acc = acc.checked_mul(self, normalize).expect("same nvars");
        }
        acc
    }

    /// Replace every monomial `a^v` by `a^(v - min(v))`, summing coefficients
    /// of monomials that collide. Idempotent.
    pub fn quotient_normalize(&self) -> SymPoly {
        if self.is_quotient_normal() {
            return self.clone();
        }
        let mut out = SymPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.quotient_normalize(), c.clone());
        }
        out
    }

    pub fn is_quotient_normal(&self) -> bool {
        self.terms.keys().all(Monomial::is_quotient_normal)
    }

    /// If `self` lies in the ideal generated by `a1*...*an - 1`, return the
    /// exact cofactor `q` with `self = (a1*...*an - 1) * q`.
    pub fn divide_by_unit_relation(&self) -> Option<SymPoly> {
        if !self.quotient_normalize().is_zero() {
            return None;
        }
        // a^v - a^(v - m) = (e_n - 1)(1 + e_n + ... + e_n^(m-1)) a^(v - m),
        // and the reduced remainders sum to zero.
        let mut q = SymPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let base = m.quotient_normalize();
            for t in 0..m.min_exponent() {
                q.add_term(base.shift_all(t), c.clone());
            }
        }
        Some(q)
    }

    /// Rename variables: variable `perm[i]` becomes variable `i`.
    pub fn permute(&self, perm: &[usize]) -> SymPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = SymPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.permute(perm), c.clone());
        }
        out
    }

    /// Set variable `var` to zero and drop it, giving a polynomial in one
    /// fewer variable.
    pub fn specialize_zero(&self, var: usize) -> SymPoly {
        assert!(var < self.nvars && self.nvars > 1);
        SymPoly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[var] == 0)
                .map(|(m, c)| (m.remove_var(var), c.clone()))
                .collect(),
        }
    }

    pub fn eval_integer(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars);
        let max_exp = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let powers: Vec<Vec<Complex64>> = point
            .iter()
            .map(|&x| {
                let mut row = Vec::with_capacity(max_exp + 1);
                let mut acc = Complex64::new(1.0, 0.0);
                for _ in 0..=max_exp {
                    row.push(acc);
                    acc *= x;
                }
                row
            })
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let coeff = c.to_f64().unwrap_or(f64::NAN);
                m.exponents()
                    .iter()
                    .enumerate()
                    .fold(Complex64::new(coeff, 0.0), |acc, (i, &e)| acc * powers[i][e as usize])
            })
            .sum()
    }
}

fn accumulate_products(
    outer: &[(&Monomial, &BigInt)],
    inner: &SymPoly,
    normalize: bool,
) -> FxHashMap<Monomial, BigInt> {
    let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
    for &(ma, ca) in outer {
        for (mb, cb) in &inner.terms {
            let m = if normalize {
                ma.mul_normalized(mb)
            } else {
                ma.mul(mb)
            };
            let prod = ca * cb;
            match acc.get_mut(&m) {
                Some(v) => *v += prod,
                None => {
                    acc.insert(m, prod);
                }
            }
        }
    }
    acc
}

fn merge_into(acc: &mut FxHashMap<Monomial, BigInt>, part: FxHashMap<Monomial, BigInt>) {
    for (m, c) in part {
        match acc.get_mut(&m) {
            Some(v) => *v += c,
            None => {
                acc.insert(m, c);
            }
        }
    }
}

impl fmt::Display for SymPoly {
    /// Canonical text form: terms in decreasing lexicographic order of
    /// exponents, explicit ` + ` / ` - ` separators, unit coefficients
    /// omitted on non-constant monomials. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.checked_add(rhs).expect("SymPoly addition requires equal nvars")
    }
}

impl AddAssign<&SymPoly> for SymPoly {
    fn add_assign(&mut self, rhs: &SymPoly) {
        assert_eq!(self.nvars, rhs.nvars, "SymPoly addition requires equal nvars");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymPoly> for SymPoly {
    fn sub_assign(&mut self, rhs: &SymPoly) {
        assert_eq!(self.nvars, rhs.nvars, "SymPoly subtraction requires equal nvars");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self.checked_sub(rhs).expect("SymPoly subtraction requires equal nvars")
    }
}

/// Plain (non-normalizing) product.
impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.checked_mul(rhs, false)
            .expect("SymPoly multiplication requires equal nvars")
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(n: usize, i: usize) -> SymPoly {
        SymPoly::variable(n, i)
    }

    #[test]
    fn normalize_examples() {
        let p = SymPoly::from_terms(3, [([2, 1, 1], 1)]);
        assert_eq!(p.quotient_normalize(), SymPoly::from_terms(3, [([1, 0, 0], 1)]));

        let e2_minus_one = &(&var(2, 0) * &var(2, 1)) - &SymPoly::one(2);
        assert!(e2_minus_one.quotient_normalize().is_zero());
    }

    #[test]
    fn add_examples() {
        let a1 = var(2, 0);
        assert!((&a1 + &(-&a1)).is_zero());
        let s = &(&a1 + &var(2, 1)) + &var(2, 1);
        assert_eq!(s, SymPoly::from_terms(2, [([1, 0], 1), ([0, 1], 2)]));
    }

    #[test]
    fn mismatched_nvars_is_an_error() {
        let p = SymPoly::one(2);
        let q = SymPoly::one(3);
        assert!(matches!(p.checked_add(&q), Err(Error::NvarsMismatch { left: 2, right: 3 })));
        assert!(p.checked_mul(&q, true).is_err());
    }

    #[test]
    fn mul_examples() {
        let (a1, a2) = (var(2, 0), var(2, 1));
        let lhs = &(&a1 + &a2) * &(&a1 - &a2);
        assert_eq!(lhs, SymPoly::from_terms(2, [([2, 0], 1), ([0, 2], -1)]));
        assert_eq!(&lhs * &SymPoly::one(2), lhs);
    }

    #[test]
    fn parallel_mul_matches_sequential() {
        let n = 4;
        let mut p = SymPoly::zero(n);
        for i in 0..n {
            p = &p + &var(n, i);
        }
        p = &p + &SymPoly::one(n);
        let big = p.pow(6, false);
        let seq = big.mul_with(&big, true, Exec::Sequential).unwrap();
        let par = big.mul_with(&big, true, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq, big.checked_mul(&big, false).unwrap().quotient_normalize());
    }

    #[test]
    fn display_is_canonical() {
        let p = SymPoly::from_terms(3, [([0, 0, 0], -1), ([2, 1, 0], 1), ([1, 1, 1], 2), ([0, 0, 1], -3)]);
        assert_eq!(p.to_string(), "a1^2*a2 + 2*a1*a2*a3 - 3*a3 - 1");
        assert_eq!((-&SymPoly::one(2)).to_string(), "-1");
        assert_eq!(SymPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn divide_by_unit_relation_recovers_cofactor() {
        let n = 3;
        let e3 = SymPoly::from_terms(n, [([1, 1, 1], 1)]);
        let rel = &e3 - &SymPoly::one(n);
        let q = &(&var(n, 0) * &var(n, 0)) + &SymPoly::constant(n, 5);
        let p = &rel * &q;
        assert_eq!(p.divide_by_unit_relation(), Some(q));
        assert_eq!(var(n, 0).divide_by_unit_relation(), None);
    }

    #[test]
    fn specialize_and_evaluate() {
        let p = SymPoly::from_terms(3, [([1, 0, 0], 1), ([0, 1, 1], 1), ([0, 0, 2], 4)]);
        assert_eq!(p.specialize_zero(2), SymPoly::from_terms(2, [([1, 0], 1)]));
        let ones = vec![BigInt::one(); 3];
        assert_eq!(p.eval_integer(&ones), BigInt::from(6));
        let z = p.eval_complex(&[Complex64::new(0.0, 1.0); 3]);
        assert!((z - Complex64::new(-5.0, 1.0)).norm() < 1e-12);
    }
}
