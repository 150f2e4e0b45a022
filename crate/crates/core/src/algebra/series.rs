use std::collections::BTreeMap;

use super::SymPoly;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Truncated power series `sum c[a,b] X^a Y^b` with polynomial coefficients.
///
/// Truncation is per axis: only `a <= cap_x` and `b <= cap_y` are kept.
/// Coefficients iterate in `(a, b)` lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    nvars: usize,
    cap_x: u32,
    cap_y: u32,
    coeffs: BTreeMap<(u32, u32), SymPoly>,
}

impl BiSeries {
    pub fn zero(nvars: usize, cap_x: u32, cap_y: u32) -> Self {
        BiSeries {
            nvars,
            cap_x,
            cap_y,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, cap_x: u32, cap_y: u32) -> Self {
        let mut s = Self::zero(nvars, cap_x, cap_y);
        s.add_to(0, 0, &SymPoly::one(nvars));
        s
    }

    /// `1 - term * X^a * Y^b`.
    pub fn one_minus(term: &SymPoly, a: u32, b: u32, cap_x: u32, cap_y: u32) -> Self {
        let mut s = Self::one(term.nvars(), cap_x, cap_y);
        s.add_to(a, b, &-term);
        s
    }

    /// `(1 - term * X^a * Y^b)^(-1)` expanded to the caps; `(a, b) != (0, 0)`.
    pub fn geometric(term: &SymPoly, a: u32, b: u32, cap_x: u32, cap_y: u32, normalize: bool) -> Self {
        assert!(a + b > 0, "geometric series needs a positive degree step");
        let mut s = Self::one(term.nvars(), cap_x, cap_y);
        let mut power = SymPoly::one(term.nvars());
        let mut t = 1u32;
        while t * a <= cap_x && t * b <= cap_y {
            power = power.checked_mul(term, normalize).expect("same nvars");
            s.add_to(t * a, t * b, &power);
            t += 1;
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn caps(&self) -> (u32, u32) {
        (self.cap_x, self.cap_y)
    }

    pub fn coeff(&self, a: u32, b: u32) -> Option<&SymPoly> {
        self.coeffs.get(&(a, b))
    }

    pub fn coeff_or_zero(&self, a: u32, b: u32) -> SymPoly {
        self.coeff(a, b)
            .cloned()
            .unwrap_or_else(|| SymPoly::zero(self.nvars))
    }

    /// Nonzero coefficients in `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &SymPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `poly * X^a Y^b`; terms beyond the caps are dropped.
    pub fn add_to(&mut self, a: u32, b: u32, poly: &SymPoly) {
        assert_eq!(poly.nvars(), self.nvars);
        if a > self.cap_x || b > self.cap_y || poly.is_zero() {
            return;
        }
        let slot = self
            .coeffs
            .entry((a, b))
            .or_insert_with(|| SymPoly::zero(poly.nvars()));
        *slot += poly;
        if slot.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    fn check_compatible(&self, other: &BiSeries) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.caps() != other.caps() {
            return Err(Error::CapMismatch(self.cap_x, self.cap_y, other.cap_x, other.cap_y));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&(a, b), p) in &other.coeffs {
            out.add_to(a, b, p);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&(a, b), p) in &other.coeffs {
            out.add_to(a, b, &-p);
        }
        Ok(out)
    }

    /// Truncated convolution product. With `normalize`, every coefficient
    /// is reduced modulo `a1*...*an = 1`.
    pub fn mul(&self, other: &BiSeries, normalize: bool) -> Result<BiSeries> {
        self.mul_with(other, normalize, Exec::Sequential)
    }

    pub fn mul_with(&self, other: &BiSeries, normalize: bool, exec: Exec) -> Result<BiSeries> {
        self.mul_filtered(other, normalize, exec, |_, _| true)
    }

    /// Product restricted to output degrees `(a, b)` accepted by `keep`;
    /// all other coefficients of the result are left at zero.
    pub fn mul_filtered<F>(&self, other: &BiSeries, normalize: bool, exec: Exec, keep: F) -> Result<BiSeries>
    where
        F: Fn(u32, u32) -> bool,
    {
        self.check_compatible(other)?;
        // Group contributing pairs by output degree, then compute each
        // output coefficient independently.
        let mut jobs: BTreeMap<(u32, u32), Vec<(&SymPoly, &SymPoly)>> = BTreeMap::new();
        for (&(a1, b1), p) in &self.coeffs {
            for (&(a2, b2), q) in &other.coeffs {
                let (a, b) = (a1 + a2, b1 + b2);
                if a <= self.cap_x && b <= self.cap_y && keep(a, b) {
                    jobs.entry((a, b)).or_default().push((p, q));
                }
            }
        }
        let jobs: Vec<_> = jobs.into_iter().collect();
        let nvars = self.nvars;
        let results = exec.map(&jobs, |(key, pairs)| {
            let mut acc = SymPoly::zero(nvars);
            for (p, q) in pairs {
                let prod = p.checked_mul(q, normalize).expect("compatible series");
                acc += &prod;
            }
            (*key, acc)
        });
        let mut out = BiSeries::zero(self.nvars, self.cap_x, self.cap_y);
        for (key, poly) in results {
            if !poly.is_zero() {
                out.coeffs.insert(key, poly);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series whose constant term is exactly 1,
    /// by the degreewise recursion `g[a,b] = -sum f[i,j] g[a-i,b-j]`.
    pub fn inverse(&self, normalize: bool) -> Result<BiSeries> {
        self.inverse_with(normalize, Exec::Sequential)
    }

    pub fn inverse_with(&self, normalize: bool, exec: Exec) -> Result<BiSeries> {
        let unit = self.coeff(0, 0).is_some_and(|c| {
            if normalize {
                c.quotient_normalize().is_one()
            } else {
                c.is_one()
            }
        });
        if !unit {
            return Err(Error::NotUnitConstant);
        }
        let f_terms: Vec<(&(u32, u32), &SymPoly)> =
            self.coeffs.iter().filter(|(k, _)| **k != (0, 0)).collect();
        let mut g = BiSeries::one(self.nvars, self.cap_x, self.cap_y);
        for a in 0..=self.cap_x {
            for b in 0..=self.cap_y {
                if (a, b) == (0, 0) {
                    continue;
                }
                let pairs: Vec<(&SymPoly, &SymPoly)> = f_terms
                    .iter()
                    .filter(|((i, j), _)| *i <= a && *j <= b)
                    .filter_map(|((i, j), f)| g.coeff(a - i, b - j).map(|h| (*f, h)))
                    .collect();
                let prods = exec.map(&pairs, |(f, h)| f.checked_mul(h, normalize).expect("same nvars"));
                let mut acc = SymPoly::zero(self.nvars);
                for p in &prods {
                    acc -= p;
                }
                if !acc.is_zero() {
                    g.coeffs.insert((a, b), acc);
                }
            }
        }
        Ok(g)
    }

    pub fn quotient_normalize(&self) -> BiSeries {
        let mut out = BiSeries::zero(self.nvars, self.cap_x, self.cap_y);
        for (&(a, b), p) in &self.coeffs {
            out.add_to(a, b, &p.quotient_normalize());
        }
        out
    }

    /// Same coefficients under tighter caps.
    pub fn truncate(&self, cap_x: u32, cap_y: u32) -> BiSeries {
        let mut out = BiSeries::zero(self.nvars, cap_x, cap_y);
        for (&(a, b), p) in &self.coeffs {
            out.add_to(a, b, p);
        }
        out
    }

    /// Sum of the number of polynomial terms over all stored coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.values().map(SymPoly::term_count).sum()
    }
}

impl std::fmt::Display for BiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), p)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})*X^{a}*Y^{b}")?;
        }
        Ok(())
    }
}
