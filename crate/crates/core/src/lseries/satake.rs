use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::arith::is_prime;
use crate::error::{Error, Result};

/// Allowed deviation of `a1(p)*...*an(p)` from 1.
pub const UNIMODULAR_TOLERANCE: f64 = 1e-9;

/// Satake parameters `(a1(p), ..., an(p))` for finitely many primes.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakeData {
    n: usize,
    label: String,
    entries: BTreeMap<u64, Vec<Complex64>>,
}

#[derive(Serialize, Deserialize)]
struct SatakeFile {
    n: usize,
    label: String,
    primes: Vec<PrimeEntry>,
}

#[derive(Serialize, Deserialize)]
struct PrimeEntry {
    p: u64,
    alpha: Vec<[f64; 2]>,
}

impl SatakeData {
    /// Validated constructor; duplicate primes are rejected.
    pub fn new<I>(n: usize, label: impl Into<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Vec<Complex64>)>,
    {
        let mut map = BTreeMap::new();
        for (p, alpha) in entries {
            if map.insert(p, alpha).is_some() {
                return Err(Error::SatakeInvalid {
                    prime: p,
                    reason: "listed more than once".into(),
                });
            }
        }
        let data = SatakeData {
            n,
            label: label.into(),
            entries: map,
        };
        data.validate()?;
        Ok(data)
    }

    /// No validation at all; used to build deliberately broken data.
    pub fn new_unchecked(n: usize, label: impl Into<String>, entries: BTreeMap<u64, Vec<Complex64>>) -> Self {
        SatakeData {
            n,
            label: label.into(),
            entries,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::SatakeParse("n must be at least 1".into()));
        }
        for (&p, alpha) in &self.entries {
            let invalid = |reason: String| Error::SatakeInvalid { prime: p, reason };
            if !is_prime(p) {
                return Err(invalid(format!("{p} is not prime")));
            }
            if alpha.len() != self.n {
                return Err(invalid(format!("expected {} parameters, got {}", self.n, alpha.len())));
            }
            if alpha.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
                return Err(invalid("non-finite parameter".into()));
            }
            let product: Complex64 = alpha.iter().product();
            let dev = (product - Complex64::new(1.0, 0.0)).norm();
            if dev > UNIMODULAR_TOLERANCE {
                return Err(invalid(format!(
                    "product of parameters is {:.6}{:+.6}i, |product - 1| = {dev:.3e} exceeds {UNIMODULAR_TOLERANCE:e}",
                    product.re, product.im
                )));
            }
        }
        Ok(())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: SatakeFile = serde_json::from_str(s).map_err(|e| Error::SatakeParse(e.to_string()))?;
        let entries = file.primes.into_iter().map(|e| {
            let alpha = e.alpha.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
            (e.p, alpha)
        });
        SatakeData::new(file.n, file.label, entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let file = SatakeFile {
            n: self.n,
            label: self.label.clone(),
            primes: self
                .entries
                .iter()
                .map(|(&p, alpha)| PrimeEntry {
                    p,
                    alpha: alpha.iter().map(|a| [a.re, a.im]).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Listed primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn alpha(&self, p: u64) -> Option<&[Complex64]> {
        self.entries.get(&p).map(Vec::as_slice)
    }

    /// Copy with every parameter at `p` multiplied by `factor` (unvalidated).
    pub fn scaled_at(&self, p: u64, factor: f64) -> SatakeData {
        let mut out = self.clone();
        if let Some(alpha) = out.entries.get_mut(&p) {
            alpha.iter_mut().for_each(|a| *a *= factor);
        }
        out
    }
}

/// Random parameters with product exactly one up to rounding: arguments
/// uniform on the circle and log-moduli in `[-0.2, 0.2]`, the last entry
/// fixed by the constraint.
pub fn random_unit_product(n: usize, primes: &[u64], seed: u64) -> Result<SatakeData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<(u64, Vec<Complex64>)> = primes
        .iter()
        .map(|&p| {
            let mut alpha = Vec::with_capacity(n);
            let (mut sum_log, mut sum_arg) = (0.0, 0.0);
            for _ in 1..n {
                let log_mod: f64 = rng.random_range(-0.2..0.2);
                let arg: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                sum_log += log_mod;
                sum_arg += arg;
                alpha.push(Complex64::from_polar(log_mod.exp(), arg));
            }
            alpha.push(Complex64::from_polar((-sum_log).exp(), -sum_arg));
            (p, alpha)
        })
        .collect();
    SatakeData::new(n, format!("random-unit-product seed={seed}"), entries)
}
