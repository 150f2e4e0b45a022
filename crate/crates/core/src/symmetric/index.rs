use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::Error;

/// Exponent vector `(k1, ..., k_{n-1})` of the coefficient
/// `A(p^k1, ..., p^k_{n-1})` of a form on GL(n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourierIndex(Vec<u32>);

impl FourierIndex {
    pub fn new(k: impl IntoIterator<Item = u32>) -> Self {
        FourierIndex(k.into_iter().collect())
    }

    /// The all-zero index for GL(n), i.e. `A(1, ..., 1)`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        FourierIndex(vec![0; n - 1])
    }

    /// Rank `n` of the group this index belongs to.
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    pub fn slots(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `X`: `k1 + k3 + k5 + ...`.
    pub fn x_exponent(&self) -> u32 {
        self.0.iter().step_by(2).sum()
    }

    /// Exponent of `Y`: `sum_i floor(i/2) k_i`, i.e. `k2 + k3 + 2k4 + 2k5 + ...`.
    pub fn y_exponent(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &k)| (i as u32).div_ceil(2) * k)
            .sum()
    }
}

impl fmt::Display for FourierIndex {
    /// `k=(1,0,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("k=(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for FourierIndex {
    type Err = Error;

    /// Accepts `k=(1,0,2)`, `(1,0,2)` or `1,0,2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s
            .trim()
            .trim_start_matches("k=")
            .trim_start_matches('(')
            .trim_end_matches(')');
        let slots = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidIndex(format!("cannot parse slot {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>, Error>>()?;
        Ok(FourierIndex(slots))
    }
}

/// How exponent vectors are turned into partitions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexConvention {
    /// `lambda_j = k_j + k_{j+1} + ... + k_{n-1}`. This is the labelling for
    /// which `A(p, 1, ..., 1) = e1`, matching the Godement-Jacquet Euler
    /// factor.
    #[default]
    #[serde(rename = "geq")]
    Inclusive,
    /// `lambda_j = k_{j+1} + ... + k_{n-1}` (strict inequality), kept for
    /// comparison; it drops `k1` entirely.
    PaperLiteral,
}

impl IndexConvention {
    pub fn name(self) -> &'static str {
        match self {
            IndexConvention::Inclusive => "geq",
            IndexConvention::PaperLiteral => "paper-literal",
        }
    }
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "geq" => Ok(IndexConvention::Inclusive),
            "paper-literal" => Ok(IndexConvention::PaperLiteral),
            other => Err(Error::InvalidParameter(format!(
                "unknown index convention {other:?} (expected geq or paper-literal)"
            ))),
        }
    }
}

/// Partition labelling the Schur polynomial equal to `A(p^k1, ..., p^k_{n-1})`.
/// The n-th part is always zero.
pub fn lambda_of_index(k: &FourierIndex, convention: IndexConvention) -> Partition {
    let slots = k.slots();
    let mut parts = vec![0u32; slots.len()];
    let mut running = 0;
    for j in (0..slots.len()).rev() {
        match convention {
            IndexConvention::Inclusive => {
                running += slots[j];
                parts[j] = running;
            }
            IndexConvention::PaperLiteral => {
                parts[j] = running;
                running += slots[j];
            }
        }
    }
    Partition::new(parts).expect("suffix sums are weakly decreasing")
}
