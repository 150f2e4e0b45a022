use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::VerifyOptions;
use crate::algebra::{BiSeries, SymPoly};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    Bf,
    BfUnconstrained,
    Theorem1,
    Hecke,
    HeckeReindex,
    Littlewood,
    Theorem1Numeric,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Bf => "bf",
            IdentityKind::BfUnconstrained => "bf-unconstrained",
            IdentityKind::Theorem1 => "theorem1",
            IdentityKind::Hecke => "hecke",
            IdentityKind::HeckeReindex => "hecke-reindex",
            IdentityKind::Littlewood => "littlewood",
            IdentityKind::Theorem1Numeric => "theorem1-numeric",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Text(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_owned())
    }
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v:e}"),
            ParamValue::Text(v) => f.write_str(v),
        }
    }
}

/// First point where the two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Discrepancy {
    /// Exact coefficient of `X^x_degree Y^y_degree`; `difference` is the
    /// canonical text of `lhs - rhs`.
    Coefficient {
        x_degree: u32,
        y_degree: u32,
        difference: String,
        #[serde(skip)]
        poly: Option<SymPoly>,
    },
    /// Numeric Dirichlet coefficient at `m`, as `[re, im]` pairs.
    Numeric {
        m: u64,
        dirichlet: [f64; 2],
        euler: [f64; 2],
        relative_error: f64,
    },
}

impl Discrepancy {
    pub fn coefficient(x_degree: u32, y_degree: u32, difference: SymPoly) -> Self {
        Discrepancy::Coefficient {
            x_degree,
            y_degree,
            difference: difference.to_string(),
            poly: Some(difference),
        }
    }

    /// The exact difference polynomial, when this report was produced in
    /// process (it is not carried through JSON).
    pub fn difference_poly(&self) -> Option<&SymPoly> {
        match self {
            Discrepancy::Coefficient { poly, .. } => poly.as_ref(),
            Discrepancy::Numeric { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityKind,
    pub params: BTreeMap<String, ParamValue>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
    pub terms_checked: u64,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub(crate) fn finish(
        identity: IdentityKind,
        params: BTreeMap<String, ParamValue>,
        discrepancy: Option<Discrepancy>,
        terms_checked: u64,
        started: Instant,
    ) -> Self {
        let elapsed_ms = (started.elapsed().as_secs_f64() * 1e6).round() / 1e3;
        VerificationReport {
            identity,
            params,
            status: if discrepancy.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            discrepancy,
            terms_checked,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Stable ordering key for batches of reports.
    pub fn sort_key(&self) -> (IdentityKind, Vec<(String, String)>) {
        (
            self.identity,
            self.params
                .iter()
                .map(|(k, v)| {
                    let v = match v {
                        ParamValue::Int(i) => format!("{:+020}", i),
                        other => other.to_string(),
                    };
                    (k.clone(), v)
                })
                .collect(),
        )
    }
}

pub(crate) fn params<const N: usize>(entries: [(&str, ParamValue); N]) -> BTreeMap<String, ParamValue> {
    entries.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

pub(crate) fn with_options(mut p: BTreeMap<String, ParamValue>, opts: &VerifyOptions) -> BTreeMap<String, ParamValue> {
    p.insert("convention".into(), opts.convention.name().into());
    p.insert("quotient".into(), i64::from(opts.quotient).into());
    p
}

/// Compare two series at every `(a, b)` within the shared caps accepted by
/// `keep`. Returns the first mismatch in `(a, b)` order and the number of
/// positions compared.
pub(crate) fn compare_series<F>(lhs: &BiSeries, rhs: &BiSeries, exec: Exec, keep: F) -> (Option<Discrepancy>, u64)
where
    F: Fn(u32, u32) -> bool,
{
    assert_eq!(lhs.caps(), rhs.caps());
    let (cap_x, cap_y) = lhs.caps();
    let grid: Vec<(u32, u32)> = (0..=cap_x)
        .flat_map(|a| (0..=cap_y).map(move |b| (a, b)))
        .filter(|&(a, b)| keep(a, b))
        .collect();
    let diffs = exec.map(&grid, |&(a, b)| {
        let zero = SymPoly::zero(lhs.nvars());
        let l = lhs.coeff(a, b).unwrap_or(&zero);
        let r = rhs.coeff(a, b).unwrap_or(&zero);
        (l != r).then(|| l - r)
    });
    let first = grid
        .iter()
        .zip(diffs)
        .find_map(|(&(a, b), d)| d.map(|d| Discrepancy::coefficient(a, b, d)));
    (first, grid.len() as u64)
}
