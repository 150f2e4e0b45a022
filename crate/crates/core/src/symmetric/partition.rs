use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Integer partition, stored as weakly decreasing positive parts without
/// trailing zeros. The empty partition is the partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self, Error> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition with `counts[i]` columns of height `i + 1`, i.e. whose
    /// conjugate has `counts[i]` parts equal to `i + 1`.
    pub fn from_column_counts(counts: &[u32]) -> Self {
        let mut parts = vec![0u32; counts.len()];
        let mut running = 0;
        for (i, &c) in counts.iter().enumerate().rev() {
            running += c;
            parts[i] = running;
        }
        Partition::new(parts).expect("suffix sums are weakly decreasing")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero-indexed), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// True iff every part of the conjugate is even, i.e. every column of
    /// the Young diagram has even height.
    pub fn is_conjugate_even(&self) -> bool {
        self.conjugate().0.iter().all(|p| p % 2 == 0)
    }

    /// Number of columns of odd height.
    pub fn odd_columns(&self) -> u32 {
        self.conjugate().0.iter().filter(|p| *p % 2 == 1).count() as u32
    }

    /// `self + (1^n)`: prepend a full column of height `n`.
    pub fn add_full_column(&self, n: usize) -> Partition {
        assert!(self.len() <= n);
        Partition(self.padded(n).into_iter().map(|p| p + 1).collect())
    }

    /// All partitions obtained by adding a single box, at most `max_parts`
    /// rows, in increasing order of the row that grows.
    pub fn add_one_box(&self, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i >= max_parts {
                break;
            }
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.padded(i + 1);
                parts[i] += 1;
                out.push(Partition(parts));
            }
        }
        out
    }
}

/// All partitions of `weight` with at most `max_parts` parts, in reverse
/// lexicographic order (largest first part first).
pub fn enumerate_partitions(weight: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, max_parts, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    /// `3+1`; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3+1`, `3,1`, `(3,1)`; `0`, `()` and the empty string give
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(['+', ','])
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>, Error>>()?;
        Partition::new(parts)
    }
}
