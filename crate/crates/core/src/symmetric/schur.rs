use std::borrow::Borrow;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use super::Partition;
use crate::algebra::SymPoly;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest partition weight [`schur_oracle`] will enumerate tableaux for.
pub const ORACLE_WEIGHT_GUARD: u32 = 12;

/// Complete homogeneous symmetric polynomial: the sum of all degree `k`
/// monomials in `n` variables.
pub fn homogeneous_h(k: u32, n: usize) -> SymPoly {
    assert!(n >= 1);
    fn rec(var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            rec(var + 1, left - e, cur, out);
        }
    }
    let mut exps = Vec::new();
    rec(0, k, &mut vec![0; n], &mut exps);
    SymPoly::from_terms(n, exps.into_iter().map(|e| (e, 1)))
}

/// Elementary symmetric polynomial: the sum of all squarefree degree `k`
/// monomials in `n` variables (zero when `k > n`).
pub fn elementary_e(k: u32, n: usize) -> SymPoly {
    assert!(n >= 1);
    let k = k as usize;
    if k > n {
        return SymPoly::zero(n);
    }
    fn rec(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            rec(i + 1, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut exps = Vec::new();
    rec(0, k, &mut vec![0; n], &mut exps);
    SymPoly::from_terms(n, exps.into_iter().map(|e| (e, 1)))
}

/// Schur polynomial `s_lambda(a1, ..., an)` from the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`. Zero if `lambda` has more than
/// `n` parts. The result is not reduced modulo `a1*...*an = 1`.
pub fn schur(lambda: &Partition, n: usize) -> SymPoly {
    schur_with(lambda, n, Exec::Sequential)
}

pub fn schur_with(lambda: &Partition, n: usize, exec: Exec) -> SymPoly {
    assert!(n >= 1);
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    if lambda.is_empty() {
        return SymPoly::one(n);
    }
    let max_index = lambda.part(0) + lambda.len() as u32 - 1;
    let h = exec.map_range(max_index as usize + 1, |k| homogeneous_h(k as u32, n));
    jacobi_trudi(lambda, &h, n, exec)
}

/// Determinant by Laplace expansion along rows, bottom row first, memoizing
/// minors by their column set. `h[k]` must hold `h_k` for every index that
/// occurs in the matrix.
fn jacobi_trudi<H: Borrow<SymPoly> + Sync>(lambda: &Partition, h: &[H], n: usize, exec: Exec) -> SymPoly {
    let len = lambda.len();
    let entry = |row: usize, col: usize| -> Option<&SymPoly> {
        let idx = lambda.part(row) as i64 - row as i64 + col as i64;
        (idx >= 0).then(|| h[idx as usize].borrow())
    };

    // minors[mask] = det of the bottom rows against the columns in `mask`.
    let mut minors: FxHashMap<u32, SymPoly> = FxHashMap::default();
    minors.insert(0, SymPoly::one(n));
    for row in (0..len).rev() {
        let size = (len - row) as u32;
        let masks: Vec<u32> = if row == 0 {
            vec![(1u32 << len) - 1]
        } else {
            (0u32..(1 << len)).filter(|m| m.count_ones() == size).collect()
        };
        let prev = &minors;
        let layer = exec.map(&masks, |&mask| {
            let mut acc = SymPoly::zero(n);
            for (pos, col) in (0..len).filter(|c| mask & (1 << c) != 0).enumerate() {
                let (Some(e), Some(minor)) = (entry(row, col), prev.get(&(mask & !(1 << col)))) else {
                    continue;
                };
                let prod = e.checked_mul(minor, false).expect("same nvars");
                if pos % 2 == 0 {
                    acc += &prod;
                } else {
                    acc -= &prod;
                }
            }
            (mask, acc)
        });
        minors = layer.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    }
    minors
        .remove(&((1u32 << len) - 1))
        .unwrap_or_else(|| SymPoly::zero(n))
}

/// Schur polynomial as the generating function of semistandard Young
/// tableaux of shape `lambda` with entries in `1..=n`. Independent of
/// [`schur`]; limited to weight [`ORACLE_WEIGHT_GUARD`].
pub fn schur_oracle(lambda: &Partition, n: usize) -> Result<SymPoly> {
    assert!(n >= 1);
    if lambda.weight() > ORACLE_WEIGHT_GUARD {
        return Err(Error::WeightAboveGuard {
            weight: lambda.weight(),
            guard: ORACLE_WEIGHT_GUARD,
        });
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut content = vec![0u32; n];
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        tally: &mut HashMap<Vec<u32>, u64>,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            *tally.entry(content.clone()).or_default() += 1;
            return;
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            fill(idx + 1, cells, n, grid, content, tally);
            content[v as usize - 1] -= 1;
        }
    }
    fill(0, &cells, n as u32, &mut grid, &mut content, &mut tally);
    Ok(SymPoly::from_terms(n, tally.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Memo of Schur polynomials in a fixed number of variables, shared across
/// worker threads.
#[derive(Debug)]
pub struct SchurCache {
    n: usize,
    exec: Exec,
    h: RwLock<Vec<Arc<SymPoly>>>,
    table: RwLock<HashMap<Partition, Arc<SymPoly>>>,
}

impl SchurCache {
    pub fn new(n: usize, exec: Exec) -> Self {
        assert!(n >= 1);
        SchurCache {
            n,
            exec,
            h: RwLock::new(Vec::new()),
            table: RwLock::new(HashMap::new()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    fn h_table(&self, upto: usize) -> Vec<Arc<SymPoly>> {
        {
            let h = self.h.read().expect("lock poisoned");
            if h.len() > upto {
                return h[..=upto].to_vec();
            }
        }
        let mut h = self.h.write().expect("lock poisoned");
        let have = h.len();
        if have <= upto {
            let fresh = self
                .exec
                .map_range(upto + 1 - have, |i| Arc::new(homogeneous_h((have + i) as u32, self.n)));
            h.extend(fresh);
        }
        h[..=upto].to_vec()
    }

    pub fn get(&self, lambda: &Partition) -> Arc<SymPoly> {
        if let Some(p) = self.table.read().expect("lock poisoned").get(lambda) {
            return Arc::clone(p);
        }
        let value = if lambda.len() > self.n {
            SymPoly::zero(self.n)
        } else if lambda.is_empty() {
            SymPoly::one(self.n)
        } else {
            let h = self.h_table((lambda.part(0) + lambda.len() as u32 - 1) as usize);
            jacobi_trudi(lambda, &h, self.n, self.exec)
        };
        let value = Arc::new(value);
        self.table
            .write()
            .expect("lock poisoned")
            .entry(lambda.clone())
            .or_insert(value)
            .clone()
    }
}
