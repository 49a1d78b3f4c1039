//! Littlewood–Richardson resultant matrices.
//!
//! `A^{LR}_{n,m}` has one column per factor `x_j - y_i`: `-1` in row `x_j`,
//! `+1` in row `y_i`. It is totally unimodular of rank `n + m - 1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vecpart::integer_rank;

/// Largest row count for exhaustive minor enumeration.
pub const MAX_EXHAUSTIVE_ROWS: usize = 8;
/// Largest column count for exhaustive minor enumeration.
pub const MAX_EXHAUSTIVE_COLS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedMatrix {
    rows: Vec<String>,
    columns: Vec<Vec<i64>>,
}

impl SignedMatrix {
    pub fn new(rows: Vec<String>, columns: Vec<Vec<i64>>) -> Result<Self> {
        for col in &columns {
            if col.len() != rows.len() {
                return Err(Error::DimensionMismatch { expected: rows.len(), got: col.len() });
            }
        }
        Ok(SignedMatrix { rows, columns })
    }

    /// Builds from row vectors.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch { expected: width, got: r.len() });
        }
        let columns = (0..width).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
        Self::new((0..rows.len()).map(|i| format!("r{i}")).collect(), columns)
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.columns.len()
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.row_count()).map(|r| self.columns.iter().map(|c| c[r]).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = self.row_vectors().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        integer_rank(&mut m)
    }
}

pub fn build_lr_matrix(n: usize, m: usize) -> Result<SignedMatrix> {
    if n < 1 || m < 1 {
        return Err(Error::BoundTooSmall(n.min(m), 1));
    }
    let rows = (1..=n).map(|j| format!("x{j}")).chain((1..=m).map(|i| format!("y{i}"))).collect();
    let mut columns = Vec::with_capacity(n * m);
    for j in 0..n {
        for i in 0..m {
            let mut c = vec![0; n + m];
            c[j] = -1;
            c[n + i] = 1;
            columns.push(c);
        }
    }
    SignedMatrix::new(rows, columns)
}

/// Determinant by fraction-free elimination.
fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Checks every square minor for a determinant in `{-1, 0, 1}`.
pub fn is_totally_unimodular(a: &SignedMatrix) -> Result<bool> {
    let (r, c) = (a.row_count(), a.col_count());
    if r > MAX_EXHAUSTIVE_ROWS || c > MAX_EXHAUSTIVE_COLS {
        return Err(Error::TooLargeForExhaustiveCheck(r.max(c)));
    }
    let rows = a.row_vectors();
    Ok((1..=r.min(c)).into_par_iter().all(|k| {
        let col_sets = subsets(c, k);
        subsets(r, k).iter().all(|rs| {
            col_sets.iter().all(|cs| {
                let minor = rs.iter().map(|&i| cs.iter().map(|&j| i128::from(rows[i][j])).collect()).collect();
                det(minor).abs() <= 1
            })
        })
    }))
}

/// `(rank, corank) = (n + m - 1, (n - 1)(m - 1))`, checked against row reduction.
pub fn lr_rank_stats(n: usize, m: usize) -> Result<(usize, usize)> {
    let a = build_lr_matrix(n, m)?;
    let rank = a.rank();
    assert_eq!(rank, n + m - 1, "rank of A^LR_({n},{m})");
    Ok((rank, n * m - rank))
}
