//! Vector partition functions.
//!
//! [`vp_count`] counts nonnegative integer solutions of `A x = b` for any
//! matrix with nonnegative columns. [`ps22`] is the closed-form chamber
//! quasipolynomial of the matrix with columns `(1,0), (0,1), (1,1), (1,2)`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{Counter, Int};

/// Nonnegative integer matrix with labelled rows and multiset columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct VPMatrix {
    rows: Vec<String>,
    columns: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct RawMatrix {
    rows: Vec<String>,
    columns: Vec<Vec<u64>>,
}

impl TryFrom<RawMatrix> for VPMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        VPMatrix::new(raw.rows, raw.columns)
    }
}

impl VPMatrix {
    pub fn new(rows: Vec<String>, columns: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidMatrix("a matrix needs at least one row".into()));
        }
        for col in &columns {
            if col.len() != rows.len() {
                return Err(Error::DimensionMismatch { expected: rows.len(), got: col.len() });
            }
            if col.iter().all(|&e| e == 0) {
                return Err(Error::InvalidMatrix("zero column".into()));
            }
        }
        Ok(VPMatrix { rows, columns })
    }

    /// Rows labelled `r0, r1, ...`.
    pub fn unlabeled(row_count: usize, columns: Vec<Vec<u64>>) -> Result<Self> {
        Self::new((0..row_count).map(|i| format!("r{i}")).collect(), columns)
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn columns(&self) -> &[Vec<u64>] {
        &self.columns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.columns.len()
    }

    pub fn max_entry(&self) -> u64 {
        self.columns.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Columns sorted, for order-insensitive comparison.
    pub fn column_multiset(&self) -> Vec<Vec<u64>> {
        let mut cols = self.columns.clone();
        cols.sort();
        cols
    }

    /// Whether every standard basis vector occurs as a column.
    pub fn has_all_basis_vectors(&self) -> bool {
        (0..self.row_count()).all(|r| self.columns.iter().any(|c| is_unit(c, r)))
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = (0..self.row_count())
            .map(|r| self.columns.iter().map(|c| c[r] as i128).collect())
            .collect();
        integer_rank(&mut m)
    }
}

impl fmt::Display for VPMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, label) in self.rows.iter().enumerate() {
            write!(f, "{label:>4} |")?;
            for c in &self.columns {
                write!(f, " {}", c[r])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn is_unit(col: &[u64], r: usize) -> bool {
    col.iter().enumerate().all(|(i, &e)| if i == r { e == 1 } else { e == 0 })
}

/// Rank of an integer matrix (rows of equal length), destroying it.
pub(crate) fn integer_rank(m: &mut [Vec<i128>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of multisets of columns of `a` summing to `b`, i.e. the number of
/// nonnegative integer solutions of `A x = b`.
///
/// A `b` with a negative entry lies outside the cone and counts 0.
pub fn vp_count<C: Counter>(a: &VPMatrix, b: &[i64]) -> Result<C> {
    VpCounter::new(a).count(b)
}

/// Reusable counter for many right-hand sides over one matrix.
///
/// Depth-first enumeration over the non-slack columns: one unit column per
/// row (when present) acts as a slack variable, so only the remaining columns
/// are branched on, and a leaf is feasible when every row without slack has
/// zero residual. Subtrees are memoized on `(depth, residual)` across calls.
pub struct VpCounter<C> {
    rows: usize,
    branch: Vec<Vec<u64>>,
    slack: Vec<bool>,
    memo: HashMap<(usize, Vec<u64>), C>,
}

impl<C: Counter> VpCounter<C> {
    pub fn new(a: &VPMatrix) -> Self {
        let rows = a.row_count();
        let mut slack = vec![false; rows];
        let mut branch = Vec::new();
        for col in a.columns() {
            match (0..rows).find(|&r| is_unit(col, r)) {
                Some(r) if !slack[r] => slack[r] = true,
                _ => branch.push(col.clone()),
            }
        }
        // largest column sums first prune hardest
        branch.sort_by_key(|c| std::cmp::Reverse(c.iter().sum::<u64>()));
        VpCounter { rows, branch, slack, memo: HashMap::new() }
    }

    pub fn count(&mut self, b: &[i64]) -> Result<C> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        if b.iter().any(|&v| v < 0) {
            return Ok(C::zero());
        }
        Ok(self.visit(0, b.iter().map(|&v| v as u64).collect()))
    }

    /// Drops memoized subtrees.
    pub fn clear(&mut self) {
        self.memo.clear();
    }

    fn visit(&mut self, depth: usize, residual: Vec<u64>) -> C {
        if depth == self.branch.len() {
            let ok = residual.iter().zip(&self.slack).all(|(&r, &s)| s || r == 0);
            return if ok { C::one() } else { C::zero() };
        }
        let key = (depth, residual);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let col = self.branch[depth].clone();
        let max_mult = col
            .iter()
            .zip(&key.1)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| r / e)
            .min()
            .expect("columns are nonzero");
        let mut total = C::zero();
        let mut residual = key.1.clone();
        for k in 0..=max_mult {
            if k > 0 {
                for (r, &e) in residual.iter_mut().zip(&col) {
                    *r -= e;
                }
            }
            total = total + self.visit(depth + 1, residual.clone());
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// The columns `(1,0), (0,1), (1,1), (1,2)` over rows `(s0, s1)`.
pub fn a22() -> VPMatrix {
    VPMatrix::new(
        vec!["s0".into(), "s1".into()],
        vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]],
    )
    .expect("static matrix")
}

/// One-row matrix whose columns are the given parts.
pub fn one_row(parts: &[u64]) -> VPMatrix {
    VPMatrix::unlabeled(1, parts.iter().map(|&p| vec![p]).collect()).expect("parts are positive")
}

/// Chambers of the `(n, m)` quadrant for [`ps22`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Region {
    /// `m <= n`
    I,
    /// `2n <= m`
    II,
    /// `n <= m <= 2n`
    III,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::I => "I",
            Region::II => "II",
            Region::III => "III",
        };
        f.write_str(s)
    }
}

/// Every chamber containing `(n, m)`; more than one on a shared wall.
pub fn ps22_region<T: Int>(n: &T, m: &T) -> Vec<Region> {
    assert!(!n.is_negative() && !m.is_negative(), "regions are defined on the nonnegative quadrant");
    let two_n = n.clone() + n.clone();
    let mut out = Vec::with_capacity(3);
    if m <= n {
        out.push(Region::I);
    }
    if *m >= two_n {
        out.push(Region::II);
    }
    if n <= m && *m <= two_n {
        out.push(Region::III);
    }
    out
}

/// Quadratic quasipolynomial valid on one chamber:
/// `nn*n^2 + nm*n*m + mm*m^2 + n1*n + m1*m + c(m mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberFormula<T: Int> {
    pub region: Region,
    pub nn: Ratio<T>,
    pub nm: Ratio<T>,
    pub mm: Ratio<T>,
    pub n1: Ratio<T>,
    pub m1: Ratio<T>,
    /// Constant term for even and odd `m`.
    pub constant: [Ratio<T>; 2],
}

impl<T: Int> ChamberFormula<T> {
    pub fn for_region(region: Region) -> Self {
        let q = |a: i64, b: i64| Ratio::new(<T as Int>::from_i64(a), <T as Int>::from_i64(b));
        match region {
            // m^2/4 + m + 7/8 + (-1)^m/8
            Region::I => ChamberFormula {
                region,
                nn: q(0, 1),
                nm: q(0, 1),
                mm: q(1, 4),
                n1: q(0, 1),
                m1: q(1, 1),
                constant: [q(1, 1), q(3, 4)],
            },
            // n^2/2 + 3n/2 + 1
            Region::II => ChamberFormula {
                region,
                nn: q(1, 2),
                nm: q(0, 1),
                mm: q(0, 1),
                n1: q(3, 2),
                m1: q(0, 1),
                constant: [q(1, 1), q(1, 1)],
            },
            // nm - n^2/2 - m^2/4 + (n+m)/2 + 7/8 + (-1)^m/8
            Region::III => ChamberFormula {
                region,
                nn: q(-1, 2),
                nm: q(1, 1),
                mm: q(-1, 4),
                n1: q(1, 2),
                m1: q(1, 2),
                constant: [q(1, 1), q(3, 4)],
            },
        }
    }

    pub fn eval(&self, n: &T, m: &T) -> Ratio<T> {
        let n = Ratio::from_integer(n.clone());
        let parity = usize::from(m.is_odd());
        let m = Ratio::from_integer(m.clone());
        self.nn.clone() * n.clone() * n.clone()
            + self.nm.clone() * n.clone() * m.clone()
            + self.mm.clone() * m.clone() * m.clone()
            + self.n1.clone() * n
            + self.m1.clone() * m
            + self.constant[parity].clone()
    }
}

/// `p_S(n, m)`: vector partitions of `(n, m)` with parts
/// `(1,0), (0,1), (1,1), (1,2)`. Zero outside the nonnegative quadrant.
pub fn ps22<T: Int>(n: &T, m: &T) -> T {
    if n.is_negative() || m.is_negative() {
        return T::zero();
    }
    let region = ps22_region(n, m)[0];
    let v = ChamberFormula::<T>::for_region(region).eval(n, m);
    assert!(v.is_integer(), "chamber formula produced a fraction at ({n}, {m})");
    v.to_integer()
}

/// `ps22` on machine integers, for sweeps.
pub fn ps22_i64(n: i64, m: i64) -> i64 {
    ps22::<i64>(&n, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// Naive enumeration over all multiplicity vectors; no slack, no memo.
    fn brute_force(a: &VPMatrix, b: &[i64]) -> u64 {
        fn rec(cols: &[Vec<u64>], residual: &mut Vec<i64>) -> u64 {
            let Some((col, rest)) = cols.split_first() else {
                return u64::from(residual.iter().all(|&r| r == 0));
            };
            let mut total = 0;
            let saved = residual.clone();
            loop {
                total += rec(rest, residual);
                for (r, &e) in residual.iter_mut().zip(col) {
                    *r -= e as i64;
                }
                if residual.iter().any(|&r| r < 0) {
                    break;
                }
            }
            *residual = saved;
            total
        }
        if b.iter().any(|&v| v < 0) {
            return 0;
        }
        rec(a.columns(), &mut b.to_vec())
    }

    #[test]
    fn vp_count_examples() {
        let a = a22();
        assert_eq!(vp_count::<u64>(&a, &[2, 3]).unwrap(), 5);
        assert_eq!(brute_force(&a, &[2, 3]), 5);
        assert_eq!(vp_count::<u64>(&a, &[0, 0]).unwrap(), 1);
        for m in 0..30 {
            assert_eq!(vp_count::<u64>(&a, &[0, m]).unwrap(), 1);
        }
        assert_eq!(vp_count::<u64>(&a, &[-1, 3]).unwrap(), 0);
        assert_eq!(
            vp_count::<u64>(&a, &[1, 2, 3]),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn vp_count_matches_brute_force_without_unit_columns() {
        // no slack rows at all
        let a = VPMatrix::unlabeled(2, vec![vec![2, 1], vec![1, 3], vec![1, 1], vec![3, 2]]).unwrap();
        for x in 0..15 {
            for y in 0..15 {
                assert_eq!(vp_count::<u64>(&a, &[x, y]).unwrap(), brute_force(&a, &[x, y]), "({x},{y})");
            }
        }
    }

    #[test]
    fn column_order_is_irrelevant() {
        let a = a22();
        let mut cols = a.columns().to_vec();
        cols.reverse();
        cols.push(vec![1, 1]);
        let b = VPMatrix::unlabeled(2, cols.clone()).unwrap();
        cols.rotate_left(2);
        let c = VPMatrix::unlabeled(2, cols).unwrap();
        for x in 0..12 {
            for y in 0..12 {
                let v: u64 = vp_count(&b, &[x, y]).unwrap();
                assert_eq!(v, vp_count::<u64>(&c, &[x, y]).unwrap());
                assert_eq!(v, brute_force(&b, &[x, y]));
            }
        }
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(VPMatrix::unlabeled(2, vec![vec![0, 0]]), Err(Error::InvalidMatrix(_))));
        assert!(matches!(VPMatrix::unlabeled(2, vec![vec![1]]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(VPMatrix::new(vec![], vec![]), Err(Error::InvalidMatrix(_))));
        let json = r#"{"rows":["s0","s1"],"columns":[[1,0],[0,1],[1,1],[1,2]]}"#;
        let a: VPMatrix = serde_json::from_str(json).unwrap();
        assert_eq!(a, a22());
        assert!(serde_json::from_str::<VPMatrix>(r#"{"rows":["a"],"columns":[[0]]}"#).is_err());
    }

    #[test]
    fn ps22_examples() {
        let cases = [((7, 11), 32), ((7, 7), 20), ((7, 5), 12), ((7, 1), 2), ((3, 11), 10), ((3, 3), 6), ((3, 1), 2)];
        for ((n, m), v) in cases {
            assert_eq!(ps22_i64(n, m), v, "({n},{m})");
        }
        assert_eq!(ps22_i64(0, 0), 1);
        assert_eq!(ps22_i64(2, 3), 5);
        assert_eq!(ps22_i64(-1, 3), 0);
        assert_eq!(ps22_i64(3, -1), 0);
        assert_eq!(ps22::<BigInt>(&BigInt::from(7), &BigInt::from(11)), BigInt::from(32));
        // recorded special values
        for n in 1..20 {
            assert_eq!(ps22_i64(n, 1), 2);
            assert_eq!(ps22_i64(n, 0), 1);
            assert_eq!(ps22_i64(0, n), 1);
        }
        for m in 2..20 {
            assert_eq!(ps22_i64(1, m), 3);
        }
    }

    #[test]
    fn region_examples() {
        assert_eq!(ps22_region(&7, &11), vec![Region::III]);
        assert_eq!(ps22_region(&3, &11), vec![Region::II]);
        assert_eq!(ps22_region(&5, &5), vec![Region::I, Region::III]);
        assert_eq!(ps22_region(&5, &10), vec![Region::II, Region::III]);
        assert_eq!(ps22_region(&7, &1), vec![Region::I]);
    }

    #[test]
    fn closed_form_matches_enumeration() {
        let a = a22();
        for n in 0..=40i64 {
            for m in 0..=40i64 {
                assert_eq!(ps22_i64(n, m), vp_count::<i64>(&a, &[n, m]).unwrap(), "({n},{m})");
            }
        }
    }

    #[test]
    fn chamber_formulas_agree_on_walls() {
        let f1 = ChamberFormula::<i64>::for_region(Region::I);
        let f2 = ChamberFormula::<i64>::for_region(Region::II);
        let f3 = ChamberFormula::<i64>::for_region(Region::III);
        for n in 0..=100i64 {
            assert_eq!(f1.eval(&n, &n), f3.eval(&n, &n), "m = n = {n}");
            assert_eq!(f2.eval(&n, &(2 * n)), f3.eval(&n, &(2 * n)), "m = 2n, n = {n}");
        }
    }

    #[test]
    fn scalar_types_agree() {
        for n in 0..25i64 {
            for m in 0..25i64 {
                let v = ps22_i64(n, m);
                assert_eq!(ps22::<i128>(&(n as i128), &(m as i128)), v as i128);
                assert_eq!(ps22::<BigInt>(&BigInt::from(n), &BigInt::from(m)), BigInt::from(v));
            }
        }
    }

    #[test]
    fn one_row_examples() {
        // S = {1,1,2}
        let a = one_row(&[1, 1, 2]);
        for n in 0..=60i64 {
            let v = vp_count::<i64>(&a, &[n]).unwrap();
            // n^2/4 + n + 1 (even), n^2/4 + n + 3/4 (odd), times 4
            let four_v = if n % 2 == 0 { n * n + 4 * n + 4 } else { n * n + 4 * n + 3 };
            assert_eq!(4 * v, four_v, "n = {n}");
        }
        // S = {1,1,1}
        let a = one_row(&[1, 1, 1]);
        for n in 0..=60i64 {
            assert_eq!(vp_count::<i64>(&a, &[n]).unwrap(), (n + 1) * (n + 2) / 2);
        }
    }

    #[test]
    fn rank_and_stats() {
        let a = a22();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.max_entry(), 2);
        assert!(a.has_all_basis_vectors());
        let b = VPMatrix::unlabeled(3, vec![vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert_eq!(b.rank(), 1);
        assert!(!b.has_all_basis_vectors());
    }
}
