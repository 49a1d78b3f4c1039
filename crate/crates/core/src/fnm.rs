//! The vector partition function `F_{n,m}` and atomic coefficients for
//! `l(mu) <= n`, `l(nu) <= m`, `l(lam) <= nm`.
//!
//! Variables are dehomogenized as `X = (1, x_1, ..., x_{n-1})` and
//! `Y = (1, y_1, ..., y_{m-1})`, and the products `XY` are ordered
//! `1 > x_1 > ... > x_{n-1} > y_1 > ... > y_{m-1} > x_1 y_1 > x_1 y_2 > ... > x_{n-1} y_{m-1}`.
//! Every factor `u - v` (`u > v`) of `a_delta(XY) / (a_delta(X) a_delta(Y))`
//! is written `u (1 - v/u)`, and the change of variables
//! `x_i = s_1...s_i T^i`, `y_j = s_0...s_{n-1} T^{n-1} t_1...t_{j-1}`
//! with `T = t_1...t_{m-2}` maps every `v/u` to a nonnegative exponent vector.

use crate::error::{Error, Result};
use crate::num::Counter;
use crate::partition::{KroneckerTriple, Partition};
use crate::vecpart::{VPMatrix, VpCounter};

/// Exponent vectors of `x_i` and `y_j` over the rows `(s_0..s_{n-1}, t_1..t_{m-2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    n: usize,
    m: usize,
    rows: Vec<String>,
    x: Vec<Vec<i64>>,
    y: Vec<Vec<i64>>,
}

impl Substitution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    /// Exponent of `x_i`, `1 <= i <= n - 1`; `i = 0` is the constant 1.
    pub fn x(&self, i: usize) -> &[i64] {
        &self.x[i]
    }

    /// Exponent of `y_j`, `1 <= j <= m - 1`; `j = 0` is the constant 1.
    pub fn y(&self, j: usize) -> &[i64] {
        &self.y[j]
    }

    /// Exponent of `x_i y_j`.
    pub fn xy(&self, i: usize, j: usize) -> Vec<i64> {
        add(&self.x[i], &self.y[j])
    }

    /// The elements of `XY` as `(i, j)` index pairs, largest first.
    pub fn xy_order(&self) -> Vec<(usize, usize)> {
        let mut order = vec![(0, 0)];
        order.extend((1..self.n).map(|i| (i, 0)));
        order.extend((1..self.m).map(|j| (0, j)));
        for i in 1..self.n {
            order.extend((1..self.m).map(|j| (i, j)));
        }
        order
    }
}

impl std::fmt::Display for Substitution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let monomial = |e: &[i64]| -> String {
            let factors: Vec<String> = self
                .rows
                .iter()
                .zip(e)
                .filter(|(_, &p)| p != 0)
                .map(|(r, &p)| if p == 1 { r.clone() } else { format!("{r}^{p}") })
                .collect();
            factors.join("*")
        };
        let mut parts: Vec<String> = (1..self.n).map(|i| format!("x{i} -> {}", monomial(&self.x[i]))).collect();
        parts.extend((1..self.m).map(|j| format!("y{j} -> {}", monomial(&self.y[j]))));
        write!(f, "{}", parts.join(", "))
    }
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn check_dims(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(Error::BoundTooSmall(n.min(m), 2));
    }
    Ok(())
}

pub fn build_substitution(n: usize, m: usize) -> Result<Substitution> {
    check_dims(n, m)?;
    let rows: Vec<String> = (0..n).map(|i| format!("s{i}")).chain((1..m - 1).map(|j| format!("t{j}"))).collect();
    let width = rows.len();
    let t_power = |e: &mut [i64], p: i64| e[n..].iter_mut().for_each(|v| *v += p);

    let mut x = vec![vec![0; width]];
    for i in 1..n {
        let mut e = vec![0; width];
        e[1..=i].iter_mut().for_each(|v| *v = 1);
        t_power(&mut e, i as i64);
        x.push(e);
    }
    let mut y = vec![vec![0; width]];
    for j in 1..m {
        let mut e = vec![0; width];
        e[..n].iter_mut().for_each(|v| *v = 1);
        t_power(&mut e, n as i64 - 1);
        e[n..n + j - 1].iter_mut().for_each(|v| *v += 1);
        y.push(e);
    }
    Ok(Substitution { n, m, rows, x, y })
}

/// The pairs `(u, v)`, `u > v`, of the cross factors, grouped as
/// A: `(x_i, y_j)`, B: `(1, x_i y_j)`, C: `(x_i, x_i y_j)`, `(y_j, x_i y_j)`,
/// D: `(x_k, x_i y_j)`, `(y_l, x_i y_j)` with `k != i`, `l != j`,
/// E: `(x_i y_j, x_k y_l)` with `i < k`, `j != l`,
/// F: `(x_i y_j, x_k y_j)` with `i < k` and `(x_i y_j, x_i y_l)` with `j < l`.
/// Elements are `(i, j)` index pairs into `X` and `Y`.
pub(crate) fn cross_pairs(n: usize, m: usize) -> Vec<((usize, usize), (usize, usize))> {
    let xs = 1..n;
    let ys = 1..m;
    let mut pairs = Vec::new();
    for i in xs.clone() {
        for j in ys.clone() {
            pairs.push(((i, 0), (0, j)));
        }
    }
    for i in xs.clone() {
        for j in ys.clone() {
            pairs.push(((0, 0), (i, j)));
        }
    }
    for i in xs.clone() {
        for j in ys.clone() {
            pairs.push(((i, 0), (i, j)));
            pairs.push(((0, j), (i, j)));
        }
    }
    for i in xs.clone() {
        for j in ys.clone() {
            for k in xs.clone().filter(|&k| k != i) {
                pairs.push(((k, 0), (i, j)));
            }
            for l in ys.clone().filter(|&l| l != j) {
                pairs.push(((0, l), (i, j)));
            }
        }
    }
    for i in xs.clone() {
        for k in i + 1..n {
            for j in ys.clone() {
                for l in ys.clone().filter(|&l| l != j) {
                    pairs.push(((i, j), (k, l)));
                }
            }
        }
    }
    for j in ys.clone() {
        for i in xs.clone() {
            for k in i + 1..n {
                pairs.push(((i, j), (k, j)));
            }
        }
    }
    for i in xs {
        for j in ys.clone() {
            for l in j + 1..m {
                pairs.push(((i, j), (i, l)));
            }
        }
    }
    pairs
}

/// The matrix `A_{n,m}` of `F_{n,m}`: one column per cross factor, the
/// exponent of `v/u` under the substitution.
pub fn build_fnm_matrix(n: usize, m: usize) -> Result<VPMatrix> {
    let sub_ = build_substitution(n, m)?;
    let columns: Vec<Vec<u64>> = cross_pairs(n, m)
        .into_iter()
        .map(|((ui, uj), (vi, vj))| {
            let e = sub(&sub_.xy(vi, vj), &sub_.xy(ui, uj));
            e.into_iter()
                .map(|v| u64::try_from(v).expect("substitution makes every column nonnegative"))
                .collect()
        })
        .collect();
    debug_assert_eq!(columns.len(), binom2(n * m) - binom2(n) - binom2(m));
    VPMatrix::new(sub_.rows.clone(), columns)
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `d = (n^2 m^2 - n^2 - m^2 - nm - n - m) / 2 + 2`, the number of columns
/// minus the rank of `A_{n,m}`.
pub fn degree_bound(n: usize, m: usize) -> Result<usize> {
    check_dims(n, m)?;
    Ok((n * n * m * m - n * n - m * m - n * m - n - m) / 2 + 2)
}

/// Keeps the columns vanishing on every row of `zero_rows`, then deletes those rows.
pub fn face_restrict(a: &VPMatrix, zero_rows: &[usize]) -> Result<VPMatrix> {
    if let Some(&index) = zero_rows.iter().find(|&&r| r >= a.row_count()) {
        return Err(Error::IndexOutOfRange { index, rows: a.row_count() });
    }
    let keep: Vec<usize> = (0..a.row_count()).filter(|r| !zero_rows.contains(r)).collect();
    if keep.is_empty() {
        return Err(Error::InvalidMatrix("every row restricted to zero".into()));
    }
    let rows = keep.iter().map(|&r| a.rows()[r].clone()).collect();
    let columns = a
        .columns()
        .iter()
        .filter(|c| zero_rows.iter().all(|&r| c[r] == 0))
        .map(|c| keep.iter().map(|&r| c[r]).collect())
        .collect();
    VPMatrix::new(rows, columns)
}

/// Right-hand side `b` for which `vp_count(A_{n,m}, b)` is the atomic coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicShift {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<String>,
    pub b: Vec<i64>,
}

fn parts_i64(p: &Partition, len: usize) -> Result<Vec<i64>> {
    (1..=len)
        .map(|i| i64::try_from(p.part(i)).map_err(|_| Error::Overflow(p.part(i))))
        .collect()
}

/// Linear forms of the shift for `(n, m)` in `{(2,2), (2,3), (3,3)}`.
pub fn atomic_shift(n: usize, m: usize, triple: &KroneckerTriple) -> Result<AtomicShift> {
    for (p, bound) in [(triple.mu(), n), (triple.nu(), m), (triple.lam(), n * m)] {
        if p.len() > bound {
            return Err(Error::LengthExceedsBound { length: p.len(), bound });
        }
    }
    let mu = parts_i64(triple.mu(), n)?;
    let nu = parts_i64(triple.nu(), m)?;
    let l = parts_i64(triple.lam(), n * m)?;
    // 1-indexed accessors; tail(i) = lam_i + lam_{i+1} + ...
    let mu_ = |i: usize| mu[i - 1];
    let nu_ = |i: usize| nu[i - 1];
    let la = |i: usize| l[i - 1];
    let tail = |i: usize| l[i - 1..].iter().sum::<i64>();
    let b = match (n, m) {
        (2, 2) => vec![nu_(2) - la(3) - la(4), mu_(2) + nu_(2) - la(2) - la(3) - 2 * la(4)],
        (2, 3) => vec![
            nu_(2) + nu_(3) - (la(3) + la(4) + la(5) + la(6)),
            mu_(2) + nu_(2) + nu_(3) - (la(2) + la(3) + la(4) + 2 * la(5) + 2 * la(6)),
            mu_(2) + nu_(2) + 2 * nu_(3) - (la(2) + la(3) + 2 * la(4) + 2 * la(5) + 3 * la(6)),
        ],
        (3, 3) => {
            let d = la(2) + 2 * la(3) + 2 * la(4) + 3 * la(5) + 3 * la(6) + 4 * la(7) + 4 * la(8) + 5 * la(9);
            vec![
                nu_(2) + nu_(3) - tail(4),
                mu_(2) + mu_(3) + nu_(2) + nu_(3) - (tail(2) + tail(6)),
                mu_(3) + nu_(2) + nu_(3) - (tail(3) + tail(8)),
                mu_(2) + 2 * mu_(3) + 2 * nu_(2) + 3 * nu_(3) - d,
            ]
        }
        _ => return Err(Error::UnsupportedDimension(n, m)),
    };
    let rows = build_substitution(n, m)?.rows;
    Ok(AtomicShift { n, m, rows, b })
}

#[cfg(test)]
/// Exponent, under the substitution, of the monomial `sum_k e_k * XY_k`.
fn diagonal_exponent(sub_: &Substitution, exps: &[i64]) -> Vec<i64> {
    let mut total = vec![0; sub_.rows.len()];
    for (&(i, j), &e) in sub_.xy_order().iter().zip(exps) {
        for (t, v) in total.iter_mut().zip(sub_.xy(i, j)) {
            *t += e * v;
        }
    }
    total
}

#[cfg(test)]
/// Exponent of the leading monomial of `a_{lam+delta}[XY]` (permuted by
/// `sigma`) subtracted from that of `a_{mu+delta}[X] a_{nu+delta}[Y]`, plus
/// the exponent of the product of the leading terms `u` of all cross factors.
/// With the identity permutation this is the atomic shift for every `(n, m)`.
pub(crate) fn alternant_shift(sub_: &Substitution, triple: &KroneckerTriple, sigma: &[usize]) -> Result<Vec<i64>> {
    let (n, m) = (sub_.n, sub_.m);
    let nm = n * m;
    let mu = parts_i64(triple.mu(), n)?;
    let nu = parts_i64(triple.nu(), m)?;
    let lam = parts_i64(triple.lam(), nm)?;
    let mut target = vec![0; sub_.rows.len()];
    for i in 1..n {
        let e = mu[i] + (n - 1 - i) as i64;
        target.iter_mut().zip(sub_.x(i)).for_each(|(t, v)| *t += e * v);
    }
    for j in 1..m {
        let e = nu[j] + (m - 1 - j) as i64;
        target.iter_mut().zip(sub_.y(j)).for_each(|(t, v)| *t += e * v);
    }
    let shifted: Vec<i64> = (0..nm).map(|k| lam[k] + (nm - 1 - k) as i64).collect();
    let permuted: Vec<i64> = sigma.iter().map(|&k| shifted[k]).collect();
    let mut b = sub(&target, &diagonal_exponent(sub_, &permuted));
    for ((ui, uj), _) in cross_pairs(n, m) {
        b = add(&b, &sub_.xy(ui, uj));
    }
    Ok(b)
}

/// Atomic Kronecker coefficient `vp_count(A_{n,m}, shift)` for
/// `(n, m)` in `{(2,2), (2,3), (3,3)}`.
pub fn atomic_nm<C: Counter>(n: usize, m: usize, triple: &KroneckerTriple) -> Result<C> {
    let shift = atomic_shift(n, m, triple)?;
    VpCounter::new(&build_fnm_matrix(n, m)?).count(&shift.b)
}

/// Like [`atomic_nm`] but reusing a counter built on `A_{n,m}`.
pub fn atomic_nm_with<C: Counter>(counter: &mut VpCounter<C>, n: usize, m: usize, triple: &KroneckerTriple) -> Result<C> {
    counter.count(&atomic_shift(n, m, triple)?.b)
}
