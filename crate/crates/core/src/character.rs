//! Brute-force Kronecker oracles.
//!
//! Two independent routes, both exponential in the weight and only meant for
//! small inputs:
//!
//! * [`kron_oracle_char`] sums products of symmetric-group characters over
//!   conjugacy classes, with characters from the Murnaghan–Nakayama rule.
//! * [`kron_oracle_schur`] expands `s_lam(x_i y_j)` into monomials through
//!   semistandard tableaux and peels off products `s_mu(x) s_nu(y)` from the
//!   lexicographically largest monomial down.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, KroneckerTriple, Partition};

pub const DEFAULT_CHAR_WEIGHT_CAP: u64 = 30;
pub const DEFAULT_SCHUR_WEIGHT_CAP: u64 = 20;

/// A conjugacy class of `S_n`, labelled by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    pub rho: Partition,
    /// Centralizer order `prod i^{m_i} m_i!`.
    pub z_rho: BigInt,
    size: BigInt,
}

impl CycleClass {
    pub fn new(rho: Partition) -> Self {
        let z_rho = centralizer_order(&rho);
        let size = factorial(rho.weight()) / &z_rho;
        CycleClass { rho, z_rho, size }
    }

    /// `n! / z_rho`.
    pub fn size(&self) -> &BigInt {
        &self.size
    }
}

pub fn cycle_classes(n: u64) -> Vec<CycleClass> {
    partitions_of(n, usize::MAX, n).into_iter().map(CycleClass::new).collect()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn centralizer_order(rho: &Partition) -> BigInt {
    let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
    for &p in rho.trimmed() {
        *mult.entry(p).or_default() += 1;
    }
    mult.into_iter()
        .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
}

/// Memoized irreducible character values `chi^lam(rho)`.
///
/// Not shared between threads; parallel sweeps give each worker its own table.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<u64>, Vec<u64>), BigInt>,
    classes: HashMap<u64, Vec<CycleClass>>,
    rows: HashMap<Vec<u64>, Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Conjugacy classes of `S_n`, cached.
    pub fn classes(&mut self, n: u64) -> &[CycleClass] {
        self.classes.entry(n).or_insert_with(|| cycle_classes(n))
    }

    /// `chi^lam` on every class of `S_|lam|`, in [`cycle_classes`] order.
    pub fn row(&mut self, lam: &Partition) -> &[BigInt] {
        let key = lam.trimmed().to_vec();
        if !self.rows.contains_key(&key) {
            let rhos: Vec<Vec<u64>> = self.classes(lam.weight()).iter().map(|c| c.rho.trimmed().to_vec()).collect();
            let row = rhos.iter().map(|rho| self.mn(key.clone(), rho)).collect();
            self.rows.insert(key.clone(), row);
        }
        &self.rows[&key]
    }

    pub fn value(&mut self, lam: &Partition, rho: &Partition) -> Result<BigInt> {
        if lam.weight() != rho.weight() {
            return Err(Error::WeightMismatch(vec![lam.weight(), rho.weight()]));
        }
        let mut rho = rho.trimmed().to_vec();
        rho.sort_unstable_by(|a, b| b.cmp(a));
        Ok(self.mn(lam.trimmed().to_vec(), &rho))
    }

    fn mn(&mut self, lam: Vec<u64>, rho: &[u64]) -> BigInt {
        let Some((&r, rest)) = rho.split_first() else {
            return BigInt::one();
        };
        let key = (lam, rho.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let lam = &key.0;
        // beta-set: lam_i + (L - i), strictly decreasing
        let len = lam.len() as u64;
        let beta: Vec<u64> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i as u64).collect();
        let mut total = BigInt::zero();
        for (idx, &b) in beta.iter().enumerate() {
            if b < r {
                continue;
            }
            let target = b - r;
            if beta.contains(&target) {
                continue;
            }
            // beads strictly between target and b give the leg length
            let leg = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<u64> = next
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (len - 1 - i as u64))
                .filter(|&p| p > 0)
                .collect();
            let v = self.mn(shape, rest);
            if leg % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `chi^lam(rho)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lam: &Partition, rho: &Partition) -> Result<BigInt> {
    CharacterTable::new().value(lam, rho)
}

/// `g_{mu,nu,lam} = sum_rho chi^mu(rho) chi^nu(rho) chi^lam(rho) / z_rho`.
pub fn kron_oracle_char(triple: &KroneckerTriple, weight_cap: u64) -> Result<BigInt> {
    kron_oracle_char_with(&mut CharacterTable::new(), triple, weight_cap)
}

pub fn kron_oracle_char_with(table: &mut CharacterTable, triple: &KroneckerTriple, weight_cap: u64) -> Result<BigInt> {
    let n = triple.weight();
    if n > weight_cap {
        return Err(Error::WeightCapExceeded { weight: n, cap: weight_cap });
    }
    let a = table.row(triple.mu()).to_vec();
    let b = table.row(triple.nu()).to_vec();
    let c = table.row(triple.lam()).to_vec();
    let mut sum = BigInt::zero();
    for (i, ci) in c.iter().enumerate() {
        if a[i].is_zero() || b[i].is_zero() || ci.is_zero() {
            continue;
        }
        sum += &a[i] * &b[i] * ci * table.classes[&n][i].size();
    }
    let (q, r) = sum.div_rem(&factorial(n));
    assert!(r.is_zero(), "character sum not divisible by n! for {triple}");
    assert!(!q.is_negative(), "negative character sum for {triple}");
    Ok(q)
}

/// Polynomial in a fixed number of variables, keyed by exponent vector.
type Poly = BTreeMap<Vec<u32>, BigInt>;

/// Monomial expansion of `s_shape(z_1..z_vars)` via semistandard tableaux.
fn schur_poly(shape: &[u64], vars: usize) -> Poly {
    let mut out = Poly::new();
    if shape.len() > vars {
        return out;
    }
    let rows: Vec<usize> = shape.iter().map(|&p| p as usize).collect();
    let mut tableau: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut content = vec![0u32; vars];
    let cells: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        tableau: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        vars: usize,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            *out.entry(content.clone()).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1u32;
        if j > 0 {
            lo = lo.max(tableau[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(tableau[i - 1][j] + 1);
        }
        // rows below need room for strictly larger entries
        let hi = vars as u32 - (cells_below(tableau, i, j) as u32);
        for v in lo..=hi {
            tableau[i][j] = v;
            content[v as usize - 1] += 1;
            fill(k + 1, cells, tableau, content, vars, out);
            content[v as usize - 1] -= 1;
        }
    }

    fn cells_below(tableau: &[Vec<u32>], i: usize, j: usize) -> usize {
        tableau[i + 1..].iter().take_while(|row| row.len() > j).count()
    }

    fill(0, &cells, &mut tableau, &mut content, vars, &mut out);
    out
}

/// `g_{mu,nu,lam}` for all `mu, nu` with at most `n`, `m` parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SchurExpansion {
    pub entries: BTreeMap<(Partition, Partition), BigInt>,
}

impl SchurExpansion {
    /// Coefficient of `s_mu(x) s_nu(y)`, zero when absent.
    pub fn get(&self, mu: &Partition, nu: &Partition) -> BigInt {
        self.entries.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_default()
    }
}

/// Expands `s_lam[XY]` over alphabets of sizes `n` and `m` into
/// `sum g_{mu,nu,lam} s_mu[X] s_nu[Y]`.
pub fn kron_oracle_schur(lam: &Partition, n: usize, m: usize, weight_cap: u64) -> Result<SchurExpansion> {
    if lam.weight() > weight_cap {
        return Err(Error::WeightCapExceeded { weight: lam.weight(), cap: weight_cap });
    }
    if lam.len() > n * m {
        return Err(Error::LengthExceedsBound { length: lam.len(), bound: n * m });
    }
    // z_{(i,j)} = x_i y_j
    let mut residual = Poly::new();
    for (exp, c) in schur_poly(lam.trimmed(), n * m) {
        let mut key = vec![0u32; n + m];
        for i in 0..n {
            for j in 0..m {
                let e = exp[i * m + j];
                key[i] += e;
                key[n + j] += e;
            }
        }
        *residual.entry(key).or_insert_with(BigInt::zero) += c;
    }
    residual.retain(|_, c| !c.is_zero());

    let mut x_cache: HashMap<Vec<u32>, Poly> = HashMap::new();
    let mut y_cache: HashMap<Vec<u32>, Poly> = HashMap::new();
    let mut out = SchurExpansion::default();
    // x-variables dominate: plain Vec order compares x exponents first
    while let Some((lead, coeff)) = residual.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let (alpha, beta) = lead.split_at(n);
        let decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(alpha) || !decreasing(beta) || coeff.is_negative() {
            return Err(Error::NonzeroResidual);
        }
        let sx = x_cache
            .entry(alpha.to_vec())
            .or_insert_with(|| schur_poly(&alpha.iter().map(|&a| a as u64).collect::<Vec<_>>(), n))
            .clone();
        let sy = y_cache
            .entry(beta.to_vec())
            .or_insert_with(|| schur_poly(&beta.iter().map(|&b| b as u64).collect::<Vec<_>>(), m))
            .clone();
        for (ex, cx) in &sx {
            for (ey, cy) in &sy {
                let mut key = ex.clone();
                key.extend_from_slice(ey);
                let slot = residual.entry(key.clone()).or_insert_with(BigInt::zero);
                *slot -= &coeff * cx * cy;
                if slot.is_zero() {
                    residual.remove(&key);
                }
            }
        }
        if residual.get(&lead).is_some() {
            return Err(Error::NonzeroResidual);
        }
        let mu = Partition::new(alpha.iter().map(|&a| a as u64).collect()).expect("checked decreasing");
        let nu = Partition::new(beta.iter().map(|&b| b as u64).collect()).expect("checked decreasing");
        out.entries.insert((mu, nu), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_partition, triples_of_weight, validate_triple, Bounds, BOUNDS_224};

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn triple(mu: &str, nu: &str, lam: &str) -> KroneckerTriple {
        validate_triple(&p(mu), &p(nu), &p(lam), Bounds::new(9, 9, 9)).unwrap()
    }

    /// Standard Young tableaux counted by brute-force removal of corners.
    fn syt_count(shape: &[u64]) -> u64 {
        if shape.iter().all(|&p| p == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
            if corner {
                let mut s = shape.to_vec();
                s[i] -= 1;
                total += syt_count(&s);
            }
        }
        total
    }

    #[test]
    fn character_examples() {
        for n in 1..7u64 {
            for rho in partitions_of(n, usize::MAX, n) {
                assert_eq!(mn_character(&Partition::row(n), &rho).unwrap(), BigInt::one());
            }
        }
        assert_eq!(mn_character(&p("1,1"), &p("2")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), BigInt::from(syt_count(&[2, 1])));
        assert_eq!(syt_count(&[2, 1]), 2);
        assert!(matches!(mn_character(&p("2"), &p("1")), Err(Error::WeightMismatch(_))));
    }

    #[test]
    fn dimensions_match_tableau_counts() {
        for n in 1..9u64 {
            let identity = Partition::new(vec![1; n as usize]).unwrap();
            for lam in partitions_of(n, usize::MAX, n) {
                let dim = mn_character(&lam, &identity).unwrap();
                assert_eq!(dim, BigInt::from(syt_count(lam.trimmed())), "{lam}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..12u64 {
            let total: BigInt = cycle_classes(n).iter().map(CycleClass::size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn column_orthogonality() {
        let mut table = CharacterTable::new();
        for n in 1..=10u64 {
            let classes = cycle_classes(n);
            let lams = partitions_of(n, usize::MAX, n);
            for a in &lams {
                for b in &lams {
                    let mut s = BigInt::zero();
                    for c in &classes {
                        s += table.value(a, &c.rho).unwrap() * table.value(b, &c.rho).unwrap() * c.size();
                    }
                    let expected = if a == b { factorial(n) } else { BigInt::zero() };
                    assert_eq!(s, expected, "n={n} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn char_oracle_examples() {
        let g = |mu, nu, lam| kron_oracle_char(&triple(mu, nu, lam), DEFAULT_CHAR_WEIGHT_CAP).unwrap();
        assert_eq!(g("1,1", "1,1", "2"), BigInt::one());
        assert_eq!(g("1,1", "1,1", "1,1"), BigInt::zero());
        // 2^3/6 + 0 + (-1)^3/3 = 1
        assert_eq!(g("2,1", "2,1", "2,1"), BigInt::one());
        let big = triple("31", "31", "31");
        assert_eq!(
            kron_oracle_char(&big, DEFAULT_CHAR_WEIGHT_CAP),
            Err(Error::WeightCapExceeded { weight: 31, cap: 30 })
        );
    }

    #[test]
    fn char_oracle_symmetry() {
        use rayon::prelude::*;
        for n in 0..=12u64 {
            let lams = partitions_of(n, usize::MAX, n);
            let bounds = Bounds::new(n as usize + 1, n as usize + 1, n as usize + 1);
            (0..lams.len()).into_par_iter().for_each_init(CharacterTable::new, |table, ia| {
                let a = &lams[ia];
                for (ib, b) in lams.iter().enumerate().skip(ia) {
                    for c in lams.iter().skip(ib) {
                        let perms = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
                        let vals: Vec<BigInt> = perms
                            .iter()
                            .map(|q| {
                                let t = validate_triple(q[0], q[1], q[2], bounds).unwrap();
                                kron_oracle_char_with(table, &t, 30).unwrap()
                            })
                            .collect();
                        assert!(vals.windows(2).all(|w| w[0] == w[1]), "{a} {b} {c}: {vals:?}");
                    }
                }
            });
        }
    }

    #[test]
    fn schur_oracle_examples() {
        let e = kron_oracle_schur(&p("2"), 2, 2, 20).unwrap();
        assert_eq!(e.entries.len(), 2);
        assert_eq!(e.get(&p("2"), &p("2")), BigInt::one());
        assert_eq!(e.get(&p("1,1"), &p("1,1")), BigInt::one());

        // s_(n)[XY] = sum over mu of s_mu[X] s_mu[Y]
        for n in 1..8u64 {
            let e = kron_oracle_schur(&Partition::row(n), 2, 3, 20).unwrap();
            let mus = partitions_of(n, 2, n);
            assert_eq!(e.entries.len(), mus.len());
            for mu in &mus {
                assert_eq!(e.get(mu, mu), BigInt::one());
            }
        }

        let lam = p("1,1,1,1");
        let e = kron_oracle_schur(&lam, 2, 2, 20).unwrap();
        for mu in partitions_of(4, 2, 4) {
            for nu in partitions_of(4, 2, 4) {
                let t = validate_triple(&mu, &nu, &lam, BOUNDS_224).unwrap();
                assert_eq!(e.get(&mu, &nu), kron_oracle_char(&t, 30).unwrap(), "{mu} {nu}");
            }
        }
        assert_eq!(e.get(&p("2,2"), &p("2,2")), BigInt::one());
    }

    #[test]
    fn schur_oracle_errors() {
        assert!(matches!(kron_oracle_schur(&p("21"), 2, 2, 20), Err(Error::WeightCapExceeded { .. })));
        assert!(matches!(kron_oracle_schur(&p("1,1,1,1,1"), 2, 2, 20), Err(Error::LengthExceedsBound { .. })));
    }

    #[test]
    fn oracles_agree_small_weights() {
        let mut table = CharacterTable::new();
        for n in 0..=8u64 {
            for lam in partitions_of(n, 4, n) {
                let e = kron_oracle_schur(&lam, 2, 2, 20).unwrap();
                for t in triples_of_weight(n, BOUNDS_224).into_iter().filter(|t| t.lam() == &lam) {
                    let g = kron_oracle_char_with(&mut table, &t, 30).unwrap();
                    assert_eq!(e.get(t.mu(), t.nu()), g, "{t}");
                }
            }
        }
    }
}
