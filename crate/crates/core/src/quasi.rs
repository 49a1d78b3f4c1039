//! Dilated coefficient sequences and exact quasipolynomial fits.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::character::kron_oracle_char;
use crate::error::{Error, Result};
use crate::fnm::atomic_nm;
use crate::kron224::{atomic224, kron224};
use crate::num::Int;
use crate::partition::KroneckerTriple;

/// Period `p` and constituents; constituent `i` governs `k = i (mod p)` and
/// lists coefficients of `1, k, k^2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial<T: Int> {
    period: usize,
    constituents: Vec<Vec<Ratio<T>>>,
}

impl<T: Int> Quasipolynomial<T> {
    /// Trailing zero coefficients are dropped.
    pub fn new(constituents: Vec<Vec<Ratio<T>>>) -> Self {
        assert!(!constituents.is_empty(), "a quasipolynomial needs at least one constituent");
        let constituents = constituents
            .into_iter()
            .map(|mut c| {
                while c.last().is_some_and(|v| v.is_zero()) {
                    c.pop();
                }
                c
            })
            .collect::<Vec<_>>();
        Quasipolynomial { period: constituents.len(), constituents }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[Vec<Ratio<T>>] {
        &self.constituents
    }

    /// Maximum constituent degree; 0 for the zero quasipolynomial.
    pub fn degree(&self) -> usize {
        self.constituents.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0)
    }

    pub fn eval(&self, k: u64) -> Ratio<T> {
        let c = &self.constituents[(k % self.period as u64) as usize];
        let k = Ratio::from_integer(<T as Int>::from_u64(k));
        c.iter().rev().fold(Ratio::zero(), |acc, a| acc * k.clone() + a.clone())
    }
}

/// `"num/den"`, always with an explicit denominator.
pub fn rational_string<T: Int>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl<T: Int> Serialize for Quasipolynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let constituents: Vec<Vec<String>> =
            self.constituents.iter().map(|c| c.iter().map(rational_string).collect()).collect();
        let mut st = s.serialize_struct("Quasipolynomial", 3)?;
        st.serialize_field("period", &self.period)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("constituents", &constituents)?;
        st.end()
    }
}

pub fn eval_quasipolynomial<T: Int>(q: &Quasipolynomial<T>, k: u64) -> Ratio<T> {
    q.eval(k)
}

/// Terms needed by [`fit_quasipolynomial`]: a fit window plus two holdout
/// samples per residue class.
pub fn required_length(max_period: usize, max_degree: usize) -> usize {
    (max_degree + 1) * max_period + 2 * max_period
}

/// Fits `seq[k - 1] = f(k)`, `k >= 1`, by the smallest `(period, degree)` in
/// lexicographic order whose constituents, interpolated on the earliest
/// `degree + 1` samples of each residue class, reproduce the whole sequence.
pub fn fit_quasipolynomial<T: Int>(seq: &[T], max_period: usize, max_degree: usize) -> Result<Quasipolynomial<T>> {
    let needed = required_length(max_period, max_degree);
    if seq.len() < needed || max_period == 0 {
        return Err(Error::InsufficientData { needed: needed.max(1), got: seq.len() });
    }
    for period in 1..=max_period {
        for degree in 0..=max_degree {
            if let Some(q) = try_fit(seq, period, degree) {
                return Ok(q);
            }
        }
    }
    Err(Error::NoFitWithinBounds { max_period, max_degree })
}

fn try_fit<T: Int>(seq: &[T], period: usize, degree: usize) -> Option<Quasipolynomial<T>> {
    let mut constituents = vec![Vec::new(); period];
    for residue in 0..period {
        // k = 1.. with k = residue (mod period)
        let first = if residue == 0 { period } else { residue };
        let ks: Vec<u64> = (first..=seq.len()).step_by(period).map(|k| k as u64).collect();
        if ks.len() <= degree {
            return None;
        }
        let points: Vec<(u64, &T)> = ks[..=degree].iter().map(|&k| (k, &seq[k as usize - 1])).collect();
        constituents[residue] = interpolate(&points);
    }
    let q = Quasipolynomial::new(constituents);
    let reproduces = seq
        .iter()
        .enumerate()
        .all(|(i, v)| q.eval(i as u64 + 1) == Ratio::from_integer(v.clone()));
    reproduces.then_some(q)
}

/// Lagrange interpolation through `(k, v)` points; coefficients of `1, k, ...`.
fn interpolate<T: Int>(points: &[(u64, &T)]) -> Vec<Ratio<T>> {
    let n = points.len();
    let mut result = vec![Ratio::<T>::zero(); n];
    let x: Vec<T> = points.iter().map(|&(k, _)| <T as Int>::from_u64(k)).collect();
    for (j, &(_, v)) in points.iter().enumerate() {
        // basis polynomial prod_{l != j} (k - x_l) / (x_j - x_l)
        let mut basis = vec![Ratio::<T>::one()];
        let mut denom = T::one();
        for l in (0..n).filter(|&l| l != j) {
            let mut next = vec![Ratio::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] = next[d + 1].clone() + c.clone();
                next[d] = next[d].clone() - c.clone() * Ratio::from_integer(x[l].clone());
            }
            basis = next;
            denom = denom * (x[j].clone() - x[l].clone());
        }
        let scale = Ratio::new(v.clone(), denom);
        for (r, c) in result.iter_mut().zip(basis) {
            *r = r.clone() + c * scale.clone();
        }
    }
    result
}

/// How the terms of a dilated sequence are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Kron224,
    Atomic224,
    /// `vp_count(A_{n,m}, shift)` with `(n, m)` taken from the triple's bounds.
    AtomicNm,
    /// Character-sum oracle with the given weight cap.
    Oracle { weight_cap: u64 },
}

impl Method {
    /// True for atomic methods, whose sequences count lattice points in dilated polytopes.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Method::Atomic224 | Method::AtomicNm)
    }
}

/// `[f(1), ..., f(kmax)]` with `f(k)` the coefficient of the `k`-th dilation.
pub fn dilate_sequence(triple: &KroneckerTriple, kmax: u64, method: Method) -> Result<Vec<BigInt>> {
    let term = |k: u64| -> Result<BigInt> {
        let t = triple.dilate(k)?;
        match method {
            Method::Kron224 => kron224(&t),
            Method::Atomic224 => atomic224(&t),
            Method::AtomicNm => {
                let b = t.bounds();
                if b.lam != b.mu * b.nu {
                    return Err(Error::UnsupportedDimension(b.mu, b.nu));
                }
                atomic_nm(b.mu, b.nu, &t)
            }
            Method::Oracle { weight_cap } => kron_oracle_char(&t, weight_cap),
        }
    };
    if let Method::Oracle { weight_cap } = method {
        let weight = triple.weight().saturating_mul(kmax);
        if weight > weight_cap {
            return Err(Error::WeightCapExceeded { weight, cap: weight_cap });
        }
    }
    (1..=kmax).into_par_iter().map(term).collect()
}

pub fn is_weakly_increasing<T: Ord>(seq: &[T]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}
