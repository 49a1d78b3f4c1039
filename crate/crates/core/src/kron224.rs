//! Exact Kronecker coefficients for `l(mu), l(nu) <= 2`, `l(lam) <= 4`.
//!
//! The coefficient is the `x^{mu_2} y^{nu_2}` coefficient of
//! `P_lam(x, y) * Fbar(x, y)`, where `P_lam` has seven signed monomials and
//! the coefficient of `x^i y^j` in `Fbar` is `p_S(j, i + j)`. So every
//! coefficient is a signed sum of at most seven [`ps22`] values, and the
//! first monomial alone gives the atomic coefficient.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::num::Int;
use crate::partition::{canonical_sort, validate_triple, KroneckerTriple, Partition, BOUNDS_224};
use crate::vecpart::ps22;

/// `sign * y^b * x^a`. Exponents may be negative (`x^{-1}` when `lam_3 = lam_4 = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedMonomial<T> {
    pub sign: i8,
    pub b: T,
    pub a: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedMonomialList<T> {
    pub terms: Vec<SignedMonomial<T>>,
}

/// The exponents `b, a0, a1, a2, a3` of `P_lam`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exponents<T> {
    pub b: T,
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
}

fn parts4<T: Int>(lam: &Partition) -> Result<[T; 4]> {
    if lam.len() > 4 {
        return Err(Error::LengthExceedsBound { length: lam.len(), bound: 4 });
    }
    Ok([1, 2, 3, 4].map(|i| <T as Int>::from_u64(lam.part(i))))
}

pub fn exponents<T: Int>(lam: &Partition) -> Result<Exponents<T>> {
    let [l1, l2, l3, l4] = parts4::<T>(lam)?;
    let one = T::one();
    let two = one.clone() + one.clone();
    Ok(Exponents {
        b: l3.clone() + l4.clone(),
        a0: l2.clone() + l4.clone(),
        a1: l2 + l3.clone() + one.clone(),
        a2: l1.clone() + l4 + one,
        a3: l1 + l3 + two,
    })
}

/// The seven-term polynomial `P_lam`:
/// `y^b (x^a0 - x^a1 - x^a2 + x^a3) + y^(a0+1) (-x^(b-1) + x^a1 + x^a2)`.
pub fn p_lambda<T: Int>(lam: &Partition) -> Result<SignedMonomialList<T>> {
    let Exponents { b, a0, a1, a2, a3 } = exponents::<T>(lam)?;
    let one = T::one();
    let top = a0.clone() + one.clone();
    let term = |sign, b: &T, a: &T| SignedMonomial { sign, b: b.clone(), a: a.clone() };
    Ok(SignedMonomialList {
        terms: vec![
            term(1, &b, &a0),
            term(-1, &b, &a1),
            term(-1, &b, &a2),
            term(1, &b, &a3),
            term(-1, &top, &(b.clone() - one)),
            term(1, &top, &a1),
            term(1, &top, &a2),
        ],
    })
}

/// One term of the seven-term sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermContribution<T> {
    pub term: SignedMonomial<T>,
    /// Whether the term passes the gate `b <= nu_2` and `a + b <= mu_2 + nu_2`.
    pub gated: bool,
    pub ps22_args: (T, T),
    /// Signed contribution; zero when the gate fails.
    pub value: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kron224Report<T> {
    pub triple: KroneckerTriple,
    /// True when the input had to be permuted into canonical form.
    pub normalized: bool,
    pub g: T,
    pub terms: Vec<TermContribution<T>>,
}

fn canonical(triple: &KroneckerTriple) -> Result<(KroneckerTriple, bool)> {
    let c = canonical_sort(triple)?;
    Ok((c.triple, c.normalized))
}

fn second<T: Int>(p: &Partition) -> T {
    <T as Int>::from_u64(p.part(2))
}

/// `g_{mu,nu,lam}` with the per-term breakdown.
pub fn kron224_report<T: Int>(triple: &KroneckerTriple) -> Result<Kron224Report<T>> {
    let (triple, normalized) = canonical(triple)?;
    let mu2: T = second(triple.mu());
    let nu2: T = second(triple.nu());
    let total = mu2.clone() + nu2.clone();
    let mut g = T::zero();
    let mut terms = Vec::with_capacity(7);
    for term in p_lambda::<T>(triple.lam())?.terms {
        let gated = term.b <= nu2 && term.a.clone() + term.b.clone() <= total;
        let n = nu2.clone() - term.b.clone();
        let m = n.clone() + mu2.clone() - term.a.clone();
        let value = if gated {
            let v = ps22(&n, &m);
            if term.sign > 0 {
                v
            } else {
                -v
            }
        } else {
            T::zero()
        };
        g = g + value.clone();
        terms.push(TermContribution { term, gated, ps22_args: (n, m), value });
    }
    assert!(!g.is_negative(), "negative Kronecker coefficient for {triple}");
    Ok(Kron224Report { triple, normalized, g, terms })
}

/// `g_{mu,nu,lam}` for a triple fitting the `(2,2,4)` pattern in some order.
pub fn kron224<T: Int>(triple: &KroneckerTriple) -> Result<T> {
    Ok(kron224_report(triple)?.g)
}

/// Atomic coefficient `p_S(nu_2 - (lam_3 + lam_4), mu_2 + nu_2 - (lam_2 + lam_4) - (lam_3 + lam_4))`.
pub fn atomic224<T: Int>(triple: &KroneckerTriple) -> Result<T> {
    let (triple, _) = canonical(triple)?;
    let (n, m) = atomic224_args::<T>(&triple)?;
    Ok(ps22(&n, &m))
}

/// Arguments of `p_S` for the atomic coefficient of a canonical triple.
pub fn atomic224_args<T: Int>(triple: &KroneckerTriple) -> Result<(T, T)> {
    let [_, l2, l3, l4] = parts4::<T>(triple.lam())?;
    let mu2: T = second(triple.mu());
    let nu2: T = second(triple.nu());
    let b = l3 + l4.clone();
    let n = nu2.clone() - b.clone();
    let m = mu2 + nu2 - (l2 + l4) - b;
    Ok((n, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BravyiReport {
    /// `lam_2 + lam_3 + 2 lam_4 <= mu_2 + nu_2`
    pub first: bool,
    /// `lam_3 + lam_4 <= nu_2`
    pub second: bool,
    /// `|mu_2 - nu_2| <= min(lam_1 - lam_3, lam_2 - lam_4)`
    pub third: bool,
}

impl BravyiReport {
    pub fn all(&self) -> bool {
        self.first && self.second && self.third
    }
}

pub fn bravyi_check(triple: &KroneckerTriple) -> Result<BravyiReport> {
    let (triple, _) = canonical(triple)?;
    let l = |i| triple.lam().part(i) as i128;
    let mu2 = triple.mu().part(2) as i128;
    let nu2 = triple.nu().part(2) as i128;
    Ok(BravyiReport {
        first: l(2) + l(3) + 2 * l(4) <= mu2 + nu2,
        second: l(3) + l(4) <= nu2,
        third: (mu2 - nu2).abs() <= (l(1) - l(3)).min(l(2) - l(4)),
    })
}

/// Sufficient condition for `atomic224 == kron224`:
/// `lam_3 + lam_4 <= nu_2 <= lam_2 + lam_4` and
/// `(lam_3 + lam_4) + (lam_2 + lam_4) <= mu_2 + nu_2 <= (lam_3 + lam_4) + min(lam_2 + lam_3, lam_1 + lam_4)`.
pub fn atomic_is_kron_sufficient(triple: &KroneckerTriple) -> Result<bool> {
    let (triple, _) = canonical(triple)?;
    let l = |i| triple.lam().part(i) as i128;
    let mu2 = triple.mu().part(2) as i128;
    let nu2 = triple.nu().part(2) as i128;
    let b = l(3) + l(4);
    let total = mu2 + nu2;
    Ok(b <= nu2 && nu2 <= l(2) + l(4) && b + l(2) + l(4) <= total && total <= b + (l(2) + l(3)).min(l(1) + l(4)))
}

/// Reduced Kronecker coefficient of three one-row partitions:
/// with `a >= b >= c` the sorted inputs and `l = b + c - a`, `floor(l/2) + 1`
/// when `l >= 0`, else 0.
pub fn reduced_kron_2row<T: Int>(lam2: u64, mu2: u64, nu2: u64) -> T {
    let mut v = [lam2, mu2, nu2];
    v.sort_unstable_by(|x, y| y.cmp(x));
    let ell = <T as Int>::from_u64(v[1]) + <T as Int>::from_u64(v[2]) - <T as Int>::from_u64(v[0]);
    if ell.is_negative() {
        T::zero()
    } else {
        let two = T::one() + T::one();
        ell.div_floor(&two) + T::one()
    }
}

/// The triple `(lam, mu, nu)` in the stable regime representing the reduced
/// coefficient of `(lam2), (mu2), (nu2)`: the largest input becomes `lam_2`,
/// and `lam_1 = max(mu_2 + nu_2, lam_2)`.
pub fn reduced_representative(lam2: u64, mu2: u64, nu2: u64) -> KroneckerTriple {
    let mut v = [lam2, mu2, nu2];
    v.sort_unstable_by(|x, y| y.cmp(x));
    let [a, b, c] = v;
    let l1 = (b + c).max(a);
    let n = l1 + a;
    let lam = Partition::new(vec![l1, a]).expect("l1 >= a");
    let mu = Partition::new(vec![n - b, b]).expect("n - b >= b");
    let nu = Partition::new(vec![n - c, c]).expect("n - c >= c");
    validate_triple(&mu, &nu, &lam, BOUNDS_224).expect("equal weights")
}

/// The dilated triple `k * (lam, mu, nu)` with `lam = (u,t,s,s)`,
/// `mu = (u+s, t+s)`, `nu = (u+t, 2s)`.
pub fn stable_triple(u: u64, t: u64, s: u64, k: u64) -> Result<KroneckerTriple> {
    if !(u >= t && t >= s) {
        return Err(Error::OrderingViolated { u, t, s });
    }
    let lam = Partition::new(vec![u, t, s, s])?;
    let mu = Partition::new(vec![u + s, t + s])?;
    let nu = Partition::new(vec![u + t, 2 * s])?;
    validate_triple(&mu, &nu, &lam, BOUNDS_224)?.dilate(k)
}

/// `(g, atomic)` for the dilated stable triple; both are 1 for every `k`.
pub fn stable_triple_kron<T: Int>(u: u64, t: u64, s: u64, k: u64) -> Result<(T, T)> {
    let triple = stable_triple(u, t, s, k)?;
    Ok((kron224(&triple)?, atomic224(&triple)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrFaceReport<T> {
    pub triple: KroneckerTriple,
    pub kron: T,
    /// Pieri value of `c^{(lam2, lam3)}_{(mu2),(nu2)}`.
    pub lr: T,
    pub matches: bool,
}

/// On the face `lam_4 = 0`, `lam_2 + lam_3 = mu_2 + nu_2`, compares the
/// Kronecker coefficient with the two-horizontal-strip Littlewood–Richardson
/// value. `n` defaults to `mu2 + nu2 + lam2 + lam3`.
pub fn lr_face_check<T: Int>(lam2: u64, lam3: u64, mu2: u64, nu2: u64, n: Option<u64>) -> Result<LrFaceReport<T>> {
    if lam2 < lam3 {
        return Err(Error::FaceConditionViolated(format!("lam2 = {lam2} < lam3 = {lam3}")));
    }
    if lam2 + lam3 != mu2 + nu2 {
        return Err(Error::FaceConditionViolated(format!(
            "lam2 + lam3 = {} differs from mu2 + nu2 = {}",
            lam2 + lam3,
            mu2 + nu2
        )));
    }
    let n = n.unwrap_or(mu2 + nu2 + lam2 + lam3);
    if n < 2 * mu2 || n < 2 * nu2 || n < 2 * lam2 + lam3 {
        return Err(Error::FaceConditionViolated(format!("N = {n} too small for valid partitions")));
    }
    let mu = Partition::new(vec![n - mu2, mu2])?;
    let nu = Partition::new(vec![n - nu2, nu2])?;
    let lam = Partition::new(vec![n - lam2 - lam3, lam2, lam3, 0])?;
    let triple = validate_triple(&mu, &nu, &lam, BOUNDS_224)?;
    let kron: T = kron224(&triple)?;
    let strip = |x: u64| lam3 <= x && x <= lam2;
    let lr = if strip(mu2) && strip(nu2) { T::one() } else { T::zero() };
    let matches = kron == lr;
    Ok(LrFaceReport { triple, kron, lr, matches })
}
