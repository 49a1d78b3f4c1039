//! Partitions and validated Kronecker triples.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are kept as given but are invisible to equality, ordering,
/// hashing and [`Partition::len`].
#[derive(Clone, Debug, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(i + 1));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u64) -> Self {
        Partition { parts: vec![n] }
    }

    /// Parts as stored, trailing zeros included.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Nonzero parts only.
    pub fn trimmed(&self) -> &[u64] {
        let len = self.len();
        &self.parts[..len]
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `i`-th part, 1-indexed, zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Sum of parts from the `i`-th onwards (1-indexed).
    pub fn tail_sum(&self, i: usize) -> u64 {
        self.parts.iter().skip(i.saturating_sub(1)).sum()
    }

    /// Copy padded (or trimmed) to exactly `k` parts. Panics if a nonzero part
    /// would be dropped.
    pub fn padded(&self, k: usize) -> Partition {
        assert!(self.len() <= k, "cannot pad a partition of length {} to {k}", self.len());
        let mut parts = self.trimmed().to_vec();
        parts.resize(k, 0);
        Partition { parts }
    }

    pub fn dilate(&self, k: u64) -> Result<Partition> {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(k).ok_or(Error::Overflow(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition { parts })
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the nonzero parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u64>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Parses `"6,5,4,1"`. Whitespace around tokens is ignored; an empty string is
/// the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: i64 = tok.parse().map_err(|_| Error::InvalidToken(tok.to_string()))?;
            if v < 0 {
                return Err(Error::NegativePart(v));
            }
            Ok(v as u64)
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Maximum lengths for `(mu, nu, lam)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub mu: usize,
    pub nu: usize,
    pub lam: usize,
}

impl Bounds {
    pub const fn new(mu: usize, nu: usize, lam: usize) -> Self {
        Bounds { mu, nu, lam }
    }

    /// The `(n, m, nm)` pattern of the `F_{n,m}` machinery.
    pub const fn nm(n: usize, m: usize) -> Self {
        Bounds { mu: n, nu: m, lam: n * m }
    }
}

pub const BOUNDS_224: Bounds = Bounds::new(2, 2, 4);

/// A triple `(mu, nu, lam)` of equal weight, each padded to its length bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KroneckerTriple {
    mu: Partition,
    nu: Partition,
    lam: Partition,
    bounds: Bounds,
}

impl KroneckerTriple {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn weight(&self) -> u64 {
        self.lam.weight()
    }

    pub fn dilate(&self, k: u64) -> Result<KroneckerTriple> {
        Ok(KroneckerTriple {
            mu: self.mu.dilate(k)?,
            nu: self.nu.dilate(k)?,
            lam: self.lam.dilate(k)?,
            bounds: self.bounds,
        })
    }

    /// Same partitions, different slot assignment. Bounds follow the slots.
    fn permuted(&self, order: [usize; 3]) -> Vec<&Partition> {
        let all = [&self.mu, &self.nu, &self.lam];
        order.iter().map(|&i| all[i]).collect()
    }
}

impl fmt::Display for KroneckerTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}),({}),({}))", self.mu.trimmed_display(), self.nu.trimmed_display(), self.lam.trimmed_display())
    }
}

impl Partition {
    fn trimmed_display(&self) -> String {
        self.trimmed().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Checks equal weights and length bounds, then pads each partition to its bound.
pub fn validate_triple(mu: &Partition, nu: &Partition, lam: &Partition, bounds: Bounds) -> Result<KroneckerTriple> {
    let weights = [mu.weight(), nu.weight(), lam.weight()];
    if weights[0] != weights[1] || weights[1] != weights[2] {
        return Err(Error::WeightMismatch(weights.to_vec()));
    }
    for (p, bound) in [(mu, bounds.mu), (nu, bounds.nu), (lam, bounds.lam)] {
        if p.len() > bound {
            return Err(Error::LengthExceedsBound { length: p.len(), bound });
        }
    }
    Ok(KroneckerTriple {
        mu: mu.padded(bounds.mu),
        nu: nu.padded(bounds.nu),
        lam: lam.padded(bounds.lam),
        bounds,
    })
}

/// Result of [`canonical_sort`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub triple: KroneckerTriple,
    /// True when the input was permuted.
    pub normalized: bool,
}

/// Permutes a triple into the `(2,2,4)` engine's form: the partition longer
/// than two (if any) in the `lam` slot, and `mu_2 >= nu_2`.
///
/// Kronecker coefficients are symmetric in their three arguments, so this
/// never changes the value.
pub fn canonical_sort(triple: &KroneckerTriple) -> Result<Canonical> {
    let all = [&triple.mu, &triple.nu, &triple.lam];
    let long: Vec<usize> = (0..3).filter(|&i| all[i].len() > 2).collect();
    if long.len() > 1 || all.iter().any(|p| p.len() > 4) {
        return Err(Error::NoCanonicalForm);
    }
    let lam_slot = long.first().copied().unwrap_or(2);
    let mut rest: Vec<usize> = (0..3).filter(|&i| i != lam_slot).collect();
    if all[rest[0]].part(2) < all[rest[1]].part(2) {
        rest.swap(0, 1);
    }
    let order = [rest[0], rest[1], lam_slot];
    let normalized = order != [0, 1, 2];
    let p = triple.permuted(order);
    let triple = validate_triple(p[0], p[1], p[2], BOUNDS_224)?;
    Ok(Canonical { triple, normalized })
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order (largest first).
pub fn partitions_of(n: u64, max_len: usize, max_part: u64) -> Vec<Partition> {
    fn rec(rem: u64, max_len: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if max_len == 0 {
            return;
        }
        let hi = cap.min(rem);
        // remaining parts can absorb at most hi * max_len
        for p in (1..=hi).rev() {
            if p.saturating_mul(max_len as u64) < rem {
                break;
            }
            cur.push(p);
            rec(rem - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every valid triple of weight `n` with the given bounds.
pub fn triples_of_weight(n: u64, bounds: Bounds) -> Vec<KroneckerTriple> {
    let mus = partitions_of(n, bounds.mu, n);
    let nus = partitions_of(n, bounds.nu, n);
    let lams = partitions_of(n, bounds.lam, n);
    let mut out = Vec::with_capacity(mus.len() * nus.len() * lams.len());
    for mu in &mus {
        for nu in &nus {
            for lam in &lams {
                out.push(validate_triple(mu, nu, lam, bounds).expect("enumerated triple is valid"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("6,5,4,1").parts(), &[6, 5, 4, 1]);
        let padded = p("3,0,0");
        assert_eq!(padded.parts(), &[3, 0, 0]);
        assert_eq!(padded, p("3"));
        assert_eq!(padded.len(), 1);
        assert_eq!(parse_partition("1,2"), Err(Error::NotWeaklyDecreasing(1)));
        assert_eq!(parse_partition("1,x"), Err(Error::InvalidToken("x".into())));
        assert_eq!(parse_partition("2,-1"), Err(Error::NegativePart(-1)));
        assert_eq!(p(""), Partition::empty());
    }

    #[test]
    fn validate_examples() {
        let t = validate_triple(&p("9,7"), &p("9,7"), &p("6,5,4,1"), BOUNDS_224).unwrap();
        assert_eq!(t.weight(), 16);
        assert_eq!(t.lam().parts(), &[6, 5, 4, 1]);

        let err = validate_triple(&p("1"), &p("1"), &p("1,1"), BOUNDS_224).unwrap_err();
        assert!(matches!(err, Error::WeightMismatch(_)));

        let t = validate_triple(&p("6,3,2"), &p("7,4"), &p("8,3"), Bounds::new(4, 2, 2)).unwrap();
        assert_eq!(t.weight(), 11);
        assert_eq!(t.mu().parts(), &[6, 3, 2, 0]);

        let err = validate_triple(&p("2,1,1"), &p("4"), &p("4"), BOUNDS_224).unwrap_err();
        assert_eq!(err, Error::LengthExceedsBound { length: 3, bound: 2 });
    }

    #[test]
    fn canonical_examples() {
        let t = validate_triple(&p("9,7"), &p("9,7"), &p("6,5,4,1"), BOUNDS_224).unwrap();
        let c = canonical_sort(&t).unwrap();
        assert!(!c.normalized);
        assert_eq!(c.triple, t);

        let t = validate_triple(&p("8,3"), &p("7,4"), &p("6,3,2"), BOUNDS_224).unwrap();
        let c = canonical_sort(&t).unwrap();
        assert!(c.normalized);
        assert_eq!(c.triple.mu(), &p("7,4"));
        assert_eq!(c.triple.nu(), &p("8,3"));

        // the long partition may start in any slot
        let t = validate_triple(&p("6,3,2"), &p("7,4"), &p("8,3"), Bounds::new(4, 2, 2)).unwrap();
        let c = canonical_sort(&t).unwrap();
        assert_eq!(c.triple.lam(), &p("6,3,2"));
        assert_eq!(c.triple.mu(), &p("7,4"));

        let t = validate_triple(&p("3,2,1"), &p("3,2,1"), &p("6"), Bounds::new(4, 4, 4)).unwrap();
        assert_eq!(canonical_sort(&t), Err(Error::NoCanonicalForm));
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=12
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u64, usize::MAX, n as u64).len(), e, "n = {n}");
        }
        assert_eq!(partitions_of(30, usize::MAX, 30).len(), 5604);
        // at most two parts: floor(n/2) + 1
        assert_eq!(partitions_of(9, 2, 9).len(), 5);
        for q in partitions_of(10, 3, 4) {
            assert!(q.len() <= 3 && q.part(1) <= 4 && q.weight() == 10);
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u64..50, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(q in arb_partition()) {
            let text = q.to_string();
            let back = parse_partition(&text).unwrap();
            prop_assert_eq!(back.parts(), q.parts());
        }

        #[test]
        fn canonical_sort_is_idempotent(a in arb_partition(), b in arb_partition()) {
            // build three partitions of equal weight with lengths <= 2, 2, 4
            let w = a.weight().max(1);
            let mu = Partition::new(vec![w - w / 3, w / 3]).unwrap();
            let nu = Partition::new(vec![w - b.weight() % (w / 2 + 1), b.weight() % (w / 2 + 1)]).unwrap();
            let lam = partitions_of(w, 4, w).into_iter().nth(a.len()).unwrap_or_else(|| Partition::row(w));
            let t = validate_triple(&lam, &mu, &nu, Bounds::new(4, 2, 2)).unwrap();
            let once = canonical_sort(&t).unwrap();
            let twice = canonical_sort(&once.triple).unwrap();
            prop_assert!(!twice.normalized);
            prop_assert_eq!(&twice.triple, &once.triple);
            prop_assert!(once.triple.mu().part(2) >= once.triple.nu().part(2));
        }

        #[test]
        fn validated_weights_are_equal(n in 0u64..9) {
            for t in triples_of_weight(n, BOUNDS_224) {
                prop_assert_eq!(t.mu().weight(), t.nu().weight());
                prop_assert_eq!(t.nu().weight(), t.lam().weight());
            }
        }
    }
}
