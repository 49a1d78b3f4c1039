//! Exact Kronecker coefficients for partition triples of bounded length.
//!
//! The bounded case `l(mu), l(nu) <= 2`, `l(lam) <= 4` is computed exactly as
//! a signed sum of seven values of a two-dimensional vector partition
//! function ([`kron224`]). The general `F_{n,m}` vector partition function is
//! built for any `n, m >= 2` ([`fnm`]), and its values give the atomic
//! Kronecker coefficients. Character-sum and Schur-expansion oracles
//! ([`character`]) check everything at small weight.
//!
//! All arithmetic is exact. Closed-form evaluators are generic over the
//! integer type ([`num::Int`]); the aliases below fix it to [`BigInt`].

pub mod character;
pub mod error;
pub mod fnm;
pub mod holes;
pub mod invariants;
pub mod kron224;
pub mod lr;
pub mod num;
pub mod partition;
pub mod quasi;
pub mod vecpart;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use error::{Error, Result};
pub use partition::{
    canonical_sort, parse_partition, validate_triple, Bounds, KroneckerTriple, Partition, BOUNDS_224,
};

/// Exact counts and coefficient values.
pub type Count = BigInt;
/// Exact rational numbers.
pub type Rational = BigRational;
/// Quasipolynomial with arbitrary-precision rational constituents.
pub type QuasiPolynomial = quasi::Quasipolynomial<BigInt>;
/// Signed monomial list with arbitrary-precision exponents.
pub type SignedMonomials = kron224::SignedMonomialList<BigInt>;
