//! Exact construction of pseudo-Anosov mapping classes from integer
//! polynomials.
//!
//! The pipeline runs in four stages, each living in its own module:
//!
//! - [`polynomial`]: integer polynomials, the symmetrization map
//!   `q(x) ↦ x^deg(q) · q(x + 1/x)` and its inverse, and the homological
//!   criterion (symplectic irreducibility, non-cyclotomicity, not a
//!   polynomial in `x^k` for `k > 1`).
//! - [`symplectic`]: integer symplectic matrices, the elementary generators
//!   `SE_{i,j}` and `W_{i,j}`, the companion matrix and its factored
//!   conjugate `B_q`, and exact characteristic polynomials.
//! - [`homology`]: homology classes, Dehn twist transvections, the twist
//!   words for bounding triple maps and handle switches, and the
//!   representation `Ψ` of a word on `H_1(S, Z)`.
//! - [`certify`]: the end-to-end certificate, plus the complete genus-2
//!   characterization.
//!
//! All algebra is generic over an exact integer [`Scalar`]; the aliases at
//! the crate root fix it to [`BigInt`](num_bigint::BigInt), which is what
//! the certificate pipeline uses.

pub mod certify;
pub mod error;
pub mod homology;
pub mod polynomial;
mod scalar;
pub mod symplectic;

pub use error::{Error, Result};
pub use scalar::Scalar;

use num_bigint::BigInt;

/// Arbitrary-precision integer polynomial.
pub type IntPoly = polynomial::Poly<BigInt>;
/// Polynomial over machine integers; overflow is the caller's problem.
pub type Poly64 = polynomial::Poly<i64>;
/// Arbitrary-precision integer matrix.
pub type IntMatrix = symplectic::Matrix<BigInt>;
/// Matrix over machine integers.
pub type Matrix64 = symplectic::Matrix<i64>;
/// Symplectic polynomial with arbitrary-precision coefficients.
pub type SymplecticPoly = polynomial::SymplecticPoly<BigInt>;
/// Seed polynomial with arbitrary-precision coefficients.
pub type SeedPoly = polynomial::SeedPoly<BigInt>;
/// Criterion report over arbitrary-precision integers.
pub type CriterionReport = polynomial::CriterionReport<BigInt>;
/// Twist word with arbitrary-precision exponents.
pub type MCWord = homology::MCWord<BigInt>;
/// Certificate over arbitrary-precision integers.
pub type Certificate = certify::Certificate<BigInt>;
/// Genus-2 parameters over arbitrary-precision integers.
pub type Genus2Params = certify::Genus2Params<BigInt>;
