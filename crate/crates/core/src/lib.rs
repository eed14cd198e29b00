//! Exact arithmetic for elliptic-curve division and Fueter polynomials,
//! reduction data of the Tate normal form with a rational 4-torsion point,
//! first-order Newton polygon index computations and monogenicity
//! certificates for the quartic fields `Q[T]/(T^4 - 6T^2 - aT - 3)`.
//!
//! The polynomial and curve layers are generic over the coefficient scalar
//! (any `num-traits` ring); the aliases below fix the exact instances used
//! throughout.

pub mod arith;
pub mod certify;
pub mod elliptic;
pub mod error;
pub mod newton;
pub mod poly;
pub mod reduction;
pub mod valuation;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Reduced rational with positive denominator.
pub type Rat = num_rational::BigRational;

pub type PolyInt = poly::Poly<Int>;
pub type PolyRat = poly::Poly<Rat>;
pub use poly::modp::ModPoly as PolyModP;
pub use poly::residue::ResidueFieldElem;
pub type PhiDevelopment = poly::Development<Int>;

pub type WeierstrassCurve = elliptic::Weierstrass<Rat>;
