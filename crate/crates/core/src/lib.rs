//! Exact certificates for splitting and SPS divisors of double covers of
//! projective space.
//!
//! A double cover `X -> P^n` branched along `F = 0` (`deg F = 2l`) has
//! coordinate ring `k[x0..xn][t] / (t^2 - F)`. A divisor `f = 0` is
//! SPS when `F = h^2 + f g`, and it splits when `f * g1^a1 ... gm^am` is a
//! norm `p^2 - q^2 F` for SPS divisors `g_j` generating the class group.
//! This crate verifies and searches for both kinds of certificates.

pub mod enumerate;
pub mod error;
pub mod field;
pub mod forms;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod quadring;
pub mod split;
pub mod sps;

pub use enumerate::{EnumerateOptions, SpsEnumeration, SpsHit};
pub use error::{Error, FieldError, ParseError, PolyError, Result};
pub use field::{CoefficientField, Field, PrimeField, Rationals};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use quadring::{DoubleCover, QuadRingElement};
pub use split::{SplitBounds, SplitCertificate, SplitSearchResult, SpsBasis};
pub use sps::{SpsCertificate, SpsOptions, SpsSearchResult};
