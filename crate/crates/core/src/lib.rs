//! Exact-arithmetic toolkit for the divisor-class lattices, double-cover
//! calculus and pseudo-effective-cone certificates attached to the symmetric
//! square of a hyperelliptic curve and its blow-ups.
//!
//! Everything is computed over the rationals — the certificates produced here
//! (negative-semidefinite facet matrices, unimodular Gram matrices, corank-one
//! interpolation systems) are exact claims, so floating point is never used.
//!
//! The crate is organized in layers:
//!
//! * [`matrix`] — dense matrices, generic over a [`scalar::Scalar`] for
//!   construction and ring arithmetic, with exact rank / determinant / solve /
//!   inertia / semidefiniteness on rational matrices;
//! * [`lattice`] — divisor-class lattices with a rational intersection
//!   pairing, 2-torsion bookkeeping and degree-2 cover calculus;
//! * [`surfaces`] — builders for the specific lattices of the symmetric
//!   square `C^(2)`, the quotient `X`, its blow-up `X~` and the resolution `Z`;
//! * [`cone`] — polyhedral-cone membership and light-cone containment
//!   certificates in rank ≤ 3 hyperbolic lattices;
//! * [`poly`] — small exact polynomial utilities (binary/ternary forms,
//!   resultants) shared by the geometric models;
//! * [`wps`] — the weighted-projective hypersurface model `x4² = ∏ ℓᵢ` with
//!   its branch lines, nodes and named curves;
//! * [`plane`] — the planar fat-point model of `Z` with an independent
//!   interpolation oracle;
//! * [`verify`] — the one-shot verification suite driven by the CLI and the
//!   acceptance tests.

pub mod cone;
pub mod lattice;
pub mod matrix;
pub mod plane;
pub mod poly;
pub mod scalar;
pub mod surfaces;
pub mod verify;
pub mod wps;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar: arbitrary-precision, always in lowest terms with a
/// positive denominator (canonical-form equality comes with the type).
pub type Rat = num_rational::BigRational;

/// Dense rational matrix, the workhorse of every module.
pub type RatMatrix = matrix::Matrix<Rat>;

use num_traits::One;

/// Shorthand for the exact rational `p/q`.
///
/// Panics if `q == 0`; intended for literal constants in code and tests.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Shorthand for the exact integer rational `p/1`.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(Int::from(p))
}

/// Renders a rational as `"p"` or `"p/q"`, the interchange format used by all
/// JSON payloads.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
