//! The scalar abstraction for the generic matrix layer.
//!
//! Matrix construction and ring arithmetic are generic over any signed,
//! ordered, exact scalar; the crate instantiates them at [`crate::Rat`]
//! (and internally at [`crate::Int`] for fraction-free elimination).

use num_traits::Signed;

/// Trait alias for coefficient types accepted by [`crate::matrix::Matrix`].
///
/// `Signed` brings ring arithmetic (`Num`), negation and sign predicates;
/// `PartialOrd` is needed for pivot selection and sign bookkeeping. The
/// exact-division algorithms (`rank`, `det`, `solve`, `signature`) assume
/// arithmetic is exact, which is why this crate only ever instantiates the
/// matrix layer at arbitrary-precision rational and integer types.
pub trait Scalar: Clone + PartialOrd + Signed {}

impl<T> Scalar for T where T: Clone + PartialOrd + Signed {}
