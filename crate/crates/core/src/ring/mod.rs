//! Exact commutative rings and their elements.

mod arith;
mod descriptor;
mod display;
mod elem;
mod repr;
mod truncated;

pub use descriptor::{RingDescriptor, RingKind};
pub use elem::{ring_arith, RingElem, RingOp};
pub use truncated::TruncatedPoly;

pub(crate) use arith::dense_mul;
pub(crate) use repr::{Monomial, Repr};
