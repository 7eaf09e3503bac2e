//! Exact ideal calculus behind the star condition `a²D ∩ b²D = (aD ∩ bD)²` and the
//! André-Quillen coefficient modules of simple over-rings `B = A[a/b]`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: integers are
//! arbitrary precision and ideals of quadratic orders are kept as lattices in Hermite
//! normal form, so ideal equality is structural equality.
//!
//! Three families of rings are covered:
//!
//! - quadratic orders `O_Δ` ([`quad`], [`ideal`], [`aq`]),
//! - the UFD `Z[X]` ([`zx`]),
//! - the non-Noetherian ring `A = Q + xL[x]`, `L = Q(y)` ([`kxl`]).
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod aq;
pub mod error;
pub mod ideal;
pub mod kxl;
pub mod linalg;
pub mod poly;
pub mod quad;
pub mod zx;

pub use error::{Error, Result};
pub use ideal::FracIdeal;
pub use linalg::{AbelianGroupInvariants, IntMatrix};
pub use quad::{FracElement, OrderElement, QuadraticOrder};
