//! Sharp `L^p` norms of `aI + bH` on the real line, where `H` is the Hilbert
//! transform.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`operator`]: the sharp constant `B_p` and the ratio functions it maximizes.
//! * [`subharmonic`]: the sector minorant `G` and numerical checks of its
//!   majorization and subharmonicity.
//! * [`extremal`]: the two near-extremal families, their masses and the
//!   certified lower bounds they give.
//! * [`hilbert`]: sampled signals, discrete Hilbert transforms, the harmonic
//!   extension to the upper half-plane and the boundary/circle checks.
//!
//! [`fft`] and [`quadrature`] are the numerical building blocks used by the above.
#![no_std]
// Negated comparisons deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod extremal;
pub mod fft;
pub mod hilbert;
pub mod operator;
pub mod optimize;
pub mod quadrature;
pub mod report;
pub mod subharmonic;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use operator::{compute_sharp_constant, dual_exponent, OperatorParams, SharpConstant};
pub use report::{CheckReport, Location};
pub use subharmonic::SectorMinorant;
