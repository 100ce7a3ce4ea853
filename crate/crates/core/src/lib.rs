//! Exact discrete invariants of periodic parabolic Higgs-de Rham flows in
//! positive characteristic.
//!
//! The crate works with the combinatorial shadow of a parabolic bundle on a
//! curve: rank, degree of the zeroth filtration piece, and the multiset of
//! parabolic weights at each puncture. On that data it provides
//!
//! - [`parabolic`]: parabolic degree, rational line-bundle twists, and the
//!   weight action of the parabolic (inverse) Cartier transform;
//! - [`bis_local`]: the local dictionary between characters of a cyclic
//!   group acting on an equivariant bundle and parabolic weights, and the
//!   residue eigenvalue laws of pushforward and pullback;
//! - [`flow`]: orbits and periods of the flow operator, the equivariance
//!   obstruction on a cyclic cover, and explicit period bounds;
//! - [`cli`]: the `hdflow` command-line frontend.
//!
//! No floating point is used anywhere.

pub mod arith;
pub mod bis_local;
pub mod cli;
mod error;
pub mod flow;
pub mod matrix;
pub mod parabolic;

pub use arith::Rational;
pub use error::{Error, Result};
