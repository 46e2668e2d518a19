//! Exact finite-dimensional models around the Uhlenbeck compactification of
//! the Calogero-Moser space.
//!
//! Everything is computed over the rationals with no rounding:
//!
//! - [`rat`], [`poly`], [`matrix`], [`linalg`]: exact scalars, polynomials and
//!   matrices, with rank, kernels, characteristic polynomials, Krylov closures
//!   and nilpotent Jordan types.
//! - [`nc`]: normal forms in the algebra `[x,z] = [y,z] = 0, [x,y] = τ z²` and
//!   its quadratic dual.
//! - [`quiver`]: representations of the three-vertex Kronecker-type quiver,
//!   slopes and stability.
//! - [`calogero`]: the Calogero-Moser matrix variety.
//! - [`bvariety`]: triples `(Y, Z, v)` with `[Y,Z] = τ Z³` and `v` cyclic.
//! - [`ic`]: the intersection cohomology stalk formula and its companions.
//!
//! ```
//! use uhlenbeck::ic::ic_stalk;
//! use uhlenbeck::Partition;
//!
//! let stalk = ic_stalk(3, 0, &Partition::single(3)).unwrap();
//! assert_eq!(stalk.to_string(), "q^2+q^4+q^6");
//! assert_eq!(stalk.total(), 3);
//! ```
//!
//! The guide under `book/` walks through each module; its code blocks run
//! as doctests of the `uhlenbeck-book` crate.

mod error;

pub mod bvariety;
pub mod calogero;
pub mod ic;
pub mod linalg;
pub mod matrix;
pub mod nc;
pub mod partition;
pub mod poly;
pub mod quiver;
pub mod rat;
pub mod sample;

pub use error::{Error, Result};
pub use matrix::{RatMatrix, Vector};
pub use partition::Partition;
pub use poly::RatPoly;
pub use rat::{rat, Rat};
