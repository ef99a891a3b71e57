//! Exact tropical intersection theory for cycles embedded in `R^n`.
//!
//! The crate is organised bottom up:
//!
//! * [`kernel`]: rationals, integer matrices, Hermite and Smith normal forms,
//!   lattices.
//! * [`polyhedra`]: canonical H-representations of rational polyhedra with an
//!   exact simplex for all feasibility questions.
//! * [`cycles`]: weighted polyhedral complexes, balancing, refinement and the
//!   group structure on cycles.
//! * [`divisors`]: piecewise integer-affine functions and their Weil divisors.
//! * [`morphisms`]: push-forward of cycles and pull-back of functions along
//!   integer linear maps.
//! * [`products`]: the intersection product on `R^n`, degrees and Bézout.
//! * [`io`]: the JSON document format and SVG rendering.
//! * [`library`]: the named example objects.
//!
//! Tropical polynomials use the max convention throughout.

// Cells cache their facets in a `OnceLock` that takes no part in ordering.
#![allow(clippy::mutable_key_type)]

pub mod cycles;
pub mod divisors;
pub mod error;
pub mod io;
pub mod kernel;
pub mod library;
pub mod morphisms;
pub mod polyhedra;
pub mod products;

pub use error::{Error, Result};
