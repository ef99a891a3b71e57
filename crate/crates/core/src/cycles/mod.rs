//! Weighted polyhedral complexes and tropical cycles.

mod balancing;
mod complex;
mod cycle;

pub(crate) use balancing::ridge_stars;
pub use balancing::{is_balanced, normal_vector, BalanceReport, NormalVector};
pub use complex::{nonzero_part, star_fan, validate_complex, Violation, WeightedComplex};
pub use cycle::{add, cartesian_product, common_refinement, cycles_equal, standard_skeleton, Cycle};
