use thiserror::Error;

/// Errors raised by the geometric and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
  #[error("no primitive part of zero")]
  ZeroVector,
  #[error("rank mismatch: {0}")]
  RankMismatch(String),
  #[error("quotient lattice has torsion; input lattices are not saturated")]
  Torsion,
  #[error("map not injective on lattice")]
  NotInjective,
  #[error("vector is not contained in the lattice")]
  NotInLattice,
  #[error("empty cell")]
  EmptyCell,
  #[error("dimension mismatch: {0}")]
  DimensionMismatch(String),
  #[error("cell is not a codimension one face of the given facet")]
  NotAFace,
  #[error("complex is not balanced at the ridge {0}")]
  Unbalanced(String),
  #[error("invalid polyhedral complex: {0}")]
  InvalidComplex(String),
  #[error("function undefined on support")]
  FunctionUndefined,
  #[error("function is not continuous: {0}")]
  Discontinuous(String),
  #[error("no integral affine form with the requested values: {0}")]
  NotIntegral(String),
  #[error("more divisors ({divisors}) than the dimension of the cycle ({dim})")]
  TooManyDivisors { divisors: usize, dim: usize },
  #[error("hypothesis violated: {0}")]
  HypothesisViolated(String),
  #[error("image of the source is not contained in the target support")]
  NotAMorphism,
  #[error("internal consistency check failed: {0}")]
  Internal(String),
  #[error("{0}")]
  Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
