use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{IntMatrix, IntVector, Integer, Rational};
use crate::polyhedra::{hyperplanes_of, AffineForm, Cell};

/// `max` of finitely many integer-affine forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalPolynomial {
  terms: Vec<AffineForm>,
}

impl TropicalPolynomial {
  pub fn new(terms: Vec<AffineForm>) -> Result<Self> {
    let n = terms.first().ok_or_else(|| Error::Parse("tropical polynomial without terms".into()))?.ambient_dim();
    if terms.iter().any(|t| t.ambient_dim() != n) {
      return Err(Error::DimensionMismatch("terms of different lengths".into()));
    }
    Ok(TropicalPolynomial { terms })
  }

  /// `max{x_1, ..., x_n, 0}`.
  pub fn linear_hyperplane(n: usize) -> Self {
    let mut terms: Vec<AffineForm> = (0..n).map(|i| AffineForm::coordinate(n, i)).collect();
    terms.push(AffineForm::zero(n));
    TropicalPolynomial { terms }
  }

  pub fn ambient_dim(&self) -> usize {
    self.terms[0].ambient_dim()
  }

  pub fn terms(&self) -> &[AffineForm] {
    &self.terms
  }

  pub fn eval(&self, x: &[Rational]) -> Rational {
    self.terms.iter().map(|t| t.eval(x)).max().expect("nonempty")
  }

  pub fn pull_back(&self, m: &IntMatrix) -> Self {
    TropicalPolynomial { terms: self.terms.iter().map(|t| t.pull_back(m)).collect() }
  }

  /// The region `{t_i ≥ t_j for all j}`, if nonempty.
  pub(crate) fn region(&self, i: usize) -> Option<Cell> {
    let n = self.ambient_dim();
    let ineqs: Vec<AffineForm> =
      self.terms.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| self.terms[i].sub(t)).collect();
    Cell::new(n, &ineqs, &[]).ok()
  }
}

impl fmt::Display for TropicalPolynomial {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let terms: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
    write!(f, "max{{{}}}", terms.join(", "))
  }
}

/// Affine forms on the cells of a decomposition. The forms agree wherever
/// two cells meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseFunction {
  ambient_dim: usize,
  pieces: Vec<(Cell, AffineForm)>,
  hyperplanes: Vec<AffineForm>,
}

impl PiecewiseFunction {
  pub fn new(ambient_dim: usize, pieces: Vec<(Cell, AffineForm)>) -> Result<Self> {
    for (c, f) in &pieces {
      if c.ambient_dim() != ambient_dim || f.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!("piece {c} outside R^{ambient_dim}")));
      }
    }
    for i in 0..pieces.len() {
      for j in i + 1..pieces.len() {
        let ((a, f), (b, g)) = (&pieces[i], &pieces[j]);
        if let Some(x) = a.intersect(b) {
          let d = f.sub(g);
          if !x.is_constant_on(&d) || !d.eval(x.interior_point()).is_zero() {
            return Err(Error::Discontinuous(format!("{f} on {a} and {g} on {b} differ on {x}")));
          }
        }
      }
    }
    let hyperplanes = hyperplanes_of(pieces.iter().map(|(c, _)| c));
    Ok(PiecewiseFunction { ambient_dim, pieces, hyperplanes })
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn pieces(&self) -> &[(Cell, AffineForm)] {
    &self.pieces
  }

  pub(crate) fn hyperplanes(&self) -> &[AffineForm] {
    &self.hyperplanes
  }

  /// The form of some piece containing `p`.
  pub fn form_at(&self, p: &[Rational]) -> Option<&AffineForm> {
    self.pieces.iter().find(|(c, _)| c.contains_point(p)).map(|(_, f)| f)
  }

  pub fn pull_back(&self, m: &IntMatrix) -> Result<Self> {
    let pieces = self.pieces.iter().filter_map(|(c, f)| c.preimage(m).ok().map(|pre| (pre, f.pull_back(m)))).collect();
    PiecewiseFunction::new(m.cols(), pieces)
  }
}

/// A continuous piecewise integer-affine function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PLFunction {
  Polynomial(TropicalPolynomial),
  Piecewise(PiecewiseFunction),
  /// Integer combination of functions.
  Sum(Vec<(Integer, PLFunction)>),
}

impl PLFunction {
  pub fn affine(f: AffineForm) -> Self {
    PLFunction::Polynomial(TropicalPolynomial { terms: vec![f] })
  }

  pub fn max_of(terms: Vec<AffineForm>) -> Result<Self> {
    Ok(PLFunction::Polynomial(TropicalPolynomial::new(terms)?))
  }

  pub fn ambient_dim(&self) -> usize {
    match self {
      PLFunction::Polynomial(p) => p.ambient_dim(),
      PLFunction::Piecewise(p) => p.ambient_dim(),
      PLFunction::Sum(parts) => parts.first().map_or(0, |(_, f)| f.ambient_dim()),
    }
  }

  pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
    match self {
      PLFunction::Polynomial(p) => Ok(p.eval(x)),
      PLFunction::Piecewise(p) => p.form_at(x).map(|f| f.eval(x)).ok_or(Error::FunctionUndefined),
      PLFunction::Sum(parts) => {
        let mut acc = Rational::zero();
        for (m, f) in parts {
          acc += Rational::from_integer(m.clone()) * f.eval(x)?;
        }
        Ok(acc)
      }
    }
  }

  pub fn plus(&self, other: &PLFunction) -> PLFunction {
    PLFunction::Sum(vec![(Integer::one(), self.clone()), (Integer::one(), other.clone())])
  }

  pub fn minus(&self, other: &PLFunction) -> PLFunction {
    PLFunction::Sum(vec![(Integer::one(), self.clone()), (-Integer::one(), other.clone())])
  }

  pub fn scaled(&self, m: &Integer) -> PLFunction {
    PLFunction::Sum(vec![(m.clone(), self.clone())])
  }

  /// `self ∘ M`.
  pub fn pull_back(&self, m: &IntMatrix) -> Result<PLFunction> {
    Ok(match self {
      PLFunction::Polynomial(p) => PLFunction::Polynomial(p.pull_back(m)),
      PLFunction::Piecewise(p) => PLFunction::Piecewise(p.pull_back(m)?),
      PLFunction::Sum(parts) => {
        PLFunction::Sum(parts.iter().map(|(k, f)| Ok((k.clone(), f.pull_back(m)?))).collect::<Result<_>>()?)
      }
    })
  }

  /// `x ↦ self(x − v)`.
  pub fn translate(&self, v: &[Rational]) -> PLFunction {
    match self {
      PLFunction::Polynomial(p) => {
        PLFunction::Polynomial(TropicalPolynomial { terms: p.terms.iter().map(|t| t.translate(v)).collect() })
      }
      PLFunction::Piecewise(p) => {
        let pieces: Vec<(Cell, AffineForm)> = p.pieces.iter().map(|(c, f)| (c.translate(v), f.translate(v))).collect();
        PLFunction::Piecewise(PiecewiseFunction {
          ambient_dim: p.ambient_dim,
          hyperplanes: hyperplanes_of(pieces_cells(&pieces)),
          pieces,
        })
      }
      PLFunction::Sum(parts) => PLFunction::Sum(parts.iter().map(|(k, f)| (k.clone(), f.translate(v))).collect()),
    }
  }
}

fn pieces_cells(pieces: &[(Cell, AffineForm)]) -> impl Iterator<Item = &Cell> {
  pieces.iter().map(|(c, _)| c)
}

impl fmt::Display for PLFunction {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      PLFunction::Polynomial(p) => write!(f, "{p}"),
      PLFunction::Piecewise(p) => write!(f, "piecewise function with {} pieces", p.pieces.len()),
      PLFunction::Sum(parts) => {
        let s: Vec<String> = parts.iter().map(|(k, g)| format!("{k}*({g})")).collect();
        write!(f, "{}", s.join(" + "))
      }
    }
  }
}

/// A Cartier divisor given by one global rational function; representatives
/// differing by an integer-affine function define the same divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierDivisor {
  pub representative: PLFunction,
}

impl CartierDivisor {
  pub fn new(representative: PLFunction) -> Self {
    CartierDivisor { representative }
  }
}

impl From<PLFunction> for CartierDivisor {
  fn from(f: PLFunction) -> Self {
    CartierDivisor::new(f)
  }
}

impl From<TropicalPolynomial> for CartierDivisor {
  fn from(p: TropicalPolynomial) -> Self {
    CartierDivisor::new(PLFunction::Polynomial(p))
  }
}

/// The integer linear form taking the given values on the given vectors.
pub fn interpolate_linear(n: usize, vectors: &[IntVector], values: &[Integer]) -> Result<AffineForm> {
  assert_eq!(vectors.len(), values.len());
  let a = IntMatrix::from_rows(vectors, n);
  let b: Vec<Rational> = values.iter().map(|v| Rational::from_integer(v.clone())).collect();
  let l = crate::kernel::solve_integer(&a, &b).ok_or_else(|| Error::NotIntegral("no integer linear form".into()))?;
  Ok(AffineForm::new(l, Rational::zero()))
}
