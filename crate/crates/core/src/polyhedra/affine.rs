use std::fmt;

use num_traits::{Signed, Zero};

use crate::kernel::{self, IntMatrix, IntVector, Integer, Rational};

/// `x ↦ linear·x + constant` with an integral linear part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
  pub linear: IntVector,
  pub constant: Rational,
}

impl AffineForm {
  pub fn new(linear: IntVector, constant: Rational) -> Self {
    AffineForm { linear, constant }
  }

  pub fn from_i64(linear: &[i64], constant: i64) -> Self {
    AffineForm::new(kernel::int_vec(linear), kernel::rat(constant))
  }

  pub fn constant(n: usize, c: Rational) -> Self {
    AffineForm::new(vec![Integer::zero(); n], c)
  }

  pub fn zero(n: usize) -> Self {
    Self::constant(n, Rational::zero())
  }

  /// The coordinate function `x_i`.
  pub fn coordinate(n: usize, i: usize) -> Self {
    let mut linear = vec![Integer::zero(); n];
    linear[i] = Integer::from(1);
    AffineForm::new(linear, Rational::zero())
  }

  pub fn ambient_dim(&self) -> usize {
    self.linear.len()
  }

  pub fn eval(&self, x: &[Rational]) -> Rational {
    kernel::dot_mixed(&self.linear, x) + &self.constant
  }

  pub fn eval_linear(&self, v: &[Integer]) -> Integer {
    kernel::dot_int(&self.linear, v)
  }

  pub fn eval_linear_rat(&self, v: &[Rational]) -> Rational {
    kernel::dot_mixed(&self.linear, v)
  }

  pub fn is_constant(&self) -> bool {
    kernel::is_zero_vector(&self.linear)
  }

  pub fn neg(&self) -> Self {
    AffineForm::new(self.linear.iter().map(|x| -x).collect(), -&self.constant)
  }

  pub fn add(&self, other: &AffineForm) -> Self {
    AffineForm::new(
      self.linear.iter().zip(&other.linear).map(|(a, b)| a + b).collect(),
      &self.constant + &other.constant,
    )
  }

  pub fn sub(&self, other: &AffineForm) -> Self {
    self.add(&other.neg())
  }

  pub fn scale(&self, m: &Integer) -> Self {
    AffineForm::new(self.linear.iter().map(|x| x * m).collect(), &self.constant * Rational::from_integer(m.clone()))
  }

  /// The form `x ↦ self(x − v)`, which cuts out the translate by `v` of the
  /// set cut out by `self`.
  pub fn translate(&self, v: &[Rational]) -> Self {
    AffineForm::new(self.linear.clone(), &self.constant - self.eval_linear_rat(v))
  }

  /// `x ↦ self(M x)`.
  pub fn pull_back(&self, m: &IntMatrix) -> Self {
    AffineForm::new(m.vec_mul(&self.linear), self.constant.clone())
  }

  /// Rescales a form with rational coefficients by a positive factor so that
  /// its linear part is primitive integral. Returns `None` for constant forms.
  pub fn normalized_from_rational(linear: &[Rational], constant: &Rational) -> Option<Self> {
    if linear.iter().all(Zero::is_zero) {
      return None;
    }
    let (lin, scale) = kernel::clear_denominators(linear);
    Some(AffineForm::new(lin, constant * scale))
  }

  /// Positive rescaling with primitive linear part; `None` for constants.
  pub fn normalized(&self) -> Option<Self> {
    Self::normalized_from_rational(&kernel::to_rational(&self.linear), &self.constant)
  }

  /// The hyperplane `{self = 0}` as a canonical form: primitive, with the first
  /// nonzero coefficient positive. `None` for constant forms.
  pub fn hyperplane_key(&self) -> Option<Self> {
    let n = self.normalized()?;
    let first = n.linear.iter().find(|x| !x.is_zero()).expect("nonconstant");
    Some(if first.is_negative() { n.neg() } else { n })
  }

  pub(crate) fn to_rational_linear(&self) -> Vec<Rational> {
    kernel::to_rational(&self.linear)
  }
}

impl fmt::Display for AffineForm {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut parts = Vec::new();
    for (i, a) in self.linear.iter().enumerate() {
      if a.is_zero() {
        continue;
      }
      let coeff = match a.to_string().as_str() {
        "1" => String::new(),
        "-1" => "-".to_string(),
        s => s.to_string(),
      };
      parts.push(format!("{coeff}x{}", i + 1));
    }
    if !self.constant.is_zero() || parts.is_empty() {
      parts.push(kernel::format_rational(&self.constant));
    }
    write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
  }
}

/// A finite family of affine forms whose zero sets cut a complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HalfspaceArrangement {
  pub forms: Vec<AffineForm>,
}

impl HalfspaceArrangement {
  pub fn new(forms: Vec<AffineForm>) -> Self {
    HalfspaceArrangement { forms }
  }

  /// Distinct nonconstant hyperplanes, in canonical order.
  pub fn hyperplanes(&self) -> Vec<AffineForm> {
    let mut hs: Vec<AffineForm> = self.forms.iter().filter_map(|f| f.hyperplane_key()).collect();
    hs.sort();
    hs.dedup();
    hs
  }
}
