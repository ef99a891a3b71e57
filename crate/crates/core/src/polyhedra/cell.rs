use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use super::affine::AffineForm;
use super::lp::{self, Constraint, LpResult};
use crate::error::{Error, Result};
use crate::kernel::{self, linalg, IntMatrix, IntVector, LatticeBasis, RatVector, Rational};

/// A nonempty rational polyhedron `{x : f(x) ≥ 0 for f in inequalities,
/// g(x) = 0 for g in equalities}` in canonical form.
///
/// Canonical means: the equalities are the reduced row echelon form of the
/// affine hull (rescaled to primitive integer rows), every inequality is
/// reduced modulo the equalities, primitive, and facet defining. Two cells are
/// equal as sets iff their canonical systems agree, so `Eq`, `Ord` and `Hash`
/// compare constraint systems only.
#[derive(Clone)]
pub struct Cell {
  ambient_dim: usize,
  equalities: Vec<AffineForm>,
  inequalities: Vec<AffineForm>,
  interior_point: RatVector,
  lattice: LatticeBasis,
  hull: EqSystem,
  facets: OnceLock<Vec<Cell>>,
}

/// Rational reduced row echelon form of an affine system `g(x) = 0`.
#[derive(Clone, Debug)]
struct EqSystem {
  n: usize,
  rows: Vec<(usize, RatVector, Rational)>,
}

type RatForm = (RatVector, Rational);

impl EqSystem {
  fn new(n: usize, eqs: &[RatForm]) -> Result<Self> {
    let aug: Vec<RatVector> = eqs
      .iter()
      .map(|(l, c)| {
        let mut r = l.clone();
        r.push(c.clone());
        r
      })
      .collect();
    let (red, pivots) = linalg::rref(&aug);
    if pivots.last() == Some(&n) {
      return Err(Error::EmptyCell);
    }
    let rows = red
      .into_iter()
      .zip(pivots)
      .map(|(mut r, p)| {
        let c = r.pop().expect("constant column");
        (p, r, c)
      })
      .collect();
    Ok(EqSystem { n, rows })
  }

  fn free_columns(&self) -> Vec<usize> {
    (0..self.n).filter(|c| !self.rows.iter().any(|(p, _, _)| p == c)).collect()
  }

  fn reduce(&self, (lin, c): &RatForm) -> RatForm {
    let mut lin = lin.clone();
    let mut c = c.clone();
    for (p, row, rc) in &self.rows {
      if lin[*p].is_zero() {
        continue;
      }
      let f = lin[*p].clone();
      for (x, r) in lin.iter_mut().zip(row) {
        if !r.is_zero() {
          *x -= &f * r;
        }
      }
      c -= &f * rc;
    }
    (lin, c)
  }

  /// The point of the affine hull with the given free coordinates.
  fn point(&self, free: &[usize], y: &[Rational]) -> RatVector {
    let mut x = vec![Rational::zero(); self.n];
    for (&j, v) in free.iter().zip(y) {
      x[j] = v.clone();
    }
    for (p, row, c) in &self.rows {
      let s: Rational = free.iter().map(|&j| &row[j] * &x[j]).sum();
      x[*p] = -(s + c);
    }
    x
  }

  fn normalized_rows(&self) -> Vec<AffineForm> {
    self
      .rows
      .iter()
      .map(|(_, l, c)| AffineForm::normalized_from_rational(l, c).expect("equality rows are nonconstant"))
      .collect()
  }
}

fn to_rat_form(f: &AffineForm) -> RatForm {
  (f.to_rational_linear(), f.constant.clone())
}

fn restrict(lin: &[Rational], free: &[usize]) -> RatVector {
  free.iter().map(|&j| lin[j].clone()).collect()
}

fn restrict_int(lin: &[kernel::Integer], free: &[usize]) -> RatVector {
  free.iter().map(|&j| Rational::from_integer(lin[j].clone())).collect()
}

/// Indices of inequalities that are implied equalities, together with points
/// (in free coordinates) certifying strictness of all the others.
fn implied_equalities(d: usize, cons: &[Constraint]) -> Result<(Vec<usize>, Vec<RatVector>)> {
  let mut open: Vec<usize> = (0..cons.len()).collect();
  let mut points = Vec::new();
  while !open.is_empty() {
    // Maximize the sum of slacks t_k ∈ [0, 1] with cons[open[k]] ≥ t_k.
    let nv = d + open.len();
    let mut rows = Vec::with_capacity(cons.len() + 2 * open.len());
    for (i, c) in cons.iter().enumerate() {
      let mut lin = c.linear.clone();
      lin.resize(nv, Rational::zero());
      if let Some(k) = open.iter().position(|&o| o == i) {
        lin[d + k] = -Rational::one();
      }
      rows.push(Constraint { linear: lin, constant: c.constant.clone() });
    }
    for k in 0..open.len() {
      let mut lin = vec![Rational::zero(); nv];
      lin[d + k] = Rational::one();
      rows.push(Constraint { linear: lin.clone(), constant: Rational::zero() });
      lin[d + k] = -Rational::one();
      rows.push(Constraint { linear: lin, constant: Rational::one() });
    }
    let mut objective = vec![Rational::zero(); nv];
    for o in objective.iter_mut().skip(d) {
      *o = Rational::one();
    }
    match lp::maximize(nv, &rows, &objective) {
      LpResult::Infeasible => return Err(Error::EmptyCell),
      LpResult::Unbounded => return Err(Error::Internal("bounded slack problem reported unbounded".into())),
      LpResult::Optimal { point, value } => {
        if value.is_zero() {
          return Ok((open, points));
        }
        let strict: Vec<bool> = (0..open.len()).map(|k| point[d + k].is_positive()).collect();
        points.push(point[..d].to_vec());
        let mut k = 0;
        open.retain(|_| {
          let keep = !strict[k];
          k += 1;
          keep
        });
      }
    }
  }
  Ok((Vec::new(), points))
}

impl Cell {
  /// Canonicalizes the system `{f ≥ 0 : f ∈ inequalities} ∩ {g = 0 : g ∈ equalities}`.
  pub fn new(ambient_dim: usize, inequalities: &[AffineForm], equalities: &[AffineForm]) -> Result<Cell> {
    let ineqs: Vec<RatForm> = inequalities.iter().map(to_rat_form).collect();
    let eqs: Vec<RatForm> = equalities.iter().map(to_rat_form).collect();
    Self::canonicalize(ambient_dim, ineqs, eqs)
  }

  fn canonicalize(n: usize, mut ineqs: Vec<RatForm>, mut eqs: Vec<RatForm>) -> Result<Cell> {
    for (l, _) in ineqs.iter().chain(&eqs) {
      if l.len() != n {
        return Err(Error::DimensionMismatch(format!("form of length {} in R^{n}", l.len())));
      }
    }
    let mut witnesses: Vec<RatVector> = Vec::new();
    let (hull, free, kept) = loop {
      let hull = EqSystem::new(n, &eqs)?;
      let free = hull.free_columns();
      let mut reduced: Vec<AffineForm> = Vec::new();
      for f in &ineqs {
        let (l, c) = hull.reduce(f);
        match AffineForm::normalized_from_rational(&l, &c) {
          Some(g) => reduced.push(g),
          None if c.is_negative() => return Err(Error::EmptyCell),
          None => {}
        }
      }
      reduced.sort();
      reduced.dedup();
      let cons: Vec<Constraint> = reduced
        .iter()
        .map(|f| Constraint { linear: restrict_int(&f.linear, &free), constant: f.constant.clone() })
        .collect();
      let (implied, points) = implied_equalities(free.len(), &cons)?;
      witnesses.extend(points.iter().map(|y| hull.point(&free, y)));
      if implied.is_empty() {
        break (hull, free, reduced);
      }
      for &i in &implied {
        eqs.push(to_rat_form(&reduced[i]));
      }
      ineqs = reduced.iter().enumerate().filter(|(i, _)| !implied.contains(i)).map(|(_, f)| to_rat_form(f)).collect();
    };

    // Drop inequalities implied by the remaining ones.
    let cons: Vec<Constraint> = kept
      .iter()
      .map(|f| Constraint { linear: restrict_int(&f.linear, &free), constant: f.constant.clone() })
      .collect();
    let mut keep = vec![true; kept.len()];
    for i in 0..kept.len() {
      let others: Vec<Constraint> = (0..kept.len()).filter(|&j| j != i && keep[j]).map(|j| cons[j].clone()).collect();
      let objective: RatVector = cons[i].linear.iter().map(|x| -x).collect();
      match lp::maximize(free.len(), &others, &objective) {
        LpResult::Unbounded => {}
        LpResult::Optimal { value, .. } => {
          if !(&cons[i].constant - value).is_negative() {
            keep[i] = false;
          }
        }
        LpResult::Infeasible => return Err(Error::Internal("relaxation of a feasible system is infeasible".into())),
      }
    }
    let inequalities: Vec<AffineForm> = kept.into_iter().zip(keep).filter(|(_, k)| *k).map(|(f, _)| f).collect();

    let point = if witnesses.is_empty() {
      hull.point(&free, &vec![Rational::zero(); free.len()])
    } else {
      let m = Rational::from_integer(witnesses.len().into());
      (0..n).map(|j| witnesses.iter().map(|w| &w[j]).sum::<Rational>() / &m).collect()
    };
    let equalities = hull.normalized_rows();
    Ok(Self::assemble(n, equalities, inequalities, point))
  }

  /// Builds a cell from a system already known to be canonical.
  fn assemble(n: usize, mut equalities: Vec<AffineForm>, mut inequalities: Vec<AffineForm>, point: RatVector) -> Cell {
    equalities.sort();
    inequalities.sort();
    let eq_rows: Vec<IntVector> = equalities.iter().map(|e| e.linear.clone()).collect();
    let lattice = LatticeBasis::from_generators(n, &kernel::integer_kernel(&eq_rows, n));
    let hull = EqSystem::new(n, &equalities.iter().map(to_rat_form).collect::<Vec<_>>()).expect("consistent hull");
    let cell =
      Cell { ambient_dim: n, equalities, inequalities, interior_point: point, lattice, hull, facets: OnceLock::new() };
    debug_assert!(cell.relative_interior_contains(&cell.interior_point));
    cell
  }

  pub fn whole_space(n: usize) -> Cell {
    Self::assemble(n, Vec::new(), Vec::new(), vec![Rational::zero(); n])
  }

  pub fn point(p: &[Rational]) -> Cell {
    let n = p.len();
    let eqs = (0..n).map(|i| AffineForm::coordinate(n, i).sub(&AffineForm::constant(n, p[i].clone()))).collect();
    Self::assemble(n, eqs, Vec::new(), p.to_vec())
  }

  /// `p + span(directions)`.
  pub fn affine_subspace(p: &[Rational], directions: &[IntVector]) -> Cell {
    let n = p.len();
    let rows: Vec<RatVector> = directions.iter().map(|d| kernel::to_rational(d)).collect();
    let eqs: Vec<AffineForm> = linalg::nullspace(&rows, n)
      .into_iter()
      .map(|w| {
        let c = -kernel::dot_rat(&w, p);
        AffineForm::normalized_from_rational(&w, &c).expect("nonzero normal")
      })
      .collect();
    Cell::new(n, &[], &eqs).expect("affine subspaces are nonempty")
  }

  /// `conv(vertices) + cone(rays)` where the vertices are affinely independent
  /// and the vertex differences together with the rays are linearly
  /// independent.
  pub fn simplicial(vertices: &[RatVector], rays: &[IntVector]) -> Result<Cell> {
    let v0 = vertices.first().ok_or_else(|| Error::DimensionMismatch("no vertices".into()))?;
    let n = v0.len();
    let mut gens: Vec<RatVector> =
      vertices[1..].iter().map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect()).collect();
    gens.extend(rays.iter().map(|r| kernel::to_rational(r)));
    let k = gens.len();
    if linalg::rank(&gens) != k {
      return Err(Error::RankMismatch("generators are not independent".into()));
    }
    // Dual functionals F = (D Dᵀ)⁻¹ D, so that F·g_j = e_j.
    let gram: Vec<RatVector> = gens.iter().map(|a| gens.iter().map(|b| kernel::dot_rat(a, b)).collect()).collect();
    let gram_inv = if k == 0 { Vec::new() } else { linalg::inverse(&gram).expect("independent generators") };
    let duals: Vec<RatVector> =
      (0..k).map(|i| (0..n).map(|j| (0..k).map(|l| &gram_inv[i][l] * &gens[l][j]).sum()).collect()).collect();
    let coordinate = |f: &RatVector| -> RatForm { (f.clone(), -kernel::dot_rat(f, v0)) };
    let mut ineqs: Vec<RatForm> = duals.iter().map(coordinate).collect();
    let nv = vertices.len() - 1;
    if nv > 0 {
      let sum: RatVector = (0..n).map(|j| duals[..nv].iter().map(|d| &d[j]).sum()).collect();
      let (l, c) = coordinate(&sum);
      ineqs.push((l.iter().map(|x| -x).collect(), Rational::one() - c));
    }
    let eqs: Vec<RatForm> = linalg::nullspace(&gens, n).into_iter().map(|w| coordinate(&w)).collect();
    Self::canonicalize(n, ineqs, eqs)
  }

  /// The cone spanned by linearly independent integer rays.
  pub fn cone(n: usize, rays: &[IntVector]) -> Result<Cell> {
    Self::simplicial(&[vec![Rational::zero(); n]], rays)
  }

  pub fn segment(p: &[Rational], q: &[Rational]) -> Result<Cell> {
    Self::simplicial(&[p.to_vec(), q.to_vec()], &[])
  }

  pub fn ray(p: &[Rational], direction: &[kernel::Integer]) -> Result<Cell> {
    Self::simplicial(&[p.to_vec()], &[direction.to_vec()])
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn dim(&self) -> usize {
    self.ambient_dim - self.equalities.len()
  }

  pub fn equalities(&self) -> &[AffineForm] {
    &self.equalities
  }

  pub fn inequalities(&self) -> &[AffineForm] {
    &self.inequalities
  }

  pub fn interior_point(&self) -> &[Rational] {
    &self.interior_point
  }

  /// `Λ_σ`: the lattice of the linear space parallel to the cell.
  pub fn direction_lattice(&self) -> &LatticeBasis {
    &self.lattice
  }

  /// All defining forms, equalities first.
  pub fn defining_forms(&self) -> impl Iterator<Item = &AffineForm> {
    self.equalities.iter().chain(&self.inequalities)
  }

  pub fn contains_point(&self, p: &[Rational]) -> bool {
    self.equalities.iter().all(|e| e.eval(p).is_zero()) && self.inequalities.iter().all(|f| !f.eval(p).is_negative())
  }

  pub fn relative_interior_contains(&self, p: &[Rational]) -> bool {
    self.equalities.iter().all(|e| e.eval(p).is_zero()) && self.inequalities.iter().all(|f| f.eval(p).is_positive())
  }

  pub fn is_bounded(&self) -> bool {
    self.recession_cone().dim() == 0
  }

  /// Whether the linear part of `f` vanishes on the direction space.
  pub fn is_constant_on(&self, f: &AffineForm) -> bool {
    self.lattice.basis().iter().all(|b| f.eval_linear(b).is_zero())
  }

  fn constraints(&self, free: &[usize]) -> Vec<Constraint> {
    self
      .inequalities
      .iter()
      .map(|f| Constraint { linear: restrict_int(&f.linear, free), constant: f.constant.clone() })
      .collect()
  }

  /// Supremum of `f` over the cell, `None` if unbounded above.
  pub fn maximum(&self, f: &AffineForm) -> Option<Rational> {
    let free = self.hull.free_columns();
    let (l, c) = self.hull.reduce(&to_rat_form(f));
    match lp::maximize(free.len(), &self.constraints(&free), &restrict(&l, &free)) {
      LpResult::Optimal { value, .. } => Some(value + c),
      LpResult::Unbounded => None,
      LpResult::Infeasible => unreachable!("canonical cells are nonempty"),
    }
  }

  /// Infimum of `f` over the cell, `None` if unbounded below.
  pub fn minimum(&self, f: &AffineForm) -> Option<Rational> {
    self.maximum(&f.neg()).map(|v| -v)
  }

  /// Whether `other ⊆ self`.
  pub fn contains_cell(&self, other: &Cell) -> bool {
    if self.ambient_dim != other.ambient_dim {
      return false;
    }
    self.equalities.iter().all(|e| e.eval(&other.interior_point).is_zero() && other.is_constant_on(e))
      && self.inequalities.iter().all(|f| other.minimum(f).is_some_and(|m| !m.is_negative()))
  }

  /// Set equality by mutual containment. For canonical cells this agrees with
  /// `==`; it is kept as an independent check.
  pub fn same_set(&self, other: &Cell) -> bool {
    self.contains_cell(other) && other.contains_cell(self)
  }

  pub fn intersect(&self, other: &Cell) -> Option<Cell> {
    assert_eq!(self.ambient_dim, other.ambient_dim);
    let ineqs: Vec<RatForm> = self.inequalities.iter().chain(&other.inequalities).map(to_rat_form).collect();
    let eqs: Vec<RatForm> = self.equalities.iter().chain(&other.equalities).map(to_rat_form).collect();
    Self::canonicalize(self.ambient_dim, ineqs, eqs).ok()
  }

  /// Adds constraints to the cell; `None` if the result is empty.
  pub fn restrict(&self, inequalities: &[AffineForm], equalities: &[AffineForm]) -> Option<Cell> {
    let ineqs: Vec<RatForm> = self.inequalities.iter().chain(inequalities).map(to_rat_form).collect();
    let eqs: Vec<RatForm> = self.equalities.iter().chain(equalities).map(to_rat_form).collect();
    Self::canonicalize(self.ambient_dim, ineqs, eqs).ok()
  }

  /// Faces of dimension `dim − 1`, one per facet defining inequality.
  pub fn faces_of_codim_one(&self) -> &[Cell] {
    self.facets.get_or_init(|| {
      let mut faces: Vec<Cell> = (0..self.inequalities.len())
        .map(|i| {
          let ineqs: Vec<RatForm> =
            self.inequalities.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| to_rat_form(f)).collect();
          let mut eqs: Vec<RatForm> = self.equalities.iter().map(to_rat_form).collect();
          eqs.push(to_rat_form(&self.inequalities[i]));
          Self::canonicalize(self.ambient_dim, ineqs, eqs).expect("facet of a nonempty cell")
        })
        .collect();
      faces.sort();
      faces.dedup();
      debug_assert!(faces.iter().all(|f| f.dim() + 1 == self.dim()));
      faces
    })
  }

  /// The inequality of `self` that vanishes on the face `face`.
  pub fn supporting_inequality(&self, face: &Cell) -> Option<&AffineForm> {
    self.inequalities.iter().find(|f| f.eval(face.interior_point()).is_zero())
  }

  /// Whether `face` is a face of `self` (the empty face excluded).
  pub fn has_face(&self, face: &Cell) -> bool {
    if !self.contains_cell(face) {
      return false;
    }
    let p = face.interior_point();
    let tight: Vec<AffineForm> = self.inequalities.iter().filter(|f| f.eval(p).is_zero()).cloned().collect();
    match self.restrict(&[], &tight) {
      Some(f) => &f == face,
      None => false,
    }
  }

  pub fn recession_cone(&self) -> Cell {
    let homogeneous = |f: &AffineForm| (f.to_rational_linear(), Rational::zero());
    let ineqs = self.inequalities.iter().map(homogeneous).collect();
    let eqs = self.equalities.iter().map(homogeneous).collect();
    Self::canonicalize(self.ambient_dim, ineqs, eqs).expect("recession cones contain the origin")
  }

  /// The cone of directions `v` with `p + εv ∈ self` for small `ε > 0`.
  pub fn tangent_cone(&self, p: &[Rational]) -> Cell {
    let homogeneous = |f: &AffineForm| (f.to_rational_linear(), Rational::zero());
    let ineqs = self.inequalities.iter().filter(|f| f.eval(p).is_zero()).map(homogeneous).collect();
    let eqs = self.equalities.iter().map(homogeneous).collect();
    Self::canonicalize(self.ambient_dim, ineqs, eqs).expect("tangent cones contain the origin")
  }

  pub fn translate(&self, v: &[Rational]) -> Cell {
    let eqs = self.equalities.iter().map(|f| f.translate(v)).collect();
    let ineqs = self.inequalities.iter().map(|f| f.translate(v)).collect();
    let point = self.interior_point.iter().zip(v).map(|(a, b)| a + b).collect();
    Self::assemble(self.ambient_dim, eqs, ineqs, point)
  }

  /// `self × other ⊂ R^{n+m}`.
  pub fn product(&self, other: &Cell) -> Cell {
    let (n, m) = (self.ambient_dim, other.ambient_dim);
    let left = |f: &AffineForm| {
      let mut l = f.linear.clone();
      l.resize(n + m, Zero::zero());
      AffineForm::new(l, f.constant.clone())
    };
    let right = |f: &AffineForm| {
      let mut l = vec![Zero::zero(); n];
      l.extend(f.linear.iter().cloned());
      AffineForm::new(l, f.constant.clone())
    };
    let eqs = self.equalities.iter().map(left).chain(other.equalities.iter().map(right)).collect();
    let ineqs = self.inequalities.iter().map(left).chain(other.inequalities.iter().map(right)).collect();
    let point = self.interior_point.iter().chain(&other.interior_point).cloned().collect();
    Self::assemble(n + m, eqs, ineqs, point)
  }

  /// `{x : M x ∈ self}`, or an error if empty.
  pub fn preimage(&self, m: &IntMatrix) -> Result<Cell> {
    assert_eq!(m.rows(), self.ambient_dim);
    let ineqs: Vec<AffineForm> = self.inequalities.iter().map(|f| f.pull_back(m)).collect();
    let eqs: Vec<AffineForm> = self.equalities.iter().map(|f| f.pull_back(m)).collect();
    Cell::new(m.cols(), &ineqs, &eqs)
  }

  /// Rank of `M` restricted to the direction space.
  pub fn image_rank(&self, m: &IntMatrix) -> usize {
    let images: Vec<RatVector> = self.lattice.basis().iter().map(|b| kernel::to_rational(&m.mul_vec(b))).collect();
    linalg::rank(&images)
  }

  /// `M(self)` for a matrix injective on the direction space.
  pub fn image(&self, m: &IntMatrix) -> Result<Cell> {
    assert_eq!(m.cols(), self.ambient_dim);
    let k = self.dim();
    if self.image_rank(m) != k {
      return Err(Error::NotInjective);
    }
    let target = m.rows();
    let p = &self.interior_point;
    let fp = m.mul_rat_vec(p);
    // Directions G = M·Bᵀ (target × k); y = L (x' − M p) with L = (GᵀG)⁻¹Gᵀ.
    let basis = self.lattice.basis();
    let g_cols: Vec<RatVector> = basis.iter().map(|b| kernel::to_rational(&m.mul_vec(b))).collect();
    let gram: Vec<RatVector> = g_cols.iter().map(|a| g_cols.iter().map(|b| kernel::dot_rat(a, b)).collect()).collect();
    let gram_inv = if k == 0 { Vec::new() } else { linalg::inverse(&gram).expect("injective on directions") };
    let l_rows: Vec<RatVector> =
      (0..k).map(|i| (0..target).map(|j| (0..k).map(|l| &gram_inv[i][l] * &g_cols[l][j]).sum()).collect()).collect();
    let mut ineqs = Vec::new();
    for f in &self.inequalities {
      // f(p + Bᵀy) = f(p) + (B a)·y
      let ba: RatVector = basis.iter().map(|b| Rational::from_integer(f.eval_linear(b))).collect();
      let lin: RatVector = (0..target).map(|j| (0..k).map(|i| &ba[i] * &l_rows[i][j]).sum()).collect();
      let c = f.eval(p) - kernel::dot_rat(&lin, &fp);
      ineqs.push((lin, c));
    }
    let eqs = linalg::nullspace(&g_cols, target)
      .into_iter()
      .map(|w| {
        let c = -kernel::dot_rat(&w, &fp);
        (w, c)
      })
      .collect();
    Self::canonicalize(target, ineqs, eqs)
  }

  /// Splits along the hyperplane `{h = 0}` when it meets the relative interior;
  /// otherwise returns the cell unchanged.
  pub fn split(&self, h: &AffineForm) -> Vec<Cell> {
    if self.is_constant_on(h) {
      return vec![self.clone()];
    }
    let at = h.eval(&self.interior_point);
    let crosses = match at.cmp(&Rational::zero()) {
      Ordering::Equal => true,
      Ordering::Greater => self.minimum(h).is_none_or(|m| m.is_negative()),
      Ordering::Less => self.maximum(h).is_none_or(|m| m.is_positive()),
    };
    if !crosses {
      return vec![self.clone()];
    }
    let pieces: Vec<Cell> =
      [h.clone(), h.neg()].iter().filter_map(|f| self.restrict(std::slice::from_ref(f), &[])).collect();
    debug_assert!(pieces.len() == 2 && pieces.iter().all(|p| p.dim() == self.dim()));
    pieces
  }
}

impl PartialEq for Cell {
  fn eq(&self, other: &Self) -> bool {
    self.ambient_dim == other.ambient_dim
      && self.equalities == other.equalities
      && self.inequalities == other.inequalities
  }
}

impl Eq for Cell {}

impl Hash for Cell {
  fn hash<H: Hasher>(&self, state: &mut H) {
    self.ambient_dim.hash(state);
    self.equalities.hash(state);
    self.inequalities.hash(state);
  }
}

impl PartialOrd for Cell {
  fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
    Some(self.cmp(other))
  }
}

impl Ord for Cell {
  fn cmp(&self, other: &Self) -> Ordering {
    (self.ambient_dim, self.equalities.len(), &self.equalities, &self.inequalities).cmp(&(
      other.ambient_dim,
      other.equalities.len(),
      &other.equalities,
      &other.inequalities,
    ))
  }
}

impl fmt::Debug for Cell {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{self}")
  }
}

impl fmt::Display for Cell {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut parts: Vec<String> = self.equalities.iter().map(|e| format!("{e} = 0")).collect();
    parts.extend(self.inequalities.iter().map(|e| format!("{e} >= 0")));
    if parts.is_empty() {
      write!(f, "{{R^{}}}", self.ambient_dim)
    } else {
      write!(f, "{{{}}}", parts.join(", "))
    }
  }
}
