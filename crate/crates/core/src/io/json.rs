use serde_json::{json, Map, Value};

use super::Document;
use crate::cycles::{Cycle, WeightedComplex};
use crate::divisors::{PLFunction, PiecewiseFunction};
use crate::error::{Error, Result};
use crate::kernel::{IntMatrix, IntVector, Integer, Rational};
use crate::morphisms::IntegerLinearMap;
use crate::polyhedra::{AffineForm, Cell};

pub const FORMAT_VERSION: &str = "1";

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
  Error::Parse(format!("{path}: {msg}"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
  obj.get(key).ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
  v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
  v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn rational(v: &Value, path: &str) -> Result<Rational> {
  match v {
    Value::Number(n) => {
      if let Some(i) = n.as_i64() {
        Ok(Rational::from_integer(i.into()))
      } else if let Some(u) = n.as_u64() {
        Ok(Rational::from_integer(u.into()))
      } else {
        Err(err(path, format!("decimal literal {n} is not exact; write \"p/q\"")))
      }
    }
    Value::String(s) => parse_rational_str(s).ok_or_else(|| err(path, format!("cannot read {s:?} as a rational"))),
    _ => Err(err(path, "expected a number or a \"p/q\" string")),
  }
}

fn parse_rational_str(s: &str) -> Option<Rational> {
  let s = s.trim();
  let (p, q) = match s.split_once('/') {
    Some((p, q)) => (p.trim(), q.trim()),
    None => (s, "1"),
  };
  let p: Integer = p.parse().ok()?;
  let q: Integer = q.parse().ok()?;
  if q == Integer::from(0) {
    return None;
  }
  Some(Rational::new(p, q))
}

fn integer(v: &Value, path: &str) -> Result<Integer> {
  let q = rational(v, path)?;
  if !q.is_integer() {
    return Err(err(path, format!("expected an integer, got {q}")));
  }
  Ok(q.to_integer())
}

fn usize_field(obj: &Map<String, Value>, key: &str, path: &str) -> Result<usize> {
  let p = format!("{path}.{key}");
  field(obj, key, path)?.as_u64().map(|x| x as usize).ok_or_else(|| err(&p, "expected a nonnegative integer"))
}

fn int_row(v: &Value, len: usize, path: &str) -> Result<IntVector> {
  let a = array(v, path)?;
  if a.len() != len {
    return Err(err(path, format!("expected {len} entries, got {}", a.len())));
  }
  a.iter().enumerate().map(|(i, x)| integer(x, &format!("{path}[{i}]"))).collect()
}

fn rational_value(q: &Rational) -> Value {
  if q.is_integer() {
    integer_value(&q.to_integer())
  } else {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
  }
}

fn integer_value(x: &Integer) -> Value {
  match i64::try_from(x) {
    Ok(i) => json!(i),
    Err(_) => Value::String(x.to_string()),
  }
}

/// A row `[a_1, ..., a_n, b]` meaning `a·x ≥ b` (or `= b`).
fn halfspace(v: &Value, n: usize, path: &str) -> Result<AffineForm> {
  let a = array(v, path)?;
  if a.len() != n + 1 {
    return Err(err(path, format!("expected {} entries (coefficients and bound), got {}", n + 1, a.len())));
  }
  let linear = a[..n].iter().enumerate().map(|(i, x)| integer(x, &format!("{path}[{i}]"))).collect::<Result<_>>()?;
  let b = rational(&a[n], &format!("{path}[{n}]"))?;
  Ok(AffineForm::new(linear, -b))
}

fn halfspace_value(f: &AffineForm) -> Value {
  let mut row: Vec<Value> = f.linear.iter().map(integer_value).collect();
  row.push(rational_value(&-f.constant.clone()));
  Value::Array(row)
}

pub(crate) fn cell_from_value(v: &Value, n: usize, path: &str) -> Result<Cell> {
  let obj = object(v, path)?;
  let rows = |key: &str| -> Result<Vec<AffineForm>> {
    match obj.get(key) {
      None => Ok(Vec::new()),
      Some(v) => {
        let p = format!("{path}.{key}");
        array(v, &p)?.iter().enumerate().map(|(i, r)| halfspace(r, n, &format!("{p}[{i}]"))).collect()
      }
    }
  };
  Cell::new(n, &rows("ineqs")?, &rows("eqs")?).map_err(|e| err(path, e))
}

pub(crate) fn cell_value(c: &Cell) -> Value {
  json!({
    "ineqs": c.inequalities().iter().map(halfspace_value).collect::<Vec<_>>(),
    "eqs": c.equalities().iter().map(halfspace_value).collect::<Vec<_>>(),
  })
}

fn form_from_value(v: &Value, n: usize, path: &str) -> Result<AffineForm> {
  let obj = object(v, path)?;
  let linear = int_row(field(obj, "linear", path)?, n, &format!("{path}.linear"))?;
  let constant = match obj.get("constant") {
    Some(c) => rational(c, &format!("{path}.constant"))?,
    None => Rational::from_integer(0.into()),
  };
  Ok(AffineForm::new(linear, constant))
}

fn form_value(f: &AffineForm) -> Value {
  json!({ "linear": f.linear.iter().map(integer_value).collect::<Vec<_>>(), "constant": rational_value(&f.constant) })
}

/// Cells with weights, without the balancing check.
pub fn complex_from_value(v: &Value) -> Result<WeightedComplex> {
  let obj = object(v, "$")?;
  let n = usize_field(obj, "ambient_dim", "$")?;
  let cells_v = array(field(obj, "cells", "$")?, "$.cells")?;
  let mut cells = Vec::new();
  for (i, c) in cells_v.iter().enumerate() {
    let p = format!("$.cells[{i}]");
    let cell = cell_from_value(c, n, &p)?;
    let w = match object(c, &p)?.get("weight") {
      Some(w) => integer(w, &format!("{p}.weight"))?,
      None => Integer::from(1),
    };
    cells.push((cell, w));
  }
  let dim = match obj.get("dim") {
    Some(_) => usize_field(obj, "dim", "$")?,
    None => cells.first().map(|(c, _)| c.dim()).ok_or_else(|| err("$", "an empty cycle needs \"dim\""))?,
  };
  Ok(WeightedComplex::new(n, dim, cells))
}

pub fn complex_value(c: &WeightedComplex) -> Value {
  let cells: Vec<Value> = c
    .cells()
    .iter()
    .map(|(cell, w)| {
      let mut v = cell_value(cell);
      v.as_object_mut().expect("object").insert("weight".into(), integer_value(w));
      v
    })
    .collect();
  json!({
    "kind": "cycle",
    "format_version": FORMAT_VERSION,
    "ambient_dim": c.ambient_dim(),
    "dim": c.dim(),
    "cells": cells,
  })
}

fn function_from_value(v: &Value, path: &str, n_hint: Option<usize>) -> Result<PLFunction> {
  let obj = object(v, path)?;
  let ty = field(obj, "type", path)?.as_str().ok_or_else(|| err(&format!("{path}.type"), "expected a string"))?;
  let n = match obj.get("ambient_dim") {
    Some(_) => usize_field(obj, "ambient_dim", path)?,
    None => match (ty, n_hint) {
      (_, Some(n)) => n,
      ("max_affine", None) => {
        let terms = array(field(obj, "terms", path)?, &format!("{path}.terms"))?;
        let first = terms.first().ok_or_else(|| err(&format!("{path}.terms"), "no terms"))?;
        let lin = field(object(first, &format!("{path}.terms[0]"))?, "linear", &format!("{path}.terms[0]"))?;
        array(lin, &format!("{path}.terms[0].linear"))?.len()
      }
      _ => return Err(err(path, "missing field \"ambient_dim\"")),
    },
  };
  match ty {
    "max_affine" => {
      let p = format!("{path}.terms");
      let terms = array(field(obj, "terms", path)?, &p)?
        .iter()
        .enumerate()
        .map(|(i, t)| form_from_value(t, n, &format!("{p}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
      PLFunction::max_of(terms).map_err(|e| err(&p, e))
    }
    "piecewise" => {
      let p = format!("{path}.pieces");
      let mut pieces = Vec::new();
      for (i, piece) in array(field(obj, "pieces", path)?, &p)?.iter().enumerate() {
        let pp = format!("{p}[{i}]");
        let po = object(piece, &pp)?;
        let cell = cell_from_value(field(po, "cell", &pp)?, n, &format!("{pp}.cell"))?;
        let form = form_from_value(field(po, "form", &pp)?, n, &format!("{pp}.form"))?;
        pieces.push((cell, form));
      }
      Ok(PLFunction::Piecewise(PiecewiseFunction::new(n, pieces).map_err(|e| err(&p, e))?))
    }
    "sum" => {
      let p = format!("{path}.parts");
      let mut parts = Vec::new();
      for (i, part) in array(field(obj, "parts", path)?, &p)?.iter().enumerate() {
        let pp = format!("{p}[{i}]");
        let po = object(part, &pp)?;
        let k = integer(field(po, "coefficient", &pp)?, &format!("{pp}.coefficient"))?;
        let f = function_from_value(field(po, "function", &pp)?, &format!("{pp}.function"), Some(n))?;
        if f.ambient_dim() != n {
          return Err(err(&pp, format!("summand lives on R^{}", f.ambient_dim())));
        }
        parts.push((k, f));
      }
      Ok(PLFunction::Sum(parts))
    }
    other => Err(err(&format!("{path}.type"), format!("unknown function type {other:?}"))),
  }
}

fn function_body(f: &PLFunction) -> Value {
  match f {
    PLFunction::Polynomial(p) => json!({
      "type": "max_affine",
      "ambient_dim": p.ambient_dim(),
      "terms": p.terms().iter().map(form_value).collect::<Vec<_>>(),
    }),
    PLFunction::Piecewise(p) => json!({
      "type": "piecewise",
      "ambient_dim": p.ambient_dim(),
      "pieces": p.pieces().iter().map(|(c, f)| json!({"cell": cell_value(c), "form": form_value(f)})).collect::<Vec<_>>(),
    }),
    PLFunction::Sum(parts) => json!({
      "type": "sum",
      "ambient_dim": f.ambient_dim(),
      "parts": parts.iter().map(|(k, g)| json!({"coefficient": integer_value(k), "function": function_body(g)})).collect::<Vec<_>>(),
    }),
  }
}

pub fn function_value(f: &PLFunction) -> Value {
  let mut v = function_body(f);
  let obj = v.as_object_mut().expect("object");
  obj.insert("kind".into(), json!("function"));
  obj.insert("format_version".into(), json!(FORMAT_VERSION));
  v
}

fn map_from_value(v: &Value) -> Result<IntegerLinearMap> {
  let obj = object(v, "$")?;
  let rows = array(field(obj, "matrix", "$")?, "$.matrix")?;
  let cols = match rows.first() {
    Some(r) => array(r, "$.matrix[0]")?.len(),
    None => usize_field(obj, "source_dim", "$")?,
  };
  let rows: Vec<IntVector> =
    rows.iter().enumerate().map(|(i, r)| int_row(r, cols, &format!("$.matrix[{i}]"))).collect::<Result<_>>()?;
  Ok(IntegerLinearMap::new(IntMatrix::from_rows(&rows, cols)))
}

pub fn map_value(f: &IntegerLinearMap) -> Value {
  let m = f.matrix();
  let rows: Vec<Value> = (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(integer_value).collect())).collect();
  json!({ "kind": "map", "format_version": FORMAT_VERSION, "source_dim": m.cols(), "matrix": rows })
}

fn check_header(obj: &Map<String, Value>) -> Result<&str> {
  if let Some(v) = obj.get("format_version") {
    let s = v.as_str().ok_or_else(|| err("$.format_version", "expected a string"))?;
    if s != FORMAT_VERSION {
      return Err(err("$.format_version", format!("unsupported version {s:?}")));
    }
  }
  field(obj, "kind", "$")?.as_str().ok_or_else(|| err("$.kind", "expected a string"))
}

pub fn value_to_document(v: &Value) -> Result<Document> {
  let obj = object(v, "$")?;
  match check_header(obj)? {
    "cycle" => {
      let c = complex_from_value(v)?;
      Ok(Document::Cycle(Cycle::new(c).map_err(|e| err("$.cells", e))?))
    }
    "function" => Ok(Document::Function(function_from_value(v, "$", None)?)),
    "map" => Ok(Document::Map(map_from_value(v)?)),
    other => Err(err("$.kind", format!("unknown kind {other:?}"))),
  }
}

pub fn document_value(d: &Document) -> Value {
  match d {
    Document::Cycle(c) => complex_value(c.complex()),
    Document::Function(f) => function_value(f),
    Document::Map(m) => map_value(m),
  }
}

pub fn parse_value(text: &str) -> Result<Value> {
  serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

/// Reads a cycle document without checking balancing.
pub fn parse_complex(text: &str) -> Result<WeightedComplex> {
  let v = parse_value(text)?;
  let obj = object(&v, "$")?;
  match check_header(obj)? {
    "cycle" => complex_from_value(&v),
    other => Err(err("$.kind", format!("expected a cycle, got {other:?}"))),
  }
}
