//! JSON documents for cycles, functions and maps, and SVG drawings of plane
//! curves.
//!
//! Every document is an object with `"kind"` (`"cycle"`, `"function"` or
//! `"map"`) and `"format_version"`. Numbers are exact: integers are JSON
//! integers or decimal strings, rationals are strings `"p/q"`. Decimal
//! literals such as `0.5` are rejected.
//!
//! Cells are `{"ineqs": [[a_1, ..., a_n, b], ...], "eqs": [...]}` meaning
//! `a·x ≥ b` and `a·x = b`. A cycle is
//! `{"ambient_dim": n, "dim": k, "cells": [{..cell.., "weight": w}]}`.
//! Functions have `"type"` one of `"max_affine"` (`"terms"`: affine forms
//! `{"linear": [...], "constant": c}`), `"piecewise"` (`"pieces"`: `{"cell",
//! "form"}`) or `"sum"` (`"parts"`: `{"coefficient", "function"}`). A map is
//! `{"matrix": [[...], ...]}`.

mod json;
mod svg;

pub use json::{complex_value, document_value, parse_complex, value_to_document, FORMAT_VERSION};
pub use svg::{render_svg, BoundingBox};

use crate::cycles::Cycle;
use crate::divisors::PLFunction;
use crate::error::Result;
use crate::morphisms::IntegerLinearMap;

/// One parsed object.
#[derive(Clone, Debug)]
pub enum Document {
  Cycle(Cycle),
  Function(PLFunction),
  Map(IntegerLinearMap),
}

impl Document {
  pub fn kind(&self) -> &'static str {
    match self {
      Document::Cycle(_) => "cycle",
      Document::Function(_) => "function",
      Document::Map(_) => "map",
    }
  }
}

pub fn parse(text: &str) -> Result<Document> {
  value_to_document(&json::parse_value(text)?)
}

/// Indented JSON with a trailing newline; arrays of numbers stay on one
/// line. Cells appear in canonical order, so equal inputs give identical
/// bytes.
pub fn serialize(d: &Document) -> String {
  let mut s = String::new();
  write_value(&mut s, &document_value(d), 0);
  s.push('\n');
  s
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
  use serde_json::Value;
  let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
  match v {
    Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => out.push_str(&v.to_string()),
    Value::Array(a) => {
      out.push_str("[\n");
      for (i, x) in a.iter().enumerate() {
        pad(out, depth + 1);
        write_value(out, x, depth + 1);
        out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
      }
      pad(out, depth);
      out.push(']');
    }
    Value::Object(m) if m.is_empty() => out.push_str("{}"),
    Value::Object(m) => {
      out.push_str("{\n");
      for (i, (k, x)) in m.iter().enumerate() {
        pad(out, depth + 1);
        out.push_str(&Value::String(k.clone()).to_string());
        out.push_str(": ");
        write_value(out, x, depth + 1);
        out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
      }
      pad(out, depth);
      out.push('}');
    }
    _ => out.push_str(&v.to_string()),
  }
}
