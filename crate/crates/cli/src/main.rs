//! `tropint`: batch front end for tropical-core.
//!
//! Every object argument is a file path, `-` for standard input, or a
//! built-in name such as `Lnk:2:1` or `rigid-surface`.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use tropical_core::cycles::{is_balanced, validate_complex, BalanceReport, Cycle, WeightedComplex};
use tropical_core::divisors::{divisor_chain, weil_divisor, CartierDivisor, PLFunction};
use tropical_core::io::{self, render_svg, BoundingBox, Document};
use tropical_core::kernel::Rational;
use tropical_core::morphisms::IntegerLinearMap;
use tropical_core::products::{bezout_check, degree, stable_intersect, BezoutStatus};
use tropical_core::{library, Error};

#[derive(Parser)]
#[command(name = "tropint", version, about = "Exact tropical intersection theory in R^n")]
struct Cli {
  /// Report failures as a JSON object on stderr.
  #[arg(long, global = true)]
  json: bool,
  /// Write the result here instead of stdout.
  #[arg(short, long, global = true, value_name = "OUT")]
  output: Option<PathBuf>,
  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand)]
enum Command {
  /// Check that a weighted complex is a balanced cycle.
  Validate { cycle: String },
  /// Weil divisor of a function on a cycle.
  Divisor { function: String, cycle: String },
  /// Apply several divisors in turn, the last function first.
  Chain {
    #[arg(required = true, num_args = 2..)]
    args: Vec<String>,
  },
  /// Intersection product of two cycles in the same R^n.
  Intersect { a: String, b: String },
  /// Push a cycle forward along a map.
  Pushforward { map: String, cycle: String },
  /// Pull a function back along a map.
  Pullback { map: String, function: String },
  /// Degree of a cycle; reads standard input when no argument is given.
  Degree {
    #[arg(default_value = "-")]
    cycle: String,
  },
  /// Print deg A, deg B, deg(A·B) and the Bézout verdict.
  Bezout { a: String, b: String },
  /// Emit a built-in object.
  Example { name: String },
  /// Draw a plane curve as SVG.
  Render {
    cycle: String,
    /// Window as x0,y0,x1,y1.
    #[arg(long, value_name = "x0,y0,x1,y1", allow_hyphen_values = true)]
    bbox: Option<String>,
  },
}

/// A failed run: exit code, machine-readable kind, message and extra fields.
struct Failure {
  code: u8,
  kind: &'static str,
  message: String,
  details: serde_json::Value,
}

impl Failure {
  fn usage(message: impl Into<String>) -> Self {
    Failure { code: 2, kind: "usage", message: message.into(), details: json!({}) }
  }
}

impl From<Error> for Failure {
  fn from(e: Error) -> Self {
    let (code, kind) = match &e {
      Error::Parse(_) => (2, "parse"),
      Error::DimensionMismatch(_) => (2, "dimension_mismatch"),
      Error::TooManyDivisors { .. } => (2, "too_many_divisors"),
      Error::Unbalanced(_) => (1, "unbalanced"),
      Error::InvalidComplex(_) => (1, "invalid_complex"),
      Error::Discontinuous(_) => (1, "discontinuous"),
      Error::NotIntegral(_) => (1, "not_integral"),
      Error::HypothesisViolated(_) => (1, "hypothesis_violated"),
      Error::NotAMorphism => (1, "not_a_morphism"),
      Error::FunctionUndefined => (1, "function_undefined"),
      _ => (1, "internal"),
    };
    Failure { code, kind, message: e.to_string(), details: json!({}) }
  }
}

type Outcome = std::result::Result<String, Failure>;

fn read_text(arg: &str) -> std::result::Result<Option<String>, Failure> {
  if arg == "-" {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
    return Ok(Some(s));
  }
  if Path::new(arg).is_file() {
    return std::fs::read_to_string(arg).map(Some).map_err(|e| Failure::usage(format!("{arg}: {e}")));
  }
  Ok(None)
}

fn load(arg: &str) -> std::result::Result<Document, Failure> {
  match read_text(arg)? {
    Some(text) => io::parse(&text).map_err(|e| with_source(e, arg)),
    None => library::lookup(arg)
      .map_err(|_| Failure::usage(format!("{arg:?} is neither a readable file nor a built-in name"))),
  }
}

fn with_source(e: Error, arg: &str) -> Failure {
  let mut f = Failure::from(e);
  f.message = format!("{arg}: {}", f.message);
  f
}

fn wrong_kind(arg: &str, want: &str, got: &Document) -> Failure {
  Failure::usage(format!("{arg}: expected a {want}, got a {}", got.kind()))
}

fn cycle(arg: &str) -> std::result::Result<Cycle, Failure> {
  match load(arg)? {
    Document::Cycle(c) => Ok(c),
    d => Err(wrong_kind(arg, "cycle", &d)),
  }
}

fn function(arg: &str) -> std::result::Result<PLFunction, Failure> {
  match load(arg)? {
    Document::Function(f) => Ok(f),
    d => Err(wrong_kind(arg, "function", &d)),
  }
}

fn map(arg: &str) -> std::result::Result<IntegerLinearMap, Failure> {
  match load(arg)? {
    Document::Map(m) => Ok(m),
    d => Err(wrong_kind(arg, "map", &d)),
  }
}

fn complex(arg: &str) -> std::result::Result<WeightedComplex, Failure> {
  match read_text(arg)? {
    Some(text) => io::parse_complex(&text).map_err(|e| with_source(e, arg)),
    None => match library::lookup(arg) {
      Ok(Document::Cycle(c)) => Ok(c.into_complex()),
      Ok(d) => Err(wrong_kind(arg, "cycle", &d)),
      Err(_) => Err(Failure::usage(format!("{arg:?} is neither a readable file nor a built-in name"))),
    },
  }
}

fn validate(arg: &str) -> Outcome {
  let c = complex(arg)?;
  let violations = validate_complex(&c);
  if !violations.is_empty() {
    let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    return Err(Failure {
      code: 1,
      kind: "invalid_complex",
      message: list.join("; "),
      details: json!({ "violations": list }),
    });
  }
  match is_balanced(&c) {
    BalanceReport::Balanced => {
      Ok(format!("balanced: {} cells of dimension {} in R^{}\n", c.len(), c.dim(), c.ambient_dim()))
    }
    BalanceReport::Unbalanced { ridge, sum } => {
      let sum: Vec<String> = sum.iter().map(|x| x.to_string()).collect();
      Err(Failure {
        code: 1,
        kind: "unbalanced",
        message: format!(
          "unbalanced at ridge {ridge}: weighted normal sum ({}) is not parallel to the ridge",
          sum.join(", ")
        ),
        details: json!({ "ridge": ridge.to_string(), "sum": sum }),
      })
    }
  }
}

fn parse_bbox(s: &str) -> std::result::Result<BoundingBox, Failure> {
  let parts: Vec<Rational> = s
    .split(',')
    .map(|p| p.trim().parse::<Rational>().map_err(|_| Failure::usage(format!("bad --bbox entry {p:?}"))))
    .collect::<std::result::Result<_, _>>()?;
  let [x0, y0, x1, y1] =
    <[Rational; 4]>::try_from(parts).map_err(|_| Failure::usage("--bbox needs four numbers x0,y0,x1,y1"))?;
  Ok(BoundingBox { x0, y0, x1, y1 })
}

fn doc(d: Document) -> String {
  io::serialize(&d)
}

fn run(cli: &Cli) -> Outcome {
  match &cli.command {
    Command::Validate { cycle } => validate(cycle),
    Command::Divisor { function: f, cycle: c } => {
      Ok(doc(Document::Cycle(weil_divisor(&CartierDivisor::from(function(f)?), &cycle(c)?)?)))
    }
    Command::Chain { args } => {
      let (c, fs) = args.split_last().expect("clap requires arguments");
      let phis =
        fs.iter().map(|f| function(f).map(CartierDivisor::from)).collect::<std::result::Result<Vec<_>, _>>()?;
      Ok(doc(Document::Cycle(divisor_chain(&phis, &cycle(c)?)?)))
    }
    Command::Intersect { a, b } => Ok(doc(Document::Cycle(stable_intersect(&cycle(a)?, &cycle(b)?)?))),
    Command::Pushforward { map: m, cycle: c } => Ok(doc(Document::Cycle(map(m)?.push_forward(&cycle(c)?)?))),
    Command::Pullback { map: m, function: f } => {
      let phi = map(m)?.pull_back(&CartierDivisor::from(function(f)?))?;
      Ok(doc(Document::Function(phi.representative)))
    }
    Command::Degree { cycle: c } => Ok(format!("{}\n", degree(&cycle(c)?)?)),
    Command::Bezout { a, b } => {
      let r = bezout_check(&cycle(a)?, &cycle(b)?)?;
      let line = format!("{} {} {} {}\n", r.degree_c, r.degree_d, r.degree_product, r.status);
      if r.status == BezoutStatus::Fail {
        return Err(Failure {
          code: 1,
          kind: "bezout_fail",
          message: line.trim_end().to_string(),
          details: json!({
            "degree_a": r.degree_c.to_string(),
            "degree_b": r.degree_d.to_string(),
            "degree_product": r.degree_product.to_string(),
          }),
        });
      }
      Ok(line)
    }
    Command::Example { name } => Ok(doc(library::lookup(name).map_err(|e| Failure { code: 2, ..Failure::from(e) })?)),
    Command::Render { cycle: c, bbox } => {
      let bbox = match bbox {
        Some(s) => parse_bbox(s)?,
        None => BoundingBox::default(),
      };
      Ok(render_svg(&cycle(c)?, &bbox)?)
    }
  }
}

fn main() -> ExitCode {
  let cli = Cli::parse();
  match run(&cli) {
    Ok(text) => {
      let written = match &cli.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().write_all(text.as_bytes()),
      };
      match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&cli, Failure::usage(format!("writing output: {e}"))),
      }
    }
    Err(f) => report(&cli, f),
  }
}

fn report(cli: &Cli, f: Failure) -> ExitCode {
  if cli.json {
    let mut v = json!({ "error": f.kind, "message": f.message, "exit_code": f.code });
    if let (Some(obj), serde_json::Value::Object(extra)) = (v.as_object_mut(), f.details) {
      obj.extend(extra);
    }
    eprintln!("{v}");
  } else {
    eprintln!("tropint: {}", f.message);
  }
  ExitCode::from(f.code)
}
