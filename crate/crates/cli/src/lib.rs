//! The `riordan` command-line tool.
//!
//! Every expression flag takes the grammar of [`riordan_core::expr`]. Results
//! go to stdout in the selected [`Format`]; diagnostics go to stderr.
//!
//! Exit codes: 0 success (or equal under `verify`), 1 verified unequal,
//! 2 usage or parse error, 3 domain error in the mathematics.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riordan_core::expr::{self, ExprError};
use riordan_core::{central, CentralPair, ExpCentralPair, ExpRiordanPair, Rat, RiordanPair, Series};
use serde_json::{json, Value};
use thiserror::Error;

pub mod output;
pub mod verify;

pub use output::{Format, Kind, OutputDoc};

pub const DEFAULT_ORDER: usize = 16;
pub const DEFAULT_ROWS: usize = 12;

/// Extra working order so that conversions, which may consume a few
/// orders, still deliver the requested number of coefficients.
const SLACK: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--{flag}: {source}")]
    Expr { flag: String, source: ExprError },
    #[error("{0}")]
    Spec(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(#[from] riordan_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Expr { source: ExprError::Domain { .. } | ExprError::Precision { .. }, .. } => 3,
            CliError::Expr { .. } | CliError::Spec(_) | CliError::Usage(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "riordan", version, about = "Exact Riordan arrays in classical and central form")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an expression as a power series.
    Series {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Classical arrays (u, v) with entries [x^n] u v^k.
    #[command(subcommand)]
    Riordan(RiordanCmd),
    /// Central arrays {g, f} with entries [x^(n-k)] g f^n.
    #[command(subcommand)]
    Central(CentralCmd),
    /// Exponential arrays.
    #[command(subcommand)]
    Exp(ExpCmd),
    /// Compare two matrix specifications entry by entry.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, default_value_t = DEFAULT_ROWS)]
        rows: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Uv {
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    #[arg(long, allow_hyphen_values = true)]
    pub v: String,
}

#[derive(Debug, Clone, Args)]
pub struct Gf {
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
}

#[derive(Debug, Clone, Args)]
pub struct Shape {
    /// Number of coefficients (minus one) in pair output.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Print the triangle with this many rows instead of the pair.
    #[arg(long)]
    pub rows: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Vertical,
    Horizontal,
}

#[derive(Debug, Subcommand)]
pub enum RiordanCmd {
    /// Print the triangle.
    Matrix {
        #[command(flatten)]
        uv: Uv,
        #[arg(long, default_value_t = DEFAULT_ROWS)]
        rows: usize,
    },
    /// Group product (u1, v1)(u2, v2).
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        u1: String,
        #[arg(long, allow_hyphen_values = true)]
        v1: String,
        #[arg(long, allow_hyphen_values = true)]
        u2: String,
        #[arg(long, allow_hyphen_values = true)]
        v2: String,
        #[command(flatten)]
        shape: Shape,
    },
    /// Group inverse.
    Inv {
        #[command(flatten)]
        uv: Uv,
        #[command(flatten)]
        shape: Shape,
    },
    /// A- and Z-sequences.
    Az {
        #[command(flatten)]
        uv: Uv,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Vertical or horizontal half, from its closed-form pair.
    Halves {
        #[command(flatten)]
        uv: Uv,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_ROWS)]
        rows: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CentralCmd {
    /// Print the triangle.
    Matrix {
        #[command(flatten)]
        gf: Gf,
        #[arg(long, default_value_t = DEFAULT_ROWS)]
        rows: usize,
    },
    /// Central pair {g, f} of a classical pair (u, v).
    FromStandard {
        #[command(flatten)]
        uv: Uv,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Classical pair (u, v) of a central pair {g, f}.
    ToStandard {
        #[command(flatten)]
        gf: Gf,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Group product {g1, f1}{g2, f2}.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        f1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long, allow_hyphen_values = true)]
        f2: String,
        #[command(flatten)]
        shape: Shape,
    },
    /// Group inverse.
    Inv {
        #[command(flatten)]
        gf: Gf,
        #[command(flatten)]
        shape: Shape,
    },
    /// Classical pair whose vertical half is the inverse of {g, f}.
    Antecedent {
        #[command(flatten)]
        gf: Gf,
        #[command(flatten)]
        shape: Shape,
    },
    /// Moments [x^n] (1 - b x^2) / (1 - s x - t x^2) (1 + a x + b x^2)^n.
    Moments {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExpCmd {
    /// Print [u, v] (with --u/--v) or {g, f}_e (with --g/--f).
    Matrix {
        #[arg(long, allow_hyphen_values = true, requires = "v", conflicts_with_all = ["g", "f"])]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "u")]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "f")]
        g: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "g", conflicts_with_all = ["u", "v"])]
        f: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ROWS)]
        rows: usize,
    },
}

fn series(flag: &str, text: &str, order: usize) -> Result<Series, CliError> {
    expr::eval_str(text, order).map_err(|source| CliError::Expr { flag: flag.to_string(), source })
}

fn constant(flag: &str, text: &str) -> Result<Rat, CliError> {
    let s = series(flag, text, 2)?;
    if s.coeffs()[1..].iter().any(|c| *c != Rat::from_integer(0.into())) {
        return Err(CliError::Usage(format!("--{flag}: expected a constant, got `{text}`")));
    }
    Ok(s.coeffs()[0].clone())
}

fn cut(s: &Series, order: usize) -> Result<Series, CliError> {
    Ok(s.truncate(order.min(s.order()))?)
}

fn inputs(pairs: &[(&str, &str)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn riordan_pair(uv: &Uv, order: usize) -> Result<RiordanPair, CliError> {
    Ok(RiordanPair::new(series("u", &uv.u, order)?, series("v", &uv.v, order)?)?)
}

fn central_pair(gf: &Gf, order: usize) -> Result<CentralPair, CliError> {
    Ok(CentralPair::new(series("g", &gf.g, order)?, series("f", &gf.f, order)?)?)
}

fn working_order(shape: &Shape) -> usize {
    shape.order.max(shape.rows.unwrap_or(0)) + SLACK
}

fn standard_doc(p: &RiordanPair, shape: &Shape) -> Result<OutputDoc, CliError> {
    Ok(match shape.rows {
        Some(rows) => OutputDoc::triangle(&p.triangle(rows)?).with("rows", rows),
        None => OutputDoc::pair(["u", "v"], &cut(p.u(), shape.order)?, &cut(p.v(), shape.order)?)
            .with("order", shape.order),
    })
}

fn central_doc(c: &CentralPair, shape: &Shape) -> Result<OutputDoc, CliError> {
    Ok(match shape.rows {
        Some(rows) => OutputDoc::triangle(&c.triangle(rows)?).with("rows", rows),
        None => OutputDoc::pair(["g", "f"], &cut(c.g(), shape.order)?, &cut(c.f(), shape.order)?)
            .with("order", shape.order),
    })
}

/// Runs a parsed command. `Ok` carries the document and the exit code.
pub fn execute(command: &Command) -> Result<(OutputDoc, i32), CliError> {
    let doc = match command {
        Command::Series { expr, order } => {
            OutputDoc::series(&series("expr", expr, *order)?)
                .with("command", "series")
                .with("order", *order)
                .with("inputs", inputs(&[("expr", expr)]))
        }
        Command::Riordan(cmd) => riordan(cmd)?,
        Command::Central(cmd) => central_cmd(cmd)?,
        Command::Exp(cmd) => exp(cmd)?,
        Command::Verify { lhs, rhs, rows } => return verify_cmd(lhs, rhs, *rows),
    };
    Ok((doc, 0))
}

fn riordan(cmd: &RiordanCmd) -> Result<OutputDoc, CliError> {
    Ok(match cmd {
        RiordanCmd::Matrix { uv, rows } => {
            let p = riordan_pair(uv, rows + 1)?;
            OutputDoc::triangle(&p.triangle(*rows)?)
                .with("command", "riordan matrix")
                .with("rows", *rows)
                .with("inputs", inputs(&[("u", &uv.u), ("v", &uv.v)]))
        }
        RiordanCmd::Mul { u1, v1, u2, v2, shape } => {
            let order = working_order(shape);
            let a = RiordanPair::new(series("u1", u1, order)?, series("v1", v1, order)?)?;
            let b = RiordanPair::new(series("u2", u2, order)?, series("v2", v2, order)?)?;
            standard_doc(&a.mul(&b)?, shape)?
                .with("command", "riordan mul")
                .with("inputs", inputs(&[("u1", u1), ("v1", v1), ("u2", u2), ("v2", v2)]))
        }
        RiordanCmd::Inv { uv, shape } => {
            let p = riordan_pair(uv, working_order(shape))?;
            standard_doc(&p.inverse()?, shape)?
                .with("command", "riordan inv")
                .with("inputs", inputs(&[("u", &uv.u), ("v", &uv.v)]))
        }
        RiordanCmd::Az { uv, order } => {
            let p = riordan_pair(uv, order + SLACK)?;
            let az = p.az()?;
            OutputDoc::pair(["A", "Z"], &cut(&az.a, *order)?, &cut(&az.z, *order)?)
                .with("command", "riordan az")
                .with("order", *order)
                .with("inputs", inputs(&[("u", &uv.u), ("v", &uv.v)]))
        }
        RiordanCmd::Halves { uv, which, rows } => {
            let p = riordan_pair(uv, 2 * rows + SLACK)?;
            let h = p.halves()?;
            let (pair, name) = match which {
                Which::Vertical => (h.vertical, "vertical"),
                Which::Horizontal => (h.horizontal, "horizontal"),
            };
            OutputDoc::triangle(&pair.triangle(*rows)?)
                .with("command", "riordan halves")
                .with("which", name)
                .with("rows", *rows)
                .with("inputs", inputs(&[("u", &uv.u), ("v", &uv.v)]))
        }
    })
}

fn central_cmd(cmd: &CentralCmd) -> Result<OutputDoc, CliError> {
    Ok(match cmd {
        CentralCmd::Matrix { gf, rows } => {
            let c = central_pair(gf, rows + 1)?;
            OutputDoc::triangle(&c.triangle(*rows)?)
                .with("command", "central matrix")
                .with("rows", *rows)
                .with("inputs", inputs(&[("g", &gf.g), ("f", &gf.f)]))
        }
        CentralCmd::FromStandard { uv, order } => {
            let c = CentralPair::from_standard(&riordan_pair(uv, order + SLACK)?)?;
            central_doc(&c, &Shape { order: *order, rows: None })?
                .with("command", "central from-standard")
                .with("inputs", inputs(&[("u", &uv.u), ("v", &uv.v)]))
        }
        CentralCmd::ToStandard { gf, order } => {
            let p = central_pair(gf, order + SLACK)?.to_standard()?;
            standard_doc(&p, &Shape { order: *order, rows: None })?
                .with("command", "central to-standard")
                .with("inputs", inputs(&[("g", &gf.g), ("f", &gf.f)]))
        }
        CentralCmd::Mul { g1, f1, g2, f2, shape } => {
            let order = working_order(shape);
            let a = CentralPair::new(series("g1", g1, order)?, series("f1", f1, order)?)?;
            let b = CentralPair::new(series("g2", g2, order)?, series("f2", f2, order)?)?;
            central_doc(&a.mul(&b)?, shape)?
                .with("command", "central mul")
                .with("inputs", inputs(&[("g1", g1), ("f1", f1), ("g2", g2), ("f2", f2)]))
        }
        CentralCmd::Inv { gf, shape } => {
            let c = central_pair(gf, working_order(shape))?;
            central_doc(&c.inverse()?, shape)?
                .with("command", "central inv")
                .with("inputs", inputs(&[("g", &gf.g), ("f", &gf.f)]))
        }
        CentralCmd::Antecedent { gf, shape } => {
            let order = working_order(shape).max(2 * shape.rows.unwrap_or(0) + SLACK);
            let p = central_pair(gf, order)?.vertical_antecedent()?;
            standard_doc(&p, shape)?
                .with("command", "central antecedent")
                .with("inputs", inputs(&[("g", &gf.g), ("f", &gf.f)]))
        }
        CentralCmd::Moments { s, t, a, b, order } => {
            let m = central::chebyshev_moments(&constant("s", s)?, &constant("t", t)?, &constant("a", a)?, &constant("b", b)?, *order);
            OutputDoc::series(&m)
                .with("command", "central moments")
                .with("order", *order)
                .with("inputs", inputs(&[("s", s), ("t", t), ("a", a), ("b", b)]))
        }
    })
}

fn exp(cmd: &ExpCmd) -> Result<OutputDoc, CliError> {
    let ExpCmd::Matrix { u, v, g, f, rows } = cmd;
    let order = rows + 1;
    let (t, named) = match (u, v, g, f) {
        (Some(u), Some(v), None, None) => {
            let p = ExpRiordanPair::new(series("u", u, order)?, series("v", v, order)?)?;
            (p.triangle(*rows)?, inputs(&[("u", u), ("v", v)]))
        }
        (None, None, Some(g), Some(f)) => {
            let c = ExpCentralPair::new(series("g", g, order)?, series("f", f, order)?)?;
            (c.triangle(*rows)?, inputs(&[("g", g), ("f", f)]))
        }
        _ => return Err(CliError::Usage("exp matrix needs either --u and --v or --g and --f".into())),
    };
    Ok(OutputDoc::triangle(&t).with("command", "exp matrix").with("rows", *rows).with("inputs", named))
}

fn verify_cmd(lhs: &str, rhs: &str, rows: usize) -> Result<(OutputDoc, i32), CliError> {
    let left = verify::build(&verify::parse_spec(lhs)?, "lhs", rows)?;
    let right = verify::build(&verify::parse_spec(rhs)?, "rhs", rows)?;
    let mismatch = left.first_mismatch(&right);
    let mut doc = OutputDoc::boolean(mismatch.is_none())
        .with("command", "verify")
        .with("rows", rows)
        .with("inputs", inputs(&[("lhs", lhs), ("rhs", rhs)]));
    let code = match mismatch {
        None => 0,
        Some(m) => {
            doc = doc.with(
                "mismatch",
                json!({ "n": m.n, "k": m.k, "lhs": output::rat(&m.left), "rhs": output::rat(&m.right) }),
            );
            1
        }
    };
    Ok((doc, code))
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((doc, code)) => {
            let _ = out.write_all(doc.render(cli.format).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
