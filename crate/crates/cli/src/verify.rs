//! Matrix specifications for `verify`.
//!
//! ```text
//! spec   := 'inv(' spec ')' | 'vhalf(' spec ')' | 'hhalf(' spec ')'
//!         | 'mul(' spec ';' spec ')' | family ':' pair
//! family := riordan | central | expriordan | expcentral
//! pair   := expr ',' expr | '{' expr ',' expr '}' | '(' expr ',' expr ')'
//! ```
//!
//! Pairs are combined with the group law of their family where one exists
//! (central and ordinary pairs mix through `to_standard`); anything else
//! falls back to exact matrix arithmetic on triangles.

use riordan_core::expr::{self, ExprError};
use riordan_core::{CentralPair, ExpCentralPair, ExpRiordanPair, RiordanPair, Series, Triangle};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Riordan,
    Central,
    ExpRiordan,
    ExpCentral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Leaf { family: Family, first: String, second: String },
    Inv(Box<Spec>),
    Mul(Box<Spec>, Box<Spec>),
    VHalf(Box<Spec>),
    HHalf(Box<Spec>),
}

fn spec_error(text: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Spec(format!("in matrix spec `{text}`: {msg}"))
}

/// Index of the first depth-0 occurrence of any of `stops`, or the end.
fn scan_depth0(s: &str, stops: &[char]) -> Result<usize, String> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => {
                if depth == 0 && stops.contains(&c) {
                    return Ok(i);
                }
                depth -= 1;
                if depth < 0 {
                    return Err(format!("unbalanced `{c}`"));
                }
            }
            _ if depth == 0 && stops.contains(&c) => return Ok(i),
            _ => {}
        }
    }
    Ok(s.len())
}

fn split_pair(text: &str) -> Result<(String, String), String> {
    let mut body = text.trim();
    for (open, close) in [('{', '}'), ('(', ')')] {
        if body.starts_with(open) && body.ends_with(close) {
            let inner = &body[1..body.len() - 1];
            // `(a),(b)` is not a wrapped pair; its inner text is unbalanced
            if matches!(scan_depth0(inner, &[',']), Ok(i) if i < inner.len()) {
                body = inner;
                break;
            }
        }
    }
    let comma = scan_depth0(body, &[','])?;
    if comma == body.len() {
        return Err("expected two comma-separated expressions".into());
    }
    let (a, b) = (body[..comma].trim(), body[comma + 1..].trim());
    if a.is_empty() || b.is_empty() || b.contains(',') {
        return Err("expected two comma-separated expressions".into());
    }
    Ok((a.to_string(), b.to_string()))
}

struct SpecParser<'a> {
    text: &'a str,
    rest: &'a str,
}

impl<'a> SpecParser<'a> {
    fn eat(&mut self, prefix: &str) -> bool {
        let trimmed = self.rest.trim_start();
        if let Some(r) = trimmed.strip_prefix(prefix) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(&c.to_string()) {
            Ok(())
        } else {
            Err(spec_error(self.text, format_args!("expected `{c}` before `{}`", self.rest.trim())))
        }
    }

    fn spec(&mut self) -> Result<Spec, CliError> {
        for (name, wrap) in [
            ("inv(", Spec::Inv as fn(Box<Spec>) -> Spec),
            ("vhalf(", Spec::VHalf),
            ("hhalf(", Spec::HHalf),
        ] {
            if self.eat(name) {
                let inner = self.spec()?;
                self.expect(')')?;
                return Ok(wrap(Box::new(inner)));
            }
        }
        if self.eat("mul(") {
            let a = self.spec()?;
            self.expect(';')?;
            let b = self.spec()?;
            self.expect(')')?;
            return Ok(Spec::Mul(Box::new(a), Box::new(b)));
        }
        let trimmed = self.rest.trim_start();
        let colon = trimmed.find(':').ok_or_else(|| spec_error(self.text, "missing `family:` prefix"))?;
        let family = match trimmed[..colon].trim() {
            "riordan" => Family::Riordan,
            "central" => Family::Central,
            "expriordan" => Family::ExpRiordan,
            "expcentral" => Family::ExpCentral,
            other => {
                return Err(spec_error(
                    self.text,
                    format_args!("unknown family `{other}`; expected riordan, central, expriordan or expcentral"),
                ))
            }
        };
        let body = &trimmed[colon + 1..];
        let end = scan_depth0(body, &[';', ')']).map_err(|e| spec_error(self.text, e))?;
        let (first, second) = split_pair(&body[..end]).map_err(|e| spec_error(self.text, e))?;
        self.rest = &body[end..];
        Ok(Spec::Leaf { family, first, second })
    }
}

pub fn parse_spec(text: &str) -> Result<Spec, CliError> {
    let mut p = SpecParser { text, rest: text };
    let spec = p.spec()?;
    if !p.rest.trim().is_empty() {
        return Err(spec_error(text, format_args!("unexpected trailing `{}`", p.rest.trim())));
    }
    Ok(spec)
}

enum Value {
    Ordinary(RiordanPair),
    Central(CentralPair),
    ExpRiordan(ExpRiordanPair),
    ExpCentral(ExpCentralPair),
    Matrix(Triangle),
}

fn eval_expr(side: &str, text: &str, order: usize) -> Result<Series, CliError> {
    expr::eval_str(text, order).map_err(|source: ExprError| CliError::Expr { flag: side.to_string(), source })
}

fn pair_order(rows: usize) -> usize {
    2 * rows + 8
}

impl Value {
    fn triangle(&self, rows: usize) -> Result<Triangle, CliError> {
        Ok(match self {
            Value::Ordinary(p) => p.triangle(rows)?,
            Value::Central(c) => c.triangle(rows)?,
            Value::ExpRiordan(p) => p.triangle(rows)?,
            Value::ExpCentral(c) => c.triangle(rows)?,
            Value::Matrix(t) => t.leading(rows)?,
        })
    }

    fn ordinary(&self) -> Result<Option<RiordanPair>, CliError> {
        Ok(match self {
            Value::Ordinary(p) => Some(p.clone()),
            Value::Central(c) => Some(c.to_standard()?),
            _ => None,
        })
    }
}

fn eval(spec: &Spec, side: &str, rows: usize) -> Result<Value, CliError> {
    Ok(match spec {
        Spec::Leaf { family, first, second } => {
            let order = pair_order(rows);
            let a = eval_expr(side, first, order)?;
            let b = eval_expr(side, second, order)?;
            match family {
                Family::Riordan => Value::Ordinary(RiordanPair::new(a, b)?),
                Family::Central => Value::Central(CentralPair::new(a, b)?),
                Family::ExpRiordan => Value::ExpRiordan(ExpRiordanPair::new(a, b)?),
                Family::ExpCentral => Value::ExpCentral(ExpCentralPair::new(a, b)?),
            }
        }
        Spec::Inv(inner) => match eval(inner, side, rows)? {
            Value::Ordinary(p) => Value::Ordinary(p.inverse()?),
            Value::Central(c) => Value::Central(c.inverse()?),
            Value::ExpRiordan(p) => Value::ExpRiordan(p.inverse()?),
            other => Value::Matrix(other.triangle(rows)?.invert()?),
        },
        Spec::Mul(a, b) => {
            let (a, b) = (eval(a, side, rows)?, eval(b, side, rows)?);
            match (&a, &b) {
                (Value::Central(x), Value::Central(y)) => Value::Central(x.mul(y)?),
                (Value::ExpRiordan(x), Value::ExpRiordan(y)) => Value::ExpRiordan(x.mul(y)?),
                _ => match (a.ordinary()?, b.ordinary()?) {
                    (Some(x), Some(y)) => Value::Ordinary(x.mul(&y)?),
                    _ => Value::Matrix(a.triangle(rows)?.matmul(&b.triangle(rows)?)?),
                },
            }
        }
        Spec::VHalf(inner) | Spec::HHalf(inner) => {
            let vertical = matches!(spec, Spec::VHalf(_));
            let source_rows = 2 * rows.max(1) - 1;
            let value = eval(inner, side, source_rows)?;
            match value.ordinary()? {
                Some(p) => {
                    let h = p.halves()?;
                    Value::Ordinary(if vertical { h.vertical } else { h.horizontal })
                }
                None => {
                    let t = value.triangle(source_rows)?;
                    Value::Matrix(if vertical { t.vertical_half(rows)? } else { t.horizontal_half(rows)? })
                }
            }
        }
    })
}

/// Builds the `rows`-row triangle described by `spec`.
pub fn build(spec: &Spec, side: &str, rows: usize) -> Result<Triangle, CliError> {
    eval(spec, side, rows)?.triangle(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(family: Family, a: &str, b: &str) -> Spec {
        Spec::Leaf { family, first: a.into(), second: b.into() }
    }

    #[test]
    fn parses_leaves_and_wrappers() {
        assert_eq!(parse_spec("central:1,1+x").unwrap(), leaf(Family::Central, "1", "1+x"));
        assert_eq!(parse_spec("central:{1, 1+x}").unwrap(), leaf(Family::Central, "1", "1+x"));
        assert_eq!(parse_spec("riordan:(1/(1-x),x/(1-x))").unwrap(), leaf(Family::Riordan, "1/(1-x)", "x/(1-x)"));
        assert_eq!(parse_spec("riordan:1/(1-x),x/(1-x)").unwrap(), leaf(Family::Riordan, "1/(1-x)", "x/(1-x)"));
        assert_eq!(
            parse_spec("inv(mul(central:1,1/(1-x); riordan:1,x))").unwrap(),
            Spec::Inv(Box::new(Spec::Mul(
                Box::new(leaf(Family::Central, "1", "1/(1-x)")),
                Box::new(leaf(Family::Riordan, "1", "x"))
            )))
        );
        assert_eq!(
            parse_spec("vhalf(expcentral:(1+x),exp(x))").unwrap(),
            Spec::VHalf(Box::new(leaf(Family::ExpCentral, "(1+x)", "exp(x)")))
        );
    }

    #[test]
    fn rejects_malformed_specs() {
        for bad in ["central:1", "foo:1,x", "inv(central:1,x", "central:1,x)", "mul(central:1,x)", "1,x", "central:1,x,x"] {
            assert!(matches!(parse_spec(bad), Err(CliError::Spec(_))), "{bad}");
        }
    }

    #[test]
    fn builds_mixed_products() {
        let pascal = build(&parse_spec("riordan:1/(1-x),x/(1-x)").unwrap(), "lhs", 6).unwrap();
        let via_central = build(&parse_spec("mul(central:1,1+x;riordan:1,x)").unwrap(), "lhs", 6).unwrap();
        assert_eq!(pascal, via_central);
        let sq = build(&parse_spec("mul(riordan:1/(1-x),x/(1-x);riordan:1/(1-x),x/(1-x))").unwrap(), "lhs", 6).unwrap();
        assert_eq!(sq, pascal.matmul(&pascal).unwrap());
    }

    #[test]
    fn halves_fall_back_to_matrices() {
        let e = build(&parse_spec("vhalf(expriordan:exp(x),x)").unwrap(), "lhs", 5).unwrap();
        let t = build(&parse_spec("expriordan:exp(x),x").unwrap(), "lhs", 9).unwrap();
        assert_eq!(e, t.vertical_half(5).unwrap());
    }
}
