//! A small expression language for generating functions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := '-' factor | atom ('^' exponent)?
//! exponent := '-'? int | '(' '-'? ratlit ')'
//! atom     := ratlit | 'x' | '(' expr ')' | ident '(' expr ')'
//! ratlit   := int ('/' int)?
//! ident    := sqrt | C | exp | log | rev
//! ```
//!
//! Whitespace is ignored and multiplication is always explicit (`2*x`, never
//! `2x`). Fractional exponents must be parenthesized, `(1+x)^(1/2)`, so that
//! `x^2/3` reads as `(x^2)/3`. A literal `p/q` directly followed by `^` is
//! parsed as a division.
//!
//! Evaluation produces a [`Series`] of the requested order. `C(e)` is the
//! Catalan generating function composed with `e`; `C` itself is computed from
//! `c = 1 + x c^2`, not from the square-root closed form.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::error::Error;
use crate::series::{Rat, Series};

pub const BUILTINS: &str = "sqrt, C, exp, log, rev";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown function `{name}` at column {column}; builtins are {BUILTINS}")]
    UnknownFunction { column: usize, name: String },
    #[error("at column {column}: {source}")]
    Domain { column: usize, source: Error },
    #[error("could not reach order {order} after cancelling powers of x")]
    Precision { order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Catalan,
    Exp,
    Log,
    Rev,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sqrt" => Func::Sqrt,
            "C" => Func::Catalan,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "rev" => Func::Rev,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Catalan => "C",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Rev => "rev",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Num(Rat),
    X,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rat),
    Call(Func, Box<Expr>),
}

/// Expression node with the 1-based column it starts at (for operators and
/// calls, the column of the operator or function name).
#[derive(Debug, Clone, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub column: usize,
}

/// Structural equality; source columns are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| ExprError::Syntax {
                    column,
                    message: "bad integer literal".to_string(),
                })?;
                out.push((Tok::Int(n), column));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), column));
                continue;
            }
            _ => {
                return Err(ExprError::Syntax { column, message: alloc::format!("unexpected character `{c}`") });
            }
        };
        out.push((tok, column));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ExprError {
        ExprError::Syntax { column: self.column(), message: alloc::format!("expected {wanted}, found {}", self.peek()) }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, column) = self.bump();
            let rhs = self.term()?;
            lhs = Expr { kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), column };
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, column) = self.bump();
            let rhs = self.factor()?;
            lhs = Expr { kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), column };
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            let (_, column) = self.bump();
            let inner = self.factor()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), column });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, column) = self.bump();
        let exponent = self.exponent()?;
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), exponent), column })
    }

    fn int(&mut self) -> Result<BigInt, ExprError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn exponent(&mut self) -> Result<Rat, ExprError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let neg = *self.peek() == Tok::Minus;
            if neg {
                self.bump();
            }
            let num = self.int()?;
            let column = self.column();
            let den = if *self.peek() == Tok::Slash {
                self.bump();
                self.int()?
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(ExprError::Syntax { column, message: "zero denominator in exponent".to_string() });
            }
            self.expect(Tok::RParen, "`)`")?;
            let e = Rat::new(num, den);
            return Ok(if neg { -e } else { e });
        }
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let n = Rat::from_integer(self.int()?);
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let is_ratlit = *self.peek() == Tok::Slash
                    && matches!(self.peek_at(1), Tok::Int(_))
                    && *self.peek_at(2) != Tok::Caret;
                let value = if is_ratlit {
                    let slash_column = self.column();
                    self.bump();
                    let den = self.int()?;
                    if den.is_zero() {
                        return Err(ExprError::Domain { column: slash_column, source: Error::DivisionByZero });
                    }
                    Rat::new(n, den)
                } else {
                    Rat::from_integer(n)
                };
                Ok(Expr { kind: ExprKind::Num(value), column })
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "x" {
                    return Ok(Expr { kind: ExprKind::X, column });
                }
                let func = Func::from_name(&name).ok_or(ExprError::UnknownFunction { column, name })?;
                self.expect(Tok::LParen, "`(` after function name")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr { kind: ExprKind::Call(func, Box::new(arg)), column })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, `x`, `(` or a function")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

fn write_rat(f: &mut fmt::Formatter<'_>, r: &Rat) -> fmt::Result {
    if r.is_integer() && !r.is_negative() {
        write!(f, "{r}")
    } else {
        write!(f, "({r})")
    }
}

/// Fully parenthesized rendering that parses back to an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Num(r) => write_rat(f, r),
            ExprKind::X => f.write_str("x"),
            ExprKind::Neg(e) => write!(f, "(-{e})"),
            // `a/(b)` keeps an integer divisor from reading back as a literal `a/b`
            ExprKind::Binary(BinOp::Div, l, r) if matches!(&r.kind, ExprKind::Num(n) if n.is_integer()) => {
                write!(f, "({l}/({r}))")
            }
            ExprKind::Binary(op, l, r) => write!(f, "({l}{}{r})", op.symbol()),
            ExprKind::Pow(b, e) => {
                write!(f, "(({b})^")?;
                write_rat(f, e)?;
                f.write_str(")")
            }
            ExprKind::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

fn exponent_parts(e: &Rat) -> Option<(i64, u32)> {
    Some((e.numer().to_i64()?, e.denom().to_u32()?))
}

fn eval_at(expr: &Expr, order: usize) -> Result<Series, ExprError> {
    let domain = |column: usize| move |source: Error| ExprError::Domain { column, source };
    match &expr.kind {
        ExprKind::Num(r) => Ok(Series::constant(r.clone(), order)),
        ExprKind::X => Ok(Series::x(order)),
        ExprKind::Neg(e) => Ok(-&eval_at(e, order)?),
        ExprKind::Binary(op, l, r) => {
            let a = eval_at(l, order)?;
            let b = eval_at(r, order)?;
            match op {
                BinOp::Add => Ok(&a + &b),
                BinOp::Sub => Ok(&a - &b),
                BinOp::Mul => Ok(&a * &b),
                BinOp::Div => a.div(&b).map_err(domain(expr.column)),
            }
        }
        ExprKind::Pow(b, e) => {
            let base = eval_at(b, order)?;
            let (p, q) = exponent_parts(e).ok_or(ExprError::Syntax {
                column: expr.column,
                message: "exponent out of range".to_string(),
            })?;
            base.pow_rat(p, q).map_err(domain(expr.column))
        }
        ExprKind::Call(func, a) => {
            // reversion reads the linear coefficient, so it needs order 1
            let arg_order = if *func == Func::Rev { order.max(1) } else { order };
            let arg = eval_at(a, arg_order)?;
            let res = match func {
                Func::Sqrt => arg.sqrt(),
                Func::Catalan => Series::catalan(arg.order()).compose(&arg),
                Func::Exp => arg.exp(),
                Func::Log => arg.log(),
                Func::Rev => arg.revert(),
            };
            res.map_err(domain(expr.column))
        }
    }
}

/// Evaluates to a series of exactly `order`. Cancelled powers of `x` cost
/// precision, so the working order is raised until the result is long
/// enough.
pub fn eval(expr: &Expr, order: usize) -> Result<Series, ExprError> {
    let mut work = order;
    for _ in 0..16 {
        let s = eval_at(expr, work)?;
        if s.order() >= order {
            return s.truncate(order).map_err(|source| ExprError::Domain { column: expr.column, source });
        }
        work += order - s.order();
    }
    Err(ExprError::Precision { order })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, order: usize) -> Result<Series, ExprError> {
    eval(&parse(text)?, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, ratio};

    fn ev(text: &str, order: usize) -> Series {
        eval_str(text, order).unwrap()
    }

    #[test]
    fn parses_rational_functions_and_powers() {
        let e = parse("(1+2*x)/(1+3*x+x^2)").unwrap();
        assert!(matches!(e.kind, ExprKind::Binary(BinOp::Div, _, _)));
        let e = parse("(1+x)^(1/2)").unwrap();
        match e.kind {
            ExprKind::Pow(_, p) => assert_eq!(p, ratio(1, 2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        match parse("2x") {
            Err(ExprError::Syntax { column, .. }) => assert_eq!(column, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_function_lists_builtins() {
        let err = parse("1 + foo(x)").unwrap_err();
        assert_eq!(err, ExprError::UnknownFunction { column: 5, name: "foo".into() });
        assert!(alloc::format!("{err}").contains(BUILTINS));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let col = |t: &str| match parse(t) {
            Err(ExprError::Syntax { column, .. }) => column,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(col("1+"), 3);
        assert_eq!(col("(1+x"), 5);
        assert_eq!(col("x^y"), 3);
        assert_eq!(col("1 $ 2"), 3);
    }

    #[test]
    fn precedence() {
        assert_eq!(ev("-x^2", 3), Series::from_ints(&[0, 0, -1], 3));
        assert_eq!(ev("x^2/3", 3), Series::from_coeffs(alloc::vec![int(0), int(0), ratio(1, 3), int(0)]));
        assert_eq!(ev("3/2^2", 1), Series::constant(ratio(3, 4), 1));
        assert_eq!(ev("1 - 2*x + 3", 2), Series::from_ints(&[4, -2], 2));
        assert_eq!(ev("2*-x", 2), Series::from_ints(&[0, -2], 2));
        assert_eq!(ev("(1+x)^-1*(1+x)", 2), Series::one(2));
        assert_eq!(ev("(x^2)^(1/2)", 4), Series::x(4));
        assert_eq!(ev("(4*x^2+x^3)^(1/2)", 3), Series::from_coeffs(alloc::vec![int(0), int(2), ratio(1, 4), ratio(-1, 64)]));
    }

    #[test]
    fn catalan_builtin() {
        assert_eq!(ev("C(x)", 5), Series::from_ints(&[1, 1, 2, 5, 14, 42], 5));
        let c = ev("C(x)", 20);
        let rhs = &Series::one(20) + &(&c * &c).shift_up(1).truncate(20).unwrap();
        assert_eq!(c, rhs);
        assert_eq!(ev("C(2*x)", 3), Series::from_ints(&[1, 2, 8, 40], 3));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ev("1/(1-x)", 4), Series::from_ints(&[1, 1, 1, 1, 1], 4));
        assert_eq!(ev("sqrt(1-4*x)*C(x)", 3), Series::from_ints(&[1, -1, -2, -5], 3));
        assert_eq!(ev("rev(x/(1-x))", 3), Series::from_ints(&[0, 1, -1, 1], 3));
        assert_eq!(ev("exp(x)", 4), Series::exp_x(4));
        assert_eq!(ev("log(1+x)", 3), Series::from_coeffs(alloc::vec![int(0), int(1), ratio(-1, 2), ratio(1, 3)]));
    }

    #[test]
    fn cancelling_division_keeps_requested_order() {
        // (1 - sqrt(1 - 4x)) / (2x) is c(x)
        let c = ev("(1-sqrt(1-4*x))/(2*x)", 10);
        assert_eq!(c.order(), 10);
        assert_eq!(c, Series::catalan(10));
        let w = ev("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", 6);
        assert_eq!(w, Series::from_ints(&[1, 1, 2, 4, 9, 21, 51], 6));
    }

    #[test]
    fn domain_errors_carry_position() {
        let err = eval_str("1/x", 4).unwrap_err();
        assert!(matches!(err, ExprError::Domain { column: 2, source: Error::NonCancellingValuation { .. } }));
        let err = eval_str("C(1+x)", 4).unwrap_err();
        assert_eq!(err, ExprError::Domain { column: 1, source: Error::CompositionDomain });
        let err = eval_str("2 + sqrt(2+x)", 4).unwrap_err();
        assert_eq!(err, ExprError::Domain { column: 5, source: Error::IrrationalRoot { degree: 2 } });
        assert!(matches!(eval_str("exp(1+x)", 3), Err(ExprError::Domain { source: Error::ExpDomain, .. })));
        assert!(matches!(eval_str("rev(1+x)", 3), Err(ExprError::Domain { source: Error::ReversionDomain, .. })));
        assert!(matches!(eval_str("x^(1/2)", 3), Err(ExprError::Domain { column: 2, .. })));
    }

    #[test]
    fn order_monotone() {
        for text in ["C(x)^3/(1-x)", "sqrt(4+x^2)", "(x+sqrt(x^2+4))/sqrt(x^2+4)", "rev(x*exp(-x))"] {
            let long = ev(text, 12);
            for m in [0, 3, 7, 11] {
                assert_eq!(long.truncate(m).unwrap(), ev(text, m), "{text} at {m}");
            }
        }
    }

    #[test]
    fn display_round_trip_simple() {
        for text in ["-x^2", "1/2*x", "3/2^2", "(1+x)^(1/2)", "x^(-3/2)", "C(-x)", "2/(1/3)"] {
            let e = parse(text).unwrap();
            let printed = alloc::format!("{e}");
            assert_eq!(parse(&printed).unwrap(), e, "{text} -> {printed}");
        }
    }

    const CORPUS: &[&str] = &[
        "1", "x", "-x", "0", "7/3", "x+1", "1-x", "2*x", "x/2", "-x^2",
        "(-x)^2", "x^3", "x^-1*x^2", "(1+x)^(1/2)", "(1-4*x)^(-1/2)", "(1+x)^(2/3)", "3/2^2", "2/(1/3)", "1/2*x", "x-x-x",
        "1/(1-x)", "x/(1-x)", "1/(1-x-x^2)", "x/(1-2*x)", "(1+2*x)/(1+3*x+x^2)", "1/(1-x)^2", "(1-x)^-2", "x*(1-x)/(1+x)^3", "-(1+x)", "--x",
        "1 - - x", "sqrt(1-4*x)", "sqrt(1+x)", "C(x)", "C(-x)", "C(x^2)", "x*C(x)^2", "exp(x)", "exp(-2*x)", "log(1+x)",
        "log(1/(1-x))", "rev(x/(1-x))", "rev(x-x^2)", "rev(x*exp(-x))", "exp(log(1+x))", "sqrt(sqrt(1+x))", "(1-sqrt(1-4*x))/(2*x)", "1+x+x^2+x^3+x^4", "x^10", "(x^2)^(1/2)",
        "(4*x^2+x^3)^(1/2)", "1/(1+x)*(1+x)", "2*x*3*x", "2/3/4", "1-2-3", "x^2/3", "(x+1)*(x-1)", "exp(x)-1", "(exp(x)-1)/x", "x/(exp(x)-1)",
        "1/(2-x-sqrt(1-4*x))", "1/C(x)", "x*(x+sqrt(x^2+4))/2", "(1+x)^(1/3)*(1+x)^(2/3)", "sqrt(1-2*x-3*x^2)", "(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", "1/(1-x*C(x))", "rev(x*(1+x))", "rev(x/(1+x+x^2))", "log(C(x))",
        "exp(x+x^2/2)", "C(x)^3", "C(x)^(1/2)", "x^0", "(2*x)^(-1)*x", "(1/2)^2", "1/2^3", "(3/4)", "-(3/4)", "- 1/2",
        "1 + 2 * x", "  x  ", "((((x))))", "(1+x)^(5/2)", "x^(3/2)/x", "sqrt(x^2+4)", "exp(-x)*exp(x)", "log(1-x)+log(1+x)", "rev(log(1+x))", "rev(exp(x)-1)",
        "C(x-x^2)", "1/(1-2*x)^(1/2)", "(1-x^2)/(1+x^2)", "x*exp(x)", "(1+x)^-3", "2^3", "2^-1", "(x+x)^2", "sqrt(4)", "C(0)",
    ];

    #[test]
    fn corpus_round_trips() {
        assert_eq!(CORPUS.len(), 100);
        for text in CORPUS {
            let e = parse(text).unwrap_or_else(|err| panic!("{text}: {err}"));
            let printed = alloc::format!("{e}");
            let again = parse(&printed).unwrap_or_else(|err| panic!("{text} -> {printed}: {err}"));
            assert_eq!(again, e, "{text} -> {printed}");
            assert_eq!(alloc::format!("{again}"), printed);
            if let Ok(value) = eval(&e, 8) {
                assert_eq!(eval(&again, 8).unwrap(), value, "{text}");
            }
        }
    }

    mod properties {
        use super::*;
        use alloc::boxed::Box;
        use proptest::prelude::*;

        fn node(kind: ExprKind) -> Expr {
            Expr { kind, column: 0 }
        }

        fn tree() -> impl Strategy<Value = Expr> {
            let leaf = prop_oneof![
                Just(node(ExprKind::X)),
                (0i64..20).prop_map(|n| node(ExprKind::Num(int(n)))),
                (1i64..9, 2i64..7).prop_map(|(n, d)| node(ExprKind::Num(ratio(n, d)))),
            ];
            leaf.prop_recursive(4, 24, 2, |inner| {
                let op = prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)];
                let func = prop_oneof![
                    Just(Func::Sqrt),
                    Just(Func::Catalan),
                    Just(Func::Exp),
                    Just(Func::Log),
                    Just(Func::Rev)
                ];
                prop_oneof![
                    inner.clone().prop_map(|e| node(ExprKind::Neg(Box::new(e)))),
                    (op, inner.clone(), inner.clone())
                        .prop_map(|(op, l, r)| node(ExprKind::Binary(op, Box::new(l), Box::new(r)))),
                    (inner.clone(), -3i64..4, 1i64..4)
                        .prop_map(|(b, p, q)| node(ExprKind::Pow(Box::new(b), ratio(p, q)))),
                    (func, inner).prop_map(|(f, a)| node(ExprKind::Call(f, Box::new(a)))),
                ]
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn printed_trees_parse_back(e in tree()) {
                let printed = alloc::format!("{e}");
                let back = parse(&printed);
                prop_assert!(back.is_ok(), "{} failed: {:?}", printed, back);
                prop_assert_eq!(back.unwrap(), e);
            }
        }
    }
}
