//! Central description `{g, f}` of Riordan arrays.
//!
//! For `g, f` with nonzero constant terms, `{g, f}` is the lower-triangular
//! matrix with entries `t_{n,k} = [x^(n-k)] g(x) f(x)^n`. Every such matrix is
//! a Riordan array: with `R = Rev(x / f)` it equals `(g(R) x R' / R, R)`, and
//! it is the vertical half of `(g, x f)`.
//!
//! The group law in this description is
//! `{g1, f1} {g2, f2} = {g1(x/f2) g2, x / ((x/f1) o (x/f2))}`
//! and the inverse is `{1 / g(R), x / R}`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::riordan::{x_log_derivative, x_over, AzPair, RiordanPair};
use crate::series::{Rat, Series};
use crate::triangle::Triangle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralPair {
    g: Series,
    f: Series,
}

/// `x / f` for `f` with nonzero constant term; exact to order `N + 1`.
fn x_over_unit(f: &Series) -> Result<Series> {
    Ok(f.recip()?.shift_up(1))
}

/// `[x^n] g f^n` for `n = 0..=n_max`, reusing the running power `g f^n`.
fn column_of(g: &Series, f: &Series, n_max: usize) -> Result<Series> {
    let g = g.truncate(n_max)?;
    let f = f.truncate(n_max)?;
    let mut running = g;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(running.coeffs()[n].clone());
        running = running.mul_series(&f);
    }
    Ok(Series::from_coeffs(out))
}

impl CentralPair {
    /// Checks that `g` and `f` have nonzero constant terms and cuts both to
    /// the common order.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if !g.is_f0() {
            return Err(Error::NotInF0 { name: "g" });
        }
        if !f.is_f0() {
            return Err(Error::NotInF0 { name: "f" });
        }
        let n = g.order().min(f.order());
        Ok(CentralPair { g: g.truncate(n)?, f: f.truncate(n)? })
    }

    /// `{1, 1}`, the identity matrix.
    pub fn identity(order: usize) -> Self {
        CentralPair { g: Series::one(order), f: Series::one(order) }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        CentralPair::new(self.g.truncate(order)?, self.f.truncate(order)?)
    }

    /// Coefficient-wise equality of `g` and `f` on the common order.
    pub fn agrees_with(&self, other: &CentralPair) -> bool {
        self.g.agrees_with(&other.g) && self.f.agrees_with(&other.f)
    }

    /// `[x^(n-k)] g f^n`, computed only to order `n - k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if k > n {
            return Ok(Rat::zero());
        }
        let m = n - k;
        if m > self.order() {
            return Err(Error::OutOfOrder { index: m, order: self.order() });
        }
        let g = self.g.truncate(m)?;
        let f = self.f.truncate(m)?;
        Ok(g.mul_series(&f.pow_int(n as i64)?).coeff(m)?.clone())
    }

    fn row_powers(&self, rows: usize) -> Result<Vec<Series>> {
        if rows == 0 {
            return Ok(Vec::new());
        }
        if rows - 1 > self.order() {
            return Err(Error::OutOfOrder { index: rows - 1, order: self.order() });
        }
        let f = self.f.truncate(rows - 1)?;
        let mut running = self.g.truncate(rows - 1)?;
        let mut out = Vec::with_capacity(rows);
        for _ in 0..rows {
            let next = running.mul_series(&f);
            out.push(running);
            running = next;
        }
        Ok(out)
    }

    /// The first `rows` rows; row `n` is read off the running product
    /// `g f^n`.
    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        let powers = self.row_powers(rows)?;
        Ok(Triangle::from_fn(rows, |n, k| powers[n].coeffs()[n - k].clone()))
    }

    /// The triangle `[x^k] g f^n`, i.e. the row reversal of
    /// [`CentralPair::triangle`].
    pub fn reversal_triangle(&self, rows: usize) -> Result<Triangle> {
        let powers = self.row_powers(rows)?;
        Ok(Triangle::from_fn(rows, |n, k| powers[n].coeffs()[k].clone()))
    }

    /// Column 0 as a sequence: `[x^n] g f^n` for `n <= n_max`.
    pub fn column(&self, n_max: usize) -> Result<Series> {
        column_of(&self.g, &self.f, n_max)
    }

    /// `(g(R) x R' / R, R)` with `R = Rev(x / f)`.
    pub fn to_standard(&self) -> Result<RiordanPair> {
        let r = x_over_unit(&self.f)?.revert()?;
        let u = self.g.compose(&r)?.mul_series(&x_log_derivative(&r)?);
        RiordanPair::new(u, r)
    }

    /// `f = x / Rev(v)` and `g = f u(Rev v) (Rev v)'`; the result has order
    /// `N - 1`.
    pub fn from_standard(p: &RiordanPair) -> Result<CentralPair> {
        let r = p.v().revert()?;
        let f = x_over(&r)?;
        let g = f.mul_series(&p.u().compose(&r)?).mul_series(&r.derivative()?);
        CentralPair::new(g, f)
    }

    /// Classical pair of the inverse matrix:
    /// `((1/g) x (x/f)' / (x/f), x / f)`.
    pub fn standard_inverse_pair(&self) -> Result<RiordanPair> {
        let w = x_over_unit(&self.f)?;
        let u = self.g.recip()?.mul_series(&x_log_derivative(&w)?);
        RiordanPair::new(u, w)
    }

    /// `{g1(x/f2) g2, x / ((x/f1) o (x/f2))}`.
    pub fn mul(&self, rhs: &CentralPair) -> Result<CentralPair> {
        let w2 = x_over_unit(&rhs.f)?;
        let g = self.g.compose(&w2)?.mul_series(&rhs.g);
        let f = x_over(&x_over_unit(&self.f)?.compose(&w2)?)?;
        CentralPair::new(g, f)
    }

    /// `{1 / g(R), x / R}` with `R = Rev(x / f)`.
    pub fn inverse(&self) -> Result<CentralPair> {
        let r = x_over_unit(&self.f)?.revert()?;
        CentralPair::new(self.g.compose(&r)?.recip()?, x_over(&r)?)
    }

    /// `A = f` and `Z = (f/x) (1 - (g(0)/g) (1 - x f'/f))`, both to order
    /// `N - 1`. With `g(0) = 1` the factor `g(0)` disappears.
    pub fn az(&self) -> Result<AzPair> {
        let n = self.order();
        if n == 0 {
            return Err(Error::EmptyDerivative);
        }
        let x_dlog = self.f.derivative()?.shift_up(1).div(&self.f)?;
        let inner = &Series::one(n) - &x_dlog;
        let g0 = self.g.constant_term();
        let bracket = &Series::one(n) - &self.g.recip()?.scale(g0).mul_series(&inner);
        if bracket.valuation().is_some_and(|v| v == 0) {
            return Err(Error::ZInconsistent);
        }
        let z = self.f.truncate(n - 1)?.mul_series(&bracket.shift_down(1)?);
        AzPair::new(self.f.truncate(n - 1)?, z)
    }

    /// `f = A` and `g = (A - x A') / (A - x Z)`; this normalizes the corner
    /// entry `t_{0,0}` to 1.
    pub fn from_az(az: &AzPair) -> Result<CentralPair> {
        Self::from_az_with_corner(az, &Rat::one())
    }

    /// As [`CentralPair::from_az`] with `t_{0,0} = corner`. The A- and
    /// Z-sequences fix the array only up to this scalar.
    pub fn from_az_with_corner(az: &AzPair, corner: &Rat) -> Result<CentralPair> {
        let a = &az.a;
        let num = a - &a.derivative()?.shift_up(1);
        let den = a - &az.z.shift_up(1);
        let g = num.div(&den)?.scale(corner);
        CentralPair::new(g, a.clone())
    }

    /// Hitting-time membership, which in this description is `g = 1`.
    pub fn is_hitting_time(&self) -> bool {
        self.g.constant_term().is_one() && self.g.coeffs()[1..].iter().all(Zero::is_zero)
    }

    /// `(1 / g(R), x^2 / R)` with `R = Rev(x / f)`; its vertical half is the
    /// inverse of this matrix.
    pub fn vertical_antecedent(&self) -> Result<RiordanPair> {
        let r = x_over_unit(&self.f)?.revert()?;
        let u = self.g.compose(&r)?.recip()?;
        RiordanPair::new(u, x_over(&r)?.shift_up(1))
    }

    /// `(g, x f)`, whose vertical half is this matrix.
    pub fn lifted(&self) -> Result<RiordanPair> {
        RiordanPair::new(self.g.clone(), self.f.shift_up(1))
    }
}

/// Moments `mu_n = [x^n] (1 - b x^2) / (1 - s x - t x^2) (1 + a x + b x^2)^n`
/// of the orthogonal polynomials with coefficient array
/// `((1 - s x - t x^2) / (1 + a x + b x^2), x / (1 + a x + b x^2))`.
pub fn chebyshev_moments(s: &Rat, t: &Rat, a: &Rat, b: &Rat, order: usize) -> Series {
    let one = Rat::one();
    let zero = Rat::zero();
    let num = Series::polynomial(&[one.clone(), zero.clone(), -b], order);
    let den = Series::polynomial(&[one.clone(), -s, -t], order);
    let f = Series::polynomial(&[one, a.clone(), b.clone()], order);
    num.div(&den)
        .and_then(|g| column_of(&g, &f, order))
        .expect("denominator has constant term 1")
}
