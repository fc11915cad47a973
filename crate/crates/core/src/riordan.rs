//! Classical description of Riordan arrays.
//!
//! A [`RiordanPair`] `(u, v)` with `u(0) != 0`, `v(0) = 0`, `v'(0) != 0`
//! represents the lower-triangular matrix `t_{n,k} = [x^n] u(x) v(x)^k`.
//! Matrix multiplication of those triangles corresponds to
//! `(d, h) * (u, v) = (d u(h), v(h))`, with identity `(1, x)`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Rat, Series};
use crate::triangle::Triangle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    u: Series,
    v: Series,
}

/// Generating functions of the A- and Z-sequences of a Riordan array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzPair {
    pub a: Series,
    pub z: Series,
}

impl AzPair {
    pub fn new(a: Series, z: Series) -> Result<Self> {
        if !a.is_f0() {
            return Err(Error::NotInF0 { name: "A" });
        }
        Ok(AzPair { a, z })
    }
}

/// Closed-form pairs for the vertical and horizontal halves of a Riordan
/// array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halves {
    pub vertical: RiordanPair,
    pub horizontal: RiordanPair,
}

/// `x s'(x) / s(x)` for `s` with valuation 1, exact to order `N - 1`.
pub(crate) fn x_log_derivative(s: &Series) -> Result<Series> {
    s.derivative()?.div(&s.shift_down(1)?)
}

/// `x / s` for `s` with valuation 1, exact to order `N - 1`.
pub(crate) fn x_over(s: &Series) -> Result<Series> {
    s.shift_down(1)?.recip()
}

impl RiordanPair {
    /// Checks `u` in F0 and `v` in F1 and cuts both to the common order.
    pub fn new(u: Series, v: Series) -> Result<Self> {
        if !u.is_f0() {
            return Err(Error::NotInF0 { name: "u" });
        }
        if !v.is_f1() {
            return Err(Error::NotInF1 { name: "v" });
        }
        let n = u.order().min(v.order());
        Ok(RiordanPair { u: u.truncate(n)?, v: v.truncate(n)? })
    }

    /// `(1, x)`.
    pub fn identity(order: usize) -> Self {
        let order = order.max(1);
        RiordanPair { u: Series::one(order), v: Series::x(order) }
    }

    pub fn u(&self) -> &Series {
        &self.u
    }

    pub fn v(&self) -> &Series {
        &self.v
    }

    pub fn order(&self) -> usize {
        self.u.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        RiordanPair::new(self.u.truncate(order)?, self.v.truncate(order)?)
    }

    /// Coefficient-wise equality of both components on the common order.
    pub fn agrees_with(&self, other: &RiordanPair) -> bool {
        self.u.agrees_with(&other.u) && self.v.agrees_with(&other.v)
    }

    /// `[x^n] u v^k`; zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if n > self.order() {
            return Err(Error::OutOfOrder { index: n, order: self.order() });
        }
        if k > n {
            return Ok(Rat::zero());
        }
        let u = self.u.truncate(n)?;
        let v = self.v.truncate(n)?;
        Ok(u.mul_series(&v.pow_int(k as i64)?).coeff(n)?.clone())
    }

    /// The first `rows` rows, built column by column from a running `u v^k`.
    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        if rows == 0 {
            return Triangle::from_rows(Vec::new());
        }
        if rows - 1 > self.order() {
            return Err(Error::OutOfOrder { index: rows - 1, order: self.order() });
        }
        let n = rows - 1;
        let v = self.v.truncate(n)?;
        let mut column = self.u.truncate(n)?;
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        for _ in 0..rows {
            cols.push(column.coeffs().to_vec());
            column = column.mul_series(&v);
        }
        Ok(Triangle::from_fn(rows, |n, k| cols[k][n].clone()))
    }

    /// Group product `self * rhs = (d u(h), v(h))` where `self = (d, h)`.
    pub fn mul(&self, rhs: &RiordanPair) -> Result<RiordanPair> {
        let u = self.u.mul_series(&rhs.u.compose(&self.v)?);
        let v = rhs.v.compose(&self.v)?;
        RiordanPair::new(u, v)
    }

    /// `(1 / u(Rev v), Rev v)`.
    pub fn inverse(&self) -> Result<RiordanPair> {
        let vbar = self.v.revert()?;
        let u = self.u.compose(&vbar)?.recip()?;
        RiordanPair::new(u, vbar)
    }

    /// `A(x) = x / Rev(v)`, to order `N - 1`.
    pub fn a_sequence(&self) -> Result<Series> {
        x_over(&self.v.revert()?)
    }

    /// `Z(x) = (1 - u(0) / u(Rev v)) / Rev(v)`, to order `N - 1`. For
    /// `u(0) = 1` this is the usual `(1/Rev v)(1 - 1/u(Rev v))`.
    pub fn z_sequence(&self) -> Result<Series> {
        let vbar = self.v.revert()?;
        let u0 = self.u.constant_term().clone();
        let bracket = &Series::one(vbar.order()) - &self.u.compose(&vbar)?.recip()?.scale(&u0);
        if bracket.valuation().is_some_and(|v| v == 0) {
            return Err(Error::ZInconsistent);
        }
        bracket.div(&vbar)
    }

    pub fn az(&self) -> Result<AzPair> {
        AzPair::new(self.a_sequence()?, self.z_sequence()?)
    }

    /// Membership in the hitting-time subgroup: `u = x v' / v` to order
    /// `N - 1`.
    pub fn is_hitting_time(&self) -> bool {
        match x_log_derivative(&self.v) {
            Ok(h) => h.agrees_with(&self.u),
            Err(_) => false,
        }
    }

    /// Closed forms of the halves. With `phi = Rev(x^2 / v)`:
    /// `V = (u(phi) x phi' / phi, phi)` and `H = (u(phi) x phi' / phi, v(phi))`.
    pub fn halves(&self) -> Result<Halves> {
        let x2_over_v = x_over(&self.v)?.shift_up(1);
        let phi = x2_over_v.revert()?;
        let u_phi = self.u.compose(&phi)?;
        let first = u_phi.mul_series(&x_log_derivative(&phi)?);
        Ok(Halves {
            vertical: RiordanPair::new(first.clone(), phi.clone())?,
            horizontal: RiordanPair::new(first, self.v.compose(&phi)?)?,
        })
    }
}

/// True iff `t_{n+1,k+1} = sum_j a_j t_{n,k+j}` and
/// `t_{n+1,0} = sum_j z_j t_{n,j}` hold throughout `t`.
pub fn satisfies_az_recurrences(t: &Triangle, az: &AzPair) -> bool {
    let coeff = |s: &Series, j: usize| s.coeffs().get(j).cloned();
    for n in 0..t.size().saturating_sub(1) {
        let row = &t.rows()[n];
        let next = &t.rows()[n + 1];
        for k in 0..=n {
            let mut acc = Rat::zero();
            for j in 0..=(n - k) {
                match coeff(&az.a, j) {
                    Some(a) => acc += a * &row[k + j],
                    None => return false,
                }
            }
            if acc != next[k + 1] {
                return false;
            }
        }
        let mut acc = Rat::zero();
        for (j, entry) in row.iter().enumerate() {
            match coeff(&az.z, j) {
                Some(z) => acc += z * entry,
                None => return false,
            }
        }
        if acc != next[0] {
            return false;
        }
    }
    true
}

/// Rebuilds `rows` rows of a triangle from its corner entry and the A/Z
/// recurrences.
pub fn triangle_from_az(corner: &Rat, az: &AzPair, rows: usize) -> Result<Triangle> {
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Triangle::from_rows(out);
    }
    out.push(alloc::vec![corner.clone()]);
    for n in 0..rows - 1 {
        let row = &out[n];
        let mut next = Vec::with_capacity(n + 2);
        let mut first = Rat::zero();
        for (j, entry) in row.iter().enumerate() {
            first += az.z.coeff(j)? * entry;
        }
        next.push(first);
        for k in 0..=n {
            let mut acc = Rat::zero();
            for j in 0..=(n - k) {
                acc += az.a.coeff(j)? * &row[k + j];
            }
            next.push(acc);
        }
        out.push(next);
    }
    Triangle::from_rows(out)
}
