//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `x^0 ..= x^N`; every
//! higher coefficient is unknown. Binary operations return the smaller of the
//! two operand orders, and asking for a coefficient beyond the stored order is
//! an error rather than an implicit zero.
//!
//! Multiplying by a power of `x` is exact, so [`Series::shift_up`] raises the
//! order. Operations such as `x / v` or `x / f` are built from that and a
//! reciprocal, which keeps as much precision as the inputs carry.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// `n / d` as a [`Rat`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Builds a series whose order is `coeffs.len() - 1`. An empty vector is
    /// read as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Series { coeffs }
    }

    /// Integer coefficients padded with zeros (or cut) to the given order.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| values.get(i).map_or_else(Rat::zero, |&v| int(v)))
            .collect();
        Series { coeffs }
    }

    /// Polynomial with the given coefficients, exact to `order`.
    pub fn polynomial(coeffs: &[Rat], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| coeffs.get(i).cloned().unwrap_or_else(Rat::zero))
            .collect();
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`. At order 0 this is indistinguishable from zero.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    /// `c * x^k` to the given order.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Catalan generating function `c(x)`, the solution of `c = 1 + x c^2`,
    /// built from the convolution recurrence rather than a square root.
    pub fn catalan(order: usize) -> Self {
        let mut c: Vec<Rat> = Vec::with_capacity(order + 1);
        c.push(Rat::one());
        for n in 1..=order {
            let mut acc = Rat::zero();
            for i in 0..n {
                acc += &c[i] * &c[n - 1 - i];
            }
            c.push(acc);
        }
        Series { coeffs: c }
    }

    /// `e^x` to the given order.
    pub fn exp_x(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rat::one();
        coeffs.push(term.clone());
        for n in 1..=order {
            term /= int(n as i64);
            coeffs.push(term.clone());
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rat> {
        self.coeffs
            .get(n)
            .ok_or(Error::OutOfOrder { index: n, order: self.order() })
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Nonzero constant term.
    pub fn is_f0(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Zero constant term and nonzero linear term.
    pub fn is_f1(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs.get(1).is_some_and(|c| !c.is_zero())
    }

    /// Drops coefficients above `order`. Raising the order is an error since
    /// the extra coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order() {
            return Err(Error::OutOfOrder { index: order, order: self.order() });
        }
        Ok(Series { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Multiplies by `x^k`; the result is exact to order `N + k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divides by `x^k`, which requires the first `k` coefficients to vanish.
    /// The result has order `N - k`.
    pub fn shift_down(&self, k: usize) -> Result<Series> {
        if k > self.order() {
            return Err(Error::OutOfOrder { index: k, order: self.order() });
        }
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(Error::NonCancellingValuation { numerator: v, denominator: k });
            }
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn zip_with(&self, other: &Series, op: impl Fn(&Rat, &Rat) -> Rat) -> Series {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| op(&self.coeffs[i], &other.coeffs[i])).collect();
        Series { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul_series(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn recip(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[m - k];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Exact quotient `self / denom`. Common powers of `x` are cancelled
    /// first, so the result has order `min(N_a, N_b) - val(denom)`.
    pub fn div(&self, denom: &Series) -> Result<Series> {
        let vb = denom.valuation().ok_or(Error::DivisionByZero)?;
        let n = self.order().min(denom.order());
        if let Some(va) = self.valuation() {
            if va < vb {
                return Err(Error::NonCancellingValuation { numerator: va, denominator: vb });
            }
        }
        if vb > n {
            return Err(Error::OutOfOrder { index: vb, order: n });
        }
        let num = self.truncate(n)?.shift_down(vb)?;
        let den = denom.truncate(n)?.shift_down(vb)?;
        Ok(num.mul_series(&den.recip()?))
    }

    /// `outer(inner)` by Horner's rule. `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n)?;
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[x^n] Rev(v) = (1/n) [x^(n-1)] (x/v)^n`.
    pub fn revert(&self) -> Result<Series> {
        if !self.is_f1() {
            return Err(Error::ReversionDomain);
        }
        let n = self.order();
        // x / v, exact to order N - 1
        let x_over_v = self.shift_down(1)?.recip()?;
        let mut out = vec![Rat::zero(); n + 1];
        let mut power = Series::one(n - 1);
        for (m, c) in out.iter_mut().enumerate().skip(1) {
            power = power.mul_series(&x_over_v);
            *c = &power.coeffs[m - 1] / int(m as i64);
        }
        Ok(Series { coeffs: out })
    }

    /// Compositional inverse by Newton iteration on `v(w) = x`. Agrees with
    /// [`Series::revert`] coefficient for coefficient.
    pub fn revert_newton(&self) -> Result<Series> {
        if !self.is_f1() {
            return Err(Error::ReversionDomain);
        }
        let n = self.order();
        let dv = self.derivative()?;
        let x = Series::x(n);
        let mut w = x.scale(&self.coeffs[1].recip());
        // Each step doubles the number of correct terms; the loop stops at
        // the exact fixed point.
        for _ in 0..=n + 1 {
            let residual = &self.compose(&w)? - &x;
            if residual.is_zero() {
                break;
            }
            // The residual has valuation >= 1, so the unknown top coefficient
            // of v'(w) never reaches order N of the correction.
            let mut slope = dv.compose(&w.truncate(n - 1)?)?.into_coeffs();
            slope.push(Rat::zero());
            let step = residual.mul_series(&Series::from_coeffs(slope).recip()?);
            w = &w - &step;
        }
        Ok(w)
    }

    /// Termwise derivative; the result has order `N - 1`.
    pub fn derivative(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(Error::EmptyDerivative);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * int(i as i64 + 1))
            .collect();
        Ok(Series { coeffs })
    }

    /// Antiderivative with zero constant term; the result has order `N + 1`.
    pub fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / int(i as i64 + 1)),
        );
        Series { coeffs }
    }

    pub fn pow_int(&self, e: i64) -> Result<Series> {
        if e < 0 {
            if !self.is_f0() {
                return Err(Error::NegativePowerOfNonUnit);
            }
            return self.recip()?.pow_int(-e);
        }
        let mut e = e as u64;
        let mut base = self.clone();
        let mut acc = Series::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_series(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_series(&base);
            }
        }
        Ok(acc)
    }

    /// `self^(p/q)`. The constant term must have an exact rational `q`-th
    /// root `r`; the result is `r^p (s/s_0)^(p/q)` with the unit part expanded
    /// as a generalized binomial series.
    pub fn pow_rat(&self, p: i64, q: u32) -> Result<Series> {
        if q == 0 {
            return Err(Error::ZeroExponentDenominator);
        }
        let g = num_integer::gcd(p, i64::from(q));
        let (p, q) = (p / g, (i64::from(q) / g) as u32);
        if q == 1 {
            return self.pow_int(p);
        }
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            // x^v t with t(0) != 0 has a power only when q divides v
            let v = match self.valuation() {
                Some(v) if v % q as usize == 0 && p > 0 => v,
                Some(_) if p < 0 => return Err(Error::NegativePowerOfNonUnit),
                _ => return Err(Error::ZeroConstantTerm),
            };
            let t = self.shift_down(v)?;
            return Ok(t.pow_rat(p, q)?.shift_up(v / q as usize * p as usize));
        }
        let root = exact_root(s0, q).ok_or(Error::IrrationalRoot { degree: q })?;
        let unit = self.scale(&s0.recip());
        let alpha = ratio(p, i64::from(q));
        let lead = pow_rat_scalar(&root, p);
        Ok(unit_power(&unit, &alpha).scale(&lead))
    }

    /// `self^(1/2)`.
    pub fn sqrt(&self) -> Result<Series> {
        self.pow_rat(1, 2)
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain);
        }
        let n = self.order();
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        out.push(Rat::one());
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                let s = &self.coeffs[k];
                if !s.is_zero() {
                    acc += s * int(k as i64) * &out[m - k];
                }
            }
            out.push(acc / int(m as i64));
        }
        Ok(Series { coeffs: out })
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogDomain);
        }
        if self.order() == 0 {
            return Ok(Series::zero(0));
        }
        let quotient = self.derivative()?.mul_series(&self.recip()?);
        Ok(quotient.integral())
    }

    /// True iff coefficients `0..=n` agree exactly.
    pub fn eq_to_order(&self, other: &Series, n: usize) -> Result<bool> {
        let avail = self.order().min(other.order());
        if n > avail {
            return Err(Error::OutOfOrder { index: n, order: avail });
        }
        Ok(self.coeffs[..=n] == other.coeffs[..=n])
    }

    /// Equality on the common prefix of the two orders.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

/// Generalized binomial power of a series with constant term 1, via
/// `n y_n = sum_{k=1..n} (alpha k - (n - k)) h_k y_(n-k)`.
fn unit_power(h: &Series, alpha: &Rat) -> Series {
    let n = h.order();
    let mut y: Vec<Rat> = Vec::with_capacity(n + 1);
    y.push(Rat::one());
    for m in 1..=n {
        let mut acc = Rat::zero();
        for k in 1..=m {
            let hk = &h.coeffs[k];
            if hk.is_zero() {
                continue;
            }
            let weight = alpha * int(k as i64) - int((m - k) as i64);
            acc += weight * hk * &y[m - k];
        }
        y.push(acc / int(m as i64));
    }
    Series { coeffs: y }
}

fn pow_rat_scalar(r: &Rat, p: i64) -> Rat {
    let mag = num_traits::pow(r.clone(), p.unsigned_abs() as usize);
    if p < 0 {
        mag.recip()
    } else {
        mag
    }
}

fn exact_int_root(n: &BigInt, q: u32) -> Option<BigInt> {
    if n.is_negative() {
        if q.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, q).map(|r| -r);
    }
    let r = n.nth_root(q);
    (num_traits::pow(r.clone(), q as usize) == *n).then_some(r)
}

/// Exact rational `q`-th root, if one exists.
pub fn exact_root(value: &Rat, q: u32) -> Option<Rat> {
    let num = exact_int_root(value.numer(), q)?;
    let den = exact_int_root(value.denom(), q)?;
    Some(Rat::new(num, den))
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_series(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
