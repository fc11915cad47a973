//! Exponential Riordan arrays `[u, v]` and their central form `{g, f}_e`.
//!
//! `[u, v]` has entries `(n!/k!) [x^n] u v^k` and `{g, f}_e` has entries
//! `(n!/k!) [x^(n-k)] g f^n`. The series store the Taylor coefficients of the
//! functions themselves, so `e^x` is `1, 1, 1/2, 1/6, ...`.
//!
//! Composition of exponential generating functions is ordinary composition,
//! so the group law and inverse have the same shape as in the ordinary case.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::central::CentralPair;
use crate::error::Result;
use crate::riordan::RiordanPair;
use crate::series::{Rat, Series};
use crate::triangle::Triangle;

/// `0!, 1!, ..., n!` as exact integers.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for i in 1..=n {
        acc *= BigInt::from(i);
        out.push(acc.clone());
    }
    out
}

fn falling_ratio(facts: &[BigInt], n: usize, k: usize) -> Rat {
    Rat::from_integer(&facts[n] / &facts[k])
}

/// Rescales an ordinary triangle by `n!/k!`.
fn exponential_scaling(t: &Triangle) -> Triangle {
    let facts = factorials(t.size().saturating_sub(1));
    Triangle::from_fn(t.size(), |n, k| &t.rows()[n][k] * falling_ratio(&facts, n, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpRiordanPair {
    inner: RiordanPair,
}

impl ExpRiordanPair {
    pub fn new(u: Series, v: Series) -> Result<Self> {
        Ok(ExpRiordanPair { inner: RiordanPair::new(u, v)? })
    }

    pub fn identity(order: usize) -> Self {
        ExpRiordanPair { inner: RiordanPair::identity(order) }
    }

    pub fn u(&self) -> &Series {
        self.inner.u()
    }

    pub fn v(&self) -> &Series {
        self.inner.v()
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn agrees_with(&self, other: &ExpRiordanPair) -> bool {
        self.inner.agrees_with(&other.inner)
    }

    /// `(n!/k!) [x^n] u v^k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if k > n {
            return Ok(Rat::zero());
        }
        let e = self.inner.entry(n, k)?;
        let facts = factorials(n);
        Ok(e * falling_ratio(&facts, n, k))
    }

    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        Ok(exponential_scaling(&self.inner.triangle(rows)?))
    }

    /// `[d, h] [u, v] = [d u(h), v(h)]`.
    pub fn mul(&self, rhs: &ExpRiordanPair) -> Result<ExpRiordanPair> {
        Ok(ExpRiordanPair { inner: self.inner.mul(&rhs.inner)? })
    }

    /// `[1 / u(Rev v), Rev v]`.
    pub fn inverse(&self) -> Result<ExpRiordanPair> {
        Ok(ExpRiordanPair { inner: self.inner.inverse()? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpCentralPair {
    inner: CentralPair,
}

impl ExpCentralPair {
    pub fn new(g: Series, f: Series) -> Result<Self> {
        Ok(ExpCentralPair { inner: CentralPair::new(g, f)? })
    }

    pub fn identity(order: usize) -> Self {
        ExpCentralPair { inner: CentralPair::identity(order) }
    }

    pub fn g(&self) -> &Series {
        self.inner.g()
    }

    pub fn f(&self) -> &Series {
        self.inner.f()
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    /// `(n!/k!) [x^(n-k)] g f^n`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if k > n {
            return Ok(Rat::zero());
        }
        let e = self.inner.entry(n, k)?;
        let facts = factorials(n);
        Ok(e * falling_ratio(&facts, n, k))
    }

    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        Ok(exponential_scaling(&self.inner.triangle(rows)?))
    }
}

/// `Rev(x e^(-x))`, which is `-W(-x)` for the principal branch of Lambert W.
pub fn neg_lambert_w_neg(order: usize) -> Result<Series> {
    let order = order.max(1);
    let x_exp = (-&Series::x(order)).exp()?.shift_up(1).truncate(order)?;
    x_exp.revert()
}

/// `[(1 - x) / (1 + r x), x e^(-x)]`, whose inverse is `{1 + r x, e^x}_e`.
pub fn lambert_pair(r: &Rat, order: usize) -> Result<ExpRiordanPair> {
    let num = Series::polynomial(&[Rat::one(), -Rat::one()], order);
    let den = Series::polynomial(&[Rat::one(), r.clone()], order);
    let u = num.div(&den)?;
    let v = (-&Series::x(order)).exp()?.shift_up(1).truncate(order)?;
    ExpRiordanPair::new(u, v)
}
