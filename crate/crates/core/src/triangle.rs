//! Exact lower-triangular matrices.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::Rat;

/// Lower-triangular matrix stored row by row; row `n` holds the entries
/// `(n, 0) ..= (n, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    rows: Vec<Vec<Rat>>,
}

/// First entry at which two triangles differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    pub left: Rat,
    pub right: Rat,
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::MalformedTriangle { row: n, found: row.len(), expected: n + 1 });
            }
        }
        Ok(Triangle { rows })
    }

    /// Rows given as integers; only the first `n + 1` entries of row `n` are
    /// read, so a full square matrix may be passed.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(n, r)| {
                if r.len() <= n {
                    return Err(Error::MalformedTriangle { row: n, found: r.len(), expected: n + 1 });
                }
                Ok(r[..=n].iter().map(|&v| crate::series::int(v)).collect())
            })
            .collect::<Result<Vec<Vec<Rat>>>>()?;
        Ok(Triangle { rows })
    }

    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> Rat) -> Self {
        let rows = (0..size)
            .map(|n| (0..=n).map(|k| entry(n, k)).collect())
            .collect();
        Triangle { rows }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |n, k| if n == k { Rat::one() } else { Rat::zero() })
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Entry `(n, k)`; zero above the diagonal, `None` past the last row.
    pub fn get(&self, n: usize, k: usize) -> Option<Rat> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_else(Rat::zero))
    }

    /// The first `size` rows.
    pub fn leading(&self, size: usize) -> Result<Triangle> {
        if size > self.size() {
            return Err(Error::InsufficientRows { needed: size, available: self.size() });
        }
        Ok(Triangle { rows: self.rows[..size].to_vec() })
    }

    pub fn matmul(&self, other: &Triangle) -> Result<Triangle> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let rows = (0..self.size())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n).fold(Rat::zero(), |acc, j| acc + &self.rows[n][j] * &other.rows[j][k])
                    })
                    .collect()
            })
            .collect();
        Ok(Triangle { rows })
    }

    /// Exact inverse by forward substitution.
    pub fn invert(&self) -> Result<Triangle> {
        let size = self.size();
        let mut inv: Vec<Vec<Rat>> = Vec::with_capacity(size);
        for n in 0..size {
            let diag = &self.rows[n][n];
            if diag.is_zero() {
                return Err(Error::SingularTriangle { row: n });
            }
            let d_inv = diag.recip();
            // -(sum_{j=k}^{n-1} t[n][j] * inv[j][k]) / t[n][n]
            let mut row: Vec<Rat> = (0..n)
                .map(|k| -((k..n).fold(Rat::zero(), |acc, j| acc + &self.rows[n][j] * &inv[j][k]) * &d_inv))
                .collect();
            row.push(d_inv);
            inv.push(row);
        }
        Ok(Triangle { rows: inv })
    }

    /// `(t_{2n-k, n})` for `0 <= k <= n < size`.
    pub fn vertical_half(&self, size: usize) -> Result<Triangle> {
        self.require_rows(2 * size.max(1) - 1)?;
        Ok(Self::from_fn(size, |n, k| self.rows[2 * n - k][n].clone()))
    }

    /// `(t_{2n, n+k})` for `0 <= k <= n < size`.
    pub fn horizontal_half(&self, size: usize) -> Result<Triangle> {
        self.require_rows(2 * size.max(1) - 1)?;
        Ok(Self::from_fn(size, |n, k| self.rows[2 * n][n + k].clone()))
    }

    /// Row-wise reflection `t_{n, n-k}`.
    pub fn reversal(&self) -> Triangle {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().rev().cloned().collect())
            .collect();
        Triangle { rows }
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.is_integer())
    }

    /// First differing entry in row-major order. Triangles of different sizes
    /// are compared on their common rows.
    pub fn first_mismatch(&self, other: &Triangle) -> Option<Mismatch> {
        for (n, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            for k in 0..=n {
                if a[k] != b[k] {
                    return Some(Mismatch { n, k, left: a[k].clone(), right: b[k].clone() });
                }
            }
        }
        None
    }

    fn require_rows(&self, needed: usize) -> Result<()> {
        if self.size() < needed {
            return Err(Error::InsufficientRows { needed, available: self.size() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn pascal(size: usize) -> Triangle {
        Triangle::from_fn(size, |n, k| {
            let mut c = 1i64;
            for i in 0..k {
                c = c * (n - i) as i64 / (i as i64 + 1);
            }
            int(c)
        })
    }

    #[test]
    fn identity_inverts_to_identity() {
        assert_eq!(Triangle::identity(6).invert().unwrap(), Triangle::identity(6));
    }

    #[test]
    fn pascal_inverse_is_signed_pascal() {
        let inv = pascal(7).invert().unwrap();
        let signed = Triangle::from_fn(7, |n, k| {
            let p = pascal(7).get(n, k).unwrap();
            if (n - k) % 2 == 1 { -p } else { p }
        });
        assert_eq!(inv, signed);
    }

    #[test]
    fn printed_inverse_pair() {
        let t = Triangle::from_int_rows(&[
            &[1],
            &[-3, 1],
            &[1, -4, 1],
            &[1, 4, -5, 1],
            &[1, 0, 8, -6, 1],
            &[1, 0, -4, 13, -7, 1],
            &[1, 0, 0, -12, 19, -8, 1],
        ])
        .unwrap();
        let inv = Triangle::from_int_rows(&[
            &[1],
            &[3, 1],
            &[11, 4, 1],
            &[42, 16, 5, 1],
            &[163, 64, 22, 6, 1],
            &[638, 256, 93, 29, 7, 1],
            &[2510, 1024, 386, 130, 37, 8, 1],
        ])
        .unwrap();
        assert_eq!(t.invert().unwrap(), inv);
        let rev = t.reversal();
        assert_eq!(rev.rows()[2], [int(1), int(-4), int(1)]);
        assert_eq!(rev.rows()[3], [int(1), int(-5), int(4), int(1)]);
    }

    #[test]
    fn singular_triangle() {
        let t = Triangle::from_int_rows(&[&[1], &[2, 0]]).unwrap();
        assert_eq!(t.invert(), Err(Error::SingularTriangle { row: 1 }));
    }

    #[test]
    fn halves_of_pascal() {
        let h = pascal(13).horizontal_half(7).unwrap();
        let expected = Triangle::from_fn(7, |n, k| pascal(13).get(2 * n, n + k).unwrap());
        assert_eq!(h, expected);
        assert_eq!(h.rows()[6], [924, 792, 495, 220, 66, 12, 1].map(int));
        assert_eq!(Triangle::identity(11).vertical_half(6).unwrap(), Triangle::identity(6));
        assert!(matches!(
            pascal(5).vertical_half(4),
            Err(Error::InsufficientRows { needed: 7, available: 5 })
        ));
    }

    #[test]
    fn reversal_involution() {
        let t = Triangle::from_fn(6, |n, k| int((n * 10 + k) as i64));
        assert_eq!(t.reversal().reversal(), t);
        assert_eq!(pascal(8).reversal(), pascal(8));
    }

    #[test]
    fn malformed_rows_rejected() {
        let bad = alloc::vec![alloc::vec![int(1)], alloc::vec![int(1)]];
        assert!(matches!(Triangle::from_rows(bad), Err(Error::MalformedTriangle { row: 1, .. })));
    }

    #[test]
    fn mismatch_reports_first_entry() {
        let a = pascal(4);
        let b = Triangle::identity(4);
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.n, m.k), (1, 0));
        assert!(a.first_mismatch(&a).is_none());
    }
}
