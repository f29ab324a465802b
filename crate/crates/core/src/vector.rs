//! Dense integer vectors with checked arithmetic.
//!
//! An [`IntVec`] plays three roles: exponent vectors of monomials (all
//! entries nonnegative), exponent differences `w = w⁺ − w⁻` encoding the
//! binomial `x^{w⁺} − x^{w⁻}`, and weight or degree vectors.

use std::fmt;
use std::ops::Deref;

use crate::error::{check_len, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec(Vec<i64>);

impl IntVec {
    pub fn new(v: Vec<i64>) -> Self {
        IntVec(v)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        IntVec(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Positive part `w⁺`.
    pub fn pos(&self) -> IntVec {
        IntVec(self.0.iter().map(|&x| x.max(0)).collect())
    }

    /// Negative part `w⁻`, so that `w = w⁺ − w⁻`.
    pub fn neg_part(&self) -> IntVec {
        IntVec(self.0.iter().map(|&x| if x < 0 { -x } else { 0 }).collect())
    }

    pub fn checked_neg(&self) -> Result<IntVec> {
        self.0
            .iter()
            .map(|&x| x.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntVec> {
        self.0
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    /// Exact dot product, `None` on i128 overflow.
    pub fn dot_i128(&self, other: &[i64]) -> Option<i128> {
        debug_assert_eq!(self.len(), other.len());
        let mut acc: i128 = 0;
        for (&a, &b) in self.0.iter().zip(other) {
            acc = acc.checked_add((a as i128) * (b as i128))?;
        }
        Some(acc)
    }

    pub fn dot(&self, other: &[i64]) -> Result<i64> {
        check_len(self.len(), other.len())?;
        let d = self.dot_i128(other).ok_or(Error::Overflow)?;
        i64::try_from(d).map_err(|_| Error::Overflow)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &IntVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (least common multiple of monomials).
    pub fn join(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn first_nonzero(&self) -> Option<i64> {
        self.0.iter().copied().find(|&x| x != 0)
    }
}

/// Does `a⁺ ≤ b⁺` hold.
pub(crate) fn pos_divides_pos(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x.max(0) <= y.max(0))
}

/// Does `a⁺ ≤ b⁻` hold.
pub(crate) fn pos_divides_neg(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x.max(0) <= (-y).max(0))
}

/// `a⁺ ∧ b⁺ ≠ 0`: the positive supports meet.
pub(crate) fn pos_supports_meet(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x > 0 && y > 0)
}

impl Deref for IntVec {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl AsRef<[i64]> for IntVec {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl From<&[i64]> for IntVec {
    fn from(v: &[i64]) -> Self {
        IntVec(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntVec {
    fn from(v: [i64; N]) -> Self {
        IntVec(v.to_vec())
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<IntVec>,
    ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<IntVec>, ncols: usize) -> Result<Self> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(IntMatrix { rows, ncols })
    }

    pub fn from_rows<R: Into<IntVec>>(rows: Vec<R>) -> Result<Self> {
        let rows: Vec<IntVec> = rows.into_iter().map(Into::into).collect();
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::new(rows, ncols)
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVec::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVec {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<IntVec> {
        check_len(self.ncols, v.len())?;
        self.rows
            .iter()
            .map(|r| r.dot(v))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }
}
