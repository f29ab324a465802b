//! Binomials as integer vectors.
//!
//! `bin(w) = x^{w⁺} − x^{w⁻}`. Subtracting vectors is saturated arithmetic
//! on binomials: any common monomial factor of the two terms cancels.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::order::{Grading, TermOrder};
use crate::vector::{pos_divides_neg, pos_divides_pos, pos_supports_meet, IntVec};

/// Upper bound on single-reduction steps before we give up.
pub const REDUCTION_STEP_LIMIT: usize = 50_000_000;

/// A nonzero vector stored so that `x^{w⁺}` is the initial term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Binomial(IntVec);

impl Binomial {
    pub fn oriented(ord: &TermOrder, w: &IntVec) -> Result<Self> {
        ord.orient(w).map(Binomial)
    }

    /// Wraps `w` as is; the caller vouches for its orientation.
    pub fn from_oriented(w: IntVec) -> Self {
        Binomial(w)
    }

    pub fn vector(&self) -> &IntVec {
        &self.0
    }

    pub fn into_vector(self) -> IntVec {
        self.0
    }

    /// Exponent of the initial monomial, `mon(w) = x^{w⁺}`.
    pub fn head(&self) -> IntVec {
        self.0.pos()
    }

    pub fn tail(&self) -> IntVec {
        self.0.neg_part()
    }

    pub fn is_oriented(&self, ord: &TermOrder) -> bool {
        ord.sign(&self.0) == Ordering::Greater
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl AsRef<[i64]> for Binomial {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

/// The saturated S-binomial `u − v`, or `None` when the heads are coprime.
pub fn spair(u: &Binomial, v: &Binomial) -> Result<Option<IntVec>> {
    if !pos_supports_meet(&u.0, &v.0) {
        return Ok(None);
    }
    u.0.checked_sub(&v.0).map(Some)
}

/// Degree `A·(u⁺ ∨ v⁺)` of the S-pair of `u` and `v`.
pub fn spair_degree(g: &Grading, u: &[i64], v: &[i64]) -> Result<IntVec> {
    let lcm: Vec<i64> = u.iter().zip(v).map(|(&a, &b)| a.max(0).max(b.max(0))).collect();
    g.monomial_degree(&lcm)
}

/// Fully reduces `w` modulo `gens`: head terms first, then the tail.
/// Returns the reduced vector oriented under `ord` (possibly zero).
pub fn normal_form<B: AsRef<[i64]>>(w: &IntVec, gens: &[B], ord: &TermOrder) -> Result<IntVec> {
    let mut steps = 0;
    normal_form_counted(w, gens, ord, &mut steps)
}

pub(crate) fn normal_form_counted<B: AsRef<[i64]>>(
    w: &IntVec,
    gens: &[B],
    ord: &TermOrder,
    steps: &mut usize,
) -> Result<IntVec> {
    let mut w = w.clone();
    let mut local = 0usize;
    loop {
        match ord.sign(&w) {
            Ordering::Equal => return Ok(w),
            Ordering::Less => w = w.checked_neg()?,
            Ordering::Greater => {}
        }
        local += 1;
        if local > REDUCTION_STEP_LIMIT {
            return Err(Error::NonTermination(REDUCTION_STEP_LIMIT));
        }
        if let Some(g) = gens.iter().find(|g| pos_divides_pos(g.as_ref(), &w)) {
            // x^{w⁺} is replaced by x^{w⁺ − g⁺ + g⁻}, strictly smaller iff g is oriented
            debug_assert_eq!(ord.sign(g.as_ref()), Ordering::Greater);
            w = w.checked_sub(&IntVec::from(g.as_ref()))?;
            *steps += 1;
            continue;
        }
        if let Some(g) = gens.iter().find(|g| pos_divides_neg(g.as_ref(), &w)) {
            w = w.checked_add(&IntVec::from(g.as_ref()))?;
            *steps += 1;
            continue;
        }
        return Ok(w);
    }
}

/// Reduces only the initial term until no head of `gens` divides it.
/// Returns the oriented remainder (possibly zero).
pub(crate) fn head_reduce<B: AsRef<[i64]>>(
    w: &IntVec,
    gens: &[B],
    ord: &TermOrder,
    steps: &mut usize,
) -> Result<IntVec> {
    let mut w = w.clone();
    let mut local = 0usize;
    loop {
        match ord.sign(&w) {
            Ordering::Equal => return Ok(w),
            Ordering::Less => w = w.checked_neg()?,
            Ordering::Greater => {}
        }
        let Some(g) = gens.iter().find(|g| pos_divides_pos(g.as_ref(), &w)) else {
            return Ok(w);
        };
        w = w.checked_sub(&IntVec::from(g.as_ref()))?;
        *steps += 1;
        local += 1;
        if local > REDUCTION_STEP_LIMIT {
            return Err(Error::NonTermination(REDUCTION_STEP_LIMIT));
        }
    }
}

/// Reduces the monomial `x^m` to its standard monomial modulo `gens`.
pub fn reduce_monomial<B: AsRef<[i64]>>(m: &IntVec, gens: &[B], ord: &TermOrder) -> Result<IntVec> {
    let mut steps = 0;
    reduce_monomial_counted(m, gens, ord, &mut steps)
}

pub(crate) fn reduce_monomial_counted<B: AsRef<[i64]>>(
    m: &IntVec,
    gens: &[B],
    ord: &TermOrder,
    steps: &mut usize,
) -> Result<IntVec> {
    if m.iter().any(|&x| x < 0) {
        return Err(Error::Invalid("monomial exponent must be nonnegative".into()));
    }
    let mut m = m.clone();
    let mut local = 0usize;
    while let Some(g) = gens.iter().find(|g| pos_divides_pos(g.as_ref(), &m)) {
        let next = m.checked_sub(&IntVec::from(g.as_ref()))?;
        debug_assert_eq!(ord.cmp_unchecked(&next, &m), Ordering::Less);
        m = next;
        *steps += 1;
        local += 1;
        if local > REDUCTION_STEP_LIMIT {
            return Err(Error::NonTermination(REDUCTION_STEP_LIMIT));
        }
    }
    Ok(m)
}
