//! Term orders, gradings, truncating predicates and the facet preorder.
//!
//! A [`TermOrder`] is a `k × n` integer matrix of rank `n`; monomials are
//! compared by the sign of the first nonzero entry of `M·(u − v)`. Orders
//! are not required to be well-orders: on a positively graded ring every
//! graded piece is finite, which is all the engines need.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::lp::{self, Constraint};
use crate::vector::{IntMatrix, IntVec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    matrix: IntMatrix,
}

impl TermOrder {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let n = matrix.ncols();
        let rank = rank(matrix.rows());
        if rank != n {
            return Err(Error::RankDeficient { rank, n });
        }
        Ok(TermOrder { matrix })
    }

    /// `c` refined by the tie-break rows `−e_1, …, −e_n`, which realize the
    /// reverse lexicographic order with `x_1 ≺ ⋯ ≺ x_n`.
    pub fn weight(c: &[i64]) -> Self {
        let n = c.len();
        let mut rows = Vec::with_capacity(n + 1);
        rows.push(IntVec::from(c));
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = -1;
            rows.push(IntVec::new(r));
        }
        TermOrder { matrix: IntMatrix::new(rows, n).expect("rows have length n") }
    }

    /// The order `ω` refined by `self`, i.e. `≺_ω`.
    pub fn refined_by(&self, omega: &[i64]) -> Result<Self> {
        check_len(self.nvars(), omega.len())?;
        let mut rows = vec![IntVec::from(omega)];
        rows.extend(self.matrix.rows().iter().cloned());
        Ok(TermOrder { matrix: IntMatrix::new(rows, self.nvars())? })
    }

    pub fn nvars(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Sign of the first nonzero entry of `M·w`; `Equal` iff `w = 0`.
    pub fn sign(&self, w: &[i64]) -> Ordering {
        for row in self.matrix.rows() {
            let s = match row.dot_i128(w) {
                Some(d) => d.cmp(&0),
                None => big_dot(row, w).cmp(&BigInt::zero()),
            };
            if s != Ordering::Equal {
                return s;
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, u: &[i64], v: &[i64]) -> Result<Ordering> {
        check_len(self.nvars(), u.len())?;
        check_len(self.nvars(), v.len())?;
        Ok(self.cmp_unchecked(u, v))
    }

    pub(crate) fn cmp_unchecked(&self, u: &[i64], v: &[i64]) -> Ordering {
        for row in self.matrix.rows() {
            let mut acc: Option<i128> = Some(0);
            for ((&r, &a), &b) in row.iter().zip(u).zip(v) {
                acc = acc.and_then(|s| {
                    (r as i128).checked_mul(a as i128 - b as i128).and_then(|p| s.checked_add(p))
                });
            }
            let s = match acc {
                Some(d) => d.cmp(&0),
                None => (big_dot(row, u) - big_dot(row, v)).cmp(&BigInt::zero()),
            };
            if s != Ordering::Equal {
                return s;
            }
        }
        Ordering::Equal
    }

    /// Returns `w` or `−w`, whichever has `x^{w⁺} ≻ x^{w⁻}`.
    pub fn orient(&self, w: &IntVec) -> Result<IntVec> {
        check_len(self.nvars(), w.len())?;
        match self.sign(w) {
            Ordering::Equal => Err(Error::ZeroBinomial),
            Ordering::Greater => Ok(w.clone()),
            Ordering::Less => w.checked_neg(),
        }
    }
}

fn big_dot(a: &[i64], b: &[i64]) -> BigInt {
    a.iter().zip(b).map(|(&x, &y)| BigInt::from(x) * BigInt::from(y)).sum()
}

/// Rank over ℚ by exact elimination.
pub(crate) fn rank(rows: &[IntVec]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn weight_order(c: &[i64]) -> TermOrder {
    TermOrder::weight(c)
}

pub fn compare(ord: &TermOrder, u: &[i64], v: &[i64]) -> Result<Ordering> {
    ord.compare(u, v)
}

pub fn orient(ord: &TermOrder, w: &IntVec) -> Result<IntVec> {
    ord.orient(w)
}

/// A `d × n` grading matrix with an optional positivity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    matrix: IntMatrix,
    certificate: Option<Vec<BigRational>>,
    positive_weight: Option<IntVec>,
}

impl Grading {
    pub fn new(matrix: IntMatrix) -> Self {
        Grading { matrix, certificate: None, positive_weight: None }
    }

    /// Builds the grading and certifies positivity, failing if none exists.
    pub fn certified(matrix: IntMatrix) -> Result<Self> {
        let mut g = Grading::new(matrix);
        g.certify()?;
        Ok(g)
    }

    pub fn certify(&mut self) -> Result<&[BigRational]> {
        if self.certificate.is_none() {
            let h = validate_positive_grading(self)?;
            let a = &self.matrix;
            let weights: Vec<BigRational> = (0..a.ncols())
                .map(|j| {
                    h.iter()
                        .zip(a.rows())
                        .map(|(hi, r)| hi * BigRational::from_integer(r[j].into()))
                        .sum()
                })
                .collect();
            self.positive_weight = Some(lp::to_primitive_integer(&weights)?);
            self.certificate = Some(h);
        }
        Ok(self.certificate.as_deref().expect("just set"))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn nvars(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn certificate(&self) -> Option<&[BigRational]> {
        self.certificate.as_deref()
    }

    /// Integer weight `p` proportional to `hᵀA`, strictly positive on every
    /// variable. Present once the grading is certified.
    pub fn positive_weight(&self) -> Option<&IntVec> {
        self.positive_weight.as_ref()
    }

    /// Degree `A·m` of a monomial exponent.
    pub fn monomial_degree(&self, m: &[i64]) -> Result<IntVec> {
        self.matrix.mul_vec(m)
    }

    /// Degree of the binomial `bin(w)`, i.e. `A·w⁺`; errors unless `A·w = 0`.
    /// A nonnegative `w` is read as a monomial exponent.
    pub fn degree(&self, w: &IntVec) -> Result<IntVec> {
        check_len(self.nvars(), w.len())?;
        if w.iter().all(|&x| x >= 0) {
            return self.matrix.mul_vec(w);
        }
        let dp = self.matrix.mul_vec(&w.pos())?;
        let dn = self.matrix.mul_vec(&w.neg_part())?;
        if dp != dn {
            return Err(Error::Inhomogeneous);
        }
        Ok(dp)
    }

    pub fn is_homogeneous(&self, w: &[i64]) -> bool {
        self.matrix.rows().iter().all(|r| r.dot_i128(w) == Some(0))
    }
}

pub fn degree(g: &Grading, w: &IntVec) -> Result<IntVec> {
    g.degree(w)
}

/// Finds `h` with `hᵀA > 0` componentwise by exact linear programming.
pub fn validate_positive_grading(g: &Grading) -> Result<Vec<BigRational>> {
    let a = g.matrix();
    let d = a.nrows();
    if let Some(i) = a.rows().iter().position(|r| r.iter().all(|&x| x > 0)) {
        let mut h = vec![BigRational::zero(); d];
        h[i] = BigRational::one();
        return Ok(h);
    }
    let constraints: Vec<Constraint> =
        (0..a.ncols()).map(|j| Constraint::ge(&a.column(j), 1)).collect();
    let h = lp::feasible_point(d, &constraints).ok_or(Error::NotPositive)?;
    debug_assert!((0..a.ncols()).all(|j| {
        let s: BigRational = h
            .iter()
            .zip(a.rows())
            .map(|(x, r)| x * BigRational::from_integer(r[j].into()))
            .sum();
        s.is_positive()
    }));
    Ok(h)
}

/// Membership test for a truncating set of degrees `Ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum TruncatingPredicate {
    #[default]
    All,
    /// `h·s < bound`, or `h·s ≤ bound` when inclusive. `h ≥ 0`.
    LinearBound { weights: IntVec, bound: i64, inclusive: bool },
    /// `s ≤ b` for a one-row grading.
    RhsBound(i64),
}

impl TruncatingPredicate {
    pub fn linear_bound(weights: IntVec, bound: i64, inclusive: bool) -> Result<Self> {
        if weights.iter().any(|&x| x < 0) {
            return Err(Error::Invalid("linear bound weights must be nonnegative".into()));
        }
        Ok(TruncatingPredicate::LinearBound { weights, bound, inclusive })
    }

    /// Rational `h` and `bound`, scaled to a common denominator.
    pub fn linear_bound_rational(h: &[BigRational], bound: &BigRational, inclusive: bool) -> Result<Self> {
        let mut all: Vec<BigRational> = h.to_vec();
        all.push(bound.clone());
        let lcm = all
            .iter()
            .fold(BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        let scaled = all
            .iter()
            .map(|x| i64::try_from((x * &lcm).to_integer()).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let (w, b) = scaled.split_at(h.len());
        Self::linear_bound(IntVec::from(w), b[0], inclusive)
    }

    pub fn rhs_bound(b: i64) -> Result<Self> {
        if b < 0 {
            return Err(Error::Invalid("right-hand side must be nonnegative".into()));
        }
        Ok(TruncatingPredicate::RhsBound(b))
    }

    pub fn is_all(&self) -> bool {
        matches!(self, TruncatingPredicate::All)
    }

    pub fn contains(&self, s: &[i64]) -> Result<bool> {
        match self {
            TruncatingPredicate::All => Ok(true),
            TruncatingPredicate::LinearBound { weights, bound, inclusive } => {
                check_len(weights.len(), s.len())?;
                let v = weights.dot_i128(s).ok_or(Error::Overflow)?;
                let b = *bound as i128;
                Ok(if *inclusive { v <= b } else { v < b })
            }
            TruncatingPredicate::RhsBound(b) => {
                if s.len() != 1 {
                    return Err(Error::DimensionMismatch { expected: 1, got: s.len() });
                }
                Ok(s[0] <= *b)
            }
        }
    }

    /// Checks that the predicate is truncating for the degree semigroup of
    /// `g` (every variable has nonnegative weight under the predicate).
    pub fn check_grading(&self, g: &Grading) -> Result<()> {
        let a = g.matrix();
        match self {
            TruncatingPredicate::All => Ok(()),
            TruncatingPredicate::LinearBound { weights, .. } => {
                check_len(a.nrows(), weights.len())?;
                for j in 0..a.ncols() {
                    if weights.dot_i128(&a.column(j)).ok_or(Error::Overflow)? < 0 {
                        return Err(Error::Invalid(
                            "linear bound is not truncating for this grading".into(),
                        ));
                    }
                }
                Ok(())
            }
            TruncatingPredicate::RhsBound(_) => {
                if a.nrows() != 1 {
                    return Err(Error::DimensionMismatch { expected: 1, got: a.nrows() });
                }
                if a.row(0).iter().any(|&x| x < 0) {
                    return Err(Error::Invalid("rhs bound needs a nonnegative grading row".into()));
                }
                Ok(())
            }
        }
    }

    /// Membership of the degree of the monomial `x^m`.
    pub fn contains_monomial(&self, g: &Grading, m: &[i64]) -> Result<bool> {
        if self.is_all() {
            return Ok(true);
        }
        self.contains(&g.monomial_degree(m)?)
    }
}

pub fn omega_contains(p: &TruncatingPredicate, s: &[i64]) -> Result<bool> {
    p.contains(s)
}

/// Source and target orders of a walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkContext {
    pub source: TermOrder,
    pub target: TermOrder,
}

impl WalkContext {
    pub fn new(source: TermOrder, target: TermOrder) -> Result<Self> {
        check_len(source.nvars(), target.nvars())?;
        Ok(WalkContext { source, target })
    }

    pub fn nvars(&self) -> usize {
        self.source.nvars()
    }

    /// The facet preorder: compares `T·(u vᵀ − v uᵀ)` against zero, rows
    /// scanned top-down and each row compared through `S`.
    pub fn facet_compare(&self, u: &[i64], v: &[i64]) -> Result<Ordering> {
        check_len(self.nvars(), u.len())?;
        check_len(self.nvars(), v.len())?;
        Ok(self
            .facet_compare_i128(u, v)
            .unwrap_or_else(|| self.facet_compare_big(u, v)))
    }

    fn facet_compare_i128(&self, u: &[i64], v: &[i64]) -> Option<Ordering> {
        let n = u.len();
        let mut d = vec![0i128; n];
        for t in self.target.matrix().rows() {
            let tu = t.dot_i128(u)?;
            let tv = t.dot_i128(v)?;
            let mut nonzero = false;
            for j in 0..n {
                let a = tu.checked_mul(v[j] as i128)?;
                let b = tv.checked_mul(u[j] as i128)?;
                d[j] = a.checked_sub(b)?;
                nonzero |= d[j] != 0;
            }
            if !nonzero {
                continue;
            }
            for s in self.source.matrix().rows() {
                let mut acc: i128 = 0;
                for j in 0..n {
                    acc = acc.checked_add((s[j] as i128).checked_mul(d[j])?)?;
                }
                if acc != 0 {
                    return Some(acc.cmp(&0));
                }
            }
            unreachable!("source order has full rank");
        }
        Some(Ordering::Equal)
    }

    fn facet_compare_big(&self, u: &[i64], v: &[i64]) -> Ordering {
        for t in self.target.matrix().rows() {
            let tu = big_dot(t, u);
            let tv = big_dot(t, v);
            let d: Vec<BigInt> = u
                .iter()
                .zip(v)
                .map(|(&uj, &vj)| &tu * BigInt::from(vj) - &tv * BigInt::from(uj))
                .collect();
            if d.iter().all(|x| x.is_zero()) {
                continue;
            }
            for s in self.source.matrix().rows() {
                let acc: BigInt = s.iter().zip(&d).map(|(&x, y)| BigInt::from(x) * y).sum();
                if !acc.is_zero() {
                    return acc.cmp(&BigInt::zero());
                }
            }
        }
        Ordering::Equal
    }

    /// Total order on facet candidates: the facet preorder, with parallel
    /// vectors broken by raw lexicographic order.
    pub fn facet_order(&self, u: &IntVec, v: &IntVec) -> Ordering {
        self.facet_compare(u, v)
            .expect("candidates share the context dimension")
            .then_with(|| u.cmp(v))
    }

    /// Source-positive and target-negative: a facet still to be crossed.
    pub fn is_candidate(&self, w: &[i64]) -> bool {
        self.source.sign(w) == Ordering::Greater && self.target.sign(w) == Ordering::Less
    }
}

pub fn facet_compare(ctx: &WalkContext, u: &[i64], v: &[i64]) -> Result<Ordering> {
    ctx.facet_compare(u, v)
}

pub fn is_candidate(ctx: &WalkContext, w: &[i64]) -> bool {
    ctx.is_candidate(w)
}
