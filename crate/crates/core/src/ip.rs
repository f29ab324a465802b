//! Knapsack feasibility and optimization through Gröbner test sets.

use crate::binomial::reduce_monomial;
use crate::buchberger::{truncated_buchberger_with_stats, BuchbergerStats, GroebnerBasis};
use crate::error::{check_len, Error, Result};
use crate::lattice::{kernel_basis, lll_reduce, saturate_truncated};
use crate::order::{weight_order, Grading, TermOrder, TruncatingPredicate, WalkContext};
use crate::vector::{IntMatrix, IntVec};
use crate::walk::{generic_walk_with_stats, WalkStats};

/// `a·x = b`, `x ≥ 0`, optionally maximizing `c·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IPInstance {
    pub a: IntVec,
    pub b: i64,
    pub c: Option<IntVec>,
}

impl IPInstance {
    pub fn new(a: IntVec, b: i64, c: Option<IntVec>) -> Result<Self> {
        check_positive(&a)?;
        if b < 0 {
            return Err(Error::Invalid("right-hand side must be nonnegative".into()));
        }
        if let Some(c) = &c {
            check_len(a.len(), c.len())?;
        }
        Ok(IPInstance { a, b, c })
    }

    pub fn nvars(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::new(vec![self.a.clone()], self.a.len()).expect("one row")
    }
}

fn check_positive(a: &[i64]) -> Result<()> {
    if a.is_empty() || a.iter().any(|&x| x < 1) {
        return Err(Error::Invalid("coefficients must be positive".into()));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Direct,
    Walk,
}

/// Generators `x_i − t^{a_i}` of the feasibility ideal, variables ordered
/// `(t, x_1, …, x_n)`.
pub fn feasibility_ideal(a: &[i64]) -> Result<Vec<IntVec>> {
    check_positive(a)?;
    let n = a.len();
    Ok((0..n)
        .map(|i| {
            let mut v = vec![0; n + 1];
            v[0] = -a[i];
            v[i + 1] = 1;
            IntVec::new(v)
        })
        .collect())
}

/// Grading `deg t = 1`, `deg x_i = a_i`.
pub fn feasibility_grading(a: &[i64]) -> Result<Grading> {
    check_positive(a)?;
    let mut row = vec![1];
    row.extend_from_slice(a);
    Grading::certified(IntMatrix::from_rows(vec![row])?)
}

fn unit_weight(n: usize, sign: i64) -> TermOrder {
    let mut c = vec![0; n + 1];
    c[0] = sign;
    weight_order(&c)
}

#[derive(Clone, Debug)]
pub struct Feasibility {
    pub solution: Option<IntVec>,
    pub basis: GroebnerBasis,
    pub walk: Option<WalkStats>,
    pub buchberger: Option<BuchbergerStats>,
}

pub fn solve_feasibility(a: &[i64], b: i64, method: Method, truncated: bool) -> Result<Option<IntVec>> {
    solve_feasibility_report(a, b, method, truncated).map(|r| r.solution)
}

pub fn solve_feasibility_report(a: &[i64], b: i64, method: Method, truncated: bool) -> Result<Feasibility> {
    if b < 0 {
        return Err(Error::Invalid("right-hand side must be nonnegative".into()));
    }
    let gens = feasibility_ideal(a)?;
    let grading = feasibility_grading(a)?;
    let n = a.len();
    let omega = if truncated { TruncatingPredicate::rhs_bound(b)? } else { TruncatingPredicate::All };
    let tau = unit_weight(n, 1);
    let (basis, walk, buchberger) = match method {
        Method::Direct => {
            let (gb, s) = truncated_buchberger_with_stats(&gens, &tau, &omega, &grading)?;
            (gb, None, Some(s))
        }
        Method::Walk => {
            // x_i − t^{a_i} is already a Gröbner basis over σ = (−1, 0, …, 0)
            let ctx = WalkContext::new(unit_weight(n, -1), tau.clone())?;
            let (gb, s) = generic_walk_with_stats(&gens, &ctx, &omega, &grading)?;
            (gb, Some(s), None)
        }
    };
    let mut tb = vec![0; n + 1];
    tb[0] = b;
    let nf = reduce_monomial(&IntVec::new(tb), basis.elements(), &tau)?;
    let solution = (nf[0] == 0).then(|| IntVec::from(&nf[1..]));
    Ok(Feasibility { solution, basis, walk, buchberger })
}

/// Reduced basis of the toric ideal `I_A` over `ord`.
pub fn toric_ideal(a: &IntMatrix, ord: &TermOrder) -> Result<GroebnerBasis> {
    toric_ideal_truncated(a, ord, &TruncatingPredicate::All).map(|(gb, _)| gb)
}

pub fn toric_ideal_truncated(
    a: &IntMatrix,
    ord: &TermOrder,
    omega: &TruncatingPredicate,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    check_len(a.ncols(), ord.nvars())?;
    let grading = Grading::certified(a.clone())?;
    let kernel = kernel_basis(a)?;
    let reduced = lll_reduce(&kernel)?;
    saturate_truncated(reduced.basis.vectors(), ord, omega, &grading)
}

/// Reduced basis of `I_A` over `≺_{−c}`. Reducing any feasible point by it
/// yields an optimum of its fiber, for every fiber inside the truncation.
#[derive(Clone, Debug)]
pub struct TestSet {
    order: TermOrder,
    basis: GroebnerBasis,
    stats: BuchbergerStats,
}

impl TestSet {
    pub fn new(a: &IntMatrix, c: &[i64], omega: &TruncatingPredicate) -> Result<Self> {
        check_len(a.ncols(), c.len())?;
        let neg: Vec<i64> = c.iter().map(|&x| x.checked_neg().ok_or(Error::Overflow)).collect::<Result<_>>()?;
        let order = weight_order(&neg);
        let (basis, stats) = toric_ideal_truncated(a, &order, omega)?;
        Ok(TestSet { order, basis, stats })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn stats(&self) -> &BuchbergerStats {
        &self.stats
    }

    /// The `≺_{−c}`-least point of the fiber of `x0`.
    pub fn improve(&self, x0: &IntVec) -> Result<IntVec> {
        reduce_monomial(x0, self.basis.elements(), &self.order)
    }
}

/// The `≺_{−c}`-least point of the fiber of `x0`; it maximizes `c·x`.
pub fn optimize(a: &IntMatrix, b: &[i64], c: &[i64], x0: &IntVec, truncated: bool) -> Result<IntVec> {
    let n = a.ncols();
    check_len(n, c.len())?;
    check_len(n, x0.len())?;
    check_len(a.nrows(), b.len())?;
    if x0.iter().any(|&x| x < 0) || a.mul_vec(x0)?.as_slice() != b {
        return Err(Error::Invalid("starting point is not feasible".into()));
    }
    let omega = if truncated {
        if b.len() != 1 {
            return Err(Error::Invalid("right-hand-side truncation needs a single constraint row".into()));
        }
        TruncatingPredicate::rhs_bound(b[0])?
    } else {
        TruncatingPredicate::All
    };
    TestSet::new(a, c, &omega)?.improve(x0)
}
