//! Integer lattices: Hermite normal forms, kernels, exact LLL and the
//! saturation `I_L = I_B : (x_1 ⋯ x_n)^∞`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::buchberger::{self, BuchbergerStats, GroebnerBasis};
use crate::error::{check_len, Error, Result};
use crate::order::{rank, Grading, TermOrder, TruncatingPredicate};
use crate::vector::{IntMatrix, IntVec};

/// Linearly independent integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis(Vec<IntVec>);

impl LatticeBasis {
    pub fn new(vectors: Vec<IntVec>) -> Result<Self> {
        if let Some(first) = vectors.first() {
            for v in &vectors {
                check_len(first.len(), v.len())?;
            }
        }
        if rank(&vectors) != vectors.len() {
            return Err(Error::DependentBasis);
        }
        Ok(LatticeBasis(vectors))
    }

    pub fn vectors(&self) -> &[IntVec] {
        &self.0
    }

    pub fn into_vectors(self) -> Vec<IntVec> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

fn to_big(rows: &[IntVec]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn to_i64_row(r: &[BigInt]) -> Result<IntVec> {
    r.iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(IntVec::new)
}

fn sub_mul(target: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Integer row echelon form by unimodular row operations, restricted to the
/// first `ncols` columns. Returns the rank (number of pivot rows).
fn echelonize(m: &mut [Vec<BigInt>], ncols: usize, pivots: &mut Vec<usize>) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let best = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let Some(p) = best else { break };
            m.swap(r, p);
            let mut done = true;
            for i in (r + 1)..m.len() {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    let (top, rest) = m.split_at_mut(i);
                    sub_mul(&mut rest[0], &top[r], &q);
                    if !rest[0][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    r
}

/// Row Hermite normal form of the lattice spanned by `rows`: positive
/// pivots, entries above each pivot in `[0, pivot)`, zero rows dropped.
/// Two generating sets span the same lattice iff their HNFs agree.
pub fn hermite_normal_form(rows: &[IntVec]) -> Result<Vec<IntVec>> {
    let Some(first) = rows.first() else { return Ok(Vec::new()) };
    let n = first.len();
    for r in rows {
        check_len(n, r.len())?;
    }
    let mut m = to_big(rows);
    let mut pivots = Vec::new();
    let rank = echelonize(&mut m, n, &mut pivots);
    m.truncate(rank);
    for (i, &c) in pivots.iter().enumerate() {
        for k in 0..i {
            let q = m[k][c].div_floor(&m[i][c]);
            if !q.is_zero() {
                let (top, rest) = m.split_at_mut(i);
                sub_mul(&mut top[k], &rest[0], &q);
            }
        }
    }
    m.iter().map(|r| to_i64_row(r)).collect()
}

/// Basis of `{v ∈ ℤⁿ | A v = 0}`, in Hermite normal form.
pub fn kernel_basis(a: &IntMatrix) -> Result<LatticeBasis> {
    let (d, n) = (a.nrows(), a.ncols());
    // rows: [Aᵀ | I_n]
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..d).map(|i| BigInt::from(a.row(i)[j])).collect();
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let r = echelonize(&mut m, d, &mut pivots);
    let kernel: Vec<IntVec> = m[r..]
        .iter()
        .map(|row| to_i64_row(&row[d..]))
        .collect::<Result<_>>()?;
    let hnf = hermite_normal_form(&kernel)?;
    debug_assert!(hnf.iter().all(|v| a.mul_vec(v).map(|x| x.is_zero()).unwrap_or(false)));
    LatticeBasis::new(hnf)
}

#[derive(Clone, Debug)]
pub struct LllOutput {
    pub basis: LatticeBasis,
    /// Unimodular `U` with `output = U · input` (rows).
    pub transform: Vec<IntVec>,
    pub swaps: usize,
}

pub fn default_delta() -> BigRational {
    BigRational::new(3.into(), 4.into())
}

pub fn lll_reduce(b: &LatticeBasis) -> Result<LllOutput> {
    lll_reduce_with(b, &default_delta())
}

struct GramSchmidt {
    mu: Vec<Vec<BigRational>>,
    norms: Vec<BigRational>,
}

fn gram_schmidt(b: &[Vec<BigInt>]) -> GramSchmidt {
    let m = b.len();
    let q: Vec<Vec<BigRational>> =
        b.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut mu = vec![vec![BigRational::zero(); m]; m];
    let mut norms = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = q[i].clone();
        for j in 0..i {
            if norms[j] == BigRational::zero() {
                continue;
            }
            let dot: BigRational = q[i].iter().zip(&star[j]).map(|(a, b)| a * b).sum();
            mu[i][j] = dot / &norms[j];
            for (x, s) in v.iter_mut().zip(&star[j]) {
                *x -= &mu[i][j] * s;
            }
        }
        norms.push(v.iter().map(|x| x * x).sum());
        star.push(v);
    }
    GramSchmidt { mu, norms }
}

fn round(x: &BigRational) -> BigInt {
    (x + BigRational::new(1.into(), 2.into())).floor().to_integer()
}

/// LLL reduction with exact rational Gram–Schmidt data.
pub fn lll_reduce_with(b: &LatticeBasis, delta: &BigRational) -> Result<LllOutput> {
    let m = b.rank();
    if m == 0 {
        return Ok(LllOutput { basis: b.clone(), transform: Vec::new(), swaps: 0 });
    }
    let quarter = BigRational::new(1.into(), 4.into());
    if *delta <= quarter || *delta > BigRational::one() {
        return Err(Error::Invalid("LLL parameter must lie in (1/4, 1]".into()));
    }
    let mut basis = to_big(b.vectors());
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut gs = gram_schmidt(&basis);
    if gs.norms.iter().any(|x| x.is_zero()) {
        return Err(Error::DependentBasis);
    }
    let mut swaps = 0;
    let mut k = 1;
    while k < m {
        for j in (0..k).rev() {
            let q = round(&gs.mu[k][j]);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = basis.split_at_mut(k);
            sub_mul(&mut rest[0], &top[j], &q);
            let (top, rest) = u.split_at_mut(k);
            sub_mul(&mut rest[0], &top[j], &q);
            let qr = BigRational::from_integer(q);
            for l in 0..j {
                let t = &qr * &gs.mu[j][l];
                gs.mu[k][l] -= t;
            }
            gs.mu[k][j] -= &qr;
        }
        let mu = &gs.mu[k][k - 1];
        if gs.norms[k] >= (delta - mu * mu) * &gs.norms[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            u.swap(k, k - 1);
            swaps += 1;
            gs = gram_schmidt(&basis);
            k = (k - 1).max(1);
        }
    }
    let vectors = basis.iter().map(|r| to_i64_row(r)).collect::<Result<Vec<_>>>()?;
    let transform = u.iter().map(|r| to_i64_row(r)).collect::<Result<Vec<_>>>()?;
    Ok(LllOutput { basis: LatticeBasis(vectors), transform, swaps })
}

/// `|μ_ij| ≤ 1/2` for all `j < i`.
pub fn is_size_reduced(b: &[IntVec]) -> bool {
    let gs = gram_schmidt(&to_big(b));
    let half = BigRational::new(1.into(), 2.into());
    (0..b.len()).all(|i| (0..i).all(|j| gs.mu[i][j].abs() <= half))
}

/// Lovász condition `‖b*_k‖² ≥ (δ − μ²_{k,k−1}) ‖b*_{k−1}‖²`.
pub fn satisfies_lovasz(b: &[IntVec], delta: &BigRational) -> bool {
    let gs = gram_schmidt(&to_big(b));
    (1..b.len()).all(|k| {
        let mu = &gs.mu[k][k - 1];
        gs.norms[k] >= (delta - mu * mu) * &gs.norms[k - 1]
    })
}

pub fn same_lattice(a: &[IntVec], b: &[IntVec]) -> Result<bool> {
    Ok(hermite_normal_form(a)? == hermite_normal_form(b)?)
}

/// Determinant of a square integer matrix (Bareiss).
pub fn determinant(rows: &[IntVec]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = to_big(rows);
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Reduced Gröbner basis of the lattice ideal `I_L` over `ord`, where `L` is
/// the lattice spanned by `b`.
pub fn saturate(b: &[IntVec], ord: &TermOrder, g: &Grading) -> Result<GroebnerBasis> {
    saturate_truncated(b, ord, &TruncatingPredicate::All, g).map(|(gb, _)| gb)
}

/// Saturation followed by a truncated final run. The saturation steps
/// themselves are never truncated.
pub fn saturate_truncated(
    b: &[IntVec],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    g: &Grading,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let n = ord.nvars();
    check_len(n, g.nvars())?;
    for v in b {
        check_len(n, v.len())?;
    }
    let has_positive = b
        .iter()
        .any(|v| v.iter().all(|&x| x > 0) || v.iter().all(|&x| x < 0));
    let mut stats = BuchbergerStats::default();
    if has_positive {
        let (gb, s) = buchberger::truncated_buchberger_with_stats(b, ord, omega, g)?;
        return Ok((gb, s));
    }
    let mut grading = g.clone();
    match grading.certify() {
        Ok(_) => {}
        Err(Error::NotPositive) => {
            return Err(Error::CannotCertifyTermination(
                "grading is not positive and no generator is a positive vector".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    for v in b {
        if !grading.is_homogeneous(v) {
            return Err(Error::Inhomogeneous);
        }
    }
    let weight = grading.positive_weight().expect("certified").clone();
    let all = TruncatingPredicate::All;
    let mut current: Vec<IntVec> = b.iter().filter(|v| !v.is_zero()).cloned().collect();
    for i in 0..n {
        // the variable x_i has to be a nonzerodivisor modulo the current ideal;
        // revlex with x_i cheapest makes x_i | head imply x_i | tail
        let ord_i = revlex_last(&weight, i);
        current = buchberger::reduced_basis(&current, &ord_i, &all, &grading, &weight, &mut stats)?;
    }
    let (gb, s) = buchberger::truncated_buchberger_with_stats(&current, ord, omega, &grading)?;
    stats.pairs += s.pairs;
    stats.reductions += s.reductions;
    stats.max_size = stats.max_size.max(s.max_size);
    stats.passes += s.passes;
    Ok((gb, stats))
}

/// Graded reverse lexicographic order (grading by `weight`) in which
/// `x_last` is the cheapest variable.
pub(crate) fn revlex_last(weight: &IntVec, last: usize) -> TermOrder {
    let n = weight.len();
    let mut rows = vec![weight.clone()];
    let mut e = vec![0; n];
    e[last] = -1;
    rows.push(IntVec::new(e));
    for j in (0..n).rev().filter(|&j| j != last) {
        let mut e = vec![0; n];
        e[j] = -1;
        rows.push(IntVec::new(e));
    }
    TermOrder::new(IntMatrix::new(rows, n).expect("n columns")).expect("full rank")
}
