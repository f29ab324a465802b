//! Exact rational feasibility LP.
//!
//! A dense phase-one simplex over `BigRational` with Bland's rule. Problem
//! sizes here are tiny (a handful of free variables, a few dozen rows),
//! so the tableau is rebuilt from scratch for every query.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vector::IntVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    pub fn ge(coeffs: &[i64], rhs: i64) -> Self {
        Constraint { coeffs: coeffs.to_vec(), relation: Relation::Ge, rhs }
    }

    pub fn eq(coeffs: &[i64], rhs: i64) -> Self {
        Constraint { coeffs: coeffs.to_vec(), relation: Relation::Eq, rhs }
    }
}

/// Finds a point `y ∈ ℚ^m` (free variables) satisfying every constraint,
/// or `None` if the system is infeasible.
pub fn feasible_point(nvars: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    let rows = constraints.len();
    if rows == 0 {
        return Some(vec![BigRational::zero(); nvars]);
    }
    let n_surplus = constraints.iter().filter(|c| c.relation == Relation::Ge).count();
    // columns: y⁺ (nvars), y⁻ (nvars), surplus, artificial, rhs
    let n_struct = 2 * nvars + n_surplus;
    let ncols = n_struct + rows;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut surplus_idx = 0;
    for (i, c) in constraints.iter().enumerate() {
        debug_assert_eq!(c.coeffs.len(), nvars);
        let mut row = vec![BigRational::zero(); ncols + 1];
        for (j, &a) in c.coeffs.iter().enumerate() {
            row[j] = BigRational::from_integer(a.into());
            row[nvars + j] = BigRational::from_integer((-(a as i128)).into());
        }
        if c.relation == Relation::Ge {
            row[2 * nvars + surplus_idx] = -BigRational::one();
            surplus_idx += 1;
        }
        row[ncols] = BigRational::from_integer(c.rhs.into());
        if c.rhs < 0 {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[n_struct + i] = BigRational::one();
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n_struct..ncols).collect();

    // reduced costs of phase one: minimize the sum of artificials
    let mut obj = vec![BigRational::zero(); ncols + 1];
    for row in &tab {
        for j in 0..n_struct {
            obj[j] -= &row[j];
        }
        obj[ncols] -= &row[ncols];
    }

    while let Some(enter) = (0..ncols).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[ncols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (r, _) = leave?;
        let piv = tab[r][enter].clone();
        for x in tab[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        basis[r] = enter;
    }

    if !obj[ncols].is_zero() {
        return None;
    }
    let mut values = vec![BigRational::zero(); ncols];
    for (i, &b) in basis.iter().enumerate() {
        values[b] = tab[i][ncols].clone();
    }
    Some((0..nvars).map(|j| &values[j] - &values[nvars + j]).collect())
}

/// Clears denominators of a rational vector, returning the primitive
/// integer vector on the same ray.
pub fn to_primitive_integer(v: &[BigRational]) -> Result<IntVec> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.iter()
        .map(|x| i64::try_from(x / &g).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(IntVec::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn simple_box() {
        // y ≥ 1, -y ≥ -3
        let p = feasible_point(1, &[Constraint::ge(&[1], 1), Constraint::ge(&[-1], -3)]).unwrap();
        assert!(p[0] >= q(1) && p[0] <= q(3));
    }

    #[test]
    fn infeasible_system() {
        // y1 - y2 ≥ 1 and y2 - y1 ≥ 1
        assert!(feasible_point(2, &[Constraint::ge(&[1, -1], 1), Constraint::ge(&[-1, 1], 1)]).is_none());
    }

    #[test]
    fn equality_with_free_sign() {
        // y1 + y2 = -4, y1 ≥ 2  ⇒ y2 ≤ -6
        let p = feasible_point(2, &[Constraint::eq(&[1, 1], -4), Constraint::ge(&[1, 0], 2)]).unwrap();
        assert_eq!(&p[0] + &p[1], q(-4));
        assert!(p[0] >= q(2));
    }

    #[test]
    fn positivity_of_one_minus_one_fails() {
        // h·1 ≥ 1 and h·(-1) ≥ 1
        assert!(feasible_point(1, &[Constraint::ge(&[1], 1), Constraint::ge(&[-1], 1)]).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![BigRational::new(1.into(), 2.into()), BigRational::new(3.into(), 4.into())];
        assert_eq!(to_primitive_integer(&v).unwrap(), IntVec::from([2, 3]));
    }
}
