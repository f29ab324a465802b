//! Gröbner bases of ideals generated by monomials and binomials, without
//! saturation. Initial ideals `in_ω(I)` are of this shape; they are not
//! lattice ideals, so the vector engine does not apply.

use std::cmp::Ordering;

use crate::buchberger::InitialForm;
use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::vector::IntVec;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Poly {
    Mono(IntVec),
    /// `x^head − x^tail` with `head ≻ tail`.
    Bin(IntVec, IntVec),
}

impl Poly {
    fn head(&self) -> &IntVec {
        match self {
            Poly::Mono(m) | Poly::Bin(m, _) => m,
        }
    }
}

fn make(ord: &TermOrder, a: Option<IntVec>, b: Option<IntVec>) -> Option<Poly> {
    match (a, b) {
        (None, None) => None,
        (Some(m), None) | (None, Some(m)) => Some(Poly::Mono(m)),
        (Some(p), Some(q)) => match ord.cmp_unchecked(&p, &q) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Poly::Bin(p, q)),
            Ordering::Less => Some(Poly::Bin(q, p)),
        },
    }
}

/// Standard monomial of `x^m`, or `None` if a monomial generator kills it.
fn reduce_term(m: &IntVec, basis: &[Poly], steps: &mut usize) -> Result<Option<IntVec>> {
    let mut m = m.clone();
    loop {
        let Some(p) = basis.iter().find(|p| p.head().le(&m)) else {
            return Ok(Some(m));
        };
        match p {
            Poly::Mono(_) => return Ok(None),
            Poly::Bin(h, t) => m = m.checked_sub(h)?.checked_add(t)?,
        }
        *steps += 1;
        if *steps > crate::binomial::REDUCTION_STEP_LIMIT {
            return Err(Error::NonTermination(crate::binomial::REDUCTION_STEP_LIMIT));
        }
    }
}

fn reduce(p: &Poly, basis: &[Poly], ord: &TermOrder, steps: &mut usize) -> Result<Option<Poly>> {
    match p {
        Poly::Mono(m) => Ok(reduce_term(m, basis, steps)?.map(Poly::Mono)),
        Poly::Bin(h, t) => Ok(make(ord, reduce_term(h, basis, steps)?, reduce_term(t, basis, steps)?)),
    }
}

fn spoly(a: &Poly, b: &Poly, ord: &TermOrder) -> Result<Option<Poly>> {
    let lcm = a.head().join(b.head());
    let shift = |p: &Poly| -> Result<Option<IntVec>> {
        match p {
            Poly::Mono(_) => Ok(None),
            Poly::Bin(h, t) => Ok(Some(lcm.checked_sub(h)?.checked_add(t)?)),
        }
    };
    Ok(make(ord, shift(a)?, shift(b)?))
}

fn coprime(a: &IntVec, b: &IntVec) -> bool {
    a.iter().zip(b.iter()).all(|(&x, &y)| x == 0 || y == 0)
}

/// Reduced Gröbner basis over `ord` of the ideal generated by `forms`.
/// The ideal must be homogeneous for a positive grading (true for initial
/// forms of a homogeneous basis) for termination.
pub fn initial_ideal_basis(forms: &[InitialForm], ord: &TermOrder) -> Result<Vec<InitialForm>> {
    let mut steps = 0usize;
    let mut basis: Vec<Poly> = Vec::new();
    let mut pending: Vec<Poly> = forms
        .iter()
        .filter_map(|f| match f {
            InitialForm::Monomial(m) => Some(Poly::Mono(m.clone())),
            InitialForm::Binomial(w) => make(ord, Some(w.pos()), Some(w.neg_part())),
        })
        .collect();
    pending.reverse();
    let mut pairs: std::collections::VecDeque<(usize, usize)> = Default::default();
    loop {
        let next = if let Some(p) = pending.pop() {
            Some(p)
        } else if let Some((i, j)) = pairs.pop_front() {
            spoly(&basis[i], &basis[j], ord)?
        } else {
            break;
        };
        let Some(p) = next else { continue };
        let Some(r) = reduce(&p, &basis, ord, &mut steps)? else { continue };
        let k = basis.len();
        for (i, bi) in basis.iter().enumerate() {
            if !coprime(bi.head(), r.head()) {
                pairs.push_back((i, k));
            }
        }
        basis.push(r);
    }

    // minimalize, then tail-reduce
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            j != i && q.head().le(p.head()) && (q.head() != p.head() || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        match p {
            Poly::Mono(m) => out.push(InitialForm::Monomial(m.clone())),
            Poly::Bin(h, t) => {
                let others: Vec<Poly> =
                    minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
                match reduce_term(t, &others, &mut steps)? {
                    None => out.push(InitialForm::Monomial(h.clone())),
                    Some(t) => out.push(InitialForm::Binomial(h.checked_sub(&t)?)),
                }
            }
        }
    }
    out.sort_by(|a, b| ord.cmp_unchecked(&a.head(), &b.head()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::weight_order;

    #[test]
    fn facet_ideal_of_the_walk_example() {
        // ⟨tx − y, t²⟩ over (1,0,0) has reduced basis {tx − y, t², ty, y²}
        let o = weight_order(&[1, 0, 0]);
        let forms = vec![
            InitialForm::Binomial(IntVec::from([1, 1, -1])),
            InitialForm::Monomial(IntVec::from([2, 0, 0])),
        ];
        let mut heads: Vec<IntVec> = initial_ideal_basis(&forms, &o).unwrap().iter().map(|f| f.head()).collect();
        heads.sort();
        let mut expect = vec![
            IntVec::from([1, 1, 0]),
            IntVec::from([2, 0, 0]),
            IntVec::from([1, 0, 1]),
            IntVec::from([0, 0, 2]),
        ];
        expect.sort();
        assert_eq!(heads, expect);
    }

    #[test]
    fn monomials_only() {
        let o = weight_order(&[1, 1]);
        let forms = vec![
            InitialForm::Monomial(IntVec::from([2, 0])),
            InitialForm::Monomial(IntVec::from([3, 1])),
        ];
        let b = initial_ideal_basis(&forms, &o).unwrap();
        assert_eq!(b, vec![InitialForm::Monomial(IntVec::from([2, 0]))]);
    }
}
