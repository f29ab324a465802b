//! Truncated homogeneous Buchberger algorithm on integer vectors.
//!
//! Every S-pair and every reduction step is carried out on vectors, so
//! common monomial factors cancel automatically (sat-reduction). The
//! result is the reduced Ω-Gröbner basis of the ideal generated by the
//! input together with everything those cancellations add; when the input
//! already generates a lattice ideal `I_L` (for instance the output of
//! [`crate::lattice::saturate`]) that is exactly `I_L`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use crate::binomial::{head_reduce, normal_form_counted, spair_degree, Binomial};
use crate::error::{Error, Result};
use crate::order::{Grading, TermOrder, TruncatingPredicate};
use crate::vector::{pos_supports_meet, IntVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: TermOrder,
    truncation: TruncatingPredicate,
    grading: Grading,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps vectors that already form a reduced basis; orients and sorts.
    pub fn from_reduced(
        vectors: Vec<IntVec>,
        order: TermOrder,
        truncation: TruncatingPredicate,
        grading: Grading,
    ) -> Result<Self> {
        let mut elements = vectors
            .iter()
            .map(|w| Binomial::oriented(&order, w))
            .collect::<Result<Vec<_>>>()?;
        sort_by_head(&mut elements, &order);
        Ok(GroebnerBasis { elements, order, truncation, grading, reduced: true })
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn vectors(&self) -> Vec<IntVec> {
        self.elements.iter().map(|b| b.vector().clone()).collect()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn truncation(&self) -> &TruncatingPredicate {
        &self.truncation
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn heads(&self) -> Vec<IntVec> {
        self.elements.iter().map(Binomial::head).collect()
    }

    /// Order-free identity of the basis: its vectors in lexicographic order.
    pub fn key(&self) -> Vec<IntVec> {
        canonical_key(self.elements.iter().map(|b| b.vector().clone()))
    }
}

pub fn canonical_key(vectors: impl IntoIterator<Item = IntVec>) -> Vec<IntVec> {
    let mut v: Vec<IntVec> = vectors.into_iter().collect();
    v.sort();
    v
}

pub(crate) fn sort_by_head(elements: &mut [Binomial], ord: &TermOrder) {
    elements.sort_by(|a, b| {
        ord.cmp_unchecked(&a.head(), &b.head())
            .then_with(|| a.vector().cmp(b.vector()))
    });
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs: usize,
    pub reductions: usize,
    pub max_size: usize,
    pub passes: usize,
}

/// Weight used to order the pair queue, and the termination check.
pub(crate) fn selection_weight(
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
) -> Result<IntVec> {
    if let Some(p) = grading.positive_weight() {
        return Ok(p.clone());
    }
    let mut g = grading.clone();
    match g.certify() {
        Ok(_) => Ok(g.positive_weight().expect("certified").clone()),
        Err(Error::NotPositive) => {
            let n = ord.nvars();
            let well_order = (0..n).all(|i| ord.sign(&IntVec::unit(n, i)) == Ordering::Greater);
            if omega.is_all() && well_order {
                Ok(IntVec::zeros(n))
            } else {
                Err(Error::CannotCertifyTermination(
                    "grading is not positive and the order is not a well-order".into(),
                ))
            }
        }
        Err(e) => Err(e),
    }
}

pub fn truncated_buchberger(
    gens: &[IntVec],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
) -> Result<GroebnerBasis> {
    truncated_buchberger_with_stats(gens, ord, omega, grading).map(|(g, _)| g)
}

pub fn truncated_buchberger_with_stats(
    gens: &[IntVec],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let n = ord.nvars();
    crate::error::check_len(n, grading.nvars())?;
    omega.check_grading(grading)?;
    let weight = selection_weight(ord, omega, grading)?;
    for g in gens {
        crate::error::check_len(n, g.len())?;
        if !grading.is_homogeneous(g) {
            return Err(Error::Inhomogeneous);
        }
    }
    let mut stats = BuchbergerStats::default();
    let vectors = reduced_basis(gens, ord, omega, grading, &weight, &mut stats)?;
    let elements: Vec<Binomial> = vectors.into_iter().map(Binomial::from_oriented).collect();
    let basis = GroebnerBasis {
        elements,
        order: ord.clone(),
        truncation: omega.clone(),
        grading: grading.clone(),
        reduced: true,
    };
    Ok((basis, stats))
}

/// Passes of Buchberger + interreduction until interreduction leaves every
/// head in place. Output is oriented and sorted by ascending head.
pub(crate) fn reduced_basis(
    gens: &[IntVec],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
    weight: &IntVec,
    stats: &mut BuchbergerStats,
) -> Result<Vec<IntVec>> {
    let mut input: Vec<IntVec> = gens.to_vec();
    loop {
        stats.passes += 1;
        let g = buchberger_pass(&input, ord, omega, grading, weight, stats)?;
        let (reduced, heads_changed) = interreduce(g, ord, &mut stats.reductions)?;
        if !heads_changed {
            return Ok(reduced);
        }
        input = reduced;
    }
}

enum Item {
    Gen(IntVec),
    Pair(usize, usize),
}

fn buchberger_pass(
    gens: &[IntVec],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
    weight: &IntVec,
    stats: &mut BuchbergerStats,
) -> Result<Vec<IntVec>> {
    let mut basis: Vec<IntVec> = Vec::new();
    let mut seq = 0usize;
    let mut queue: BinaryHeap<Reverse<(i128, usize)>> = BinaryHeap::new();
    let mut items: Vec<Option<Item>> = Vec::new();
    let mut push = |queue: &mut BinaryHeap<Reverse<(i128, usize)>>, items: &mut Vec<Option<Item>>, w: i128, it: Item| {
        queue.push(Reverse((w, seq)));
        items.push(Some(it));
        seq += 1;
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = ord.orient(g)?;
        if !omega.contains_monomial(grading, &g.pos())? {
            continue;
        }
        let w = g.pos().dot_i128(weight).ok_or(Error::Overflow)?;
        push(&mut queue, &mut items, w, Item::Gen(g));
    }

    while let Some(Reverse((_, id))) = queue.pop() {
        let item = items[id].take().expect("each item is popped once");
        let candidate = match item {
            Item::Gen(g) => g,
            Item::Pair(i, j) => {
                stats.pairs += 1;
                basis[i].checked_sub(&basis[j])?
            }
        };
        let r = head_reduce(&candidate, &basis, ord, &mut stats.reductions)?;
        if r.is_zero() {
            continue;
        }
        let k = basis.len();
        for (i, bi) in basis.iter().enumerate() {
            if !pos_supports_meet(bi, &r) {
                continue;
            }
            let lcm: Vec<i64> = bi.iter().zip(r.iter()).map(|(&a, &b)| a.max(b).max(0)).collect();
            if !omega.contains_monomial(grading, &lcm)? {
                continue;
            }
            let w = IntVec::new(lcm).dot_i128(weight).ok_or(Error::Overflow)?;
            push(&mut queue, &mut items, w, Item::Pair(i, k));
        }
        basis.push(r);
        stats.max_size = stats.max_size.max(basis.len());
    }
    Ok(basis)
}

/// Interreduces a set of oriented vectors: each element is replaced by its
/// normal form modulo the others until nothing changes. Returns the
/// survivors sorted by head, and whether some surviving head moved (which
/// can only happen through cancellation of a common factor).
pub(crate) fn interreduce(
    mut g: Vec<IntVec>,
    ord: &TermOrder,
    reductions: &mut usize,
) -> Result<(Vec<IntVec>, bool)> {
    let mut seen = HashSet::new();
    g.retain(|w| !w.is_zero() && seen.insert(w.clone()));
    let mut heads_changed = false;
    sort_vectors_by_head(&mut g, ord);
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < g.len() {
            let w = g.remove(i);
            let nf = normal_form_counted(&w, &g, ord, reductions)?;
            if nf.is_zero() {
                changed = true;
                continue;
            }
            if nf != w {
                changed = true;
                if nf.pos() != w.pos() {
                    heads_changed = true;
                }
            }
            g.insert(i, nf);
            i += 1;
        }
        if !changed {
            break;
        }
    }
    sort_vectors_by_head(&mut g, ord);
    g.dedup();
    Ok((g, heads_changed))
}

fn sort_vectors_by_head(g: &mut [IntVec], ord: &TermOrder) {
    g.sort_by(|a, b| ord.cmp_unchecked(&a.pos(), &b.pos()).then_with(|| a.cmp(b)));
}

/// Interreduces a basis. For a Gröbner basis input this yields the reduced
/// Gröbner basis.
pub fn autoreduce(g: &GroebnerBasis) -> Result<GroebnerBasis> {
    let mut count = 0;
    let (v, _) = interreduce(g.vectors(), &g.order, &mut count)?;
    Ok(GroebnerBasis {
        elements: v.into_iter().map(Binomial::from_oriented).collect(),
        order: g.order.clone(),
        truncation: g.truncation.clone(),
        grading: g.grading.clone(),
        reduced: true,
    })
}

/// Buchberger's criterion restricted to S-pairs with degree in `Ω`.
pub fn is_groebner<B: AsRef<[i64]>>(
    g: &[B],
    ord: &TermOrder,
    omega: &TruncatingPredicate,
    grading: &Grading,
) -> Result<bool> {
    let vs: Vec<IntVec> = g.iter().map(|b| IntVec::from(b.as_ref())).collect();
    if vs.iter().any(|w| ord.sign(w) != Ordering::Greater) {
        return Ok(false);
    }
    let mut steps = 0;
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if !pos_supports_meet(&vs[i], &vs[j]) {
                continue;
            }
            if !omega.contains(&spair_degree(grading, &vs[i], &vs[j])?)? {
                continue;
            }
            let s = vs[i].checked_sub(&vs[j])?;
            if !normal_form_counted(&s, &vs, ord, &mut steps)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the reduced-basis invariants: heads pairwise non-divisible and no
/// head divides a tail.
pub fn is_reduced<B: AsRef<[i64]>>(g: &[B]) -> bool {
    let vs: Vec<&[i64]> = g.iter().map(|b| b.as_ref()).collect();
    for (i, a) in vs.iter().enumerate() {
        for (j, b) in vs.iter().enumerate() {
            if i != j
                && (crate::vector::pos_divides_pos(a, b) || crate::vector::pos_divides_neg(a, b))
            {
                return false;
            }
        }
    }
    true
}

/// One entry of `in_ω(G)`: the whole binomial when both terms have equal
/// `ω`-weight, otherwise the head monomial alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InitialForm {
    Binomial(IntVec),
    Monomial(IntVec),
}

impl InitialForm {
    pub fn head(&self) -> IntVec {
        match self {
            InitialForm::Binomial(w) => w.pos(),
            InitialForm::Monomial(m) => m.clone(),
        }
    }
}

pub fn initial_forms(g: &GroebnerBasis, omega: &[i64]) -> Result<Vec<InitialForm>> {
    crate::error::check_len(g.order.nvars(), omega.len())?;
    g.elements
        .iter()
        .map(|b| {
            let d = b.vector().dot_i128(omega).ok_or(Error::Overflow)?;
            match d.cmp(&0) {
                Ordering::Less => Err(Error::OutsideCone),
                Ordering::Equal => Ok(InitialForm::Binomial(b.vector().clone())),
                Ordering::Greater => Ok(InitialForm::Monomial(b.head())),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::weight_order;
    use crate::vector::IntMatrix;

    fn knap_grading() -> Grading {
        Grading::certified(IntMatrix::from_rows(vec![vec![1, 2, 3]]).unwrap()).unwrap()
    }

    fn gens() -> Vec<IntVec> {
        vec![IntVec::from([-2, 1, 0]), IntVec::from([-3, 0, 1])]
    }

    fn walk_example_basis() -> Vec<IntVec> {
        canonical_key([[1, 1, -1], [2, -1, 0], [1, -2, 1], [0, -3, 2]].map(IntVec::from))
    }

    #[test]
    fn full_basis_over_tau() {
        let g = truncated_buchberger(&gens(), &weight_order(&[1, 0, 0]), &TruncatingPredicate::All, &knap_grading())
            .unwrap();
        assert_eq!(g.key(), walk_example_basis());
        assert!(is_reduced(g.elements()));
        // ascending heads: tx ≺ t² ≺ ty ≺ y² ... check sortedness only
        let o = g.order();
        for w in g.elements().windows(2) {
            assert_eq!(o.cmp_unchecked(&w[0].head(), &w[1].head()), Ordering::Less);
        }
    }

    #[test]
    fn truncated_basis_filters_by_degree() {
        let g = truncated_buchberger(
            &gens(),
            &weight_order(&[1, 0, 0]),
            &TruncatingPredicate::RhsBound(3),
            &knap_grading(),
        )
        .unwrap();
        assert_eq!(g.key(), canonical_key([[1, 1, -1], [2, -1, 0]].map(IntVec::from)));
    }

    #[test]
    fn reduced_input_is_fixed_point() {
        let o = weight_order(&[1, 0, 0]);
        let g = truncated_buchberger(&walk_example_basis(), &o, &TruncatingPredicate::All, &knap_grading()).unwrap();
        assert_eq!(g.key(), walk_example_basis());
    }

    #[test]
    fn autoreduce_examples() {
        let o = weight_order(&[1, 0, 0]);
        let gr = knap_grading();
        let g = GroebnerBasis::from_reduced(
            vec![IntVec::from([2, -1, 0]), IntVec::from([3, 0, -1])],
            o.clone(),
            TruncatingPredicate::All,
            gr.clone(),
        )
        .unwrap();
        let r = autoreduce(&g).unwrap();
        assert!(r.key().contains(&IntVec::from([1, 1, -1])));

        let done = GroebnerBasis::from_reduced(walk_example_basis(), o.clone(), TruncatingPredicate::All, gr.clone()).unwrap();
        assert_eq!(autoreduce(&done).unwrap().key(), walk_example_basis());

        let mut dup = walk_example_basis();
        dup.push(IntVec::from([1, 1, -1]));
        let d = GroebnerBasis::from_reduced(dup, o, TruncatingPredicate::All, gr).unwrap();
        assert_eq!(autoreduce(&d).unwrap().len(), 4);
    }

    #[test]
    fn is_groebner_examples() {
        let o = weight_order(&[1, 0, 0]);
        let gr = knap_grading();
        let all = TruncatingPredicate::All;
        let oriented: Vec<IntVec> = walk_example_basis().iter().map(|w| o.orient(w).unwrap()).collect();
        assert!(is_groebner(&oriented, &o, &all, &gr).unwrap());
        let bad = vec![IntVec::from([2, -1, 0]), IntVec::from([3, 0, -1])];
        assert!(!is_groebner(&bad, &o, &all, &gr).unwrap());
        assert!(is_groebner(&[IntVec::from([2, -1, 0])], &o, &all, &gr).unwrap());
    }

    #[test]
    fn initial_form_examples() {
        let o = weight_order(&[1, 0, 0]);
        let g = GroebnerBasis::from_reduced(walk_example_basis(), o, TruncatingPredicate::All, knap_grading()).unwrap();
        let forms = initial_forms(&g, &[1, 0, 0]).unwrap();
        assert!(forms.contains(&InitialForm::Monomial(IntVec::from([1, 1, 0]))));
        // ω = (1, 0, 1) is orthogonal to tx − y
        let forms = initial_forms(&g, &[1, 0, 1]).unwrap();
        assert!(forms.contains(&InitialForm::Binomial(IntVec::from([1, 1, -1]))));
        let zero = initial_forms(&g, &[0, 0, 0]).unwrap();
        assert!(zero.iter().all(|f| matches!(f, InitialForm::Binomial(_))));
        assert_eq!(initial_forms(&g, &[-1, 0, 0]), Err(Error::OutsideCone));
    }

    #[test]
    fn inhomogeneous_generators_rejected() {
        let r = truncated_buchberger(
            &[IntVec::from([1, -1, 0])],
            &weight_order(&[1, 0, 0]),
            &TruncatingPredicate::All,
            &knap_grading(),
        );
        assert_eq!(r.unwrap_err(), Error::Inhomogeneous);
    }

    #[test]
    fn uncertifiable_termination() {
        let g = Grading::new(IntMatrix::from_rows(vec![vec![1, -1]]).unwrap());
        let r = truncated_buchberger(&[IntVec::from([1, 1])], &weight_order(&[-1, 0]), &TruncatingPredicate::All, &g);
        assert!(matches!(r, Err(Error::CannotCertifyTermination(_))));
    }
}
