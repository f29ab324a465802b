use std::cmp::Ordering;

use latwalk::order::{weight_order, Grading, TermOrder, TruncatingPredicate, WalkContext};
use latwalk::vector::{IntMatrix, IntVec};
use proptest::prelude::*;

const N: usize = 4;

fn vec_n(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = IntVec> {
    prop::collection::vec(range, N).prop_map(IntVec::new)
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop::collection::vec(-5i64..=5, N).prop_map(|c| weight_order(&c))
}

fn parallel(u: &[i64], v: &[i64]) -> bool {
    (0..u.len()).all(|i| (0..u.len()).all(|j| u[i] as i128 * v[j] as i128 == u[j] as i128 * v[i] as i128))
}

proptest! {
    #[test]
    fn compare_is_translation_invariant(o in order(), u in vec_n(-9..=9), v in vec_n(-9..=9), w in vec_n(-9..=9)) {
        let uw = u.checked_add(&w).unwrap();
        let vw = v.checked_add(&w).unwrap();
        prop_assert_eq!(o.compare(&u, &v).unwrap(), o.compare(&uw, &vw).unwrap());
    }

    #[test]
    fn compare_is_antisymmetric_and_total(o in order(), u in vec_n(-9..=9), v in vec_n(-9..=9)) {
        let a = o.compare(&u, &v).unwrap();
        prop_assert_eq!(a, o.compare(&v, &u).unwrap().reverse());
        prop_assert_eq!(a == Ordering::Equal, u == v);
    }

    #[test]
    fn compare_is_transitive(o in order(), u in vec_n(-3..=3), v in vec_n(-3..=3), w in vec_n(-3..=3)) {
        if o.compare(&u, &v).unwrap() == Ordering::Less && o.compare(&v, &w).unwrap() == Ordering::Less {
            prop_assert_eq!(o.compare(&u, &w).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn orient_is_idempotent_and_sign_blind(o in order(), w in vec_n(-9..=9)) {
        prop_assume!(!w.is_zero());
        let a = o.orient(&w).unwrap();
        prop_assert_eq!(o.orient(&a).unwrap(), a.clone());
        prop_assert_eq!(o.orient(&w.checked_neg().unwrap()).unwrap(), a.clone());
        prop_assert_eq!(o.compare(&a.pos(), &a.neg_part()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn linear_bounds_are_truncating(
        h in prop::collection::vec(0i64..=4, 3),
        bound in 0i64..=40,
        inclusive in any::<bool>(),
        s in prop::collection::vec(0i64..=10, 3),
        t in prop::collection::vec(0i64..=10, 3),
    ) {
        let p = TruncatingPredicate::linear_bound(IntVec::new(h), bound, inclusive).unwrap();
        let st: Vec<i64> = s.iter().zip(&t).map(|(a, b)| a + b).collect();
        if p.contains(&st).unwrap() {
            prop_assert!(p.contains(&s).unwrap() && p.contains(&t).unwrap());
        }
    }

    #[test]
    fn rhs_bounds_are_truncating(b in 0i64..=40, s in 0i64..=30, t in 0i64..=30) {
        let p = TruncatingPredicate::rhs_bound(b).unwrap();
        if p.contains(&[s + t]).unwrap() {
            prop_assert!(p.contains(&[s]).unwrap() && p.contains(&[t]).unwrap());
        }
    }

    #[test]
    fn candidate_never_both_signs(s in order(), t in order(), w in vec_n(-9..=9)) {
        let ctx = WalkContext::new(s, t).unwrap();
        prop_assert!(!(ctx.is_candidate(&w) && ctx.is_candidate(&w.checked_neg().unwrap())));
    }

    #[test]
    fn facet_equal_only_for_parallel(s in order(), t in order(), u in vec_n(-6..=6), v in vec_n(-6..=6)) {
        let ctx = WalkContext::new(s, t).unwrap();
        prop_assume!(!u.is_zero() && !v.is_zero());
        let c = ctx.facet_compare(&u, &v).unwrap();
        prop_assert_eq!(c == Ordering::Equal, parallel(&u, &v));
        prop_assert_eq!(c, ctx.facet_compare(&v, &u).unwrap().reverse());
    }

    #[test]
    fn positivity_certificate_is_sound(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, N), 1..=2)) {
        let g = Grading::new(IntMatrix::from_rows(rows.clone()).unwrap());
        match latwalk::order::validate_positive_grading(&g) {
            Ok(_) => {
                let mut g = g;
                g.certify().unwrap();
                let p = g.positive_weight().unwrap().clone();
                for j in 0..N {
                    prop_assert!(p[j] > 0);
                }
                // p lies in the row space
                let mut stacked = rows.clone();
                stacked.push(p.into_inner());
                let rk = |m: &Vec<Vec<i64>>| {
                    latwalk::lattice::hermite_normal_form(&m.iter().cloned().map(IntVec::new).collect::<Vec<_>>()).unwrap().len()
                };
                prop_assert_eq!(rk(&stacked), rk(&rows));
            }
            Err(_) => {
                let a = IntMatrix::from_rows(rows).unwrap();
                prop_assert!(!small_positive_exists(&a));
            }
        }
    }
}

/// Brute force over small `h` for `hᵀA > 0`.
fn small_positive_exists(a: &IntMatrix) -> bool {
    let d = a.nrows();
    let range: Vec<i64> = (-6..=6).collect();
    let mut idx = vec![0usize; d];
    loop {
        let h: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
        if (0..a.ncols()).all(|j| (0..d).map(|i| h[i] * a.row(i)[j]).sum::<i64>() > 0) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == d {
                return false;
            }
            idx[k] += 1;
            if idx[k] < range.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn facet_compare_ties_are_lexicographic() {
    let ctx = WalkContext::new(weight_order(&[-1, 0, 0]), weight_order(&[1, 0, 0])).unwrap();
    let u = IntVec::from([-2, 1, 0]);
    let v = IntVec::from([-4, 2, 0]);
    assert_eq!(ctx.facet_compare(&u, &v).unwrap(), Ordering::Equal);
    assert_eq!(ctx.facet_order(&u, &v), u.cmp(&v));
}
