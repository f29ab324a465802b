mod common;

use common::octagon::{figure_cells, label, truncated_figure_cells, A2C, A2D, B2E, BD, BE2, CE};

use latwalk::fan::{cone_of, enumerate_fan, enumerate_from, flip, flip_by_buchberger, locate_cell, Fan, FanOptions};
use latwalk::ip::toric_ideal;
use latwalk::order::{weight_order, Grading, TruncatingPredicate};
use latwalk::par::Exec;
use latwalk::vector::{IntMatrix, IntVec};
use latwalk::Error;
use rand::Rng;

fn octagon_matrix() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 2, 1, 0], vec![0, 0, 1, 2, 1]]).unwrap()
}

fn octagon(omega: &TruncatingPredicate, exec: Exec) -> Fan {
    let a = octagon_matrix();
    let g = Grading::certified(a.clone()).unwrap();
    let gens = latwalk::kernel_basis(&a).unwrap().into_vectors();
    enumerate_fan(&gens, omega, &g, &FanOptions { exec, ..Default::default() }).unwrap()
}

fn bound6() -> TruncatingPredicate {
    TruncatingPredicate::linear_bound(IntVec::from([1, 1, 1]), 6, true).unwrap()
}

fn keys(f: &Fan) -> Vec<Vec<IntVec>> {
    f.cells().iter().map(|c| c.key()).collect()
}

#[test]
fn octagon_full_fan_matches_figure() {
    let f = octagon(&TruncatingPredicate::All, Exec::Parallel);
    assert_eq!(keys(&f), figure_cells());
    assert_eq!(f.edges().len(), 8);
    assert_eq!(f.lineality().rank(), 3);
    for c in f.cells() {
        assert_eq!(c.facets().len(), 2);
    }
}

#[test]
fn octagon_truncated_fan_matches_figure() {
    let f = octagon(&bound6(), Exec::Parallel);
    assert_eq!(keys(&f), truncated_figure_cells());
    assert_eq!(f.edges().len(), 6);
}

#[test]
fn sequential_and_parallel_agree() {
    for omega in [TruncatingPredicate::All, bound6()] {
        let a = octagon(&omega, Exec::Sequential);
        let b = octagon(&omega, Exec::Parallel);
        assert_eq!(keys(&a), keys(&b));
        assert_eq!(a.edges(), b.edges());
    }
}

#[test]
fn generator_cell_and_flip() {
    let a = octagon_matrix();
    let gb = toric_ideal(&a, &weight_order(&[3, 0, 1, 0, 0])).unwrap();
    let expect = label(&[(A2C, B2E), (A2D, BE2), (CE, BD)]);
    assert_eq!(gb.key(), expect);
    let cell = cone_of(&gb).unwrap();
    let ce_bd = IntVec::from([0, -1, 1, -1, 1]);
    assert!(cell.facets().contains(&ce_bd));
    let next = flip(&cell, &ce_bd).unwrap();
    assert_eq!(next.key(), label(&[(A2C, B2E), (A2D, BE2), (BD, CE)]));
    assert_eq!(flip(&next, &ce_bd.checked_neg().unwrap()).unwrap().key(), cell.key());
}

#[test]
fn flips_are_symmetric_and_agree_with_buchberger() {
    for omega in [TruncatingPredicate::All, bound6()] {
        let f = octagon(&omega, Exec::Parallel);
        for (i, c) in f.cells().iter().enumerate() {
            for v in c.facets() {
                let n = flip(c, v).unwrap();
                assert_eq!(n.key(), flip_by_buchberger(c, v).unwrap().key());
                let j = f.index_of(&n.key()).expect("neighbour enumerated");
                assert!(f.edges().contains(&(i.min(j), i.max(j))));
                let back = n.facets().iter().find(|w| flip(&n, w).unwrap().key() == c.key());
                assert!(back.is_some());
            }
        }
    }
}

#[test]
fn enumeration_is_independent_of_start() {
    for omega in [TruncatingPredicate::All, bound6()] {
        let f = octagon(&omega, Exec::Parallel);
        for c in f.cells() {
            let g = enumerate_from(c.basis(), &FanOptions::default()).unwrap();
            assert_eq!(keys(&g), keys(&f));
            assert_eq!(g.edges(), f.edges());
        }
    }
}

#[test]
fn random_weights_locate() {
    let mut r = common::rng(11);
    for omega in [TruncatingPredicate::All, bound6()] {
        let f = octagon(&omega, Exec::Parallel);
        let mut hits = vec![0; f.len()];
        let mut located = 0;
        while located < 1000 {
            let w: Vec<i64> = (0..5).map(|_| r.gen_range(-50..=50)).collect();
            match locate_cell(&f, &w) {
                Ok(c) => {
                    assert!(c.contains(&w));
                    hits[f.index_of(&c.key()).unwrap()] += 1;
                    located += 1;
                }
                Err(Error::NonGeneric(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(hits.iter().all(|&h| h > 0));
    }
}

#[test]
fn interior_points_locate_their_cell() {
    let f = octagon(&TruncatingPredicate::All, Exec::Parallel);
    for c in f.cells() {
        assert_eq!(locate_cell(&f, c.interior()).unwrap().key(), c.key());
        assert!(c.contains_strictly(c.interior()));
    }
    let v = &f.cells()[0].facets()[0];
    let on_wall = f.cells()[0].facet_point(v).unwrap();
    assert!(matches!(locate_cell(&f, &on_wall), Err(Error::NonGeneric(_))));
}

#[test]
fn truncated_fan_coarsens_full_fan() {
    let full = octagon(&TruncatingPredicate::All, Exec::Parallel);
    let trunc = octagon(&bound6(), Exec::Parallel);
    let mut covered = vec![false; trunc.len()];
    for c in full.cells() {
        let t = locate_cell(&trunc, c.interior()).unwrap();
        // the truncated basis is the degree filter of the full one
        let filtered: Vec<IntVec> = c.key().into_iter().filter(|v| t.key().contains(v)).collect();
        assert_eq!(filtered, t.key());
        for n in t.normals() {
            assert!(c.normals().contains(n));
        }
        covered[trunc.index_of(&t.key()).unwrap()] = true;
    }
    assert!(covered.iter().all(|&x| x));
}

#[test]
fn single_binomial_fan() {
    let g = Grading::certified(IntMatrix::from_rows(vec![vec![2, 3]]).unwrap()).unwrap();
    let f = enumerate_fan(&[IntVec::from([3, -2])], &TruncatingPredicate::All, &g, &FanOptions::default()).unwrap();
    assert_eq!(f.len(), 2);
}

#[test]
fn resource_cap() {
    let a = octagon_matrix();
    let g = Grading::certified(a.clone()).unwrap();
    let gens = latwalk::kernel_basis(&a).unwrap().into_vectors();
    let opts = FanOptions { max_cells: 3, ..Default::default() };
    assert!(matches!(enumerate_fan(&gens, &TruncatingPredicate::All, &g, &opts), Err(Error::ResourceCap(_))));
}

#[test]
fn random_fans_are_complete() {
    let mut r = common::rng(5);
    for _ in 0..12 {
        let inst = common::random_instance(&mut r);
        let n = inst.a.len();
        let opts = FanOptions { max_cells: 150, ..FanOptions::default() };
        let f = match enumerate_fan(&inst.gens, &TruncatingPredicate::All, &inst.grading, &opts) {
            Err(Error::ResourceCap(_)) => continue,
            f => f.unwrap(),
        };
        for _ in 0..100 {
            let w: Vec<i64> = (0..n).map(|_| r.gen_range(-30..=30)).collect();
            match locate_cell(&f, &w) {
                Ok(c) => assert!(c.contains(&w)),
                Err(Error::NonGeneric(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}
