#![allow(dead_code)]

pub mod octagon;

use latwalk::lattice::saturate;
use latwalk::order::{weight_order, Grading, TermOrder, TruncatingPredicate};
use latwalk::vector::{IntMatrix, IntVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random lattice ideal: one positive grading row, a few kernel vectors
/// with small entries.
#[derive(Clone, Debug)]
pub struct Instance {
    pub a: Vec<i64>,
    pub grading: Grading,
    pub gens: Vec<IntVec>,
}

pub fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let n = rng.gen_range(3..=5);
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let k = rng.gen_range(1..=n - 1).min(3);
        let mut gens: Vec<IntVec> = Vec::new();
        let mut tries = 0;
        while gens.len() < k && tries < 10_000 {
            tries += 1;
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
            let dot: i64 = v.iter().zip(&a).map(|(x, y)| x * y).sum();
            if dot != 0 || v.iter().all(|&x| x == 0) {
                continue;
            }
            let mut candidate = gens.clone();
            candidate.push(IntVec::new(v));
            if latwalk::lattice::LatticeBasis::new(candidate.clone()).is_ok() {
                gens = candidate;
            }
        }
        if gens.len() < k {
            continue;
        }
        let grading = Grading::certified(IntMatrix::from_rows(vec![a.clone()]).unwrap()).unwrap();
        return Instance { a, grading, gens };
    }
}

pub fn random_order(rng: &mut ChaCha8Rng, n: usize) -> TermOrder {
    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    weight_order(&c)
}

/// A linear truncation bound on the single grading row, a bit above the
/// smallest generator degree so that it actually cuts.
pub fn random_bound(rng: &mut ChaCha8Rng, inst: &Instance, ord: &TermOrder) -> TruncatingPredicate {
    let full = saturate(&inst.gens, ord, &inst.grading).unwrap();
    let degs: Vec<i64> = full
        .elements()
        .iter()
        .map(|b| b.head().iter().zip(&inst.a).map(|(x, y)| x * y).sum())
        .collect();
    let lo = *degs.iter().min().unwrap_or(&1);
    let hi = *degs.iter().max().unwrap_or(&1);
    let b = rng.gen_range(lo..=hi.max(lo));
    TruncatingPredicate::linear_bound(IntVec::from([1]), b, true).unwrap()
}
