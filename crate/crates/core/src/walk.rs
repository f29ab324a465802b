//! The generic Gröbner walk for lattice ideals.
//!
//! Facets are crossed one binomial at a time. On each facet the Gröbner
//! basis of `⟨bin(−v₁), mon(v₂), …, mon(v_r)⟩` is computed on monomials
//! only, every monomial carrying the vector it lifts to.

use std::cmp::Ordering;

use crate::buchberger::{interreduce, GroebnerBasis};
use crate::error::{check_len, Error, Result};
use crate::order::{Grading, TruncatingPredicate, WalkContext};
use crate::vector::{pos_supports_meet, IntVec};

/// Longest S-pair chain tolerated on a single facet.
pub const DEFAULT_CHAIN_LIMIT: usize = 10_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WalkStats {
    pub facets_crossed: usize,
    pub max_intermediate_size: usize,
    pub reductions: usize,
}

#[derive(Clone, Debug)]
pub struct WalkState {
    g: Vec<IntVec>,
    facet_list: Vec<IntVec>,
    ctx: WalkContext,
    omega: TruncatingPredicate,
    grading: Grading,
    stats: WalkStats,
    chain_limit: usize,
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x.max(0) <= y.max(0))
}

fn lcm_pos(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y).max(0)).collect()
}

impl WalkState {
    /// `b` must be a minimal (Ω-)Gröbner basis over the source order.
    /// Elements with degree outside `Ω` are dropped.
    pub fn new(b: &[IntVec], ctx: WalkContext, omega: TruncatingPredicate, grading: Grading) -> Result<Self> {
        let n = ctx.nvars();
        check_len(n, grading.nvars())?;
        omega.check_grading(&grading)?;
        let mut state = WalkState {
            g: Vec::new(),
            facet_list: Vec::new(),
            ctx,
            omega,
            grading,
            stats: WalkStats::default(),
            chain_limit: DEFAULT_CHAIN_LIMIT,
        };
        for v in b {
            check_len(n, v.len())?;
            if v.is_zero() {
                continue;
            }
            if !state.grading.is_homogeneous(v) {
                return Err(Error::Inhomogeneous);
            }
            let v = state.ctx.source.orient(v)?;
            if !state.omega.contains_monomial(&state.grading, &v.pos())? {
                continue;
            }
            if !state.g.contains(&v) {
                state.insert(v);
            }
        }
        Ok(state)
    }

    pub fn with_chain_limit(mut self, limit: usize) -> Self {
        self.chain_limit = limit;
        self
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.g
    }

    pub fn facet_list(&self) -> &[IntVec] {
        &self.facet_list
    }

    pub fn stats(&self) -> WalkStats {
        self.stats
    }

    pub fn context(&self) -> &WalkContext {
        &self.ctx
    }

    /// Adds `w` to the basis, and to the facet list if it is a candidate.
    pub fn insert(&mut self, w: IntVec) {
        if self.ctx.is_candidate(&w) {
            let pos = self
                .facet_list
                .binary_search_by(|x| self.ctx.facet_order(x, &w))
                .unwrap_or_else(|p| p);
            self.facet_list.insert(pos, w.clone());
        }
        self.g.push(w);
        self.stats.max_intermediate_size = self.stats.max_intermediate_size.max(self.g.len());
    }

    fn remove_where(&mut self, mut pred: impl FnMut(&IntVec) -> bool) {
        let before = self.g.len();
        self.g.retain(|v| !pred(v));
        if self.g.len() != before {
            self.facet_list.retain(|v| !pred(v));
        }
    }

    fn remove(&mut self, w: &IntVec) {
        if let Some(i) = self.g.iter().position(|v| v == w) {
            self.g.remove(i);
        }
        if let Some(i) = self.facet_list.iter().position(|v| v == w) {
            self.facet_list.remove(i);
        }
    }

    fn in_omega(&self, lcm: &[i64]) -> Result<bool> {
        if self.omega.is_all() {
            return Ok(true);
        }
        self.omega.contains_monomial(&self.grading, lcm)
    }

    /// Crosses the facet given by `facet_bin`.
    pub fn facet_buchberger(&mut self, facet_bin: &IntVec) -> Result<()> {
        self.stats.facets_crossed += 1;
        self.remove(facet_bin);
        let mut bin = facet_bin.checked_neg()?;

        if self.g.iter().any(|w| le(w, &bin)) {
            let mut guard = 0usize;
            while let Some(w) = self.g.iter().find(|w| le(w, &bin)) {
                bin = bin.checked_sub(w)?;
                self.stats.reductions += 1;
                guard += 1;
                if guard > self.chain_limit {
                    return Err(Error::NonTermination(self.chain_limit));
                }
            }
            let lifted = bin.checked_neg()?;
            if lifted.is_zero() {
                return Err(Error::Invalid("facet binomial reduced to zero".into()));
            }
            self.insert(lifted);
            return Ok(());
        }

        let mut spairs: Vec<IntVec> = Vec::new();
        for v in &self.g {
            if !pos_supports_meet(&bin, v) {
                continue;
            }
            if !self.in_omega(&lcm_pos(&bin, v))? {
                continue;
            }
            spairs.push(v.checked_sub(&bin)?);
        }
        let head = bin.clone();
        self.remove_where(|v| le(&head, v));

        // FIFO keeps the chain order of the hand computation
        let mut queue: std::collections::VecDeque<IntVec> = spairs.into();
        let mut processed = 0usize;
        while let Some(mut s) = queue.pop_front() {
            processed += 1;
            if processed > self.chain_limit {
                return Err(Error::NonTermination(self.chain_limit));
            }
            while le(&bin, &s) {
                s = s.checked_sub(&bin)?;
                self.stats.reductions += 1;
            }
            if s.is_zero() || self.g.iter().any(|v| le(v, &s)) {
                continue;
            }
            let sp = s.pos();
            self.remove_where(|v| le(&sp, v));
            self.insert(s.clone());
            if self.in_omega(&lcm_pos(&s, &bin))? {
                queue.push_back(s.checked_sub(&bin)?);
            }
        }
        self.insert(bin);
        Ok(())
    }

    /// Crosses the first facet in the list. Returns `false` when none is left.
    pub fn step(&mut self) -> Result<bool> {
        let Some(facet) = self.facet_list.first().cloned() else {
            return Ok(false);
        };
        self.facet_buchberger(&facet)?;
        Ok(true)
    }

    /// Walks to the target and returns the reduced basis over it.
    pub fn run(mut self) -> Result<(GroebnerBasis, WalkStats)> {
        while self.step()? {}
        self.finish()
    }

    fn finish(mut self) -> Result<(GroebnerBasis, WalkStats)> {
        let target = self.ctx.target.clone();
        let oriented = self.g.iter().map(|v| target.orient(v)).collect::<Result<Vec<_>>>()?;
        let (reduced, _) = interreduce(oriented, &target, &mut self.stats.reductions)?;
        let gb = GroebnerBasis::from_reduced(reduced, target, self.omega, self.grading)?;
        Ok((gb, self.stats))
    }
}

/// Reduced (Ω-)Gröbner basis over `ctx.target`, obtained by walking from a
/// minimal Gröbner basis `b` over `ctx.source`.
pub fn generic_walk(
    b: &[IntVec],
    ctx: &WalkContext,
    omega: &TruncatingPredicate,
    g: &Grading,
) -> Result<GroebnerBasis> {
    generic_walk_with_stats(b, ctx, omega, g).map(|(gb, _)| gb)
}

pub fn generic_walk_with_stats(
    b: &[IntVec],
    ctx: &WalkContext,
    omega: &TruncatingPredicate,
    g: &Grading,
) -> Result<(GroebnerBasis, WalkStats)> {
    WalkState::new(b, ctx.clone(), omega.clone(), g.clone())?.run()
}

/// Sorted order of `facet_list` must agree with [`WalkContext::facet_order`].
pub fn is_sorted_facet_list(ctx: &WalkContext, list: &[IntVec]) -> bool {
    list.windows(2).all(|w| ctx.facet_order(&w[0], &w[1]) == Ordering::Less)
}
