//! Truncated Gröbner fans: cones of reduced (Ω-)Gröbner bases, facet flips
//! and breadth-first enumeration of all maximal cells.

use std::collections::HashMap;

use crate::buchberger::{truncated_buchberger, GroebnerBasis};
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, saturate_truncated, LatticeBasis};
use crate::lp::{feasible_point, to_primitive_integer, Constraint};
use crate::order::{weight_order, Grading, TermOrder, TruncatingPredicate, WalkContext};
use crate::par::{self, Exec};
use crate::vector::{IntMatrix, IntVec};
use crate::walk::WalkState;

/// A maximal cell `{ω | ω·v ≥ 0 for every basis element v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCell {
    basis: GroebnerBasis,
    normals: Vec<IntVec>,
    facets: Vec<IntVec>,
    interior: IntVec,
}

impl FanCell {
    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// Inequality normals; these are the basis vectors.
    pub fn normals(&self) -> &[IntVec] {
        &self.normals
    }

    /// The irredundant normals.
    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    /// An integer point with `ω·v ≥ 1` for every normal.
    pub fn interior(&self) -> &IntVec {
        &self.interior
    }

    pub fn key(&self) -> Vec<IntVec> {
        self.basis.key()
    }

    pub fn contains(&self, omega: &[i64]) -> bool {
        self.normals.iter().all(|v| v.dot_i128(omega).is_some_and(|x| x >= 0))
    }

    pub fn contains_strictly(&self, omega: &[i64]) -> bool {
        self.normals.iter().all(|v| v.dot_i128(omega).is_some_and(|x| x > 0))
    }

    /// An integer point in the relative interior of the facet `v`.
    pub fn facet_point(&self, v: &IntVec) -> Result<IntVec> {
        facet_point(&self.normals, v, Some(&self.interior)).ok_or(Error::NotAFacet)
    }
}

fn strictly_positive(normals: &[IntVec], skip: Option<&IntVec>, w: &[i64]) -> bool {
    normals
        .iter()
        .filter(|u| Some(*u) != skip)
        .all(|u| u.dot_i128(w).is_some_and(|x| x > 0))
}

fn primitive(w: Vec<i128>) -> Option<IntVec> {
    let g = w.iter().fold(0i128, |acc, &x| num_integer::Integer::gcd(&acc, &x));
    let g = if g == 0 { 1 } else { g };
    w.into_iter().map(|x| i64::try_from(x / g).ok()).collect::<Option<Vec<_>>>().map(IntVec::new)
}

/// Projection of `p` onto `v^⊥`, scaled to an integer vector.
fn project(p: &IntVec, v: &IntVec) -> Option<IntVec> {
    let vv = v.dot_i128(v)?;
    let pv = p.dot_i128(v)?;
    let w = p
        .iter()
        .zip(v.iter())
        .map(|(&a, &b)| vv.checked_mul(a as i128)?.checked_sub(pv.checked_mul(b as i128)?))
        .collect::<Option<Vec<_>>>()?;
    primitive(w)
}

fn facet_point(normals: &[IntVec], v: &IntVec, interior: Option<&IntVec>) -> Option<IntVec> {
    if let Some(w) = interior.and_then(|p| project(p, v)) {
        if strictly_positive(normals, Some(v), &w) {
            return Some(w);
        }
    }
    let n = v.len();
    let mut cons = vec![Constraint::eq(v, 0)];
    cons.extend(normals.iter().filter(|u| *u != v).map(|u| Constraint::ge(u, 1)));
    let x = feasible_point(n, &cons)?;
    to_primitive_integer(&x).ok()
}

fn interior_point(normals: &[IntVec], n: usize, hint: Option<IntVec>) -> Result<IntVec> {
    if let Some(h) = hint {
        if strictly_positive(normals, None, &h) {
            return Ok(h);
        }
    }
    let cons: Vec<Constraint> = normals.iter().map(|u| Constraint::ge(u, 1)).collect();
    let x = feasible_point(n, &cons).ok_or_else(|| Error::Invalid("cone has empty interior".into()))?;
    if x.iter().all(|c| c == &num_rational::BigRational::default()) {
        return Ok(IntVec::zeros(n));
    }
    to_primitive_integer(&x)
}

/// The cell of a reduced basis. Facets are found by exact LP.
pub fn cone_of(g: &GroebnerBasis) -> Result<FanCell> {
    cone_with_hint(g, None)
}

fn cone_with_hint(g: &GroebnerBasis, hint: Option<IntVec>) -> Result<FanCell> {
    let n = g.order().nvars();
    let normals = g.vectors();
    let interior = interior_point(&normals, n, hint)?;
    let facets: Vec<IntVec> =
        normals.iter().filter(|v| facet_point(&normals, v, Some(&interior)).is_some()).cloned().collect();
    let order = weight_order(&interior);
    let basis = GroebnerBasis::from_reduced(normals.clone(), order, g.truncation().clone(), g.grading().clone())?;
    let normals = basis.vectors();
    Ok(FanCell { basis, normals, facets, interior })
}

/// `K·ω_f − ω_int` for the least `K` that puts it inside every normal of
/// the neighbour, when such `K` exists.
fn neighbour_hint(wf: &IntVec, wint: &IntVec, normals: &[IntVec]) -> Option<IntVec> {
    let mut k: i128 = 1;
    for u in normals {
        let a = u.dot_i128(wf)?;
        let b = u.dot_i128(wint)?;
        if a > 0 {
            k = k.max(b.div_euclid(a) + 1);
        } else if a < 0 || b >= 0 {
            return None;
        }
    }
    let w = wf
        .iter()
        .zip(wint.iter())
        .map(|(&x, &y)| k.checked_mul(x as i128)?.checked_sub(y as i128))
        .collect::<Option<Vec<_>>>()?;
    primitive(w)
}

/// Order just across the facet `v`: first `ω_f`, then away from the cell.
fn across(wf: &IntVec, cell: &FanCell, v: &IntVec) -> Result<TermOrder> {
    debug_assert_eq!(wf.dot_i128(v), Some(0));
    let n = wf.len();
    let mut rows = vec![wf.clone(), cell.interior.checked_neg()?];
    rows.extend((0..n).map(|i| IntVec::unit(n, i).checked_neg().expect("unit")));
    TermOrder::new(IntMatrix::new(rows, n)?)
}

/// The neighbouring maximal cell across the facet `v`, computed by a walk
/// that crosses exactly that facet.
pub fn flip(cell: &FanCell, v: &IntVec) -> Result<FanCell> {
    if !cell.facets.contains(v) {
        return Err(Error::NotAFacet);
    }
    let wf = cell.facet_point(v)?;
    let target = across(&wf, cell, v)?;
    let ctx = WalkContext::new(cell.basis.order().clone(), target)?;
    let state = WalkState::new(
        &cell.normals,
        ctx,
        cell.basis.truncation().clone(),
        cell.basis.grading().clone(),
    )?;
    let (gb, _) = state.run()?;
    let hint = neighbour_hint(&wf, &cell.interior, &gb.vectors());
    cone_with_hint(&gb, hint)
}

/// The same neighbour, recomputed from scratch by Buchberger.
pub fn flip_by_buchberger(cell: &FanCell, v: &IntVec) -> Result<FanCell> {
    if !cell.facets.contains(v) {
        return Err(Error::NotAFacet);
    }
    let wf = cell.facet_point(v)?;
    let target = across(&wf, cell, v)?;
    let gb = truncated_buchberger(&cell.normals, &target, cell.basis.truncation(), cell.basis.grading())?;
    cone_of(&gb)
}

#[derive(Clone, Debug)]
pub struct FanOptions {
    pub exec: Exec,
    pub max_cells: usize,
}

impl Default for FanOptions {
    fn default() -> Self {
        FanOptions { exec: Exec::default(), max_cells: 100_000 }
    }
}

#[derive(Clone, Debug)]
pub struct Fan {
    cells: Vec<FanCell>,
    edges: Vec<(usize, usize)>,
    lineality: LatticeBasis,
    truncation: TruncatingPredicate,
    grading: Grading,
}

impl Fan {
    /// Cells sorted by canonical key.
    pub fn cells(&self) -> &[FanCell] {
        &self.cells
    }

    /// Adjacent pairs `(i, j)`, `i < j`, indices into [`Fan::cells`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Basis of `{ω | ω·v = 0 for all v in the lattice}`.
    pub fn lineality(&self) -> &LatticeBasis {
        &self.lineality
    }

    pub fn truncation(&self) -> &TruncatingPredicate {
        &self.truncation
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn index_of(&self, key: &[IntVec]) -> Option<usize> {
        self.cells.binary_search_by(|c| c.key().as_slice().cmp(key)).ok()
    }
}

/// All maximal cells of the (truncated) Gröbner fan of the lattice ideal
/// spanned by `gens`.
pub fn enumerate_fan(
    gens: &[IntVec],
    omega: &TruncatingPredicate,
    g: &Grading,
    opts: &FanOptions,
) -> Result<Fan> {
    let mut grading = g.clone();
    grading.certify()?;
    let p = grading.positive_weight().expect("certified").clone();
    let (start, _) = saturate_truncated(gens, &weight_order(&p), omega, &grading)?;
    enumerate_from(&start, opts)
}

/// Breadth-first closure under [`flip`] starting at the cell of `start`.
pub fn enumerate_from(start: &GroebnerBasis, opts: &FanOptions) -> Result<Fan> {
    let n = start.order().nvars();
    let first = cone_of(start)?;
    let mut cells = vec![first];
    let mut index: HashMap<Vec<IntVec>, usize> = HashMap::new();
    index.insert(cells[0].key(), 0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let jobs: Vec<(usize, IntVec)> = frontier
            .iter()
            .flat_map(|&i| cells[i].facets.iter().map(move |v| (i, v.clone())))
            .collect();
        let snapshot = &cells;
        let results = par::map(opts.exec, &jobs, |(i, v)| flip(&snapshot[*i], v));
        let mut next = Vec::new();
        for ((i, _), r) in jobs.iter().zip(results) {
            let cell = r?;
            let key = cell.key();
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    if cells.len() >= opts.max_cells {
                        return Err(Error::ResourceCap(format!("more than {} cells", opts.max_cells)));
                    }
                    let j = cells.len();
                    index.insert(key, j);
                    cells.push(cell);
                    next.push(j);
                    j
                }
            };
            edges.push((*i.min(&j), *i.max(&j)));
        }
        frontier = next;
    }

    // canonical numbering
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| cells[i].key());
    let mut rank = vec![0; cells.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (rank[a].min(rank[b]), rank[a].max(rank[b])))
        .collect();
    edges.sort();
    edges.dedup();
    let mut slots: Vec<Option<FanCell>> = cells.into_iter().map(Some).collect();
    let cells: Vec<FanCell> = order.iter().map(|&i| slots[i].take().expect("each cell once")).collect();

    let lattice = cells[0].normals.clone();
    let lineality = if lattice.is_empty() {
        LatticeBasis::new((0..n).map(|i| IntVec::unit(n, i)).collect())?
    } else {
        kernel_basis(&IntMatrix::new(lattice, n)?)?
    };
    Ok(Fan {
        cells,
        edges,
        lineality,
        truncation: start.truncation().clone(),
        grading: start.grading().clone(),
    })
}

/// The enumerated cell containing the generic weight `ω`.
pub fn locate_cell<'a>(fan: &'a Fan, omega: &[i64]) -> Result<&'a FanCell> {
    let Some(first) = fan.cells.first() else {
        return Err(Error::Invalid("empty fan".into()));
    };
    crate::error::check_len(first.interior.len(), omega.len())?;
    let ord = weight_order(omega);
    let gb = truncated_buchberger(&first.normals, &ord, &fan.truncation, &fan.grading)?;
    if gb.vectors().iter().any(|v| v.dot_i128(omega) == Some(0)) {
        return Err(Error::NonGeneric(omega.to_vec()));
    }
    fan.index_of(&gb.key())
        .map(|i| &fan.cells[i])
        .ok_or_else(|| Error::Invalid("weight located outside the enumerated fan".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchberger::canonical_key;

    fn knapsack_grading() -> Grading {
        Grading::certified(IntMatrix::from_rows(vec![vec![1, 2, 3]]).unwrap()).unwrap()
    }

    fn start_cell() -> FanCell {
        let gb = GroebnerBasis::from_reduced(
            vec![IntVec::from([-2, 1, 0]), IntVec::from([-3, 0, 1])],
            weight_order(&[-1, 0, 0]),
            TruncatingPredicate::All,
            knapsack_grading(),
        )
        .unwrap();
        cone_of(&gb).unwrap()
    }

    #[test]
    fn final_basis_contains_target_weight() {
        let gb = GroebnerBasis::from_reduced(
            [[1, 1, -1], [2, -1, 0], [1, -2, 1], [0, -3, 2]].map(IntVec::from).to_vec(),
            weight_order(&[1, 0, 0]),
            TruncatingPredicate::All,
            knapsack_grading(),
        )
        .unwrap();
        let cell = cone_of(&gb).unwrap();
        assert!(cell.contains(&[1, 0, 0]));
        assert!(cell.contains_strictly(cell.interior()));
    }

    #[test]
    fn first_crossing() {
        let cell = start_cell();
        let next = flip(&cell, &IntVec::from([-2, 1, 0])).unwrap();
        assert_eq!(next.key(), canonical_key([[2, -1, 0], [-1, -1, 1]].map(IntVec::from)));
        let back = flip(&next, &IntVec::from([2, -1, 0])).unwrap();
        assert_eq!(back.key(), cell.key());
        assert_eq!(flip_by_buchberger(&cell, &IntVec::from([-2, 1, 0])).unwrap().key(), next.key());
    }

    #[test]
    fn not_a_facet() {
        let cell = start_cell();
        assert_eq!(flip(&cell, &IntVec::from([1, 1, 1])), Err(Error::NotAFacet));
    }

    #[test]
    fn single_binomial_has_two_cells() {
        let a = IntMatrix::from_rows(vec![vec![2, 3]]).unwrap();
        let g = Grading::certified(a).unwrap();
        let fan = enumerate_fan(&[IntVec::from([3, -2])], &TruncatingPredicate::All, &g, &FanOptions::default())
            .unwrap();
        assert_eq!(fan.len(), 2);
        assert_eq!(fan.edges(), &[(0, 1)]);
        assert_eq!(fan.cells()[0].facets().len(), 1);
    }

    #[test]
    fn locate_rejects_walls() {
        let a = IntMatrix::from_rows(vec![vec![2, 3]]).unwrap();
        let g = Grading::certified(a).unwrap();
        let fan = enumerate_fan(&[IntVec::from([3, -2])], &TruncatingPredicate::All, &g, &FanOptions::default())
            .unwrap();
        assert!(matches!(locate_cell(&fan, &[2, 3]), Err(Error::NonGeneric(_))));
        let c = locate_cell(&fan, &[5, 1]).unwrap();
        assert!(c.contains(&[5, 1]));
    }
}
