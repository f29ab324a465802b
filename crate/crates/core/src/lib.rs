//! Gröbner bases of lattice ideals on integer vectors: truncated
//! Buchberger, the generic Gröbner walk, truncated Gröbner fans, and
//! knapsack integer programming through test sets.
//!
//! A binomial `x^{w⁺} − x^{w⁻}` is stored as the vector `w`.

pub mod binomial;
pub mod buchberger;
pub mod cli;
pub mod error;
pub mod fan;
pub mod format;
pub mod initial;
pub mod ip;
pub mod lattice;
pub mod lp;
pub mod order;
pub mod par;
pub mod vector;
pub mod walk;

pub use binomial::{normal_form, reduce_monomial, spair, Binomial};
pub use buchberger::{autoreduce, initial_forms, is_groebner, truncated_buchberger, GroebnerBasis, InitialForm};
pub use error::{Error, Result};
pub use fan::{cone_of, enumerate_fan, flip, locate_cell, Fan, FanCell, FanOptions};
pub use ip::{feasibility_ideal, optimize, solve_feasibility, toric_ideal, IPInstance, Method, TestSet};
pub use lattice::{kernel_basis, lll_reduce, saturate, LatticeBasis};
pub use order::{weight_order, Grading, TermOrder, TruncatingPredicate, WalkContext};
pub use par::Exec;
pub use vector::{IntMatrix, IntVec};
pub use walk::{generic_walk, WalkStats};
