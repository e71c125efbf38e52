//! Exact certificates for the discrete Pompeiu problem.
//!
//! Given a tuple of points `a_1, …, a_n` in ℝ^k (k ≥ 2) and weights
//! `c_1, …, c_n` with nonzero sum, every function `f` with
//! `Σ c_j · f(φ(a_j)) = 0` for all rigid motions `φ` vanishes identically.
//! The finite form of that statement says that for a given point `z₀` there
//! is a finite set `H` of points and finitely many placements inside `H`
//! whose equations already force `f(z₀) = 0`. This crate searches for such
//! finite witnesses, emits them as exact multiplier certificates, and checks
//! them independently.
//!
//! The crate is organized as:
//!
//! * [`exactfield`]: rationals, real quadratic fields ℚ(√d), their
//!   complexification, integer polynomials and quotient rings ℚ\[x\]/(p).
//! * [`geometry`]: exact rotations (rational points of the unit circle,
//!   Cayley transforms), rigid motions, point interning and placements.
//! * [`linsys`]: sparse exact elimination with a multiplier ledger, forcing
//!   certificates, Vandermonde determinants, the similarity demo on ℤ^k and
//!   infeasible-core extraction.
//! * [`search`]: the witness search and greedy witness minimization.
//! * [`combinat`]: finite coloring and transversal checkers, and the
//!   one-dimensional counterexample gallery.
//!
//! ```
//! use pompeiu::exactfield::{ComplexElem, FieldDescriptor, FieldElem};
//! use pompeiu::geometry::Point;
//! use pompeiu::search::{witness_search, Problem, SearchBudget, SearchOutcome};
//!
//! let field = FieldDescriptor::quadratic(3).unwrap();
//! let origin = Point::from_ints(&[0, 0]);
//! let problem = Problem::new(
//!     2,
//!     field,
//!     vec![origin.clone(), Point::from_ints(&[1, 0])],
//!     vec![ComplexElem::one(), ComplexElem::one()],
//!     origin,
//! )
//! .unwrap();
//! let SearchOutcome::Certificate(found) = witness_search(&problem, &SearchBudget::default()) else {
//!     panic!("expected a certificate");
//! };
//! assert_eq!(found.certificate.witness_points.len(), 3);
//! # let _ = FieldElem::zero();
//! ```

pub mod combinat;
mod error;
pub mod exactfield;
pub mod geometry;
pub mod linsys;
pub mod search;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-fields.md")]
    pub mod exact_fields {}
    #[doc = include_str!("../../../book/src/rotations.md")]
    pub mod rotations {}
    #[doc = include_str!("../../../book/src/forcing.md")]
    pub mod forcing {}
    #[doc = include_str!("../../../book/src/witness-search.md")]
    pub mod witness_search {}
    #[doc = include_str!("../../../book/src/number-theory.md")]
    pub mod number_theory {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    pub mod colorings {}
    #[doc = include_str!("../../../book/src/one-dimension.md")]
    pub mod one_dimension {}
}
