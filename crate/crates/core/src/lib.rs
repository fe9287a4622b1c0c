//! Computer algebra for graded path algebras over periodic quivers.
//!
//! The crate builds quiver presentations with homogeneous relations over the
//! rationals, completes them to Groebner bases with respect to a reverse
//! lexicographic path order, and computes with the resulting normal words:
//! Hilbert series matrices, bounded processing checks, syzygies of right
//! ideals and minimal resolutions of simple modules. The [`ngr`] module
//! generates the noncommutative Grassmannian of codimension two, which the
//! examples and the acceptance suite examine in detail.

pub mod coherence;
pub mod error;
pub mod format;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod ngr;
pub mod quiver;
pub mod cli;

pub use error::{Error, Result};
pub use groebner::{buchberger_complete, GroebnerBasis, RewriteRule, Side};
pub use quiver::{Coeff, NcPolynomial, PathOrder, PathWord, QuiverPresentation};
