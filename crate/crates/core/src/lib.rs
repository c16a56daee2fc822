//! Exact F-method computations for the pairs `(SL(n+1), SL(n))` and
//! `(GL(n+1), GL(n))`.
//!
//! Everything is exact rational arithmetic on graded polynomial spaces:
//! infinitesimal actions in the noncompact and Fourier pictures, the
//! F-system solver and classification scans, the symmetry breaking operators
//! and their factorizations, Fourier-picture Verma homomorphisms and
//! truncated branching computations.

pub mod algebra;
pub mod branch;
pub mod cli;
pub mod error;
pub mod fmethod;
pub mod liealg;
pub mod operators;
pub mod params;
pub mod rep;
pub mod report;
pub mod verma;
pub mod weyl;

pub use error::{Error, Result};
