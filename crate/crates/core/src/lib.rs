#![no_std]
//! Exact computations with finite-dimensional coalgebras and Hopf algebras over
//! cyclotomic fields: coradicals, link quivers, link-indecomposable components,
//! multiplicative matrices and smash coproducts.

extern crate alloc;

pub mod coalg;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod link;
pub mod matcalc;
pub mod radical;
pub mod report;
pub mod scalar;
pub mod smash;

pub use error::{Error, Result};
pub use scalar::{Cyclo, Poly, Rational};
