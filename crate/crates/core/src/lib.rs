//! Exact computations around Leibniz algebra homology: the Loday complex,
//! non-abelian tensor and exterior products of crossed modules, the universal
//! quadratic functor, and verifiers for the exact sequences relating them.

pub mod algebra;
pub mod catalog;
mod error;
pub mod exactla;
pub mod gamma;
pub mod homology;
pub mod products;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
