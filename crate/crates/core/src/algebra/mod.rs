//! Leibniz algebras by structure constants, ideals, actions and crossed modules.

mod crossed;
pub mod examples;
mod leibniz;

pub use crossed::{inclusion_crossed_module, pullback, Action, CrossedModule, Extension, Pullback};
pub use leibniz::{
    describe, validate_leibniz, AlgebraMorphism, Ideal, LeibnizAlgebra, LeibnizReport,
    SparseBracket, Violation,
};
