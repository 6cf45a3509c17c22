//! Exact decision procedures for the striped-cylinder cobordism category.
//!
//! Morphisms are words in births, deaths and twists ([`diagram`]). They are
//! evaluated to affine diagrams ([`evaluator`]), whose invariants decide
//! equality and determine a unique normal form ([`normal_form`]). The
//! [`linear`] module realizes the bar representation on tensor powers with
//! exact rationals, and [`cyclic`] embeds the cyclic category and its
//! relatives.

pub mod cyclic;
pub mod diagram;
pub mod error;
pub mod evaluator;
pub mod json;
pub mod linear;
pub mod normal_form;
pub mod random;
pub mod render;
pub mod selftest;
pub mod syntax;

pub use diagram::{Generator, GeneratorWord};
pub use error::{Error, Result};
pub use evaluator::{eq_in, evaluate, AffineDiagram, CategoryTag, InvariantTuple};
