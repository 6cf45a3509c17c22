//! Exact linear representations: the bar functor on tensor powers of a
//! vector space, and affine Temperley-Lieb elements over `Q[δ]`.

mod bar;
mod matrix;
mod poly;
mod tl;

pub use bar::{gen_matrix, word_matrix, BarRep};
pub use matrix::Matrix;
pub use poly::Poly;
pub use tl::{tl_compose, tl_evaluate, tl_from_word, TLElement};

pub type Rational = num_rational::BigRational;
