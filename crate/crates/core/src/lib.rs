//! Link invariants and slice Euler characteristic bounds for sorting links
//! into quasipositive links, strong ℂ-boundaries and ℂ-boundaries.

pub mod braid;
pub mod classify;
pub mod diagram;
pub mod embed;
pub mod homfly;
pub mod notation;
pub mod poly;
pub mod splice;

pub use braid::{BraidWord, QPFactor, QPFactorization};
pub use diagram::{LinkingMatrix, PDDiagram};
pub use poly::LaurentPoly2;

// The guide's snippets run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/notation.md")]
    mod notation {}
    #[doc = include_str!("../../../book/src/homfly.md")]
    mod homfly {}
    #[doc = include_str!("../../../book/src/chi.md")]
    mod chi {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/ovals.md")]
    mod ovals {}
}
