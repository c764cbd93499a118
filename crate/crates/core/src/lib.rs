//! Exact arithmetic for Tribonacci and Tribonacci-Lucas numbers and
//! polynomials, together with machine checks of their identities.
//!
//! ```
//! use trilucas::{seq, identities};
//!
//! assert_eq!(seq::tribonacci_lucas_poly(3).to_string(), "x^6+3x^3+3");
//! assert!(identities::verify(identities::IdentityInstance::KFromT { n: 12 }).pass);
//! ```
//!
//! The guide in `book/` walks through each module; its code samples are
//! compiled as doc-tests of this crate.

pub mod binet;
pub mod identities;
pub mod incomplete;
pub mod polyint;
pub mod seq;
pub mod series;

pub use num_bigint::BigInt;
pub use polyint::{Degree, IntPoly, ParseError};
pub use seq::{SeqValue, SequenceKind};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/binet.md")]
    mod binet {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/incomplete.md")]
    mod incomplete {}
}
