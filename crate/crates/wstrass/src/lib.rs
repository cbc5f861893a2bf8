//! Exact computation of Weierstrass-point data on superelliptic curves and
//! smooth plane quartics.
//!
//! The crate works over the rationals with no floating point anywhere:
//! genus and divisor arithmetic for curves `y^n = f(x)`, bases of
//! holomorphic q-differentials with gap sequences and weights at branch
//! points, Wronskian weights at rational points, inflection profiles of
//! plane quartics via Hessian elimination, and ramification/automorphism
//! bounds.
//!
//! See the book under `book/` for a guided tour, or start with
//! [`curve::SuperellipticCurve`] and [`qdiff::branch_gap_sequence`].

pub mod bounds;
pub mod curve;
pub mod det;
pub mod error;
pub mod expr;
pub mod factor;
pub mod ff;
pub mod poly;
pub mod qdiff;
pub mod quartic;
pub mod ratfunc;
pub mod rational;
pub mod series;
mod zpoly;

pub use error::{Error, Result};
pub use poly::UniPoly;
pub use rational::Rat;
