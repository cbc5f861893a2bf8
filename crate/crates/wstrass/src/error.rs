//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the library.
///
/// Every variant names the violated precondition; the CLI maps these to
/// exit code 1 (domain errors) as opposed to parse/usage errors (exit 2).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // -- polynomial / scalar arithmetic -------------------------------------
    #[error("resultant requires both polynomials nonzero")]
    ZeroPolynomial,
    #[error("discriminant requires a polynomial of degree >= 1")]
    ConstantPolynomial,
    #[error("series has zero constant term; valuation > 0 is not supported here")]
    SeriesZeroConstantTerm,
    #[error("supplied root does not satisfy root^{n} = constant term")]
    SeriesRootMismatch { n: u32 },
    #[error("series division needs dividend valuation >= divisor valuation")]
    SeriesValuation,
    #[error("division by the zero polynomial")]
    DivisionByZero,

    // -- curve model ---------------------------------------------------------
    #[error("cover degree n must be at least 2 (got {n})")]
    CoverDegreeTooSmall { n: i64 },
    #[error("deg f = {d} must exceed the cover degree n = {n}")]
    DegreeNotAboveCover { d: i64, n: i64 },
    #[error("f is not separable (it has a repeated root)")]
    NotSeparable,
    #[error("curve has genus {genus} < 2")]
    GenusTooSmall { genus: i64 },
    #[error("x - c vanishes at a branch point: f({c}) = 0; use the branch-root generator instead")]
    FiberOverBranchPoint { c: String },
    #[error("branch place index {index} out of range (curve has {count} branch places)")]
    BranchIndexOutOfRange { index: usize, count: usize },

    // -- q-differential bases ------------------------------------------------
    #[error("q must be a positive integer (got {q})")]
    QOutOfRange { q: i64 },
    #[error("infinite-place gap data requires gcd(n, d) = 1 (got gcd = {gcd})")]
    GcdNotOne { gcd: u64 },
    #[error("gap-sequence enumeration capped at genus {cap} (asked for {g})")]
    GenusAboveCap { g: u32, cap: u32 },
    #[error("genus must be at least {min} (got {g})")]
    GenusBelow { g: i64, min: i64 },

    // -- Wronskians / local expansions ----------------------------------------
    #[error("point lies over a branch point: f(x0) = 0; branch weights come from the basis orders")]
    ExpansionAtBranchPoint,
    #[error("y0^n = {lhs} does not equal f(x0) = {rhs}; the point is not on the curve")]
    PointNotOnCurve { lhs: String, rhs: String },
    #[error("rational function has a pole at the expansion point")]
    PoleAtExpansionPoint,
    #[error("Wronskian order not resolved below the precision cap {cap}")]
    PrecisionExhausted { cap: usize },
    #[error("Wronskian of an empty list")]
    EmptyWronskian,
    #[error("Wronskian size {m} exceeds the configured cap {cap}")]
    WronskianTooLarge { m: usize, cap: usize },

    // -- plane quartics --------------------------------------------------------
    #[error("polynomial is not homogeneous: monomials of degree {a} and {b} both present")]
    MixedDegrees { a: u32, b: u32 },
    #[error("form must be nonzero of degree {expected} (got degree {got:?})")]
    WrongFormDegree { expected: u32, got: Option<u32> },
    #[error("quartic is singular; inflection data is defined for smooth curves only")]
    SingularQuartic,
    #[error("point does not lie on the curve")]
    PointOffCurve,
    #[error("point is a singular point of the curve")]
    SingularPoint,
    #[error("projective point must be nonzero")]
    ZeroProjectivePoint,
    #[error("shear retry budget exhausted after {budget} attempts")]
    ShearBudgetExhausted { budget: usize },

    // -- ramification / automorphism bounds -------------------------------------
    #[error("ramification multiplicity {m} out of range: need 2 <= m <= deg = {deg}")]
    MultiplicityOutOfRange { m: u64, deg: u64 },
    #[error("covering degree must be at least 1")]
    DegreeZeroCover,
    #[error("ramification total is odd; no integral genus satisfies the formula")]
    RamificationParity,
    #[error("formula gives negative genus {g}")]
    NegativeGenus { g: i64 },
    #[error("automorphism order must be at least 2 (got {order})")]
    OrderTooSmall { order: i64 },
    #[error("signature search space is empty under the given limits")]
    EmptySearchSpace,

    // -- expression parsing -------------------------------------------------------
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
