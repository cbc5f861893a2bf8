//! Truncated power series with explicit, value-carried precision.
//!
//! A series stores coefficients of t^0 .. t^(N-1) where N is its precision;
//! nothing beyond N is known. Arithmetic takes the minimum of the operand
//! precisions (division additionally loses the divisor's valuation), so
//! precision is never an implicit global setting.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Coefficient of t^i at index i; len <= precision, implicit zeros beyond.
    coeffs: Vec<Rat>,
    /// Number of tracked powers.
    precision: usize,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rat>, precision: usize) -> Self {
        coeffs.truncate(precision);
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        TruncatedSeries { coeffs, precision }
    }

    pub fn zero(precision: usize) -> Self {
        TruncatedSeries { coeffs: Vec::new(), precision }
    }

    pub fn one(precision: usize) -> Self {
        TruncatedSeries::constant(Rat::one(), precision)
    }

    pub fn constant(c: Rat, precision: usize) -> Self {
        TruncatedSeries::new(vec![c], precision)
    }

    /// The polynomial p read as a series in its own variable.
    pub fn from_poly(p: &UniPoly, precision: usize) -> Self {
        TruncatedSeries::new(p.coeffs().to_vec(), precision)
    }

    /// Expansion of p(x0 + t).
    pub fn poly_at(p: &UniPoly, x0: &Rat, precision: usize) -> Self {
        TruncatedSeries::new(p.taylor_coeffs(x0, precision), precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, i: usize) -> Rat {
        debug_assert!(i < self.precision, "coefficient beyond tracked precision");
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Least index with a nonzero coefficient, or `None` when every tracked
    /// coefficient vanishes (order >= precision).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncated(&self, precision: usize) -> Self {
        TruncatedSeries::new(self.coeffs.clone(), precision.min(self.precision))
    }

    /// Reinterpret with a larger precision, treating untracked coefficients
    /// as zero. Only meaningful inside iterations that correct them.
    fn assume_precision(&self, precision: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs.clone(), precision }
    }

    /// Termwise derivative d/dt; one coefficient of information is lost.
    pub fn derivative(&self) -> Self {
        let precision = self.precision.saturating_sub(1);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        TruncatedSeries::new(coeffs, precision)
    }

    /// Divide by t^k; requires order >= k (an all-zero series just drops
    /// precision).
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if let Some(ord) = self.order() {
            if ord < k {
                return Err(Error::SeriesValuation);
            }
        }
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        Ok(TruncatedSeries::new(coeffs, self.precision.saturating_sub(k)))
    }

    /// Multiplicative inverse of a unit (nonzero constant term).
    pub fn inverse(&self) -> Result<Self> {
        if self.order() != Some(0) {
            return Err(Error::SeriesZeroConstantTerm);
        }
        let n = self.precision;
        let a0_inv = self.coeff(0).recip();
        let mut out = vec![Rat::zero(); n.min(usize::MAX)];
        out[0] = a0_inv.clone();
        for k in 1..n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                let ai = self.coeff(i);
                if ai.is_zero() {
                    continue;
                }
                acc = acc + ai * &out[k - i];
            }
            out[k] = -(acc * &a0_inv);
        }
        Ok(TruncatedSeries::new(out, n))
    }

    /// Division with the valuation-shift rule: the result has precision
    /// min(precisions) - val(divisor).
    pub fn divide(&self, rhs: &Self) -> Result<Self> {
        let v = rhs.order().ok_or(Error::SeriesZeroConstantTerm)?;
        let num = self.shift_down(v)?;
        let den = rhs.shift_down(v).expect("order checked");
        Ok(&num * &den.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.precision);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let precision = self.precision.min(rhs.precision);
        let n = self.coeffs.len().max(rhs.coeffs.len()).min(precision);
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
                    + rhs.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
            })
            .collect();
        TruncatedSeries::new(coeffs, precision)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let precision = self.precision.min(rhs.precision);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return TruncatedSeries::zero(precision);
        }
        let n = (self.coeffs.len() + rhs.coeffs.len() - 1).min(precision);
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        TruncatedSeries::new(coeffs, precision)
    }
}

/// Series of a fixed precision as a [`crate::det::Ring`], for division-free
/// determinants of series matrices.
pub struct SeriesRing {
    pub precision: usize,
}

impl crate::det::Ring for SeriesRing {
    type Elem = TruncatedSeries;
    fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.precision)
    }
    fn one(&self) -> TruncatedSeries {
        TruncatedSeries::one(self.precision)
    }
    fn add(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a + b
    }
    fn neg(&self, a: &TruncatedSeries) -> TruncatedSeries {
        -a
    }
    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a * b
    }
}

/// n-th root of a series with invertible constant term, seeded by an exact
/// rational root of that constant term.
///
/// Newton's iteration for r^n = s, doubling the working precision each step,
/// so the result agrees with s to the full precision of s.
pub fn series_nth_root(s: &TruncatedSeries, n: u32, root0: &Rat) -> Result<TruncatedSeries> {
    assert!(n >= 1);
    if s.order() != Some(0) {
        return Err(Error::SeriesZeroConstantTerm);
    }
    let c0 = s.coeff(0);
    if root0.pow(n as i32) != c0 {
        return Err(Error::SeriesRootMismatch { n });
    }
    let target = s.precision;
    let n_rat = Rat::from_integer(BigInt::from(n));
    let mut r = TruncatedSeries::constant(root0.clone(), 1);
    while r.precision() < target {
        let prec = (r.precision() * 2).min(target);
        let r_ext = r.assume_precision(prec);
        let s_cut = s.truncated(prec);
        // r <- r - (r^n - s) / (n r^(n-1))
        let rn1 = r_ext.pow(n - 1);
        let num = &(&rn1 * &r_ext) - &s_cut;
        let den = &TruncatedSeries::constant(n_rat.clone(), prec) * &rn1;
        let step = num.divide(&den)?;
        r = &r_ext - &step;
    }
    Ok(r)
}
