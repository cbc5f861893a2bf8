//! Rational functions in one variable: reduced fractions of [`UniPoly`]
//! with a monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{format_poly, poly_gcd, UniPoly};
use crate::rational::Rat;
use crate::series::TruncatedSeries;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Construct and reduce; the denominator must be nonzero.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: UniPoly::one() });
        }
        let g = poly_gcd(&num, &den)?;
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        // move the denominator's leading coefficient into the numerator
        let lc = den.leading_coeff().unwrap().clone();
        Ok(RationalFunction { num: num.scale(&lc.recip()), den: den.monic() })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(UniPoly::one())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Quotient-rule derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFunction::new(num, den).expect("denominator square is nonzero")
    }

    /// Evaluate; errors at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtExpansionPoint);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Series expansion around x0, in t = x - x0; errors at a pole.
    pub fn expand_at(&self, x0: &Rat, precision: usize) -> Result<TruncatedSeries> {
        if self.den.eval(x0).is_zero() {
            return Err(Error::PoleAtExpansionPoint);
        }
        let num = TruncatedSeries::poly_at(&self.num, x0, precision);
        let den = TruncatedSeries::poly_at(&self.den, x0, precision);
        num.divide(&den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", format_poly(&self.num, "x"))
        } else {
            write!(f, "({}) / ({})", format_poly(&self.num, "x"), format_poly(&self.den, "x"))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominators nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominators nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        let num = &self.num * &rhs.den;
        let den = &self.den * &rhs.num;
        RationalFunction::new(num, den).expect("checked nonzero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(r.denominator(), &UniPoly::one());
        assert_eq!(r.numerator(), &UniPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]));
        assert!(RationalFunction::new(p(&[1]), UniPoly::zero()).is_err());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let r = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        let d = r.derivative();
        assert_eq!(d, RationalFunction::new(p(&[-1]), p(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn field_ops() {
        let a = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap(); // 1/x
        let b = RationalFunction::from_poly(p(&[0, 1])); // x
        assert_eq!(&a * &b, RationalFunction::one());
        let s = &a + &b; // (x^2 + 1)/x
        assert_eq!(s, RationalFunction::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap());
        assert_eq!(&s - &b, a);
    }

    #[test]
    fn expansion_matches_geometric_series() {
        // 1/(1 - x) at x0 = 0
        let r = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let s = r.expand_at(&rat(0), 5).unwrap();
        assert_eq!(s.coeffs(), &[rat(1), rat(1), rat(1), rat(1), rat(1)]);
        // pole
        assert!(r.expand_at(&rat(1), 5).is_err());
    }
}
