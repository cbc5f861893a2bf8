//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored by ascending degree with trailing zeros trimmed,
//! so the zero polynomial is the empty vector and [`UniPoly::degree`] returns
//! `None` for it (the "minus infinity" sentinel). Degrees in this crate stay
//! small, so the dense representation is used throughout.
//!
//! # Resultant convention
//!
//! Sign conventions for resultants vary between texts; this crate fixes
//!
//! ```text
//! res(p, q) = lc(p)^deg(q) * prod q(alpha)   over the roots alpha of p,
//! ```
//!
//! which is the determinant of the Sylvester matrix with the q-shift rows of
//! p listed first. The discriminant below depends on this choice:
//!
//! ```text
//! disc(p) = (-1)^(d(d-1)/2) * res(p, p') / lc(p),   d = deg(p).
//! ```
//!
//! Resultants are evaluated by fraction-free (Bareiss) elimination on the
//! integer Sylvester matrix, never by root-finding, and gcds run a primitive
//! pseudo-remainder sequence over the integers to avoid rational blowup.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_string, Rat};
use crate::zpoly;

/// Dense univariate polynomial over [`Rat`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    /// Coefficient of x^i at index i; trailing zeros trimmed.
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    /// The variable x.
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// c * x^deg.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// Build from coefficients by ascending degree; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of x^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients by ascending degree.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly::from_coeffs(coeffs)
    }

    /// Quotient and remainder with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let qdeg = rem.len() - 1 - dd;
        let mut quot = vec![Rat::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k + i] = &rem[k + i] - t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// True when `divisor` divides self exactly.
    pub fn divides_exactly(&self, divisor: &UniPoly) -> bool {
        match self.div_rem(divisor) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Coefficients of p(x0 + t) for t^0 .. t^(len-1), by synthetic division.
    pub fn taylor_coeffs(&self, x0: &Rat, len: usize) -> Vec<Rat> {
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            if work.is_empty() {
                out.push(Rat::zero());
                continue;
            }
            // divide work by (x - x0); remainder is the next Taylor coefficient
            let mut rem = Rat::zero();
            for c in work.iter_mut().rev() {
                let v = &rem * x0 + &*c;
                rem = v.clone();
                *c = v;
            }
            let r = work.remove(0);
            out.push(r);
        }
        out
    }

    /// Substitute x -> c*x.
    pub fn compose_scale(&self, c: &Rat) -> UniPoly {
        let mut p = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &p;
                p = &p * c;
                v
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Clear denominators: returns (primitive integer polynomial, scalar s)
    /// with self = s * primitive. Zero maps to ([], 1).
    pub(crate) fn to_primitive_z(&self) -> (Vec<BigInt>, Rat) {
        if self.is_zero() {
            return (Vec::new(), Rat::one());
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = zpoly::content(&ints);
        let sign = if ints.last().unwrap().is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        let scale = &content * &sign;
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &scale).collect();
        (prim, Rat::new(scale, denom_lcm))
    }

    pub(crate) fn from_z(coeffs: &[BigInt]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, "x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

/// Render with an explicit variable name, matching the expression grammar, so
/// parse(print(p)) round-trips.
pub fn format_poly(p: &UniPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && i > 0 { None } else { Some(rat_string(&mag)) };
        let var_part = match i {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{i}")),
        };
        match (coeff_part, var_part) {
            (Some(c), Some(v)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&v);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(v)) => out.push_str(&v),
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Monic greatest common divisor, by a primitive pseudo-remainder sequence
/// over the integers.
///
/// `gcd(p, 0)` is p made monic; both inputs zero is rejected.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    let (mut a, _) = p.to_primitive_z();
    let (mut b, _) = q.to_primitive_z();
    if zpoly::degree(&a) < zpoly::degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = zpoly::pseudo_rem(&a, &b);
        a = b;
        b = zpoly::primitive_part(&r);
    }
    Ok(UniPoly::from_z(&a).monic())
}

/// Resultant of two nonzero polynomials under the convention documented at
/// the module level: `res(p, q) = lc(p)^deg(q) * prod q(alpha)`.
///
/// Computed by Bareiss fraction-free elimination on the integer Sylvester
/// matrix after clearing denominators. Zero iff gcd(p, q) is nonconstant.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rat> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    if dp == 0 && dq == 0 {
        return Ok(Rat::one());
    }
    if dp == 0 {
        return Ok(p.coeff(0).pow(dq as i32));
    }
    if dq == 0 {
        return Ok(q.coeff(0).pow(dp as i32));
    }
    let (zp, sp) = p.to_primitive_z();
    let (zq, sq) = q.to_primitive_z();
    // res(s*P, t*Q) = s^deg(Q) * t^deg(P) * res(P, Q)
    let scale = sp.pow(dq as i32) * sq.pow(dp as i32);
    let n = dp + dq;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    // rows of p: x^(dq-1-row) * p written by descending degree
    for row in 0..dq {
        for (i, c) in zp.iter().enumerate() {
            m[row][row + (dp - i)] = c.clone();
        }
    }
    for row in 0..dp {
        for (i, c) in zq.iter().enumerate().rev() {
            m[dq + row][row + (dq - i)] = c.clone();
        }
    }
    let det = zpoly::bareiss_det(m);
    Ok(Rat::from_integer(det) * scale)
}

/// Discriminant: `(-1)^(d(d-1)/2) * res(p, p') / lc(p)`.
///
/// Zero iff p has a repeated root; rejects constants.
pub fn discriminant(p: &UniPoly) -> Result<Rat> {
    let d = p.degree().ok_or(Error::ConstantPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if d == 1 {
        return Ok(Rat::one());
    }
    let res = resultant(p, &p.derivative())?;
    let sign = if (d * (d - 1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
    Ok(sign * res / p.leading_coeff().unwrap().clone())
}

/// True iff p has no repeated root.
pub fn is_separable(p: &UniPoly) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => !discriminant(p).unwrap().is_zero(),
    }
}

/// Interpolating polynomial through distinct nodes, by Newton divided
/// differences.
pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
    if points.is_empty() {
        return UniPoly::zero();
    }
    let n = points.len();
    // divided-difference table, in place
    let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            dd[i] = (&dd[i] - &dd[i - 1]) / dx;
        }
    }
    // Horner on the Newton form
    let mut acc = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::from_coeffs(vec![-&points[i].0, Rat::one()]);
        acc = &(&acc * &lin) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

/// Yun squarefree decomposition: returns pairwise-coprime monic squarefree
/// parts with their multiplicities, so p = lc * prod part_i^(mult_i).
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let f = p.monic();
    let df = f.derivative();
    let g = poly_gcd(&f, &df)?;
    if g.is_constant() {
        return Ok(vec![(f, 1)]);
    }
    let mut out = Vec::new();
    let mut c = f.div_rem(&g)?.0;
    let mut d = &df.div_rem(&g)?.0 - &c.derivative();
    let mut i = 1;
    while !c.is_constant() {
        let a = poly_gcd(&c, &d)?;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.div_rem(&a)?.0;
        d = &d.div_rem(&a)?.0 - &c.derivative();
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn degree_and_zero_sentinel() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(UniPoly::from_coeffs(vec![rat(1), rat(0)]).degree(), Some(0));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[1, 0, 0, 0, 0, 1]); // x^5 + 1
        let b = p(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // f = x^5 + 1 separable, so gcd(f, f') = 1
        let f = p(&[1, 0, 0, 0, 0, 1]);
        let g = poly_gcd(&f, &f.derivative()).unwrap();
        assert_eq!(g, UniPoly::one());
        // gcd(p, 0) = monic p
        let g = poly_gcd(&p(&[2, 4]), &UniPoly::zero()).unwrap();
        assert_eq!(g, UniPoly::from_coeffs(vec![ratio(1, 2), rat(1)]));
        assert!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_of_scaled_pair() {
        let a = p(&[-2, 0, 2]).scale(&ratio(1, 3)); // (2x^2-2)/3
        let b = p(&[3, 3]); // 3x + 3
        assert_eq!(poly_gcd(&a, &b).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn resultant_examples() {
        // res(x - 1, x - 2) = q(1) = -1
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), rat(-1));
        // res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(), rat(3));
        // shared root
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), rat(0));
        assert!(resultant(&UniPoly::zero(), &p(&[1, 1])).is_err());
    }

    #[test]
    fn resultant_respects_leading_coefficient_convention() {
        // res(2x - 2, x - 2) = lc(p)^1 * q(1) = 2 * (-1) = -2
        assert_eq!(resultant(&p(&[-2, 2]), &p(&[-2, 1])).unwrap(), rat(-2));
        // swap picks up (-1)^(deg p * deg q)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-2, 1]);
        let ab = resultant(&a, &b).unwrap();
        let ba = resultant(&b, &a).unwrap();
        assert_eq!(ab, ba); // deg product even here: 2 * 1 -> (-1)^2
    }

    #[test]
    fn discriminant_examples() {
        // x^2 + bx + c -> b^2 - 4c, a few specializations
        for (b, c) in [(3i64, 1i64), (0, -1), (-5, 7)] {
            let d = discriminant(&p(&[c, b, 1])).unwrap();
            assert_eq!(d, rat(b * b - 4 * c));
        }
        assert_eq!(discriminant(&p(&[-1, 0, 1])).unwrap(), rat(4));
        // (x - 1)^2 has a repeated root
        assert_eq!(discriminant(&p(&[1, -2, 1])).unwrap(), rat(0));
        assert!(discriminant(&p(&[7])).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[2, -3, 0, 1]);
        let pts: Vec<(Rat, Rat)> = (0..5).map(|i| (rat(i), f.eval(&rat(i)))).collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        let f = p(&[1, 0, 0, 0, 0, 1]);
        assert_eq!(squarefree_decomposition(&f).unwrap(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn taylor_shift() {
        let f = p(&[1, 2, 1]); // (x+1)^2
        let t = f.taylor_coeffs(&rat(-1), 4);
        assert_eq!(t, vec![rat(0), rat(0), rat(1), rat(0)]);
    }

    #[test]
    fn display_and_format() {
        assert_eq!(p(&[-1, 0, 0, 0, 1]).to_string(), "x^4 - 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let f = UniPoly::from_coeffs(vec![ratio(1, 2), rat(-1), rat(3)]);
        assert_eq!(f.to_string(), "3*x^2 - x + 1/2");
    }
}
