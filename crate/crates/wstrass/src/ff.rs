//! Arithmetic in the function field of a superelliptic curve, symbolic
//! Wronskians, and Wronskian weights at rational non-branch points.
//!
//! Elements are written in the normal form
//!
//! ```text
//! e = r_0(x) + r_1(x) y + ... + r_(n-1)(x) y^(n-1)
//! ```
//!
//! with rational-function coefficients; products reduce through y^n = f(x),
//! and the representation in y-degree < n is unique. Derivatives are taken
//! with respect to x, so D(x) = 1 and, by implicit differentiation,
//!
//! ```text
//! D(r(x) y^j) = (r' + r j f' / (n f)) y^j.
//! ```
//!
//! At an affine non-branch point the local coordinate is z = x - x0, whose
//! chain factor dz/dx = 1, so orders computed against d/dx agree with orders
//! against the local coordinate; the Wronskian's vanishing order at such a
//! point is exactly the q-Weierstrass weight there.

use num_traits::{One, Zero};

use crate::curve::SuperellipticCurve;
use crate::det::{berkowitz_det, Ring};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::qdiff::enumerate_basis;
use crate::ratfunc::RationalFunction;
use crate::rational::{rat_string, Rat};
use crate::series::{series_nth_root, SeriesRing, TruncatedSeries};

/// Largest Wronskian the crate will form symbolically.
pub const WRONSKIAN_SIZE_CAP: usize = 12;

/// Hard ceiling for the adaptive precision loop in [`FunctionField::point_weight`].
pub const DEFAULT_PRECISION_CAP: usize = 1 << 10;

/// Function-field element: coefficients of y^0 .. y^(n-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFElement {
    coeffs: Vec<RationalFunction>,
}

impl FFElement {
    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Local series data of a function at an affine non-branch rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalExpansion {
    pub x0: Rat,
    pub y0: Rat,
    pub series: TruncatedSeries,
}

/// Symbolic Wronskian along with the fold count of the differential it
/// defines: W of m functions transforms as an m(m-1)/2-fold differential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wronskian {
    pub element: FFElement,
    pub fold: u64,
}

/// Arithmetic context for the function field of one curve.
pub struct FunctionField<'c> {
    curve: &'c SuperellipticCurve,
    /// f'/(n f), the derivative factor of y.
    dlog_y: RationalFunction,
}

impl<'c> FunctionField<'c> {
    pub fn new(curve: &'c SuperellipticCurve) -> Self {
        let f = curve.f();
        let n = curve.cover_degree();
        let dlog_y = RationalFunction::new(
            f.derivative(),
            f.scale(&Rat::from_integer(n.into())),
        )
        .expect("n f is nonzero");
        FunctionField { curve, dlog_y }
    }

    pub fn curve(&self) -> &SuperellipticCurve {
        self.curve
    }

    fn n(&self) -> usize {
        self.curve.cover_degree() as usize
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<RationalFunction>) -> FFElement {
        assert!(coeffs.len() <= self.n(), "coefficients above y^(n-1)");
        coeffs.resize(self.n(), RationalFunction::zero());
        FFElement { coeffs }
    }

    pub fn zero(&self) -> FFElement {
        self.from_coeffs(Vec::new())
    }

    pub fn one(&self) -> FFElement {
        self.constant(Rat::one())
    }

    pub fn constant(&self, c: Rat) -> FFElement {
        self.from_coeffs(vec![RationalFunction::constant(c)])
    }

    pub fn from_rational_function(&self, r: RationalFunction) -> FFElement {
        self.from_coeffs(vec![r])
    }

    pub fn x(&self) -> FFElement {
        self.from_rational_function(RationalFunction::from_poly(UniPoly::x()))
    }

    pub fn y(&self) -> FFElement {
        self.monomial(0, 1)
    }

    /// x^a y^b with 0 <= b < n.
    pub fn monomial(&self, a: u32, b: u32) -> FFElement {
        assert!((b as usize) < self.n());
        let mut coeffs = vec![RationalFunction::zero(); self.n()];
        coeffs[b as usize] =
            RationalFunction::from_poly(UniPoly::monomial(a as usize, Rat::one()));
        FFElement { coeffs }
    }

    pub fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        FFElement { coeffs }
    }

    pub fn neg(&self, a: &FFElement) -> FFElement {
        FFElement { coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, a: &FFElement, b: &FFElement) -> FFElement {
        self.add(a, &self.neg(b))
    }

    /// Product, reduced through y^n = f.
    pub fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let n = self.n();
        let mut conv = vec![RationalFunction::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                conv[i + j] = &conv[i + j] + &t;
            }
        }
        let f = RationalFunction::from_poly(self.curve.f().clone());
        for j in (n..2 * n - 1).rev() {
            if conv[j].is_zero() {
                continue;
            }
            let folded = &conv[j] * &f;
            conv[j - n] = &conv[j - n] + &folded;
            conv[j] = RationalFunction::zero();
        }
        conv.truncate(n);
        FFElement { coeffs: conv }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm in
    /// Q(x)[y] modulo y^n - f. The modulus is irreducible for a valid curve
    /// (f separable and nonconstant), so every nonzero element is a unit.
    pub fn inv(&self, e: &FFElement) -> Result<FFElement> {
        if e.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.n();
        // modulus y^n - f
        let mut modulus = vec![RationalFunction::zero(); n + 1];
        modulus[0] = -&RationalFunction::from_poly(self.curve.f().clone());
        modulus[n] = RationalFunction::one();

        // half-extended Euclid tracking s with s * e = g mod (y^n - f)
        let mut r0 = modulus;
        let mut r1 = e.coeffs.clone();
        ytrim(&mut r1);
        let mut s0: Vec<RationalFunction> = Vec::new();
        let mut s1 = vec![RationalFunction::one()];
        while ydeg(&r1).map_or(false, |d| d > 0) {
            let (q, r) = ydivrem(&r0, &r1);
            let s = ysub(&s0, &ymul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant: y^n - f is irreducible over Q(x)
        let unit = r1.first().cloned().expect("gcd of unit element is nonzero");
        let unit_inv = unit.recip().expect("nonzero constant");
        let coeffs = s1.iter().map(|c| c * &unit_inv).collect();
        let mut out = self.from_coeffs(yreduce(coeffs, self.n()));
        out.coeffs.truncate(n);
        Ok(out)
    }

    pub fn div(&self, a: &FFElement, b: &FFElement) -> Result<FFElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Derivation with respect to x: D(r y^j) = (r' + r j f'/(n f)) y^j.
    pub fn derive(&self, e: &FFElement) -> FFElement {
        let coeffs = e
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, r)| {
                if r.is_zero() {
                    return RationalFunction::zero();
                }
                let mut d = r.derivative();
                if j > 0 {
                    let jfac = RationalFunction::constant(Rat::from_integer((j as i64).into()));
                    d = &d + &(&(r * &self.dlog_y) * &jfac);
                }
                d
            })
            .collect();
        FFElement { coeffs }
    }

    /// Wronskian determinant of the matrix whose i-th row is
    /// (e_i, D e_i, ..., D^(m-1) e_i); identically zero iff the inputs are
    /// linearly dependent over the constants.
    pub fn wronskian(&self, elems: &[FFElement]) -> Result<Wronskian> {
        let m = elems.len();
        if m == 0 {
            return Err(Error::EmptyWronskian);
        }
        if m > WRONSKIAN_SIZE_CAP {
            return Err(Error::WronskianTooLarge { m, cap: WRONSKIAN_SIZE_CAP });
        }
        let mut matrix = Vec::with_capacity(m);
        for e in elems {
            let mut row = Vec::with_capacity(m);
            let mut cur = e.clone();
            for k in 0..m {
                if k > 0 {
                    cur = self.derive(&cur);
                }
                row.push(cur.clone());
            }
            matrix.push(row);
        }
        let element = berkowitz_det(self, &matrix);
        Ok(Wronskian { element, fold: (m as u64) * (m as u64 - 1) / 2 })
    }

    fn check_affine_point(&self, x0: &Rat, y0: &Rat) -> Result<()> {
        let fx0 = self.curve.f().eval(x0);
        if fx0.is_zero() {
            return Err(Error::ExpansionAtBranchPoint);
        }
        let lhs = y0.pow(self.curve.cover_degree() as i32);
        if lhs != fx0 {
            return Err(Error::PointNotOnCurve {
                lhs: rat_string(&lhs),
                rhs: rat_string(&fx0),
            });
        }
        Ok(())
    }

    /// Series of y in t = x - x0 on the branch through (x0, y0).
    pub fn expand_y(&self, x0: &Rat, y0: &Rat, precision: usize) -> Result<TruncatedSeries> {
        self.check_affine_point(x0, y0)?;
        let fs = TruncatedSeries::poly_at(self.curve.f(), x0, precision);
        series_nth_root(&fs, self.curve.cover_degree(), y0)
    }

    /// Local series of a function-field element at an affine non-branch
    /// point with exact rational coordinates.
    pub fn expand_element(
        &self,
        e: &FFElement,
        x0: &Rat,
        y0: &Rat,
        precision: usize,
    ) -> Result<TruncatedSeries> {
        let y = self.expand_y(x0, y0, precision)?;
        let mut acc = TruncatedSeries::zero(precision);
        let mut ypow = TruncatedSeries::one(precision);
        for (j, r) in e.coeffs.iter().enumerate() {
            if j > 0 {
                ypow = &ypow * &y;
            }
            if r.is_zero() {
                continue;
            }
            let rs = r.expand_at(x0, precision)?;
            acc = &acc + &(&rs * &ypow);
        }
        Ok(acc)
    }

    /// Local coefficient series of the holomorphic q-differential basis at
    /// (x0, y0): for each (a, b) in S_{n,d,q} the series of
    /// x^a y^b / y^(q(n-1)) in t = x - x0, the coefficient of the basis
    /// element against (dt)^q. The exhibited q-canonical divisor is
    /// supported at infinity, so no local twist is needed at affine
    /// non-branch points.
    pub fn expand_basis_at_point(
        &self,
        q: u32,
        x0: &Rat,
        y0: &Rat,
        precision: usize,
    ) -> Result<Vec<LocalExpansion>> {
        self.check_affine_point(x0, y0)?;
        let basis = enumerate_basis(self.curve, q)?;
        let y = self.expand_y(x0, y0, precision)?;
        let n = self.curve.cover_degree();
        let denom = y.pow(q * (n - 1));
        let mut out = Vec::with_capacity(basis.len());
        for pair in basis {
            let xa = TruncatedSeries::poly_at(
                &UniPoly::monomial(pair.a as usize, Rat::one()),
                x0,
                precision,
            );
            let num = &xa * &y.pow(pair.b);
            let series = num.divide(&denom)?;
            out.push(LocalExpansion { x0: x0.clone(), y0: y0.clone(), series });
        }
        Ok(out)
    }

    /// q-Weierstrass weight of an affine non-branch rational point, as the
    /// vanishing order at t = 0 of the Wronskian of the expanded basis.
    ///
    /// Precision is adaptive: start at m(m-1)/2 + g(g-1)/2 + 8 terms
    /// (m = d_q), double whenever the truncated Wronskian is all zero, and
    /// fail loudly at the cap rather than guess.
    pub fn point_weight(&self, q: u32, x0: &Rat, y0: &Rat) -> Result<u64> {
        self.point_weight_with_cap(q, x0, y0, DEFAULT_PRECISION_CAP)
    }

    /// [`FunctionField::point_weight`] with an explicit precision cap.
    pub fn point_weight_with_cap(
        &self,
        q: u32,
        x0: &Rat,
        y0: &Rat,
        cap: usize,
    ) -> Result<u64> {
        self.check_affine_point(x0, y0)?;
        let g = self.curve.genus() as usize;
        let m = crate::qdiff::dimension_dq(self.curve.genus(), q)? as usize;
        let mut precision = m * (m - 1) / 2 + g * (g - 1) / 2 + 8;
        loop {
            if precision > cap {
                return Err(Error::PrecisionExhausted { cap });
            }
            let expansions = self.expand_basis_at_point(q, x0, y0, precision)?;
            let matrix: Vec<Vec<TruncatedSeries>> = expansions
                .iter()
                .map(|le| {
                    let mut row = Vec::with_capacity(m);
                    let mut cur = le.series.clone();
                    for k in 0..m {
                        if k > 0 {
                            cur = cur.derivative();
                        }
                        row.push(cur.clone());
                    }
                    row
                })
                .collect();
            let det = berkowitz_det(&SeriesRing { precision }, &matrix);
            if let Some(order) = det.order() {
                return Ok(order as u64);
            }
            precision *= 2;
        }
    }
}

impl Ring for FunctionField<'_> {
    type Elem = FFElement;
    fn zero(&self) -> FFElement {
        FunctionField::zero(self)
    }
    fn one(&self) -> FFElement {
        FunctionField::one(self)
    }
    fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FunctionField::add(self, a, b)
    }
    fn neg(&self, a: &FFElement) -> FFElement {
        FunctionField::neg(self, a)
    }
    fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FunctionField::mul(self, a, b)
    }
}

// -- small helpers for polynomials in y over Q(x), used by inversion --------

fn ytrim(p: &mut Vec<RationalFunction>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn ydeg(p: &[RationalFunction]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn ymul(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RationalFunction::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    ytrim(&mut out);
    out
}

fn ysub(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    let n = a.len().max(b.len());
    let zero = RationalFunction::zero();
    let mut out: Vec<RationalFunction> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    ytrim(&mut out);
    out
}

fn ydivrem(
    a: &[RationalFunction],
    b: &[RationalFunction],
) -> (Vec<RationalFunction>, Vec<RationalFunction>) {
    let db = ydeg(b).expect("division by zero in Q(x)[y]");
    let lb_inv = b.last().unwrap().recip().expect("leading coefficient nonzero");
    let mut r = a.to_vec();
    ytrim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![RationalFunction::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = r.last().unwrap() * &lb_inv;
        let k = dr - db;
        q[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &(&c * bc);
        }
        ytrim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

fn yreduce(mut coeffs: Vec<RationalFunction>, n: usize) -> Vec<RationalFunction> {
    coeffs.resize(n, RationalFunction::zero());
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(coeffs)
    }

    fn hyper5() -> SuperellipticCurve {
        SuperellipticCurve::new(2, p(&[1, 0, 0, 0, 0, 1])).unwrap()
    }

    #[test]
    fn derivation_basics() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        // D(x) = 1
        assert_eq!(ff.derive(&ff.x()), ff.one());
        // D(x^2) = 2x
        let x2 = ff.mul(&ff.x(), &ff.x());
        let expected = ff.from_rational_function(RationalFunction::from_poly(p(&[0, 2])));
        assert_eq!(ff.derive(&x2), expected);
        // D(y) = (f'/(n f)) y
        let dy = ff.derive(&ff.y());
        let factor = RationalFunction::new(
            c.f().derivative(),
            c.f().scale(&rat(2)),
        )
        .unwrap();
        assert!(dy.coeffs()[0].is_zero());
        assert_eq!(dy.coeffs()[1], factor);
    }

    #[test]
    fn derivation_is_leibniz_on_monomials() {
        let c = SuperellipticCurve::new(3, p(&[-1, 0, 0, 0, 1])).unwrap();
        let ff = FunctionField::new(&c);
        for (a1, b1, a2, b2) in [(0u32, 1u32, 1u32, 0u32), (2, 1, 1, 2), (3, 2, 2, 1), (1, 1, 1, 1)] {
            let u = ff.monomial(a1, b1);
            let v = ff.monomial(a2, b2);
            let lhs = ff.derive(&ff.mul(&u, &v));
            let rhs = ff.add(&ff.mul(&u, &ff.derive(&v)), &ff.mul(&v, &ff.derive(&u)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inversion_round_trips() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        for e in [ff.y(), ff.monomial(2, 1), ff.add(&ff.x(), &ff.y())] {
            let inv = ff.inv(&e).unwrap();
            assert_eq!(ff.mul(&e, &inv), ff.one());
        }
        assert!(ff.inv(&ff.zero()).is_err());
        // 1/y = y/f on a hyperelliptic curve
        let inv_y = ff.inv(&ff.y()).unwrap();
        assert!(inv_y.coeffs()[0].is_zero());
        assert_eq!(
            inv_y.coeffs()[1],
            RationalFunction::new(UniPoly::one(), c.f().clone()).unwrap()
        );
    }

    #[test]
    fn wronskian_of_independent_pair() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        // W(1, x) = det [[1, 0], [x, 1]] = 1
        let w = ff.wronskian(&[ff.one(), ff.x()]).unwrap();
        assert_eq!(w.element, ff.one());
        assert_eq!(w.fold, 1);
    }

    #[test]
    fn wronskian_detects_dependence() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let u = ff.add(&ff.x(), &ff.y());
        let cu = ff.mul(&ff.constant(rat(7)), &u);
        let w = ff.wronskian(&[u, cu]).unwrap();
        assert!(w.element.is_zero());
    }

    #[test]
    fn wronskian_alternates_and_kills_duplicates() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let a = ff.x();
        let b = ff.y();
        let ab = ff.wronskian(&[a.clone(), b.clone()]).unwrap().element;
        let ba = ff.wronskian(&[b.clone(), a.clone()]).unwrap().element;
        assert_eq!(ab, ff.neg(&ba));
        let dup = ff.wronskian(&[a.clone(), a.clone()]).unwrap().element;
        assert!(dup.is_zero());
        assert!(ff.wronskian(&[]).is_err());
        let too_many = vec![ff.one(); WRONSKIAN_SIZE_CAP + 1];
        assert!(matches!(
            ff.wronskian(&too_many),
            Err(Error::WronskianTooLarge { .. })
        ));
    }

    #[test]
    fn wronskian_of_canonical_basis_is_inverse_square_of_y() {
        // W(1/y, x/y) = 1/y^2 on y^2 = x^5 + 1
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let inv_y = ff.inv(&ff.y()).unwrap();
        let x_over_y = ff.mul(&ff.x(), &inv_y);
        let w = ff.wronskian(&[inv_y.clone(), x_over_y]).unwrap();
        let y2_inv = ff.inv(&ff.mul(&ff.y(), &ff.y())).unwrap();
        assert_eq!(w.element, y2_inv);
    }

    #[test]
    fn point_checks() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        // y0^2 != f(x0)
        assert!(matches!(
            ff.expand_basis_at_point(1, &rat(1), &rat(1), 8),
            Err(Error::PointNotOnCurve { .. })
        ));
        // branch point: f(-1) = 0
        assert!(matches!(
            ff.expand_basis_at_point(1, &rat(-1), &rat(0), 8),
            Err(Error::ExpansionAtBranchPoint)
        ));
    }

    #[test]
    fn basis_expansion_heads() {
        // at (0, 1) on y^2 = x^5 + 1: 1/y = 1 - t^5/2 + ..., x/y = t - t^6/2 + ...
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let exps = ff.expand_basis_at_point(1, &rat(0), &rat(1), 8).unwrap();
        assert_eq!(exps.len(), 2);
        let g1 = &exps[0].series;
        assert_eq!(g1.coeff(0), rat(1));
        assert_eq!(g1.coeff(5), ratio(-1, 2));
        for k in [1, 2, 3, 4, 6, 7] {
            assert_eq!(g1.coeff(k), rat(0), "coefficient {k} of 1/y");
        }
        let g2 = &exps[1].series;
        assert_eq!(g2.coeff(1), rat(1));
        assert_eq!(g2.coeff(6), ratio(-1, 2));
        for k in [0, 2, 3, 4, 5, 7] {
            assert_eq!(g2.coeff(k), rat(0), "coefficient {k} of x/y");
        }
    }

    #[test]
    fn constant_terms_on_even_model() {
        // (2, x^6 + 3) at (1, 2): both basis functions evaluate to 1/2
        let c = SuperellipticCurve::new(2, p(&[3, 0, 0, 0, 0, 0, 1])).unwrap();
        let ff = FunctionField::new(&c);
        let exps = ff.expand_basis_at_point(1, &rat(1), &rat(2), 6).unwrap();
        assert_eq!(exps.len(), 2);
        assert_eq!(exps[0].series.coeff(0), ratio(1, 2));
        assert_eq!(exps[1].series.coeff(0), ratio(1, 2));
    }

    #[test]
    fn generic_points_have_weight_zero() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        assert_eq!(ff.point_weight(1, &rat(0), &rat(1)).unwrap(), 0);
        assert_eq!(ff.point_weight(1, &rat(0), &rat(-1)).unwrap(), 0);
        let c6 = SuperellipticCurve::new(2, p(&[3, 0, 0, 0, 0, 0, 1])).unwrap();
        let ff6 = FunctionField::new(&c6);
        assert_eq!(ff6.point_weight(1, &rat(1), &rat(2)).unwrap(), 0);
    }

    #[test]
    fn symbolic_and_series_wronskians_agree() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let precision = 16;
        // series Wronskian of the expanded basis
        let exps = ff.expand_basis_at_point(1, &rat(0), &rat(1), precision).unwrap();
        let rows: Vec<Vec<TruncatedSeries>> = exps
            .iter()
            .map(|le| vec![le.series.clone(), le.series.derivative()])
            .collect();
        let det = berkowitz_det(&SeriesRing { precision }, &rows);
        // symbolic Wronskian 1/y^2 expanded at the same point
        let w = {
            let inv_y = ff.inv(&ff.y()).unwrap();
            let x_over_y = ff.mul(&ff.x(), &inv_y);
            ff.wronskian(&[inv_y, x_over_y]).unwrap().element
        };
        let symbolic = ff.expand_element(&w, &rat(0), &rat(1), precision).unwrap();
        let n = det.precision().min(symbolic.precision());
        assert!(n >= 12);
        for k in 0..n {
            assert_eq!(det.coeff(k), symbolic.coeff(k), "coefficient {k}");
        }
    }

    #[test]
    fn precision_cap_fails_loudly() {
        let c = hyper5();
        let ff = FunctionField::new(&c);
        let err = ff.point_weight_with_cap(1, &rat(0), &rat(1), 4).unwrap_err();
        assert_eq!(err, Error::PrecisionExhausted { cap: 4 });
    }
}
