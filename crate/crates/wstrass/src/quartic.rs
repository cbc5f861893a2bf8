//! Inflection data of smooth plane quartics.
//!
//! A smooth plane quartic is a canonically embedded genus-3 curve; its
//! Weierstrass points are its inflection points, of weight 1 (ordinary
//! flex, tangent contact order 3) or 2 (hyperflex, contact order 4), with
//! total weight 24. The inflection points are cut out by the Hessian, and
//! the weight of a point equals the intersection multiplicity of the curve
//! with its Hessian there.
//!
//! [`inflection_profile`] counts the points of each weight exactly: after a
//! small unimodular shear makes the x-projection generic, the resultant
//! `res_x(F, hessian F)` is a degree-24 binary form in (y, z) whose root
//! multiplicities are the weights. Validity of the shear is checked, not
//! assumed: the leading x-coefficients must be nonzero constants, the
//! resultant must keep full degree 24, no multiplicity may exceed 2, and
//! every multiplicity-2 fiber must carry a single intersection point
//! (tested through the first principal subresultant coefficient). Any
//! failure draws the next shear; the counts are shear-independent, so the
//! profile does not depend on the seed.
//!
//! [`tangent_line_test`] is the shear-free oracle at rational points: it
//! reads the contact order of the tangent line directly and returns
//! (contact order - 2), i.e. 0 for a non-inflection point, 1 for a flex,
//! 2 for a hyperflex.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::det::det_rat;
use crate::error::{Error, Result};
use crate::poly::{interpolate, poly_gcd, resultant, squarefree_decomposition, UniPoly};
use crate::rational::{rat, rat_string, Rat};

/// Sparse homogeneous form in three variables x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl TernaryForm {
    /// Build from monomial exponents; all monomials must share one total
    /// degree. An empty/zero collection yields the zero form of the stated
    /// fallback degree 0.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32, u32), Rat)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut degree: Option<u32> = None;
        for ((i, j, k), c) in terms {
            if c.is_zero() {
                continue;
            }
            let d = i + j + k;
            match degree {
                None => degree = Some(d),
                Some(expected) if expected != d => {
                    return Err(Error::MixedDegrees { a: expected, b: d })
                }
                _ => {}
            }
            let slot = map.entry((i, j, k)).or_insert_with(Rat::zero);
            *slot = &*slot + c;
        }
        map.retain(|_, c: &mut Rat| !c.is_zero());
        let degree = if map.is_empty() { 0 } else { degree.unwrap() };
        Ok(TernaryForm { degree, terms: map })
    }

    pub fn zero() -> Self {
        TernaryForm { degree: 0, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rat {
        self.terms.get(&(i, j, k)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TernaryForm::zero();
        }
        TernaryForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::MixedDegrees { a: self.degree, b: other.degree });
        }
        let items = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|(m, c)| (*m, c.clone()));
        let mut out = TernaryForm::from_terms(items)?;
        if out.is_zero() {
            out.degree = 0;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TernaryForm::zero();
        }
        let mut map: BTreeMap<(u32, u32, u32), Rat> = BTreeMap::new();
        for ((i1, j1, k1), a) in &self.terms {
            for ((i2, j2, k2), b) in &other.terms {
                let key = (i1 + i2, j1 + j2, k1 + k2);
                let slot = map.entry(key).or_insert_with(Rat::zero);
                *slot = &*slot + a * b;
            }
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            TernaryForm::zero()
        } else {
            TernaryForm { degree: self.degree + other.degree, terms: map }
        }
    }

    /// Partial derivative; var is 0, 1, 2 for x, y, z.
    pub fn partial(&self, var: usize) -> Self {
        let mut map = BTreeMap::new();
        for (&(i, j, k), c) in &self.terms {
            let (e, key) = match var {
                0 => (i, (i.wrapping_sub(1), j, k)),
                1 => (j, (i, j.wrapping_sub(1), k)),
                _ => (k, (i, j, k.wrapping_sub(1))),
            };
            if e == 0 {
                continue;
            }
            map.insert(key, c * rat(e as i64));
        }
        if map.is_empty() {
            TernaryForm::zero()
        } else {
            TernaryForm { degree: self.degree - 1, terms: map }
        }
    }

    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j, k), c) in &self.terms {
            acc = acc + c * p[0].pow(i as i32) * p[1].pow(j as i32) * p[2].pow(k as i32);
        }
        acc
    }

    /// The form as a polynomial in x after substituting y = y0, z = 1.
    pub fn x_poly_at(&self, y0: &Rat) -> UniPoly {
        let mut coeffs = vec![Rat::zero(); self.degree as usize + 1];
        for (&(i, j, _), c) in &self.terms {
            coeffs[i as usize] = &coeffs[i as usize] + c * y0.pow(j as i32);
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute variables by the rows of a linear map: the result is
    /// self(A (x,y,z)^T).
    pub fn substitute_linear(&self, a: &[[i64; 3]; 3]) -> Self {
        let lines: Vec<TernaryForm> = (0..3)
            .map(|r| {
                TernaryForm::from_terms([
                    ((1, 0, 0), rat(a[r][0])),
                    ((0, 1, 0), rat(a[r][1])),
                    ((0, 0, 1), rat(a[r][2])),
                ])
                .expect("linear form")
            })
            .collect();
        // cache powers of each line up to the degree
        let d = self.degree as usize;
        let mut pows: Vec<Vec<TernaryForm>> = Vec::with_capacity(3);
        for line in &lines {
            let mut v = vec![TernaryForm::from_terms([((0, 0, 0), Rat::one())]).unwrap()];
            for e in 1..=d {
                let next = v[e - 1].mul(line);
                v.push(next);
            }
            pows.push(v);
        }
        let mut acc = TernaryForm::zero();
        for (&(i, j, k), c) in &self.terms {
            let term = pows[0][i as usize]
                .mul(&pows[1][j as usize])
                .mul(&pows[2][k as usize])
                .scale(c);
            acc = acc.add(&term).expect("homogeneous of the same degree");
        }
        acc
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        use num_traits::Signed;
        let mut first = true;
        // descending lexicographic in (i, j, k) reads naturally
        for (&(i, j, k), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (i, j, k) == (0, 0, 0) {
                parts.push(rat_string(&mag));
            }
            for (e, var) in [(i, "x"), (j, "y"), (k, "z")] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A nonzero homogeneous quartic form in x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneQuartic {
    form: TernaryForm,
}

impl PlaneQuartic {
    pub fn new(form: TernaryForm) -> Result<Self> {
        if form.is_zero() || form.degree() != 4 {
            return Err(Error::WrongFormDegree {
                expected: 4,
                got: if form.is_zero() { None } else { Some(form.degree()) },
            });
        }
        Ok(PlaneQuartic { form })
    }

    pub fn form(&self) -> &TernaryForm {
        &self.form
    }
}

/// Determinant of the matrix of second partials: a degree-6 form (or zero
/// for degenerate inputs).
pub fn hessian(q: &PlaneQuartic) -> TernaryForm {
    let f = &q.form;
    let second: Vec<Vec<TernaryForm>> = (0..3)
        .map(|i| (0..3).map(|j| f.partial(i).partial(j)).collect())
        .collect();
    let mut acc = TernaryForm::zero();
    // cofactor expansion along the first row
    for (col, sign) in [(0usize, 1i64), (1, -1), (2, 1)] {
        let (c1, c2) = match col {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = second[1][c1]
            .mul(&second[2][c2])
            .add(&second[1][c2].mul(&second[2][c1]).scale(&rat(-1)))
            .expect("matching degrees");
        acc = acc.add(&second[0][col].mul(&minor).scale(&rat(sign))).expect("degree 6 terms");
    }
    acc
}

fn det3(a: &[[i64; 3]; 3]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Identity first, then seeded unimodular matrices with entries in [-3, 3].
fn shear_stream(seed: u64) -> impl Iterator<Item = [[i64; 3]; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    std::iter::once(identity).chain(std::iter::from_fn(move || {
        loop {
            let mut m = [[0i64; 3]; 3];
            for row in m.iter_mut() {
                for entry in row.iter_mut() {
                    *entry = rng.gen_range(-3..=3);
                }
            }
            if det3(&m).abs() == 1 {
                return Some(m);
            }
        }
    }))
}

const SHEAR_BUDGET: usize = 64;

/// Resultant of two binary forms given by coefficient vectors of a shared
/// formal degree (index = power of the first variable). Vanishes iff the
/// forms share a projective root, including one at infinity.
fn binary_form_resultant(a: &[Rat], b: &[Rat], deg: usize) -> Rat {
    let n = 2 * deg;
    let mut m = vec![vec![Rat::zero(); n]; n];
    for row in 0..deg {
        for (i, c) in a.iter().enumerate() {
            m[row][row + deg - i] = c.clone();
        }
        for (i, c) in b.iter().enumerate() {
            m[deg + row][row + deg - i] = c.clone();
        }
    }
    det_rat(m)
}

/// Smoothness test by iterated resultants.
///
/// For a shear with generic leading coefficients, a common zero of the three
/// partials forces the two elimination resultants r1 = res_x(Gx, Gy) and
/// r2 = res_x(Gx, Gz) to share a projective root, hence their binary
/// resultant vanishes. A nonzero binary resultant therefore certifies
/// smoothness; a zero can also come from unlucky alignment, so the verdict
/// "singular" is only returned after several independent shears all
/// degenerate.
pub fn is_smooth(q: &PlaneQuartic) -> bool {
    let mut zero_count = 0;
    for shear in shear_stream(SMOOTHNESS_SEED).take(SHEAR_BUDGET) {
        let g = q.form.substitute_linear(&shear);
        if g.coeff(4, 0, 0).is_zero()
            || g.coeff(3, 1, 0).is_zero()
            || g.coeff(3, 0, 1).is_zero()
        {
            continue;
        }
        let gx = g.partial(0);
        let gy = g.partial(1);
        let gz = g.partial(2);
        let r1 = eliminate_x(&gx, &gy, 9);
        let r2 = eliminate_x(&gx, &gz, 9);
        let t = binary_form_resultant(&r1, &r2, 9);
        if !t.is_zero() {
            return true;
        }
        zero_count += 1;
        if zero_count >= 8 {
            return false;
        }
    }
    // budget exhausted without a certificate either way: every elimination
    // degenerated, which only singular inputs produce in practice
    false
}

const SMOOTHNESS_SEED: u64 = 0x0051_0075;

/// Coefficients of res_x(a, b)(y, 1) as a binary form of the given degree,
/// by interpolation. Both forms must have constant nonzero leading
/// x-coefficients so specialization commutes with the resultant.
fn eliminate_x(a: &TernaryForm, b: &TernaryForm, deg: usize) -> Vec<Rat> {
    let points: Vec<(Rat, Rat)> = (0..=deg as i64)
        .map(|v| {
            let y0 = rat(v);
            let pa = a.x_poly_at(&y0);
            let pb = b.x_poly_at(&y0);
            let r = resultant(&pa, &pb).expect("specialized polynomials are nonzero");
            (y0, r)
        })
        .collect();
    let poly = interpolate(&points);
    (0..=deg).map(|i| poly.coeff(i)).collect()
}

/// Inflection counts of a smooth plane quartic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflectionProfile {
    /// Number of distinct inflection points.
    pub distinct_count: u32,
    /// Points of weight 1 (ordinary flexes).
    pub flexes: u32,
    /// Points of weight 2 (hyperflexes).
    pub hyperflexes: u32,
    /// Total weight; 24 on every smooth quartic.
    pub total: u32,
    /// The unimodular shear the accepted elimination used.
    pub shear_used: [[i64; 3]; 3],
}

impl InflectionProfile {
    /// Weight -> count, over the weights that occur.
    pub fn weight_multiset(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        if self.flexes > 0 {
            m.insert(1, self.flexes);
        }
        if self.hyperflexes > 0 {
            m.insert(2, self.hyperflexes);
        }
        m
    }
}

/// Count inflection points by weight via Hessian elimination under a seeded
/// random shear. Deterministic for a fixed seed, and the counts agree
/// across seeds.
pub fn inflection_profile(q: &PlaneQuartic, seed: u64) -> Result<InflectionProfile> {
    if !is_smooth(q) {
        return Err(Error::SingularQuartic);
    }
    for shear in shear_stream(seed).take(SHEAR_BUDGET) {
        let g = q.form.substitute_linear(&shear);
        let quartic = PlaneQuartic { form: g.clone() };
        let h = hessian(&quartic);
        // leading x-coefficients must be nonzero constants
        if g.coeff(4, 0, 0).is_zero() || h.coeff(6, 0, 0).is_zero() {
            continue;
        }
        // degree-24 resultant in y (z = 1) by interpolation
        let nodes: Vec<(Rat, Rat)> = (0..=24i64)
            .map(|v| {
                let y0 = rat(v);
                let r = resultant(&g.x_poly_at(&y0), &h.x_poly_at(&y0))
                    .expect("specializations nonzero");
                (y0, r)
            })
            .collect();
        let r_poly = interpolate(&nodes);
        // full degree means no intersection fiber escaped to z = 0
        if r_poly.degree() != Some(24) {
            continue;
        }
        let parts = squarefree_decomposition(&r_poly)?;
        if parts.iter().any(|(_, mult)| *mult > 2) {
            continue;
        }
        let deg_of = |mult: usize| {
            parts
                .iter()
                .find(|(_, m)| *m == mult)
                .and_then(|(p, _)| p.degree())
                .unwrap_or(0)
        };
        let w1 = deg_of(1) as u32;
        let w2 = deg_of(2) as u32;
        debug_assert_eq!(w1 + 2 * w2, 24);
        // every multiplicity-2 fiber must hold a single intersection point:
        // its x-gcd has degree 1, i.e. the first principal subresultant
        // coefficient does not vanish there
        if let Some((s2, _)) = parts.iter().find(|(_, m)| *m == 2) {
            let psc1 = first_subresultant_coefficient(&g, &h);
            let shared = poly_gcd(s2, &psc1)?;
            if !shared.is_constant() {
                continue;
            }
        }
        return Ok(InflectionProfile {
            distinct_count: w1 + w2,
            flexes: w1,
            hyperflexes: w2,
            total: w1 + 2 * w2,
            shear_used: shear,
        });
    }
    Err(Error::ShearBudgetExhausted { budget: SHEAR_BUDGET })
}

/// First principal subresultant coefficient of (g, h) with respect to x,
/// as a polynomial in y (z = 1), by interpolation of 8x8 minors of the
/// Sylvester layout. It vanishes at y0 exactly when the specialized gcd has
/// degree >= 2 (given that it has degree >= 1).
fn first_subresultant_coefficient(g: &TernaryForm, h: &TernaryForm) -> UniPoly {
    // degree bound from row content: 5 rows of quartic coefficients plus
    // 3 rows of sextic coefficients
    let bound = 5 * 4 + 3 * 6;
    let points: Vec<(Rat, Rat)> = (0..=bound as i64)
        .map(|v| {
            let y0 = rat(v);
            let pg = g.x_poly_at(&y0);
            let ph = h.x_poly_at(&y0);
            (y0, psc1_at(&pg, &ph))
        })
        .collect();
    interpolate(&points)
}

/// psc_1 of a degree-4 and a degree-6 polynomial: the determinant of the
/// subresultant matrix with rows x^4 g .. g, x^2 h .. h and the degree-0
/// column removed.
fn psc1_at(g: &UniPoly, h: &UniPoly) -> Rat {
    debug_assert_eq!(g.degree(), Some(4));
    debug_assert_eq!(h.degree(), Some(6));
    let mut m = vec![vec![Rat::zero(); 8]; 8];
    // columns are degrees 8 down to 1, i.e. degree = 8 - col
    for (row, shift) in (0..5).map(|r| (r, 4 - r)) {
        for (i, c) in g.coeffs().iter().enumerate() {
            let deg = i + shift;
            if deg >= 1 {
                m[row][8 - deg] = c.clone();
            }
        }
    }
    for (row, shift) in (5..8).map(|r| (r, 7 - r)) {
        for (i, c) in h.coeffs().iter().enumerate() {
            let deg = i + shift;
            if deg >= 1 {
                m[row][8 - deg] = c.clone();
            }
        }
    }
    det_rat(m)
}

/// Contact order of the tangent line minus 2: 0 at an ordinary point of the
/// curve, 1 at a flex, 2 at a hyperflex. P must be a smooth rational point
/// of the quartic.
pub fn tangent_line_test(q: &PlaneQuartic, p: &[Rat; 3]) -> Result<u32> {
    if p.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroProjectivePoint);
    }
    if !q.form.eval(p).is_zero() {
        return Err(Error::PointOffCurve);
    }
    let grad: Vec<Rat> = (0..3).map(|v| q.form.partial(v).eval(p)).collect();
    if grad.iter().all(|c| c.is_zero()) {
        return Err(Error::SingularPoint);
    }
    // a second point spanning the tangent line grad . v = 0
    let q2 = tangent_direction(&grad, p);
    // restrict the quartic to the line s P + t Q: a binary form in (s, t)
    let restricted = restrict_to_line(&q.form, p, &q2);
    // contact order at P = multiplicity of the root (s:t) = (1:0)
    let m = restricted
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::SingularQuartic)?; // the tangent line lies inside the curve
    debug_assert!(m >= 2, "tangent contact order is at least 2");
    Ok(m as u32 - 2)
}

/// A point on the line grad . v = 0 independent of p.
fn tangent_direction(grad: &[Rat], p: &[Rat; 3]) -> [Rat; 3] {
    let pivot = grad.iter().position(|c| !c.is_zero()).expect("gradient nonzero");
    let mut candidates: Vec<[Rat; 3]> = Vec::new();
    for other in 0..3 {
        if other == pivot {
            continue;
        }
        // v with v[pivot] = grad[other], v[other] = -grad[pivot]
        let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
        v[pivot] = grad[other].clone();
        v[other] = -grad[pivot].clone();
        candidates.push(v);
    }
    for v in candidates {
        if !proportional(&v, p) {
            return v;
        }
    }
    unreachable!("two independent directions span the tangent line");
}

fn proportional(a: &[Rat; 3], b: &[Rat; 3]) -> bool {
    // all 2x2 minors vanish
    for i in 0..3 {
        for j in i + 1..3 {
            if !(&a[i] * &b[j] - &a[j] * &b[i]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Coefficients of F(s p + t q) by ascending power of t.
fn restrict_to_line(f: &TernaryForm, p: &[Rat; 3], q: &[Rat; 3]) -> Vec<Rat> {
    let d = f.degree() as usize;
    // binary linear forms p_c s + q_c t as coefficient pairs
    let lines: Vec<Vec<Rat>> = (0..3).map(|c| vec![p[c].clone(), q[c].clone()]).collect();
    let mut acc = vec![Rat::zero(); d + 1];
    for (&(i, j, k), c) in f.terms() {
        let mut term = vec![c.clone()];
        for (e, line) in [(i, 0usize), (j, 1), (k, 2)] {
            for _ in 0..e {
                term = binary_mul(&term, &lines[line]);
            }
        }
        for (idx, v) in term.iter().enumerate() {
            acc[idx] = &acc[idx] + v;
        }
    }
    acc
}

fn binary_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(terms: &[((u32, u32, u32), i64)]) -> TernaryForm {
        TernaryForm::from_terms(terms.iter().map(|&(m, c)| (m, rat(c)))).unwrap()
    }

    fn fermat() -> PlaneQuartic {
        PlaneQuartic::new(form(&[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1)])).unwrap()
    }

    fn klein() -> PlaneQuartic {
        PlaneQuartic::new(form(&[((3, 1, 0), 1), ((0, 3, 1), 1), ((1, 0, 3), 1)])).unwrap()
    }

    /// y^4 = x z (x - z)(x - t z) for integer t.
    fn locus16(t: i64) -> PlaneQuartic {
        let xz = form(&[((1, 0, 0), 1)]);
        let z = form(&[((0, 0, 1), 1)]);
        let x_minus_z = form(&[((1, 0, 0), 1), ((0, 0, 1), -1)]);
        let x_minus_tz = form(&[((1, 0, 0), 1), ((0, 0, 1), -t)]);
        let rhs = xz.mul(&z).mul(&x_minus_z).mul(&x_minus_tz);
        let y4 = form(&[((0, 4, 0), 1)]);
        let f = y4.add(&rhs.scale(&rat(-1))).unwrap();
        PlaneQuartic::new(f).unwrap()
    }

    #[test]
    fn form_validation() {
        assert!(TernaryForm::from_terms([((1, 0, 0), rat(1)), ((2, 0, 0), rat(1))]).is_err());
        assert!(PlaneQuartic::new(form(&[((3, 0, 0), 1)])).is_err());
        assert!(PlaneQuartic::new(TernaryForm::zero()).is_err());
    }

    #[test]
    fn hessian_of_fermat() {
        let h = hessian(&fermat());
        assert_eq!(h, form(&[((2, 2, 2), 1728)]));
    }

    #[test]
    fn hessian_of_rank_one_form_vanishes() {
        let h = hessian(&PlaneQuartic::new(form(&[((4, 0, 0), 1)])).unwrap());
        assert!(h.is_zero());
    }

    #[test]
    fn hessian_of_klein_nonzero() {
        assert!(!hessian(&klein()).is_zero());
    }

    #[test]
    fn hessian_is_covariant_under_shears() {
        let f = klein();
        for shear in shear_stream(17).take(4) {
            let sheared = PlaneQuartic::new(f.form().substitute_linear(&shear)).unwrap();
            let lhs = hessian(&sheared);
            let rhs = hessian(&f).substitute_linear(&shear);
            // det(A)^2 = 1 for unimodular shears
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&fermat()));
        assert!(is_smooth(&klein()));
        assert!(!is_smooth(&PlaneQuartic::new(form(&[((4, 0, 0), 1)])).unwrap()));
        // nodal quartic: (x^2 + y^2)^2 - y^2 z^2 singular at (0,0,1)
        let sq = form(&[((2, 0, 0), 1), ((0, 2, 0), 1)]);
        let nodal = sq.mul(&sq).add(&form(&[((0, 2, 2), -1)])).unwrap();
        assert!(!is_smooth(&PlaneQuartic::new(nodal).unwrap()));
    }

    #[test]
    fn klein_profile() {
        let p = inflection_profile(&klein(), 1).unwrap();
        assert_eq!((p.flexes, p.hyperflexes), (24, 0));
        assert_eq!(p.distinct_count, 24);
        assert_eq!(p.total, 24);
    }

    #[test]
    fn fermat_profile() {
        let p = inflection_profile(&fermat(), 1).unwrap();
        assert_eq!((p.flexes, p.hyperflexes), (0, 12));
        assert_eq!(p.distinct_count, 12);
        assert_eq!(p.total, 24);
    }

    #[test]
    fn locus16_profile() {
        let p = inflection_profile(&locus16(3), 1).unwrap();
        assert_eq!((p.flexes, p.hyperflexes), (16, 4));
        assert_eq!(p.distinct_count, 20);
        assert_eq!(p.total, 24);
        assert_eq!(p.weight_multiset(), BTreeMap::from([(1, 16), (2, 4)]));
    }

    #[test]
    fn profiles_are_seed_independent() {
        let reference = inflection_profile(&locus16(3), 0).unwrap();
        for seed in 1..5 {
            let p = inflection_profile(&locus16(3), seed).unwrap();
            assert_eq!(
                (p.flexes, p.hyperflexes, p.distinct_count),
                (reference.flexes, reference.hyperflexes, reference.distinct_count)
            );
        }
    }

    #[test]
    fn profile_rejects_singular_input() {
        let err = inflection_profile(&PlaneQuartic::new(form(&[((4, 0, 0), 1)])).unwrap(), 0);
        assert_eq!(err, Err(Error::SingularQuartic));
    }

    #[test]
    fn tangent_test_on_klein() {
        // flex at (1, 0, 0): tangent y = 0 meets with contact order 3
        let w = tangent_line_test(&klein(), &[rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(w, 1);
    }

    #[test]
    fn tangent_test_on_locus16_orbit() {
        let q = locus16(3);
        for pt in [
            [rat(0), rat(0), rat(1)],
            [rat(1), rat(0), rat(1)],
            [rat(1), rat(0), rat(0)],
            [rat(3), rat(0), rat(1)],
        ] {
            assert_eq!(tangent_line_test(&q, &pt).unwrap(), 2, "hyperflex at {pt:?}");
        }
    }

    #[test]
    fn tangent_test_at_ordinary_point() {
        // x^4 + y^4 + x z^3 + 2 y z^3 + y^2 z^2 at (0, 0, 1): restricted form
        // has a double root only, so the point is not an inflection point
        let f = form(&[
            ((4, 0, 0), 1),
            ((0, 4, 0), 1),
            ((1, 0, 3), 1),
            ((0, 1, 3), 2),
            ((0, 2, 2), 1),
        ]);
        let q = PlaneQuartic::new(f).unwrap();
        assert_eq!(tangent_line_test(&q, &[rat(0), rat(0), rat(1)]).unwrap(), 0);
    }

    #[test]
    fn tangent_test_preconditions() {
        let q = klein();
        assert_eq!(
            tangent_line_test(&q, &[rat(1), rat(1), rat(1)]),
            Err(Error::PointOffCurve)
        );
        assert_eq!(
            tangent_line_test(&q, &[rat(0), rat(0), rat(0)]),
            Err(Error::ZeroProjectivePoint)
        );
        // y^4 - x^3 z has a singular point at (0, 0, 1)
        let cusp = PlaneQuartic::new(form(&[((0, 4, 0), 1), ((3, 0, 1), -1)])).unwrap();
        assert_eq!(
            tangent_line_test(&cusp, &[rat(0), rat(0), rat(1)]),
            Err(Error::SingularPoint)
        );
    }

    #[test]
    fn display_round_readable() {
        assert_eq!(klein().form().to_string(), "x^3*y + x*z^3 + y^3*z");
        assert_eq!(TernaryForm::zero().to_string(), "0");
    }
}
