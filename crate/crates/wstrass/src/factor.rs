//! Factorization of univariate polynomials over the rationals.
//!
//! Classic Zassenhaus: Yun squarefree split, Cantor-Zassenhaus factorization
//! modulo a small prime with squarefree reduction, quadratic Hensel lifting
//! past twice a Mignotte-style factor bound, then subset recombination with
//! exact trial division over the integers. Inputs in this crate have small
//! degree, so the exponential recombination step never bites.
//!
//! The curve model uses this to name affine branch places by the irreducible
//! factor of f they lie over.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::poly::{squarefree_decomposition, UniPoly};
use crate::rational::Rat;
use crate::zpoly;

/// Monic irreducible factors over the rationals with multiplicities, so the
/// input is its leading coefficient times the product. Constants factor into
/// nothing; the zero polynomial is rejected.
pub fn factor(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        let (zpart, _) = part.to_primitive_z();
        for g in factor_squarefree_z(&zpart) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    Ok(out)
}

/// Factor a squarefree primitive integer polynomial into monic rational
/// irreducibles.
fn factor_squarefree_z(f: &[BigInt]) -> Vec<UniPoly> {
    let n = match zpoly::degree(f) {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    if n == 1 {
        return vec![UniPoly::from_z(f).monic()];
    }
    let lc = f[n].clone();
    // monic transform g(x) = lc^(n-1) f(x/lc); roots scale by lc
    let mut g: Vec<BigInt> = f
        .iter()
        .enumerate()
        .map(|(i, c)| if i == n { BigInt::one() } else { c * lc.pow((n - 1 - i) as u32) })
        .collect();
    zpoly::trim(&mut g);
    factor_monic_squarefree_z(&g)
        .iter()
        .map(|u| UniPoly::from_z(u).compose_scale(&Rat::from_integer(lc.clone())).monic())
        .collect()
}

fn factor_monic_squarefree_z(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = zpoly::degree(f).unwrap();
    debug_assert!(f[n].is_one());
    if n == 1 {
        return vec![f.to_vec()];
    }

    let p = choose_prime(f);
    let modular = cantor_zassenhaus(&fp_from_z(f, p), p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // lift to p^e with p^e > 2B, B bounding any factor's coefficients
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n + 1) * zpoly::max_abs(f);
    let mut e = 1u32;
    let mut modulus = BigInt::from(p);
    while modulus <= &bound * 2 {
        modulus *= BigInt::from(p);
        e += 1;
    }
    let lifted = hensel_tree(&zm_reduce(f, &modulus), &modular, p, e);

    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &[BigInt]) -> u64 {
    // p must keep the degree (p does not divide lc) and a squarefree reduction
    for &p in SMALL_PRIMES {
        let lc = f.last().unwrap();
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_from_z(f, p);
        let dfp = fp_derivative(&fp, p);
        if dfp.is_empty() {
            continue;
        }
        let g = fp_gcd(&fp, &dfp, p);
        if fp_degree(&g) == Some(0) {
            return p;
        }
    }
    unreachable!("separable input: only finitely many primes divide the discriminant");
}

const SMALL_PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
];

// ---------------------------------------------------------------------------
// arithmetic in F_p[x]; polynomials are Vec<u64> by ascending degree
// ---------------------------------------------------------------------------

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn fp_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

fn fp_from_z(f: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut out: Vec<u64> = f.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect();
    fp_trim(&mut out);
    out
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = *a.get(i).unwrap_or(&0);
            let y = *b.get(i).unwrap_or(&0);
            (x + p - y) % p
        })
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| mulm(x, c, p)).collect();
    fp_trim(&mut out);
    out
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => fp_scale(a, invm(lc, p), p),
    }
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = fp_degree(b).expect("division by zero in F_p[x]");
    let lb_inv = invm(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    fp_trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = mulm(*r.last().unwrap(), lb_inv, p);
        let k = dr - db;
        q[k] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - mulm(c, bc, p)) % p;
        }
        fp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    fp_trim(&mut q);
    (q, r)
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fp_divrem(a, b, p).1
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// Extended Euclid: (s, t) with s*a + t*b = 1; inputs must be coprime.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(fp_degree(&r0), Some(0), "inputs must be coprime");
    let inv = invm(r0[0], p);
    (fp_scale(&s0, inv, p), fp_scale(&t0, inv, p))
}

fn fp_powmod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut result = fp_rem(&[1], modulus, p);
    let mut b = fp_rem(base, modulus, p);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            result = fp_rem(&fp_mul(&result, &b, p), modulus, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), modulus, p);
    }
    result
}

fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulm(c, (i as u64) % p, p))
        .collect();
    fp_trim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Cantor-Zassenhaus over F_p, p odd
// ---------------------------------------------------------------------------

/// Factor a monic squarefree polynomial over F_p into monic irreducibles.
fn cantor_zassenhaus(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut factors = Vec::new();
    let x = vec![0u64, 1];
    // distinct-degree stage
    let mut v = fp_monic(f, p);
    let mut h = x.clone();
    let mut k = 0usize;
    while fp_degree(&v).map_or(false, |d| d >= 2 * (k + 1)) {
        k += 1;
        h = fp_powmod(&h, &BigUint::from(p), &v, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &v, p);
        if fp_degree(&g).map_or(false, |d| d > 0) {
            equal_degree_split(&g, k, p, &mut rng, &mut factors);
            v = fp_divrem(&v, &g, p).0;
            h = fp_rem(&h, &v, p);
        }
    }
    if fp_degree(&v).map_or(false, |d| d > 0) {
        factors.push(v);
    }
    factors.sort();
    factors
}

/// Split a product of distinct monic irreducibles, all of degree k.
fn equal_degree_split(f: &[u64], k: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    let d = fp_degree(f).unwrap();
    if d == k {
        out.push(fp_monic(f, p));
        return;
    }
    let exp = (BigUint::from(p).pow(k as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let mut t: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        fp_trim(&mut t);
        if fp_degree(&t).map_or(true, |dt| dt == 0) {
            continue;
        }
        let u = fp_powmod(&t, &exp, f, p);
        let w = fp_gcd(&fp_sub(&u, &[1], p), f, p);
        if let Some(dw) = fp_degree(&w) {
            if dw > 0 && dw < d {
                equal_degree_split(&w, k, p, rng, out);
                let rest = fp_divrem(f, &w, p).0;
                equal_degree_split(&rest, k, p, rng, out);
                return;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting; coefficients are BigInt representatives in [0, p^e)
// ---------------------------------------------------------------------------

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    zpoly::trim(&mut out);
    out
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_reduce(&zpoly::mul(a, b), m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_reduce(&zpoly::sub(a, b), m)
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_reduce(&zpoly::add(a, b), m)
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn zm_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = zpoly::degree(b).expect("monic divisor is nonzero");
    debug_assert!(b[db].is_one());
    let mut r = a.to_vec();
    zpoly::trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        let k = dr - db;
        q[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = (&r[k + i] - &c * bc).mod_floor(m);
        }
        zpoly::trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (zm_reduce(&q, m), r)
}

fn fp_to_z(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: given f = g*h and s*g + t*h = 1 mod m (h and g
/// monic), produce the same data mod m_next, where m divides m_next and
/// m_next divides m^2.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m_next: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let f = zm_reduce(f, m_next);
    let e = zm_sub(&f, &zm_mul(g, h, m_next), m_next);
    let (q, r) = zm_divrem_monic(&zm_mul(s, &e, m_next), h, m_next);
    let g1 = zm_add(&zm_add(g, &zm_mul(t, &e, m_next), m_next), &zm_mul(&q, g, m_next), m_next);
    let h1 = zm_add(h, &r, m_next);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g1, m_next), &zm_mul(t, &h1, m_next), m_next),
        &[BigInt::one()],
        m_next,
    );
    let (c, d) = zm_divrem_monic(&zm_mul(s, &b, m_next), &h1, m_next);
    let s1 = zm_sub(s, &d, m_next);
    let t1 = zm_sub(&zm_sub(t, &zm_mul(t, &b, m_next), m_next), &zm_mul(&c, &g1, m_next), m_next);
    (g1, h1, s1, t1)
}

/// Lift a modular factor list of f to Z/p^e by recursive pair lifting.
/// f must be monic with f = prod(factors) mod p.
fn hensel_tree(f: &[BigInt], factors: &[Vec<u64>], p: u64, e: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let mut g0 = vec![1u64];
    for fac in left {
        g0 = fp_mul(&g0, fac, p);
    }
    let mut h0 = vec![1u64];
    for fac in right {
        h0 = fp_mul(&h0, fac, p);
    }
    let (s0, t0) = fp_bezout(&g0, &h0, p);

    let mut g = fp_to_z(&g0);
    let mut h = fp_to_z(&h0);
    let mut s = fp_to_z(&s0);
    let mut t = fp_to_z(&t0);
    let mut exp = 1u32;
    while exp < e {
        exp = (exp * 2).min(e);
        let m_next = BigInt::from(p).pow(exp);
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m_next);
    }
    let mut out = hensel_tree(&g, left, p, e);
    out.extend(hensel_tree(&h, right, p, e));
    out
}

// ---------------------------------------------------------------------------
// recombination
// ---------------------------------------------------------------------------

/// Coefficients mapped to the symmetric range (-m/2, m/2].
fn zm_balance(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    let mut out: Vec<BigInt> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    zpoly::trim(&mut out);
    out
}

fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining = f.to_vec();
    let mut result = Vec::new();
    let mut size = 1usize;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for combo in combinations(lifted.len(), size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = zm_mul(&cand, &lifted[i], modulus);
            }
            let cand = zm_balance(&cand, modulus);
            if let Some(quot) = zpoly::exact_div(&remaining, &cand) {
                result.push(cand);
                remaining = quot;
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if zpoly::degree(&remaining).map_or(false, |d| d >= 1) {
        result.push(remaining);
    }
    result
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, size, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(coeffs)
    }

    fn names(fs: &[(UniPoly, usize)]) -> Vec<(String, usize)> {
        fs.iter().map(|(f, m)| (f.to_string(), *m)).collect()
    }

    #[test]
    fn cyclotomic_split_of_x5_plus_1() {
        let fs = factor(&p(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            names(&fs),
            vec![("x + 1".to_string(), 1), ("x^4 - x^3 + x^2 - x + 1".to_string(), 1)]
        );
    }

    #[test]
    fn x4_minus_1() {
        let fs = factor(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            names(&fs),
            vec![
                ("x - 1".to_string(), 1),
                ("x + 1".to_string(), 1),
                ("x^2 + 1".to_string(), 1)
            ]
        );
    }

    #[test]
    fn irreducible_sextic() {
        // x^6 + 3 is irreducible
        let f = p(&[3, 0, 0, 0, 0, 0, 1]);
        let fs = factor(&f).unwrap();
        assert_eq!(fs, vec![(f, 1)]);
    }

    #[test]
    fn quadratic_fields_stay_separate() {
        let f = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        let fs = factor(&f).unwrap();
        assert_eq!(names(&fs), vec![("x^2 - 3".to_string(), 1), ("x^2 - 2".to_string(), 1)]);
    }

    #[test]
    fn multiplicities_and_leading_coefficient() {
        // 6 (x - 1)^2 (x^2 + x + 1)
        let f = (&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1, 1])).scale(&rat(6));
        let fs = factor(&f).unwrap();
        assert_eq!(names(&fs), vec![("x - 1".to_string(), 2), ("x^2 + x + 1".to_string(), 1)]);
    }

    #[test]
    fn non_monic_and_rational_coefficients() {
        // (2x - 1)(3x + 5)/7 has monic factors x - 1/2 and x + 5/3
        let f = (&p(&[-1, 2]) * &p(&[5, 3])).scale(&ratio(1, 7));
        let fs = factor(&f).unwrap();
        let got: Vec<UniPoly> = fs.into_iter().map(|(f, _)| f).collect();
        assert!(got.contains(&UniPoly::from_coeffs(vec![ratio(-1, 2), rat(1)])));
        assert!(got.contains(&UniPoly::from_coeffs(vec![ratio(5, 3), rat(1)])));
    }

    #[test]
    fn constants_factor_to_nothing() {
        assert!(factor(&p(&[5])).unwrap().is_empty());
        assert!(factor(&UniPoly::zero()).is_err());
    }

    #[test]
    fn product_of_factors_reconstructs_input() {
        let cases = vec![
            p(&[1, 0, 0, 0, 0, 1]),
            p(&[-1, 0, 0, 0, 1]),
            p(&[3, 0, 0, 0, 0, 0, 1]),
            p(&[2, 5, -1, 0, 3, 1]),
            p(&[-4, 0, 0, 1, 0, 0, 2, 1]),
            &p(&[1, 2, 3]) * &p(&[-7, 0, 0, 1]),
            &(&p(&[1, 1]) * &p(&[2, 1])) * &(&p(&[3, 1]) * &p(&[1, 0, 1])),
            p(&[-6, 1, 7, -3, 0, 0, 0, 0, 0, 0, 0, 2]),
        ];
        for f in cases {
            let fs = factor(&f).unwrap();
            let mut prod = UniPoly::constant(f.leading_coeff().unwrap().clone());
            for (g, m) in &fs {
                assert_eq!(g.leading_coeff(), Some(&rat(1)), "factors are monic");
                for _ in 0..*m {
                    prod = &prod * g;
                }
            }
            assert_eq!(prod, f, "product of factors must equal {f}");
        }
    }
}
