//! Determinants over the coefficient rings used in this crate.
//!
//! [`berkowitz_det`] is division-free, so it works over any commutative
//! ring (truncated series, function-field elements, polynomials), not just
//! fields. [`det_rat`] is plain fraction Gaussian elimination for rational
//! matrices, used where entries are scalars.

use num_traits::Zero;

use crate::rational::Rat;

/// Commutative-ring context; elements carry no ring handle of their own, so
/// constants come from the context (a series ring needs a precision, the
/// function field needs its curve).
pub trait Ring {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// Determinant by the Berkowitz vector recursion (no divisions).
///
/// Builds the characteristic-polynomial coefficient vector of each leading
/// principal submatrix from the previous one via a Toeplitz product; the
/// determinant is the constant coefficient up to sign.
pub fn berkowitz_det<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    // v holds the characteristic vector of the leading i x i submatrix
    let mut v: Vec<R::Elem> = vec![ring.one()];
    for i in 0..n {
        // Toeplitz column: [1, -m[i][i], -(R S^0 C), -(R S^1 C), ...]
        // with R the row left of the pivot, C the column above it, S the
        // leading (i x i) submatrix.
        let mut col: Vec<R::Elem> = Vec::with_capacity(i + 2);
        col.push(ring.one());
        col.push(ring.neg(&m[i][i]));
        if i > 0 {
            // iteratively w = S^k C, pushing -(R w)
            let mut w: Vec<R::Elem> = (0..i).map(|r| m[r][i].clone()).collect();
            for _ in 0..i {
                let mut dot = ring.zero();
                for (k, wk) in w.iter().enumerate() {
                    dot = ring.add(&dot, &ring.mul(&m[i][k], wk));
                }
                col.push(ring.neg(&dot));
                let next: Vec<R::Elem> = (0..i)
                    .map(|r| {
                        let mut acc = ring.zero();
                        for (k, wk) in w.iter().enumerate() {
                            acc = ring.add(&acc, &ring.mul(&m[r][k], wk));
                        }
                        acc
                    })
                    .collect();
                w = next;
            }
        }
        // v_next = T v where T is lower-triangular Toeplitz with column `col`
        let mut next = vec![ring.zero(); i + 2];
        for (r, slot) in next.iter_mut().enumerate() {
            let mut acc = ring.zero();
            for (k, c) in col.iter().enumerate().take(r + 1) {
                if let Some(prev) = v.get(r - k) {
                    acc = ring.add(&acc, &ring.mul(c, prev));
                }
            }
            *slot = acc;
        }
        v = next;
    }
    // char poly is sum v[k] lambda^(n-k); det = (-1)^n * p(0)
    let p0 = v[n].clone();
    if n % 2 == 1 {
        ring.neg(&p0)
    } else {
        p0
    }
}

/// The rationals as a [`Ring`].
pub struct RatRing;

impl Ring for RatRing {
    type Elem = Rat;
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        num_traits::One::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn det_rat(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    if n == 0 {
        return num_traits::One::one();
    }
    let mut det: Rat = num_traits::One::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = det * &pivot;
        let inv = pivot.recip();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k..n {
                let t = &factor * &m[k][j];
                m[i][j] = &m[i][j] - t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect()
    }

    #[test]
    fn berkowitz_matches_gaussian() {
        let cases: Vec<Vec<Vec<Rat>>> = vec![
            mat(&[&[2]]),
            mat(&[&[1, 2], &[3, 4]]),
            mat(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]),
            mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]), // singular
            mat(&[&[3, 1, 0, 2], &[-1, 4, 2, 1], &[0, 0, 5, -2], &[1, 1, 1, 1]]),
        ];
        for m in cases {
            let b = berkowitz_det(&RatRing, &m);
            let g = det_rat(m);
            assert_eq!(b, g);
        }
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(det_rat(Vec::new()), rat(1));
        assert_eq!(berkowitz_det(&RatRing, &[]), rat(1));
    }
}
