//! Holomorphic q-differentials on a superelliptic curve: basis enumeration,
//! gap sequences and weights at branch points, semigroup gaps at a totally
//! ramified infinite place, total-weight formulas, and enumeration of the
//! candidate gap sequences of a given genus.
//!
//! For `y^n = f(x)` with deg f = d and G = gcd(n, d), the monomial
//! q-differentials
//!
//! ```text
//! h_{a,b} = (x - alpha)^a y^b (dx / y^(n-1))^q
//! ```
//!
//! are holomorphic exactly when (a, b) lies in
//!
//! ```text
//! S_{n,d,q} = { (a, b) : a >= 0, 0 <= b < n, 0 <= a n + b d <= (2g-2) q },
//! ```
//!
//! and this set has exactly d_q elements, the dimension of the space of
//! holomorphic q-differentials. At every affine branch point B_i the order
//! of h_{a,b} is a*n + b, independent of which root alpha_i sits below the
//! point, and distinct across the basis since 0 <= b < n. The q-gap
//! sequence at B_i is therefore { a n + b + 1 } and the q-Weierstrass
//! weight is its excess over {1, ..., d_q}. Those formulas depend only on
//! (n, d, q), which is why this module exposes branch data per curve rather
//! than per branch point.


use crate::curve::SuperellipticCurve;
use crate::error::{Error, Result};

/// Exponent pair (a, b) of a basis q-differential, with 0 <= b < n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentPair {
    pub a: u32,
    pub b: u32,
}

impl ExponentPair {
    /// Order of vanishing a*n + b of the differential at any affine branch
    /// point.
    pub fn branch_order(&self, n: u32) -> u64 {
        self.a as u64 * n as u64 + self.b as u64
    }
}

/// A gap sequence together with its weight sum (n_i - i).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GapSequence {
    gaps: Vec<u64>,
    weight: u64,
}

impl GapSequence {
    /// Build from strictly increasing gap numbers.
    pub fn new(gaps: Vec<u64>) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]), "gaps strictly increasing");
        let weight = gaps.iter().enumerate().map(|(i, &n)| n - (i as u64 + 1)).sum();
        GapSequence { gaps, weight }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }
}

/// Dimension d_q of the space of holomorphic q-differentials on a genus-g
/// curve: g for q = 1, (g-1)(2q-1) for q >= 2.
pub fn dimension_dq(g: u32, q: u32) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusBelow { g: g as i64, min: 2 });
    }
    if q < 1 {
        return Err(Error::QOutOfRange { q: q as i64 });
    }
    Ok(if q == 1 { g as u64 } else { (g as u64 - 1) * (2 * q as u64 - 1) })
}

/// The exponent set S_{n,d,q}, sorted by branch order a*n + b. Its size
/// always equals [`dimension_dq`].
pub fn enumerate_basis(curve: &SuperellipticCurve, q: u32) -> Result<Vec<ExponentPair>> {
    if q < 1 {
        return Err(Error::QOutOfRange { q: q as i64 });
    }
    let n = curve.cover_degree() as u64;
    let d = curve.f_degree() as u64;
    let budget = (2 * curve.genus() as u64 - 2) * q as u64;
    let mut pairs = Vec::new();
    for b in 0..n {
        if b * d > budget {
            break;
        }
        let max_a = (budget - b * d) / n;
        for a in 0..=max_a {
            pairs.push(ExponentPair { a: a as u32, b: b as u32 });
        }
    }
    pairs.sort_by_key(|p| p.branch_order(curve.cover_degree()));
    debug_assert_eq!(
        pairs.len() as u64,
        dimension_dq(curve.genus(), q).expect("curve genus >= 2"),
    );
    Ok(pairs)
}

/// q-gap sequence at an affine branch point: gap numbers a*n + b + 1 over
/// S_{n,d,q}. The same for every branch point of the curve.
pub fn branch_gap_sequence(curve: &SuperellipticCurve, q: u32) -> Result<GapSequence> {
    let basis = enumerate_basis(curve, q)?;
    let n = curve.cover_degree();
    let gaps = basis.iter().map(|p| p.branch_order(n) + 1).collect();
    Ok(GapSequence::new(gaps))
}

/// The common q-Weierstrass weight of every affine branch point; always
/// positive, so branch points are q-Weierstrass points for every q.
pub fn branch_weight(curve: &SuperellipticCurve, q: u32) -> Result<u64> {
    Ok(branch_gap_sequence(curve, q)?.weight())
}

/// Gap data at the single infinite place when gcd(n, d) = 1 and q = 1.
///
/// x and y have pole orders n and d there, so the non-gaps form the
/// numerical semigroup generated by n and d; the gaps are its complement in
/// [1, 2g-1], of which there are exactly g.
pub fn infinite_gap_data(curve: &SuperellipticCurve) -> Result<GapSequence> {
    let g_count = curve.num_infinite_places();
    if g_count != 1 {
        return Err(Error::GcdNotOne { gcd: g_count as u64 });
    }
    let n = curve.cover_degree() as u64;
    let d = curve.f_degree() as u64;
    let bound = 2 * curve.genus() as u64 - 1;
    let mut non_gap = vec![false; bound as usize + 1];
    non_gap[0] = true;
    for v in 1..=bound {
        let from_n = v >= n && non_gap[(v - n) as usize];
        let from_d = v >= d && non_gap[(v - d) as usize];
        non_gap[v as usize] = from_n || from_d;
    }
    let gaps: Vec<u64> = (1..=bound).filter(|&v| !non_gap[v as usize]).collect();
    debug_assert_eq!(gaps.len(), curve.genus() as usize, "exactly g gap numbers");
    Ok(GapSequence::new(gaps))
}

/// Total q-Weierstrass weight over the whole curve: g^3 - g for q = 1,
/// g(g-1)^2 (2q-1)^2 for q >= 2.
pub fn total_weight(g: u32, q: u32) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusBelow { g: g as i64, min: 2 });
    }
    if q < 1 {
        return Err(Error::QOutOfRange { q: q as i64 });
    }
    let g = g as u64;
    Ok(if q == 1 {
        g * g * g - g
    } else {
        let m = 2 * q as u64 - 1;
        g * (g - 1) * (g - 1) * m * m
    })
}

/// Total inflectionary weight (r+1)(d + rg - r) of a degree-d dimension-r
/// linear system on a genus-g curve.
pub fn total_inflectionary_weight(r: i64, d: i64, g: i64) -> i64 {
    (r + 1) * (d + r * g - r)
}

/// Default cap on [`enumerate_gap_sequences`]; every sequence is realizable
/// by some curve up to genus 9, and the enumeration stays fast there.
pub const GAP_SEQUENCE_GENUS_CAP: u32 = 9;

/// All candidate gap sequences of genus g: g-element subsets of [1, 2g-1]
/// containing 1 whose complement in the naturals is closed under addition,
/// in lexicographic order.
pub fn enumerate_gap_sequences(g: u32) -> Result<Vec<GapSequence>> {
    enumerate_gap_sequences_capped(g, GAP_SEQUENCE_GENUS_CAP)
}

/// [`enumerate_gap_sequences`] with an explicit genus cap.
pub fn enumerate_gap_sequences_capped(g: u32, cap: u32) -> Result<Vec<GapSequence>> {
    if g < 1 {
        return Err(Error::GenusBelow { g: g as i64, min: 1 });
    }
    if g > cap {
        return Err(Error::GenusAboveCap { g, cap });
    }
    let bound = (2 * g - 1) as usize;
    let mut out = Vec::new();
    // status[v]: true = non-gap; index 0 is the semigroup's 0
    let mut non_gap = vec![true; bound + 1];
    let mut gaps: Vec<u64> = Vec::with_capacity(g as usize);
    search_gap_sets(1, g as usize, bound, &mut non_gap, &mut gaps, &mut out);
    out.sort_by(|a, b| a.gaps.cmp(&b.gaps));
    Ok(out)
}

/// Depth-first choice of gap/non-gap for each integer in [1, 2g-1], pruning
/// with semigroup closure: v must be a non-gap whenever it is a sum of two
/// smaller non-gaps, and sums beyond 2g-1 are unconstrained.
fn search_gap_sets(
    v: usize,
    g: usize,
    bound: usize,
    non_gap: &mut Vec<bool>,
    gaps: &mut Vec<u64>,
    out: &mut Vec<GapSequence>,
) {
    if v > bound {
        if gaps.len() == g {
            out.push(GapSequence::new(gaps.clone()));
        }
        return;
    }
    let remaining = bound - v + 1;
    if gaps.len() + remaining < g {
        return; // cannot reach g gaps
    }
    let forced_non_gap = (1..v).any(|u| non_gap[u] && non_gap[v - u]);
    // try v as a non-gap (only if enough slots remain is handled above)
    if gaps.len() + remaining > g || forced_non_gap {
        non_gap[v] = true;
        search_gap_sets(v + 1, g, bound, non_gap, gaps, out);
    }
    // try v as a gap
    if !forced_non_gap && gaps.len() < g {
        non_gap[v] = false;
        gaps.push(v as u64);
        search_gap_sets(v + 1, g, bound, non_gap, gaps, out);
        gaps.pop();
        non_gap[v] = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    fn curve(n: u32, coeffs: &[i64]) -> SuperellipticCurve {
        SuperellipticCurve::new(n, UniPoly::from_i64_coeffs(coeffs)).unwrap()
    }

    fn hyper5() -> SuperellipticCurve {
        curve(2, &[1, 0, 0, 0, 0, 1]) // y^2 = x^5 + 1
    }

    fn trig4() -> SuperellipticCurve {
        curve(3, &[-1, 0, 0, 0, 1]) // y^3 = x^4 - 1
    }

    #[test]
    fn dimension_values() {
        assert_eq!(dimension_dq(2, 1).unwrap(), 2);
        assert_eq!(dimension_dq(2, 2).unwrap(), 3);
        assert_eq!(dimension_dq(3, 3).unwrap(), 10);
        assert!(dimension_dq(2, 0).is_err());
        assert!(dimension_dq(1, 1).is_err());
    }

    #[test]
    fn basis_enumeration() {
        let pairs = enumerate_basis(&hyper5(), 1).unwrap();
        assert_eq!(pairs, vec![ExponentPair { a: 0, b: 0 }, ExponentPair { a: 1, b: 0 }]);

        let pairs = enumerate_basis(&hyper5(), 2).unwrap();
        assert_eq!(
            pairs,
            vec![
                ExponentPair { a: 0, b: 0 },
                ExponentPair { a: 1, b: 0 },
                ExponentPair { a: 2, b: 0 }
            ]
        );

        // 3a + 4b <= 4 sorted by 3a + b
        let pairs = enumerate_basis(&trig4(), 1).unwrap();
        assert_eq!(
            pairs,
            vec![
                ExponentPair { a: 0, b: 0 },
                ExponentPair { a: 0, b: 1 },
                ExponentPair { a: 1, b: 0 }
            ]
        );

        assert!(enumerate_basis(&hyper5(), 0).is_err());
    }

    #[test]
    fn branch_gaps_and_weights() {
        let gs = branch_gap_sequence(&hyper5(), 1).unwrap();
        assert_eq!(gs.gaps(), &[1, 3]);
        assert_eq!(gs.weight(), 1);

        let gs = branch_gap_sequence(&trig4(), 1).unwrap();
        assert_eq!(gs.gaps(), &[1, 2, 4]);
        assert_eq!(gs.weight(), 1);

        let gs = branch_gap_sequence(&hyper5(), 2).unwrap();
        assert_eq!(gs.gaps(), &[1, 3, 5]);
        assert_eq!(gs.weight(), 3);

        // (2, x^6 + 3) at q = 2
        let c = curve(2, &[3, 0, 0, 0, 0, 0, 1]);
        assert_eq!(branch_weight(&c, 2).unwrap(), 3);
        assert_eq!(branch_weight(&hyper5(), 1).unwrap(), 1);
        assert_eq!(branch_weight(&trig4(), 1).unwrap(), 1);
    }

    #[test]
    fn infinite_place_gaps() {
        // semigroup <2,5> misses 1, 3
        let gs = infinite_gap_data(&hyper5()).unwrap();
        assert_eq!(gs.gaps(), &[1, 3]);
        assert_eq!(gs.weight(), 1);

        // semigroup <3,4> misses 1, 2, 5
        let gs = infinite_gap_data(&trig4()).unwrap();
        assert_eq!(gs.gaps(), &[1, 2, 5]);
        assert_eq!(gs.weight(), 2);

        // gcd(2, 6) = 2 unsupported
        let c = curve(2, &[3, 0, 0, 0, 0, 0, 1]);
        assert_eq!(infinite_gap_data(&c), Err(Error::GcdNotOne { gcd: 2 }));
    }

    #[test]
    fn total_weights() {
        assert_eq!(total_weight(2, 1).unwrap(), 6);
        assert_eq!(total_weight(3, 1).unwrap(), 24);
        assert_eq!(total_weight(2, 2).unwrap(), 18);
        assert!(total_weight(2, 0).is_err());
        assert!(total_weight(1, 1).is_err());
    }

    #[test]
    fn inflectionary_totals() {
        // canonical system: r = g-1, d = 2g-2 gives g^3 - g
        assert_eq!(total_inflectionary_weight(2, 4, 3), 24);
        assert_eq!(total_inflectionary_weight(0, 0, 5), 0);
        // bicanonical on genus 2: r = 2, d = 4
        assert_eq!(total_inflectionary_weight(2, 4, 2), 18);
    }

    #[test]
    fn gap_sequences_small_genus() {
        let seqs = enumerate_gap_sequences(1).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].gaps(), &[1]);

        let seqs = enumerate_gap_sequences(2).unwrap();
        let gaps: Vec<&[u64]> = seqs.iter().map(|s| s.gaps()).collect();
        assert_eq!(gaps, vec![&[1u64, 2][..], &[1, 3][..]]);

        let seqs = enumerate_gap_sequences(3).unwrap();
        let gaps: Vec<&[u64]> = seqs.iter().map(|s| s.gaps()).collect();
        assert_eq!(
            gaps,
            vec![&[1u64, 2, 3][..], &[1, 2, 4][..], &[1, 2, 5][..], &[1, 3, 5][..]]
        );

        assert!(enumerate_gap_sequences(10).is_err());
        assert!(enumerate_gap_sequences(0).is_err());
    }

    #[test]
    fn gap_sequences_always_start_at_one() {
        for g in 1..=6 {
            for s in enumerate_gap_sequences(g).unwrap() {
                assert_eq!(s.gaps()[0], 1);
                assert_eq!(s.len(), g as usize);
                assert!(*s.gaps().last().unwrap() <= 2 * g as u64 - 1);
            }
        }
    }

    #[test]
    fn branch_gaps_belong_to_candidate_list() {
        let candidates = enumerate_gap_sequences(3).unwrap();
        let branch = branch_gap_sequence(&trig4(), 1).unwrap();
        let infinite = infinite_gap_data(&trig4()).unwrap();
        assert!(candidates.contains(&branch));
        assert!(candidates.contains(&infinite));
    }
}
