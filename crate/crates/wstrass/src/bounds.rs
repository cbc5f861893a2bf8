//! Ramification and automorphism arithmetic.
//!
//! Covers the Riemann-Hurwitz genus computation
//!
//! ```text
//! 2(g_X - 1) = 2 deg(F) (g_Y - 1) + sum_p (mult_p F - 1),
//! ```
//!
//! the 84(g-1) bound on automorphism counts, the exhaustive search for the
//! minimal positive value of
//!
//! ```text
//! R = 2 g_Y - 2 + sum_i (1 - 1/r_i)
//! ```
//!
//! over branching signatures (minimum 1/42, at genus 0 with orders (2,3,7)),
//! and fixed-point count bounds for automorphisms. Everything is exact
//! rational arithmetic; no floating-point comparisons anywhere.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};

/// Branching data of a covering map: its degree, the target genus, and the
/// multiset of ramification multiplicities (each at least 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    degree: u64,
    target_genus: u64,
    multiplicities: Vec<u64>,
}

impl RamificationProfile {
    pub fn new(degree: u64, target_genus: u64, mut multiplicities: Vec<u64>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeZeroCover);
        }
        for &m in &multiplicities {
            if m < 2 || m > degree {
                return Err(Error::MultiplicityOutOfRange { m, deg: degree });
            }
        }
        multiplicities.sort_unstable();
        Ok(RamificationProfile { degree, target_genus, multiplicities })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn target_genus(&self) -> u64 {
        self.target_genus
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }
}

/// Source genus from the Riemann-Hurwitz formula.
///
/// Errors when the ramification total has the wrong parity (no integral
/// genus) or the formula yields a negative genus.
pub fn riemann_hurwitz_genus(profile: &RamificationProfile) -> Result<u64> {
    let ram: i64 = profile.multiplicities.iter().map(|&m| m as i64 - 1).sum();
    let rhs = 2 * profile.degree as i64 * (profile.target_genus as i64 - 1) + ram;
    if rhs % 2 != 0 {
        return Err(Error::RamificationParity);
    }
    let g = rhs / 2 + 1;
    if g < 0 {
        return Err(Error::NegativeGenus { g });
    }
    Ok(g as u64)
}

/// The Hurwitz bound 84(g - 1) on the automorphism count of a genus-g
/// surface, g >= 2.
pub fn hurwitz_bound(g: u64) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusBelow { g: g as i64, min: 2 });
    }
    Ok(84 * (g - 1))
}

/// A branching signature (g_Y; r_1 <= ... <= r_s) together with its exact
/// R value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub target_genus: u64,
    pub orders: Vec<u64>,
    pub r: Rat,
}

fn r_value(target_genus: u64, orders: &[u64]) -> Rat {
    let mut r = rat(2 * target_genus as i64 - 2);
    for &k in orders {
        r += rat(1) - Rat::new(BigInt::from(1), BigInt::from(k));
    }
    r
}

/// Search limits for [`min_positive_r`]. The defaults (orders up to 50, at
/// most 6 branch values, target genus up to 2) are large enough that the
/// global minimum 1/42 lies strictly inside the searched region: growing any
/// coordinate only increases R for the new signatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_order: u64,
    pub max_branch_values: usize,
    pub min_target_genus: u64,
    pub max_target_genus: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_order: 50,
            max_branch_values: 6,
            min_target_genus: 0,
            max_target_genus: 2,
        }
    }
}

/// Exhaustive minimal-R search over signatures with R > 0.
///
/// Ties break lexicographically by (target genus, number of orders, orders).
/// Because each additional branch value strictly increases R, a prefix whose
/// R is already positive never extends to a smaller signature, which keeps
/// the search tree small.
pub fn min_positive_r_in(limits: &SearchLimits) -> Result<Signature> {
    let mut best: Option<Signature> = None;
    let mut orders: Vec<u64> = Vec::new();
    for gy in limits.min_target_genus..=limits.max_target_genus {
        orders.clear();
        search(gy, 2, limits, &mut orders, &mut best);
    }
    best.ok_or(Error::EmptySearchSpace)
}

/// [`min_positive_r_in`] with max-order / max-count / max-genus limits and
/// the default lower bounds.
pub fn min_positive_r(max_order: u64, max_branch_values: usize, max_target_genus: u64) -> Result<Signature> {
    min_positive_r_in(&SearchLimits {
        max_order,
        max_branch_values,
        min_target_genus: 0,
        max_target_genus,
    })
}

/// The default search, whose minimum is R = 1/42 at (0; 2, 3, 7).
pub fn min_positive_r_default() -> Result<Signature> {
    min_positive_r_in(&SearchLimits::default())
}

fn search(
    gy: u64,
    min_next: u64,
    limits: &SearchLimits,
    orders: &mut Vec<u64>,
    best: &mut Option<Signature>,
) {
    let r = r_value(gy, orders);
    if r.is_positive() {
        let candidate = Signature { target_genus: gy, orders: orders.clone(), r };
        let better = match best {
            None => true,
            Some(b) => {
                candidate.r < b.r
                    || (candidate.r == b.r
                        && (candidate.target_genus, candidate.orders.len(), &candidate.orders)
                            < (b.target_genus, b.orders.len(), &b.orders))
            }
        };
        if better {
            *best = Some(candidate);
        }
        // extending only increases R
        return;
    }
    if orders.len() == limits.max_branch_values {
        return;
    }
    for k in min_next..=limits.max_order {
        orders.push(k);
        search(gy, k, limits, orders, best);
        orders.pop();
    }
}

/// Upper bound on the number of fixed points of an automorphism of the given
/// order on a genus-g surface.
///
/// Takes the minimum of floor(2(order + g - 1)/(order - 1)), the universal
/// cap 2g + 2, and additionally 2g - 1 when the surface is known to be
/// nonhyperelliptic. Returns the floor since fixed-point counts are
/// integers.
pub fn fixed_point_bound(g: u64, order: u64, nonhyperelliptic: bool) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusBelow { g: g as i64, min: 2 });
    }
    if order < 2 {
        return Err(Error::OrderTooSmall { order: order as i64 });
    }
    let lemma = 2 * (order + g - 1) / (order - 1); // integer floor
    let mut bound = lemma.min(2 * g + 2);
    if nonhyperelliptic {
        bound = bound.min(2 * g - 1);
    }
    Ok(bound)
}
