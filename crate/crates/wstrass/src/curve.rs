//! The superelliptic curve `y^n = f(x)` and its divisor arithmetic.
//!
//! A curve is a cover degree n >= 2 together with a separable f of degree
//! d > n. Writing G = gcd(n, d), the genus comes from
//!
//! ```text
//! 2g - 2 = n*d - n - d - G,
//! ```
//!
//! and the smooth model has d affine branch points B_i = (alpha_i, 0), G
//! places above x = infinity, and n places over any other x = c. Branch
//! points over irrational roots are named symbolically by the irreducible
//! factor of f they lie over plus a root index; nothing is ever
//! approximated numerically. The infinite places are likewise named
//! abstractly by index: every formula downstream needs only their count G
//! and the valuations below.
//!
//! Principal divisors on the curve:
//!
//! ```text
//! (x - c)        = sum_j P^c_j           - (n/G) sum_m P^inf_m      (f(c) != 0)
//! (x - alpha_i)  = n B_i                 - (n/G) sum_m P^inf_m
//! (y)            = sum_j B_j             - (d/G) sum_m P^inf_m
//! (dx)           = (n-1) sum_j B_j       - (n/G + 1) sum_m P^inf_m
//! (dx / y^(n-1)) =                         ((2g-2)/G) sum_m P^inf_m
//! ```
//!
//! The first four have degree 0 (the last three of those after summing
//! coefficients); (dx) and (dx/y^(n-1)) are canonical, of degree 2g - 2.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::poly::{format_poly, is_separable, UniPoly};
use crate::rational::{rat_string, Rat};

/// Which root of f an affine branch place lies over: either an exact
/// rational root, or a root index into an irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootDescriptor {
    Rational(Rat),
    Algebraic {
        /// Monic irreducible factor of f over the rationals.
        factor: UniPoly,
        /// Which root of that factor, 1-based, in an arbitrary fixed order.
        index: usize,
    },
}

/// A place of the smooth model.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    /// Affine branch point B_i = (alpha_i, 0) over a root alpha_i of f.
    AffineBranch(RootDescriptor),
    /// One of the G places above x = infinity, indexed 1..=G.
    Infinite { index: u32 },
    /// One of the n points of the fiber over x = c with f(c) != 0,
    /// indexed 1..=n.
    AffineFiber { c: Rat, index: u32 },
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::AffineBranch(RootDescriptor::Rational(r)) => {
                write!(f, "B(x = {})", rat_string(r))
            }
            Place::AffineBranch(RootDescriptor::Algebraic { factor, index }) => {
                write!(f, "B(root #{index} of {})", format_poly(factor, "x"))
            }
            Place::Infinite { index } => write!(f, "P_inf[{index}]"),
            Place::AffineFiber { c, index } => write!(f, "P(x = {})[{index}]", rat_string(c)),
        }
    }
}

/// Formal integer combination of places; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    support: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn add_place(&mut self, place: Place, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.support.entry(place) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Sum of the coefficients.
    pub fn degree(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn coefficient(&self, place: &Place) -> i64 {
        self.support.get(place).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.support.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (place, coeff) in &self.support {
            if first {
                if *coeff < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            if mag == 1 {
                write!(f, "{place}")?;
            } else {
                write!(f, "{mag}*{place}")?;
            }
        }
        Ok(())
    }
}

/// Generators whose principal divisors the curve knows in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// x - c for a non-branch value c (f(c) != 0).
    XMinusC(Rat),
    /// x - alpha_i for the i-th branch place (0-based index into
    /// [`SuperellipticCurve::branch_places`]).
    XMinusRoot(usize),
    /// The coordinate function y.
    Y,
    /// The differential dx.
    Dx,
    /// The everywhere-nonvanishing-at-affine differential dx / y^(n-1).
    DxOverYPow,
}

/// A validated superelliptic curve with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperellipticCurve {
    n: u32,
    f: UniPoly,
    d: u32,
    gcd_nd: u32,
    genus: u32,
    branch_places: Vec<Place>,
}

/// Genus of y^n = f(x) with deg f = d, from 2g - 2 = nd - n - d - gcd(n, d).
///
/// Validates n >= 2 and d > n. The right-hand side is always even (asserted,
/// not branched on). The result may be any nonnegative integer here; curve
/// construction additionally insists on g >= 2.
pub fn genus_of(n: u32, d: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::CoverDegreeTooSmall { n: n as i64 });
    }
    if d <= n {
        return Err(Error::DegreeNotAboveCover { d: d as i64, n: n as i64 });
    }
    let (n, d) = (n as i64, d as i64);
    let two_g_minus_2 = n * d - n - d - n.gcd(&d);
    assert!(two_g_minus_2 % 2 == 0, "nd - n - d - gcd(n,d) is always even");
    let g = two_g_minus_2 / 2 + 1;
    debug_assert!(g >= 0);
    Ok(g as u32)
}

impl SuperellipticCurve {
    /// Validate and build a curve: n >= 2, deg f > n, f separable, and the
    /// resulting genus at least 2.
    pub fn new(n: u32, f: UniPoly) -> Result<Self> {
        if n < 2 {
            return Err(Error::CoverDegreeTooSmall { n: n as i64 });
        }
        let d = match f.degree() {
            Some(d) if d > n as usize => d as u32,
            other => {
                return Err(Error::DegreeNotAboveCover {
                    d: other.map_or(-1, |d| d as i64),
                    n: n as i64,
                })
            }
        };
        if !is_separable(&f) {
            return Err(Error::NotSeparable);
        }
        let genus = genus_of(n, d)?;
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus: genus as i64 });
        }
        let branch_places = branch_places_of(&f)?;
        debug_assert_eq!(branch_places.len(), d as usize);
        let gcd_nd = (n as u64).gcd(&(d as u64)) as u32;
        Ok(SuperellipticCurve { n, f, d, gcd_nd, genus, branch_places })
    }

    pub fn cover_degree(&self) -> u32 {
        self.n
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn f_degree(&self) -> u32 {
        self.d
    }

    /// G = gcd(n, d), the number of places above x = infinity.
    pub fn num_infinite_places(&self) -> u32 {
        self.gcd_nd
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The d affine branch places, one per root of f, rational roots first.
    pub fn branch_places(&self) -> &[Place] {
        &self.branch_places
    }

    pub fn infinite_places(&self) -> Vec<Place> {
        (1..=self.gcd_nd).map(|index| Place::Infinite { index }).collect()
    }

    /// The n places over x = c; errors when f(c) = 0.
    pub fn fiber_places(&self, c: &Rat) -> Result<Vec<Place>> {
        if self.f.eval(c).is_zero() {
            return Err(Error::FiberOverBranchPoint { c: rat_string(c) });
        }
        Ok((1..=self.n).map(|index| Place::AffineFiber { c: c.clone(), index }).collect())
    }

    /// Exact principal divisor of the given generator (see the module-level
    /// table).
    pub fn principal_divisor(&self, generator: &Generator) -> Result<Divisor> {
        let n = self.n as i64;
        let g_count = self.gcd_nd;
        let n_over_g = n / g_count as i64;
        let d_over_g = self.d as i64 / g_count as i64;
        let mut div = Divisor::zero();
        match generator {
            Generator::XMinusC(c) => {
                for place in self.fiber_places(c)? {
                    div.add_place(place, 1);
                }
                for place in self.infinite_places() {
                    div.add_place(place, -n_over_g);
                }
            }
            Generator::XMinusRoot(i) => {
                let place = self
                    .branch_places
                    .get(*i)
                    .ok_or(Error::BranchIndexOutOfRange {
                        index: *i,
                        count: self.branch_places.len(),
                    })?
                    .clone();
                div.add_place(place, n);
                for place in self.infinite_places() {
                    div.add_place(place, -n_over_g);
                }
            }
            Generator::Y => {
                for place in &self.branch_places {
                    div.add_place(place.clone(), 1);
                }
                for place in self.infinite_places() {
                    div.add_place(place, -d_over_g);
                }
            }
            Generator::Dx => {
                for place in &self.branch_places {
                    div.add_place(place.clone(), n - 1);
                }
                for place in self.infinite_places() {
                    div.add_place(place, -(n_over_g + 1));
                }
            }
            Generator::DxOverYPow => {
                let coeff = (2 * self.genus as i64 - 2) / g_count as i64;
                for place in self.infinite_places() {
                    div.add_place(place, coeff);
                }
            }
        }
        Ok(div)
    }
}

/// One place per root of f, rational roots as exact values, others grouped
/// under their monic irreducible factor with root indices 1..deg.
fn branch_places_of(f: &UniPoly) -> Result<Vec<Place>> {
    let mut rational = Vec::new();
    let mut algebraic = Vec::new();
    for (factor, mult) in factor(f)? {
        debug_assert_eq!(mult, 1, "separable polynomial");
        let deg = factor.degree().expect("irreducible factors are nonconstant");
        if deg == 1 {
            rational.push(Place::AffineBranch(RootDescriptor::Rational(-factor.coeff(0))));
        } else {
            for index in 1..=deg {
                algebraic.push(Place::AffineBranch(RootDescriptor::Algebraic {
                    factor: factor.clone(),
                    index,
                }));
            }
        }
    }
    rational.extend(algebraic);
    Ok(rational)
}
