//! Property suites: algebraic identities on random inputs and exhaustive
//! sweeps over the (n, d) curve grid.

mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{curve_grid, separable_monic};
use wstrass::curve::{Generator, Place, SuperellipticCurve};
use wstrass::ff::FunctionField;
use wstrass::poly::{discriminant, is_separable, resultant, UniPoly};
use wstrass::qdiff::{
    branch_weight, dimension_dq, enumerate_basis, infinite_gap_data, total_weight,
};
use wstrass::rational::{rat, Rat};
use wstrass::series::{series_nth_root, TruncatedSeries};

fn poly_strategy(max_deg: usize, height: i64) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-height..=height, 1..=max_deg + 1)
        .prop_map(|v| UniPoly::from_i64_coeffs(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_multiplicative(
        p in poly_strategy(4, 10),
        q in poly_strategy(4, 10),
        r in poly_strategy(8, 10),
    ) {
        prop_assume!(!p.is_zero() && !q.is_zero() && !r.is_zero());
        let lhs = resultant(&(&p * &q), &r).unwrap();
        let rhs = resultant(&p, &r).unwrap() * resultant(&q, &r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nth_root_powers_back(
        root0 in (-6i64..=6).prop_filter("nonzero seed", |v| *v != 0),
        n in 1u32..=5,
        tail in prop::collection::vec(-5i64..=5, 0..12),
        precision in 2usize..=24,
    ) {
        let mut coeffs = vec![root0.pow(n)];
        coeffs.extend(&tail);
        let coeffs: Vec<Rat> = coeffs.iter().map(|&c| rat(c)).collect();
        let s = TruncatedSeries::new(coeffs, precision);
        let r = series_nth_root(&s, n, &rat(root0)).unwrap();
        let mut power = TruncatedSeries::one(precision);
        for _ in 0..n {
            power = &power * &r;
        }
        prop_assert_eq!(power, s);
    }

    #[test]
    fn series_multiplication_commutes_and_associates(
        a in prop::collection::vec(-7i64..=7, 1..10),
        b in prop::collection::vec(-7i64..=7, 1..10),
        c in prop::collection::vec(-7i64..=7, 1..10),
        pa in 3usize..=16,
        pb in 3usize..=16,
        pc in 3usize..=16,
    ) {
        let s = |v: &[i64], p: usize| {
            TruncatedSeries::new(v.iter().map(|&x| rat(x)).collect(), p)
        };
        let (sa, sb, sc) = (s(&a, pa), s(&b, pb), s(&c, pc));
        prop_assert_eq!(&sa * &sb, &sb * &sa);
        prop_assert_eq!(&(&sa * &sb) * &sc, &sa * &(&sb * &sc));
    }

    #[test]
    fn parse_print_round_trip(coeffs in prop::collection::vec(-50i64..=50, 0..10)) {
        let p = UniPoly::from_i64_coeffs(&coeffs);
        let printed = p.to_string();
        let reparsed = wstrass::expr::parse_univariate(&printed, "x").unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

#[test]
fn discriminant_separates_the_corpus() {
    let separable = [
        UniPoly::from_i64_coeffs(&[1, 0, 0, 0, 0, 1]),
        UniPoly::from_i64_coeffs(&[-1, 0, 0, 0, 1]),
        UniPoly::from_i64_coeffs(&[3, 0, 0, 0, 0, 0, 1]),
        UniPoly::from_i64_coeffs(&[-2, 1, 1]),
    ];
    for f in &separable {
        assert!(!discriminant(f).unwrap().is_zero(), "{f} is separable");
        assert!(is_separable(f));
    }
    let repeated = [
        UniPoly::from_i64_coeffs(&[1, -2, 1]),
        &UniPoly::from_i64_coeffs(&[-1, 1]) * &UniPoly::from_i64_coeffs(&[1, -2, 1]),
    ];
    for f in &repeated {
        assert!(discriminant(f).unwrap().is_zero(), "{f} has a repeated root");
        assert!(!is_separable(f));
    }
}

#[test]
fn canonical_and_principal_degrees_over_the_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, d) in curve_grid() {
        let f = separable_monic(d, &mut rng);
        let curve = SuperellipticCurve::new(n, f.clone()).unwrap();
        let g = curve.genus() as i64;

        let dx = curve.principal_divisor(&Generator::Dx).unwrap();
        assert_eq!(dx.degree(), 2 * g - 2, "deg (dx) on ({n}, {d})");

        let y = curve.principal_divisor(&Generator::Y).unwrap();
        assert_eq!(y.degree(), 0, "deg (y) on ({n}, {d})");

        // a non-branch rational value always exists among small integers
        let c = (0..)
            .map(rat)
            .find(|c| !f.eval(c).is_zero())
            .unwrap();
        let xc = curve.principal_divisor(&Generator::XMinusC(c)).unwrap();
        assert_eq!(xc.degree(), 0, "deg (x - c) on ({n}, {d})");

        let xr = curve.principal_divisor(&Generator::XMinusRoot(0)).unwrap();
        assert_eq!(xr.degree(), 0, "deg (x - alpha) on ({n}, {d})");

        let reduced = curve.principal_divisor(&Generator::DxOverYPow).unwrap();
        assert_eq!(reduced.degree(), 2 * g - 2);
        assert!(
            reduced.iter().all(|(p, _)| matches!(p, Place::Infinite { .. })),
            "support of (dx/y^(n-1)) lies at infinity"
        );
    }
}

#[test]
fn basis_size_matches_dimension_over_the_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (n, d) in curve_grid() {
        let curve = SuperellipticCurve::new(n, separable_monic(d, &mut rng)).unwrap();
        for q in 1..=4 {
            let basis = enumerate_basis(&curve, q).unwrap();
            assert_eq!(
                basis.len() as u64,
                dimension_dq(curve.genus(), q).unwrap(),
                "basis size on ({n}, {d}), q = {q}"
            );
            // orders pairwise distinct
            let mut orders: Vec<u64> = basis.iter().map(|p| p.branch_order(n)).collect();
            orders.dedup();
            assert_eq!(orders.len(), basis.len());
        }
    }
}

#[test]
fn branch_weight_positivity_and_cap_over_the_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (n, d) in curve_grid() {
        let curve = SuperellipticCurve::new(n, separable_monic(d, &mut rng)).unwrap();
        let g = curve.genus() as u64;
        for q in 1..=4 {
            assert!(branch_weight(&curve, q).unwrap() >= 1, "positivity on ({n}, {d}), q={q}");
        }
        let w1 = branch_weight(&curve, 1).unwrap();
        let cap = g * (g - 1) / 2;
        assert!(w1 <= cap, "cap on ({n}, {d})");
        assert_eq!(w1 == cap, n == 2, "equality iff hyperelliptic on ({n}, {d})");
    }
}

#[test]
fn hyperelliptic_weight_accounting() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for d in 5..=12u32 {
        let curve = SuperellipticCurve::new(2, separable_monic(d, &mut rng)).unwrap();
        let g = curve.genus() as u64;
        let w = branch_weight(&curve, 1).unwrap();
        assert_eq!(w, g * (g - 1) / 2);
        let total = total_weight(g as u32, 1).unwrap();
        if d % 2 == 0 {
            assert_eq!(d as u64 * w, total, "even d = {d}");
        } else {
            let winf = infinite_gap_data(&curve).unwrap().weight();
            assert_eq!(d as u64 * w + winf, total, "odd d = {d}");
        }
    }
}

#[test]
fn derivation_leibniz_on_random_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let curve = SuperellipticCurve::new(3, UniPoly::from_i64_coeffs(&[-1, 0, 0, 0, 1])).unwrap();
    let ff = FunctionField::new(&curve);
    for _ in 0..20 {
        let u = ff.monomial(rng.gen_range(0..=3), rng.gen_range(0..3));
        let v = ff.monomial(rng.gen_range(0..=3), rng.gen_range(0..3));
        let lhs = ff.derive(&ff.mul(&u, &v));
        let rhs = ff.add(&ff.mul(&u, &ff.derive(&v)), &ff.mul(&v, &ff.derive(&u)));
        assert_eq!(lhs, rhs);
    }
}

/// Random rational points on hyperelliptic curves carry no weight: the
/// whole budget g^3 - g sits on the 2g + 2 branch points. Curves are built
/// around the point by fixing (x0, y0) first and adjusting the constant
/// term.
#[test]
fn generic_rational_points_have_weight_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 20 {
        let d = rng.gen_range(5..=8u32);
        let base = separable_monic(d, &mut rng);
        let x0 = rat(rng.gen_range(-4..=4i64));
        let y0 = rat(rng.gen_range(1..=6i64) * if rng.gen() { 1 } else { -1 });
        // f = base - base(x0) + y0^2 passes through (x0, y0)
        let shift = &y0 * &y0 - base.eval(&x0);
        let f = &base + &UniPoly::constant(shift);
        if !is_separable(&f) || f.eval(&x0).is_zero() {
            continue;
        }
        let Ok(curve) = SuperellipticCurve::new(2, f) else { continue };
        let ff = FunctionField::new(&curve);
        let w = ff.point_weight(1, &x0, &y0).unwrap();
        assert_eq!(w, 0, "weight at ({x0}, {y0}) on genus {}", curve.genus());
        assert!(w <= total_weight(curve.genus(), 1).unwrap());
        checked += 1;
    }
}
