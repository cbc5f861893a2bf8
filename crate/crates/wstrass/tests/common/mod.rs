//! Helpers shared by the integration suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use wstrass::poly::{is_separable, UniPoly};
use wstrass::rational::rat;

/// Deterministic random monic separable polynomial of the given degree with
/// small integer coefficients.
pub fn separable_monic(d: u32, rng: &mut ChaCha8Rng) -> UniPoly {
    loop {
        let mut coeffs: Vec<_> = (0..d).map(|_| rat(rng.gen_range(-9..=9))).collect();
        coeffs.push(rat(1));
        let f = UniPoly::from_coeffs(coeffs);
        if is_separable(&f) {
            return f;
        }
    }
}

/// The (n, d) grid used by the sweeps: 2 <= n < d <= 12, keeping only pairs
/// whose genus is at least 2 (the curve model rejects the rest).
pub fn curve_grid() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 2..=11u32 {
        for d in (n + 1)..=12u32 {
            if let Ok(g) = wstrass::curve::genus_of(n, d) {
                if g >= 2 {
                    out.push((n, d));
                }
            }
        }
    }
    out
}
