//! Random group elements for property checks.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

use crate::exact_core::{divisors, is_squarefree, ScaledMat};
use crate::symbols_congruence::atkin_lehner_matrix;

/// `(a, b)` with `a d - b c = 1`, for coprime `c, d`.
fn complete_row(c: i128, d: i128) -> (i128, i128) {
    let g = d.extended_gcd(&c);
    debug_assert_eq!(g.gcd, 1);
    (g.x, -g.y)
}

fn from_bottom_row<R: Rng>(rng: &mut R, c: i128, d: i128, shift: i64) -> ScaledMat {
    let (mut a, mut b) = complete_row(c, d);
    // left multiplication by T^k
    let k = rng.gen_range(-shift..=shift) as i128;
    a += k * c;
    b += k * d;
    let big = |x: i128| BigInt::from(x);
    ScaledMat::new(big(a), big(b), big(c), big(d), 1.into()).expect("determinant one by construction")
}

/// A random element of SL(2,Z) with bottom row bounded by `bound`.
/// About one draw in eight has `c = 0`.
pub fn random_sl2z<R: Rng>(rng: &mut R, bound: i64) -> ScaledMat {
    random_gamma0(rng, 1, bound)
}

/// A random element of `Gamma_0(n)` with `|c| <= n * bound` and `|d| <= bound`.
pub fn random_gamma0<R: Rng>(rng: &mut R, n: u64, bound: i64) -> ScaledMat {
    let bound = bound.max(1);
    if rng.gen_ratio(1, 8) {
        let d = if rng.gen() { 1 } else { -1 };
        return from_bottom_row(rng, 0, d, bound);
    }
    loop {
        let c = rng.gen_range(-bound..=bound) as i128 * n as i128;
        let d = rng.gen_range(-bound..=bound) as i128;
        if c != 0 && c.gcd(&d) == 1 {
            return from_bottom_row(rng, c, d, bound);
        }
    }
}

/// A random element of SL(2,Z) with entries of size up to `bound` (which
/// may be as large as `i64::MAX`).
pub fn random_sl2z_large<R: Rng>(rng: &mut R, bound: i64) -> ScaledMat {
    loop {
        let c = rng.gen_range(-bound..=bound) as i128;
        let d = rng.gen_range(-bound..=bound) as i128;
        if c != 0 && c.gcd(&d) == 1 {
            return from_bottom_row(rng, c, d, 0);
        }
    }
}

/// A random element of `Gamma_0(n)^+`: a `Gamma_0(n)` element times a random
/// Atkin-Lehner matrix.
pub fn random_gamma0_plus<R: Rng>(rng: &mut R, n: u64, bound: i64) -> ScaledMat {
    assert!(is_squarefree(n), "level must be squarefree");
    let g = random_gamma0(rng, n, bound);
    let ds = divisors(n);
    let v = ds[rng.gen_range(0..ds.len())];
    if v == 1 {
        return g;
    }
    g.mul(&atkin_lehner_matrix(n, v).expect("v is an exact divisor"))
}
