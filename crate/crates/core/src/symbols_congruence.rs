//! Symbols for Gamma_0(N) at the cusps infinity and 0, the parabolic and
//! elliptic evaluation laws, and the involutions iota, Fricke and
//! Atkin-Lehner.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dedekind_sum::s_fast;
use crate::error::{Error, Result};
use crate::exact_core::{arith, in_gamma0, int, rat, sgn, Rat, ScaledMat};
use crate::phase::omega;

fn require_gamma0(n: u64, m: &ScaledMat) -> Result<()> {
    if n == 0 {
        return Err(Error::NonPositive("0".into()));
    }
    if in_gamma0(m, n) {
        Ok(())
    } else {
        Err(Error::NotInGroup { matrix: m.to_string(), group: format!("Gamma0({n})") })
    }
}

/// `S` for Gamma_0(N) at the cusp infinity.
pub fn s_gamma0(n: u64, m: &ScaledMat) -> Result<Rat> {
    require_gamma0(n, m)?;
    let ar = arith(n as i64)?;
    let nn = BigInt::from(n);
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    if c.is_zero() {
        return Ok(Rat::new(&nn * b, d * 12) * &ar.beta + rat((sgn(d) - 1) as i64, 4));
    }
    let sc = int(sgn(c));
    let mut sum = Rat::zero();
    for (&v, &mu) in ar.divisors.iter().zip(&ar.mobius) {
        if mu == 0 {
            continue;
        }
        let k = c.abs() * v / &nn;
        sum += rat(mu, v as i64) * s_fast(d, &k)?;
    }
    Ok(Rat::new(&nn * (a + d), c * 12) * &ar.beta - &sc * rat(1, 4) - sc * &ar.alpha * sum)
}

/// `iota (a b; c d) = (a -b; -c d)`.
pub fn iota(m: &ScaledMat) -> ScaledMat {
    ScaledMat::new(m.a().clone(), -m.b(), -m.c(), m.d().clone(), m.e().clone())
        .expect("iota preserves the determinant")
}

/// `w_N(M) = tau_N M tau_N^{-1} = (d, -c/N; -bN, a)`.
pub fn fricke(n: u64, m: &ScaledMat) -> Result<ScaledMat> {
    require_gamma0(n, m)?;
    let nn = BigInt::from(n);
    ScaledMat::new(m.d().clone(), -(m.c() / &nn), -(m.b() * &nn), m.a().clone(), BigInt::one())
}

/// `S` for Gamma_0(N) at the cusp 0, with scaling matrix `tau_N`.
pub fn s_cusp0(n: u64, m: &ScaledMat) -> Result<Rat> {
    let w = fricke(n, m)?;
    let tinv = ScaledMat::tau(n).inv();
    Ok(s_gamma0(n, &w)? + int(omega(&tinv, &w) - omega(m, &tinv)))
}

/// `omega(sigma^{-1}, g) - omega(sigma^{-1} g sigma, sigma^{-1})`, the
/// integer relating the symbol for the pair `(a, b)` to the one at `a`.
pub fn cusp_pair_correction(g: &ScaledMat, sigma: &ScaledMat) -> i32 {
    let si = sigma.inv();
    let gb = si.mul(g).mul(sigma);
    omega(&si, g) - omega(&gb, &si)
}

/// Parabolic law `delta V h / (4 pi)`; `volume` is the coefficient of pi.
pub fn s_parabolic(volume: &Rat, same_cusp: bool, h: i64) -> Rat {
    if same_cusp {
        volume * int(h) / int(4)
    } else {
        Rat::zero()
    }
}

/// Full parabolic law for `g` fixing the cusp `sigma(infinity)`:
/// `delta V h/(4 pi) - log j(g_b, i)/(2 pi i) - omega(sigma^-1, g) + omega(g_b, sigma^-1)`.
pub fn s_parabolic_general(volume: &Rat, same_cusp: bool, g: &ScaledMat, sigma: &ScaledMat) -> Result<Rat> {
    let (h, minus) = parabolic_shape(g, sigma)?;
    let log_term = if minus { rat(-1, 2) } else { Rat::zero() };
    let h = if minus { -h } else { h };
    Ok(s_parabolic(volume, same_cusp, h) + log_term - int(cusp_pair_correction(g, sigma)))
}

/// Writes `sigma^{-1} g sigma = +-(1 h; 0 1)`, returning `(h, sign is minus)`.
pub(crate) fn parabolic_shape(g: &ScaledMat, sigma: &ScaledMat) -> Result<(i64, bool)> {
    let gb = sigma.inv().mul(g).mul(sigma);
    let ok = gb.is_integral() && gb.c().is_zero() && gb.a() == gb.d() && gb.a().abs().is_one();
    if !ok {
        return Err(Error::Shape(format!("{g} is not parabolic at sigma({sigma}) infinity")));
    }
    let h: i64 = gb.b().try_into().map_err(|_| Error::Shape("translation too large".into()))?;
    Ok((h, gb.a().is_negative()))
}

/// `-(1/r) sum_{k=1}^{r-1} omega(E^k, E)` for `E^r = I`.
pub fn s_elliptic(e: &ScaledMat, r: u32) -> Result<Rat> {
    if r == 0 || !e.pow(r as i64).is_identity() {
        return Err(Error::NotFiniteOrder(r));
    }
    let mut sum = 0i64;
    let mut ek = e.clone();
    for _ in 1..r {
        sum += omega(&ek, e) as i64;
        ek = ek.mul(e);
    }
    Ok(rat(-sum, r as i64))
}

fn check_hall_divisor(n: u64, v: u64) -> Result<u64> {
    if n == 0 || v == 0 {
        return Err(Error::NonPositive(format!("N={n}, v={v}")));
    }
    if !n.is_multiple_of(v) || v.gcd(&(n / v)) != 1 {
        return Err(Error::Shape(format!("{v} is not an exact divisor of {n}")));
    }
    Ok(n / v)
}

fn inverse_mod(x: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let g = (x as i64).extended_gcd(&(m as i64));
    g.x.rem_euclid(m as i64) as u64
}

/// An Atkin-Lehner matrix `(av, b; Nc, vd)` of scale `v`.
///
/// For `v = N` this is `tau_N`. Otherwise `a = c = 1` and `b` is the least
/// non-negative solution of `vd - (N/v) b = 1`.
pub fn atkin_lehner_matrix(n: u64, v: u64) -> Result<ScaledMat> {
    let v1 = check_hall_divisor(n, v)?;
    if v == n {
        return Ok(ScaledMat::tau(n));
    }
    // (N/v) b = -1 mod v
    let b = (v - inverse_mod(v1 % v, v)) % v;
    let d = (1 + v1 * b) / v;
    ScaledMat::new(v.into(), b.into(), n.into(), (v * d).into(), v.into())
}

/// Scaling matrix `(v1, b; N, d v1)` of scale `v1 = N/v` for the cusp `1/v`,
/// with `v1 d - v b = 1` and `b` least non-negative.
pub fn cusp_scaling(n: u64, v: u64) -> Result<ScaledMat> {
    let v1 = check_hall_divisor(n, v)?;
    // v b = -1 mod v1
    let b = (v1 - inverse_mod(v % v1, v1)) % v1;
    let d = (1 + v * b) / v1;
    ScaledMat::new(v1.into(), b.into(), n.into(), (d * v1).into(), v1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::Cusp;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ScaledMat {
        ScaledMat::int(a, b, c, d).unwrap()
    }

    #[test]
    fn level_11_table() {
        assert_eq!(s_gamma0(11, &ScaledMat::minus_identity()).unwrap(), rat(-1, 2));
        assert_eq!(s_gamma0(11, &m(-7, -1, 22, 3)).unwrap(), rat(-2, 5));
        assert_eq!(s_gamma0(11, &m(4, 1, -33, -8)).unwrap(), rat(2, 5));
        assert_eq!(s_gamma0(11, &m(1, 0, -11, 1)).unwrap(), int(0));
        assert_eq!(s_gamma0(11, &ScaledMat::t()).unwrap(), int(1));
        assert!(s_gamma0(11, &ScaledMat::s()).is_err());
    }

    #[test]
    fn fricke_examples() {
        assert_eq!(fricke(11, &m(-7, -1, 22, 3)).unwrap(), m(3, -2, 11, -7));
        assert_eq!(fricke(11, &ScaledMat::t()).unwrap(), m(1, 0, -11, 1));
        let a = m(-7, -1, 22, 3);
        let t = ScaledMat::tau(11);
        assert_eq!(fricke(11, &a).unwrap(), t.mul(&a).mul(&t.inv()));
    }

    #[test]
    fn cusp_zero_examples() {
        assert_eq!(s_cusp0(11, &m(1, 0, -11, 1)).unwrap(), int(1));
        assert_eq!(s_cusp0(11, &ScaledMat::t()).unwrap(), int(0));
        assert_eq!(s_cusp0(11, &ScaledMat::minus_identity()).unwrap(), rat(-1, 2));
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(s_parabolic(&int(4), true, 1), int(1));
        assert_eq!(s_parabolic(&int(4), false, 1), int(0));
        assert_eq!(s_parabolic(&rat(1, 3), true, 5), rat(5, 12));
        let tau = ScaledMat::tau(11);
        let p0 = m(1, 0, -11, 1);
        assert_eq!(s_parabolic_general(&int(4), false, &p0, &tau).unwrap(), int(0));
        assert_eq!(s_parabolic_general(&int(4), true, &p0, &tau).unwrap(), s_cusp0(11, &p0).unwrap());
    }

    #[test]
    fn elliptic_examples() {
        let e3 = m(-11, 3, -37, 10);
        assert_eq!(s_elliptic(&e3, 3).unwrap(), rat(1, 3));
        let e1 = ScaledMat::scaled(0, 1, -37, 0, 37).unwrap();
        assert_eq!(s_elliptic(&e1, 4).unwrap(), rat(1, 4));
        assert_eq!(s_elliptic(&ScaledMat::s(), 4).unwrap(), rat(-1, 4));
        assert!(s_elliptic(&ScaledMat::s(), 3).is_err());
    }

    #[test]
    fn atkin_lehner() {
        assert_eq!(atkin_lehner_matrix(11, 11).unwrap(), ScaledMat::tau(11));
        let w = atkin_lehner_matrix(15, 3).unwrap();
        assert_eq!(w.e(), &BigInt::from(3));
        assert_eq!((w.a() % 3, w.d() % 3, w.c() % 15), (0.into(), 0.into(), 0.into()));
        assert!(atkin_lehner_matrix(12, 2).is_err());
        assert_eq!(atkin_lehner_matrix(1, 1).unwrap(), ScaledMat::s());
        assert!(crate::exact_core::in_gamma0(&atkin_lehner_matrix(11, 1).unwrap(), 11));
    }

    #[test]
    fn scaling_matrices_hit_their_cusp() {
        for (n, v) in [(15u64, 3u64), (15, 5), (6, 2), (11, 1), (37, 37)] {
            let s = cusp_scaling(n, v).unwrap();
            assert_eq!(s.image_of_infinity(), Cusp::new(1.into(), v.into()), "N={n} v={v}");
        }
    }
}
