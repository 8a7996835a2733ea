//! Symbols on Gamma_0(N)+ for squarefree N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dedekind_sum::s_fast;
use crate::error::{Error, Result};
use crate::exact_core::{arith, in_gamma0, in_gamma0_plus, int, is_squarefree, rat, sgn, GroupKind, Rat, ScaledMat};
use crate::phase::omega;
use crate::symbols_classical::{s_entries, s_sl2z};
use crate::symbols_congruence::s_gamma0;

fn require_squarefree(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::NonPositive("0".into()));
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    Ok(())
}

/// `2^{-r} sum_{v | N} S(gamma_v)` with `gamma_v = (a, bv; cN/v, d)`, for
/// `gamma = (a, b; cN, d)` in Gamma_0(N).
pub fn s_plus_on_congruence(n: u64, m: &ScaledMat) -> Result<Rat> {
    require_squarefree(n)?;
    if !in_gamma0(m, n) {
        return Err(Error::NotInGroup { matrix: m.to_string(), group: format!("Gamma0({n})") });
    }
    let ar = arith(n as i64)?;
    let mut sum = Rat::zero();
    for &v in &ar.divisors {
        sum += s_entries(m.a(), &(m.b() * v), &(m.c() / v), m.d());
    }
    Ok(sum / int(ar.divisors.len() as u64))
}

/// `S` for Gamma_0(N)+ at infinity. Elements outside Gamma_0(N) go through
/// `S(g) = (S(g^2) - omega(g, g))/2`.
pub fn s_plus(n: u64, m: &ScaledMat) -> Result<Rat> {
    if !in_gamma0_plus(m, n)? {
        return Err(Error::NotInGroup { matrix: m.to_string(), group: format!("Gamma0({n})+") });
    }
    if m.is_integral() {
        return s_plus_on_congruence(n, m);
    }
    let sq = m.mul(m);
    debug_assert!(sq.is_integral());
    Ok((s_plus_on_congruence(n, &sq)? - int(omega(m, m))) / int(2))
}

/// Closed form for prime level, with `M = (a sqrt v, b/sqrt v; cp/sqrt v, d sqrt v)`
/// and `v` in `{1, p}`.
pub fn s_plus_prime(p: u64, m: &ScaledMat) -> Result<Rat> {
    let ar = arith(p as i64)?;
    if ar.primes != [p] {
        return Err(Error::Shape(format!("{p} is not prime")));
    }
    let pp = BigInt::from(p);
    let malformed = || Error::Shape(format!("{m} is not in Gamma0({p})+"));
    if !(m.c() % &pp).is_zero() {
        return Err(malformed());
    }
    let p1 = int(p + 1);
    if m.is_integral() {
        let (a, b, d) = (m.a(), m.b(), m.d());
        let c = m.c() / &pp;
        if c.is_zero() {
            return Ok(Rat::new(b.clone(), d * 24) * p1 + rat((sgn(d) - 1) as i64, 4));
        }
        let sc = int(sgn(&c));
        let ss = s_fast(d, &c.abs())? + s_fast(d, &(c.abs() * &pp))?;
        return Ok(Rat::new(a + d, &c * 24 * &pp) * p1 - &sc * rat(1, 4) - sc * ss / int(2));
    }
    if m.e() != &pp || !(m.a() % &pp).is_zero() || !(m.d() % &pp).is_zero() {
        return Err(malformed());
    }
    let (a, b) = (m.a() / &pp, m.b());
    let (c, d) = (m.c() / &pp, m.d() / &pp);
    if d.is_zero() {
        let base = Rat::new(a, &c * 24) * p1;
        return Ok(if c.is_positive() { base - rat(1, 4) } else { base + rat(1, 4) });
    }
    let sd = int(sgn(&d));
    let ss = s_fast(&c, &d.abs())? + s_fast(&c, &(d.abs() * &pp))?;
    let shift = if d.is_negative() && c.is_negative() { rat(3, 4) } else { rat(-1, 4) };
    Ok(Rat::new(b - &c, &d * 24 * &pp) * p1 + &sd * rat(1, 4) + sd * ss / int(2) + shift)
}

/// `l_N = 2^{1-r} lcm(4, 2^{r-1} 24/(24, sigma(N)))`, the root-of-unity order
/// attached to `exp(pi i S)`. Exposed as data only.
pub fn ell_n(n: u64) -> Result<Rat> {
    require_squarefree(n)?;
    let ar = arith(n as i64)?;
    let r = ar.primes.len() as i64;
    let inner = Rat::from_integer(BigInt::from(24 / 24u64.gcd(&ar.sigma1))) * pow2(r - 1);
    // lcm of rationals: lcm of numerators over gcd of denominators
    let lcm = Rat::new(inner.numer().lcm(&BigInt::from(4)), inner.denom().gcd(&BigInt::one()));
    Ok(lcm * pow2(1 - r))
}

fn pow2(k: i64) -> Rat {
    if k >= 0 {
        int(BigInt::one() << k as usize)
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (-k) as usize)
    }
}

/// `S` at infinity for any of the three group families.
pub fn symbol_at_infinity(kind: GroupKind, m: &ScaledMat) -> Result<Rat> {
    match kind {
        GroupKind::Sl2z => s_sl2z(m),
        GroupKind::Gamma0(n) => s_gamma0(n, m),
        GroupKind::Gamma0Plus(n) => s_plus(n, m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(a: i64, b: i64, c: i64, d: i64, e: i64) -> ScaledMat {
        ScaledMat::scaled(a, b, c, d, e).unwrap()
    }

    fn gens37() -> Vec<(ScaledMat, Rat)> {
        vec![
            (sm(1, -1, 0, 1, 1), rat(-19, 12)),
            (sm(0, 1, -37, 0, 37), rat(1, 4)),
            (sm(-6, 1, -37, 6, 1), rat(1, 4)),
            (sm(-11, 3, -37, 10, 1), rat(1, 3)),
            (sm(37, -19, 74, -37, 37), rat(-1, 4)),
            (sm(148, -89, 185, -111, 37), rat(1, 6)),
            (sm(20, -13, 37, -24, 1), rat(-7, 12)),
        ]
    }

    #[test]
    fn level_37_table_both_routes() {
        for (g, want) in gens37() {
            assert_eq!(s_plus(37, &g).unwrap(), want, "{g}");
            assert_eq!(s_plus_prime(37, &g).unwrap(), want, "{g}");
        }
    }

    #[test]
    fn tau_p_is_minus_quarter() {
        for p in [2u64, 3, 5, 7, 11, 37] {
            assert_eq!(s_plus(p, &ScaledMat::tau(p)).unwrap(), rat(-1, 4));
            assert_eq!(s_plus_prime(p, &ScaledMat::tau(p)).unwrap(), rat(-1, 4));
        }
    }

    #[test]
    fn level_one_is_classical() {
        let g = sm(2, 1, 7, 4, 1);
        assert_eq!(s_plus_on_congruence(1, &g).unwrap(), s_sl2z(&g).unwrap());
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell_n(37).unwrap(), int(12));
        assert!(ell_n(12).is_err());
    }
}
