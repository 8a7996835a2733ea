//! The modular Dedekind symbol on SL(2,Z), Rademacher's `Phi` and `R`,
//! and the eta multiplier as an exact root of unity.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::dedekind_sum::s_fast;
use crate::error::{Error, Result};
use crate::exact_core::{int, rat, sgn, Rat, ScaledMat};

/// `exp(pi i num / den)` with `0 <= num < 2 den` and the fraction reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    pub num: i64,
    pub den: i64,
}

impl RootOfUnity {
    /// `exp(pi i x)` for rational `x`.
    pub fn from_exponent(x: &Rat) -> RootOfUnity {
        let two = BigInt::from(2) * x.denom();
        let num = x.numer().mod_floor(&two);
        let r = Rat::new(num, x.denom().clone());
        RootOfUnity {
            num: r.numer().to_i64().expect("small multiplier"),
            den: r.denom().to_i64().expect("small multiplier"),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::PI * self.num as f64 / self.den as f64)
    }

    /// Multiplicative order.
    pub fn order(&self) -> i64 {
        2 * self.den / self.num.gcd(&(2 * self.den))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else {
            write!(f, "exp(pi*i*{}/{})", self.num, self.den)
        }
    }
}

pub(crate) fn require_sl2z(m: &ScaledMat) -> Result<()> {
    if m.is_integral() {
        Ok(())
    } else {
        Err(Error::NotInGroup { matrix: m.to_string(), group: "SL(2,Z)".into() })
    }
}

/// Dedekind's formula on raw entries of an SL(2,Z) matrix.
pub(crate) fn s_entries(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Rat {
    if c.is_zero() {
        Rat::new(b.clone(), d * 12) + rat((sgn(d) - 1) as i64, 4)
    } else {
        let s = s_fast(d, &c.abs()).expect("c and d are coprime");
        Rat::new(a + d, c * 12) - int(sgn(c)) * (rat(1, 4) + s)
    }
}

/// The classical symbol `S(M)` for `M` in SL(2,Z).
pub fn s_sl2z(m: &ScaledMat) -> Result<Rat> {
    require_sl2z(m)?;
    Ok(s_entries(m.a(), m.b(), m.c(), m.d()))
}

/// Rademacher's `R`: `sgn c` if `c != 0`, else `sgn d - 1`.
pub fn rademacher_r(m: &ScaledMat) -> Result<i64> {
    require_sl2z(m)?;
    Ok(if m.c().is_zero() { sgn(m.d()) as i64 - 1 } else { sgn(m.c()) as i64 })
}

/// Rademacher's `Phi`, with `S = Phi/12 - R/4` when `c != 0`.
///
/// When `c = 0` the middle term of Rademacher's law vanishes, which forces
/// `S = Phi/12 + R/4` there; with that branch `Phi(-M) = Phi(M)`.
pub fn rademacher_phi(m: &ScaledMat) -> Result<BigInt> {
    let r = rademacher_r(m)?;
    let r = if m.c().is_zero() { -r } else { r };
    let x = (s_sl2z(m)? + rat(r, 4)) * int(12);
    assert!(x.is_integer(), "Phi({m}) = {x} is not an integer");
    Ok(x.to_integer())
}

/// `Psi = Phi - 3 sgn(c (a + d))`.
pub fn rademacher_psi(m: &ScaledMat) -> Result<BigInt> {
    Ok(rademacher_phi(m)? - 3 * sgn(&(m.c() * m.trace())))
}

/// `exp(pi i S(M))`.
pub fn eta_multiplier(m: &ScaledMat) -> Result<RootOfUnity> {
    Ok(RootOfUnity::from_exponent(&s_sl2z(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_values() {
        assert_eq!(s_sl2z(&ScaledMat::t()).unwrap(), rat(1, 12));
        assert_eq!(s_sl2z(&ScaledMat::s()).unwrap(), rat(-1, 4));
        assert_eq!(s_sl2z(&ScaledMat::minus_identity()).unwrap(), rat(-1, 2));
        assert!(s_sl2z(&ScaledMat::tau(5)).is_err());
    }

    #[test]
    fn rademacher_values() {
        let t = ScaledMat::t();
        let s = ScaledMat::s();
        let mi = ScaledMat::minus_identity();
        assert_eq!((rademacher_phi(&t).unwrap(), rademacher_r(&t).unwrap()), (1.into(), 0));
        assert_eq!((rademacher_phi(&s).unwrap(), rademacher_r(&s).unwrap()), (0.into(), 1));
        assert_eq!((rademacher_phi(&mi).unwrap(), rademacher_r(&mi).unwrap()), (0.into(), -2));
    }

    #[test]
    fn multipliers() {
        assert_eq!(eta_multiplier(&ScaledMat::t()).unwrap(), RootOfUnity { num: 1, den: 12 });
        assert_eq!(eta_multiplier(&ScaledMat::identity()).unwrap(), RootOfUnity { num: 0, den: 1 });
        let mi = eta_multiplier(&ScaledMat::minus_identity()).unwrap();
        assert_eq!(mi, RootOfUnity { num: 3, den: 2 });
        assert!((mi.to_complex() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert_eq!(mi.order(), 4);
    }
}
