//! Integer 2x2 matrices with a positive scale `e`, standing for
//! `(1/sqrt(e)) * (a b; c d)` with `ad - bc = e`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_core::arith::is_squarefree;

/// A real matrix of determinant one written as `(1/sqrt(e)) * (a b; c d)`.
///
/// Values are kept normalized: the entries are divided by their gcd `g`
/// and `e` by `g^2`. Since `g^2` always divides the determinant this is
/// the largest admissible reduction, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledMat {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    e: BigInt,
}

impl ScaledMat {
    /// Builds a normalized matrix, checking `e > 0` and `ad - bc = e`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt, e: BigInt) -> Result<Self> {
        if !e.is_positive() {
            return Err(Error::BadScale(e));
        }
        let det = &a * &d - &b * &c;
        if det != e {
            return Err(Error::Determinant { det, e });
        }
        Ok(Self::normalized(a, b, c, d, e))
    }

    /// Integer matrix in SL(2,Z) (scale 1).
    pub fn int(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into(), BigInt::one())
    }

    pub fn scaled(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into(), e.into())
    }

    fn normalized(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut d: BigInt, mut e: BigInt) -> Self {
        if !e.is_one() {
            let g = a.gcd(&b).gcd(&c).gcd(&d);
            if g > BigInt::one() {
                a /= &g;
                b /= &g;
                c /= &g;
                d /= &g;
                e /= &g * &g;
            }
        }
        ScaledMat { a, b, c, d, e }
    }

    pub fn identity() -> Self {
        ScaledMat {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
            e: BigInt::one(),
        }
    }

    pub fn minus_identity() -> Self {
        Self::identity().neg()
    }

    /// `T = (1 1; 0 1)`.
    pub fn t() -> Self {
        ScaledMat::int(1, 1, 0, 1).unwrap()
    }

    /// `S = (0 -1; 1 0)`.
    pub fn s() -> Self {
        ScaledMat::int(0, -1, 1, 0).unwrap()
    }

    /// `tau_N = (0 -1; N 0)/sqrt(N)`.
    pub fn tau(n: u64) -> Self {
        ScaledMat::new(0.into(), (-1).into(), n.into(), 0.into(), n.into()).unwrap()
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn e(&self) -> &BigInt {
        &self.e
    }

    /// Integer trace `a + d`; it has the sign of the real trace.
    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_integral(&self) -> bool {
        self.e.is_one()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.e.is_one() && self.b.is_zero() && self.c.is_zero() && self.a == -BigInt::one() && self.d == -BigInt::one()
    }

    pub fn neg(&self) -> Self {
        ScaledMat {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
            e: self.e.clone(),
        }
    }

    pub fn mul(&self, o: &ScaledMat) -> ScaledMat {
        let a = &self.a * &o.a + &self.b * &o.c;
        let b = &self.a * &o.b + &self.b * &o.d;
        let c = &self.c * &o.a + &self.d * &o.c;
        let d = &self.c * &o.b + &self.d * &o.d;
        Self::normalized(a, b, c, d, &self.e * &o.e)
    }

    /// Adjugate `(d -b; -c a)` with the same scale.
    pub fn inv(&self) -> ScaledMat {
        ScaledMat {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
            e: self.e.clone(),
        }
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn pow(&self, k: i64) -> ScaledMat {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = ScaledMat::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Real entries `[a, b, c, d] / sqrt(e)`.
    pub fn to_f64(&self) -> [f64; 4] {
        let s = self.e.to_f64().unwrap_or(f64::INFINITY).sqrt();
        [&self.a, &self.b, &self.c, &self.d].map(|x| x.to_f64().unwrap_or(f64::NAN) / s)
    }

    /// Mobius action on the upper half plane.
    pub fn act(&self, z: Complex64) -> Complex64 {
        let [a, b, c, d] = self.to_f64();
        (z * a + b) / (z * c + d)
    }

    /// Automorphy factor `j(M, z) = cz + d` of the real matrix.
    pub fn j(&self, z: Complex64) -> Complex64 {
        let [_, _, c, d] = self.to_f64();
        z * c + d
    }

    /// The cusp `M * infinity = a/c`.
    pub fn image_of_infinity(&self) -> Cusp {
        Cusp::new(self.a.clone(), self.c.clone())
    }
}

/// `x * y`, normalized.
pub fn mat_mul(x: &ScaledMat, y: &ScaledMat) -> ScaledMat {
    x.mul(y)
}

pub fn mat_inv(x: &ScaledMat) -> ScaledMat {
    x.inv()
}

/// Membership in Gamma_0(N): scale 1 and `N | c`.
pub fn in_gamma0(x: &ScaledMat, n: u64) -> bool {
    x.e.is_one() && (&x.c % BigInt::from(n)).is_zero()
}

/// Membership in Gamma_0(N)+ for squarefree `N`: `e | N`, `e | a`, `e | d`, `N | c`.
pub fn in_gamma0_plus(x: &ScaledMat, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive("0".into()));
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    let nn = BigInt::from(n);
    Ok((&nn % &x.e).is_zero()
        && (&x.a % &x.e).is_zero()
        && (&x.d % &x.e).is_zero()
        && (&x.c % &nn).is_zero())
}

impl fmt::Display for ScaledMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)?;
        if !self.e.is_one() {
            write!(f, ";{}", self.e)?;
        }
        Ok(())
    }
}

impl FromStr for ScaledMat {
    type Err = Error;

    /// Parses `"a,b,c,d"` or `"a,b,c,d;e"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "matrix", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, scale) = match compact.split_once(';') {
            Some((b, e)) => (b, Some(e)),
            None => (compact.as_str(), None),
        };
        let nums: Vec<BigInt> = body
            .split(',')
            .map(|t| t.parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if nums.len() != 4 {
            return Err(bad());
        }
        let e = match scale {
            Some(t) => t.parse::<BigInt>().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        let [a, b, c, d]: [BigInt; 4] = nums.try_into().map_err(|_| bad())?;
        ScaledMat::new(a, b, c, d, e)
    }
}

/// A cusp `p/q` in lowest terms; `q = 0` encodes infinity as `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    pub p: BigInt,
    pub q: BigInt,
}

impl Cusp {
    /// Reduces `p/q`, moving the sign into `p`.
    pub fn new(p: BigInt, q: BigInt) -> Cusp {
        if q.is_zero() {
            return Cusp::infinity();
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Cusp { p, q }
    }

    pub fn infinity() -> Cusp {
        Cusp { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_squared_is_minus_identity() {
        let t = ScaledMat::tau(11);
        assert_eq!(t.mul(&t), ScaledMat::minus_identity());
    }

    #[test]
    fn product_of_gamma0_11_generators() {
        let a = ScaledMat::int(-7, -1, 22, 3).unwrap();
        let b = ScaledMat::int(4, 1, -33, -8).unwrap();
        assert_eq!(a.mul(&b), ScaledMat::int(5, 1, -11, -2).unwrap());
    }

    #[test]
    fn parse_and_print() {
        let m: ScaledMat = " 148, -89, 185 ,-111 ; 37".parse().unwrap();
        assert_eq!(m.to_string(), "148,-89,185,-111;37");
        assert!("1,2,3".parse::<ScaledMat>().is_err());
        assert!("1,1,1,1".parse::<ScaledMat>().is_err());
    }

    #[test]
    fn normalization_divides_common_factor() {
        let m = ScaledMat::scaled(2, 0, 0, 2, 4).unwrap();
        assert!(m.is_identity());
        let m = ScaledMat::scaled(-3, 0, 0, -3, 9).unwrap();
        assert!(m.is_minus_identity());
    }

    #[test]
    fn membership() {
        assert!(in_gamma0(&ScaledMat::int(-7, -1, 22, 3).unwrap(), 11));
        assert!(!in_gamma0(&ScaledMat::s(), 11));
        assert!(in_gamma0(&ScaledMat::t(), 5));
        assert!(in_gamma0_plus(&ScaledMat::scaled(0, 1, -37, 0, 37).unwrap(), 37).unwrap());
        assert!(in_gamma0_plus(&ScaledMat::scaled(148, -89, 185, -111, 37).unwrap(), 37).unwrap());
        assert!(!in_gamma0_plus(&ScaledMat::scaled(2, 1, 0, 1, 2).unwrap(), 37).unwrap());
        assert!(in_gamma0_plus(&ScaledMat::t(), 12).is_err());
    }
}
