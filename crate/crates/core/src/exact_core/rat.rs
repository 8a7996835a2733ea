//! Exact rationals and their classes modulo one.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rat = BigRational;

/// `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// Sign of an integer as -1, 0 or 1 (with sgn 0 = 0).
pub fn sgn(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Fractional part `x - floor(x)`, in [0, 1).
pub fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

/// True when `n * x` is an integer.
pub fn denom_divides(x: &Rat, n: u64) -> bool {
    (x * int(n)).is_integer()
}

/// A rational number reduced into [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModZ(Rat);

impl ModZ {
    pub fn new(x: Rat) -> Self {
        ModZ(frac(&x))
    }

    pub fn zero() -> Self {
        ModZ(Rat::zero())
    }

    pub fn from_i64(n: i64, d: i64) -> Self {
        Self::new(rat(n, d))
    }

    /// Canonical representative in [0, 1).
    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when `n` times the class is zero.
    pub fn denom_divides(&self, n: u64) -> bool {
        denom_divides(&self.0, n)
    }

    /// Distance to the nearest integer of the representative, as f64.
    pub fn dist_to_zero(&self) -> f64 {
        let v = self.0.to_f64().unwrap_or(0.0);
        v.min(1.0 - v)
    }
}

impl From<Rat> for ModZ {
    fn from(x: Rat) -> Self {
        ModZ::new(x)
    }
}

impl Add for ModZ {
    type Output = ModZ;
    fn add(self, o: ModZ) -> ModZ {
        ModZ::new(self.0 + o.0)
    }
}

impl<'a> Add<&'a ModZ> for &'a ModZ {
    type Output = ModZ;
    fn add(self, o: &ModZ) -> ModZ {
        ModZ::new(&self.0 + &o.0)
    }
}

impl AddAssign for ModZ {
    fn add_assign(&mut self, o: ModZ) {
        *self = ModZ::new(&self.0 + o.0);
    }
}

impl Sub for ModZ {
    type Output = ModZ;
    fn sub(self, o: ModZ) -> ModZ {
        ModZ::new(self.0 - o.0)
    }
}

impl Neg for ModZ {
    type Output = ModZ;
    fn neg(self) -> ModZ {
        ModZ::new(-self.0)
    }
}

impl fmt::Display for ModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact gcd of two big integers, non-negative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn is_one(x: &BigInt) -> bool {
    x.is_one()
}
