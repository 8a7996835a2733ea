//! Classical Dedekind sums `s(h, k)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_core::{int, rat, Rat};

/// The sawtooth `((x))`: `x - floor(x) - 1/2` off the integers, 0 on them.
pub fn sawtooth(x: &Rat) -> Rat {
    if x.is_integer() {
        Rat::zero()
    } else {
        x - x.floor() - rat(1, 2)
    }
}

fn check_args(h: &BigInt, k: &BigInt) -> Result<()> {
    if !k.is_positive() {
        return Err(Error::NonPositive(k.to_string()));
    }
    if !h.gcd(k).is_one() {
        return Err(Error::NotCoprime { h: h.clone(), k: k.clone() });
    }
    Ok(())
}

/// Direct summation `sum_{m=1}^{k-1} ((hm/k)) ((m/k))`.
///
/// Off the integers `((x/k)) = (2 (x mod k) - k) / 2k`, so every term is
/// accumulated exactly over the common denominator `4k^2`.
pub fn s_naive(h: i64, k: i64) -> Result<Rat> {
    check_args(&h.into(), &k.into())?;
    let (h, k) = (h as i128, k as i128);
    let mut acc: i128 = 0;
    for m in 1..k {
        let r = (h * m).rem_euclid(k);
        acc += (2 * r - k) * (2 * m - k);
    }
    Ok(Rat::new(acc.into(), (4 * k * k).into()))
}

/// `s(h, k)` by Euclidean descent through reciprocity.
pub fn s_fast(h: &BigInt, k: &BigInt) -> Result<Rat> {
    s_fast_traced(h, k).map(|(s, _)| s)
}

/// `s(h, k)` with the number of reciprocity steps taken.
pub fn s_fast_traced(h: &BigInt, k: &BigInt) -> Result<(Rat, usize)> {
    check_args(h, k)?;
    let mut h = h.mod_floor(k);
    let mut k = k.clone();
    let mut acc = Rat::zero();
    let mut sign = 1i32;
    let mut steps = 0;
    let quarter = rat(1, 4);
    while !k.is_one() {
        // oddness: s(k - h, k) = -s(h, k)
        if &h * 2u32 > k {
            h = &k - &h;
            sign = -sign;
        }
        // s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk)
        let r = Rat::new(&h * &h + &k * &k + 1u32, BigInt::from(12u32) * &h * &k) - &quarter;
        if sign > 0 {
            acc += r;
        } else {
            acc -= r;
        }
        sign = -sign;
        let next = k.mod_floor(&h);
        k = std::mem::replace(&mut h, next);
        steps += 1;
    }
    Ok((acc, steps))
}

/// Convenience wrapper on machine integers.
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rat> {
    s_fast(&h.into(), &k.into())
}

/// Right side of the reciprocity law, `-1/4 + (h/k + k/h + 1/(hk))/12`.
pub fn reciprocity_rhs(h: &BigInt, k: &BigInt) -> Rat {
    let hk = h * k;
    (Rat::new(h.clone(), k.clone()) + Rat::new(k.clone(), h.clone()) + Rat::new(BigInt::one(), hk)) / int(12) - rat(1, 4)
}
