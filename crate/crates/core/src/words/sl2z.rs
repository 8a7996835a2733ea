use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_core::ScaledMat;
use crate::words::preset::sl2z;
use crate::words::word::Word;

const S: usize = 0;
const T: usize = 1;
const MINUS_I: usize = 2;

fn small(x: &BigInt) -> Result<i64> {
    x.try_into().map_err(|_| Error::Shape(format!("exponent {x} does not fit in 64 bits")))
}

/// Writes `M` in SL(2,Z) as `[-I] T^q1 S T^q2 S ...` by continued fractions.
pub fn sl2z_word(m: &ScaledMat) -> Result<Word> {
    if !m.is_integral() {
        return Err(Error::NotInGroup { matrix: m.to_string(), group: "SL(2,Z)".into() });
    }
    let (mut a, mut b, mut c, mut d) = (m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone());
    let mut w = Word::new();
    let mut negate = false;
    while !c.is_zero() {
        // M = T^q S M' with M' = S^{-1} T^{-q} M
        let q = a.div_floor(&c);
        w.push(T, small(&q)?);
        w.push(S, 1);
        let a1 = &a - &q * &c;
        let b1 = &b - &q * &d;
        a = std::mem::replace(&mut c, -a1);
        b = std::mem::replace(&mut d, -b1);
    }
    if a.is_one() {
        w.push(T, small(&b)?);
    } else {
        // (-1 b; 0 -1) = -T^{-b}
        negate = true;
        w.push(T, small(&-b)?);
    }
    if negate {
        w.letters.insert(0, crate::words::word::Letter { gen: MINUS_I, exp: 1 });
    }
    debug_assert_eq!(&sl2z().eval(&w), m);
    Ok(w)
}
