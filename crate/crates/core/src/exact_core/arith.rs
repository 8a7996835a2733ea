//! Elementary arithmetic functions and group volumes for Gamma_0(N).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_core::rat::{int, Rat};

/// Prime factorization by trial division, as `(p, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && factorize(n).iter().all(|&(_, k)| k == 1)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn sigma1(n: u64) -> u64 {
    divisors(n).iter().sum()
}

/// Arithmetic data attached to a level `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arith {
    pub n: u64,
    pub primes: Vec<u64>,
    pub divisors: Vec<u64>,
    /// `mu(v)` for each entry of `divisors`.
    pub mobius: Vec<i64>,
    pub sigma1: u64,
    /// `prod 1/(1 - 1/p)`.
    pub alpha: Rat,
    /// `prod (1 + 1/p)`.
    pub beta: Rat,
    /// Index of Gamma_0(N) in SL(2,Z), `N prod (1 + 1/p)`.
    pub psi: u64,
    /// Volume of Gamma_0(N) as a multiple of pi.
    pub volume: Rat,
    /// Volume of Gamma_0(N)+ as a multiple of pi, for squarefree N.
    pub volume_plus: Option<Rat>,
}

pub fn arith(n: i64) -> Result<Arith> {
    if n <= 0 {
        return Err(Error::NonPositive(n.to_string()));
    }
    let n = n as u64;
    let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
    let divs = divisors(n);
    let mob = divs.iter().map(|&v| mobius(v)).collect();
    let mut alpha = Rat::one();
    let mut beta = Rat::one();
    let mut psi = n;
    for &p in &primes {
        alpha *= Rat::new(p.into(), (p - 1).into());
        beta *= Rat::new((p + 1).into(), p.into());
        psi = psi / p * (p + 1);
    }
    let volume = Rat::new(psi.into(), 3.into());
    let volume_plus = is_squarefree(n).then(|| &volume / int(1u64 << primes.len()));
    Ok(Arith {
        n,
        primes,
        divisors: divs,
        mobius: mob,
        sigma1: sigma1(n),
        alpha,
        beta,
        psi,
        volume,
        volume_plus,
    })
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Checks `sum_j (2j+1) C(2j,j) C(2(n-j),n-j) = (n+1) 4^n` exactly.
pub fn central_binomial_check(n: u64) -> bool {
    let mut lhs = BigInt::zero();
    for j in 0..=n {
        lhs += BigInt::from(2 * j + 1) * binomial(2 * j, j) * binomial(2 * (n - j), n - j);
    }
    lhs == BigInt::from(n + 1) * (BigInt::one() << (2 * n))
}
