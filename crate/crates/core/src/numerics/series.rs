use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Most coefficients any series in this module is built with.
pub const MAX_TERMS: usize = 20_000;

/// Bound on `|c_n / n|` used to size truncations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailBound {
    /// `|c_n / n| <= c`.
    Constant(f64),
    /// `|c_n / n| <= c (1 + ln n)`.
    Log(f64),
}

impl TailBound {
    /// Upper bound for `sum_{n > t} |c_n / n| r^n`.
    pub fn tail(&self, r: f64, t: usize) -> f64 {
        let t = t.max(1) as f64;
        let head = r.powf(t + 1.0);
        match *self {
            TailBound::Constant(c) => c * head / (1.0 - r),
            // 1 + ln n <= 1 + ln t + (n - t)/t
            TailBound::Log(c) => c * head * ((1.0 + t.ln()) / (1.0 - r) + 1.0 / (t * (1.0 - r).powi(2))),
        }
    }

    /// Smallest `t` whose tail at radius `r` is below `tol`.
    pub fn terms_needed(&self, r: f64, tol: f64) -> usize {
        if r <= 0.0 {
            return 1;
        }
        let mut t = 1usize;
        while self.tail(r, t) > tol {
            t = (t * 2).max(t + 8);
            if t > 1 << 26 {
                return t;
            }
        }
        let (mut lo, mut hi) = (t / 2, t);
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            if self.tail(r, mid) > tol {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }
}

/// Truncated q-expansion `sum c_n q^n`, `coeffs[n] = c_n`.
#[derive(Clone, Debug)]
pub struct QSeries {
    pub coeffs: Vec<f64>,
    pub tail: TailBound,
}

impl QSeries {
    /// `sum_{1 <= n <= T} (c_n / n) e(nz)` with `T` chosen from the tail bound.
    pub fn integrated(&self, z: Complex64, tol: f64) -> Result<Complex64> {
        if z.im <= 0.0 {
            return Err(Error::NotInUpperHalfPlane);
        }
        let r = (-2.0 * std::f64::consts::PI * z.im).exp();
        let need = self.tail.terms_needed(r, tol);
        if need >= self.coeffs.len() {
            return Err(Error::Convergence { need, have: self.coeffs.len() - 1 });
        }
        Ok(power_sum(z, need, |n| self.coeffs[n] / n as f64))
    }
}

/// `sum_{n=1}^{t} w(n) e(nz)`, resynchronizing the powers every 128 terms.
pub(crate) fn power_sum(z: Complex64, t: usize, w: impl Fn(usize) -> f64) -> Complex64 {
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let q = (two_pi_i * z).exp();
    let mut qn = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=t {
        qn = if n % 128 == 0 { (two_pi_i * z * n as f64).exp() } else { qn * q };
        let c = w(n);
        if c != 0.0 {
            acc += qn * c;
        }
    }
    acc
}

/// `sigma_1(n)` for `0 <= n <= t` (with `sigma_1(0) = 0`).
pub fn sigma1_table(t: usize) -> Vec<u64> {
    let mut s = vec![0u64; t + 1];
    for d in 1..=t {
        for m in (d..=t).step_by(d) {
            s[m] += d as u64;
        }
    }
    s
}

pub(crate) fn sigma1_cached() -> &'static [u64] {
    static S: OnceLock<Vec<u64>> = OnceLock::new();
    S.get_or_init(|| sigma1_table(MAX_TERMS))
}

/// Coefficients of `prod (1 - q^n)` up to `q^t`, from the pentagonal numbers.
fn euler_product(t: usize) -> Vec<i64> {
    let mut e = vec![0i64; t + 1];
    e[0] = 1;
    for k in 1.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let p1 = k * (3 * k - 1) / 2;
        let p2 = k * (3 * k + 1) / 2;
        if p1 > t {
            break;
        }
        e[p1] += sign;
        if p2 <= t {
            e[p2] += sign;
        }
    }
    e
}

fn sparse_square(x: &[i64]) -> Vec<i64> {
    let t = x.len() - 1;
    let nz: Vec<usize> = (0..=t).filter(|&i| x[i] != 0).collect();
    let mut out = vec![0i64; t + 1];
    for &i in &nz {
        for &j in &nz {
            if i + j > t {
                break;
            }
            out[i + j] += x[i] * x[j];
        }
    }
    out
}

/// `a(1..=t)` of `eta(z)^2 eta(11z)^2` as exact integers (index 0 unused):
/// the product of the two eta squares, each expanded through Euler's
/// pentagonal series.
pub fn f11_integer_coefficients(t: usize) -> Vec<i64> {
    let p = sparse_square(&euler_product(t));
    let mut a = vec![0i64; t + 1];
    // a(n) = sum_j p[n - 1 - 11 j] p[j]
    for j in 0..=t / 11 {
        if p[j] == 0 {
            continue;
        }
        for i in 0..t.saturating_sub(11 * j) {
            a[1 + i + 11 * j] += p[i] * p[j];
        }
    }
    a
}

/// Independent expansion from `eta(z) = sum chi(n) q^{n^2/24}`:
/// `a(N) = sum chi(n) chi(m) chi(k) chi(l)` over `n^2 + m^2 + 11(k^2 + l^2) = 24 N`.
pub fn f11_coefficients_chi(t: usize) -> Vec<i64> {
    fn chi(n: usize) -> i64 {
        match n % 12 {
            1 | 11 => 1,
            5 | 7 => -1,
            _ => 0,
        }
    }
    let top = 24 * t;
    let roots: Vec<usize> = (1..).take_while(|n| n * n <= top).filter(|&n| chi(n) != 0).collect();
    let mut a = vec![0i64; t + 1];
    for &n in &roots {
        for &m in &roots {
            let s1 = n * n + m * m;
            if s1 >= top {
                continue;
            }
            for &k in &roots {
                let s2 = s1 + 11 * k * k;
                if s2 >= top {
                    break;
                }
                for &l in &roots {
                    let s = s2 + 11 * l * l;
                    if s > top {
                        break;
                    }
                    if s % 24 == 0 {
                        a[s / 24] += chi(n) * chi(m) * chi(k) * chi(l);
                    }
                }
            }
        }
    }
    a
}

/// Brute-force `q prod (1 - q^n)^2 (1 - q^{11n})^2`, quadratic in `t`.
pub fn f11_coefficients_brute(t: usize) -> Vec<i64> {
    let mut p = vec![0i64; t + 1];
    p[0] = 1;
    let mut times = |step: usize| {
        for i in (step..=t).rev() {
            p[i] -= p[i - step];
        }
    };
    for n in 1..=t {
        times(n);
        times(n);
        if 11 * n <= t {
            times(11 * n);
            times(11 * n);
        }
    }
    let mut a = vec![0i64; t + 1];
    a[1..].copy_from_slice(&p[..t]);
    a
}

/// The newform of level 11 as a float series.
pub fn f11_coefficients(t: usize) -> QSeries {
    QSeries {
        coeffs: f11_integer_coefficients(t).into_iter().map(|x| x as f64).collect(),
        tail: TailBound::Constant(2.0),
    }
}

pub fn f11_series() -> &'static QSeries {
    static F: OnceLock<QSeries> = OnceLock::new();
    F.get_or_init(|| f11_coefficients(MAX_TERMS))
}

/// `g = -(E_2(z) - 11 E_2(11z))/10`: `c_0 = 1`,
/// `c_n = (24/10)(sigma_1(n) - 11 sigma_1(n/11))`.
pub fn e2_difference_series(t: usize) -> QSeries {
    let s = sigma1_table(t);
    let mut c = vec![0.0; t + 1];
    c[0] = 1.0;
    for n in 1..=t {
        let inner = s[n] as f64 - if n % 11 == 0 { 11.0 * s[n / 11] as f64 } else { 0.0 };
        c[n] = 2.4 * inner;
    }
    QSeries { coeffs: c, tail: TailBound::Log(4.8) }
}

pub fn e2_series() -> &'static QSeries {
    static G: OnceLock<QSeries> = OnceLock::new();
    G.get_or_init(|| e2_difference_series(MAX_TERMS))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        let a = f11_integer_coefficients(7);
        assert_eq!(&a[1..], &[1, -2, -1, 2, 1, 2, -2]);
    }

    #[test]
    fn three_expansions_agree() {
        let t = 60;
        let brute = f11_coefficients_brute(t);
        assert_eq!(f11_integer_coefficients(t), brute);
        assert_eq!(f11_coefficients_chi(t), brute);
    }

    #[test]
    fn tail_sizes() {
        let r = (-2.0 * std::f64::consts::PI / 22.0f64).exp();
        let t = TailBound::Constant(2.0).terms_needed(r, 1e-12);
        assert!(TailBound::Constant(2.0).tail(r, t) <= 1e-12);
        assert!(TailBound::Constant(2.0).tail(r, t - 1) > 1e-12);
    }
}
