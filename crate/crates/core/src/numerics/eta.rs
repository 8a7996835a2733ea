use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::series::{power_sum, sigma1_cached, TailBound, MAX_TERMS};
use crate::error::{Error, Result};
use crate::exact_core::{arith, GroupKind, ScaledMat};
use crate::symbols_moonshine::symbol_at_infinity;

/// `log eta(z) = pi i z / 12 - sum_k sigma_{-1}(k) q^k`.
pub fn log_eta(z: Complex64, tol: f64) -> Result<Complex64> {
    if z.im <= 0.0 {
        return Err(Error::NotInUpperHalfPlane);
    }
    let r = (-2.0 * std::f64::consts::PI * z.im).exp();
    // sigma_{-1}(k) = sigma_1(k)/k <= 1 + ln k
    let t = TailBound::Log(1.0).terms_needed(r, tol);
    if t > MAX_TERMS {
        return Err(Error::Convergence { need: t, have: MAX_TERMS });
    }
    let s = sigma1_cached();
    let lead = Complex64::new(0.0, std::f64::consts::PI / 12.0) * z;
    Ok(lead - power_sum(z, t, |k| s[k] as f64 / k as f64))
}

/// `alpha_N sum_{v | N} (v/N) mu(N/v) log eta(v z)`.
pub fn log_eta_n(n: u64, z: Complex64, tol: f64) -> Result<Complex64> {
    let a = arith(n as i64)?;
    let alpha = a.alpha.to_f64().unwrap_or(f64::NAN);
    let mut acc = Complex64::new(0.0, 0.0);
    for &v in &a.divisors {
        let mu = crate::exact_core::mobius(n / v);
        if mu != 0 {
            acc += log_eta(z * v as f64, tol)? * (v as f64 / n as f64 * mu as f64);
        }
    }
    Ok(acc * alpha)
}

/// `2^{-r} sum_{v | N} log eta(v z)` for squarefree `N` with `r` prime factors.
pub fn log_eta_plus(n: u64, z: Complex64, tol: f64) -> Result<Complex64> {
    let a = arith(n as i64)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for &v in &a.divisors {
        acc += log_eta(z * v as f64, tol)?;
    }
    Ok(acc / 2f64.powi(a.primes.len() as i32))
}

/// The eta logarithm attached to a group.
pub fn log_eta_for(kind: GroupKind, z: Complex64, tol: f64) -> Result<Complex64> {
    match kind {
        GroupKind::Sl2z => log_eta(z, tol),
        GroupKind::Gamma0(n) => log_eta_n(n, z, tol),
        GroupKind::Gamma0Plus(n) => log_eta_plus(n, z, tol),
    }
}

/// `|log eta(gz) - log eta(z) - Log j(g, z)/2 - pi i S(g)|`, with `j` the
/// normalized automorphy factor.
pub fn eta_residual(kind: GroupKind, g: &ScaledMat, z: Complex64, tol: f64) -> Result<f64> {
    let s = symbol_at_infinity(kind, g)?.to_f64().unwrap_or(f64::NAN);
    let lhs = log_eta_for(kind, g.act(z), tol)? - log_eta_for(kind, z, tol)?;
    let rhs = g.j(z).ln() * 0.5 + Complex64::new(0.0, std::f64::consts::PI * s);
    Ok((lhs - rhs).norm())
}

/// A test point near the pole of `g`: `-d/c + (u + iv)/|c|` in real entries,
/// so that `Im z = v/|c|` and `Im gz = v/(|c| (u^2 + v^2))`.
pub fn sample_point(g: &ScaledMat, u: f64, v: f64) -> Complex64 {
    let [_, _, c, d] = g.to_f64();
    if c == 0.0 {
        return Complex64::new(u, v);
    }
    Complex64::new(-d / c + u / c.abs(), v / c.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_at_i() {
        // eta(i) = Gamma(1/4) / (2 pi^{3/4})
        let gamma_quarter = 3.625_609_908_221_908_f64;
        let want = (gamma_quarter / (2.0 * std::f64::consts::PI.powf(0.75))).ln();
        let got = log_eta(Complex64::new(0.0, 1.0), 1e-15).unwrap();
        assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-13);
    }

    #[test]
    fn s_transformation() {
        let z = Complex64::new(0.3, 0.8);
        let r = eta_residual(GroupKind::Sl2z, &ScaledMat::s(), z, 1e-14).unwrap();
        assert!(r < 1e-11, "{r}");
    }
}
