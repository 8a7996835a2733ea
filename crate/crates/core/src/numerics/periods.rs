use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::series::{e2_series, f11_series, power_sum, QSeries, TailBound, MAX_TERMS};
use crate::error::{Error, Result};
use crate::exact_core::{ModZ, ScaledMat};

/// Real period of `f_37^+`.
pub const OMEGA1_37: f64 = 2.993458644;
/// Imaginary part of the second period of `f_37^+`.
pub const OMEGA2_37_IM: f64 = 2.451389381;

/// Truncation tolerance for period integrals.
pub const PERIOD_TOL: f64 = 1e-9;

/// `-d/c + i/|c|` in real entries, so that `Im z0 = Im g z0`; `i` when `c = 0`.
pub fn base_point(g: &ScaledMat) -> Complex64 {
    let [_, _, c, d] = g.to_f64();
    if c == 0.0 {
        Complex64::new(0.0, 1.0)
    } else {
        Complex64::new(-d / c, 1.0 / c.abs())
    }
}

/// `<g, f> = F(g z0) - F(z0)` for the antiderivative `F = sum a(n)/n e(nz)`.
pub fn modular_symbol(g: &ScaledMat, series: &QSeries) -> Result<Complex64> {
    if g.c().bits() == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    modular_symbol_at(g, series, base_point(g), PERIOD_TOL)
}

pub fn modular_symbol_at(g: &ScaledMat, series: &QSeries, z0: Complex64, tol: f64) -> Result<Complex64> {
    Ok(series.integrated(g.act(z0), tol)? - series.integrated(z0, tol)?)
}

/// `(1 - eps) sum a(n)/n exp(-2 pi n / sqrt N)`.
pub fn l1(series: &QSeries, n: u64, eps: i32) -> Result<f64> {
    let y = 1.0 / (n as f64).sqrt();
    let v = series.integrated(Complex64::new(0.0, y), 1e-12)?;
    Ok((1 - eps) as f64 * v.re)
}

/// `L(1, f)` for the level 11 newform (Fricke eigenvalue -1).
pub fn l1_f11() -> Result<f64> {
    l1(f11_series(), 11, -1)
}

/// `G(w) = 2 pi i c_0 w + sum c_n/n e(nw)`.
fn e2_primitive(series: &QSeries, w: Complex64, tol: f64) -> Result<Complex64> {
    let lin = Complex64::new(0.0, 2.0 * std::f64::consts::PI * series.coeffs[0]) * w;
    Ok(lin + series.integrated(w, tol)?)
}

/// `<g, E_inf,2 - E_0,2>` on `Gamma_0(11)`.
pub fn e2_period(g: &ScaledMat) -> Result<Complex64> {
    let z0 = base_point(g);
    let s = e2_series();
    Ok(e2_primitive(s, g.act(z0), PERIOD_TOL)? - e2_primitive(s, z0, PERIOD_TOL)?)
}

/// `(4 pi / (8 pi^2 i)) <g, g_2>`, to compare with `S_11(g) - S_0(g)`.
pub fn e2_symbol_difference(g: &ScaledMat) -> Result<Complex64> {
    let p = e2_period(g)?;
    Ok(p / Complex64::new(0.0, 2.0 * std::f64::consts::PI))
}

/// `(-Log j(MN, z) + Log j(M, Nz) + Log j(N, z)) / (2 pi i)`, unrounded.
pub fn omega_float_raw(m: &ScaledMat, n: &ScaledMat, z: Complex64) -> Complex64 {
    let mn = m.mul(n);
    let v = -mn.j(z).ln() + m.j(n.act(z)).ln() + n.j(z).ln();
    v / Complex64::new(0.0, 2.0 * std::f64::consts::PI)
}

/// The phase factor evaluated in floating point at `z = 2i`.
pub fn omega_float(m: &ScaledMat, n: &ScaledMat) -> Result<i32> {
    let v = omega_float_raw(m, n, Complex64::new(0.0, 2.0));
    let r = v.re.round();
    if (v - r).norm() >= 1e-6 {
        return Err(Error::Shape(format!("omega_float: {v} is not near an integer")));
    }
    Ok(r as i32)
}

/// `(Log conj j(M, z) - conj Log j(M, z)) / (2 pi i)`, which should be `rho(M)`.
pub fn conj_log_defect(m: &ScaledMat, z: Complex64) -> Complex64 {
    let j = m.j(z);
    // 0.0 - im keeps a zero imaginary part positive, so real negative j stays on the branch cut
    let conj = Complex64::new(j.re, 0.0 - j.im);
    (conj.ln() - j.ln().conj()) / Complex64::new(0.0, 2.0 * std::f64::consts::PI)
}

/// Period data of the level 11 newform used by the cusp-change check.
#[derive(Clone, Copy, Debug)]
pub struct F11Data {
    pub period_a: Complex64,
    pub period_b: Complex64,
    pub l1: f64,
    /// `V_f / pi = 1 / Im(<A,f> conj <B,f>)`.
    pub vf_over_pi: f64,
}

impl F11Data {
    pub fn compute(a: &ScaledMat, b: &ScaledMat) -> Result<Self> {
        let f = f11_series();
        let period_a = modular_symbol(a, f)?;
        let period_b = modular_symbol(b, f)?;
        let pairing = (period_a * period_b.conj()).im;
        Ok(F11Data { period_a, period_b, l1: l1_f11()?, vf_over_pi: 1.0 / pairing })
    }

    /// `(V_f/pi) L(1,f) Im <g, f>`.
    pub fn cusp_change_term(&self, period: Complex64) -> f64 {
        self.vf_over_pi * self.l1 * period.im
    }

    /// Distance to `Z` of `S*_inf - S*_0 + (V_f/pi) L(1,f) Im <g, f>`.
    pub fn cusp_change_residual(&self, s_inf: &ModZ, s_zero: &ModZ, period: Complex64) -> f64 {
        let diff = (s_inf.clone() - s_zero.clone()).value().to_f64().unwrap_or(f64::NAN);
        let q = diff + self.cusp_change_term(period);
        (q - q.round()).abs()
    }
}

/// Terms needed for the raw tail at the slowest base point of level 11.
pub fn level11_terms(tol: f64) -> usize {
    let r = (-2.0 * std::f64::consts::PI / 22.0).exp();
    TailBound::Constant(2.0).terms_needed(r, tol).min(MAX_TERMS)
}

/// `sum a(n) e(nz)` itself, for spot checks of the expansion.
pub fn evaluate(series: &QSeries, z: Complex64, terms: usize) -> Complex64 {
    let t = terms.min(series.coeffs.len() - 1);
    Complex64::new(series.coeffs[0], 0.0) + power_sum(z, t, |n| series.coeffs[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::gamma0_11;

    #[test]
    fn l_value() {
        assert!((l1_f11().unwrap() - 0.253_841_860_855_9).abs() < 1e-9);
        assert_eq!(l1(f11_series(), 11, 1).unwrap(), 0.0);
    }

    #[test]
    fn translation_period() {
        let p = e2_period(&ScaledMat::t()).unwrap();
        assert!((p - Complex64::new(0.0, 2.0 * std::f64::consts::PI)).norm() < 1e-9);
    }

    #[test]
    fn manin() {
        let p = gamma0_11();
        let d = F11Data::compute(&p.generator("A").unwrap().matrix, &p.generator("B").unwrap().matrix).unwrap();
        assert!((d.period_a + d.period_b + 5.0 * d.l1).norm() < 1e-6);
        assert!((d.l1 + 0.4 * d.period_a.re).abs() < 1e-6);
    }
}
