//! Higher-order symbols `S*` modulo 1, folded over words from generator
//! tables with the symplectic pairing term, and `theta = S* - S`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_core::{int, rat, sgn, GroupKind, ModZ, Rat, ScaledMat};
use crate::phase::{omega, rho};
use crate::symbols_congruence::{iota, parabolic_shape, cusp_pair_correction, s_cusp0, s_elliptic};
use crate::symbols_moonshine::symbol_at_infinity;
use crate::words::{solve_word, GroupPreset, Letter, Word};

/// `q + n X_B` modulo 1, where `X_B` stands for an undetermined value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineModZ {
    pub q: ModZ,
    pub n: i64,
}

impl AffineModZ {
    pub fn zero() -> Self {
        AffineModZ { q: ModZ::zero(), n: 0 }
    }

    pub fn constant(q: ModZ) -> Self {
        AffineModZ { q, n: 0 }
    }

    pub fn unknown(n: i64) -> Self {
        AffineModZ { q: ModZ::zero(), n }
    }

    pub fn is_constant(&self) -> bool {
        self.n == 0
    }

    pub fn is_zero(&self) -> bool {
        self.n == 0 && self.q.is_zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        AffineModZ { q: ModZ::new(self.q.value() * int(k)), n: self.n * k }
    }

    pub fn add_rat(&self, x: &Rat) -> Self {
        AffineModZ { q: ModZ::new(self.q.value() + x), n: self.n }
    }
}

impl Add for AffineModZ {
    type Output = AffineModZ;
    fn add(self, o: Self) -> Self {
        AffineModZ { q: self.q + o.q, n: self.n + o.n }
    }
}

impl Sub for AffineModZ {
    type Output = AffineModZ;
    fn sub(self, o: Self) -> Self {
        AffineModZ { q: self.q - o.q, n: self.n - o.n }
    }
}

impl Neg for AffineModZ {
    type Output = AffineModZ;
    fn neg(self) -> Self {
        AffineModZ { q: -self.q, n: -self.n }
    }
}

impl From<ModZ> for AffineModZ {
    fn from(q: ModZ) -> Self {
        AffineModZ::constant(q)
    }
}

impl fmt::Display for AffineModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{} + {}*X_B", self.q, self.n)
        }
    }
}

/// Which cusp the symbol is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarCusp {
    Infinity,
    Zero,
}

/// Running value and homology class while folding a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolAccumulator {
    pub value: AffineModZ,
    pub homology: (i64, i64),
}

impl Default for SymbolAccumulator {
    fn default() -> Self {
        SymbolAccumulator { value: AffineModZ::zero(), homology: (0, 0) }
    }
}

impl SymbolAccumulator {
    /// Right-multiplies by one unit letter `g^{+-1}`:
    /// `v <- v + S*(g^e) + kappa (m n_g - n m_g)`.
    pub fn push_unit(&mut self, preset: &GroupPreset, cusp: StarCusp, gen: usize, sign: i64) -> Result<()> {
        let g = &preset.generators[gen];
        let table = match cusp {
            StarCusp::Infinity => &g.star_inf,
            StarCusp::Zero => &g.star_zero,
        };
        let base = table.as_ref().ok_or_else(|| Error::MissingValue(g.name.clone()))?;
        let kappa = preset.kappa.as_ref().ok_or_else(|| Error::MissingValue("kappa".into()))?;
        let (mg, ng) = (g.homology.0 * sign, g.homology.1 * sign);
        let (m, n) = self.homology;
        let cross = m * ng - n * mg;
        self.value = self.value.clone() + base.scale(sign);
        self.value = self.value.add_rat(&(kappa * int(cross)));
        self.homology = (m + mg, n + ng);
        Ok(())
    }

    pub fn push(&mut self, preset: &GroupPreset, cusp: StarCusp, l: &Letter) -> Result<()> {
        let sign = l.exp.signum();
        for _ in 0..l.exp.unsigned_abs() {
            self.push_unit(preset, cusp, l.gen, sign)?;
        }
        Ok(())
    }
}

/// Homology coordinates of a word.
pub fn homology(preset: &GroupPreset, w: &Word) -> (i64, i64) {
    w.letters.iter().fold((0, 0), |(m, n), l| {
        let (a, b) = preset.generators[l.gen].homology;
        (m + a * l.exp, n + b * l.exp)
    })
}

/// `kappa (m1 n2 - n1 m2)`.
pub fn pairing(preset: &GroupPreset, w1: &Word, w2: &Word) -> Result<Rat> {
    let kappa = preset.kappa.as_ref().ok_or_else(|| Error::MissingValue("kappa".into()))?;
    let (m1, n1) = homology(preset, w1);
    let (m2, n2) = homology(preset, w2);
    Ok(kappa * int(m1 * n2 - n1 * m2))
}

/// `S*` of the element a word evaluates to, modulo 1.
pub fn s_star(preset: &GroupPreset, cusp: StarCusp, w: &Word) -> Result<AffineModZ> {
    let mut acc = SymbolAccumulator::default();
    for l in &w.letters {
        acc.push(preset, cusp, l)?;
    }
    Ok(acc.value)
}

/// `S*` of a matrix, via the word solver.
pub fn s_star_matrix(preset: &GroupPreset, cusp: StarCusp, m: &ScaledMat, budget: usize) -> Result<AffineModZ> {
    s_star(preset, cusp, &solve_word(preset, m, budget)?)
}

/// The exact first-order symbol of `m` at the given cusp.
pub fn s_exact(preset: &GroupPreset, cusp: StarCusp, m: &ScaledMat) -> Result<Rat> {
    match (cusp, preset.kind) {
        (StarCusp::Infinity, kind) => symbol_at_infinity(kind, m),
        (StarCusp::Zero, GroupKind::Gamma0(n)) => s_cusp0(n, m),
        (StarCusp::Zero, kind) => Err(Error::Shape(format!("{} has no cusp 0 symbol here", kind.label()))),
    }
}

/// `theta = S* - S` modulo 1.
pub fn theta(preset: &GroupPreset, cusp: StarCusp, w: &Word) -> Result<AffineModZ> {
    let s = s_exact(preset, cusp, &preset.eval(w))?;
    Ok(s_star(preset, cusp, w)?.add_rat(&-s))
}

/// Parabolic law for `S*`: `-log j(g_b, i)/(2 pi i) - omega(sigma^-1, g) + omega(g_b, sigma^-1)`,
/// which is 0 when `sigma^-1 g sigma = +(1 h; 0 1)`.
pub fn s_star_parabolic(g: &ScaledMat, sigma: &ScaledMat) -> Result<Rat> {
    let (_, minus) = parabolic_shape(g, sigma)?;
    let log_term = if minus { rat(-1, 2) } else { Rat::zero() };
    Ok(log_term - int(cusp_pair_correction(g, sigma)))
}

/// Elliptic elements have equal first- and higher-order symbols.
pub fn s_star_elliptic(e: &ScaledMat, r: u32) -> Result<Rat> {
    s_elliptic(e, r)
}

/// Passes from `S*` on Gamma_0(p) to `S*` on Gamma_0(p)+ for `g = (a b; c d)`.
pub fn transfer_plus(p: u64, g: &ScaledMat, s_star_on_gamma0: &Rat) -> Result<Rat> {
    if !crate::exact_core::in_gamma0(g, p) {
        return Err(Error::NotInGroup { matrix: g.to_string(), group: format!("Gamma0({p})") });
    }
    let (a, b, c) = (sgn(g.a()), sgn(g.b()), sgn(g.c()));
    let shift = if c >= 0 && a <= 0 && b > 0 {
        rat(1, 2)
    } else if c < 0 && a <= 0 && b <= 0 {
        rat(-1, 2)
    } else {
        Rat::zero()
    };
    Ok(s_star_on_gamma0 + shift)
}

/// The phase term `(omega(tau^-1, g) - omega(tau^-1 g tau, tau^-1))/2` that the
/// transfer table tabulates.
pub fn transfer_phase(p: u64, g: &ScaledMat) -> Rat {
    let t = ScaledMat::tau(p);
    let ti = t.inv();
    let conj = ti.mul(g).mul(&t);
    rat((omega(&ti, g) - omega(&conj, &ti)) as i64, 2)
}

/// Checks `S*(iota g) = -S*(g) - rho(g)` modulo 1 at infinity.
pub fn iota_star_check(preset: &GroupPreset, w: &Word, budget: usize) -> Result<bool> {
    let g = preset.eval(w);
    let wi = solve_word(preset, &iota(&g), budget)?;
    let lhs = s_star(preset, StarCusp::Infinity, &wi)?;
    let rhs = (-s_star(preset, StarCusp::Infinity, w)?).add_rat(&-int(rho(&g)));
    Ok(lhs == rhs)
}

