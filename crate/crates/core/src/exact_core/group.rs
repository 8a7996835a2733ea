use crate::exact_core::rat::{int, rat, Rat};
use crate::exact_core::matrix::{in_gamma0, in_gamma0_plus, ScaledMat};

/// Signature data of a finite-volume Fuchsian group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupData {
    pub genus: u32,
    pub cusps: u32,
    pub elliptic_orders: Vec<u32>,
    /// Hyperbolic volume as a multiple of pi.
    pub volume: Rat,
}

impl GroupData {
    /// `2g - 2 + c + sum (1 - 1/m_j)`.
    pub fn euler_term(&self) -> Rat {
        let mut x = int(2 * self.genus as i64 - 2 + self.cusps as i64);
        for &m in &self.elliptic_orders {
            x += Rat::from_integer(1.into()) - rat(1, m as i64);
        }
        x
    }

    /// Gauss-Bonnet: `volume / (2 pi)` equals the Euler term.
    pub fn gauss_bonnet_holds(&self) -> bool {
        &self.volume / int(2) == self.euler_term()
    }
}

/// The three families of groups the library computes symbols for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sl2z,
    Gamma0(u64),
    Gamma0Plus(u64),
}

impl GroupKind {
    pub fn contains(&self, m: &ScaledMat) -> bool {
        match *self {
            GroupKind::Sl2z => m.is_integral(),
            GroupKind::Gamma0(n) => in_gamma0(m, n),
            GroupKind::Gamma0Plus(n) => in_gamma0_plus(m, n).unwrap_or(false),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            GroupKind::Sl2z => "SL(2,Z)".to_string(),
            GroupKind::Gamma0(n) => format!("Gamma0({n})"),
            GroupKind::Gamma0Plus(n) => format!("Gamma0({n})+"),
        }
    }
}
