//! The phase factor `omega(M, N)` and the branch marker `rho(M)`.
//!
//! `omega` records how far the principal logarithm of `j(M, z)` fails to
//! be additive under composition. Signs of scaled matrices are read off the
//! integer entries; the positive scale never changes them.

use crate::exact_core::{sgn, ScaledMat};

/// 1 if `c = 0` and `d < 0`, else 0.
pub fn rho(m: &ScaledMat) -> i32 {
    (sgn(m.c()) == 0 && sgn(m.d()) < 0) as i32
}

/// Five-case closed form, each case divided by 4.
pub fn omega_petersson(m: &ScaledMat, n: &ScaledMat) -> i32 {
    let mn = m.mul(n);
    let (cm, cn, cmn) = (sgn(m.c()), sgn(n.c()), sgn(mn.c()));
    let (dm, dn) = (sgn(m.d()), sgn(n.d()));
    let four = if cm != 0 && cn != 0 && cmn != 0 {
        cm + cn - cmn - cm * cn * cmn
    } else if cm != 0 && cn != 0 {
        (cm - 1) * (1 - cn)
    } else if cn != 0 && cmn != 0 {
        (1 - dm) * (1 + cn)
    } else if cm != 0 && cmn != 0 {
        (1 + cm) * (1 - dn)
    } else {
        (1 - dm) * (1 - dn)
    };
    debug_assert_eq!(four % 4, 0);
    four / 4
}

/// Lookup on the sign triple `(sgn c_M, sgn c_N, sgn c_MN)`.
pub fn omega_cases(m: &ScaledMat, n: &ScaledMat) -> i32 {
    let mn = m.mul(n);
    match (sgn(m.c()), sgn(n.c()), sgn(mn.c())) {
        (1, 1, -1) | (0, 1, -1) | (1, 0, -1) => 1,
        (0, 0, 0) if sgn(m.d()) < 0 && sgn(n.d()) < 0 => 1,
        (-1, -1, 1) | (-1, -1, 0) => -1,
        _ => 0,
    }
}

/// The phase factor used throughout the library.
pub fn omega(m: &ScaledMat, n: &ScaledMat) -> i32 {
    omega_petersson(m, n)
}

/// `omega(M, M)` from the sign of `c` and the trace.
///
/// For `c < 0` the value is -1 exactly when the trace is `<= 0`; this is what
/// the sign table gives, since `c_{M^2} = c * tr(M)`.
pub fn omega_self(m: &ScaledMat) -> i32 {
    let c = sgn(m.c());
    let t = sgn(&m.trace());
    match c {
        1 if t < 0 => 1,
        0 if sgn(m.d()) < 0 => 1,
        -1 if t <= 0 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ScaledMat {
        ScaledMat::int(a, b, c, d).unwrap()
    }

    #[test]
    fn small_values() {
        let mi = ScaledMat::minus_identity();
        assert_eq!(rho(&mi), 1);
        assert_eq!(rho(&ScaledMat::t()), 0);
        assert_eq!(rho(&ScaledMat::s()), 0);
        for f in [omega_petersson, omega_cases] {
            assert_eq!(f(&mi, &mi), 1);
            assert_eq!(f(&ScaledMat::s(), &ScaledMat::s()), 0);
            assert_eq!(f(&ScaledMat::t().pow(5), &m(2, 1, -7, -3)), 0);
            assert_eq!(f(&m(2, 1, -7, -3), &ScaledMat::t().pow(-3)), 0);
        }
    }

    #[test]
    fn self_phase() {
        let a = m(-7, -1, 22, 3);
        assert_eq!(omega_self(&a), 1);
        assert_eq!(omega_cases(&a, &a), 1);
        assert_eq!(omega_self(&ScaledMat::minus_identity()), 1);
        assert_eq!(omega_self(&ScaledMat::t()), 0);
        // c < 0 with positive trace: the square has c < 0 too, so omega = 0.
        let p0 = m(1, 0, -11, 1);
        assert_eq!(omega_petersson(&p0, &p0), 0);
        assert_eq!(omega_self(&p0), 0);
        let e1 = ScaledMat::scaled(0, 1, -37, 0, 37).unwrap();
        assert_eq!(omega_self(&e1), -1);
        assert_eq!(omega_petersson(&e1, &e1), -1);
    }
}
