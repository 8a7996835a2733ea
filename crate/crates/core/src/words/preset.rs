use std::sync::OnceLock;

use crate::exact_core::{int, rat, GroupData, GroupKind, ModZ, Rat, ScaledMat};
use crate::higher_order::AffineModZ;
use crate::words::word::{Letter, Word};

/// One generator of a preset together with its tabulated data.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub matrix: ScaledMat,
    /// Coordinates of the modular symbol in the basis `<A,f>, <B,f>`.
    pub homology: (i64, i64),
    /// First-order symbol at infinity.
    pub s_value: Rat,
    /// Higher-order symbol at infinity, mod 1.
    pub star_inf: Option<AffineModZ>,
    /// Higher-order symbol at the cusp 0, mod 1.
    pub star_zero: Option<AffineModZ>,
}

/// A group with a presentation and symbol tables.
#[derive(Clone, Debug)]
pub struct GroupPreset {
    /// CLI key, e.g. `gamma0-11`.
    pub key: &'static str,
    pub kind: GroupKind,
    pub generators: Vec<Generator>,
    /// `(V_f / 2 pi) Im(<A,f> conj <B,f>)`.
    pub kappa: Option<Rat>,
    pub data: GroupData,
    /// Words with the matrix each must evaluate to.
    pub relators: Vec<(Word, ScaledMat)>,
    /// A word for `-I`.
    pub minus_identity: Word,
    /// Base point `x + iy` for the word search.
    pub base_point: (f64, f64),
}

impl GroupPreset {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    pub fn contains(&self, m: &ScaledMat) -> bool {
        self.kind.contains(m)
    }

    /// Left-to-right product.
    pub fn eval(&self, w: &Word) -> ScaledMat {
        w.letters.iter().fold(ScaledMat::identity(), |acc, l| acc.mul(&self.generators[l.gen].matrix.pow(l.exp)))
    }

    /// Word made from names, all with exponent given.
    pub fn word(&self, spec: &[(&str, i64)]) -> Word {
        Word::from_letters(
            spec.iter()
                .map(|&(n, exp)| Letter { gen: self.index_of(n).unwrap_or_else(|| panic!("no generator {n}")), exp })
                .collect(),
        )
    }

    /// Checks every relator and generator membership.
    pub fn validate(&self) -> Result<(), String> {
        for g in &self.generators {
            if !self.contains(&g.matrix) {
                return Err(format!("{} = {} is not in {}", g.name, g.matrix, self.kind.label()));
            }
        }
        for (w, want) in &self.relators {
            let got = self.eval(w);
            if &got != want {
                return Err(format!("{} evaluates to {got}, expected {want}", w.render(self)));
            }
        }
        if !self.eval(&self.minus_identity).is_minus_identity() {
            return Err("minus identity word is wrong".into());
        }
        if !self.data.gauss_bonnet_holds() {
            return Err("Gauss-Bonnet fails".into());
        }
        Ok(())
    }
}

fn m(a: i64, b: i64, c: i64, d: i64) -> ScaledMat {
    ScaledMat::int(a, b, c, d).unwrap()
}

fn sm(a: i64, b: i64, c: i64, d: i64, e: i64) -> ScaledMat {
    ScaledMat::scaled(a, b, c, d, e).unwrap()
}

fn star(n: i64, d: i64) -> Option<AffineModZ> {
    Some(AffineModZ::constant(ModZ::from_i64(n, d)))
}

fn gen(name: &str, matrix: ScaledMat, homology: (i64, i64), s_value: Rat) -> Generator {
    Generator { name: name.into(), matrix, homology, s_value, star_inf: None, star_zero: None }
}

const BASE_POINT: (f64, f64) = (0.5, 1.2);

fn build_sl2z() -> GroupPreset {
    let gens = vec![
        gen("S", ScaledMat::s(), (0, 0), rat(-1, 4)),
        gen("T", ScaledMat::t(), (0, 0), rat(1, 12)),
        gen("-I", ScaledMat::minus_identity(), (0, 0), rat(-1, 2)),
    ];
    let mut p = GroupPreset {
        key: "sl2z",
        kind: GroupKind::Sl2z,
        generators: gens,
        kappa: None,
        data: GroupData { genus: 0, cusps: 1, elliptic_orders: vec![2, 3], volume: rat(1, 3) },
        relators: vec![],
        minus_identity: Word::new(),
        base_point: BASE_POINT,
    };
    p.minus_identity = p.word(&[("-I", 1)]);
    p.relators = vec![
        (p.word(&[("S", 2)]), ScaledMat::minus_identity()),
        (p.word(&[("S", 1), ("T", 1), ("S", 1), ("T", 1), ("S", 1), ("T", 1)]), ScaledMat::minus_identity()),
    ];
    p
}

fn build_gamma0_11() -> GroupPreset {
    let mut a = gen("A", m(-7, -1, 22, 3), (1, 0), rat(-2, 5));
    a.star_inf = star(9, 10);
    a.star_zero = star(1, 10);
    let mut b = gen("B", m(4, 1, -33, -8), (0, 1), rat(2, 5));
    b.star_inf = star(1, 10);
    b.star_zero = star(9, 10);
    let mut p0 = gen("P0", m(1, 0, -11, 1), (0, 0), int(0));
    let mut pinf = gen("Pinf", ScaledMat::t(), (0, 0), int(1));
    let mut mi = gen("-I", ScaledMat::minus_identity(), (0, 0), rat(-1, 2));
    for g in [&mut p0, &mut pinf] {
        g.star_inf = star(0, 1);
        g.star_zero = star(0, 1);
    }
    mi.star_inf = star(-1, 2);
    mi.star_zero = star(-1, 2);
    let mut p = GroupPreset {
        key: "gamma0-11",
        kind: GroupKind::Gamma0(11),
        generators: vec![a, b, p0, pinf, mi],
        kappa: Some(rat(1, 2)),
        data: GroupData { genus: 1, cusps: 2, elliptic_orders: vec![], volume: int(4) },
        relators: vec![],
        minus_identity: Word::new(),
        base_point: BASE_POINT,
    };
    p.minus_identity = p.word(&[("-I", 1)]);
    p.relators = vec![(
        p.word(&[("A", 1), ("B", 1), ("A", -1), ("B", -1), ("P0", 1), ("Pinf", 1)]),
        ScaledMat::identity(),
    )];
    p
}

fn build_gamma0_37_plus() -> GroupPreset {
    let mut a = gen("A", sm(148, -89, 185, -111, 37), (1, 0), rat(1, 6));
    a.star_inf = star(-5, 8);
    let mut b = gen("B", m(20, -13, 37, -24), (0, 1), rat(-7, 12));
    b.star_inf = Some(AffineModZ::unknown(1));
    let mut e1 = gen("E1", sm(0, 1, -37, 0, 37), (0, 0), rat(1, 4));
    e1.star_inf = star(1, 4);
    let mut e2 = gen("E2", m(-6, 1, -37, 6), (0, 0), rat(1, 4));
    e2.star_inf = star(1, 4);
    let mut e3 = gen("E3", m(-11, 3, -37, 10), (0, 0), rat(1, 3));
    e3.star_inf = star(1, 3);
    let mut e4 = gen("E4", sm(37, -19, 74, -37, 37), (0, 0), rat(-1, 4));
    e4.star_inf = star(-1, 4);
    let mut pinf = gen("Pinf", m(1, -1, 0, 1), (0, 0), rat(-19, 12));
    pinf.star_inf = star(0, 1);
    let mut p = GroupPreset {
        key: "gamma0-37plus",
        kind: GroupKind::Gamma0Plus(37),
        generators: vec![a, b, e1, e2, e3, e4, pinf],
        kappa: Some(rat(-19, 24)),
        data: GroupData { genus: 1, cusps: 1, elliptic_orders: vec![2, 2, 2, 3], volume: rat(19, 3) },
        relators: vec![],
        minus_identity: Word::new(),
        base_point: BASE_POINT,
    };
    p.minus_identity = p.word(&[("E1", 1), ("E1", 1)]);
    let mi = ScaledMat::minus_identity();
    p.relators = vec![
        (
            p.word(&[("A", 1), ("B", 1), ("A", -1), ("B", -1), ("E4", 1), ("E3", 1), ("E2", 1), ("E1", 1), ("Pinf", 1)]),
            ScaledMat::identity(),
        ),
        (p.word(&[("E4", 2)]), mi.clone()),
        (p.word(&[("E2", 2)]), mi.clone()),
        (p.word(&[("E1", 2)]), mi),
        (p.word(&[("E3", 3)]), ScaledMat::identity()),
    ];
    p
}

fn checked(p: GroupPreset) -> GroupPreset {
    if let Err(e) = p.validate() {
        panic!("preset {} is inconsistent: {e}", p.key);
    }
    p
}

/// SL(2,Z) with generators `S`, `T`, `-I`.
pub fn sl2z() -> &'static GroupPreset {
    static P: OnceLock<GroupPreset> = OnceLock::new();
    P.get_or_init(|| checked(build_sl2z()))
}

/// Gamma_0(11) with generators `A`, `B`, `P0`, `Pinf`, `-I`.
pub fn gamma0_11() -> &'static GroupPreset {
    static P: OnceLock<GroupPreset> = OnceLock::new();
    P.get_or_init(|| checked(build_gamma0_11()))
}

/// Gamma_0(37)+ with generators `A`, `B`, `E1`..`E4`, `Pinf`.
pub fn gamma0_37_plus() -> &'static GroupPreset {
    static P: OnceLock<GroupPreset> = OnceLock::new();
    P.get_or_init(|| checked(build_gamma0_37_plus()))
}

pub fn all_presets() -> [&'static GroupPreset; 3] {
    [sl2z(), gamma0_11(), gamma0_37_plus()]
}

pub fn preset_by_key(key: &str) -> Option<&'static GroupPreset> {
    all_presets().into_iter().find(|p| p.key == key)
}
