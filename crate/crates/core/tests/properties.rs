use dedekind_core::dedekind_sum::{reciprocity_rhs, s_fast, s_naive, sawtooth};
use dedekind_core::exact_core::{int, rat};
use dedekind_core::higher_order::{pairing, s_star, StarCusp};
use dedekind_core::phase::{omega, omega_cases, omega_petersson, rho};
use dedekind_core::sample::{random_gamma0, random_gamma0_plus, random_sl2z};
use dedekind_core::symbols_classical::s_sl2z;
use dedekind_core::symbols_congruence::{iota, s_cusp0, s_gamma0};
use dedekind_core::symbols_moonshine::{s_plus, s_plus_prime};
use dedekind_core::words::{gamma0_11, gamma0_37_plus, random_word, sl2z, sl2z_word};
use dedekind_core::ScaledMat;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coprime() -> impl Strategy<Value = (i64, i64)> {
    (-400i64..400, 1i64..400).prop_filter("coprime", |(h, k)| h.gcd(k) == 1)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Random matrices of every sign pattern, with a few scaled ones mixed in.
fn scaled() -> impl Strategy<Value = ScaledMat> {
    (any::<u64>(), prop::sample::select(vec![1u64, 2, 3, 5, 6, 37])).prop_map(|(seed, n)| {
        let mut r = rng(seed);
        if n == 1 {
            random_sl2z(&mut r, 60)
        } else {
            random_gamma0_plus(&mut r, n, 30)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reciprocity((h, k) in coprime()) {
        prop_assume!(h > 0);
        let lhs = s_fast(&big(h), &big(k)).unwrap() + s_fast(&big(k), &big(h)).unwrap();
        prop_assert_eq!(lhs, reciprocity_rhs(&big(h), &big(k)));
    }

    #[test]
    fn periodic_and_odd((h, k) in coprime(), t in -50i64..50) {
        let s = s_fast(&big(h), &big(k)).unwrap();
        prop_assert_eq!(s_fast(&big(h + t * k), &big(k)).unwrap(), s.clone());
        prop_assert_eq!(s_fast(&big(-h), &big(k)).unwrap(), -s);
    }

    #[test]
    fn fast_matches_naive((h, k) in coprime()) {
        prop_assert_eq!(s_fast(&big(h), &big(k)).unwrap(), s_naive(h, k).unwrap());
    }

    #[test]
    fn sawtooth_is_odd_and_periodic(n in -1000i64..1000, d in 1i64..200) {
        let x = rat(n, d);
        prop_assert_eq!(sawtooth(&-x.clone()), -sawtooth(&x));
        prop_assert_eq!(sawtooth(&(x.clone() + int(3))), sawtooth(&x));
    }

    #[test]
    fn normalization_is_idempotent(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, g in 1i64..6) {
        prop_assume!(a * d - b * c > 0);
        let e = a * d - b * c;
        let m = ScaledMat::scaled(g * a, g * b, g * c, g * d, g * g * e).unwrap();
        let again = ScaledMat::new(m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone(), m.e().clone()).unwrap();
        prop_assert_eq!(&again, &m);
        prop_assert_eq!(m, ScaledMat::scaled(a, b, c, d, e).unwrap());
    }

    #[test]
    fn group_laws(x in scaled(), y in scaled(), z in scaled()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inv()).is_identity());
        prop_assert_eq!(x.mul(&y).inv(), y.inv().mul(&x.inv()));
        let text = x.to_string();
        prop_assert_eq!(text.parse::<ScaledMat>().unwrap(), x);
    }

    #[test]
    fn phase_routes_agree(x in scaled(), y in scaled()) {
        prop_assert_eq!(omega_petersson(&x, &y), omega_cases(&x, &y));
        prop_assert_eq!(omega(&x, &x.inv()), rho(&x));
    }

    #[test]
    fn phase_cocycle(x in scaled(), y in scaled(), z in scaled()) {
        let lhs = omega(&x, &y) + omega(&x.mul(&y), &z);
        let rhs = omega(&x, &y.mul(&z)) + omega(&y, &z);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classical_symbol(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, t) = (random_sl2z(&mut r, 500), random_sl2z(&mut r, 500));
        let (sg, st) = (s_sl2z(&g).unwrap(), s_sl2z(&t).unwrap());
        prop_assert!((&sg * int(12)).is_integer());
        prop_assert_eq!(s_sl2z(&g.mul(&t)).unwrap(), sg + st + int(omega(&g, &t)));
    }

    #[test]
    fn congruence_cocycle(seed in any::<u64>(), n in prop::sample::select(vec![11u64, 14, 15, 17, 19, 21, 37])) {
        let mut r = rng(seed);
        let (g, t) = (random_gamma0(&mut r, n, 40), random_gamma0(&mut r, n, 40));
        let w = int(omega(&g, &t));
        let gt = g.mul(&t);
        prop_assert_eq!(s_gamma0(n, &gt).unwrap(), s_gamma0(n, &g).unwrap() + s_gamma0(n, &t).unwrap() + w.clone());
        prop_assert_eq!(s_cusp0(n, &gt).unwrap(), s_cusp0(n, &g).unwrap() + s_cusp0(n, &t).unwrap() + w);
    }

    #[test]
    fn level_11_denominators(seed in any::<u64>()) {
        let g = random_gamma0(&mut rng(seed), 11, 200);
        prop_assert!((s_gamma0(11, &g).unwrap() * int(60)).is_integer());
    }

    #[test]
    fn plus_routes_agree(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 37])) {
        let g = random_gamma0_plus(&mut rng(seed), p, 40);
        prop_assert_eq!(s_plus_prime(p, &g).unwrap(), s_plus(p, &g).unwrap());
    }

    #[test]
    fn plus_denominators(seed in any::<u64>(), n in prop::sample::select(vec![2u64, 3, 5, 6, 37])) {
        let g = random_gamma0_plus(&mut rng(seed), n, 40);
        prop_assert!((s_plus(n, &g).unwrap() * int(48)).is_integer(), "{}", g);
    }

    #[test]
    fn star_quasimorphism(s1 in any::<u64>(), s2 in any::<u64>(), l1 in 0usize..25, l2 in 0usize..25) {
        for p in [gamma0_11(), gamma0_37_plus()] {
            let (u, v) = (random_word(p, l1, s1), random_word(p, l2, s2));
            let cusps: &[StarCusp] = if p.key == "gamma0-11" { &[StarCusp::Infinity, StarCusp::Zero] } else { &[StarCusp::Infinity] };
            for &cusp in cusps {
                let whole = s_star(p, cusp, &u.concat(&v)).unwrap();
                let parts = s_star(p, cusp, &u).unwrap() + s_star(p, cusp, &v).unwrap();
                let pair = pairing(p, &u, &v).unwrap();
                prop_assert_eq!(whole, parts.add_rat(&pair));
            }
        }
    }

    #[test]
    fn iota_is_an_automorphism(x in scaled(), y in scaled()) {
        prop_assert_eq!(iota(&x.mul(&y)), iota(&x).mul(&iota(&y)));
        prop_assert_eq!(iota(&iota(&x)), x);
    }

    #[test]
    fn sl2z_word_round_trip(seed in any::<u64>(), bound in 1i64..1_000_000_000) {
        let g = random_sl2z(&mut rng(seed), bound);
        let w = sl2z_word(&g).unwrap();
        prop_assert_eq!(sl2z().eval(&w), g);
    }
}
