use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind_core::dedekind_sum::s_fast;
use dedekind_core::sample::{random_gamma0, random_sl2z_large};
use dedekind_core::symbols_congruence::s_gamma0;
use dedekind_core::words::{gamma0_11, gamma0_37_plus, random_word, sl2z_word, solve_word, DEFAULT_BUDGET};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("s_fast");
    for (h, k) in [(5i64, 17i64), (832_040, 1_346_269), (123_456_789_012, 987_654_321_097)] {
        let (h, k) = (BigInt::from(h), BigInt::from(k));
        g.bench_with_input(BenchmarkId::from_parameter(&k), &(h, k), |b, (h, k)| b.iter(|| s_fast(black_box(h), black_box(k))));
    }
    g.finish();
}

fn congruence(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mats: Vec<_> = (0..64).map(|_| random_gamma0(&mut rng, 30, 10_000)).collect();
    c.bench_function("s_gamma0 level 30", |b| {
        b.iter(|| {
            for m in &mats {
                black_box(s_gamma0(30, black_box(m)).unwrap());
            }
        })
    });
}

fn words(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let big: Vec<_> = (0..64).map(|_| random_sl2z_large(&mut rng, 1_000_000_000_000_000_000)).collect();
    c.bench_function("sl2z_word 1e18", |b| {
        b.iter(|| {
            for m in &big {
                black_box(sl2z_word(black_box(m)).unwrap());
            }
        })
    });

    let mut g = c.benchmark_group("solve_word");
    g.sample_size(20);
    for p in [gamma0_11(), gamma0_37_plus()] {
        let targets: Vec<_> = (0..16).map(|s| p.eval(&random_word(p, 20, s))).collect();
        g.bench_function(p.key, |b| {
            b.iter(|| {
                for m in &targets {
                    black_box(solve_word(p, black_box(m), DEFAULT_BUDGET).unwrap());
                }
            })
        });
    }
    g.finish();
}

criterion_group!(benches, sums, congruence, words);
criterion_main!(benches);
