//! Words over preset generator alphabets and solvers for the word problem.

pub mod preset;
pub mod sl2z;
pub mod solve;
pub mod word;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_core::ScaledMat;

pub use preset::{all_presets, gamma0_11, gamma0_37_plus, preset_by_key, sl2z, Generator, GroupPreset};
pub use sl2z::sl2z_word;
pub use solve::{displacement_score, solve_word, solve_word_stats, Solution, DEFAULT_BUDGET};
pub use word::{Letter, Word};

/// Left-to-right normalized product of the letters.
pub fn eval_word(preset: &GroupPreset, w: &Word) -> ScaledMat {
    preset.eval(w)
}

/// Signed exponent sums of the two named generators.
pub fn exponent_sums(preset: &GroupPreset, w: &Word, pair: (&str, &str)) -> Result<(i64, i64)> {
    let i = preset.index_of(pair.0).ok_or_else(|| Error::UnknownGenerator(pair.0.into()))?;
    let j = preset.index_of(pair.1).ok_or_else(|| Error::UnknownGenerator(pair.1.into()))?;
    let mut out = (0, 0);
    for l in &w.letters {
        if l.gen == i {
            out.0 += l.exp;
        }
        if l.gen == j {
            out.1 += l.exp;
        }
    }
    Ok(out)
}

/// A reproducible random word of `length` unit letters with no letter
/// followed by its inverse.
pub fn random_word(preset: &GroupPreset, length: usize, seed: u64) -> Word {
    random_word_with(preset, length, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_word_with<R: Rng>(preset: &GroupPreset, length: usize, rng: &mut R) -> Word {
    let choices: Vec<(usize, i64, ScaledMat)> = (0..preset.generators.len())
        .flat_map(|i| [1, -1].map(|e| (i, e, preset.generators[i].matrix.pow(e))))
        .collect();
    let mut letters: Vec<Letter> = Vec::with_capacity(length);
    let mut prev: Option<usize> = None;
    while letters.len() < length {
        let k = rng.gen_range(0..choices.len());
        if let Some(p) = prev {
            if choices[k].2.mul(&choices[p].2).is_identity() {
                continue;
            }
        }
        letters.push(Letter { gen: choices[k].0, exp: choices[k].1 });
        prev = Some(k);
    }
    Word::from_letters(letters)
}
