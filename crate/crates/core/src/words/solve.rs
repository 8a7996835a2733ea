use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact_core::{GroupKind, ScaledMat};
use crate::words::preset::GroupPreset;
use crate::words::sl2z::sl2z_word;
use crate::words::word::Word;

/// Node budget used when callers have no preference.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Outcome of a successful search.
#[derive(Clone, Debug)]
pub struct Solution {
    pub word: Word,
    /// Nodes taken off the queue.
    pub nodes: usize,
}

/// Monotone proxy for the displacement `d(g z0, z0)`: the log of the squared
/// Frobenius norm of `sigma^{-1} g sigma`, where `sigma i = z0`. That norm
/// equals `2 cosh d`.
pub fn displacement_score(g: &ScaledMat, z0: (f64, f64)) -> f64 {
    let bits = [g.a(), g.b(), g.c(), g.d()].iter().map(|x| x.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(900 / 2) as usize;
    let f = |x: &BigInt| -> f64 { (x.abs() >> shift).to_f64().unwrap_or(f64::MAX) * x.signum().to_f64().unwrap_or(1.0) };
    let (a, b, c, d) = (f(g.a()), f(g.b()), f(g.c()), f(g.d()));
    let e = g.e().to_f64().unwrap_or(f64::MAX);
    let (x, y) = z0;
    let u = a - x * c;
    let v = u * x + b - x * d;
    let w = c * x + d;
    let norm = (u * u * y * y + v * v + c * c * y.powi(4) + w * w * y * y) / (e * y * y);
    norm.ln() + 2.0 * shift as f64 * std::f64::consts::LN_2
}

struct Key(f64);
impl PartialEq for Key {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o).is_eq()
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Key {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&o.0)
    }
}

/// Finds a word evaluating to `m`, with statistics.
///
/// Best-first search: repeatedly multiply on the left by a generator or its
/// inverse, always expanding the matrix that moves the base point least,
/// until `+-I` is reached. SL(2,Z) uses continued fractions instead.
pub fn solve_word_stats(preset: &GroupPreset, m: &ScaledMat, budget: usize) -> Result<Solution> {
    if !preset.contains(m) {
        return Err(Error::NotInGroup { matrix: m.to_string(), group: preset.kind.label() });
    }
    if preset.kind == GroupKind::Sl2z {
        return Ok(Solution { word: sl2z_word(m)?, nodes: 0 });
    }
    let moves: Vec<(usize, i64, ScaledMat)> = preset
        .generators
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.matrix.is_minus_identity())
        .flat_map(|(i, g)| [(i, 1, g.matrix.clone()), (i, -1, g.matrix.inv())])
        .collect();

    // node: matrix, parent, move index
    let mut nodes: Vec<(ScaledMat, usize, usize)> = vec![(m.clone(), usize::MAX, usize::MAX)];
    let mut seen: HashSet<ScaledMat> = HashSet::from([m.clone()]);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Key(displacement_score(m, preset.base_point)), false, 0usize)));
    let mut popped = 0;
    while let Some(Reverse((_, _, id))) = heap.pop() {
        popped += 1;
        let x = nodes[id].0.clone();
        if x.is_identity() || x.is_minus_identity() {
            let word = reconstruct(preset, &nodes, &moves, id, x.is_minus_identity());
            if &preset.eval(&word) != m {
                return Err(Error::Shape("search produced an inconsistent word".into()));
            }
            return Ok(Solution { word, nodes: popped });
        }
        if popped >= budget {
            return Err(Error::BudgetExhausted(budget));
        }
        for (k, (_, _, g)) in moves.iter().enumerate() {
            let y = g.mul(&x);
            if seen.insert(y.clone()) {
                let key = Key(displacement_score(&y, preset.base_point));
                // on ties +I wins over -I, so no -I word is spliced in needlessly
                let minus = y.is_minus_identity();
                nodes.push((y, id, k));
                heap.push(Reverse((key, minus, nodes.len() - 1)));
            }
        }
    }
    Err(Error::BudgetExhausted(popped))
}

/// If `g_k ... g_1 M = +-I` then `M = +-g_1^{-1} ... g_k^{-1}`.
fn reconstruct(
    preset: &GroupPreset,
    nodes: &[(ScaledMat, usize, usize)],
    moves: &[(usize, i64, ScaledMat)],
    mut id: usize,
    negative: bool,
) -> Word {
    let mut applied = Vec::new();
    while nodes[id].1 != usize::MAX {
        applied.push(nodes[id].2);
        id = nodes[id].1;
    }
    applied.reverse();
    let mut w = if negative { preset.minus_identity.clone() } else { Word::new() };
    for k in applied {
        let (gen, exp, _) = moves[k];
        w.push(gen, -exp);
    }
    w
}

/// Finds a word evaluating exactly to `m`.
pub fn solve_word(preset: &GroupPreset, m: &ScaledMat, budget: usize) -> Result<Word> {
    solve_word_stats(preset, m, budget).map(|s| s.word)
}
