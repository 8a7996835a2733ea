use crate::error::{Error, Result};
use crate::words::preset::GroupPreset;

/// A generator raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Index into the preset's generator list.
    pub gen: usize,
    pub exp: i64,
}

/// A word in the generators of a preset, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Appends `g^exp`, merging with a trailing power of the same generator.
    pub fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.gen == gen {
                last.exp += exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(Letter { gen, exp });
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters, counting `g^k` once.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Number of unit letters, counting `g^k` as `|k|`.
    pub fn unit_len(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.letters.extend_from_slice(&other.letters);
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| Letter { gen: l.gen, exp: -l.exp }).collect(),
        }
    }

    /// Parses whitespace-separated tokens `NAME` or `NAME^k`.
    pub fn parse(preset: &GroupPreset, s: &str) -> Result<Word> {
        let mut w = Word::new();
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.rsplit_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Parse { what: "word", input: s.into() })?),
                None => (tok, 1),
            };
            let gen = preset.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
            w.letters.push(Letter { gen, exp });
        }
        Ok(w)
    }

    /// Renders as `"-I S T^3 S T^-7 S"`.
    pub fn render(&self, preset: &GroupPreset) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let name = &preset.generators[l.gen].name;
                if l.exp == 1 {
                    name.clone()
                } else {
                    format!("{name}^{}", l.exp)
                }
            })
            .collect();
        parts.join(" ")
    }
}
