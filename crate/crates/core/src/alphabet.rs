//! Symbol alphabets and word helpers.
//!
//! Symbols are always the integers `0..sigma`; an [`Alphabet`] only decides
//! how they are printed and parsed, and which of them are "weighted".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Symbol = u16;

const DIGITS: &str = "0123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    tokens: Vec<String>,
    weighted: Option<Vec<bool>>,
}

impl Alphabet {
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.len() < 2 {
            return Err(Error::AlphabetTooSmall {
                required: 2,
                actual: tokens.len(),
            });
        }
        if tokens.len() > Symbol::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() {
                return Err(Error::InvalidAlphabet("empty token".into()));
            }
            if tokens[..i].contains(t) {
                return Err(Error::InvalidAlphabet(format!("duplicate token {t:?}")));
            }
        }
        Ok(Self { tokens, weighted: None })
    }

    /// `0..9` then `a..z`; numbered tokens beyond 36 symbols.
    pub fn numeric(sigma: usize) -> Result<Self> {
        if sigma <= DIGITS.len() {
            Self::from_tokens(DIGITS.chars().take(sigma).map(String::from))
        } else {
            Self::from_tokens((0..sigma).map(|i| i.to_string()))
        }
    }

    /// `A, T, C, G` in that order, with `{C, G}` weighted.
    pub fn dna() -> Self {
        Self::from_tokens(["A", "T", "C", "G"])
            .and_then(|a| a.with_weighted(["C", "G"]))
            .expect("static alphabet")
    }

    /// A single-character alphabet parsed from a string such as `"ATCG"`.
    pub fn from_chars(spec: &str) -> Result<Self> {
        Self::from_tokens(spec.chars().map(String::from))
    }

    /// Alphabet with `w` weighted symbols followed by `x` unweighted ones.
    pub fn split_numeric(w: usize, x: usize) -> Result<Self> {
        let base = Self::numeric(w + x)?;
        let weighted: Vec<String> = base.tokens[..w].to_vec();
        base.with_weighted(weighted)
    }

    pub fn with_weighted<I, S>(mut self, weighted: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = vec![false; self.tokens.len()];
        for t in weighted {
            let s = self.symbol_of(t.as_ref())?;
            mask[s as usize] = true;
        }
        let count = mask.iter().filter(|&&b| b).count();
        if count == 0 || count == mask.len() {
            return Err(Error::InvalidAlphabet(
                "weighted and unweighted subsets must both be nonempty".into(),
            ));
        }
        self.weighted = Some(mask);
        Ok(self)
    }

    pub fn sigma(&self) -> usize {
        self.tokens.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn has_weighted_subset(&self) -> bool {
        self.weighted.is_some()
    }

    pub fn is_weighted(&self, s: Symbol) -> Result<bool> {
        let mask = self.weighted.as_ref().ok_or(Error::MissingWeightedSubset)?;
        mask.get(s as usize).copied().ok_or(Error::SymbolOutOfRange {
            symbol: s as usize,
            sigma: self.sigma(),
        })
    }

    /// Weighted symbols in increasing order.
    pub fn weighted_symbols(&self) -> Result<Vec<Symbol>> {
        let mask = self.weighted.as_ref().ok_or(Error::MissingWeightedSubset)?;
        Ok((0..mask.len()).filter(|&i| mask[i]).map(|i| i as Symbol).collect())
    }

    pub fn unweighted_symbols(&self) -> Result<Vec<Symbol>> {
        let mask = self.weighted.as_ref().ok_or(Error::MissingWeightedSubset)?;
        Ok((0..mask.len()).filter(|&i| !mask[i]).map(|i| i as Symbol).collect())
    }

    pub fn weight(&self, word: &[Symbol]) -> Result<usize> {
        let mut w = 0;
        for &s in word {
            if self.is_weighted(s)? {
                w += 1;
            }
        }
        Ok(w)
    }

    pub fn symbol_of(&self, token: &str) -> Result<Symbol> {
        self.tokens
            .iter()
            .position(|t| t == token)
            .map(|i| i as Symbol)
            .ok_or_else(|| Error::UnknownToken(token.to_string()))
    }

    fn single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    pub fn render(&self, word: &[Symbol]) -> String {
        let parts = word
            .iter()
            .map(|&s| self.tokens.get(s as usize).map(String::as_str).unwrap_or("?"));
        if self.single_char() {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(",")
        }
    }

    /// Inverse of [`Alphabet::render`]. Multi-character alphabets use commas.
    pub fn parse(&self, text: &str) -> Result<Vec<Symbol>> {
        let text = text.trim();
        if self.single_char() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| self.symbol_of(c.encode_utf8(&mut [0; 4])))
                .collect()
        } else {
            text.split(',').map(|t| self.symbol_of(t.trim())).collect()
        }
    }
}

/// Weight representation: bit `i` is 1 iff entry `i` is a weighted symbol.
pub fn weight_representation(word: &[Symbol], alphabet: &Alphabet) -> Result<Vec<Symbol>> {
    word.iter()
        .map(|&s| alphabet.is_weighted(s).map(Symbol::from))
        .collect()
}

/// Lexicographically smallest rotation of a circular word.
pub fn canonical_rotation(word: &[Symbol]) -> Vec<Symbol> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let best = (0..n)
        .min_by(|&a, &b| (0..n).map(|i| word[(a + i) % n]).cmp((0..n).map(|i| word[(b + i) % n])))
        .unwrap_or(0);
    (0..n).map(|i| word[(best + i) % n]).collect()
}

/// Base-`sigma` value of a word, most significant symbol first.
pub fn word_index(word: &[Symbol], sigma: usize) -> usize {
    word.iter().fold(0, |acc, &s| acc * sigma + s as usize)
}

pub fn word_from_index(mut index: usize, sigma: usize, len: usize) -> Vec<Symbol> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % sigma) as Symbol;
        index /= sigma;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_representation_matches_gc_example() {
        let dna = Alphabet::dna();
        let caa = dna.parse("CAA").unwrap();
        let gtc = dna.parse("GTC").unwrap();
        assert_eq!(weight_representation(&caa, &dna).unwrap(), vec![1, 0, 0]);
        assert_eq!(weight_representation(&gtc, &dna).unwrap(), vec![1, 0, 1]);
        let at = dna.parse("ATTA").unwrap();
        assert_eq!(weight_representation(&at, &dna).unwrap(), vec![0; 4]);
    }

    #[test]
    fn weight_representation_requires_subset() {
        let a = Alphabet::numeric(3).unwrap();
        assert_eq!(weight_representation(&[0, 1], &a), Err(Error::MissingWeightedSubset));
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::from_tokens(["a"]).is_err());
        assert!(Alphabet::from_tokens(["a", "a"]).is_err());
        assert!(Alphabet::numeric(4)
            .unwrap()
            .with_weighted(["0", "1", "2", "3"])
            .is_err());
        assert!(Alphabet::numeric(4).unwrap().with_weighted(Vec::<&str>::new()).is_err());
    }

    #[test]
    fn render_parse_round_trip() {
        let a = Alphabet::numeric(12).unwrap();
        let w = vec![0, 11, 3, 10];
        assert_eq!(a.render(&w), "0b3a");
        assert_eq!(a.parse("0b3a").unwrap(), w);
        let big = Alphabet::numeric(40).unwrap();
        assert_eq!(big.render(&[39, 2]), "39,2");
        assert_eq!(big.parse("39,2").unwrap(), vec![39, 2]);
    }

    #[test]
    fn canonical_rotation_is_min() {
        assert_eq!(canonical_rotation(&[2, 1, 0, 1]), vec![0, 1, 2, 1]);
        assert_eq!(canonical_rotation(&[1, 1]), vec![1, 1]);
    }

    #[test]
    fn index_round_trip() {
        for i in 0..27 {
            assert_eq!(word_index(&word_from_index(i, 3, 3), 3), i);
        }
    }
}
