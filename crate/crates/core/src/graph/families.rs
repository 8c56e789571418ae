use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Arc, ArcLabel, DirectedMultigraph, VertexLabel};
use crate::alphabet::{word_from_index, Alphabet, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LanguageKind {
    Full,
    Kautz,
    WeightBand,
    KautzWeightBand,
}

/// A set of length-`k` words given by predicates rather than enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageSpec {
    pub kind: LanguageKind,
    pub k: usize,
    pub w_min: usize,
    pub w_max: usize,
}

impl LanguageSpec {
    pub fn full(k: usize) -> Self {
        Self {
            kind: LanguageKind::Full,
            k,
            w_min: 0,
            w_max: k,
        }
    }

    pub fn kautz(k: usize) -> Self {
        Self {
            kind: LanguageKind::Kautz,
            k,
            w_min: 0,
            w_max: k,
        }
    }

    pub fn weight_band(k: usize, w_min: usize, w_max: usize) -> Self {
        Self {
            kind: LanguageKind::WeightBand,
            k,
            w_min,
            w_max,
        }
    }

    pub fn kautz_weight_band(k: usize, w_min: usize, w_max: usize) -> Self {
        Self {
            kind: LanguageKind::KautzWeightBand,
            k,
            w_min,
            w_max,
        }
    }

    fn weighted(&self) -> bool {
        matches!(self.kind, LanguageKind::WeightBand | LanguageKind::KautzWeightBand)
    }

    fn kautz_rule(&self) -> bool {
        matches!(self.kind, LanguageKind::Kautz | LanguageKind::KautzWeightBand)
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if self.weighted() {
            if !alphabet.has_weighted_subset() {
                return Err(Error::MissingWeightedSubset);
            }
            if self.w_min > self.w_max || self.w_max > self.k {
                return Err(Error::InvalidLanguage(format!(
                    "weight bounds {}..={} invalid for k = {}",
                    self.w_min, self.w_max, self.k
                )));
            }
        }
        Ok(())
    }

    pub fn contains(&self, word: &[Symbol], alphabet: &Alphabet) -> Result<bool> {
        if word.len() != self.k || word.iter().any(|&s| s as usize >= alphabet.sigma()) {
            return Ok(false);
        }
        if self.kautz_rule() && word.windows(2).any(|p| p[0] == p[1]) {
            return Ok(false);
        }
        if self.weighted() {
            let w = alphabet.weight(word)?;
            return Ok(self.w_min <= w && w <= self.w_max);
        }
        Ok(true)
    }
}

/// All words of the language, in lexicographic order.
pub fn expand_language(spec: &LanguageSpec, alphabet: &Alphabet) -> Result<Vec<Vec<Symbol>>> {
    spec.validate(alphabet)?;
    let sigma = alphabet.sigma();
    let total = sigma
        .checked_pow(spec.k as u32)
        .filter(|&t| t <= 1 << 26)
        .ok_or_else(|| Error::ParameterOutOfRange(format!("sigma^k too large ({sigma}^{})", spec.k)))?;
    let mut out = Vec::new();
    for i in 0..total {
        let w = word_from_index(i, sigma, spec.k);
        if spec.contains(&w, alphabet)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// `D(L)`: vertices are the (k-1)-prefixes and suffixes of `L`, one arc per word.
pub fn build_restricted_graph(sigma: usize, words: &[Vec<Symbol>]) -> Result<DirectedMultigraph> {
    let k = words.first().ok_or(Error::EmptyLanguage)?.len();
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    graph_from_language(format!("D(L) k={k}"), sigma, words)
}

fn graph_from_language(name: String, sigma: usize, words: &[Vec<Symbol>]) -> Result<DirectedMultigraph> {
    let k = words.first().ok_or(Error::EmptyLanguage)?.len();
    let mut sorted: Vec<&Vec<Symbol>> = Vec::with_capacity(words.len());
    for w in words {
        if w.len() != k {
            return Err(Error::MixedWordLengths(k, w.len()));
        }
        if let Some(&s) = w.iter().find(|&&s| s as usize >= sigma) {
            return Err(Error::SymbolOutOfRange {
                symbol: s as usize,
                sigma,
            });
        }
        sorted.push(w);
    }
    sorted.sort();
    sorted.dedup();
    let mut vertex_words: BTreeSet<&[Symbol]> = BTreeSet::new();
    for w in &sorted {
        vertex_words.insert(&w[..k - 1]);
        vertex_words.insert(&w[1..]);
    }
    let vertex_words: Vec<Vec<Symbol>> = vertex_words.into_iter().map(<[Symbol]>::to_vec).collect();
    let id_of = |w: &[Symbol]| vertex_words.binary_search_by(|v| v.as_slice().cmp(w)).ok();
    let mut arcs = Vec::with_capacity(sorted.len());
    for w in &sorted {
        let tail = id_of(&w[..k - 1]).expect("prefix indexed");
        let head = id_of(&w[1..]).expect("suffix indexed");
        arcs.push(Arc {
            tail,
            head,
            label: ArcLabel::Symbol(w[k - 1]),
        });
    }
    let vertices = vertex_words.into_iter().map(VertexLabel::Word).collect();
    DirectedMultigraph::from_parts(name, sigma, vertices, arcs)
}

/// `G_{sigma,k}`: vertices are all (k-1)-words, arcs all k-words.
pub fn build_de_bruijn_graph(sigma: usize, k: usize) -> Result<DirectedMultigraph> {
    if k == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if sigma < 2 {
        return Err(Error::AlphabetTooSmall {
            required: 2,
            actual: sigma,
        });
    }
    let alphabet = Alphabet::numeric(sigma)?;
    let words = expand_language(&LanguageSpec::full(k), &alphabet)?;
    graph_from_language(format!("G_{sigma}_{k}"), sigma, &words)
}

/// Kautz graph `D(K_k)` over `sigma >= 3` symbols.
pub fn build_kautz_graph(sigma: usize, k: usize) -> Result<DirectedMultigraph> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    if sigma < 3 {
        return Err(Error::AlphabetTooSmall {
            required: 3,
            actual: sigma,
        });
    }
    let alphabet = Alphabet::numeric(sigma)?;
    let words = expand_language(&LanguageSpec::kautz(k), &alphabet)?;
    graph_from_language(format!("Kautz_{sigma}_{k}"), sigma, &words)
}
