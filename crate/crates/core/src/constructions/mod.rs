//! Constructions of orthogonal collections. Every public constructor
//! certifies its output twice (through circuit wirings and through an
//! independent window count) before returning it.

mod avoiding;
mod balanced;
mod certify;
mod fixed_weight;
mod orthogonal;
mod tensor;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol};
use crate::euler::Circuit;
use crate::verify::VerificationReport;

pub use avoiding::{
    build_b_circuit, check_avoiding_cycles, combine_closed_walks, find_arc_disjoint_avoiding_cycles,
    find_avoiding_cycles_with, AvoidingCycles, CycleSource, TranslationGroup,
};
pub use balanced::{construct_orthogonal_balanced_de_bruijn, construct_orthogonal_balanced_kautz};
pub use certify::{Certificate, ClaimCheck};
pub use fixed_weight::{
    construct_fixed_weight_kautz_orthogonal, construct_fixed_weight_orthogonal_db, fixed_weight_kautz_count,
    fixed_weight_kautz_exists,
};
pub use orthogonal::{
    construct_l_orthogonal_de_bruijn, construct_l_orthogonal_kautz, l_orthogonal_rows, partition_vertices,
};
pub use tensor::{map_to_combined, tensor_compose_b_circuits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    OrthogonalDeBruijn,
    OrthogonalKautz,
    BalancedDeBruijn,
    BalancedKautz,
    FixedWeightDeBruijn,
    FixedWeightKautz,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub sigma: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_max: Option<usize>,
}

/// How one member of a collection was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub name: String,
    pub rule: String,
}

impl Provenance {
    pub(crate) fn new(name: impl Into<String>, rule: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            rule: rule.into(),
        }
    }
}

/// A certified collection: circuits on `graph_name`, their circular words and
/// the certificate that accepted them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub family: Family,
    pub params: Params,
    pub alphabet: Alphabet,
    pub graph_name: String,
    pub graph_fingerprint: String,
    pub circuits: Vec<Circuit>,
    pub words: Vec<Vec<Symbol>>,
    pub provenance: Vec<Provenance>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SequenceJson {
    pub name: String,
    pub rule: String,
    pub length: usize,
    pub word: String,
    pub arcs: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultJson {
    pub family: Family,
    pub params: Params,
    pub alphabet: Vec<String>,
    pub graph: String,
    pub graph_fingerprint: String,
    pub sequences: Vec<SequenceJson>,
    pub certificate: Certificate,
}

impl ConstructionResult {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Render the words with a different alphabet of the same size.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> crate::Result<Self> {
        if alphabet.sigma() != self.alphabet.sigma() {
            return Err(crate::Error::AlphabetTooSmall {
                required: self.alphabet.sigma(),
                actual: alphabet.sigma(),
            });
        }
        self.alphabet = alphabet;
        Ok(self)
    }

    pub fn rendered_words(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.render(w)).collect()
    }

    pub fn to_json(&self) -> ResultJson {
        ResultJson {
            family: self.family,
            params: self.params.clone(),
            alphabet: self.alphabet.tokens().to_vec(),
            graph: self.graph_name.clone(),
            graph_fingerprint: self.graph_fingerprint.clone(),
            sequences: self
                .words
                .iter()
                .zip(&self.provenance)
                .zip(&self.circuits)
                .map(|((w, p), c)| SequenceJson {
                    name: p.name.clone(),
                    rule: p.rule.clone(),
                    length: w.len(),
                    word: self.alphabet.render(w),
                    arcs: c.arcs().to_vec(),
                })
                .collect(),
            certificate: self.certificate.clone(),
        }
    }

    /// Every oracle report in the certificate.
    pub fn oracle_reports(&self) -> &[VerificationReport] {
        &self.certificate.oracle
    }
}
