//! Directed multigraphs: de Bruijn, Kautz, language-restricted graphs,
//! split graphs and tensor products all share one arc-list representation.

mod export;
mod families;
mod product;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};

pub use export::{to_dot, to_json, GraphJson};
pub use families::{
    build_de_bruijn_graph, build_kautz_graph, build_restricted_graph, expand_language, LanguageKind, LanguageSpec,
};
pub use product::{de_bruijn_digit_isomorphism, tensor_product, DigitIsomorphism};

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    /// A (k-1)-word.
    Word(Vec<Symbol>),
    /// One of the degree-1 copies produced by splitting a word vertex.
    /// `tag` is the first symbol of the copy's unique in-arc word.
    Copy {
        word: Vec<Symbol>,
        copy: usize,
        tag: Option<Symbol>,
    },
    /// Product vertex `(v1, v2)`.
    Pair(VertexId, VertexId),
}

impl VertexLabel {
    pub fn word(&self) -> Option<&[Symbol]> {
        match self {
            VertexLabel::Word(w) | VertexLabel::Copy { word: w, .. } => Some(w),
            VertexLabel::Pair(..) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcLabel {
    /// Symbol appended to the tail word.
    Symbol(Symbol),
    /// Product arc `(a1, a2)`.
    Pair(ArcId, ArcId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: ArcLabel,
}

#[derive(Clone, Debug)]
pub struct DirectedMultigraph {
    name: String,
    sigma: usize,
    vertices: Vec<VertexLabel>,
    arcs: Vec<Arc>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
    vertex_index: HashMap<Vec<Symbol>, VertexId>,
    arc_index: HashMap<Vec<Symbol>, ArcId>,
}

impl DirectedMultigraph {
    /// Assemble a graph from labelled vertices and arcs; arc ids are the
    /// positions in `arcs`.
    pub fn from_parts(
        name: impl Into<String>,
        sigma: usize,
        vertices: Vec<VertexLabel>,
        arcs: Vec<Arc>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        for (id, a) in arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n {
                return Err(Error::IndexOutOfRange {
                    index: a.tail.max(a.head),
                    len: n,
                });
            }
            out_arcs[a.tail].push(id);
            in_arcs[a.head].push(id);
        }
        let mut vertex_index = HashMap::new();
        for (id, v) in vertices.iter().enumerate() {
            if let VertexLabel::Word(w) = v {
                vertex_index.insert(w.clone(), id);
            }
        }
        let mut g = Self {
            name: name.into(),
            sigma,
            vertices,
            arcs,
            out_arcs,
            in_arcs,
            vertex_index,
            arc_index: HashMap::new(),
        };
        let mut arc_index = HashMap::new();
        for id in 0..g.arcs.len() {
            if let Some(w) = g.arc_word(id) {
                arc_index.insert(w, id);
            }
        }
        g.arc_index = arc_index;
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Alphabet size of the word labels (0 for product graphs).
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &VertexLabel {
        &self.vertices[v]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, a: ArcId) -> &Arc {
        &self.arcs[a]
    }

    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_arcs[v]
    }

    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_arcs[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_arcs[v].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_arcs[v].len()
    }

    pub fn is_loop(&self, a: ArcId) -> bool {
        self.arcs[a].tail == self.arcs[a].head
    }

    pub fn loop_count(&self) -> usize {
        (0..self.arcs.len()).filter(|&a| self.is_loop(a)).count()
    }

    /// Word-labelled vertex lookup (split copies are not indexed).
    pub fn vertex_by_word(&self, word: &[Symbol]) -> Option<VertexId> {
        self.vertex_index.get(word).copied()
    }

    pub fn arc_by_word(&self, word: &[Symbol]) -> Option<ArcId> {
        self.arc_index.get(word).copied()
    }

    /// The k-word of an arc: its tail word extended by its label.
    pub fn arc_word(&self, a: ArcId) -> Option<Vec<Symbol>> {
        let arc = &self.arcs[a];
        match arc.label {
            ArcLabel::Symbol(s) => {
                let mut w = self.vertices[arc.tail].word()?.to_vec();
                w.push(s);
                Some(w)
            }
            ArcLabel::Pair(..) => None,
        }
    }

    /// Arcs from `u` to `v`, in id order.
    pub fn arcs_between(&self, u: VertexId, v: VertexId) -> Vec<ArcId> {
        self.out_arcs[u]
            .iter()
            .copied()
            .filter(|&a| self.arcs[a].head == v)
            .collect()
    }

    /// Vertices whose in-degree differs from their out-degree.
    pub fn degree_mismatches(&self) -> Vec<VertexId> {
        (0..self.vertices.len())
            .filter(|&v| self.in_degree(v) != self.out_degree(v))
            .collect()
    }

    /// True when every vertex touched by an arc can reach every other such vertex.
    pub fn is_arc_strongly_connected(&self) -> bool {
        let Some(first) = self.arcs.first() else {
            return false;
        };
        let start = first.tail;
        let reach = |forward: bool| {
            let mut seen = vec![false; self.vertices.len()];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                let list = if forward { &self.out_arcs[u] } else { &self.in_arcs[u] };
                for &a in list {
                    let w = if forward { self.arcs[a].head } else { self.arcs[a].tail };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        };
        let fwd = reach(true);
        let bwd = reach(false);
        (0..self.vertices.len()).all(|v| {
            let touched = !self.out_arcs[v].is_empty() || !self.in_arcs[v].is_empty();
            !touched || (fwd[v] && bwd[v])
        })
    }

    pub fn is_eulerian(&self) -> bool {
        !self.arcs.is_empty() && self.degree_mismatches().is_empty() && self.is_arc_strongly_connected()
    }

    /// Stable content hash over vertex labels and arcs.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for v in &self.vertices {
            h.update(format!("{v:?};").as_bytes());
        }
        for a in &self.arcs {
            h.update(format!("{}>{}:{:?};", a.tail, a.head, a.label).as_bytes());
        }
        h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
    }
}
