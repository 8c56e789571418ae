use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ArcId, ArcLabel, DirectedMultigraph, VertexId, VertexLabel};
use crate::alphabet::Alphabet;

fn vertex_text(g: &DirectedMultigraph, v: VertexId, alphabet: &Alphabet) -> String {
    match g.vertex(v) {
        VertexLabel::Word(w) if w.is_empty() => "ε".to_string(),
        VertexLabel::Word(w) => alphabet.render(w),
        VertexLabel::Copy { word, copy, tag } => match tag {
            Some(t) => format!("{}_{}", alphabet.render(word), alphabet.render(&[*t])),
            None => format!("{}_{}", alphabet.render(word), copy),
        },
        VertexLabel::Pair(a, b) => format!("({a},{b})"),
    }
}

fn arc_text(g: &DirectedMultigraph, a: ArcId, alphabet: &Alphabet) -> String {
    match g.arc(a).label {
        ArcLabel::Symbol(s) => alphabet.render(&[s]),
        ArcLabel::Pair(x, y) => format!("({x},{y})"),
    }
}

/// Graphviz rendering; vertex labels are words, arc labels extending symbols.
pub fn to_dot(g: &DirectedMultigraph, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", g.name().replace('"', "'"));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", vertex_text(g, v, alphabet));
    }
    for (a, arc) in g.arcs().iter().enumerate() {
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{}\", id=\"a{a}\"];",
            arc.tail,
            arc.head,
            arc_text(g, a, alphabet)
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub name: String,
    pub sigma: usize,
    pub fingerprint: String,
    pub vertices: Vec<VertexJson>,
    pub arcs: Vec<ArcJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: VertexId,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcJson {
    pub id: ArcId,
    pub tail: VertexId,
    pub head: VertexId,
    pub label: String,
}

pub fn to_json(g: &DirectedMultigraph, alphabet: &Alphabet) -> GraphJson {
    GraphJson {
        name: g.name().to_string(),
        sigma: g.sigma(),
        fingerprint: g.fingerprint(),
        vertices: (0..g.vertex_count())
            .map(|v| VertexJson {
                id: v,
                label: vertex_text(g, v, alphabet),
            })
            .collect(),
        arcs: g
            .arcs()
            .iter()
            .enumerate()
            .map(|(a, arc)| ArcJson {
                id: a,
                tail: arc.tail,
                head: arc.head,
                label: arc_text(g, a, alphabet),
            })
            .collect(),
    }
}
