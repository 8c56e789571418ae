use super::{Circuit, Wiring};
use crate::error::{Error, Result};
use crate::graph::{Arc, DirectedMultigraph, VertexId, VertexLabel};

/// A graph obtained by splitting vertices along wirings. Arc ids are those of
/// the original graph; each split vertex keeps its id for copy 0 and the
/// remaining copies are appended after the original vertices.
#[derive(Clone, Debug)]
pub struct SplitGraph {
    pub graph: DirectedMultigraph,
    /// Original vertex of every vertex of `graph`.
    pub origin: Vec<VertexId>,
    pub wirings: Vec<Wiring>,
}

/// Split `v` into one degree-1 vertex per pair of `wiring`.
pub fn split_vertex(g: &DirectedMultigraph, wiring: &Wiring) -> Result<SplitGraph> {
    split_vertices(g, std::slice::from_ref(wiring))
}

/// Split every vertex named by `wirings` at once.
pub fn split_vertices(g: &DirectedMultigraph, wirings: &[Wiring]) -> Result<SplitGraph> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for w in wirings {
        if !w.is_complete(g) || std::mem::replace(&mut seen[w.vertex], true) {
            return Err(Error::IncompleteWiring { vertex: w.vertex });
        }
    }
    let mut vertices = g.vertices().to_vec();
    let mut origin: Vec<VertexId> = (0..n).collect();
    let mut arcs: Vec<Arc> = g.arcs().to_vec();
    for w in wirings {
        let v = w.vertex;
        let word = g.vertex(v).word().map(<[_]>::to_vec).unwrap_or_default();
        for (j, &(i, o)) in w.pairs.iter().enumerate() {
            let id = if j == 0 {
                v
            } else {
                vertices.push(VertexLabel::Word(Vec::new()));
                origin.push(v);
                vertices.len() - 1
            };
            let tag = g.arc_word(i).map(|aw| aw[0]);
            vertices[id] = VertexLabel::Copy {
                word: word.clone(),
                copy: j,
                tag,
            };
            arcs[i].head = id;
            arcs[o].tail = id;
        }
    }
    let graph = DirectedMultigraph::from_parts(format!("{} split", g.name()), g.sigma(), vertices, arcs)?;
    Ok(SplitGraph {
        graph,
        origin,
        wirings: wirings.to_vec(),
    })
}

/// Carry a circuit of the split graph back to the original graph. The result
/// uses the splitting wiring at every split vertex.
pub fn merge_circuit(original: &DirectedMultigraph, split: &SplitGraph, c: &Circuit) -> Result<Circuit> {
    c.validate_eulerian(&split.graph)?;
    let merged = Circuit::new(c.arcs().to_vec());
    merged.validate_eulerian(original)?;
    Ok(merged)
}
