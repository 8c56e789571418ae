#![allow(dead_code)]

use orthoseq::euler::Circuit;
use orthoseq::graph::{ArcId, DirectedMultigraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Hierholzer's algorithm with shuffled out-arc order; any Eulerian circuit
/// can come out.
pub fn random_eulerian_circuit<R: Rng>(g: &DirectedMultigraph, rng: &mut R) -> Circuit {
    let mut pending: Vec<Vec<ArcId>> = (0..g.vertex_count())
        .map(|v| {
            let mut arcs = g.out_arcs(v).to_vec();
            arcs.shuffle(rng);
            arcs
        })
        .collect();
    let start = g.arc(0).tail;
    let mut stack: Vec<(usize, Option<ArcId>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.arc_count());
    while let Some(&(v, via)) = stack.last() {
        if let Some(a) = pending[v].pop() {
            stack.push((g.arc(a).head, Some(a)));
        } else {
            stack.pop();
            if let Some(a) = via {
                circuit.push(a);
            }
        }
    }
    circuit.reverse();
    assert_eq!(circuit.len(), g.arc_count(), "graph is not Eulerian");
    Circuit::new(circuit)
}
