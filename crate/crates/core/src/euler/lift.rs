use super::{circuit_to_word, Circuit};
use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;

/// Read an Eulerian circuit of an order-k word graph as a Hamiltonian cycle of
/// the order-(k+1) graph `lifted`, whose vertices are the arc words of `g`.
pub fn hamiltonian_from_eulerian(g: &DirectedMultigraph, c: &Circuit, lifted: &DirectedMultigraph) -> Result<Circuit> {
    c.validate_eulerian(g)?;
    let word = circuit_to_word(g, c)?;
    let h = Circuit::from_word(lifted, &word)?;
    let mut seen = vec![false; lifted.vertex_count()];
    for v in h.vertices(lifted) {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidCircuit(format!("vertex {v} visited twice")));
        }
    }
    if h.len() != lifted.vertex_count() {
        return Err(Error::InvalidCircuit(format!(
            "cycle visits {} of {} vertices",
            h.len(),
            lifted.vertex_count()
        )));
    }
    Ok(h)
}

/// Inverse of [`hamiltonian_from_eulerian`].
pub fn eulerian_from_hamiltonian(lifted: &DirectedMultigraph, h: &Circuit, g: &DirectedMultigraph) -> Result<Circuit> {
    h.validate_closed_walk(lifted)?;
    let word = circuit_to_word(lifted, h)?;
    let c = Circuit::from_word(g, &word)?;
    c.validate_eulerian(g)?;
    Ok(c)
}
