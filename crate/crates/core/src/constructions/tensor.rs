use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::euler::Circuit;
use crate::graph::{DigitIsomorphism, DirectedMultigraph};

/// Walk both closed walks in lockstep: step `t` uses arc `c1[t mod n1]`
/// and `c2[t mod n2]`. The result lives on the tensor product of the two
/// graphs (arc `(a1, a2)` has id `a1 * |A2| + a2`) and has length `n1 * n2`.
/// A `b1`-circuit and a `b2`-circuit yield a `b1*b2`-circuit.
pub fn tensor_compose_b_circuits(
    g1: &DirectedMultigraph,
    c1: &Circuit,
    g2: &DirectedMultigraph,
    c2: &Circuit,
) -> Result<Circuit> {
    c1.validate_closed_walk(g1)?;
    c2.validate_closed_walk(g2)?;
    let (n1, n2) = (c1.len(), c2.len());
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime(n1, n2));
    }
    let m2 = g2.arc_count();
    let arcs = (0..n1 * n2)
        .map(|t| c1.arcs()[t % n1] * m2 + c2.arcs()[t % n2])
        .collect();
    Ok(Circuit::new(arcs))
}

/// Carry a closed walk on the product graph to the word graph over the
/// combined alphabet.
pub fn map_to_combined(iso: &DigitIsomorphism, circuit: &Circuit) -> Circuit {
    Circuit::new(circuit.arcs().iter().map(|&p| iso.arc_inverse(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Symbol};
    use crate::euler::{circuit_to_word, find_eulerian_circuit};
    use crate::graph::{build_de_bruijn_graph, tensor_product};
    use crate::verify::{is_b_balanced, is_b_circuit};

    fn parse(s: &str, sigma: usize) -> Vec<Symbol> {
        Alphabet::numeric(sigma).unwrap().parse(s).unwrap()
    }

    const TWO_CIRCUIT_0: &str = "01113102212033230133031223210002";
    const E: &str = "100020212210222001012112011";

    #[test]
    fn composed_word_starts_like_the_example() {
        let g1 = build_de_bruijn_graph(4, 3).unwrap();
        let g2 = build_de_bruijn_graph(3, 3).unwrap();
        let c1 = Circuit::from_word(&g1, &parse(TWO_CIRCUIT_0, 4)).unwrap();
        let c2 = Circuit::from_word(&g2, &parse(E, 3)).unwrap();
        assert!(c2.is_eulerian(&g2));
        let product = tensor_compose_b_circuits(&g1, &c1, &g2, &c2).unwrap();
        assert_eq!(product.len(), 864);
        let combined = build_de_bruijn_graph(12, 3).unwrap();
        let iso = DigitIsomorphism::between(&combined, &g1, &g2).unwrap();
        let walk = map_to_combined(&iso, &product);
        walk.validate_closed_walk(&combined).unwrap();
        let word = circuit_to_word(&combined, &walk).unwrap();
        assert_eq!(&word[..5], &[1, 3, 3, 3, 11]);
        assert!(is_b_balanced(&word, 12, 2, 6).holds);
        assert!(is_b_circuit(walk.arcs(), &combined, 6).holds);
    }

    #[test]
    fn product_walk_is_closed_on_product_graph() {
        let g1 = build_de_bruijn_graph(2, 2).unwrap();
        let g2 = build_de_bruijn_graph(3, 2).unwrap();
        let e1 = find_eulerian_circuit(&g1).unwrap();
        let e2 = find_eulerian_circuit(&g2).unwrap();
        let p = tensor_product(&g1, &g2).unwrap();
        let c = tensor_compose_b_circuits(&g1, &e1, &g2, &e2).unwrap();
        c.validate_closed_walk(&p).unwrap();
        assert_eq!(c.len(), 36);
        let mut visits = vec![0; p.vertex_count()];
        for v in c.vertices(&p) {
            visits[v] += 1;
        }
        assert!(visits.iter().all(|&x| x == 6));
    }

    #[test]
    fn rejects_common_factor() {
        let g = build_de_bruijn_graph(2, 2).unwrap();
        let e = find_eulerian_circuit(&g).unwrap();
        assert_eq!(
            tensor_compose_b_circuits(&g, &e, &g, &e).unwrap_err(),
            Error::NotCoprime(4, 4)
        );
    }
}
