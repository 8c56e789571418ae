use super::avoiding::{build_b_circuit, combine_closed_walks, find_arc_disjoint_avoiding_cycles};
use super::certify::certify_balanced;
use super::orthogonal::assemble;
use super::tensor::{map_to_combined, tensor_compose_b_circuits};
use super::{ConstructionResult, Family, Params, Provenance};
use crate::alphabet::Alphabet;
use crate::arith::{factorize, primes_divide, smallest_prime_power_at_least};
use crate::error::{Error, Result};
use crate::euler::{circuit_to_word, find_eulerian_circuit, hamiltonian_from_eulerian, rewire_vertex_set, Circuit};
use crate::graph::{build_de_bruijn_graph, build_kautz_graph, DigitIsomorphism, DirectedMultigraph};

const ARC_LIMIT: usize = 1 << 20;

/// A set of arc-disjoint b-circuits on one de Bruijn graph.
struct Component {
    graph: DirectedMultigraph,
    walks: Vec<Circuit>,
    rules: Vec<String>,
}

fn check_size(sigma: usize, k: usize) -> Result<()> {
    if sigma.checked_pow(k as u32 + 1).is_none_or(|m| m > ARC_LIMIT) {
        return Err(Error::ParameterOutOfRange(format!(
            "{sigma}^{} arcs exceed the size limit",
            k + 1
        )));
    }
    Ok(())
}

fn check_balanced_params(c: usize, b: usize, k: usize) -> Result<()> {
    if c < 2 || b < 2 || k == 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "need c >= 2, b >= 2, k >= 1 (got c = {c}, b = {b}, k = {k})"
        )));
    }
    Ok(())
}

/// `count` arc-disjoint `b`-circuits on `G_{sigma,k+1}` from the avoiding
/// cycles of a prime power `sigma >= count * b`.
fn prime_power_component(sigma: usize, k: usize, count: usize, b: usize) -> Result<Component> {
    let found = find_arc_disjoint_avoiding_cycles(sigma, k)?;
    let mut walks = Vec::with_capacity(count);
    let mut rules = Vec::with_capacity(count);
    for tau in 0..count {
        walks.push(build_b_circuit(&found.graph, &found.cycles, tau, b)?);
        rules.push(format!(
            "combine avoiding cycles {}..={} of G_{sigma}_{} with loops",
            tau * b,
            tau * b + b - 1,
            k + 1
        ));
    }
    Ok(Component {
        graph: found.graph,
        walks,
        rules,
    })
}

fn eulerian_component(sigma: usize, k: usize) -> Result<Component> {
    let graph = build_de_bruijn_graph(sigma, k + 1)?;
    let walk = find_eulerian_circuit(&graph)?;
    Ok(Component {
        graph,
        walks: vec![walk],
        rules: vec![format!("Eulerian circuit of G_{sigma}_{}", k + 1)],
    })
}

/// Pair every walk of `left` with every walk of `right` through the
/// tensor product and carry the results to the combined alphabet, where
/// symbol `(q, r)` becomes `q * sigma_right + r`.
fn compose(left: Component, right: Component, k: usize) -> Result<Component> {
    let sigma = left.graph.sigma() * right.graph.sigma();
    check_size(sigma, k)?;
    let combined = build_de_bruijn_graph(sigma, k + 1)?;
    let iso = DigitIsomorphism::between(&combined, &left.graph, &right.graph)?;
    let mut walks = Vec::with_capacity(left.walks.len() * right.walks.len());
    let mut rules = Vec::with_capacity(walks.capacity());
    for (x, rx) in left.walks.iter().zip(&left.rules) {
        for (y, ry) in right.walks.iter().zip(&right.rules) {
            let product = tensor_compose_b_circuits(&left.graph, x, &right.graph, y)?;
            walks.push(map_to_combined(&iso, &product));
            rules.push(format!("({rx}) x ({ry})"));
        }
    }
    Ok(Component {
        graph: combined,
        walks,
        rules,
    })
}

/// `c` orthogonal `b`-balanced `(sigma,k)`-de Bruijn sequences, read off `c`
/// arc-disjoint `b`-circuits of `G_{sigma,k+1}`. When every prime factor of
/// `c` divides `b` the alphabet has exactly `c*b` symbols (one prime-power
/// component per prime of `c`, largest prime first, then an Eulerian
/// component for the part of `b` coprime to `c`); otherwise it is the
/// smallest prime power at least `c*b`.
pub fn construct_orthogonal_balanced_de_bruijn(c: usize, b: usize, k: usize) -> Result<ConstructionResult> {
    check_balanced_params(c, b, k)?;
    let cb = c
        .checked_mul(b)
        .ok_or_else(|| Error::ParameterOutOfRange("c * b overflows".into()))?;
    let component = if primes_divide(c, b) {
        check_size(cb, k)?;
        let mut parts = Vec::new();
        let mut rest = b;
        let mut factors = factorize(c);
        factors.sort_by_key(|&(p, _)| std::cmp::Reverse(p));
        for (p, x) in factors {
            let mut y = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                y += 1;
            }
            parts.push(prime_power_component(p.pow(x + y), k, p.pow(x), p.pow(y))?);
        }
        if rest > 1 {
            parts.push(eulerian_component(rest, k)?);
        }
        let mut iter = parts.into_iter();
        let mut acc = iter.next().expect("c >= 2 has a prime factor");
        for next in iter {
            acc = compose(acc, next, k)?;
        }
        acc
    } else {
        let sigma = smallest_prime_power_at_least(cb);
        check_size(sigma, k)?;
        prime_power_component(sigma, k, c, b)?
    };
    let sigma = component.graph.sigma();
    let words = component
        .walks
        .iter()
        .map(|w| circuit_to_word(&component.graph, w))
        .collect::<Result<Vec<_>>>()?;
    let certificate = certify_balanced(&component.graph, &component.walks, &words, c, sigma, k, b, false)?;
    let provenance = component
        .rules
        .into_iter()
        .enumerate()
        .map(|(i, r)| Provenance::new(format!("B[{i}]"), r))
        .collect();
    let params = Params {
        sigma,
        k,
        c: Some(c),
        b: Some(b),
        ..Params::default()
    };
    Ok(assemble(
        Family::BalancedDeBruijn,
        &component.graph,
        Alphabet::numeric(sigma)?,
        params,
        component.walks,
        words,
        provenance,
        certificate,
    ))
}

/// `c` orthogonal `b`-balanced Kautz sequences over `2cb+1` symbols: `cb`
/// pairwise compatible Eulerian circuits of the order-k Kautz graph become
/// arc-disjoint Hamiltonian cycles of the order-(k+1) Kautz graph, and each
/// block of `b` consecutive cycles is combined into one `b`-circuit.
pub fn construct_orthogonal_balanced_kautz(c: usize, b: usize, k: usize) -> Result<ConstructionResult> {
    check_balanced_params(c, b, k)?;
    if k < 2 {
        return Err(Error::ParameterOutOfRange(format!("Kautz order k = {k} is below 2")));
    }
    let cb = c
        .checked_mul(b)
        .ok_or_else(|| Error::ParameterOutOfRange("c * b overflows".into()))?;
    let sigma = 2 * cb + 1;
    let arcs = (sigma - 1).checked_pow(k as u32).and_then(|m| m.checked_mul(sigma));
    if arcs.is_none_or(|m| m > ARC_LIMIT) {
        return Err(Error::ParameterOutOfRange("Kautz graph exceeds the size limit".into()));
    }
    let g = build_kautz_graph(sigma, k)?;
    let lifted = build_kautz_graph(sigma, k + 1)?;
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let mut circuits = vec![find_eulerian_circuit(&g)?];
    while circuits.len() < cb {
        let next = rewire_vertex_set(&g, &all, circuits.last().expect("non-empty"), &circuits)?;
        circuits.push(next);
    }
    let cycles = circuits
        .iter()
        .map(|e| hamiltonian_from_eulerian(&g, e, &lifted))
        .collect::<Result<Vec<_>>>()?;
    let mut walks = Vec::with_capacity(c);
    let mut provenance = Vec::with_capacity(c);
    for (tau, block) in cycles.chunks(b).enumerate() {
        walks.push(combine_closed_walks(&lifted, block)?);
        provenance.push(Provenance::new(
            format!("B[{tau}]"),
            format!(
                "combine lifted compatible circuits {}..={} on Kautz_{sigma}_{}",
                tau * b + 1,
                tau * b + b,
                k + 1
            ),
        ));
    }
    let words = walks
        .iter()
        .map(|w| circuit_to_word(&lifted, w))
        .collect::<Result<Vec<_>>>()?;
    let certificate = certify_balanced(&lifted, &walks, &words, c, sigma, k, b, true)?;
    let params = Params {
        sigma,
        k,
        c: Some(c),
        b: Some(b),
        ..Params::default()
    };
    Ok(assemble(
        Family::BalancedKautz,
        &lifted,
        Alphabet::numeric(sigma)?,
        params,
        walks,
        words,
        provenance,
        certificate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_b_balanced, is_b_balanced_kautz, is_l_orthogonal};

    #[test]
    fn two_two_uses_four_symbols() {
        let r = construct_orthogonal_balanced_de_bruijn(2, 2, 2).unwrap();
        assert_eq!(r.params.sigma, 4);
        assert_eq!(r.len(), 2);
        for w in &r.words {
            assert_eq!(w.len(), 32);
            assert!(is_b_balanced(w, 4, 2, 2).holds);
        }
        assert!(is_l_orthogonal(&r.words, 2, 1).holds);
    }

    #[test]
    fn three_two_uses_seven_symbols() {
        let r = construct_orthogonal_balanced_de_bruijn(3, 2, 2).unwrap();
        assert_eq!(r.params.sigma, 7);
        assert_eq!(r.len(), 3);
        assert!(r.words.iter().all(|w| w.len() == 2 * 49));
    }

    #[test]
    fn two_six_uses_twelve_symbols() {
        let r = construct_orthogonal_balanced_de_bruijn(2, 6, 2).unwrap();
        assert_eq!(r.params.sigma, 12);
        assert_eq!(r.len(), 2);
        for w in &r.words {
            assert_eq!(w.len(), 864);
            assert!(is_b_balanced(w, 12, 2, 6).holds);
        }
        assert!(is_l_orthogonal(&r.words, 2, 1).holds);
    }

    #[test]
    fn two_distinct_primes() {
        let r = construct_orthogonal_balanced_de_bruijn(6, 6, 1).unwrap();
        assert_eq!(r.params.sigma, 36);
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn rejects_small_parameters() {
        for (c, b) in [(1, 2), (2, 1), (0, 0)] {
            assert!(matches!(
                construct_orthogonal_balanced_de_bruijn(c, b, 2),
                Err(Error::ParameterOutOfRange(_))
            ));
            assert!(matches!(
                construct_orthogonal_balanced_kautz(c, b, 2),
                Err(Error::ParameterOutOfRange(_))
            ));
        }
    }

    #[test]
    fn balanced_kautz_two_two() {
        let r = construct_orthogonal_balanced_kautz(2, 2, 2).unwrap();
        assert_eq!(r.params.sigma, 9);
        assert_eq!(r.len(), 2);
        for w in &r.words {
            assert_eq!(w.len(), 144);
            assert!(is_b_balanced_kautz(w, 9, 2, 2).holds);
        }
        assert!(is_l_orthogonal(&r.words, 2, 1).holds);
    }

    #[test]
    fn balanced_kautz_order_three() {
        let r = construct_orthogonal_balanced_kautz(2, 2, 3).unwrap();
        assert_eq!(r.words[0].len(), 2 * 9 * 64);
    }
}
