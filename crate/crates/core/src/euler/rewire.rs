use std::collections::HashSet;

use super::{circuit_from_transition_system, wiring_of, Circuit, TransitionSystem};
use crate::error::{Error, Result};
use crate::graph::{ArcId, DirectedMultigraph, VertexId};

/// Replace the wiring of `v` in `c` by one avoiding every pair in `forbidden`
/// while keeping a single circuit.
///
/// Cut the circuit at `v`: each out-arc `o` starts a segment that returns to
/// `v` through the in-arc `end(o)`. A new wiring `end(o) -> pi(o)` yields one
/// circuit exactly when `pi` is a single cycle on the out-arcs, so the search
/// is for a Hamiltonian cycle over the out-arcs of `v`.
fn rewire_with(
    g: &DirectedMultigraph,
    v: VertexId,
    c: &Circuit,
    forbidden: &HashSet<(ArcId, ArcId)>,
    keep_if_allowed: bool,
) -> Result<Circuit> {
    if v >= g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: v,
            len: g.vertex_count(),
        });
    }
    let mut ts = TransitionSystem::from_circuit(g, c)?;
    let outs = g.out_arcs(v);
    let d = outs.len();
    if d > 64 {
        return Err(Error::UnsupportedCase(format!("degree {d} at vertex {v}")));
    }
    if keep_if_allowed && g.in_arcs(v).iter().all(|&i| !forbidden.contains(&(i, ts.next(i)))) {
        return Ok(c.canonical());
    }

    let ends: Vec<ArcId> = outs
        .iter()
        .map(|&o| {
            let mut a = o;
            while g.arc(a).head != v {
                a = ts.next(a);
            }
            a
        })
        .collect();
    let allowed: Vec<u64> = (0..d)
        .map(|x| {
            (0..d)
                .filter(|&y| (d == 1 || x != y) && !forbidden.contains(&(ends[x], outs[y])))
                .fold(0u64, |m, y| m | (1 << y))
        })
        .collect();

    let succ = hamiltonian_order(&allowed, d).ok_or_else(|| {
        Error::SearchExhausted(format!(
            "no admissible wiring at vertex {v} (degree {d}, {} forbidden pairs)",
            forbidden.len()
        ))
    })?;
    for x in 0..d {
        ts.set(ends[x], outs[succ[x]]);
    }
    circuit_from_transition_system(&ts)
}

/// Depth-first search for a Hamiltonian cycle through `0..d` with successor
/// candidates tried in increasing order. Returns the successor of each node.
fn hamiltonian_order(allowed: &[u64], d: usize) -> Option<Vec<usize>> {
    let full: u64 = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    let mut succ = vec![usize::MAX; d];
    fn go(x: usize, visited: u64, full: u64, allowed: &[u64], succ: &mut [usize]) -> bool {
        if visited == full {
            if allowed[x] & 1 != 0 {
                succ[x] = 0;
                return true;
            }
            return false;
        }
        let mut cand = allowed[x] & !visited;
        while cand != 0 {
            let y = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            succ[x] = y;
            if go(y, visited | (1 << y), full, allowed, succ) {
                return true;
            }
        }
        false
    }
    if d == 0 {
        return Some(succ);
    }
    go(0, 1, full, allowed, &mut succ).then_some(succ)
}

/// Rewire `v` so that its new wiring shares no pair with its wiring in `c`;
/// every other vertex keeps its wiring.
pub fn rewire(g: &DirectedMultigraph, v: VertexId, c: &Circuit) -> Result<Circuit> {
    if v >= g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: v,
            len: g.vertex_count(),
        });
    }
    let degree = g.out_degree(v);
    if degree < 3 {
        return Err(Error::InsufficientDegree { vertex: v, degree });
    }
    c.validate_eulerian(g)?;
    let forbidden = wiring_of(g, v, c).pairs.into_iter().collect();
    rewire_with(g, v, c, &forbidden, false)
}

/// Rewire `v` in `c` so that its wiring shares no pair with the wiring of `v`
/// in any of `given`. Requires `given.len() <= deg(v)/2 - 1`. The current
/// wiring is kept when it already qualifies.
pub fn rewire_given(g: &DirectedMultigraph, v: VertexId, c: &Circuit, given: &[Circuit]) -> Result<Circuit> {
    if v >= g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: v,
            len: g.vertex_count(),
        });
    }
    c.validate_eulerian(g)?;
    if given.is_empty() {
        return Ok(c.canonical());
    }
    let limit = (g.out_degree(v) / 2).saturating_sub(1);
    if given.len() > limit {
        return Err(Error::TooManyForbidden {
            forbidden: given.len(),
            limit,
        });
    }
    let mut forbidden = HashSet::new();
    for other in given {
        other.validate_eulerian(g)?;
        forbidden.extend(wiring_of(g, v, other).pairs);
    }
    rewire_with(g, v, c, &forbidden, true)
}

/// Apply [`rewire_given`] to each vertex of `vertices` in order.
pub fn rewire_vertex_set(
    g: &DirectedMultigraph,
    vertices: &[VertexId],
    c: &Circuit,
    given: &[Circuit],
) -> Result<Circuit> {
    let mut current = c.canonical();
    for &v in vertices {
        current = rewire_given(g, v, &current, given)?;
    }
    Ok(current)
}

/// Apply [`rewire`] to each vertex of `vertices` in order, each step relative
/// to the circuit produced by the previous one.
pub fn rewire_vertex_set_unconditioned(g: &DirectedMultigraph, vertices: &[VertexId], c: &Circuit) -> Result<Circuit> {
    let mut current = c.canonical();
    for &v in vertices {
        current = rewire(g, v, &current)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::euler::{circuit_to_word, find_eulerian_circuit};
    use crate::graph::build_de_bruijn_graph;

    fn from(g: &DirectedMultigraph, s: &str) -> Circuit {
        let a = Alphabet::numeric(g.sigma()).unwrap();
        Circuit::from_word(g, &a.parse(s).unwrap()).unwrap()
    }

    fn check_rewired(g: &DirectedMultigraph, v: VertexId, before: &Circuit, after: &Circuit, given: &[Circuit]) {
        after.validate_eulerian(g).unwrap();
        let new = wiring_of(g, v, after);
        for other in given {
            assert!(new.is_disjoint(&wiring_of(g, v, other)));
        }
        for u in (0..g.vertex_count()).filter(|&u| u != v) {
            assert_eq!(wiring_of(g, u, after), wiring_of(g, u, before));
        }
    }

    #[test]
    fn rewire_vertex_zero_of_g32() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = from(&g, "012002211");
        let r = rewire(&g, 0, &c).unwrap();
        check_rewired(&g, 0, &c, &r, std::slice::from_ref(&c));
    }

    #[test]
    fn reference_rewiring_step_is_admissible() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = from(&g, "012002211");
        let reference = from(&g, "012022110");
        check_rewired(&g, 0, &c, &reference, std::slice::from_ref(&c));
    }

    #[test]
    fn degree_two_is_insufficient() {
        let g = build_de_bruijn_graph(2, 3).unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        assert_eq!(
            rewire(&g, 1, &c),
            Err(Error::InsufficientDegree { vertex: 1, degree: 2 })
        );
    }

    #[test]
    fn too_many_forbidden() {
        let g = build_de_bruijn_graph(4, 2).unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        assert_eq!(
            rewire_given(&g, 0, &c, &[c.clone(), c.clone()]),
            Err(Error::TooManyForbidden { forbidden: 2, limit: 1 })
        );
    }

    #[test]
    fn given_self_matches_rewire_contract() {
        let g = build_de_bruijn_graph(4, 2).unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        for v in 0..4 {
            let r = rewire_given(&g, v, &c, std::slice::from_ref(&c)).unwrap();
            check_rewired(&g, v, &c, &r, std::slice::from_ref(&c));
        }
    }

    #[test]
    fn vertex_set_both_orders() {
        let g = build_de_bruijn_graph(4, 2).unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        let base = rewire(&g, 0, &c).unwrap();
        for order in [[1, 2], [2, 1]] {
            let r = rewire_vertex_set(&g, &order, &base, std::slice::from_ref(&c)).unwrap();
            r.validate_eulerian(&g).unwrap();
            for &v in &order {
                assert!(wiring_of(&g, v, &r).is_disjoint(&wiring_of(&g, v, &c)));
            }
            assert_eq!(wiring_of(&g, 0, &r), wiring_of(&g, 0, &base));
            assert_eq!(wiring_of(&g, 3, &r), wiring_of(&g, 3, &base));
        }
    }

    #[test]
    fn empty_vertex_set_is_identity() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = from(&g, "012002211");
        assert_eq!(
            rewire_vertex_set(&g, &[], &c, std::slice::from_ref(&c)).unwrap(),
            c.canonical()
        );
    }

    #[test]
    fn reference_second_row_candidate() {
        // second-row circuit rewired at vertices 1 and 2 against the first row
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c11 = from(&g, "012002211");
        let c12 = from(&g, "012022110");
        let c21 = from(&g, "011220210");
        let ours = rewire_vertex_set_unconditioned(&g, &[1, 2], &c12).unwrap();
        ours.validate_eulerian(&g).unwrap();
        for v in [1, 2] {
            assert!(wiring_of(&g, v, &c21).is_disjoint(&wiring_of(&g, v, &c12)));
            assert!(wiring_of(&g, v, &ours).is_disjoint(&wiring_of(&g, v, &c12)));
        }
        assert_eq!(wiring_of(&g, 0, &c21), wiring_of(&g, 0, &c12));
        assert_eq!(circuit_to_word(&g, &c11).unwrap().len(), 9);
    }

    #[test]
    fn hamiltonian_order_small() {
        assert_eq!(hamiltonian_order(&[0b1], 1), Some(vec![0]));
        assert_eq!(hamiltonian_order(&[0b10, 0b01], 2), Some(vec![1, 0]));
        assert_eq!(hamiltonian_order(&[0b10, 0b10], 2), None);
    }
}
