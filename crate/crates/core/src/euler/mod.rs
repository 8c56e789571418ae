//! Eulerian circuits, wirings (transition systems) and the rewiring,
//! splitting and lifting operations built on them.

mod lift;
mod rewire;
mod split;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::graph::{ArcId, DirectedMultigraph, VertexId};

pub use lift::{eulerian_from_hamiltonian, hamiltonian_from_eulerian};
pub use rewire::{rewire, rewire_given, rewire_vertex_set, rewire_vertex_set_unconditioned};
pub use split::{merge_circuit, split_vertex, split_vertices, SplitGraph};

/// A closed walk given as a cyclic sequence of arc ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    arcs: Vec<ArcId>,
}

impl Circuit {
    pub fn new(arcs: Vec<ArcId>) -> Self {
        Self { arcs }
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Rotated so that the smallest arc id comes first.
    pub fn canonical(&self) -> Circuit {
        let Some(pos) = self.arcs.iter().enumerate().min_by_key(|&(_, a)| *a).map(|(i, _)| i) else {
            return self.clone();
        };
        let mut arcs = self.arcs[pos..].to_vec();
        arcs.extend_from_slice(&self.arcs[..pos]);
        Circuit { arcs }
    }

    pub fn rotated(&self, start: usize) -> Circuit {
        let n = self.arcs.len();
        Circuit {
            arcs: (0..n).map(|i| self.arcs[(start + i) % n]).collect(),
        }
    }

    /// Checks that consecutive arcs meet head-to-tail, cyclically.
    pub fn validate_closed_walk(&self, g: &DirectedMultigraph) -> Result<()> {
        if self.arcs.is_empty() {
            return Err(Error::InvalidCircuit("empty walk".into()));
        }
        for &a in &self.arcs {
            if a >= g.arc_count() {
                return Err(Error::NoSuchArc(a));
            }
        }
        let n = self.arcs.len();
        for i in 0..n {
            let (a, b) = (self.arcs[i], self.arcs[(i + 1) % n]);
            if g.arc(a).head != g.arc(b).tail {
                return Err(Error::InvalidCircuit(format!(
                    "arc {a} does not lead into arc {b} (position {i})"
                )));
            }
        }
        Ok(())
    }

    /// Closed walk using every arc exactly once.
    pub fn validate_eulerian(&self, g: &DirectedMultigraph) -> Result<()> {
        self.validate_closed_walk(g)?;
        if self.arcs.len() != g.arc_count() {
            return Err(Error::InvalidCircuit(format!(
                "walk has {} arcs, graph has {}",
                self.arcs.len(),
                g.arc_count()
            )));
        }
        let mut seen = vec![false; g.arc_count()];
        for &a in &self.arcs {
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidCircuit(format!("arc {a} used twice")));
            }
        }
        Ok(())
    }

    pub fn is_eulerian(&self, g: &DirectedMultigraph) -> bool {
        self.validate_eulerian(g).is_ok()
    }

    /// Tail vertex of every arc, in walk order.
    pub fn vertices(&self, g: &DirectedMultigraph) -> Vec<VertexId> {
        self.arcs.iter().map(|&a| g.arc(a).tail).collect()
    }

    /// Reads a circular word as a closed walk: position `i` becomes the arc
    /// whose word is the circular window starting at `i`.
    pub fn from_word(g: &DirectedMultigraph, word: &[Symbol]) -> Result<Circuit> {
        let arc_len = g.arc_word(0).map(|w| w.len()).ok_or(Error::NoWordLabels)?;
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidCircuit("empty word".into()));
        }
        let mut arcs = Vec::with_capacity(n);
        let mut window = Vec::with_capacity(arc_len);
        for i in 0..n {
            window.clear();
            window.extend((0..arc_len).map(|j| word[(i + j) % n]));
            let a = g
                .arc_by_word(&window)
                .ok_or_else(|| Error::InvalidCircuit(format!("window {window:?} at {i} is not an arc")))?;
            arcs.push(a);
        }
        let c = Circuit { arcs };
        c.validate_closed_walk(g)?;
        Ok(c)
    }
}

/// Hierholzer's algorithm, always leaving a vertex by its smallest unused
/// arc; the result is rotated to start at arc 0.
pub fn find_eulerian_circuit(g: &DirectedMultigraph) -> Result<Circuit> {
    if g.arc_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(&v) = g.degree_mismatches().first() {
        return Err(Error::DegreeMismatch {
            vertex: v,
            in_degree: g.in_degree(v),
            out_degree: g.out_degree(v),
        });
    }
    if !g.is_arc_strongly_connected() {
        return Err(Error::NotConnected);
    }
    let mut cursor = vec![0usize; g.vertex_count()];
    let mut stack: Vec<(VertexId, Option<ArcId>)> = vec![(g.arc(0).tail, None)];
    let mut out = Vec::with_capacity(g.arc_count());
    while let Some(&(v, via)) = stack.last() {
        let outs = g.out_arcs(v);
        if cursor[v] < outs.len() {
            let a = outs[cursor[v]];
            cursor[v] += 1;
            stack.push((g.arc(a).head, Some(a)));
        } else {
            stack.pop();
            if let Some(a) = via {
                out.push(a);
            }
        }
    }
    out.reverse();
    let c = Circuit::new(out).canonical();
    c.validate_eulerian(g)?;
    Ok(c)
}

/// Circular word of a walk on a word graph: the first symbol of each arc's
/// word, so that window `i` of the result is the word of arc `i`.
pub fn circuit_to_word(g: &DirectedMultigraph, c: &Circuit) -> Result<Vec<Symbol>> {
    c.arcs
        .iter()
        .map(|&a| g.arc_word(a).map(|w| w[0]).ok_or(Error::NoWordLabels))
        .collect()
}

/// Matching between the in-arcs and out-arcs of one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Wiring {
    pub vertex: VertexId,
    /// `(in_arc, out_arc)` pairs sorted by in-arc.
    pub pairs: Vec<(ArcId, ArcId)>,
}

impl Wiring {
    pub fn new(vertex: VertexId, mut pairs: Vec<(ArcId, ArcId)>) -> Self {
        pairs.sort_unstable();
        Self { vertex, pairs }
    }

    /// Perfect matching of all in-arcs with all out-arcs of the vertex.
    pub fn is_complete(&self, g: &DirectedMultigraph) -> bool {
        let v = self.vertex;
        if v >= g.vertex_count() || self.pairs.len() != g.in_degree(v) || g.in_degree(v) != g.out_degree(v) {
            return false;
        }
        let mut ins: Vec<ArcId> = self.pairs.iter().map(|p| p.0).collect();
        let mut outs: Vec<ArcId> = self.pairs.iter().map(|p| p.1).collect();
        ins.sort_unstable();
        outs.sort_unstable();
        ins == g.in_arcs(v) && outs == g.out_arcs(v)
    }

    pub fn shares_pair_with(&self, other: &Wiring) -> bool {
        self.pairs.iter().any(|p| other.pairs.binary_search(p).is_ok())
    }

    pub fn is_disjoint(&self, other: &Wiring) -> bool {
        !self.shares_pair_with(other)
    }
}

/// Wiring at `v` induced by a closed walk: in-arc `a` pairs with the arc the
/// walk takes right after `a`.
pub fn wiring_of(g: &DirectedMultigraph, v: VertexId, c: &Circuit) -> Wiring {
    let n = c.arcs.len();
    let pairs = (0..n)
        .filter(|&i| g.arc(c.arcs[i]).head == v)
        .map(|i| (c.arcs[i], c.arcs[(i + 1) % n]))
        .collect();
    Wiring::new(v, pairs)
}

/// A complete transition system, stored as the successor of every arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSystem {
    next: Vec<ArcId>,
}

impl TransitionSystem {
    pub fn from_circuit(g: &DirectedMultigraph, c: &Circuit) -> Result<Self> {
        c.validate_eulerian(g)?;
        let n = c.arcs.len();
        let mut next = vec![0; n];
        for i in 0..n {
            next[c.arcs[i]] = c.arcs[(i + 1) % n];
        }
        Ok(Self { next })
    }

    /// Assemble from one complete wiring per vertex that has arcs.
    pub fn from_wirings(g: &DirectedMultigraph, wirings: &[Wiring]) -> Result<Self> {
        let mut next = vec![usize::MAX; g.arc_count()];
        let mut covered = vec![false; g.vertex_count()];
        for w in wirings {
            if !w.is_complete(g) {
                return Err(Error::IncompleteWiring { vertex: w.vertex });
            }
            covered[w.vertex] = true;
            for &(i, o) in &w.pairs {
                next[i] = o;
            }
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| !covered[v] && g.in_degree(v) > 0) {
            return Err(Error::IncompleteWiring { vertex: v });
        }
        Ok(Self { next })
    }

    pub fn next(&self, a: ArcId) -> ArcId {
        self.next[a]
    }

    pub fn successors(&self) -> &[ArcId] {
        &self.next
    }

    pub fn wiring(&self, g: &DirectedMultigraph, v: VertexId) -> Wiring {
        Wiring::new(v, g.in_arcs(v).iter().map(|&a| (a, self.next[a])).collect())
    }

    pub fn wirings(&self, g: &DirectedMultigraph) -> Vec<Wiring> {
        (0..g.vertex_count())
            .filter(|&v| g.in_degree(v) > 0)
            .map(|v| self.wiring(g, v))
            .collect()
    }

    /// Number of cycles of the successor permutation.
    pub fn orbit_count(&self) -> usize {
        let mut seen = vec![false; self.next.len()];
        let mut count = 0;
        for start in 0..self.next.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = self.next[a];
            }
        }
        count
    }

    pub(crate) fn set(&mut self, in_arc: ArcId, out_arc: ArcId) {
        self.next[in_arc] = out_arc;
    }
}

/// The single circuit traced by a transition system, starting at arc 0.
pub fn circuit_from_transition_system(ts: &TransitionSystem) -> Result<Circuit> {
    let orbits = ts.orbit_count();
    if orbits != 1 {
        return Err(Error::MultipleCycles(orbits));
    }
    let mut arcs = Vec::with_capacity(ts.next.len());
    let mut a = 0;
    loop {
        arcs.push(a);
        a = ts.next[a];
        if a == 0 {
            break;
        }
    }
    Ok(Circuit::new(arcs))
}

/// Usage count of every `(in_arc, out_arc)` transition across a collection.
pub fn transition_usage(circuits: &[Circuit]) -> HashMap<(ArcId, ArcId), usize> {
    let mut usage = HashMap::new();
    for c in circuits {
        let n = c.arcs.len();
        for i in 0..n {
            *usage.entry((c.arcs[i], c.arcs[(i + 1) % n])).or_insert(0) += 1;
        }
    }
    usage
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::graph::{
        build_de_bruijn_graph, build_restricted_graph, expand_language, Arc, ArcLabel, LanguageSpec, VertexLabel,
    };

    fn circuit_of(g: &DirectedMultigraph, word: &str) -> Circuit {
        let a = Alphabet::numeric(g.sigma()).unwrap();
        Circuit::from_word(g, &a.parse(word).unwrap()).unwrap()
    }

    #[test]
    fn euler_on_g32_is_de_bruijn() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        assert_eq!(c.len(), 9);
        assert_eq!(c.arcs()[0], 0);
        let w = circuit_to_word(&g, &c).unwrap();
        let mut windows: Vec<_> = (0..9).map(|i| (w[i], w[(i + 1) % 9])).collect();
        windows.sort();
        windows.dedup();
        assert_eq!(windows.len(), 9);
    }

    #[test]
    fn euler_reports_degree_mismatch_at_ca() {
        let dna = Alphabet::dna();
        let words = expand_language(&LanguageSpec::kautz_weight_band(3, 1, 1), &dna).unwrap();
        let g = build_restricted_graph(4, &words).unwrap();
        let ca = g.vertex_by_word(&dna.parse("CA").unwrap()).unwrap();
        assert!(matches!(find_eulerian_circuit(&g), Err(Error::DegreeMismatch { .. })));
        assert!(g.degree_mismatches().contains(&ca));
        assert_eq!((g.in_degree(ca), g.out_degree(ca)), (2, 1));
    }

    #[test]
    fn euler_on_single_loop() {
        let g = DirectedMultigraph::from_parts(
            "loop",
            2,
            vec![VertexLabel::Word(vec![])],
            vec![Arc {
                tail: 0,
                head: 0,
                label: ArcLabel::Symbol(1),
            }],
        )
        .unwrap();
        let c = find_eulerian_circuit(&g).unwrap();
        assert_eq!(c.arcs(), &[0]);
        assert_eq!(circuit_to_word(&g, &c).unwrap(), vec![1]);
    }

    #[test]
    fn euler_reports_disconnected() {
        let g = DirectedMultigraph::from_parts(
            "two loops",
            2,
            vec![VertexLabel::Word(vec![0]), VertexLabel::Word(vec![1])],
            vec![
                Arc {
                    tail: 0,
                    head: 0,
                    label: ArcLabel::Symbol(0),
                },
                Arc {
                    tail: 1,
                    head: 1,
                    label: ArcLabel::Symbol(1),
                },
            ],
        )
        .unwrap();
        assert_eq!(find_eulerian_circuit(&g), Err(Error::NotConnected));
    }

    #[test]
    fn word_of_reference_circuit() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        // 0 -> 1 -> 2 -> 0 -> 0 -> 2 -> 2 -> 1 -> 1 -> 0
        let verts = [0u16, 1, 2, 0, 0, 2, 2, 1, 1, 0];
        let arcs = verts
            .windows(2)
            .map(|p| g.arc_by_word(&[p[0], p[1]]).unwrap())
            .collect();
        let c = Circuit::new(arcs);
        c.validate_eulerian(&g).unwrap();
        let a = Alphabet::numeric(3).unwrap();
        assert_eq!(a.render(&circuit_to_word(&g, &c).unwrap()), "012002211");
    }

    #[test]
    fn wiring_of_vertex_zero() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = circuit_of(&g, "012002211");
        let w = wiring_of(&g, 0, &c);
        let a = |s: &str| g.arc_by_word(&Alphabet::numeric(3).unwrap().parse(s).unwrap()).unwrap();
        // 10 -> 01, 20 -> 00, 00 -> 02
        assert_eq!(
            w,
            Wiring::new(0, vec![(a("10"), a("01")), (a("20"), a("00")), (a("00"), a("02"))])
        );
        assert!(w.is_complete(&g));
    }

    #[test]
    fn transition_system_round_trip() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = circuit_of(&g, "012002211");
        let ts =
            TransitionSystem::from_wirings(&g, &TransitionSystem::from_circuit(&g, &c).unwrap().wirings(&g)).unwrap();
        let back = circuit_from_transition_system(&ts).unwrap();
        assert_eq!(back.canonical(), c.canonical());
    }

    #[test]
    fn self_paired_loops_make_multiple_cycles() {
        let g = build_de_bruijn_graph(2, 2).unwrap();
        // every in-arc paired with the out-arc of the same label
        let wirings: Vec<Wiring> = (0..g.vertex_count())
            .map(|v| {
                let pairs = g
                    .in_arcs(v)
                    .iter()
                    .map(|&i| {
                        let o = if g.is_loop(i) {
                            i
                        } else {
                            *g.out_arcs(v).iter().find(|&&o| !g.is_loop(o)).unwrap()
                        };
                        (i, o)
                    })
                    .collect();
                Wiring::new(v, pairs)
            })
            .collect();
        let ts = TransitionSystem::from_wirings(&g, &wirings).unwrap();
        assert_eq!(circuit_from_transition_system(&ts), Err(Error::MultipleCycles(3)));
    }

    #[test]
    fn reference_transition_system() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let c = circuit_of(&g, "012022110");
        let ts = TransitionSystem::from_circuit(&g, &c).unwrap();
        let back = circuit_from_transition_system(&ts).unwrap();
        let w = circuit_to_word(&g, &back).unwrap();
        assert_eq!(
            crate::alphabet::canonical_rotation(&w),
            crate::alphabet::canonical_rotation(&Alphabet::numeric(3).unwrap().parse("012022110").unwrap())
        );
    }

    #[test]
    fn incomplete_wiring_rejected() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let w = Wiring::new(0, vec![(0, 0)]);
        assert_eq!(
            TransitionSystem::from_wirings(&g, &[w]),
            Err(Error::IncompleteWiring { vertex: 0 })
        );
    }
}
