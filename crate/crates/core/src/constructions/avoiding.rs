use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;
use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::euler::Circuit;
use crate::graph::{build_de_bruijn_graph, DirectedMultigraph, VertexId};

/// Node budget of the backtracking search before the algebraic fallback.
pub const DEFAULT_CYCLE_SEARCH_BUDGET: u64 = 2_000_000;

const ARC_LIMIT: usize = 1 << 20;

/// Group acting on symbols by translation. The cycle for symbol `i` is the
/// translate of the cycle for symbol 0 by `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TranslationGroup {
    /// Base-`p` digit vectors of length `m` under digitwise addition mod `p`
    /// (the additive group of the field of order `p^m`).
    Elementary { p: usize, m: u32 },
    /// Integers mod `sigma`.
    Cyclic { sigma: usize },
}

impl TranslationGroup {
    pub fn order(&self) -> usize {
        match *self {
            TranslationGroup::Elementary { p, m } => p.pow(m),
            TranslationGroup::Cyclic { sigma } => sigma,
        }
    }

    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        match *self {
            TranslationGroup::Elementary { p, m } => {
                let (mut a, mut b) = (a as usize, b as usize);
                let (mut out, mut place) = (0, 1);
                for _ in 0..m {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out as Symbol
            }
            TranslationGroup::Cyclic { sigma } => ((a as usize + b as usize) % sigma) as Symbol,
        }
    }

    pub fn neg(&self, a: Symbol) -> Symbol {
        match *self {
            TranslationGroup::Elementary { p, m } => {
                let mut a = a as usize;
                let (mut out, mut place) = (0, 1);
                for _ in 0..m {
                    out += ((p - a % p) % p) * place;
                    a /= p;
                    place *= p;
                }
                out as Symbol
            }
            TranslationGroup::Cyclic { sigma } => ((sigma - a as usize % sigma) % sigma) as Symbol,
        }
    }

    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    pub fn translate(&self, word: &[Symbol], t: Symbol) -> Vec<Symbol> {
        word.iter().map(|&s| self.add(s, t)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CycleSource {
    /// Found by backtracking after visiting `nodes` search nodes.
    Search { nodes: u64 },
    /// Read off a maximal-period linear recurrence of order k over the field
    /// of order sigma with the given feedback coefficients.
    MSequence { coefficients: [u16; 8], order: usize },
}

/// `sigma` pairwise arc-disjoint loop-free cycles of `G_{sigma,k+1}`; cycle
/// `i` visits every vertex except the constant word `i^k` exactly once.
#[derive(Clone, Debug)]
pub struct AvoidingCycles {
    pub graph: DirectedMultigraph,
    pub cycles: Vec<Circuit>,
    pub words: Vec<Vec<Symbol>>,
    pub group: TranslationGroup,
    pub source: CycleSource,
}

fn constant_vertex(g: &DirectedMultigraph, s: Symbol, len: usize) -> Result<VertexId> {
    g.vertex_by_word(&vec![s; len])
        .ok_or_else(|| Error::InvalidCircuit(format!("no constant vertex for symbol {s}")))
}

fn constant_loop(g: &DirectedMultigraph, s: Symbol, len: usize) -> Result<usize> {
    g.arc_by_word(&vec![s; len + 1])
        .ok_or_else(|| Error::InvalidCircuit(format!("no loop for symbol {s}")))
}

fn vertex_len(g: &DirectedMultigraph) -> Result<usize> {
    Ok(g.vertex(0).word().ok_or(Error::NoWordLabels)?.len())
}

/// Check that `cycles[i]` avoids exactly the constant vertex `i^k`, visits
/// every other vertex once, uses no loop, and that the cycles share no arc.
pub fn check_avoiding_cycles(g: &DirectedMultigraph, cycles: &[Circuit]) -> Result<()> {
    let sigma = g.sigma();
    if cycles.len() != sigma {
        return Err(Error::InvalidCircuit(format!(
            "{} cycles for {sigma} symbols",
            cycles.len()
        )));
    }
    let len = vertex_len(g)?;
    let mut owner = vec![usize::MAX; g.arc_count()];
    for (i, c) in cycles.iter().enumerate() {
        c.validate_closed_walk(g)?;
        let avoided = constant_vertex(g, i as Symbol, len)?;
        let mut visits = vec![0usize; g.vertex_count()];
        for v in c.vertices(g) {
            visits[v] += 1;
        }
        for (v, &n) in visits.iter().enumerate() {
            let want = usize::from(v != avoided);
            if n != want {
                return Err(Error::InvalidCircuit(format!("cycle {i} visits vertex {v} {n} times")));
            }
        }
        for &a in c.arcs() {
            if g.is_loop(a) {
                return Err(Error::InvalidCircuit(format!("cycle {i} uses loop {a}")));
            }
            if owner[a] != usize::MAX {
                return Err(Error::InvalidCircuit(format!(
                    "cycles {} and {i} share arc {a}",
                    owner[a]
                )));
            }
            owner[a] = i;
        }
    }
    Ok(())
}

/// Closed walk containing the union of the arcs of `walks`. Each pending
/// walk is spliced in, rotated to its first arc leaving the vertex, just
/// before the earliest position of the current walk whose tail it visits.
pub fn combine_closed_walks(g: &DirectedMultigraph, walks: &[Circuit]) -> Result<Circuit> {
    let (first, rest) = walks
        .split_first()
        .ok_or_else(|| Error::InvalidCircuit("no walks to combine".into()))?;
    for w in walks {
        w.validate_closed_walk(g)?;
    }
    let mut result: Vec<usize> = first.arcs().to_vec();
    let mut pending: Vec<&Circuit> = rest.iter().collect();
    while !pending.is_empty() {
        let mut spliced = false;
        'scan: for p in 0..result.len() {
            let v = g.arc(result[p]).tail;
            for (idx, w) in pending.iter().enumerate() {
                if let Some(start) = w.arcs().iter().position(|&a| g.arc(a).tail == v) {
                    let rotated = w.rotated(start);
                    result.splice(p..p, rotated.arcs().iter().copied());
                    pending.remove(idx);
                    spliced = true;
                    break 'scan;
                }
            }
        }
        if !spliced {
            return Err(Error::Disconnected);
        }
    }
    Ok(Circuit::new(result))
}

/// The `b`-circuit built from cycles `b*tau .. b*tau+b-1`: each cycle gains
/// the loop at the constant vertex of the next symbol of the block (the last
/// one wraps to the block's first symbol) and the results are combined.
pub fn build_b_circuit(g: &DirectedMultigraph, cycles: &[Circuit], tau: usize, b: usize) -> Result<Circuit> {
    if b == 0 {
        return Err(Error::ParameterOutOfRange("b must be at least 1".into()));
    }
    let end = (tau + 1) * b;
    if end > cycles.len() {
        return Err(Error::IndexOutOfRange {
            index: end - 1,
            len: cycles.len(),
        });
    }
    let len = vertex_len(g)?;
    let mut augmented = Vec::with_capacity(b);
    for i in 0..b {
        let idx = b * tau + i;
        let symbol = if i + 1 < b { idx + 1 } else { b * tau } as Symbol;
        let target = constant_vertex(g, symbol, len)?;
        let lp = constant_loop(g, symbol, len)?;
        let cycle = &cycles[idx];
        let pos = cycle
            .arcs()
            .iter()
            .position(|&a| g.arc(a).head == target)
            .ok_or(Error::Disconnected)?;
        let mut arcs = cycle.arcs().to_vec();
        arcs.insert(pos + 1, lp);
        augmented.push(Circuit::new(arcs));
    }
    combine_closed_walks(g, &augmented)
}

struct Search {
    sigma: usize,
    k: usize,
    n: usize,
    high: usize,
    class: Vec<usize>,
    budget: u64,
    nodes: u64,
    visited: Vec<bool>,
    class_used: Vec<bool>,
    in_live: Vec<u32>,
    out_live: Vec<u32>,
    path: Vec<usize>,
    next_symbol: Vec<usize>,
}

impl Search {
    fn new(sigma: usize, k: usize, group: TranslationGroup, budget: u64) -> Self {
        let n = sigma.pow(k as u32);
        let high = n / sigma;
        let mut class = vec![0; n * sigma];
        for (a, slot) in class.iter_mut().enumerate() {
            let word = crate::alphabet::word_from_index(a, sigma, k + 1);
            let shifted: Vec<Symbol> = word.iter().map(|&s| group.sub(s, word[0])).collect();
            *slot = crate::alphabet::word_index(&shifted[1..], sigma);
        }
        Self {
            sigma,
            k,
            n,
            high,
            class,
            budget,
            nodes: 0,
            visited: vec![false; n],
            class_used: vec![false; n],
            in_live: vec![0; n],
            out_live: vec![0; n],
            path: Vec::with_capacity(n),
            next_symbol: Vec::with_capacity(n),
        }
    }

    fn succ(&self, u: usize, s: usize) -> usize {
        (u * self.sigma + s) % self.n
    }

    fn pred(&self, v: usize, t: usize) -> usize {
        v / self.sigma + t * self.high
    }

    /// Predecessors still able to enter `w`: unvisited vertices plus the
    /// current end of the path.
    fn init_counts(&mut self) {
        for w in 1..self.n {
            let mut i = 0;
            let mut o = 0;
            for t in 0..self.sigma {
                let p = self.pred(w, t);
                if p != 0 && p != w {
                    i += 1;
                }
                let s = self.succ(w, t);
                if s != 0 && s != w {
                    o += 1;
                }
            }
            self.in_live[w] = i;
            self.out_live[w] = o;
        }
    }

    /// Mark the move `u -> v`: `u` stops being a possible predecessor and `v`
    /// stops being a possible successor (unless it is the start).
    fn advance(&mut self, u: usize, v: usize) -> bool {
        let mut ok = true;
        for s in 0..self.sigma {
            let x = self.succ(u, s);
            if x != 0 && x != u {
                self.in_live[x] -= 1;
                if !self.visited[x] && x != v && self.in_live[x] == 0 {
                    ok = false;
                }
            }
        }
        for t in 0..self.sigma {
            let x = self.pred(v, t);
            if x != 0 && x != v {
                self.out_live[x] -= 1;
                if !self.visited[x] && x != v && self.out_live[x] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn retreat(&mut self, u: usize, v: usize) {
        for s in 0..self.sigma {
            let x = self.succ(u, s);
            if x != 0 && x != u {
                self.in_live[x] += 1;
            }
        }
        for t in 0..self.sigma {
            let x = self.pred(v, t);
            if x != 0 && x != v {
                self.out_live[x] += 1;
            }
        }
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        let start = 1;
        self.init_counts();
        self.visited[start] = true;
        self.path.push(start);
        self.next_symbol.push(0);
        let target = self.n - 1;
        loop {
            let depth = self.path.len();
            let u = self.path[depth - 1];
            if depth == target {
                let cls = self.class[u * self.sigma + start % self.sigma];
                if self.succ(u, start % self.sigma) == start && cls != 0 && !self.class_used[cls] {
                    return Ok(Some(self.path.clone()));
                }
            }
            let mut moved = false;
            if depth < target {
                while self.next_symbol[depth - 1] < self.sigma {
                    let s = self.next_symbol[depth - 1];
                    self.next_symbol[depth - 1] += 1;
                    let v = self.succ(u, s);
                    let arc = u * self.sigma + s;
                    let cls = self.class[arc];
                    if v == 0 || v == u || self.visited[v] || cls == 0 || self.class_used[cls] {
                        continue;
                    }
                    self.nodes += 1;
                    if self.nodes > self.budget {
                        return Ok(None);
                    }
                    self.visited[v] = true;
                    self.class_used[cls] = true;
                    let ok = self.advance(u, v);
                    self.path.push(v);
                    self.next_symbol.push(0);
                    if ok {
                        moved = true;
                        break;
                    }
                    self.undo_last();
                }
            }
            if moved {
                continue;
            }
            if self.path.len() == 1 {
                return Err(Error::SearchExhausted(format!(
                    "no avoiding cycle on G_{}_{}",
                    self.sigma,
                    self.k + 1
                )));
            }
            self.undo_last();
        }
    }

    fn undo_last(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.next_symbol.pop();
        let u = *self.path.last().expect("start remains");
        let s = v % self.sigma;
        self.class_used[self.class[u * self.sigma + s]] = false;
        self.visited[v] = false;
        self.retreat(u, v);
    }
}

fn cycles_from_word(
    sigma: usize,
    k: usize,
    group: TranslationGroup,
    word0: Vec<Symbol>,
    source: CycleSource,
) -> Result<AvoidingCycles> {
    let graph = build_de_bruijn_graph(sigma, k + 1)?;
    let words: Vec<Vec<Symbol>> = (0..sigma).map(|i| group.translate(&word0, i as Symbol)).collect();
    let cycles = words
        .iter()
        .map(|w| Circuit::from_word(&graph, w))
        .collect::<Result<Vec<_>>>()?;
    check_avoiding_cycles(&graph, &cycles)?;
    Ok(AvoidingCycles {
        graph,
        cycles,
        words,
        group,
        source,
    })
}

/// Search for avoiding cycles with an explicit node budget. Without
/// `allow_non_prime_power` the alphabet size must be a prime power, and the
/// search falls back to a maximal-period recurrence when the budget runs out.
pub fn find_avoiding_cycles_with(
    sigma: usize,
    k: usize,
    allow_non_prime_power: bool,
    budget: u64,
) -> Result<AvoidingCycles> {
    if k == 0 || sigma < 2 {
        return Err(Error::ParameterOutOfRange(format!("sigma = {sigma}, k = {k}")));
    }
    if sigma.checked_pow(k as u32 + 1).is_none_or(|m| m > ARC_LIMIT) {
        return Err(Error::ParameterOutOfRange(format!(
            "{sigma}^{} arcs exceed the size limit",
            k + 1
        )));
    }
    let group = match prime_power(sigma) {
        Some((p, m)) => TranslationGroup::Elementary { p, m },
        None if allow_non_prime_power => TranslationGroup::Cyclic { sigma },
        None => return Err(Error::NotPrimePower(sigma)),
    };
    let high = sigma.pow(k as u32 - 1);
    let mut search = Search::new(sigma, k, group, budget);
    match search.run() {
        Ok(Some(path)) => {
            let word0 = path.iter().map(|&v| (v / high) as Symbol).collect();
            cycles_from_word(sigma, k, group, word0, CycleSource::Search { nodes: search.nodes })
        }
        Ok(None) if matches!(group, TranslationGroup::Elementary { .. }) => {
            let (word0, coefficients) = m_sequence(group, k)?;
            let mut packed = [0u16; 8];
            for (slot, &c) in packed.iter_mut().zip(&coefficients) {
                *slot = c;
            }
            cycles_from_word(
                sigma,
                k,
                group,
                word0,
                CycleSource::MSequence {
                    coefficients: packed,
                    order: k,
                },
            )
        }
        Ok(None) => Err(Error::SearchExhausted(format!("node budget {budget} exhausted"))),
        Err(e) => Err(e),
    }
}

/// `sigma` arc-disjoint avoiding cycles on `G_{sigma,k+1}` for a prime power
/// `sigma`.
pub fn find_arc_disjoint_avoiding_cycles(sigma: usize, k: usize) -> Result<AvoidingCycles> {
    find_avoiding_cycles_with(sigma, k, false, DEFAULT_CYCLE_SEARCH_BUDGET)
}

/// Arithmetic in the field of order `p^m`, elements encoded as base-`p`
/// digit vectors (so addition agrees with [`TranslationGroup::Elementary`]).
struct Field {
    p: usize,
    m: u32,
    q: usize,
    modulus: Vec<usize>,
}

impl Field {
    fn new(p: usize, m: u32) -> Self {
        let q = p.pow(m);
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut coeffs = digits(low, p, m as usize);
                    coeffs.push(1);
                    coeffs
                })
                .find(|f| is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        Self { p, m, q, modulus }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        TranslationGroup::Elementary { p: self.p, m: self.m }.add(a as Symbol, b as Symbol) as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        if self.m == 1 {
            return a * b % self.p;
        }
        let m = self.m as usize;
        let (x, y) = (digits(a, self.p, m), digits(b, self.p, m));
        let mut prod = vec![0usize; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        for d in (m..prod.len()).rev() {
            let c = prod[d];
            if c != 0 {
                for (i, &f) in self.modulus.iter().enumerate() {
                    let idx = d - m + i;
                    prod[idx] = (prod[idx] + self.p * self.p - c * f % self.p) % self.p;
                }
            }
        }
        prod[..m].iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

/// Monic `f` (low-order coefficient first) over GF(p) has no monic factor of
/// degree 1..=deg/2.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[usize], g: &[usize], p: usize) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().expect("non-empty");
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * gi % p) % p;
        }
        r.pop();
    }
    r
}

/// Period-`q^k - 1` sequence of a linear recurrence of order k over GF(q),
/// found by trying feedback coefficients in order.
fn m_sequence(group: TranslationGroup, k: usize) -> Result<(Vec<Symbol>, Vec<u16>)> {
    let TranslationGroup::Elementary { p, m } = group else {
        return Err(Error::NotPrimePower(group.order()));
    };
    let field = Field::new(p, m);
    let q = field.q;
    let period = q.pow(k as u32) - 1;
    for code in 0..q.pow(k as u32) {
        let coeffs = digits(code, q, k);
        if coeffs[0] == 0 {
            continue;
        }
        let mut state = vec![0usize; k];
        state[k - 1] = 1;
        let initial = state.clone();
        let mut out = Vec::with_capacity(period);
        let mut len = 0;
        loop {
            out.push(state[0] as Symbol);
            let next = coeffs
                .iter()
                .zip(&state)
                .fold(0, |acc, (&c, &s)| field.add(acc, field.mul(c, s)));
            state.remove(0);
            state.push(next);
            len += 1;
            if state == initial || len > period {
                break;
            }
        }
        if len == period {
            return Ok((out, coeffs.iter().map(|&c| c as u16).collect()));
        }
    }
    Err(Error::SearchExhausted(format!(
        "no maximal recurrence over GF({q}) of order {k}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::euler::circuit_to_word;

    fn parse(s: &str, sigma: usize) -> Vec<Symbol> {
        Alphabet::numeric(sigma).unwrap().parse(s).unwrap()
    }

    const LISTED_CYCLES: [&str; 4] = [
        "011310221203323",
        "100201330312232",
        "233132003021101",
        "322023112130010",
    ];

    #[test]
    fn translation_groups() {
        let g = TranslationGroup::Elementary { p: 2, m: 2 };
        assert_eq!(g.add(1, 3), 2);
        assert_eq!(g.sub(1, 3), 2);
        let c = TranslationGroup::Cyclic { sigma: 6 };
        assert_eq!(c.add(4, 5), 3);
        assert_eq!(c.sub(1, 3), 4);
        let e = TranslationGroup::Elementary { p: 3, m: 2 };
        for a in 0..9 {
            assert_eq!(e.add(a, e.neg(a)), 0);
        }
    }

    #[test]
    fn listed_cycles_are_valid_and_translates() {
        let g = build_de_bruijn_graph(4, 3).unwrap();
        let words: Vec<Vec<Symbol>> = LISTED_CYCLES.iter().map(|s| parse(s, 4)).collect();
        let cycles: Vec<Circuit> = words.iter().map(|w| Circuit::from_word(&g, w).unwrap()).collect();
        check_avoiding_cycles(&g, &cycles).unwrap();
        let group = TranslationGroup::Elementary { p: 2, m: 2 };
        for (i, w) in words.iter().enumerate() {
            assert_eq!(&group.translate(&words[0], i as Symbol), w);
        }
    }

    #[test]
    fn found_cycles_validate() {
        for (sigma, k) in [(3, 2), (4, 2), (5, 2), (2, 2), (2, 3), (3, 3), (4, 1), (7, 2), (8, 1)] {
            let found = find_arc_disjoint_avoiding_cycles(sigma, k).unwrap();
            check_avoiding_cycles(&found.graph, &found.cycles).unwrap();
            assert_eq!(found.cycles.len(), sigma);
            assert!(found.words.iter().all(|w| w.len() == sigma.pow(k as u32) - 1));
        }
    }

    #[test]
    fn sigma_two_order_one_is_infeasible() {
        assert!(matches!(
            find_arc_disjoint_avoiding_cycles(2, 1),
            Err(Error::SearchExhausted(_))
        ));
    }

    #[test]
    fn non_prime_power_needs_flag() {
        assert_eq!(
            find_arc_disjoint_avoiding_cycles(6, 2).unwrap_err(),
            Error::NotPrimePower(6)
        );
        match find_avoiding_cycles_with(6, 1, true, 1_000_000) {
            Ok(found) => check_avoiding_cycles(&found.graph, &found.cycles).unwrap(),
            Err(e) => assert!(matches!(e, Error::SearchExhausted(_))),
        }
    }

    #[test]
    fn m_sequence_fallback_validates() {
        for (sigma, k) in [(4, 2), (3, 3), (8, 2), (9, 2), (5, 2)] {
            let found = find_avoiding_cycles_with(sigma, k, false, 0).unwrap();
            assert!(matches!(found.source, CycleSource::MSequence { .. }));
            check_avoiding_cycles(&found.graph, &found.cycles).unwrap();
        }
    }

    #[test]
    fn listed_b_circuits() {
        let g = build_de_bruijn_graph(4, 3).unwrap();
        let cycles: Vec<Circuit> = LISTED_CYCLES
            .iter()
            .map(|s| Circuit::from_word(&g, &parse(s, 4)).unwrap())
            .collect();
        let listed = ["01113102212033230133031223210002", "23331320030211012311213001032220"];
        let mut built = Vec::new();
        for (tau, want_word) in listed.iter().enumerate() {
            let c = build_b_circuit(&g, &cycles, tau, 2).unwrap();
            assert_eq!(c.len(), 32);
            let word = circuit_to_word(&g, &c).unwrap();
            let want = parse(want_word, 4);
            let rotations: Vec<Vec<Symbol>> = (0..32)
                .map(|r| word[r..].iter().chain(&word[..r]).copied().collect())
                .collect();
            assert!(rotations.contains(&want), "tau {tau}: {word:?}");
            let mut visits = vec![0; g.vertex_count()];
            for v in c.vertices(&g) {
                visits[v] += 1;
            }
            assert!(visits.iter().all(|&x| x == 2));
            built.push(c);
        }
        assert!(built[0].arcs().iter().all(|a| !built[1].arcs().contains(a)));
    }

    #[test]
    fn b_circuit_errors() {
        let found = find_arc_disjoint_avoiding_cycles(3, 2).unwrap();
        assert!(matches!(
            build_b_circuit(&found.graph, &found.cycles, 1, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(
            build_b_circuit(&found.graph, &found.cycles, 0, 1).unwrap_err(),
            Error::Disconnected
        );
        let c = build_b_circuit(&found.graph, &found.cycles, 0, 3).unwrap();
        assert_eq!(c.len(), 27);
        assert!(c.is_eulerian(&found.graph));
    }

    #[test]
    fn combine_examples() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        let a = Circuit::from_word(&g, &parse("012", 3)).unwrap();
        let b = Circuit::from_word(&g, &parse("021", 3)).unwrap();
        let fig8 = combine_closed_walks(&g, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(fig8.len(), 6);
        fig8.validate_closed_walk(&g).unwrap();
        let mut arcs: Vec<usize> = fig8.arcs().to_vec();
        arcs.sort_unstable();
        let mut want: Vec<usize> = a.arcs().iter().chain(b.arcs()).copied().collect();
        want.sort_unstable();
        assert_eq!(arcs, want);
        assert_eq!(combine_closed_walks(&g, std::slice::from_ref(&a)).unwrap(), a);
        let l0 = Circuit::new(vec![g.arc_by_word(&[0, 0]).unwrap()]);
        let l1 = Circuit::new(vec![g.arc_by_word(&[1, 1]).unwrap()]);
        assert_eq!(combine_closed_walks(&g, &[l0, l1]).unwrap_err(), Error::Disconnected);
        assert!(combine_closed_walks(&g, &[]).is_err());
    }
}
