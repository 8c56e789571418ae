use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::alphabet::{canonical_rotation, Symbol};
use crate::error::{Error, Result};
use crate::graph::{build_de_bruijn_graph, ArcId, DirectedMultigraph, VertexId};

pub const DEFAULT_ENUMERATION_GUARD: u64 = 100_000;
pub const DEFAULT_SEARCH_GUARD: u64 = 50_000_000;

/// All de Bruijn words with respect to the language whose graph is `g`
/// (one per Eulerian circuit), as canonical rotations in sorted order.
/// Fails once more than `guard` circuits are found.
pub fn enumerate_db_words(g: &DirectedMultigraph, guard: u64) -> Result<Vec<Vec<Symbol>>> {
    if g.arc_count() == 0 {
        return Ok(Vec::new());
    }
    let firsts: Vec<Symbol> = (0..g.arc_count())
        .map(|a| g.arc_word(a).map(|w| w[0]).ok_or(Error::NoWordLabels))
        .collect::<Result<_>>()?;
    struct State<'a> {
        g: &'a DirectedMultigraph,
        used: Vec<bool>,
        path: Vec<ArcId>,
        start: VertexId,
        found: BTreeSet<Vec<Symbol>>,
        circuits: u64,
        guard: u64,
        firsts: &'a [Symbol],
    }
    fn go(s: &mut State, v: VertexId) -> Result<()> {
        if s.path.len() == s.g.arc_count() {
            if v == s.start {
                s.circuits += 1;
                if s.circuits > s.guard {
                    return Err(Error::GuardExceeded { guard: s.guard });
                }
                let word: Vec<Symbol> = s.path.iter().map(|&a| s.firsts[a]).collect();
                s.found.insert(canonical_rotation(&word));
            }
            return Ok(());
        }
        for i in 0..s.g.out_arcs(v).len() {
            let a = s.g.out_arcs(v)[i];
            if !s.used[a] {
                s.used[a] = true;
                s.path.push(a);
                go(s, s.g.arc(a).head)?;
                s.path.pop();
                s.used[a] = false;
            }
        }
        Ok(())
    }
    let mut s = State {
        g,
        used: vec![false; g.arc_count()],
        path: vec![0],
        start: g.arc(0).tail,
        found: BTreeSet::new(),
        circuits: 0,
        guard,
        firsts: &firsts,
    };
    s.used[0] = true;
    go(&mut s, g.arc(0).head)?;
    Ok(s.found.into_iter().collect())
}

pub fn enumerate_de_bruijn_words(sigma: usize, k: usize, guard: u64) -> Result<Vec<Vec<Symbol>>> {
    enumerate_db_words(&build_de_bruijn_graph(sigma, k)?, guard)
}

/// Exact maximum size of an ell-orthogonal collection of distinct
/// (sigma,k)-de Bruijn words, with one collection attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalSearch {
    pub value: usize,
    pub witness: Vec<Vec<Symbol>>,
    pub nodes: u64,
}

fn permutations(n: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    let mut cur: Vec<Symbol> = (0..n as Symbol).collect();
    fn heap(k: usize, cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

struct Search<'a> {
    masks: &'a [u64],
    stride: usize,
    windows: &'a [Vec<usize>],
    ell: u8,
    counts: Vec<u8>,
    saturated: Vec<u64>,
    chosen: Vec<usize>,
    nodes: u64,
    guard: u64,
}

impl Search<'_> {
    fn admissible(&self, w: usize) -> bool {
        let m = &self.masks[w * self.stride..(w + 1) * self.stride];
        m.iter().zip(&self.saturated).all(|(a, b)| a & b == 0)
    }

    fn add(&mut self, w: usize) {
        for &x in &self.windows[w] {
            self.counts[x] += 1;
            if self.counts[x] == self.ell {
                self.saturated[x / 64] |= 1 << (x % 64);
            }
        }
        self.chosen.push(w);
    }

    fn remove(&mut self, w: usize) {
        for &x in &self.windows[w] {
            if self.counts[x] == self.ell {
                self.saturated[x / 64] &= !(1 << (x % 64));
            }
            self.counts[x] -= 1;
        }
        self.chosen.pop();
    }

    fn extend(&mut self, candidates: &[usize], need: usize) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.guard {
            return Err(Error::GuardExceeded { guard: self.guard });
        }
        for (pos, &w) in candidates.iter().enumerate() {
            if candidates.len() - pos < need {
                break;
            }
            self.add(w);
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&x| self.admissible(x))
                .collect();
            if next.len() + 1 >= need && self.extend(&next, need - 1)? {
                return Ok(true);
            }
            self.remove(w);
        }
        Ok(false)
    }
}

/// Exhaustive search for the largest ell-orthogonal collection of distinct
/// (sigma,k)-de Bruijn words. Targets are tried from `ell*(sigma-1)` down;
/// the first member ranges over orbit representatives under symbol
/// permutations and reversal. `guard` bounds the number of search nodes.
pub fn exact_max_orthogonal(sigma: usize, k: usize, ell: usize, guard: u64) -> Result<OrthogonalSearch> {
    if sigma < 2 || k == 0 || ell == 0 || ell > u8::MAX as usize {
        return Err(Error::ParameterOutOfRange(format!("({sigma},{k},{ell})")));
    }
    if sigma > 6 {
        return Err(Error::GuardExceeded { guard });
    }
    let words = enumerate_de_bruijn_words(sigma, k, DEFAULT_ENUMERATION_GUARD)?;
    let n = k + 1;
    let total_windows = sigma.pow(n as u32);
    let stride = total_windows.div_ceil(64);
    let windows: Vec<Vec<usize>> = words
        .iter()
        .map(|w| {
            (0..w.len())
                .map(|i| (0..n).fold(0, |acc, j| acc * sigma + w[(i + j) % w.len()] as usize))
                .collect()
        })
        .collect();
    let mut masks = vec![0u64; words.len() * stride];
    for (i, ws) in windows.iter().enumerate() {
        for &x in ws {
            masks[i * stride + x / 64] |= 1 << (x % 64);
        }
    }

    let index: HashMap<&[Symbol], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let perms = permutations(sigma);
    let mut reps = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let mut is_rep = true;
        'orbit: for p in &perms {
            let mapped: Vec<Symbol> = w.iter().map(|&s| p[s as usize]).collect();
            let mut reversed = mapped.clone();
            reversed.reverse();
            for image in [mapped, reversed] {
                if index[canonical_rotation(&image).as_slice()] < i {
                    is_rep = false;
                    break 'orbit;
                }
            }
        }
        if is_rep {
            reps.push(i);
        }
    }

    let upper = (ell * (sigma - 1)).min(words.len());
    let mut search = Search {
        masks: &masks,
        stride,
        windows: &windows,
        ell: ell as u8,
        counts: vec![0; total_windows],
        saturated: vec![0; stride],
        chosen: Vec::new(),
        nodes: 0,
        guard,
    };
    for target in (1..=upper).rev() {
        for &r in &reps {
            search.add(r);
            let candidates: Vec<usize> = (0..words.len()).filter(|&x| x != r && search.admissible(x)).collect();
            if search.extend(&candidates, target - 1)? {
                let witness = search.chosen.iter().map(|&i| words[i].clone()).collect();
                return Ok(OrthogonalSearch {
                    value: target,
                    witness,
                    nodes: search.nodes,
                });
            }
            search.remove(r);
        }
    }
    Ok(OrthogonalSearch {
        value: 0,
        witness: Vec::new(),
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{are_distinct, is_de_bruijn, is_l_orthogonal};

    #[test]
    fn de_bruijn_word_counts() {
        assert_eq!(enumerate_de_bruijn_words(2, 3, 1000).unwrap().len(), 2);
        assert_eq!(enumerate_de_bruijn_words(2, 1, 1000).unwrap(), vec![vec![0, 1]]);
        assert_eq!(enumerate_de_bruijn_words(3, 2, 1000).unwrap().len(), 24);
        assert_eq!(enumerate_de_bruijn_words(2, 4, 1000).unwrap().len(), 16);
    }

    #[test]
    fn guard_is_enforced() {
        assert_eq!(
            enumerate_de_bruijn_words(3, 2, 10),
            Err(Error::GuardExceeded { guard: 10 })
        );
    }

    #[test]
    fn enumerated_words_are_de_bruijn_and_distinct() {
        let words = enumerate_de_bruijn_words(3, 2, 1000).unwrap();
        assert!(words.iter().all(|w| is_de_bruijn(w, 3, 2).holds));
        assert!(are_distinct(&words).holds);
    }

    #[test]
    fn relabeling_preserves_enumeration() {
        let words = enumerate_de_bruijn_words(3, 2, 1000).unwrap();
        let relabeled: BTreeSet<Vec<Symbol>> = words
            .iter()
            .map(|w| canonical_rotation(&w.iter().map(|&s| (s + 1) % 3).collect::<Vec<_>>()))
            .collect();
        assert_eq!(relabeled.into_iter().collect::<Vec<_>>(), words);
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(4).len(), 24);
        let set: BTreeSet<_> = permutations(4).into_iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn max_orthogonal_small_instances() {
        let r = exact_max_orthogonal(3, 2, 1, DEFAULT_SEARCH_GUARD).unwrap();
        assert_eq!(r.value, 2);
        assert!(is_l_orthogonal(&r.witness, 2, 1).holds);
        let r = exact_max_orthogonal(3, 2, 2, DEFAULT_SEARCH_GUARD).unwrap();
        assert_eq!(r.value, 4);
        assert!(is_l_orthogonal(&r.witness, 2, 2).holds);
        assert!(are_distinct(&r.witness).holds);
    }
}
