use super::certify::certify_compatible_language;
use super::orthogonal::assemble;
use super::{ConstructionResult, Family, Params, Provenance};
use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::euler::{
    circuit_to_word, find_eulerian_circuit, merge_circuit, rewire_vertex_set, split_vertices, Circuit, Wiring,
};
use crate::graph::{build_restricted_graph, expand_language, DirectedMultigraph, LanguageSpec, VertexId};

/// At `v`, pair the in-arc whose word starts with `symbols[i]` with the
/// out-arc whose word ends with `symbols[(i + shift) mod |symbols|]`.
fn shift_wiring(g: &DirectedMultigraph, v: VertexId, symbols: &[Symbol], shift: usize) -> Result<Wiring> {
    let m = symbols.len();
    if g.in_degree(v) != m || g.out_degree(v) != m {
        return Err(Error::IncompleteWiring { vertex: v });
    }
    let first = |a: usize| g.arc_word(a).map(|w| w[0]);
    let last = |a: usize| g.arc_word(a).and_then(|w| w.last().copied());
    let mut pairs = Vec::with_capacity(m);
    for (i, &s) in symbols.iter().enumerate() {
        let t = symbols[(i + shift) % m];
        let inc = g.in_arcs(v).iter().copied().find(|&a| first(a) == Some(s));
        let out = g.out_arcs(v).iter().copied().find(|&a| last(a) == Some(t));
        match (inc, out) {
            (Some(a), Some(b)) => pairs.push((a, b)),
            _ => return Err(Error::IncompleteWiring { vertex: v }),
        }
    }
    Ok(Wiring::new(v, pairs))
}

/// Vertices split along a shift of a symbol set.
struct SplitRule<'a> {
    vertices: Vec<VertexId>,
    symbols: &'a [Symbol],
    label: String,
}

fn vertices_of_weight(g: &DirectedMultigraph, alphabet: &Alphabet, weight: usize) -> Result<Vec<VertexId>> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let word = g.vertex(v).word().ok_or(Error::NoWordLabels)?;
        if alphabet.weight(word)? == weight {
            out.push(v);
        }
    }
    Ok(out)
}

/// `count` pairwise compatible Eulerian circuits: circuit `j` is an Eulerian
/// circuit of the graph split along shift `j` at the vertices of every rule,
/// then rewired at `rest` to avoid the transitions of circuits `0..j`.
fn split_and_rewire(
    g: &DirectedMultigraph,
    rules: &[SplitRule<'_>],
    rest: &[VertexId],
    count: usize,
) -> Result<(Vec<Circuit>, Vec<Provenance>)> {
    let mut circuits: Vec<Circuit> = Vec::with_capacity(count);
    let mut provenance = Vec::with_capacity(count);
    for j in 0..count {
        let mut wirings = Vec::new();
        for rule in rules {
            for &v in &rule.vertices {
                wirings.push(shift_wiring(g, v, rule.symbols, j)?);
            }
        }
        let split = split_vertices(g, &wirings)?;
        let euler = find_eulerian_circuit(&split.graph)?;
        let merged = merge_circuit(g, &split, &euler)?;
        let c = rewire_vertex_set(g, rest, &merged, &circuits)?;
        let split_desc: Vec<String> = rules.iter().map(|r| format!("{} by shift {j}", r.label)).collect();
        let given = if j == 0 {
            String::new()
        } else {
            format!(" given C[0..{j}]")
        };
        provenance.push(Provenance::new(
            format!("C[{j}]"),
            format!(
                "split {}; Eulerian circuit; merge; rewire remaining vertices{given}",
                split_desc.join(", ")
            ),
        ));
        circuits.push(c);
    }
    Ok((circuits, provenance))
}

fn weighted_sets(alphabet: &Alphabet) -> Result<(Vec<Symbol>, Vec<Symbol>)> {
    if !alphabet.has_weighted_subset() {
        return Err(Error::MissingWeightedSubset);
    }
    Ok((alphabet.weighted_symbols()?, alphabet.unweighted_symbols()?))
}

const LANGUAGE_LIMIT: usize = 1 << 20;

fn check_language_size(alphabet: &Alphabet, k: usize) -> Result<()> {
    if alphabet
        .sigma()
        .checked_pow(k as u32)
        .is_none_or(|m| m > LANGUAGE_LIMIT)
    {
        return Err(Error::ParameterOutOfRange(format!(
            "{}^{k} words exceed the size limit",
            alphabet.sigma()
        )));
    }
    Ok(())
}

/// `min(|W|, |X|)` pairwise compatible Eulerian circuits of the graph of
/// words whose weight is `w-1` or `w`, where `W` is the weighted subset of
/// `alphabet` and `X` its complement.
pub fn construct_fixed_weight_orthogonal_db(alphabet: &Alphabet, k: usize, w: usize) -> Result<ConstructionResult> {
    let (ws, xs) = weighted_sets(alphabet)?;
    if k < 2 || w == 0 || w > k {
        return Err(Error::ParameterOutOfRange(format!(
            "need k >= 2 and 1 <= w <= k (k = {k}, w = {w})"
        )));
    }
    if ws.is_empty() || xs.is_empty() {
        return Err(Error::ParameterOutOfRange(
            "weighted and unweighted sets must be nonempty".into(),
        ));
    }
    check_language_size(alphabet, k)?;
    let language = expand_language(&LanguageSpec::weight_band(k, w - 1, w), alphabet)?;
    let g = build_restricted_graph(alphabet.sigma(), &language)?;
    let count = ws.len().min(xs.len());
    let mut rules = Vec::new();
    if w >= 2 {
        rules.push(SplitRule {
            vertices: vertices_of_weight(&g, alphabet, w - 2)?,
            symbols: &ws,
            label: format!("weight-{} vertices", w - 2),
        });
    }
    rules.push(SplitRule {
        vertices: vertices_of_weight(&g, alphabet, w)?,
        symbols: &xs,
        label: format!("weight-{w} vertices"),
    });
    let rest = vertices_of_weight(&g, alphabet, w - 1)?;
    let (circuits, provenance) = split_and_rewire(&g, &rules, &rest, count)?;
    let words = circuits
        .iter()
        .map(|c| circuit_to_word(&g, c))
        .collect::<Result<Vec<_>>>()?;
    let certificate = certify_compatible_language(&g, &circuits, &words, count, &language, k)?;
    let params = Params {
        sigma: alphabet.sigma(),
        k,
        w_min: Some(w - 1),
        w_max: Some(w),
        ..Params::default()
    };
    Ok(assemble(
        Family::FixedWeightDeBruijn,
        &g,
        alphabet.clone(),
        params,
        circuits,
        words,
        provenance,
        certificate,
    ))
}

/// Whether Kautz words of length k with weight in `[w_min, w_max]` admit a
/// fixed-weight Kautz sequence (for any `|W|, |X| >= 2`).
pub fn fixed_weight_kautz_exists(k: usize, w_min: usize, w_max: usize) -> bool {
    if w_min > w_max || w_max > k {
        return false;
    }
    (w_min == 0 && w_max == 0) || (w_min == k && w_max == k) || (w_min <= 1 && (w_max == k || w_max + 1 == k))
}

/// Number of compatible circuits the construction yields for the given
/// sizes of `W` and `X`, or `None` for an unsupported weight band.
pub fn fixed_weight_kautz_count(w_size: usize, x_size: usize, k: usize, w_min: usize, w_max: usize) -> Option<usize> {
    if w_size < 2 || x_size < 2 || k < 2 {
        return None;
    }
    let half = (w_size + x_size - 1) / 2;
    match (w_min, w_max) {
        (1, m) if m + 1 == k => Some(w_size.min(x_size).min(half)),
        (0, m) if m + 1 == k => Some(x_size.min(half)),
        (1, m) if m == k => Some(w_size.min(half)),
        _ => None,
    }
}

/// Pairwise compatible fixed-weight Kautz sequences for the weight bands
/// `[1, k-1]`, `[0, k-1]` and `[1, k]`.
pub fn construct_fixed_weight_kautz_orthogonal(
    alphabet: &Alphabet,
    k: usize,
    w_min: usize,
    w_max: usize,
) -> Result<ConstructionResult> {
    let (ws, xs) = weighted_sets(alphabet)?;
    if ws.len() < 2 || xs.len() < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need |W| >= 2 and |X| >= 2 (got {} and {})",
            ws.len(),
            xs.len()
        )));
    }
    if k < 2 {
        return Err(Error::ParameterOutOfRange(format!("Kautz order k = {k} is below 2")));
    }
    let count = fixed_weight_kautz_count(ws.len(), xs.len(), k, w_min, w_max)
        .ok_or_else(|| Error::UnsupportedCase(format!("weight band [{w_min}, {w_max}] with k = {k}")))?;
    check_language_size(alphabet, k)?;
    let language = expand_language(&LanguageSpec::kautz_weight_band(k, w_min, w_max), alphabet)?;
    let g = build_restricted_graph(alphabet.sigma(), &language)?;
    let low = vertices_of_weight(&g, alphabet, 0)?;
    let high = vertices_of_weight(&g, alphabet, k - 1)?;
    let mut rules = Vec::new();
    let mut split: Vec<VertexId> = Vec::new();
    if w_min == 1 {
        split.extend(&low);
        rules.push(SplitRule {
            vertices: low,
            symbols: &ws,
            label: "weight-0 vertices".into(),
        });
    }
    if w_max + 1 == k {
        split.extend(&high);
        rules.push(SplitRule {
            vertices: high,
            symbols: &xs,
            label: format!("weight-{} vertices", k - 1),
        });
    }
    let rest: Vec<VertexId> = (0..g.vertex_count()).filter(|v| !split.contains(v)).collect();
    let (circuits, provenance) = split_and_rewire(&g, &rules, &rest, count)?;
    let words = circuits
        .iter()
        .map(|c| circuit_to_word(&g, c))
        .collect::<Result<Vec<_>>>()?;
    let certificate = certify_compatible_language(&g, &circuits, &words, count, &language, k)?;
    let params = Params {
        sigma: alphabet.sigma(),
        k,
        w_min: Some(w_min),
        w_max: Some(w_max),
        ..Params::default()
    };
    Ok(assemble(
        Family::FixedWeightKautz,
        &g,
        alphabet.clone(),
        params,
        circuits,
        words,
        provenance,
        certificate,
    ))
}
