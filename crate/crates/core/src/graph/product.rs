use super::{build_de_bruijn_graph, Arc, ArcId, ArcLabel, DirectedMultigraph, VertexId, VertexLabel};
use crate::alphabet::Symbol;
use crate::error::{Error, Result};

/// Tensor product `G1 x G2`. Vertex `(v1, v2)` has id `v1 * |V2| + v2` and
/// arc `(a1, a2)` has id `a1 * |A2| + a2`.
pub fn tensor_product(g1: &DirectedMultigraph, g2: &DirectedMultigraph) -> Result<DirectedMultigraph> {
    if g1.vertex_count() == 0 || g2.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n2 = g2.vertex_count();
    let vertices = (0..g1.vertex_count())
        .flat_map(|v1| (0..n2).map(move |v2| VertexLabel::Pair(v1, v2)))
        .collect();
    let mut arcs = Vec::with_capacity(g1.arc_count() * g2.arc_count());
    for (a1, e) in g1.arcs().iter().enumerate() {
        for (a2, f) in g2.arcs().iter().enumerate() {
            arcs.push(Arc {
                tail: e.tail * n2 + f.tail,
                head: e.head * n2 + f.head,
                label: ArcLabel::Pair(a1, a2),
            });
        }
    }
    DirectedMultigraph::from_parts(
        format!("{} x {}", g1.name(), g2.name()),
        g1.sigma() * g2.sigma(),
        vertices,
        arcs,
    )
}

/// The symbol-wise map `s -> (s div sigma2, s mod sigma2)` from a word graph
/// over `sigma1 * sigma2` symbols onto the product of the factor graphs.
#[derive(Clone, Debug)]
pub struct DigitIsomorphism {
    sigma1: usize,
    sigma2: usize,
    vertex_map: Vec<VertexId>,
    vertex_inv: Vec<VertexId>,
    arc_map: Vec<ArcId>,
    arc_inv: Vec<ArcId>,
}

impl DigitIsomorphism {
    pub fn split_symbol(sigma2: usize, s: Symbol) -> (Symbol, Symbol) {
        let s = s as usize;
        ((s / sigma2) as Symbol, (s % sigma2) as Symbol)
    }

    pub fn join_symbol(sigma2: usize, q: Symbol, r: Symbol) -> Symbol {
        (q as usize * sigma2 + r as usize) as Symbol
    }

    pub fn split_word(sigma2: usize, w: &[Symbol]) -> (Vec<Symbol>, Vec<Symbol>) {
        w.iter().map(|&s| Self::split_symbol(sigma2, s)).unzip()
    }

    /// Build the vertex and arc bijections between `combined` and the product
    /// of `g1` and `g2` (ids as produced by [`tensor_product`]).
    pub fn between(combined: &DirectedMultigraph, g1: &DirectedMultigraph, g2: &DirectedMultigraph) -> Result<Self> {
        let (sigma1, sigma2) = (g1.sigma(), g2.sigma());
        if combined.sigma() != sigma1 * sigma2 {
            return Err(Error::ParameterOutOfRange(format!(
                "combined alphabet {} != {sigma1} * {sigma2}",
                combined.sigma()
            )));
        }
        if combined.vertex_count() != g1.vertex_count() * g2.vertex_count()
            || combined.arc_count() != g1.arc_count() * g2.arc_count()
        {
            return Err(Error::ParameterOutOfRange("graph sizes do not factor".into()));
        }
        let n2 = g2.vertex_count();
        let m2 = g2.arc_count();
        let mut vertex_map = vec![0; combined.vertex_count()];
        let mut vertex_inv = vec![usize::MAX; combined.vertex_count()];
        for (v, label) in combined.vertices().iter().enumerate() {
            let word = label.word().ok_or(Error::NoWordLabels)?;
            let (q, r) = Self::split_word(sigma2, word);
            let v1 = g1.vertex_by_word(&q).ok_or(Error::NoWordLabels)?;
            let v2 = g2.vertex_by_word(&r).ok_or(Error::NoWordLabels)?;
            let p = v1 * n2 + v2;
            vertex_map[v] = p;
            vertex_inv[p] = v;
        }
        let mut arc_map = vec![0; combined.arc_count()];
        let mut arc_inv = vec![usize::MAX; combined.arc_count()];
        for (a, slot) in arc_map.iter_mut().enumerate() {
            let word = combined.arc_word(a).ok_or(Error::NoWordLabels)?;
            let (q, r) = Self::split_word(sigma2, &word);
            let a1 = g1.arc_by_word(&q).ok_or(Error::NoWordLabels)?;
            let a2 = g2.arc_by_word(&r).ok_or(Error::NoWordLabels)?;
            let p = a1 * m2 + a2;
            *slot = p;
            arc_inv[p] = a;
        }
        if vertex_inv.contains(&usize::MAX) || arc_inv.contains(&usize::MAX) {
            return Err(Error::ParameterOutOfRange("digit map is not onto".into()));
        }
        Ok(Self {
            sigma1,
            sigma2,
            vertex_map,
            vertex_inv,
            arc_map,
            arc_inv,
        })
    }

    pub fn sigmas(&self) -> (usize, usize) {
        (self.sigma1, self.sigma2)
    }

    pub fn vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }

    pub fn vertex_inverse(&self, p: VertexId) -> VertexId {
        self.vertex_inv[p]
    }

    pub fn arc(&self, a: ArcId) -> ArcId {
        self.arc_map[a]
    }

    pub fn arc_inverse(&self, p: ArcId) -> ArcId {
        self.arc_inv[p]
    }
}

/// Digit isomorphism `G_{sigma1*sigma2,k} -> G_{sigma1,k} x G_{sigma2,k}`.
pub fn de_bruijn_digit_isomorphism(sigma1: usize, sigma2: usize, k: usize) -> Result<DigitIsomorphism> {
    let combined = build_de_bruijn_graph(sigma1 * sigma2, k)?;
    let g1 = build_de_bruijn_graph(sigma1, k)?;
    let g2 = build_de_bruijn_graph(sigma2, k)?;
    DigitIsomorphism::between(&combined, &g1, &g2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_sizes() {
        let g1 = build_de_bruijn_graph(4, 3).unwrap();
        let g2 = build_de_bruijn_graph(3, 3).unwrap();
        let p = tensor_product(&g1, &g2).unwrap();
        assert_eq!(p.vertex_count(), 144);
        assert_eq!(p.arc_count(), 1728);
    }

    #[test]
    fn product_multiplicity_is_product_of_counts() {
        let g1 = build_de_bruijn_graph(2, 1).unwrap();
        let g2 = build_de_bruijn_graph(2, 2).unwrap();
        let p = tensor_product(&g1, &g2).unwrap();
        for u1 in 0..g1.vertex_count() {
            for u2 in 0..g2.vertex_count() {
                for w1 in 0..g1.vertex_count() {
                    for w2 in 0..g2.vertex_count() {
                        let expect = g1.arcs_between(u1, w1).len() * g2.arcs_between(u2, w2).len();
                        let got = p.arcs_between(u1 * 2 + u2, w1 * 2 + w2).len();
                        assert_eq!(got, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn digit_symbol_map() {
        assert_eq!(DigitIsomorphism::split_symbol(3, 11), (3, 2));
        assert_eq!(DigitIsomorphism::split_symbol(3, 0), (0, 0));
        assert_eq!(DigitIsomorphism::join_symbol(3, 3, 2), 11);
    }

    #[test]
    fn digit_isomorphism_preserves_arcs() {
        let combined = build_de_bruijn_graph(12, 3).unwrap();
        let g1 = build_de_bruijn_graph(4, 3).unwrap();
        let g2 = build_de_bruijn_graph(3, 3).unwrap();
        let product = tensor_product(&g1, &g2).unwrap();
        let iso = DigitIsomorphism::between(&combined, &g1, &g2).unwrap();
        for (a, arc) in combined.arcs().iter().enumerate() {
            let p = product.arc(iso.arc(a));
            assert_eq!(p.tail, iso.vertex(arc.tail));
            assert_eq!(p.head, iso.vertex(arc.head));
            assert_eq!(iso.arc_inverse(iso.arc(a)), a);
        }
        for (p, arc) in product.arcs().iter().enumerate() {
            let a = combined.arc(iso.arc_inverse(p));
            assert_eq!(a.tail, iso.vertex_inverse(arc.tail));
            assert_eq!(a.head, iso.vertex_inverse(arc.head));
        }
        for v in 0..combined.vertex_count() {
            assert_eq!(iso.vertex_inverse(iso.vertex(v)), v);
        }
    }
}
