use super::certify::certify_l_orthogonal;
use super::{ConstructionResult, Family, Params, Provenance};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::euler::{
    circuit_to_word, find_eulerian_circuit, rewire_vertex_set, rewire_vertex_set_unconditioned, Circuit,
};
use crate::graph::{build_de_bruijn_graph, build_kautz_graph, DirectedMultigraph, VertexId};

/// Split the vertex ids into `ell` consecutive blocks of near-equal size;
/// block `g` holds ids `[g*n/ell, (g+1)*n/ell)`.
pub fn partition_vertices(g: &DirectedMultigraph, ell: usize) -> Result<Vec<Vec<VertexId>>> {
    let n = g.vertex_count();
    if ell == 0 || ell > n {
        return Err(Error::ParameterOutOfRange(format!(
            "cannot split {n} vertices into {ell} groups"
        )));
    }
    Ok((0..ell).map(|i| (i * n / ell..(i + 1) * n / ell).collect()).collect())
}

fn group_rule(group: usize, base: &str, given: &[usize]) -> String {
    if given.is_empty() {
        return format!("rewire group {group} of {base}");
    }
    let names: Vec<String> = given.iter().map(|i| format!("C[{i},1]")).collect();
    format!("rewire group {group} of {base} given {}", names.join(", "))
}

/// Rows of the rewiring grid on a graph of uniform degree `degree`.
///
/// Row 1 starts from an Eulerian circuit; each later entry of a row rewires
/// the previous group of the entry before it, and the first entry of a row
/// rewires the last group of the previous row's last entry. With degree at
/// least 4 there are `degree/2` rows, and each rewiring avoids the first
/// entries of the rows so far (the final row skips row 1). With degree 3
/// there are two rows and each rewiring only avoids the current wiring.
pub fn l_orthogonal_rows(g: &DirectedMultigraph, degree: usize, ell: usize) -> Result<(Vec<Circuit>, Vec<Provenance>)> {
    if degree < 3 {
        return Err(Error::ParameterOutOfRange(format!("degree {degree} is below 3")));
    }
    let groups = partition_vertices(g, ell)?;
    let conditioned = degree >= 4;
    let rows = if conditioned { degree / 2 } else { 2 };
    let mut circuits: Vec<Circuit> = Vec::with_capacity(rows * ell);
    let mut provenance = Vec::with_capacity(rows * ell);
    let mut firsts: Vec<Circuit> = Vec::with_capacity(rows);
    for i in 0..rows {
        let (first, rule) = if i == 0 {
            (find_eulerian_circuit(g)?, "Eulerian circuit".to_string())
        } else {
            let prev = &circuits[circuits.len() - 1];
            let base = format!("C[{i},{ell}]");
            if conditioned {
                let c = rewire_vertex_set(g, &groups[ell - 1], prev, &firsts)?;
                (c, group_rule(ell, &base, &(1..=i).collect::<Vec<_>>()))
            } else {
                let c = rewire_vertex_set_unconditioned(g, &groups[ell - 1], prev)?;
                (c, group_rule(ell, &base, &[]))
            }
        };
        firsts.push(first.clone());
        circuits.push(first);
        provenance.push(Provenance::new(format!("C[{},1]", i + 1), rule));
        let given: Vec<usize> = if i + 1 < rows || i == 0 {
            (0..=i).collect()
        } else {
            (1..=i).collect()
        };
        let given_circuits: Vec<Circuit> = given.iter().map(|&x| firsts[x].clone()).collect();
        for j in 1..ell {
            let prev = &circuits[circuits.len() - 1];
            let base = format!("C[{},{}]", i + 1, j);
            let (c, rule) = if conditioned {
                let names: Vec<usize> = given.iter().map(|x| x + 1).collect();
                (
                    rewire_vertex_set(g, &groups[j - 1], prev, &given_circuits)?,
                    group_rule(j, &base, &names),
                )
            } else {
                (
                    rewire_vertex_set_unconditioned(g, &groups[j - 1], prev)?,
                    group_rule(j, &base, &[]),
                )
            };
            circuits.push(c);
            provenance.push(Provenance::new(format!("C[{},{}]", i + 1, j + 1), rule));
        }
    }
    Ok((circuits, provenance))
}

const ARC_LIMIT: usize = 1 << 20;

/// `ell * K` Eulerian circuits of the de Bruijn graph of order k over
/// `sigma >= 3` symbols in which every (k+1)-window occurs at most `ell`
/// times; `K = sigma/2` for `sigma >= 4` and `K = 2` for `sigma = 3`.
pub fn construct_l_orthogonal_de_bruijn(sigma: usize, k: usize, ell: usize) -> Result<ConstructionResult> {
    if sigma < 3 || k == 0 {
        return Err(Error::ParameterOutOfRange(format!("sigma = {sigma}, k = {k}")));
    }
    if sigma.checked_pow(k as u32).is_none_or(|m| m > ARC_LIMIT) {
        return Err(Error::ParameterOutOfRange(format!(
            "{sigma}^{k} arcs exceed the size limit"
        )));
    }
    let vertices = sigma.pow(k as u32 - 1);
    if ell == 0 || ell > vertices {
        return Err(Error::ParameterOutOfRange(format!(
            "ell = {ell} must lie in [1, {vertices}]"
        )));
    }
    let g = build_de_bruijn_graph(sigma, k)?;
    let (circuits, provenance) = l_orthogonal_rows(&g, sigma, ell)?;
    let words = circuits
        .iter()
        .map(|c| circuit_to_word(&g, c))
        .collect::<Result<Vec<_>>>()?;
    let rows = if sigma >= 4 { sigma / 2 } else { 2 };
    let certificate = certify_l_orthogonal(&g, &circuits, &words, rows * ell, sigma, k, ell, false)?;
    let params = Params {
        sigma,
        k,
        ell: Some(ell),
        ..Params::default()
    };
    Ok(assemble(
        Family::OrthogonalDeBruijn,
        &g,
        Alphabet::numeric(sigma)?,
        params,
        circuits,
        words,
        provenance,
        certificate,
    ))
}

/// `ell * K'` Eulerian circuits of the Kautz graph of order k over
/// `sigma >= 4` symbols with every (k+1)-window used at most `ell` times;
/// `K' = max(2, (sigma-1)/2)`.
pub fn construct_l_orthogonal_kautz(sigma: usize, k: usize, ell: usize) -> Result<ConstructionResult> {
    if sigma < 4 || k < 2 {
        return Err(Error::ParameterOutOfRange(format!("sigma = {sigma}, k = {k}")));
    }
    let arcs = (sigma - 1).checked_pow(k as u32 - 1).and_then(|m| m.checked_mul(sigma));
    if arcs.is_none_or(|m| m > ARC_LIMIT) {
        return Err(Error::ParameterOutOfRange("Kautz graph exceeds the size limit".into()));
    }
    let vertices = sigma * (sigma - 1).pow(k as u32 - 2);
    if ell == 0 || ell > vertices {
        return Err(Error::ParameterOutOfRange(format!(
            "ell = {ell} must lie in [1, {vertices}]"
        )));
    }
    let g = build_kautz_graph(sigma, k)?;
    let degree = sigma - 1;
    let (circuits, provenance) = l_orthogonal_rows(&g, degree, ell)?;
    let words = circuits
        .iter()
        .map(|c| circuit_to_word(&g, c))
        .collect::<Result<Vec<_>>>()?;
    let rows = if degree >= 4 { degree / 2 } else { 2 };
    let certificate = certify_l_orthogonal(&g, &circuits, &words, rows * ell, sigma, k, ell, true)?;
    let alphabet = if sigma == 4 {
        Alphabet::dna()
    } else {
        Alphabet::numeric(sigma)?
    };
    let params = Params {
        sigma,
        k,
        ell: Some(ell),
        ..Params::default()
    };
    Ok(assemble(
        Family::OrthogonalKautz,
        &g,
        alphabet,
        params,
        circuits,
        words,
        provenance,
        certificate,
    ))
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble(
    family: Family,
    g: &DirectedMultigraph,
    alphabet: Alphabet,
    params: Params,
    circuits: Vec<Circuit>,
    words: Vec<Vec<crate::alphabet::Symbol>>,
    provenance: Vec<Provenance>,
    certificate: super::Certificate,
) -> ConstructionResult {
    ConstructionResult {
        family,
        params,
        alphabet,
        graph_name: g.name().to_string(),
        graph_fingerprint: g.fingerprint(),
        circuits,
        words,
        provenance,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_de_bruijn, is_kautz_word, is_l_orthogonal};

    #[test]
    fn partition_examples() {
        let g = build_de_bruijn_graph(3, 2).unwrap();
        assert_eq!(partition_vertices(&g, 2).unwrap(), vec![vec![0], vec![1, 2]]);
        assert_eq!(partition_vertices(&g, 1).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(partition_vertices(&g, 3).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert!(partition_vertices(&g, 4).is_err());
        assert!(partition_vertices(&g, 0).is_err());
    }

    #[test]
    fn ortho_db_3_2_2() {
        let r = construct_l_orthogonal_de_bruijn(3, 2, 2).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.words.iter().all(|w| is_de_bruijn(w, 3, 2).holds));
        assert!(is_l_orthogonal(&r.words, 2, 2).holds);
        assert!(r.certificate.holds);
    }

    #[test]
    fn ortho_db_3_2_1() {
        let r = construct_l_orthogonal_de_bruijn(3, 2, 1).unwrap();
        assert_eq!(r.len(), 2);
        assert!(is_l_orthogonal(&r.words, 2, 1).holds);
    }

    #[test]
    fn ortho_db_4_2_2() {
        let r = construct_l_orthogonal_de_bruijn(4, 2, 2).unwrap();
        assert_eq!(r.len(), 4);
        assert!(is_l_orthogonal(&r.words, 2, 2).holds);
    }

    #[test]
    fn ortho_db_rejects_bad_parameters() {
        assert!(matches!(
            construct_l_orthogonal_de_bruijn(2, 2, 1),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            construct_l_orthogonal_de_bruijn(3, 2, 4),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn ortho_kautz_4_2_2() {
        let r = construct_l_orthogonal_kautz(4, 2, 2).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.words.iter().all(|w| is_kautz_word(w, 4, 2).holds));
        assert!(is_l_orthogonal(&r.words, 2, 2).holds);
        assert_eq!(r.alphabet, Alphabet::dna());
    }

    #[test]
    fn ortho_kautz_5_2_1() {
        let r = construct_l_orthogonal_kautz(5, 2, 1).unwrap();
        assert_eq!(r.len(), 2);
        assert!(is_l_orthogonal(&r.words, 2, 1).holds);
    }

    #[test]
    fn ortho_kautz_ell_limit() {
        assert!(matches!(
            construct_l_orthogonal_kautz(4, 2, 5),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(construct_l_orthogonal_kautz(4, 2, 4).is_ok());
    }

    #[test]
    fn provenance_names() {
        let r = construct_l_orthogonal_de_bruijn(3, 2, 2).unwrap();
        let names: Vec<_> = r.provenance.iter().map(|p| p.name.as_str()).collect();
        assert_eq!(names, ["C[1,1]", "C[1,2]", "C[2,1]", "C[2,2]"]);
    }
}
