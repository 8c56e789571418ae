use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::euler::{transition_usage, Circuit};
use crate::graph::DirectedMultigraph;
use crate::verify::{
    are_distinct, is_b_balanced, is_b_balanced_kautz, is_fixed_weight_db, is_l_orthogonal, is_self_orthogonal,
    VerificationReport,
};

/// One property checked on the circuits themselves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

/// Circuit-level claims next to word-level oracle reports; `holds` only when
/// every entry holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claims: Vec<ClaimCheck>,
    pub oracle: Vec<VerificationReport>,
    pub holds: bool,
}

impl Certificate {
    fn seal(claims: Vec<ClaimCheck>, oracle: Vec<VerificationReport>) -> Result<Self> {
        if let Some(c) = claims.iter().find(|c| !c.holds) {
            return Err(Error::CertificationFailed(format!("{}: {}", c.claim, c.detail)));
        }
        if let Some(r) = oracle.iter().find(|r| !r.holds) {
            return Err(Error::CertificationFailed(format!("{}: {:?}", r.property, r.witness)));
        }
        Ok(Self {
            claims,
            oracle,
            holds: true,
        })
    }
}

fn claim(claim: impl Into<String>, holds: bool, detail: impl Into<String>) -> ClaimCheck {
    ClaimCheck {
        claim: claim.into(),
        holds,
        detail: detail.into(),
    }
}

fn count_claim(expected: usize, actual: usize) -> ClaimCheck {
    claim(
        "collection size",
        expected == actual,
        format!("{actual} members, expected {expected}"),
    )
}

fn eulerian_claim(g: &DirectedMultigraph, circuits: &[Circuit]) -> ClaimCheck {
    let bad = circuits.iter().position(|c| !c.is_eulerian(g));
    claim(
        "each member is an Eulerian circuit",
        bad.is_none(),
        bad.map_or_else(|| format!("{} circuits", circuits.len()), |i| format!("member {i}")),
    )
}

fn transition_claim(circuits: &[Circuit], ell: usize) -> ClaimCheck {
    let usage = transition_usage(circuits);
    let worst = usage.values().copied().max().unwrap_or(0);
    claim(
        format!("each in/out transition used at most {ell} times"),
        worst <= ell,
        format!("maximum use {worst}"),
    )
}

fn distinct_claim(circuits: &[Circuit]) -> ClaimCheck {
    let mut canon: Vec<Circuit> = circuits.iter().map(Circuit::canonical).collect();
    canon.sort_by(|a, b| a.arcs().cmp(b.arcs()));
    let before = canon.len();
    canon.dedup();
    claim(
        "members are distinct",
        canon.len() == before,
        format!("{} distinct", canon.len()),
    )
}

/// ell-orthogonal collections of Eulerian circuits on the order-k graph `g`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn certify_l_orthogonal(
    g: &DirectedMultigraph,
    circuits: &[Circuit],
    words: &[Vec<Symbol>],
    expected: usize,
    sigma: usize,
    k: usize,
    ell: usize,
    kautz: bool,
) -> Result<Certificate> {
    let claims = vec![
        count_claim(expected, circuits.len()),
        eulerian_claim(g, circuits),
        transition_claim(circuits, ell),
        distinct_claim(circuits),
    ];
    let mut oracle: Vec<VerificationReport> = words
        .iter()
        .map(|w| {
            if kautz {
                is_b_balanced_kautz(w, sigma, k, 1)
            } else {
                is_b_balanced(w, sigma, k, 1)
            }
        })
        .collect();
    oracle.push(is_l_orthogonal(words, k, ell));
    oracle.push(are_distinct(words));
    Certificate::seal(claims, oracle)
}

/// Collections of pairwise arc-disjoint b-circuits on the order-(k+1) graph
/// `lifted`, read as orthogonal b-balanced sequences.
#[allow(clippy::too_many_arguments)]
pub(crate) fn certify_balanced(
    lifted: &DirectedMultigraph,
    walks: &[Circuit],
    words: &[Vec<Symbol>],
    expected: usize,
    sigma: usize,
    k: usize,
    b: usize,
    kautz: bool,
) -> Result<Certificate> {
    let mut claims = vec![count_claim(expected, walks.len())];
    let bad_walk = walks.iter().position(|w| {
        if w.validate_closed_walk(lifted).is_err() {
            return true;
        }
        let mut visits = vec![0usize; lifted.vertex_count()];
        for v in w.vertices(lifted) {
            visits[v] += 1;
        }
        visits.iter().any(|&x| x != b)
    });
    claims.push(claim(
        format!("each member is a {b}-circuit"),
        bad_walk.is_none(),
        bad_walk.map_or_else(|| format!("{} walks", walks.len()), |i| format!("member {i}")),
    ));
    let mut arc_use = vec![0usize; lifted.arc_count()];
    for w in walks {
        for &a in w.arcs() {
            arc_use[a] += 1;
        }
    }
    let worst = arc_use.iter().copied().max().unwrap_or(0);
    claims.push(claim(
        "arcs used at most once overall",
        worst <= 1,
        format!("maximum use {worst}"),
    ));

    let mut oracle: Vec<VerificationReport> = Vec::new();
    for w in words {
        oracle.push(if kautz {
            is_b_balanced_kautz(w, sigma, k, b)
        } else {
            is_b_balanced(w, sigma, k, b)
        });
        oracle.push(is_self_orthogonal(w, k));
    }
    oracle.push(is_l_orthogonal(words, k, 1));
    Certificate::seal(claims, oracle)
}

/// Pairwise compatible Eulerian circuits of a restricted graph.
pub(crate) fn certify_compatible_language(
    g: &DirectedMultigraph,
    circuits: &[Circuit],
    words: &[Vec<Symbol>],
    expected: usize,
    language: &[Vec<Symbol>],
    k: usize,
) -> Result<Certificate> {
    let claims = vec![
        count_claim(expected, circuits.len()),
        eulerian_claim(g, circuits),
        transition_claim(circuits, 1),
    ];
    let mut oracle: Vec<VerificationReport> = words.iter().map(|w| is_fixed_weight_db(w, language)).collect();
    oracle.push(is_l_orthogonal(words, k, 1));
    Certificate::seal(claims, oracle)
}
