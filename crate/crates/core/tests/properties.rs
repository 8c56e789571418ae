mod common;

use std::collections::HashMap;

use common::random_eulerian_circuit;
use orthoseq::constructions::{
    build_b_circuit, construct_fixed_weight_kautz_orthogonal, construct_fixed_weight_orthogonal_db,
    construct_l_orthogonal_de_bruijn, construct_l_orthogonal_kautz, construct_orthogonal_balanced_de_bruijn,
    construct_orthogonal_balanced_kautz, find_arc_disjoint_avoiding_cycles, tensor_compose_b_circuits,
    ConstructionResult,
};
use orthoseq::euler::{circuit_to_word, rewire, rewire_given, transition_usage, wiring_of, Circuit};
use orthoseq::graph::{build_de_bruijn_graph, build_kautz_graph, tensor_product, DirectedMultigraph};
use orthoseq::verify::{are_distinct, is_b_circuit, is_l_orthogonal};
use orthoseq::{Alphabet, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(kautz: bool, sigma: usize, k: usize) -> DirectedMultigraph {
    if kautz {
        build_kautz_graph(sigma, k).unwrap()
    } else {
        build_de_bruijn_graph(sigma, k).unwrap()
    }
}

fn unchanged_elsewhere(g: &DirectedMultigraph, v: usize, before: &Circuit, after: &Circuit) -> bool {
    (0..g.vertex_count())
        .filter(|&u| u != v)
        .all(|u| wiring_of(g, u, before) == wiring_of(g, u, after))
}

/// Word-level checks that do not consult the construction's own certificate.
fn independently_sound(r: &ConstructionResult, k: usize, ell: usize) {
    assert!(r.certificate.holds);
    assert!(are_distinct(&r.words).holds);
    assert!(is_l_orthogonal(&r.words, k, ell).holds);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rewire_postconditions(
        kautz in any::<bool>(),
        sigma in 3usize..=5,
        k in 2usize..=3,
        seed in any::<u64>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let sigma = if kautz { sigma + 1 } else { sigma };
        let g = graph(kautz, sigma, k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_eulerian_circuit(&g, &mut rng);
        let v = pick.index(g.vertex_count());
        let r = rewire(&g, v, &c).unwrap();
        prop_assert!(r.is_eulerian(&g));
        prop_assert!(wiring_of(&g, v, &r).is_disjoint(&wiring_of(&g, v, &c)));
        prop_assert!(unchanged_elsewhere(&g, v, &c, &r));
    }

    #[test]
    fn rewire_given_postconditions(
        sigma in 4usize..=7,
        seed in any::<u64>(),
        pick in any::<prop::sample::Index>(),
        given_count in 1usize..=2,
    ) {
        let g = build_de_bruijn_graph(sigma, 2).unwrap();
        let limit = sigma / 2 - 1;
        let given_count = given_count.min(limit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_eulerian_circuit(&g, &mut rng);
        let given: Vec<Circuit> = (0..given_count).map(|_| random_eulerian_circuit(&g, &mut rng)).collect();
        let v = pick.index(g.vertex_count());
        let r = rewire_given(&g, v, &c, &given).unwrap();
        prop_assert!(r.is_eulerian(&g));
        let w = wiring_of(&g, v, &r);
        for other in &given {
            prop_assert!(w.is_disjoint(&wiring_of(&g, v, other)));
        }
        prop_assert!(unchanged_elsewhere(&g, v, &c, &r));
        let too_many: Vec<Circuit> = (0..=limit).map(|_| random_eulerian_circuit(&g, &mut rng)).collect();
        let is_too_many = matches!(rewire_given(&g, v, &c, &too_many), Err(Error::TooManyForbidden { .. }));
        prop_assert!(is_too_many);
    }

    #[test]
    fn l_orthogonal_agrees_with_transition_usage(
        sigma in 2usize..=4,
        k in 1usize..=3,
        members in 1usize..=4,
        ell in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let g = build_de_bruijn_graph(sigma, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let circuits: Vec<Circuit> = (0..members).map(|_| random_eulerian_circuit(&g, &mut rng)).collect();
        let words: Vec<_> = circuits.iter().map(|c| circuit_to_word(&g, c).unwrap()).collect();
        let usage: HashMap<_, _> = transition_usage(&circuits);
        let max_use = usage.values().copied().max().unwrap_or(0);
        prop_assert_eq!(is_l_orthogonal(&words, k, ell).holds, max_use <= ell);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn l_orthogonal_constructions_certify(kautz in any::<bool>(), sigma in 3usize..=5, k in 2usize..=3, ell in 1usize..=3) {
        let r = if kautz {
            construct_l_orthogonal_kautz(sigma, k, ell)
        } else {
            construct_l_orthogonal_de_bruijn(sigma, k, ell)
        };
        match r {
            Ok(r) => independently_sound(&r, k, ell),
            Err(e) => prop_assert!(matches!(e, Error::ParameterOutOfRange(_) | Error::UnsupportedCase(_)), "{e}"),
        }
    }

    #[test]
    fn balanced_constructions_certify(kautz in any::<bool>(), c in 1usize..=3, b in 2usize..=3, k in 1usize..=2) {
        let r = if kautz {
            construct_orthogonal_balanced_kautz(c, b, k.max(2))
        } else {
            construct_orthogonal_balanced_de_bruijn(c, b, k)
        };
        match r {
            Ok(r) => {
                prop_assert_eq!(r.len(), c);
                independently_sound(&r, r.params.k, 1);
            }
            Err(e) => prop_assert!(matches!(e, Error::ParameterOutOfRange(_) | Error::UnsupportedCase(_)), "{e}"),
        }
    }

    #[test]
    fn fixed_weight_constructions_certify(
        sigma in 3usize..=4,
        weighted in 1usize..=2,
        k in 2usize..=4,
        w_max in 0usize..=4,
        w_min in 0usize..=4,
        kautz in any::<bool>(),
    ) {
        let tokens: Vec<String> = (0..sigma).map(|i| i.to_string()).collect();
        let alphabet = Alphabet::numeric(sigma).unwrap().with_weighted(tokens[..weighted.min(sigma - 1)].to_vec()).unwrap();
        let r = if kautz {
            construct_fixed_weight_kautz_orthogonal(&alphabet, k, w_min, w_max)
        } else {
            construct_fixed_weight_orthogonal_db(&alphabet, k, w_max)
        };
        match r {
            Ok(r) => {
                prop_assert!(!r.is_empty());
                independently_sound(&r, k, 1);
            }
            Err(e) => prop_assert!(
                matches!(e, Error::ParameterOutOfRange(_) | Error::UnsupportedCase(_) | Error::AlphabetTooSmall { .. }),
                "{e}"
            ),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_keeps_b_circuits_disjoint(seed in any::<u64>(), sigma2 in prop::sample::select(vec![3usize, 5])) {
        let found = find_arc_disjoint_avoiding_cycles(4, 3).unwrap();
        let g1 = &found.graph;
        let b_circuits: Vec<Circuit> = (0..2).map(|t| build_b_circuit(g1, &found.cycles, t, 2).unwrap()).collect();
        let g2 = build_de_bruijn_graph(sigma2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_eulerian_circuit(&g2, &mut rng);
        let p = tensor_product(g1, &g2).unwrap();
        let composed: Vec<Circuit> =
            b_circuits.iter().map(|c| tensor_compose_b_circuits(g1, c, &g2, &e).unwrap()).collect();
        for c in &composed {
            prop_assert!(is_b_circuit(c.arcs(), &p, 2 * sigma2).holds);
        }
        let mut used = vec![false; p.arc_count()];
        for c in &composed {
            for &a in c.arcs() {
                prop_assert!(!used[a]);
                used[a] = true;
            }
        }
    }
}
