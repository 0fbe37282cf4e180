use num_bigint::BigInt;
use proptest::prelude::*;

use dp3::cluster::{Seed, DELTA};
use dp3::contour::{build_contour, extract_subgraphs};
use dp3::formula::{phi, z};
use dp3::laurent::{LaurentPoly, Monomial};
use dp3::matching::{
    count_matchings, forced_weight, partition_function, partition_function_with_order, sweep_order, WeightedGraph,
};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (prop::array::uniform6(-2i32..=2).prop_map(Monomial), -4i64..=4);
    prop::collection::vec(term, 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

/// Follows `picks` through the seed, choosing among the currently toric
/// vertices at each step.
fn toric_walk(m: u8, picks: &[usize]) -> dp3::Result<Seed> {
    let mut s = Seed::initial(m);
    for &pick in picks {
        let toric: Vec<usize> = (1..=6).filter(|&v| s.quiver.is_toric(v)).collect();
        s = s.mutate(toric[pick % toric.len()])?;
    }
    Ok(s)
}

fn small_point() -> impl Strategy<Value = (u8, (i64, i64, i64))> {
    (1u8..=4, -2i64..=2, -2i64..=2, -2i64..=3).prop_map(|(m, i, j, k)| (m, (i, j, k)))
}

/// Core graph of a non-self-intersecting contour, if the point has one.
fn core_graph(m: u8, p: (i64, i64, i64)) -> Option<WeightedGraph> {
    let c = build_contour(m, phi(p)).ok()?;
    if c.self_intersecting {
        return None;
    }
    Some(WeightedGraph::from_patch(&extract_subgraphs(&c).ok()?.core))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn parse_round_trips(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&a.canonical_string()).unwrap(), a);
    }

    #[test]
    fn mutation_is_an_involution(m in 1u8..=4, seq in prop::collection::vec(0usize..6, 0..6), v in 1usize..=6) {
        let s = toric_walk(m, &seq).unwrap();
        let back = s.mutate(v).unwrap().mutate(v).unwrap();
        prop_assert_eq!(back.quiver, s.quiver);
        prop_assert_eq!(back.vars, s.vars);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Every cluster variable reached by toric mutations from any initial seed is a Laurent
    /// polynomial; `mutate` errors out otherwise.
    #[test]
    fn laurent_phenomenon(m in 1u8..=4, seq in prop::collection::vec(0usize..6, 1..=8)) {
        let s = toric_walk(m, &seq);
        prop_assert!(s.is_ok(), "{:?}", s.err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sweep_order_does_not_matter((m, p) in small_point()) {
        if let Some(g) = core_graph(m, p) {
            let order = sweep_order(&g);
            let mut rev = order.clone();
            rev.reverse();
            let a = partition_function(&g).unwrap();
            let b = LaurentPoly::from_terms(partition_function_with_order(&g, &rev, true).unwrap());
            prop_assert_eq!(a.canonical_string(), b.canonical_string());
        }
    }

    #[test]
    fn count_is_the_value_at_ones((m, p) in small_point()) {
        if let Some(g) = core_graph(m, p) {
            prop_assert_eq!(count_matchings(&g).unwrap(), partition_function(&g).unwrap().at_ones());
        }
    }

    #[test]
    fn cores_have_no_pendant_vertices((m, p) in small_point()) {
        if let Some(c) = build_contour(m, phi(p)).ok().filter(|c| !c.self_intersecting) {
            let core = extract_subgraphs(&c).unwrap().core;
            prop_assert!(core.degrees().iter().all(|&d| d >= 2));
        }
    }
}

#[test]
fn forced_edges_factor_out() {
    for m in 1..=4u8 {
        for p in DELTA[0] {
            let c = build_contour(m, phi(p)).unwrap();
            if c.self_intersecting {
                continue;
            }
            let g = extract_subgraphs(&c).unwrap();
            let full = partition_function(&WeightedGraph::from_patch(&g.extended)).unwrap();
            let core = partition_function(&WeightedGraph::from_patch(&g.core)).unwrap();
            assert_eq!(full, core.mul_monomial(&forced_weight(&g)), "model {m} point {p:?}");
        }
    }
}

#[test]
fn phi_satisfies_its_linear_relations() {
    for i in -3..=3 {
        for j in -3..=3 {
            for k in -3..=4 {
                let [a, b, c, d, e, f] = phi((i, j, k));
                // Opposite-side differences agree, so the hexagon closes.
                assert_eq!(a - d, e - b);
                assert_eq!(a - d, c - f);
                assert_eq!(a - d, 2 * k - 1);
                assert_eq!(a + b + c + d + e + f, 1);
            }
        }
    }
}

#[test]
fn formula_is_invariant_at_seed_points() {
    for m in 1..=4u8 {
        for (r, p) in DELTA[m as usize - 1].into_iter().enumerate() {
            assert_eq!(z(m, p).unwrap(), LaurentPoly::var(r + 1));
        }
    }
}
