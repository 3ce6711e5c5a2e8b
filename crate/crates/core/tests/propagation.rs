mod common;

use common::*;
use powerdom::propagation::{
    check_ip_bound, domination_number, enumerate_forts, gamma_p, is_dominating, is_fort,
    is_pds_via_forts, is_power_dominating, is_zero_forcing, power_domination_trace,
    zero_forcing_number,
};
use powerdom::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Adj> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            adj_from_edges(n, &edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn predicates_match_reference(adj in arb_graph(8)) {
        let g = to_graph(&adj);
        let n = adj.len();
        for bits in 0u64..1 << n {
            let s = subset(n, bits);
            let set = VertexSet::from_bits(n, bits);
            prop_assert_eq!(is_power_dominating(&g, set), is_pds(&adj, &s));
            prop_assert_eq!(is_zero_forcing(&g, set), is_zfs(&adj, &s));
            prop_assert_eq!(is_dominating(&g, set), is_dom(&adj, &s));
        }
    }

    #[test]
    fn parameters_match_reference(adj in arb_graph(8)) {
        let g = to_graph(&adj);
        prop_assert_eq!(gamma_p(&g), min_size(&pd_counts(&adj)));
        prop_assert_eq!(zero_forcing_number(&g), min_size(&zf_counts(&adj)));
        prop_assert_eq!(domination_number(&g), min_size(&dom_counts(&adj)));
    }

    #[test]
    fn fort_criterion_and_ip_bound(adj in arb_graph(7)) {
        let g = to_graph(&adj);
        let n = adj.len();
        for bits in 0u64..1 << n {
            let set = VertexSet::from_bits(n, bits);
            prop_assert_eq!(is_pds_via_forts(&g, set).unwrap(), is_power_dominating(&g, set));
        }
        let all = enumerate_forts(&g, false).unwrap();
        // Reference: no outside vertex sees exactly one vertex of F.
        let reference: Vec<u64> = (1u64..1 << n)
            .filter(|&f| (0..n).all(|v| f >> v & 1 == 1 || adj[v].iter().filter(|&&u| f >> u & 1 == 1).count() != 1))
            .collect();
        prop_assert_eq!(all.iter().map(|f| f.bits()).collect::<Vec<_>>().len(), reference.len());
        prop_assert!(all.iter().all(|f| is_fort(&g, *f) && reference.contains(&f.bits())));
        let minimal = enumerate_forts(&g, true).unwrap();
        prop_assert!(minimal.iter().all(|f| !reference.iter().any(|&r| r != f.bits() && r & f.bits() == r)));
        let bound = check_ip_bound(&g).unwrap();
        let total: u64 = pd_counts(&adj).iter().sum();
        prop_assert!(bound.holds);
        prop_assert_eq!(num_bigint::BigInt::from((1u64 << n) - total), bound.rhs);
    }

    #[test]
    fn trace_is_consistent(adj in arb_graph(9), bits in any::<u64>()) {
        let g = to_graph(&adj);
        let n = adj.len();
        let s = VertexSet::from_bits(n, bits & ((1u64 << n) - 1));
        let trace = power_domination_trace(&g, s);
        prop_assert_eq!(trace.final_set.is_full(), is_power_dominating(&g, s));
        // Each recorded force is legal when it happens.
        let mut colored = trace.after_domination;
        for &(from, to) in &trace.forces {
            prop_assert!(colored.contains(from) && !colored.contains(to));
            let white = adj[from].iter().filter(|&&u| !colored.contains(u)).count();
            prop_assert_eq!(white, 1);
            colored.insert(to);
        }
        prop_assert_eq!(colored, trace.final_set);
    }
}

#[test]
fn every_graph_on_five_vertices() {
    for n in 1..=5 {
        for (key, adj) in read_catalog(&format!("graph{n}.g6")) {
            let g = to_graph(&adj);
            assert_eq!(gamma_p(&g), min_size(&pd_counts(&adj)), "{key}");
        }
    }
}

#[test]
fn empty_set_never_dominates() {
    let g = Graph::empty(3);
    assert!(!is_power_dominating(&g, VertexSet::empty(3)));
    assert!(is_power_dominating(&g, VertexSet::full(3)));
}
