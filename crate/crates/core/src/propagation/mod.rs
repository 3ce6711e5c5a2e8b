//! The colour-change rules: the domination step (colour `N[S]`) and the
//! forcing step (a coloured vertex with exactly one uncoloured neighbour
//! colours it), plus the set predicates and parameters built on them.

mod forts;
mod params;

pub use forts::{
    check_ip_bound, check_ip_bound_capped, enumerate_forts, enumerate_forts_capped,
    fort_neighborhood_family, fort_neighborhood_family_capped, is_fort, is_pds_via_forts,
    is_pds_via_forts_capped, IpBound, FORT_CAP,
};
pub use params::{domination_number, gamma_p, min_size_set, zero_forcing_number};

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// One witnessing run of the power domination (or zero forcing) process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub initial: VertexSet,
    pub after_domination: VertexSet,
    /// `(forcer, forced)` in the order they fired.
    pub forces: Vec<(usize, usize)>,
    #[serde(rename = "final")]
    pub final_set: VertexSet,
}

/// `N[S]`; empty for the empty set.
pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    VertexSet::from_bits(g.order(), closed_neighborhood_bits(g.rows(), s.bits()))
}

/// `N(S) = (⋃ N(v)) \ S`.
pub fn open_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    closed_neighborhood(g, s) - s
}

#[inline]
pub(crate) fn closed_neighborhood_bits(adj: &[u64], s: u64) -> u64 {
    let mut out = s;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= adj[v];
    }
    out
}

/// Reusable scratch space for the forcing closure.
///
/// Keeps, for every vertex, the number of uncoloured neighbours, and a
/// worklist of coloured vertices whose count is exactly one. Each colouring
/// touches the new vertex's neighbours once, so a closure costs O(n + m).
#[derive(Clone, Debug, Default)]
pub struct Propagator {
    uncolored: Vec<u32>,
    stack: Vec<usize>,
}

impl Propagator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Forcing closure of `colored` inside the subgraph induced by `within`
    /// (as raw bits). `on_force` sees every `(forcer, forced)` pair.
    #[inline]
    pub fn close_within(
        &mut self,
        adj: &[u64],
        colored: u64,
        within: u64,
        mut on_force: impl FnMut(usize, usize),
    ) -> u64 {
        if self.uncolored.len() < adj.len() {
            self.uncolored.resize(adj.len(), 0);
        }
        let mut c = colored & within;
        self.stack.clear();
        let mut rest = within;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = (adj[v] & within & !c).count_ones();
            self.uncolored[v] = k;
            if k == 1 && c >> v & 1 == 1 {
                self.stack.push(v);
            }
        }
        while let Some(v) = self.stack.pop() {
            if self.uncolored[v] != 1 {
                continue;
            }
            let w = (adj[v] & within & !c).trailing_zeros() as usize;
            c |= 1 << w;
            on_force(v, w);
            let mut nbrs = adj[w] & within;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                self.uncolored[u] -= 1;
                if self.uncolored[u] == 1 && c >> u & 1 == 1 {
                    self.stack.push(u);
                }
            }
            if self.uncolored[w] == 1 {
                self.stack.push(w);
            }
        }
        c
    }

    #[inline]
    pub fn close(&mut self, adj: &[u64], colored: u64) -> u64 {
        let all = crate::graph::VertexSet::full(adj.len()).bits();
        self.close_within(adj, colored, all, |_, _| {})
    }

    #[inline]
    pub fn is_power_dominating_bits(&mut self, adj: &[u64], s: u64) -> bool {
        let all = VertexSet::full(adj.len()).bits();
        let dominated = closed_neighborhood_bits(adj, s);
        dominated == all || (s != 0 && self.close_within(adj, dominated, all, |_, _| {}) == all)
    }

    #[inline]
    pub fn is_zero_forcing_bits(&mut self, adj: &[u64], s: u64) -> bool {
        let all = VertexSet::full(adj.len()).bits();
        s == all || (s != 0 && self.close_within(adj, s, all, |_, _| {}) == all)
    }
}

#[inline]
pub(crate) fn is_dominating_bits(adj: &[u64], s: u64) -> bool {
    closed_neighborhood_bits(adj, s) == VertexSet::full(adj.len()).bits()
}

/// Applies the forcing rule until no coloured vertex has exactly one
/// uncoloured neighbour. The fixed point does not depend on the order in
/// which forces fire; the trace records the order this run used.
pub fn forcing_closure(g: &Graph, colored: VertexSet) -> (VertexSet, PropagationTrace) {
    let mut forces = Vec::new();
    let done =
        Propagator::new().close_within(g.rows(), colored.bits(), g.vertices().bits(), |u, v| {
            forces.push((u, v))
        });
    let final_set = VertexSet::from_bits(g.order(), done);
    let trace = PropagationTrace {
        initial: colored,
        after_domination: colored,
        forces,
        final_set,
    };
    (final_set, trace)
}

/// Runs the full power domination process from `s`: one domination step
/// followed by the forcing closure.
pub fn power_domination_trace(g: &Graph, s: VertexSet) -> PropagationTrace {
    let dominated = closed_neighborhood(g, s);
    let (_, mut trace) = forcing_closure(g, dominated);
    trace.initial = s;
    trace
}

pub fn is_power_dominating(g: &Graph, s: VertexSet) -> bool {
    Propagator::new().is_power_dominating_bits(g.rows(), s.bits())
}

pub fn is_zero_forcing(g: &Graph, s: VertexSet) -> bool {
    Propagator::new().is_zero_forcing_bits(g.rows(), s.bits())
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating_bits(g.rows(), s.bits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn closed_neighborhoods() {
        let s4 = Family::Star(4).build().unwrap();
        assert!(closed_neighborhood(&s4, set(4, &[3])).is_full());
        assert!(closed_neighborhood(&s4, VertexSet::empty(4)).is_empty());
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(closed_neighborhood(&p3, set(3, &[0])), set(3, &[0, 1]));
    }

    #[test]
    fn forcing_examples() {
        let p4 = Family::Path(4).build().unwrap();
        let (done, trace) = forcing_closure(&p4, set(4, &[0]));
        assert!(done.is_full());
        assert_eq!(trace.forces, vec![(0, 1), (1, 2), (2, 3)]);

        let s4 = Family::Star(4).build().unwrap();
        let (done, trace) = forcing_closure(&s4, set(4, &[3]));
        assert_eq!(done, set(4, &[3]));
        assert!(trace.forces.is_empty());

        let c4 = Family::Cycle(4).build().unwrap();
        assert!(forcing_closure(&c4, set(4, &[0, 1])).0.is_full());
    }

    #[test]
    fn predicates() {
        for n in 2..8 {
            let p = Family::Path(n).build().unwrap();
            for v in 0..n {
                assert!(is_power_dominating(&p, set(n, &[v])));
            }
        }
        let e2 = Graph::empty(2);
        assert!(!is_power_dominating(&e2, set(2, &[0])));
        let p3 = Family::Path(3).build().unwrap();
        assert!(is_power_dominating(&p3, set(3, &[1])));
        assert!(!is_zero_forcing(&p3, set(3, &[1])));
        assert!(is_zero_forcing(&p3, set(3, &[0])));
        assert!(is_dominating(&p3, set(3, &[1])));
        assert!(!is_dominating(&p3, set(3, &[0])));
        for g in [p3, Graph::empty(1), Family::Complete(4).build().unwrap()] {
            let none = VertexSet::empty(g.order());
            assert!(!is_power_dominating(&g, none));
            assert!(!is_zero_forcing(&g, none));
            assert!(!is_dominating(&g, none));
        }
    }

    #[test]
    fn trace_invariants() {
        let g =
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        let s = set(7, &[2]);
        let t = power_domination_trace(&g, s);
        assert_eq!(t.after_domination, closed_neighborhood(&g, s));
        let mut colored = t.after_domination;
        for &(u, v) in &t.forces {
            assert!(colored.contains(u));
            assert_eq!(g.neighbors(u) - colored, set(7, &[v]));
            colored.insert(v);
        }
        assert_eq!(colored, t.final_set);
        assert!(t.final_set.is_full());
    }

    /// Fires forces in a random order, re-scanning for eligible forcers each
    /// time. Independent of the worklist implementation.
    fn shuffled_closure(g: &Graph, start: VertexSet, rng: &mut impl rand::Rng) -> VertexSet {
        let mut c = start;
        loop {
            let mut eligible: Vec<usize> = c
                .iter()
                .filter(|&v| (g.neighbors(v) - c).len() == 1)
                .collect();
            if eligible.is_empty() {
                return c;
            }
            eligible.shuffle(rng);
            let v = eligible[0];
            let w = (g.neighbors(v) - c).first().unwrap();
            c.insert(w);
        }
    }

    #[test]
    fn closure_is_confluent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rand::Rng::gen_range(&mut rng, 1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rand::Rng::gen_bool(&mut rng, 0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let start = VertexSet::from_bits(n, rand::Rng::gen::<u64>(&mut rng));
            let (expected, _) = forcing_closure(&g, start);
            for _ in 0..10 {
                assert_eq!(shuffled_closure(&g, start, &mut rng), expected);
            }
        }
    }
}
