use super::{is_dominating_bits, Propagator};
use crate::graph::{Graph, VertexSet};

/// Smallest set satisfying `pred`, searching sizes 1, 2, … in turn and
/// stopping at the first hit. `V` itself always qualifies for the three
/// predicates used here, so the search terminates.
pub fn min_size_set(g: &Graph, mut pred: impl FnMut(u64) -> bool) -> Option<VertexSet> {
    let n = g.order();
    for k in 1..=n {
        let mut s: u64 = (1u64 << k) - 1;
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        loop {
            if pred(s) {
                return Some(VertexSet::from_bits(n, s));
            }
            // Gosper's hack: next larger integer with the same popcount.
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            if r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
            if s > limit {
                break;
            }
        }
    }
    None
}

/// γ_P(G): the size of a minimum power dominating set.
pub fn gamma_p(g: &Graph) -> usize {
    let mut prop = Propagator::new();
    min_size_set(g, |s| prop.is_power_dominating_bits(g.rows(), s)).map_or(0, |s| s.len())
}

/// Z(G): the size of a minimum zero forcing set.
pub fn zero_forcing_number(g: &Graph) -> usize {
    let mut prop = Propagator::new();
    min_size_set(g, |s| prop.is_zero_forcing_bits(g.rows(), s)).map_or(0, |s| s.len())
}

/// γ(G): the size of a minimum dominating set.
pub fn domination_number(g: &Graph) -> usize {
    min_size_set(g, |s| is_dominating_bits(g.rows(), s)).map_or(0, |s| s.len())
}
