//! Recognition of the family 𝓕: graphs built from a connected core `H` by
//! giving every core vertex `v` two private neighbours `v′, v″` (optionally
//! adjacent to each other).

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub core: usize,
    pub pair: (usize, usize),
    pub triangle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FDecomposition {
    pub core: VertexSet,
    pub gadgets: Vec<Gadget>,
}

impl FDecomposition {
    /// Re-expresses the witness in the labels given by `map[i]`.
    pub fn relabel(&self, width: usize, map: &[usize]) -> FDecomposition {
        FDecomposition {
            core: VertexSet::from_vertices(width, self.core.iter().map(|v| map[v])),
            gadgets: self
                .gadgets
                .iter()
                .map(|g| Gadget {
                    core: map[g.core],
                    pair: (map[g.pair.0], map[g.pair.1]),
                    triangle: g.triangle,
                })
                .collect(),
        }
    }
}

/// Pairs `{w, w′} ⊆ N(v)` with `N(w) ⊆ {v, w′}` and `N(w′) ⊆ {v, w}`.
fn candidate_pairs(g: &Graph, v: usize) -> Vec<(usize, usize)> {
    let nbrs: Vec<usize> = g
        .neighbors(v)
        .iter()
        .filter(|&w| g.degree(w) <= 2)
        .collect();
    let mut out = Vec::new();
    for (i, &w) in nbrs.iter().enumerate() {
        for &w2 in &nbrs[i + 1..] {
            let allowed = VertexSet::from_vertices(g.order(), [v, w, w2]);
            if g.neighbors(w).is_subset(&allowed) && g.neighbors(w2).is_subset(&allowed) {
                out.push((w, w2));
            }
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    cands: Vec<Vec<(usize, usize)>>,
    used: VertexSet,
    core: VertexSet,
    chosen: Vec<(usize, (usize, usize))>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, pair: (usize, usize)) -> bool {
        let set = VertexSet::from_vertices(self.g.order(), [v, pair.0, pair.1]);
        if set.intersects(&self.used) {
            return false;
        }
        self.used = self.used | set;
        self.core.insert(v);
        self.chosen.push((v, pair));
        if self.run() {
            return true;
        }
        self.chosen.pop();
        self.core.remove(v);
        self.used = self.used - set;
        false
    }

    /// Takes the lowest unassigned vertex `x`: either `x` is a core vertex
    /// owning one of its candidate pairs, or `x` belongs to the pair of some
    /// neighbour.
    fn run(&mut self) -> bool {
        let Some(x) = (!self.used).first() else {
            return self.g.induced(self.core).is_connected();
        };
        for pair in self.cands[x].clone() {
            if self.assign(x, pair) {
                return true;
            }
        }
        for v in self.g.neighbors(x).iter() {
            if self.used.contains(v) {
                continue;
            }
            for pair in self.cands[v].clone() {
                if (pair.0 == x || pair.1 == x) && self.assign(v, pair) {
                    return true;
                }
            }
        }
        false
    }
}

/// A decomposition witnessing `g ∈ 𝓕`, or `None`. Found by backtracking
/// over gadget-pair assignments; the core must induce a connected graph.
pub fn recognize_f(g: &Graph) -> Option<FDecomposition> {
    let n = g.order();
    if !n.is_multiple_of(3) || !g.is_connected() {
        return None;
    }
    let mut search = Search {
        g,
        cands: (0..n).map(|v| candidate_pairs(g, v)).collect(),
        used: VertexSet::empty(n),
        core: VertexSet::empty(n),
        chosen: Vec::new(),
    };
    if !search.run() {
        return None;
    }
    let mut gadgets: Vec<Gadget> = search
        .chosen
        .iter()
        .map(|&(core, pair)| Gadget {
            core,
            pair,
            triangle: g.has_edge(pair.0, pair.1),
        })
        .collect();
    gadgets.sort_by_key(|gd| gd.core);
    Some(FDecomposition {
        core: search.core,
        gadgets,
    })
}
