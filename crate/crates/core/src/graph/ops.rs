use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
            what: "graph order",
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// `self ∪̇ other`: the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// `self ∨ other`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = super::vertex_set::full_mask(self.n);
        let right = super::vertex_set::full_mask(other.n) << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `self ∘ other`: vertex `i` of `self` is joined to every vertex of the
    /// `i`-th copy of `other`, which occupies
    /// `n1 + i*n2 .. n1 + (i+1)*n2`.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        let n2 = other.n;
        let n = n1 * (1 + n2);
        check_order(n)?;
        let mut g = Graph {
            n: n1,
            adj: self.adj.clone(),
        };
        for i in 0..n1 {
            let offset = g.n;
            g = g.disjoint_union(other)?;
            let copy = super::vertex_set::full_mask(n2) << offset;
            g.adj[i] |= copy;
            for v in offset..offset + n2 {
                g.adj[v] |= 1 << i;
            }
        }
        Ok(g)
    }

    /// Identifies vertex `i` of `self` with the designated vertex of the
    /// `i`-th gadget. The result keeps `self`'s vertices at `0..n(h)` and
    /// appends each gadget's remaining vertices in order.
    pub fn identify(&self, gadgets: &[(Graph, usize)]) -> Result<Graph> {
        if gadgets.len() != self.n {
            return Err(Error::Arity {
                expected: self.n,
                actual: gadgets.len(),
            });
        }
        let total = self.n + gadgets.iter().map(|(g, _)| g.n - 1).sum::<usize>();
        check_order(total)?;
        let mut edges = self.edges();
        let mut next = self.n;
        for (i, (gadget, root)) in gadgets.iter().enumerate() {
            if *root >= gadget.n {
                return Err(Error::InvalidVertex {
                    vertex: *root,
                    n: gadget.n,
                });
            }
            let mut label = vec![0usize; gadget.n];
            for (v, slot) in label.iter_mut().enumerate() {
                if v == *root {
                    *slot = i;
                } else {
                    *slot = next;
                    next += 1;
                }
            }
            edges.extend(
                gadget
                    .edges()
                    .into_iter()
                    .map(|(u, v)| (label[u], label[v])),
            );
        }
        Graph::from_edge_list(total, &edges)
    }

    /// Adds one vertex (labelled `n`) adjacent to every existing vertex.
    pub fn with_dominating_vertex(&self) -> Result<Graph> {
        self.join(&Graph::empty(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn star_as_join() {
        let s4 = Graph::empty(3).join(&Graph::empty(1)).unwrap();
        assert_eq!(s4, Family::Star(4).build().unwrap());
    }

    #[test]
    fn union_counts() {
        let k2 = Family::Complete(2).build().unwrap();
        let g = k2.disjoint_union(&Graph::empty(1)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 1));
    }

    #[test]
    fn corona_p2_k2_is_two_linked_triangles() {
        let p2 = Family::Path(2).build().unwrap();
        let k2 = Family::Complete(2).build().unwrap();
        let g = p2.corona(&k2).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (4, 5)]
        );
    }

    #[test]
    fn identify_arity_and_labels() {
        let p2 = Family::Path(2).build().unwrap();
        let p3 = Family::Path(3).build().unwrap();
        let err = p2.identify(&[(p3.clone(), 1)]).unwrap_err();
        assert!(matches!(
            err,
            Error::Arity {
                expected: 2,
                actual: 1
            }
        ));

        let g = p2.identify(&[(p3.clone(), 1), (p3, 1)]).unwrap();
        assert_eq!(g.order(), 6);
        // Each core vertex keeps its two path neighbors as pendants.
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.edge_count(), 5);
    }
}
