//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library except to convert graphs at the
//! boundary; the simulations work on plain adjacency lists.
#![allow(dead_code)]

use std::path::PathBuf;

use powerdom::{Graph, IntPolynomial};

pub type Adj = Vec<Vec<usize>>;

pub fn adj_from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        assert!(u != v && u < n && v < n);
        if !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    adj
}

pub fn edge_list(adj: &Adj) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, row) in adj.iter().enumerate() {
        out.extend(row.iter().filter(|&&v| u < v).map(|&v| (u, v)));
    }
    out
}

pub fn to_graph(adj: &Adj) -> Graph {
    Graph::from_edge_list(adj.len(), &edge_list(adj)).unwrap()
}

pub fn from_graph(g: &Graph) -> Adj {
    adj_from_edges(g.order(), &g.edges())
}

/// graph6 decoder for orders below 63.
pub fn decode_graph6(line: &str) -> Adj {
    let bytes: Vec<u8> = line.trim().bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    assert!(n < 63);
    let mut bits = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| b >> k & 1 == 1));
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bits.next().unwrap() {
                edges.push((u, v));
            }
        }
    }
    adj_from_edges(n, &edges)
}

pub fn catalog_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/catalogs")
        .join(name)
}

/// `(graph6 line, adjacency)` for every graph of the order-`n` catalog.
pub fn read_catalog(name: &str) -> Vec<(String, Adj)> {
    let text = std::fs::read_to_string(catalog_path(name)).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| (l.trim().to_string(), decode_graph6(l)))
        .collect()
}

/// Applies the forcing rule until nothing changes.
fn force(adj: &Adj, colored: &mut [bool]) {
    loop {
        let mut changed = false;
        for v in 0..adj.len() {
            if !colored[v] {
                continue;
            }
            let white: Vec<usize> = adj[v].iter().copied().filter(|&u| !colored[u]).collect();
            if white.len() == 1 {
                colored[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

pub fn is_zfs(adj: &Adj, s: &[bool]) -> bool {
    let mut colored = s.to_vec();
    force(adj, &mut colored);
    colored.iter().all(|&c| c)
}

pub fn is_pds(adj: &Adj, s: &[bool]) -> bool {
    let mut colored = s.to_vec();
    for v in 0..adj.len() {
        if s[v] {
            for &u in &adj[v] {
                colored[u] = true;
            }
        }
    }
    force(adj, &mut colored);
    colored.iter().all(|&c| c)
}

pub fn is_dom(adj: &Adj, s: &[bool]) -> bool {
    (0..adj.len()).all(|v| s[v] || adj[v].iter().any(|&u| s[u]))
}

pub fn subset(n: usize, bits: u64) -> Vec<bool> {
    (0..n).map(|v| bits >> v & 1 == 1).collect()
}

/// Number of sets of each size satisfying `pred`, indexed by size.
pub fn counts(adj: &Adj, pred: fn(&Adj, &[bool]) -> bool) -> Vec<u64> {
    let n = adj.len();
    let mut out = vec![0u64; n + 1];
    for bits in 0u64..1 << n {
        if pred(adj, &subset(n, bits)) {
            out[bits.count_ones() as usize] += 1;
        }
    }
    out
}

pub fn pd_counts(adj: &Adj) -> Vec<u64> {
    counts(adj, is_pds)
}

pub fn zf_counts(adj: &Adj) -> Vec<u64> {
    counts(adj, is_zfs)
}

pub fn dom_counts(adj: &Adj) -> Vec<u64> {
    counts(adj, is_dom)
}

/// Smallest size with a nonzero count.
pub fn min_size(c: &[u64]) -> usize {
    c.iter().position(|&x| x > 0).unwrap()
}

/// Coefficients of `p` as `u64`, padded with zeros to length `len`.
pub fn coeffs(p: &IntPolynomial, len: usize) -> Vec<u64> {
    let mut out: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|c| u64::try_from(c).unwrap())
        .collect();
    assert!(out.len() <= len, "degree exceeds {}", len - 1);
    out.resize(len, 0);
    out
}

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub fn pmul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn padd(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// `(x+1)^n - 1`.
pub fn all_sets(n: usize) -> Vec<u64> {
    let mut out: Vec<u64> = (0..=n).map(|k| binom(n, k)).collect();
    out[0] = 0;
    out
}

pub fn x_pow(n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    out[n] = 1;
    out
}

pub fn ppow(a: &[u64], k: usize) -> Vec<u64> {
    (0..k).fold(vec![1], |acc, _| pmul(&acc, a))
}

pub fn components(adj: &Adj) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            for &u in &adj[comp[i]] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

pub fn is_connected(adj: &Adj) -> bool {
    adj.is_empty() || components(adj).len() == 1
}

fn connected_within(adj: &Adj, keep: &[bool]) -> bool {
    let Some(start) = keep.iter().position(|&k| k) else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if keep[u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    (0..adj.len()).all(|v| !keep[v] || seen[v])
}

/// Membership in the family built from a connected core by giving every
/// core vertex two private neighbours (optionally adjacent), decided by
/// trying every candidate core.
pub fn in_family_f(adj: &Adj) -> bool {
    let n = adj.len();
    if n == 0 || !n.is_multiple_of(3) || !is_connected(adj) {
        return false;
    }
    if adj.iter().filter(|row| row.len() <= 2).count() < 2 * n / 3 {
        return false;
    }
    (0u64..1 << n)
        .filter(|b| b.count_ones() as usize == n / 3)
        .any(|bits| {
            let core = subset(n, bits);
            if !connected_within(adj, &core) {
                return false;
            }
            let mut owner = vec![usize::MAX; n];
            let mut owned = vec![0usize; n];
            for w in (0..n).filter(|&w| !core[w]) {
                let in_core: Vec<usize> = adj[w].iter().copied().filter(|&u| core[u]).collect();
                if in_core.len() != 1 || adj[w].len() > 2 {
                    return false;
                }
                owner[w] = in_core[0];
                owned[in_core[0]] += 1;
            }
            (0..n).all(|c| !core[c] || owned[c] == 2)
                && (0..n)
                    .filter(|&w| !core[w])
                    .all(|w| adj[w].iter().all(|&u| core[u] || owner[u] == owner[w]))
        })
}

pub fn is_k33(adj: &Adj) -> bool {
    if adj.len() != 6 || adj.iter().any(|row| row.len() != 3) {
        return false;
    }
    let side: Vec<usize> = adj[0].clone();
    let other: Vec<usize> = (0..6).filter(|v| !side.contains(v)).collect();
    other
        .iter()
        .all(|&v| side.iter().all(|u| adj[v].contains(u)))
}

/// Degree-sorted signature: connectivity, edge count and degree sequence.
pub fn degrees(adj: &Adj) -> Vec<usize> {
    let mut d: Vec<usize> = adj.iter().map(|r| r.len()).collect();
    d.sort_unstable();
    d
}

pub fn is_path(adj: &Adj) -> bool {
    let n = adj.len();
    is_connected(adj) && edge_list(adj).len() + 1 == n && adj.iter().all(|r| r.len() <= 2)
}

pub fn is_cycle(adj: &Adj) -> bool {
    adj.len() >= 3 && is_connected(adj) && adj.iter().all(|r| r.len() == 2)
}

pub fn is_complete(adj: &Adj) -> bool {
    adj.iter().all(|r| r.len() + 1 == adj.len())
}

pub fn is_star(adj: &Adj) -> bool {
    let n = adj.len();
    n >= 3 && degrees(adj) == [vec![1; n - 1], vec![n - 1]].concat()
}

/// A cycle on all vertices plus one chord: two adjacent vertices of degree
/// 3, the rest of degree 2, and dropping the edge between them leaves a
/// cycle (two cycles joined by a bridge pass the degree test but not this).
pub fn is_cycle_plus_chord(adj: &Adj) -> bool {
    let n = adj.len();
    if n < 4 || edge_list(adj).len() != n + 1 || adj.iter().any(|r| r.len() != 2 && r.len() != 3) {
        return false;
    }
    let big: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    if big.len() != 2 || !adj[big[0]].contains(&big[1]) {
        return false;
    }
    let rest: Vec<(usize, usize)> = edge_list(adj)
        .into_iter()
        .filter(|&e| e != (big[0], big[1]) && e != (big[1], big[0]))
        .collect();
    is_cycle(&adj_from_edges(n, &rest))
}

/// Relabels vertices by `perm` (old `v` becomes `perm[v]`).
pub fn permute(adj: &Adj, perm: &[usize]) -> Adj {
    let edges: Vec<(usize, usize)> = edge_list(adj)
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    adj_from_edges(adj.len(), &edges)
}

pub fn disjoint_union(a: &Adj, b: &Adj) -> Adj {
    let off = a.len();
    let mut edges = edge_list(a);
    edges.extend(edge_list(b).into_iter().map(|(u, v)| (u + off, v + off)));
    adj_from_edges(a.len() + b.len(), &edges)
}

pub fn join(a: &Adj, b: &Adj) -> Adj {
    let off = a.len();
    let mut edges = edge_list(&disjoint_union(a, b));
    for u in 0..a.len() {
        for v in 0..b.len() {
            edges.push((u, v + off));
        }
    }
    adj_from_edges(a.len() + b.len(), &edges)
}

pub fn complete(n: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    adj_from_edges(n, &edges)
}

pub fn path(n: usize) -> Adj {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    adj_from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Adj {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    adj_from_edges(n, &edges)
}

/// Vertex `i` of `h` is merged with `root` of the `i`-th gadget.
pub fn identify(h: &Adj, gadgets: &[(Adj, usize)]) -> Adj {
    let mut edges = edge_list(h);
    let mut next = h.len();
    for (i, (g, root)) in gadgets.iter().enumerate() {
        let mut label = vec![0; g.len()];
        for (v, slot) in label.iter_mut().enumerate() {
            if v == *root {
                *slot = i;
            } else {
                *slot = next;
                next += 1;
            }
        }
        edges.extend(edge_list(g).into_iter().map(|(u, v)| (label[u], label[v])));
    }
    adj_from_edges(next, &edges)
}

/// Whether a coefficient sequence, read from its first nonzero entry, rises
/// weakly to one peak and then falls weakly.
pub fn unimodal(c: &[u64]) -> bool {
    let start = c.iter().position(|&x| x > 0).unwrap_or(0);
    let c = &c[start..];
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}
