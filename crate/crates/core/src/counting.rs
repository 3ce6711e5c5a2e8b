//! Exact 𝒫(G;x), 𝒵(G;x) and 𝒟(G;x) by subset enumeration.
//!
//! The lattice engine visits subsets layer by layer in increasing size and
//! keeps one status bit per subset, indexed by the subset's bit pattern. All
//! three properties are closed under supersets, so a subset is marked as soon
//! as one of its children `S \ {v}` is; only the rest are simulated. Each
//! layer is split across rayon workers that read layer `k-1` and write
//! disjoint bits of layer `k`.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::polynomial::IntPolynomial;
use crate::propagation::{closed_neighborhood_bits, Propagator};

/// Enumeration strategy for [`pd_polynomial`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Auto,
    Lattice,
    Plain,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "lattice" => Ok(Method::Lattice),
            "plain" => Ok(Method::Plain),
            _ => Err(Error::Format(format!(
                "unknown method {s:?} (auto|lattice|plain)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountConfig {
    pub lattice_cap: usize,
    pub plain_cap: usize,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            lattice_cap: 26,
            plain_cap: 20,
        }
    }
}

/// Which superset-closed property to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    PowerDominating,
    ZeroForcing,
    Dominating,
}

impl Property {
    #[inline]
    fn holds(self, prop: &mut Propagator, adj: &[u64], s: u64) -> bool {
        match self {
            Property::PowerDominating => prop.is_power_dominating_bits(adj, s),
            Property::ZeroForcing => prop.is_zero_forcing_bits(adj, s),
            Property::Dominating => crate::propagation::is_dominating_bits(adj, s),
        }
    }
}

pub fn pd_polynomial(g: &Graph, method: Method) -> Result<IntPolynomial> {
    count_polynomial(
        g,
        Property::PowerDominating,
        method,
        &CountConfig::default(),
    )
}

pub fn zf_polynomial(g: &Graph) -> Result<IntPolynomial> {
    count_polynomial(
        g,
        Property::ZeroForcing,
        Method::Auto,
        &CountConfig::default(),
    )
}

pub fn dom_polynomial(g: &Graph) -> Result<IntPolynomial> {
    count_polynomial(
        g,
        Property::Dominating,
        Method::Auto,
        &CountConfig::default(),
    )
}

/// Number of power dominating sets, `𝒫(G;1)`.
pub fn pd_set_count(g: &Graph) -> Result<BigInt> {
    Ok(pd_polynomial(g, Method::Auto)?.eval_int(&BigInt::from(1)))
}

pub fn count_polynomial(
    g: &Graph,
    property: Property,
    method: Method,
    cfg: &CountConfig,
) -> Result<IntPolynomial> {
    let n = g.order();
    let counts = match method {
        Method::Auto | Method::Lattice => {
            if n > cfg.lattice_cap {
                return Err(Error::TooLarge {
                    n,
                    cap: cfg.lattice_cap,
                    what: "lattice counting",
                });
            }
            lattice_counts(g.rows(), property)
        }
        Method::Plain => {
            if n > cfg.plain_cap {
                return Err(Error::TooLarge {
                    n,
                    cap: cfg.plain_cap,
                    what: "plain counting",
                });
            }
            plain_counts(g.rows(), property)
        }
    };
    Ok(IntPolynomial::from_u64s(&counts))
}

const CHUNK: u64 = 1 << 12;

/// Table of C(n,k) as u64 for n ≤ 64.
fn binomial_table(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = 1;
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1].saturating_add(if j < i { t[i - 1][j] } else { 0 });
        }
    }
    t
}

/// The `rank`-th k-subset of `{0..n}` in colexicographic order, which is
/// also increasing numeric order of the bit patterns.
fn unrank(binom: &[Vec<u64>], n: usize, k: usize, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut hi = n;
    for j in (1..=k).rev() {
        // Largest c < hi with C(c, j) <= rank.
        let mut c = j - 1;
        while c + 1 < hi && binom[c + 1][j] <= rank {
            c += 1;
        }
        rank -= binom[c][j];
        mask |= 1 << c;
        hi = c;
    }
    mask
}

#[inline]
fn next_same_popcount(s: u64) -> u64 {
    let c = s & s.wrapping_neg();
    let r = s.wrapping_add(c);
    (((r ^ s) >> 2) / c) | r
}

/// Runs `visit` over the k-subsets of an n-set split into parallel chunks,
/// summing the per-chunk return values.
fn par_layer<F>(binom: &[Vec<u64>], n: usize, k: usize, visit: F) -> u64
where
    F: Fn(&mut Propagator, u64) -> bool + Sync,
{
    let total = binom[n][k];
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map_init(Propagator::new, |prop, c| {
            let start = c * CHUNK;
            let len = CHUNK.min(total - start);
            let mut s = unrank(binom, n, k, start);
            let mut hits = 0u64;
            for i in 0..len {
                if visit(prop, s) {
                    hits += 1;
                }
                if i + 1 < len {
                    s = next_same_popcount(s);
                }
            }
            hits
        })
        .sum()
}

fn lattice_counts(adj: &[u64], property: Property) -> Vec<u64> {
    let n = adj.len();
    let binom = binomial_table(n);
    let words = (1usize << n).div_ceil(64);
    let status: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();
    let get = |s: u64| status[(s >> 6) as usize].load(Ordering::Relaxed) >> (s & 63) & 1 == 1;
    let mut counts = vec![0u64; n + 1];
    let mut k = 1;
    while k <= n {
        let layer = par_layer(&binom, n, k, |prop, s| {
            let mut rest = s;
            let mut inherited = false;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                rest ^= low;
                if get(s ^ low) {
                    inherited = true;
                    break;
                }
            }
            if inherited || property.holds(prop, adj, s) {
                status[(s >> 6) as usize].fetch_or(1 << (s & 63), Ordering::Relaxed);
                true
            } else {
                false
            }
        });
        counts[k] = layer;
        k += 1;
        if layer == binom[n][k - 1] {
            // Every superset of a full layer qualifies.
            counts[k..=n].copy_from_slice(&binom[n][k..=n]);
            break;
        }
    }
    counts
}

fn plain_counts(adj: &[u64], property: Property) -> Vec<u64> {
    let n = adj.len();
    let binom = binomial_table(n);
    let mut counts = vec![0u64; n + 1];
    for (k, slot) in counts.iter_mut().enumerate().skip(1) {
        *slot = par_layer(&binom, n, k, |prop, s| property.holds(prop, adj, s));
    }
    counts
}

/// `(n-k, p(G;n-k))` for `k = 0..=kmax`, counting only the k-subsets `S`
/// whose complement power dominates: those for which `S ∩ N(V \ S)` zero
/// forces `G[S]`.
pub fn pd_tail_coefficients(g: &Graph, kmax: usize) -> Result<Vec<(usize, BigInt)>> {
    let n = g.order();
    if kmax >= n {
        return Err(Error::Domain(format!(
            "kmax must be at most n-1 = {}, got {kmax}",
            n - 1
        )));
    }
    let adj = g.rows();
    let all = VertexSet::full(n).bits();
    let binom = binomial_table(n);
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let count = if k == 0 {
            1
        } else {
            par_layer(&binom, n, k, |prop, s| tail_condition(prop, adj, all, s))
        };
        out.push((n - k, BigInt::from(count)));
    }
    Ok(out)
}

#[inline]
fn tail_condition(prop: &mut Propagator, adj: &[u64], all: u64, s: u64) -> bool {
    let outside = all & !s;
    let boundary = s & closed_neighborhood_bits(adj, outside);
    prop.close_within(adj, boundary, s, |_, _| {}) == s
}
