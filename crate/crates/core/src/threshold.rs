//! Threshold graphs generated by binary strings, their power dominating
//! sets, and an O(n²) recurrence for their polynomial.
//!
//! Vertex `i` is symbol `i`; for `i < j` the edge `ij` is present iff
//! symbol `j` is 1. Blocks are maximal runs of equal symbols.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::polynomial::{pascal_step, IntPolynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockString {
    pub bits: Vec<bool>,
    /// `(symbol, length)` for each maximal run.
    pub blocks: Vec<(bool, usize)>,
    pub normalized: bool,
}

impl BlockString {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Index of the block containing each vertex.
    pub fn block_of(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, &(_, len))| std::iter::repeat_n(i, len))
            .collect()
    }

    fn ends_in_one(&self) -> Result<()> {
        match self.blocks.last() {
            Some((true, _)) => Ok(()),
            _ => Err(Error::NotConnectedForm),
        }
    }
}

impl std::fmt::Display for BlockString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Format(format!("binary string contains {c:?}"))),
        })
        .collect()
}

fn blocks_of(bits: &[bool]) -> Vec<(bool, usize)> {
    let mut blocks: Vec<(bool, usize)> = Vec::new();
    for &b in bits {
        match blocks.last_mut() {
            Some((sym, len)) if *sym == b => *len += 1,
            _ => blocks.push((b, 1)),
        }
    }
    blocks
}

/// Rewrites the first symbol to equal the second (which leaves `T(B)`
/// unchanged) and splits into blocks.
pub fn normalize(text: &str) -> Result<BlockString> {
    let mut bits = parse_bits(text)?;
    if bits.len() < 2 {
        return Err(Error::TooShort);
    }
    bits[0] = bits[1];
    let blocks = blocks_of(&bits);
    Ok(BlockString {
        bits,
        blocks,
        normalized: true,
    })
}

pub fn threshold_graph(b: &BlockString) -> Graph {
    threshold_graph_from_bits(&b.bits)
}

fn threshold_graph_from_bits(bits: &[bool]) -> Graph {
    let n = bits.len();
    let mut edges = Vec::new();
    for (j, &bit) in bits.iter().enumerate() {
        if bit {
            edges.extend((0..j).map(|i| (i, j)));
        }
    }
    Graph::from_edge_list(n, &edges).expect("threshold edges are valid")
}

/// Power domination test without simulation: some `v ∈ s` has every
/// 1-vertex in `N[v]`, and each 0-block from `v`'s block onward has at most
/// one vertex outside `s`.
pub fn is_threshold_pds(b: &BlockString, s: VertexSet) -> Result<bool> {
    b.ends_in_one()?;
    let g = threshold_graph(b);
    let ones = VertexSet::from_vertices(b.len(), (0..b.len()).filter(|&i| b.bits[i]));
    let block_of = b.block_of();
    let mut missing = vec![0usize; b.blocks.len()];
    for v in (0..b.len()).filter(|&v| !s.contains(v)) {
        missing[block_of[v]] += 1;
    }
    Ok(s.iter().any(|v| {
        ones.is_subset(&g.closed_neighbors(v))
            && (block_of[v]..b.blocks.len()).all(|i| b.blocks[i].0 || missing[i] <= 1)
    }))
}

/// Output of the block recurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdRun {
    pub polynomial: IntPolynomial,
    /// Coefficient reads/writes performed, including Pascal-row updates.
    pub ops: u64,
    /// `(b₁+…+b_i, 𝒫(T_i))` after each block, in order.
    pub intermediates: Vec<(usize, IntPolynomial)>,
}

/// Binomial rows `C(t, ·)` for increasing `t`, one Pascal step at a time.
struct PascalRows {
    row: Vec<BigInt>,
    ops: u64,
}

impl PascalRows {
    fn new() -> Self {
        PascalRows {
            row: vec![BigInt::from(1)],
            ops: 0,
        }
    }

    fn advance_to(&mut self, t: usize) -> &[BigInt] {
        while self.row.len() <= t {
            self.ops += self.row.len() as u64;
            pascal_step(&mut self.row);
        }
        &self.row
    }
}

/// 𝒫(T(B);x) for a normalized string whose last block is a 1-block.
///
/// Array index equals the power of `x`. Per block pair the order is: shift
/// right by the 0-block length, zero the low entries, add `b_{i-1}` times
/// the next entry (ascending, so each read sees the old value), add the row
/// `C(s+b_i, ·)`, then subtract `C(s, ·)`.
pub fn threshold_pd_polynomial(b: &BlockString) -> Result<ThresholdRun> {
    b.ends_in_one()?;
    if !b.normalized || b.blocks[0].1 < 2 {
        return Err(Error::Domain("block string is not normalized".into()));
    }
    let n = b.len();
    let lens: Vec<usize> = b.blocks.iter().map(|&(_, len)| len).collect();
    let omega = lens.len();
    let mut a = vec![BigInt::zero(); n + 1];
    let mut ops = 0u64;
    let mut pascal = PascalRows::new();
    let mut intermediates = Vec::with_capacity(omega);
    let snapshot = |a: &[BigInt], upto: usize| IntPolynomial::from_coeffs(a[..=upto].to_vec());

    // `i` is the 1-based index of the next block to process.
    let mut i;
    let b1 = lens[0];
    if b.blocks[0].0 {
        let row = pascal.advance_to(b1);
        for j in 1..=b1 {
            a[j] = row[j].clone();
            ops += 1;
        }
        intermediates.push((b1, snapshot(&a, b1)));
        i = 2;
    } else {
        a[b1] = BigInt::from(1);
        intermediates.push((b1, snapshot(&a, b1)));
        a[b1 - 1] = BigInt::from(b1);
        ops += 2;
        let total = b1 + lens[1];
        let low = pascal.advance_to(b1).to_vec();
        let row = pascal.advance_to(total);
        for j in 1..=total {
            a[j] += &row[j];
            ops += 1;
        }
        for j in 1..=b1 {
            a[j] -= &low[j];
            ops += 1;
        }
        intermediates.push((total, snapshot(&a, total)));
        i = 3;
    }

    while i < omega {
        // Block i (1-based) is a 0-block: multiply by x^{b_i}.
        let bi = lens[i - 1];
        let s: usize = lens[..i - 1].iter().sum();
        for j in (bi + 1..=s + bi).rev() {
            a[j] = a[j - bi].clone();
            ops += 1;
        }
        for slot in a.iter_mut().take(bi + 1).skip(1) {
            *slot = BigInt::zero();
            ops += 1;
        }
        intermediates.push((s + bi, snapshot(&a, s + bi)));
        i += 1;

        // Block i is a 1-block: join with K_{b_i}.
        let prev = BigInt::from(lens[i - 2]);
        let bi = lens[i - 1];
        let s: usize = lens[..i - 1].iter().sum();
        for j in 1..s {
            let next = &a[j + 1] * &prev;
            a[j] += next;
            ops += 1;
        }
        let low = pascal.advance_to(s).to_vec();
        let row = pascal.advance_to(s + bi);
        for j in 1..=s + bi {
            a[j] += &row[j];
            ops += 1;
        }
        for j in 1..=s {
            a[j] -= &low[j];
            ops += 1;
        }
        intermediates.push((s + bi, snapshot(&a, s + bi)));
        i += 1;
    }

    Ok(ThresholdRun {
        polynomial: IntPolynomial::from_coeffs(a),
        ops: ops + pascal.ops,
        intermediates,
    })
}

/// Accepts any nonempty binary string: trailing 0s are isolated vertices
/// and contribute a factor `x` each; a string of 0s gives `x^n`.
pub fn threshold_pd_polynomial_any(text: &str) -> Result<ThresholdRun> {
    let bits = parse_bits(text)?;
    if bits.is_empty() {
        return Err(Error::TooShort);
    }
    let trailing = bits.iter().rev().take_while(|&&b| !b).count();
    let head = &bits[..bits.len() - trailing];
    let mut run = match head.len() {
        0 => ThresholdRun {
            polynomial: IntPolynomial::one(),
            ops: 0,
            intermediates: Vec::new(),
        },
        1 => ThresholdRun {
            polynomial: IntPolynomial::x_pow(1),
            ops: 0,
            intermediates: vec![(1, IntPolynomial::x_pow(1))],
        },
        _ => {
            let text: String = head.iter().map(|&b| if b { '1' } else { '0' }).collect();
            threshold_pd_polynomial(&normalize(&text)?)?
        }
    };
    if trailing > 0 {
        run.polynomial = run.polynomial.shift(trailing);
        run.ops += trailing as u64;
        run.intermediates.push((bits.len(), run.polynomial.clone()));
    }
    Ok(run)
}

/// The threshold graph of any string of length ≥ 1 (first symbol ignored).
pub fn threshold_graph_any(text: &str) -> Result<Graph> {
    let bits = parse_bits(text)?;
    if bits.is_empty() {
        return Err(Error::TooShort);
    }
    Ok(threshold_graph_from_bits(&bits))
}
