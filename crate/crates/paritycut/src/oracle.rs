//! Brute-force ground truth, kept deliberately independent of the
//! recognition and cut solvers: a labelling's signature depends only on
//! which vertices receive odd labels, so enumerating the `C(n, ceil(n/2))`
//! odd-label patterns covers all `n!` bijections.

use crate::error::{Error, Result};
use crate::graph::{Graph, SignedGraph};

/// Largest order the exhaustive oracle accepts.
pub const ORACLE_LIMIT: usize = 20;

/// The set of vertices receiving odd labels; always `ceil(n/2)` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPattern {
    odd_set: Vec<usize>,
}

impl ParityPattern {
    /// Vertices with odd labels, ascending.
    pub fn odd_set(&self) -> &[usize] {
        &self.odd_set
    }

    /// Per-vertex membership lookup for a graph of order `n`.
    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.odd_set {
            m[v] = true;
        }
        m
    }
}

/// Streams every size-`ceil(n/2)` vertex subset exactly once, in
/// lexicographic order.
pub fn enumerate_patterns(n: usize) -> Patterns {
    let k = n.div_ceil(2);
    Patterns {
        n,
        indices: (0..k).collect(),
        done: n == 0,
    }
}

/// Iterator over parity patterns; see [`enumerate_patterns`].
#[derive(Debug, Clone)]
pub struct Patterns {
    n: usize,
    indices: Vec<usize>,
    done: bool,
}

impl Iterator for Patterns {
    type Item = ParityPattern;

    fn next(&mut self) -> Option<ParityPattern> {
        if self.done {
            return None;
        }
        let current = ParityPattern {
            odd_set: self.indices.clone(),
        };
        // Advance to the next combination in lexicographic order.
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.indices[i] < self.n - (k - i) {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

fn guard(n: usize) -> Result<()> {
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

/// True iff some parity pattern induces exactly the signature of `s`
/// (an edge is negative iff the pattern separates its endpoints).
pub fn oracle_is_parity_signed(s: &SignedGraph) -> Result<bool> {
    guard(s.n())?;
    let edges: Vec<(usize, usize, bool)> = s
        .edges()
        .map(|((u, v), sign)| (u, v, sign.is_negative()))
        .collect();
    for pattern in enumerate_patterns(s.n()) {
        let odd = pattern.membership(s.n());
        if edges
            .iter()
            .all(|&(u, v, negative)| (odd[u] != odd[v]) == negative)
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Minimum, over all parity patterns, of the induced negative-edge count.
pub fn oracle_rna(g: &Graph) -> Result<usize> {
    guard(g.n())?;
    let mut best = usize::MAX;
    for pattern in enumerate_patterns(g.n()) {
        let odd = pattern.membership(g.n());
        let negatives = g.edges().iter().filter(|&&(u, v)| odd[u] != odd[v]).count();
        best = best.min(negatives);
    }
    Ok(best)
}
