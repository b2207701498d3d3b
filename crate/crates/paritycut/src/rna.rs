//! The rna number (minimum negative-edge count over all parity labellings,
//! equivalently the minimum cut over near-balanced bipartitions) and its
//! companions: the adhika number, closed-form family values, the
//! bridge-based `sigma- = 1` test, a local-search heuristic, cordiality
//! checks, and the parity complement.

use crate::error::{Error, Result};
use crate::families::FamilyDescriptor;
use crate::graph::{induced_signature, Bipartition, Graph, ParityLabelling, Sign, SignedGraph};
use crate::recognition::{is_parity_signed, RecognitionResult};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default order bound for the exhaustive solver.
pub const DEFAULT_EXACT_LIMIT: usize = 28;

/// Hard engine cap: past order 32 the subset space is out of reach for an
/// exhaustive scan regardless of the caller's limit.
const MASK_LIMIT: usize = 32;

/// How a cut value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutMethod {
    Exact,
    Formula,
    Heuristic,
}

impl CutMethod {
    pub fn name(self) -> &'static str {
        match self {
            CutMethod::Exact => "exact",
            CutMethod::Formula => "formula",
            CutMethod::Heuristic => "heuristic",
        }
    }
}

/// A near-balanced bipartition together with its cut size.
///
/// Block sizes differ by at most one. `optimal` is true only when the value
/// is known to be the minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutReport {
    pub bipartition: Bipartition,
    pub cut_size: usize,
    pub method: CutMethod,
    pub optimal: bool,
}

/// True iff the block-0 set `a` precedes `b` lexicographically as a sorted
/// vertex list; both masks must have equal popcount.
fn lex_smaller(a: u64, b: u64) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    a & (d & d.wrapping_neg()) != 0
}

/// Gosper's hack: next bitmask with the same popcount.
fn next_subset(v: u64) -> u64 {
    let t = v | (v.wrapping_sub(1));
    t.wrapping_add(1) | (((!t & t.wrapping_add(1)).wrapping_sub(1)) >> (v.trailing_zeros() + 1))
}

/// Exhaustive minimum cut over all bipartitions with block sizes differing
/// by at most one.
///
/// Symmetry is broken by fixing vertex 0's block when `n` is even and by
/// designating the smaller block as block 0 when `n` is odd; among optimal
/// cuts, the lexicographically smallest block-0 vertex set is reported.
/// `limit` may be raised past the default up to order 32; beyond that use
/// [`rna_heuristic`].
pub fn rna_exact(g: &Graph, limit: usize) -> Result<CutReport> {
    let n = g.n();
    let effective = limit.min(MASK_LIMIT);
    if n > effective {
        return Err(Error::TooLarge {
            n,
            limit: effective,
        });
    }
    let mut adjacency = vec![0u64; n];
    for &(u, v) in g.edges() {
        adjacency[u] |= 1 << v;
        adjacency[v] |= 1 << u;
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let cut_of = |mask: u64| -> usize {
        let other = full & !mask;
        let mut cut = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (adjacency[v] & other).count_ones();
        }
        cut as usize
    };

    let mut best_cut = usize::MAX;
    let mut best_mask = 0u64;
    let mut consider = |mask: u64| {
        let cut = cut_of(mask);
        if cut < best_cut || (cut == best_cut && lex_smaller(mask, best_mask)) {
            best_cut = cut;
            best_mask = mask;
        }
    };

    if n.is_multiple_of(2) {
        // Block 0 contains vertex 0; choose the other n/2 - 1 members among
        // the remaining n - 1 vertices.
        let k = n / 2 - 1;
        if k == 0 {
            consider(1);
        } else {
            let bits = n - 1;
            let mut m: u64 = (1 << k) - 1;
            while m < (1u64 << bits) {
                consider((m << 1) | 1);
                m = next_subset(m);
            }
        }
    } else {
        // Block 0 is the smaller block.
        let k = n / 2;
        if k == 0 {
            consider(0);
        } else {
            let mut m: u64 = (1 << k) - 1;
            while m < (1u64 << n) {
                consider(m);
                m = next_subset(m);
            }
        }
    }

    let membership = (0..n).map(|v| best_mask >> v & 1 == 0).collect();
    Ok(CutReport {
        bipartition: Bipartition::from_membership(membership),
        cut_size: best_cut,
        method: CutMethod::Exact,
        optimal: true,
    })
}

/// Maximum positive-edge count over all parity labellings; equals
/// `|E| - rna_exact(g)` since every labelling splits the edge set.
pub fn adhika(g: &Graph, limit: usize) -> Result<usize> {
    Ok(g.edge_count() - rna_exact(g, limit)?.cut_size)
}

/// Closed-form rna values: `ceil(edges / 2)` for stars, 1 for paths of
/// order at least 2, 2 for cycles, `floor((order + 4) / 2)` for wheels.
pub fn rna_formula(d: &FamilyDescriptor) -> Result<usize> {
    match d {
        FamilyDescriptor::Star { positive, negative } => {
            let edges = positive + negative;
            if edges == 0 {
                return Err(Error::NoKnownFormula);
            }
            Ok(edges.div_ceil(2))
        }
        FamilyDescriptor::Path { n } if *n >= 2 => Ok(1),
        FamilyDescriptor::Cycle { n } if *n >= 3 => Ok(2),
        FamilyDescriptor::Wheel { order } if *order >= 4 => Ok((order + 4) / 2),
        _ => Err(Error::NoKnownFormula),
    }
}

/// Linear-time test for `sigma- = 1`: a connected graph has rna number 1
/// iff it has a bridge whose removal leaves components with orders
/// differing by at most one.
pub fn rna_is_one(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n < 2 {
        return Ok(false);
    }

    // Iterative DFS computing discovery and low-link times plus subtree
    // sizes; a tree edge (u, v) is a bridge when low[v] > disc[u].
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut subtree = vec![1usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_child = vec![0usize; n];
    let mut time = 0;
    let mut stack = vec![0usize];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut balanced_bridge = false;

    while let Some(&u) = stack.last() {
        if next_child[u] < g.degree(u) {
            let v = g.neighbors(u)[next_child[u]];
            next_child[u] += 1;
            if disc[v] == usize::MAX {
                parent[v] = u;
                disc[v] = time;
                low[v] = time;
                time += 1;
                stack.push(v);
            } else if v != parent[u] {
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[u]);
                subtree[p] += subtree[u];
                if low[u] > disc[p] {
                    let (a, b) = (subtree[u], n - subtree[u]);
                    if a.abs_diff(b) <= 1 {
                        balanced_bridge = true;
                    }
                }
            }
        }
    }
    Ok(balanced_bridge)
}

/// Local-search upper bound on the rna number: repeated best-improvement
/// swaps between the blocks of a random near-balanced bipartition, with
/// `restarts` independent starts. Deterministic for a fixed seed; never
/// below the true value.
pub fn rna_heuristic(g: &Graph, seed: u64, restarts: usize) -> CutReport {
    let n = g.n();
    let block0_size = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut best_cut = usize::MAX;
    let mut best_in0: Vec<bool> = Vec::new();
    for _ in 0..restarts.max(1) {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut in0 = vec![false; n];
        for &v in &order[..block0_size] {
            in0[v] = true;
        }
        let (cut, in0) = local_search(g, in0);
        let in0 = canonicalize(n, in0);
        if cut < best_cut || (cut == best_cut && block0_lex_smaller(&in0, &best_in0)) {
            best_cut = cut;
            best_in0 = in0;
        }
    }

    let membership = best_in0.iter().map(|&x| !x).collect();
    CutReport {
        bipartition: Bipartition::from_membership(membership),
        cut_size: best_cut,
        method: CutMethod::Heuristic,
        optimal: false,
    }
}

/// Runs best-improvement swap moves until no swap strictly decreases the cut.
fn local_search(g: &Graph, mut in0: Vec<bool>) -> (usize, Vec<bool>) {
    let n = g.n();
    loop {
        // Degree of each vertex into the other block minus into its own.
        let mut external = vec![0isize; n];
        for &(u, v) in g.edges() {
            if in0[u] != in0[v] {
                external[u] += 1;
                external[v] += 1;
            } else {
                external[u] -= 1;
                external[v] -= 1;
            }
        }
        let mut best_gain = 0isize;
        let mut best_pair = None;
        for u in 0..n {
            if !in0[u] {
                continue;
            }
            for v in 0..n {
                if in0[v] {
                    continue;
                }
                let gain = external[u] + external[v] - 2 * isize::from(g.has_edge(u, v));
                if gain > best_gain {
                    best_gain = gain;
                    best_pair = Some((u, v));
                }
            }
        }
        match best_pair {
            Some((u, v)) => {
                in0[u] = false;
                in0[v] = true;
            }
            None => break,
        }
    }
    let cut = g.edges().iter().filter(|&&(u, v)| in0[u] != in0[v]).count();
    (cut, in0)
}

/// Normalizes block roles: for even orders vertex 0 ends up in block 0;
/// for odd orders block 0 is the smaller block (as in the exact solver).
fn canonicalize(n: usize, in0: Vec<bool>) -> Vec<bool> {
    let needs_swap = if n.is_multiple_of(2) {
        !in0[0]
    } else {
        in0.iter().filter(|&&x| x).count() > n / 2
    };
    if needs_swap {
        in0.into_iter().map(|x| !x).collect()
    } else {
        in0
    }
}

fn block0_lex_smaller(a: &[bool], b: &[bool]) -> bool {
    if b.is_empty() {
        return true;
    }
    for v in 0..a.len() {
        if a[v] != b[v] {
            return a[v];
        }
    }
    false
}

/// A parity signed graph is cordial if its positive and negative edge
/// counts differ by at most one.
pub fn is_cordial(s: &SignedGraph) -> Result<bool> {
    match is_parity_signed(s)? {
        RecognitionResult::Yes { .. } => Ok(s.negative_count().abs_diff(s.positive_count()) <= 1),
        RecognitionResult::No { .. } => Err(Error::NotParitySigned),
    }
}

/// A graph is absolutely cordial if its rna and adhika numbers differ by at
/// most one, i.e. `| |E| - 2 * sigma- | <= 1`.
pub fn is_absolutely_cordial(g: &Graph, limit: usize) -> Result<bool> {
    let sigma_minus = rna_exact(g, limit)?.cut_size;
    let sigma_plus = g.edge_count() - sigma_minus;
    Ok(sigma_minus.abs_diff(sigma_plus) <= 1)
}

/// The parity complement: the complement of the underlying graph, signed by
/// the same labelling's parities. `labelling` must induce the signature of
/// `s` exactly.
pub fn parity_complement(s: &SignedGraph, labelling: &ParityLabelling) -> Result<SignedGraph> {
    if labelling.n() != s.n() || &induced_signature(s.graph(), labelling)? != s {
        return Err(Error::LabellingNotWitness);
    }
    let complement = s.graph().complement();
    let signs: Vec<(usize, usize, Sign)> = complement
        .edges()
        .iter()
        .map(|&(u, v)| {
            let sign = if labelling.is_odd(u) == labelling.is_odd(v) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            (u, v, sign)
        })
        .collect();
    SignedGraph::from_edges(s.n(), &signs)
}
