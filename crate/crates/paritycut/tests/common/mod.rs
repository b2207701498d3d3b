//! Shared fixtures and seeded random generators for the integration suites.
#![allow(dead_code)]

use paritycut::{Graph, ParityLabelling, Sign, SignedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random spanning tree by random attachment, plus each remaining
/// pair independently with probability `extra`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        pairs.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !pairs.contains(&(u, v)) && rng.random_bool(extra) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs).unwrap()
}

/// Erdos-Renyi graph; may be disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs).unwrap()
}

pub fn random_signs(rng: &mut ChaCha8Rng, g: &Graph) -> SignedGraph {
    let edges: Vec<(usize, usize, Sign)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let sign = if rng.random_bool(0.5) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            (u, v, sign)
        })
        .collect();
    SignedGraph::from_edges(g.n(), &edges).unwrap()
}

pub fn random_labelling(rng: &mut ChaCha8Rng, n: usize) -> ParityLabelling {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    ParityLabelling::new(labels).unwrap()
}

/// All `2^m` sign vectors of length `m`, bit 0 = first edge.
pub fn all_sign_patterns(m: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0u32..1 << m).map(move |bits| {
        (0..m)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect()
    })
}

pub fn path_graph(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &pairs).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &pairs).unwrap()
}

pub fn star_graph(pendants: usize) -> Graph {
    let pairs: Vec<_> = (1..=pendants).map(|i| (0, i)).collect();
    Graph::from_edges(pendants + 1, &pairs).unwrap()
}

/// Hub 0 joined to every vertex of the rim cycle `1..order`.
pub fn wheel_graph(order: usize) -> Graph {
    let rim = order - 1;
    let mut pairs: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
    for i in 1..rim {
        pairs.push((i, i + 1));
    }
    pairs.push((rim, 1));
    Graph::from_edges(order, &pairs).unwrap()
}

/// Two positive triangles {1,3,5} and {2,4,6} joined by the negative edges
/// 2-3 and 1-4 (1-based names).
pub fn twin_triangles() -> SignedGraph {
    SignedGraph::from_edges(
        6,
        &[
            (0, 2, Sign::Positive),
            (2, 4, Sign::Positive),
            (0, 4, Sign::Positive),
            (5, 3, Sign::Positive),
            (1, 5, Sign::Positive),
            (1, 3, Sign::Positive),
            (1, 2, Sign::Negative),
            (3, 0, Sign::Negative),
        ],
    )
    .unwrap()
}

/// A positive 4-cycle plus a fifth vertex joined to it by two negative
/// edges: balanced, but its Harary blocks have sizes 4 and 1.
pub fn square_with_tail() -> SignedGraph {
    SignedGraph::from_edges(
        5,
        &[
            (0, 1, Sign::Positive),
            (1, 3, Sign::Positive),
            (0, 2, Sign::Positive),
            (2, 3, Sign::Positive),
            (2, 4, Sign::Negative),
            (3, 4, Sign::Negative),
        ],
    )
    .unwrap()
}

/// Four vertices labelled 1..4 with edges 1-2 (-), 2-4 (+), 3-4 (-); its
/// parity complement under the identity labelling has edges 1-3 (+),
/// 1-4 (-), 2-3 (-).
pub fn four_vertex_sample() -> SignedGraph {
    SignedGraph::from_edges(
        4,
        &[
            (0, 1, Sign::Negative),
            (1, 3, Sign::Positive),
            (2, 3, Sign::Negative),
        ],
    )
    .unwrap()
}
