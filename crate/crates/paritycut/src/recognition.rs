//! Decides whether a connected signed graph is a parity signed graph,
//! producing a witness labelling or a structural refutation, plus the
//! contraction-based check and the signature-preserving labelling
//! transformations.

use crate::balance::{harary_bipartition, sections};
use crate::error::{Error, Result};
use crate::graph::{induced_signature, Bipartition, ParityLabelling, Sign, SignedGraph};
use std::fmt;

/// Why a signed graph fails to be parity signed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    /// Some cycle carries an odd number of negative edges.
    Unbalanced,
    /// Balanced, but the Harary blocks differ in size by `difference` >= 2.
    Imbalanced { difference: usize },
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::Unbalanced => write!(f, "Unbalanced"),
            Refutation::Imbalanced { difference } => write!(f, "Imbalanced({difference})"),
        }
    }
}

/// Outcome of parity-signed recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    /// The signature is induced by `witness`; `bipartition` is the Harary
    /// bipartition (block 0 contains vertex 0).
    Yes {
        witness: ParityLabelling,
        bipartition: Bipartition,
    },
    No {
        reason: Refutation,
    },
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionResult::Yes { .. })
    }

    pub fn witness(&self) -> Option<&ParityLabelling> {
        match self {
            RecognitionResult::Yes { witness, .. } => Some(witness),
            RecognitionResult::No { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<Refutation> {
        match self {
            RecognitionResult::Yes { .. } => None,
            RecognitionResult::No { reason } => Some(*reason),
        }
    }
}

/// A connected signed graph is parity signed iff it is balanced and its
/// Harary blocks differ in size by at most one. On acceptance the witness
/// gives the odd labels `1, 3, 5, ...` to the larger block (ties: the block
/// containing vertex 0), ascending by vertex id, and the even labels to the
/// other block likewise.
pub fn is_parity_signed(s: &SignedGraph) -> Result<RecognitionResult> {
    let Some(bipartition) = harary_bipartition(s)? else {
        return Ok(RecognitionResult::No {
            reason: Refutation::Unbalanced,
        });
    };
    let (size0, size1) = bipartition.sizes();
    let difference = size0.abs_diff(size1);
    if difference > 1 {
        return Ok(RecognitionResult::No {
            reason: Refutation::Imbalanced { difference },
        });
    }
    let odd_block = usize::from(size1 > size0);
    let n = s.n();
    let mut labels = vec![0usize; n];
    for (i, v) in bipartition.block(odd_block).into_iter().enumerate() {
        labels[v] = 2 * i + 1;
    }
    for (i, v) in bipartition.block(1 - odd_block).into_iter().enumerate() {
        labels[v] = 2 * i + 2;
    }
    let witness = ParityLabelling::new(labels).expect("block labelling is a bijection");
    debug_assert_eq!(&induced_signature(s.graph(), &witness).unwrap(), s);
    Ok(RecognitionResult::Yes {
        witness,
        bipartition,
    })
}

/// Result of the contraction-based recognition routine: positive sections
/// collapse to weighted vertices, remaining vertices get weight 1, and the
/// all-negative contracted graph is two-colored and its class weights summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedCheck {
    /// The contracted graph; every edge is negative.
    pub contracted: SignedGraph,
    /// Weight of each contracted vertex (order of its positive section, or 1).
    pub weights: Vec<usize>,
    /// Original vertex -> contracted vertex.
    pub vertex_map: Vec<usize>,
    /// Two-coloring of the contracted graph; class 0 holds vertex 0's image.
    pub classes: Bipartition,
    /// Summed weights of class 0 and class 1.
    pub class_sums: (usize, usize),
    /// True iff the class sums differ by at most one.
    pub accepted: bool,
}

/// Contracts each positive section to a weighted vertex and accepts iff the
/// two color classes of the resulting all-negative graph have weight sums
/// differing by at most one. Agrees with [`is_parity_signed`] on every
/// connected balanced input; unbalanced input is an error.
pub fn contracted_check(s: &SignedGraph) -> Result<ContractedCheck> {
    if harary_bipartition(s)?.is_none() {
        return Err(Error::Unbalanced);
    }
    let n = s.n();

    // Group vertices: positive sections are vertex-disjoint, so each vertex
    // lies in at most one.
    let mut group_of: Vec<Option<usize>> = vec![None; n];
    let mut group_members: Vec<Vec<usize>> = Vec::new();
    for sec in sections(s).positive() {
        let id = group_members.len();
        for &v in &sec.vertices {
            debug_assert!(group_of[v].is_none());
            group_of[v] = Some(id);
        }
        group_members.push(sec.vertices.clone());
    }
    for (v, slot) in group_of.iter_mut().enumerate() {
        if slot.is_none() {
            *slot = Some(group_members.len());
            group_members.push(vec![v]);
        }
    }

    // Number contracted vertices by their smallest original member, so the
    // image of vertex 0 is contracted vertex 0.
    let mut order: Vec<usize> = (0..group_members.len()).collect();
    order.sort_by_key(|&g| group_members[g][0]);
    let mut contracted_id = vec![0usize; group_members.len()];
    for (new_id, &g) in order.iter().enumerate() {
        contracted_id[g] = new_id;
    }
    let vertex_map: Vec<usize> = (0..n)
        .map(|v| contracted_id[group_of[v].unwrap()])
        .collect();
    let mut weights = vec![0usize; group_members.len()];
    for (g, members) in group_members.iter().enumerate() {
        weights[contracted_id[g]] = members.len();
    }

    let mut contracted_edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for ((u, v), sign) in s.edges() {
        if sign.is_negative() {
            let (a, b) = (
                vertex_map[u].min(vertex_map[v]),
                vertex_map[u].max(vertex_map[v]),
            );
            debug_assert_ne!(a, b, "balanced graphs contract without self-loops");
            if seen.insert((a, b)) {
                contracted_edges.push((a, b, Sign::Negative));
            }
        }
    }
    let contracted = SignedGraph::from_edges(group_members.len(), &contracted_edges)?;

    let classes = harary_bipartition(&contracted)?
        .expect("all-negative contraction of a balanced graph is bipartite");
    let sum = |b: usize| {
        classes
            .block(b)
            .into_iter()
            .map(|v| weights[v])
            .sum::<usize>()
    };
    let class_sums = (sum(0), sum(1));
    let accepted = class_sums.0.abs_diff(class_sums.1) <= 1;
    Ok(ContractedCheck {
        contracted,
        weights,
        vertex_map,
        classes,
        class_sums,
        accepted,
    })
}

/// The mirrored labelling `v -> n + 1 - f(v)`; induces the same signature.
pub fn reverse_labelling(f: &ParityLabelling) -> ParityLabelling {
    let n = f.n();
    ParityLabelling::new(f.labels().iter().map(|&l| n + 1 - l).collect())
        .expect("mirror of a bijection is a bijection")
}

/// Relabels within the parity classes. `perm_odd` lists the images of the
/// odd labels in use, ascending by source label; `perm_even` likewise for
/// the even labels. The induced signature is unchanged.
pub fn permute_within_parity(
    f: &ParityLabelling,
    perm_odd: &[usize],
    perm_even: &[usize],
) -> Result<ParityLabelling> {
    let n = f.n();
    let odd_labels: Vec<usize> = (1..=n).step_by(2).collect();
    let even_labels: Vec<usize> = (2..=n).step_by(2).collect();
    let check = |perm: &[usize], labels: &[usize], which: &'static str| -> Result<()> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != labels {
            return Err(Error::InvalidPermutation(which));
        }
        Ok(())
    };
    check(perm_odd, &odd_labels, "odd")?;
    check(perm_even, &even_labels, "even")?;

    let mut image = vec![0usize; n + 1];
    for (src, &dst) in odd_labels.iter().zip(perm_odd) {
        image[*src] = dst;
    }
    for (src, &dst) in even_labels.iter().zip(perm_even) {
        image[*src] = dst;
    }
    ParityLabelling::new(f.labels().iter().map(|&l| image[l]).collect())
}
