//! Cross-module property tests: independent re-derivations of the core
//! invariants, plus exhaustive small grids.

mod common;

use common::*;
use paritycut::balance::{harary_bipartition, is_balanced, sections};
use paritycut::families::negative_homogeneous_is_parity_signed;
use paritycut::oracle::{enumerate_patterns, oracle_is_parity_signed, oracle_rna};
use paritycut::recognition::{contracted_check, is_parity_signed};
use paritycut::rna::{parity_complement, rna_exact};
use paritycut::{
    induced_signature, Graph, ParityLabelling, Sign, SignedGraph, DEFAULT_EXACT_LIMIT,
};
use proptest::prelude::*;
use rand::Rng;

/// Independent balance oracle: every cycle of a fundamental cycle basis of a
/// spanning tree must carry an even number of negative edges.
fn balanced_by_fundamental_cycles(s: &SignedGraph) -> bool {
    let g = s.graph();
    let n = g.n();
    // Build a BFS spanning tree rooted at 0 (input is connected).
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut negatives_to_root = vec![0usize; n];
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut tree_edges = std::collections::HashSet::new();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some(u);
                depth[w] = depth[u] + 1;
                let negative = usize::from(s.sign(u, w) == Some(Sign::Negative));
                negatives_to_root[w] = negatives_to_root[u] + negative;
                tree_edges.insert((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
    }
    // For a non-tree edge (u, v), the fundamental cycle's negative count is
    // the edge's own sign plus the tree-path negatives between u and v.
    s.edges().all(|((u, v), sign)| {
        if tree_edges.contains(&(u, v)) {
            return true;
        }
        let (mut a, mut b) = (u, v);
        let mut negatives = usize::from(sign == Sign::Negative);
        while depth[a] > depth[b] {
            let p = parent[a].unwrap();
            negatives += usize::from(s.sign(a, p) == Some(Sign::Negative));
            a = p;
        }
        while depth[b] > depth[a] {
            let p = parent[b].unwrap();
            negatives += usize::from(s.sign(b, p) == Some(Sign::Negative));
            b = p;
        }
        while a != b {
            let (pa, pb) = (parent[a].unwrap(), parent[b].unwrap());
            negatives += usize::from(s.sign(a, pa) == Some(Sign::Negative));
            negatives += usize::from(s.sign(b, pb) == Some(Sign::Negative));
            a = pa;
            b = pb;
        }
        negatives % 2 == 0
    })
}

/// Strategy: a connected signed graph on 2..=8 vertices.
fn connected_signed_graph() -> impl Strategy<Value = SignedGraph> {
    (2usize..=8, any::<u64>()).prop_map(|(n, seed)| {
        let mut r = rng(seed);
        let g = random_connected_graph(&mut r, n, 0.3);
        random_signs(&mut r, &g)
    })
}

proptest! {
    #[test]
    fn signature_edge_counts_sum(seed in any::<u64>(), n in 1usize..=10) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        let f = random_labelling(&mut r, n);
        let s = induced_signature(&g, &f).unwrap();
        prop_assert_eq!(s.positive_count() + s.negative_count(), g.edge_count());
    }

    #[test]
    fn signature_depends_only_on_parity_pattern(seed in any::<u64>(), n in 1usize..=10) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        let f = random_labelling(&mut r, n);
        // Shuffle labels within each parity class; the odd-vertex set is
        // unchanged, so the signature must be identical.
        let mut odd: Vec<usize> = (1..=n).step_by(2).collect();
        let mut even: Vec<usize> = (2..=n).step_by(2).collect();
        use rand::seq::SliceRandom;
        odd.shuffle(&mut r);
        even.shuffle(&mut r);
        let relabelled =
            paritycut::recognition::permute_within_parity(&f, &odd, &even).unwrap();
        prop_assert_eq!(relabelled.odd_vertices(), f.odd_vertices());
        prop_assert_eq!(
            induced_signature(&g, &relabelled).unwrap(),
            induced_signature(&g, &f).unwrap()
        );
    }

    #[test]
    fn pattern_canonicalization_is_lossless(seed in any::<u64>(), n in 1usize..=10) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        let f = random_labelling(&mut r, n);
        let s = induced_signature(&g, &f).unwrap();
        let odd = f.odd_vertices();
        for ((u, v), sign) in s.edges() {
            let separated = odd.contains(&u) != odd.contains(&v);
            prop_assert_eq!(separated, sign == Sign::Negative);
        }
    }

    #[test]
    fn balance_matches_fundamental_cycle_oracle(s in connected_signed_graph()) {
        prop_assert_eq!(is_balanced(&s).unwrap(), balanced_by_fundamental_cycles(&s));
    }

    #[test]
    fn harary_bipartition_separates_exactly_the_negatives(s in connected_signed_graph()) {
        if let Some(b) = harary_bipartition(&s).unwrap() {
            for ((u, v), sign) in s.edges() {
                prop_assert_eq!(b.separates(u, v), sign == Sign::Negative);
            }
            prop_assert_eq!(b.block_of(0), 0);
        }
    }

    #[test]
    fn sections_partition_the_edge_set(s in connected_signed_graph()) {
        let d = sections(&s);
        let mut all: Vec<(usize, usize)> =
            d.sections.iter().flat_map(|sec| sec.edges.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, s.graph().edges().to_vec());
        let total: usize = d.sections.iter().map(|sec| sec.length()).sum();
        prop_assert_eq!(total, s.edge_count());
    }

    #[test]
    fn contraction_agrees_with_recognition(s in connected_signed_graph()) {
        match contracted_check(&s) {
            Ok(check) => {
                prop_assert!(check.contracted.is_all_negative());
                prop_assert_eq!(check.accepted, is_parity_signed(&s).unwrap().is_yes());
                let weight_total: usize = check.weights.iter().sum();
                prop_assert_eq!(weight_total, s.n());
            }
            Err(paritycut::Error::Unbalanced) => {
                prop_assert!(!is_balanced(&s).unwrap());
            }
            Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
        }
    }

    #[test]
    fn recognition_yes_implies_balanced_and_sound(s in connected_signed_graph()) {
        if let paritycut::RecognitionResult::Yes { witness, bipartition } =
            is_parity_signed(&s).unwrap()
        {
            prop_assert!(is_balanced(&s).unwrap());
            prop_assert_eq!(&induced_signature(s.graph(), &witness).unwrap(), &s);
            prop_assert!(bipartition.size_difference() <= 1);
        }
    }

    #[test]
    fn exact_solver_matches_oracle(seed in any::<u64>(), n in 1usize..=9) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        prop_assert_eq!(
            rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap().cut_size,
            oracle_rna(&g).unwrap()
        );
    }

    #[test]
    fn exact_report_cut_is_consistent(seed in any::<u64>(), n in 1usize..=9) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        let report = rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap();
        prop_assert!(report.bipartition.size_difference() <= 1);
        prop_assert_eq!(report.bipartition.cut_size(&g), report.cut_size);
    }

    #[test]
    fn round_trip_documents(s in connected_signed_graph()) {
        let text = paritycut::io::format_signed_edge_list(&s);
        let parsed = paritycut::io::parse_signed_edge_list(&text).unwrap();
        prop_assert_eq!(parsed, s);
    }
}

#[test]
fn all_positive_connected_graphs_are_rejected() {
    let mut r = rng(41);
    for _ in 0..100 {
        let n = r.random_range(2..=8);
        let g = random_connected_graph(&mut r, n, 0.3);
        let s = SignedGraph::homogeneous(g, Sign::Positive);
        assert!(!is_parity_signed(&s).unwrap().is_yes());
    }
}

/// Every connected all-negative bipartite graph on up to 7 vertices,
/// enumerated by bipartition class: the closed form, general recognition,
/// and the oracle must agree, and acceptance is exactly "part sizes differ
/// by at most one".
#[test]
fn negative_homogeneous_grid_up_to_seven_vertices() {
    let mut checked = 0usize;
    for n in 2..=7usize {
        // Vertex 0 stays on side A;`split` selects side B among the rest.
        for split in 0u32..(1 << (n - 1)) {
            let side_b: Vec<usize> = (1..n).filter(|&v| split >> (v - 1) & 1 == 1).collect();
            let side_a: Vec<usize> = (0..n).filter(|v| !side_b.contains(v)).collect();
            if side_b.is_empty() {
                continue;
            }
            let possible: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a.min(b), a.max(b))))
                .collect();
            for subset in 0u32..(1 << possible.len()) {
                let pairs: Vec<(usize, usize)> = possible
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| subset >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                if pairs.len() < n - 1 {
                    continue; // cannot be connected
                }
                let g = Graph::from_edges(n, &pairs).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let s = SignedGraph::homogeneous(g, Sign::Negative);
                let closed = negative_homogeneous_is_parity_signed(&s).unwrap();
                let general = is_parity_signed(&s).unwrap().is_yes();
                let oracle = oracle_is_parity_signed(&s).unwrap();
                assert_eq!(closed, general);
                assert_eq!(closed, oracle);
                assert_eq!(closed, side_a.len().abs_diff(side_b.len()) <= 1);
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000, "grid unexpectedly small: {checked}");
}

/// The parity complement is itself parity signed, witnessed by the same
/// labelling (checked on instances whose complement is connected).
#[test]
fn parity_complement_stays_parity_signed() {
    let mut r = rng(99);
    let mut verified = 0;
    for _ in 0..400 {
        let n = r.random_range(2..=8);
        let g = random_graph(&mut r, n, 0.4);
        let f = random_labelling(&mut r, n);
        let s = induced_signature(&g, &f).unwrap();
        let complement = parity_complement(&s, &f).unwrap();
        assert_eq!(
            &induced_signature(complement.graph(), &f).unwrap(),
            &complement
        );
        if complement.graph().is_connected() {
            let result = is_parity_signed(&complement).unwrap();
            assert!(result.is_yes());
            verified += 1;
        }
    }
    assert!(verified > 50, "too few connected complements: {verified}");
}

/// Cycle verdicts are invariant under rotation and reflection of the sign
/// pattern.
#[test]
fn cycle_predicate_is_rotation_and_reflection_invariant() {
    use paritycut::families::{cycle_is_parity_signed, signed_cycle};
    let mut r = rng(7);
    for _ in 0..200 {
        let n = r.random_range(3..=10);
        let signs: Vec<Sign> = (0..n)
            .map(|_| {
                if r.random_bool(0.5) {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            })
            .collect();
        let base = cycle_is_parity_signed(&signed_cycle(&signs).unwrap()).unwrap();
        for shift in 1..n {
            let mut rotated = signs.clone();
            rotated.rotate_left(shift);
            assert_eq!(
                cycle_is_parity_signed(&signed_cycle(&rotated).unwrap()).unwrap(),
                base,
                "rotation by {shift} of {signs:?}"
            );
        }
        let reflected: Vec<Sign> = signs.iter().rev().copied().collect();
        assert_eq!(
            cycle_is_parity_signed(&signed_cycle(&reflected).unwrap()).unwrap(),
            base,
            "reflection of {signs:?}"
        );
    }
}

/// Parity labellings of stars with an even edge count realize every rna
/// value: the star with `2k` edges has rna number `k`.
#[test]
fn even_stars_realize_every_rna_value() {
    for k in 1..=8usize {
        let g = star_graph(2 * k);
        assert_eq!(rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap().cut_size, k);
    }
}

/// The exact solver's choice among optimal cuts is schedule-independent by
/// construction; spot-check the documented tie-break on a graph with many
/// optima.
#[test]
fn exact_tie_breaks_lexicographically() {
    // An 8-cycle has eight optimal contiguous splits; block 0 must come out
    // as {0, 1, 2, 3}.
    let g = cycle_graph(8);
    let report = rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap();
    assert_eq!(report.cut_size, 2);
    assert_eq!(report.bipartition.block(0), vec![0, 1, 2, 3]);

    // Odd order: block 0 is the smaller block, lexicographically smallest
    // among optima.
    let g = cycle_graph(7);
    let report = rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap();
    assert_eq!(report.cut_size, 2);
    assert_eq!(report.bipartition.block(0), vec![0, 1, 2]);

    let mut r = rng(13);
    for _ in 0..100 {
        let n = r.random_range(2..=9);
        let g = random_graph(&mut r, n, 0.4);
        let lex = rna_exact(&g, DEFAULT_EXACT_LIMIT).unwrap();
        // Recompute by scanning all near-balanced bipartitions through the
        // oracle's pattern stream, tracking the lexicographically smallest
        // block-0 set among optimal cuts under the same conventions: for odd
        // orders block 0 is the smaller side, for even orders the side
        // holding vertex 0.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for pattern in enumerate_patterns(n) {
            let odd = pattern.membership(n);
            let block0_set: Vec<usize> = if n % 2 == 1 || !odd[0] {
                (0..n).filter(|&v| !odd[v]).collect()
            } else {
                pattern.odd_set().to_vec()
            };
            let cut = g.edges().iter().filter(|&&(u, v)| odd[u] != odd[v]).count();
            let better = match &best {
                None => true,
                Some((c, b)) => cut < *c || (cut == *c && block0_set < *b),
            };
            if better {
                best = Some((cut, block0_set));
            }
        }
        let (cut, block0) = best.unwrap();
        assert_eq!(lex.cut_size, cut);
        assert_eq!(lex.bipartition.block(0), block0, "n={n}");
    }
}

#[test]
fn labelling_round_trip_through_identity() {
    for n in 1..=6 {
        let f = ParityLabelling::identity(n).unwrap();
        assert_eq!(f.labels(), (1..=n).collect::<Vec<_>>().as_slice());
    }
}
