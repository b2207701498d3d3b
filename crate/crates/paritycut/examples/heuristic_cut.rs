//! Local-search cuts beyond the exact solver's range, and a sanity
//! comparison against the exact values where both run.
//!
//! ```bash
//! cargo run --example heuristic_cut
//! ```

use paritycut::rna::{rna_exact, rna_heuristic, rna_is_one};
use paritycut::{Graph, DEFAULT_EXACT_LIMIT};

fn main() -> paritycut::Result<()> {
    // A 60-vertex ring with chords: past the default exact limit, so only
    // the heuristic applies.
    let n = 60;
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    pairs.extend((0..n).step_by(4).map(|i| (i, (i + 11) % n)));
    let big = Graph::from_edges(n, &pairs)?;
    let report = rna_heuristic(&big, 42, 30);
    println!(
        "ring with chords (n={n}, m={}): heuristic cut {} (optimal flag: {})",
        big.edge_count(),
        report.cut_size,
        report.optimal
    );

    // Where the exact solver runs, the heuristic is an upper bound; on
    // these families it lands on the optimum.
    for order in [8usize, 12, 16] {
        let star_pairs: Vec<(usize, usize)> = (1..=order).map(|i| (0, i)).collect();
        let star = Graph::from_edges(order + 1, &star_pairs)?;
        let exact = rna_exact(&star, DEFAULT_EXACT_LIMIT)?.cut_size;
        let heuristic = rna_heuristic(&star, 1, 20).cut_size;
        println!("star with {order} edges: exact {exact}, heuristic {heuristic}");
        assert!(heuristic >= exact);
    }

    // The bridge-based linear-time test for cut value exactly 1.
    let two_cliques = Graph::from_edges(
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 7),
            (3, 4),
        ],
    )?;
    println!(
        "two 4-cliques joined by a bridge: rna is one? {}",
        rna_is_one(&two_cliques)?
    );
    Ok(())
}
