//! The contraction route to recognition: collapse each positive section to
//! a weighted vertex, two-color the all-negative remainder, and compare the
//! class weight sums.
//!
//! ```bash
//! cargo run --example contraction_check
//! ```

use paritycut::recognition::{contracted_check, is_parity_signed};
use paritycut::Sign::{Negative as N, Positive as P};
use paritycut::SignedGraph;

fn show(name: &str, s: &SignedGraph) -> paritycut::Result<()> {
    let check = contracted_check(s)?;
    println!("{name}:");
    println!(
        "  contracted to {} vertices with weights {:?}",
        check.contracted.n(),
        check.weights
    );
    println!(
        "  class sums {:?} -> {}",
        check.class_sums,
        if check.accepted { "Yes" } else { "No" }
    );
    assert_eq!(check.accepted, is_parity_signed(s)?.is_yes());
    Ok(())
}

fn main() -> paritycut::Result<()> {
    let twin_triangles = SignedGraph::from_edges(
        6,
        &[
            (0, 2, P),
            (2, 4, P),
            (0, 4, P),
            (5, 3, P),
            (1, 5, P),
            (1, 3, P),
            (1, 2, N),
            (3, 0, N),
        ],
    )?;
    show("twin triangles", &twin_triangles)?;

    let square_with_tail = SignedGraph::from_edges(
        5,
        &[
            (0, 1, P),
            (1, 3, P),
            (0, 2, P),
            (2, 3, P),
            (2, 4, N),
            (3, 4, N),
        ],
    )?;
    show("square with tail", &square_with_tail)?;

    let single_negative_edge = SignedGraph::from_edges(2, &[(0, 1, N)])?;
    show("single negative edge", &single_negative_edge)?;
    Ok(())
}
