//! Recognition: decide whether a signed graph is a parity signed graph and
//! print a witness labelling or the structural refutation.
//!
//! ```bash
//! cargo run --example recognize
//! ```

use paritycut::recognition::is_parity_signed;
use paritycut::{RecognitionResult, Sign, SignedGraph};

fn describe(name: &str, s: &SignedGraph) -> paritycut::Result<()> {
    match is_parity_signed(s)? {
        RecognitionResult::Yes {
            witness,
            bipartition,
        } => {
            println!("{name}: parity signed");
            println!("  witness labels: {:?}", witness.labels());
            println!(
                "  blocks: {:?} / {:?}",
                bipartition.block(0),
                bipartition.block(1)
            );
        }
        RecognitionResult::No { reason } => {
            println!("{name}: not parity signed ({reason})");
        }
    }
    Ok(())
}

fn main() -> paritycut::Result<()> {
    use Sign::{Negative as N, Positive as P};

    // Two positive triangles tied together by two negative edges. The
    // labelling 1..=6 puts odd labels on one triangle and even on the other.
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
    describe("twin triangles", &twin_triangles)?;

    // Balanced but lopsided: a positive square with one vertex hanging off
    // two negative edges; its Harary blocks have sizes 4 and 1.
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
    describe("square with tail", &square_with_tail)?;

    // A negative triangle is unbalanced, so no labelling can induce it.
    let sour_triangle = SignedGraph::from_edges(3, &[(0, 1, P), (1, 2, P), (0, 2, N)])?;
    describe("triangle with one negative edge", &sour_triangle)?;

    Ok(())
}
