//! The parity complement: complement the underlying graph and sign the new
//! edges by the same labelling's parities. The result is again parity
//! signed, witnessed by the same labelling.
//!
//! ```bash
//! cargo run --example parity_complement
//! ```

use paritycut::recognition::is_parity_signed;
use paritycut::rna::parity_complement;
use paritycut::Sign::{Negative as N, Positive as P};
use paritycut::{ParityLabelling, SignedGraph};

fn main() -> paritycut::Result<()> {
    // Four vertices labelled 1..4, edges 1-2 (-), 2-4 (+), 3-4 (-).
    let s = SignedGraph::from_edges(4, &[(0, 1, N), (1, 3, P), (2, 3, N)])?;
    let mu = ParityLabelling::identity(4)?;

    let complement = parity_complement(&s, &mu)?;
    println!("original edges:");
    for ((u, v), sign) in s.edges() {
        println!("  {} - {} {sign}", u + 1, v + 1);
    }
    println!("complement edges:");
    for ((u, v), sign) in complement.edges() {
        println!("  {} - {} {sign}", u + 1, v + 1);
    }

    let verdict = is_parity_signed(&complement)?;
    println!("complement parity signed: {}", verdict.is_yes());
    Ok(())
}
