//! Balance testing, the Harary bipartition, and section decomposition.
//!
//! ```bash
//! cargo run --example balance_and_sections
//! ```

use paritycut::balance::{harary_bipartition, odd_negative_sections, sections};
use paritycut::families::{signed_cycle, signed_path};
use paritycut::Sign::{Negative as N, Positive as P};

fn main() -> paritycut::Result<()> {
    // A six-cycle whose positive edges form one arc and negative edges the
    // other; the two homogeneous sections merge across the wrap-around.
    let cycle = signed_cycle(&[P, P, N, N, N, P])?;
    println!("six-cycle with signs ++---+ (cyclic):");
    match harary_bipartition(&cycle)? {
        Some(blocks) => println!(
            "  balanced; Harary blocks {:?} / {:?}",
            blocks.block(0),
            blocks.block(1)
        ),
        None => println!("  unbalanced"),
    }
    for section in &sections(&cycle).sections {
        println!(
            "  section {:?}: sign {} length {} vertices {:?}",
            section.position,
            section.sign,
            section.length(),
            section.vertices
        );
    }

    // Odd negative sections and the positive-edge gaps between them drive
    // the closed-form path and cycle predicates.
    let path = signed_path(&[N, P, P, N, N, N, P])?;
    let r = odd_negative_sections(&path)?;
    println!("path with signs -++---+:");
    println!("  odd negative sections: {}", r.k());
    println!("  gap positive counts: {:?}", r.gap_positive_counts);
    println!(
        "  alternating gap totals: odd {} / even {}",
        r.odd_gap_total, r.even_gap_total
    );

    // An all-negative odd cycle cannot be balanced.
    let odd_cycle = signed_cycle(&[N; 5])?;
    println!(
        "all-negative five-cycle balanced: {}",
        harary_bipartition(&odd_cycle)?.is_some()
    );
    Ok(())
}
