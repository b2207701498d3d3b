//! Closed-form predicates for named families, checked against general
//! recognition on the spot.
//!
//! ```bash
//! cargo run --example family_checks
//! ```

use paritycut::families::{
    bistar_allneg_is_parity_signed, bistar_plus_is_parity_signed, generate, star_is_parity_signed,
    FamilyDescriptor,
};
use paritycut::recognition::is_parity_signed;

fn main() -> paritycut::Result<()> {
    println!("stars with m positive / n negative edges (closed form == general):");
    for (m, n) in [(2, 2), (1, 3), (3, 1), (0, 4), (2, 4)] {
        let closed = star_is_parity_signed(m, n);
        let s = generate(&FamilyDescriptor::Star {
            positive: m,
            negative: n,
        })?;
        let general = is_parity_signed(&s)?.is_yes();
        assert_eq!(closed, general);
        println!(
            "  star({m},{n}): {}",
            if closed { "parity signed" } else { "no" }
        );
    }

    println!("bistars joined by a positive bridge:");
    for (m, n) in [(1, 2), (2, 4), (2, 2), (0, 3)] {
        let closed = bistar_plus_is_parity_signed(m, n);
        let s = generate(&FamilyDescriptor::BistarPlus {
            positive: m,
            negative: n,
        })?;
        assert_eq!(closed, is_parity_signed(&s)?.is_yes());
        println!(
            "  bistar+({m},{n}): {}",
            if closed { "parity signed" } else { "no" }
        );
    }

    println!("all-negative bistars:");
    for (m, n) in [(2, 2), (2, 3), (3, 2), (1, 4)] {
        let closed = bistar_allneg_is_parity_signed(m, n);
        let s = generate(&FamilyDescriptor::BistarAllNeg { left: m, right: n })?;
        assert_eq!(closed, is_parity_signed(&s)?.is_yes());
        println!(
            "  bistar-({m},{n}): {}",
            if closed { "parity signed" } else { "no" }
        );
    }

    println!("ladders are parity signed at every length:");
    for rungs in 2..=6 {
        let s = generate(&FamilyDescriptor::Ladder { rungs })?;
        println!("  ladder({rungs}): {}", is_parity_signed(&s)?.is_yes());
    }

    Ok(())
}
