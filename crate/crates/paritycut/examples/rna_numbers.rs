//! Exact rna and adhika numbers across the families with closed-form
//! values; the solver and the formulas must coincide.
//!
//! ```bash
//! cargo run --example rna_numbers
//! ```

use paritycut::families::{generate, FamilyDescriptor};
use paritycut::rna::{adhika, rna_exact, rna_formula};
use paritycut::DEFAULT_EXACT_LIMIT;

fn main() -> paritycut::Result<()> {
    let families = vec![
        (
            "star with 8 edges",
            FamilyDescriptor::Star {
                positive: 4,
                negative: 4,
            },
        ),
        ("path of order 10", FamilyDescriptor::Path { n: 10 }),
        ("cycle of order 9", FamilyDescriptor::Cycle { n: 9 }),
        ("wheel of order 7", FamilyDescriptor::Wheel { order: 7 }),
    ];
    for (name, descriptor) in families {
        let g = generate(&descriptor)?.graph().clone();
        let report = rna_exact(&g, DEFAULT_EXACT_LIMIT)?;
        let sigma_plus = adhika(&g, DEFAULT_EXACT_LIMIT)?;
        let formula = rna_formula(&descriptor)?;
        assert_eq!(report.cut_size, formula);
        println!(
            "{name}: sigma-={} sigma+={} (formula {formula}); block 0 = {:?}",
            report.cut_size,
            sigma_plus,
            report.bipartition.block(0)
        );
    }

    // The identity sigma- + sigma+ = |E| holds for every graph.
    let wheel = generate(&FamilyDescriptor::Wheel { order: 10 })?
        .graph()
        .clone();
    let minus = rna_exact(&wheel, DEFAULT_EXACT_LIMIT)?.cut_size;
    let plus = adhika(&wheel, DEFAULT_EXACT_LIMIT)?;
    println!(
        "wheel of order 10: sigma-={minus}, sigma+={plus}, edges={}",
        wheel.edge_count()
    );
    Ok(())
}
