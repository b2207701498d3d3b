//! Exhaustive auditing: enumerate parity patterns and compare the fast
//! recognizer and solver against brute force.
//!
//! ```bash
//! cargo run --example oracle_audit
//! ```

use paritycut::families::{signed_cycle, signed_path};
use paritycut::oracle::{enumerate_patterns, oracle_is_parity_signed, oracle_rna};
use paritycut::recognition::is_parity_signed;
use paritycut::rna::rna_exact;
use paritycut::Sign::{Negative as N, Positive as P};
use paritycut::DEFAULT_EXACT_LIMIT;

fn main() -> paritycut::Result<()> {
    println!("parity patterns on 4 vertices (odd-label sets):");
    for pattern in enumerate_patterns(4) {
        println!("  {:?}", pattern.odd_set());
    }

    // Audit every sign pattern of the five-cycle.
    let mut agreements = 0;
    for bits in 0u32..(1 << 5) {
        let signs: Vec<_> = (0..5)
            .map(|i| if bits >> i & 1 == 1 { N } else { P })
            .collect();
        let s = signed_cycle(&signs)?;
        let fast = is_parity_signed(&s)?.is_yes();
        let brute = oracle_is_parity_signed(&s)?;
        assert_eq!(fast, brute);
        agreements += 1;
    }
    println!("five-cycle audit: recognizer matches brute force on {agreements} sign patterns");

    // And the cut solver against the brute-force minimum.
    let p7 = signed_path(&[N; 6])?;
    let exact = rna_exact(p7.graph(), DEFAULT_EXACT_LIMIT)?.cut_size;
    let brute = oracle_rna(p7.graph())?;
    println!("path of order 7: exact rna {exact}, brute-force {brute}");
    assert_eq!(exact, brute);
    Ok(())
}
