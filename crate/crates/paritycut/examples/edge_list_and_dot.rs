//! The signed edge-list file format and DOT export.
//!
//! ```bash
//! cargo run --example edge_list_and_dot
//! ```

use paritycut::io::{export_dot, format_signed_edge_list, parse_signed_edge_list};
use paritycut::ParityLabelling;

fn main() -> paritycut::Result<()> {
    let document = "\
# two positive triangles joined by two negative edges
6 8
1 3 +
3 5 +
1 5 +
4 6 +
2 6 +
2 4 +
2 3 -
1 4 -
";
    let s = parse_signed_edge_list(document)?;
    println!(
        "parsed {} vertices, {} positive / {} negative edges",
        s.n(),
        s.positive_count(),
        s.negative_count()
    );

    // Serialization is canonical: parse(format(s)) == s.
    let round = format_signed_edge_list(&s);
    assert_eq!(parse_signed_edge_list(&round)?, s);
    println!("canonical document:\n{round}");

    // DOT with solid positive and dashed negative edges, named by labels.
    let labels = ParityLabelling::identity(6)?;
    println!("{}", export_dot(&s, Some(&labels))?);
    Ok(())
}
