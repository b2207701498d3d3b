//! Parity signed graphs: recognition, family characterizations, and
//! near-balanced minimum cuts.
//!
//! A bijective labelling of a graph's vertices by `1..=n` induces a sign on
//! every edge: positive when the endpoint labels share parity, negative
//! otherwise. A signed graph is *parity signed* when some labelling induces
//! exactly its signature — equivalently, when its vertex set splits into two
//! nearly equal blocks with all negative edges crossing. The minimum number
//! of negative edges over all labellings (the *rna number*) is then the
//! minimum cut over bipartitions whose block sizes differ by at most one.
//!
//! The crate provides:
//! - [`graph`]: the signed-graph data model and induced signatures
//! - [`balance`]: Harary balance, the Harary bipartition, and sections
//! - [`recognition`]: parity-signed recognition with witnesses, the
//!   contraction-based check, and labelling transformations
//! - [`families`]: generators and closed-form predicates for stars, bistars,
//!   paths, cycles, and negative homogeneous graphs
//! - [`rna`]: exact, formula, and heuristic rna/adhika numbers, cordiality,
//!   and the parity complement
//! - [`oracle`]: independent brute-force ground truth for auditing
//! - [`io`]: the edge-list file format and DOT export
//! - [`cli`]: the `paritycut` command-line tool
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability:
//!
//! ```bash
//! cargo run --example recognize
//! cargo run --example rna_numbers
//! ```

#![forbid(unsafe_code)]

pub mod balance;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod rna;

pub use error::{Error, Result};
pub use graph::{induced_signature, Bipartition, Graph, ParityLabelling, Sign, SignedGraph};
pub use recognition::{is_parity_signed, RecognitionResult, Refutation};
pub use rna::{CutMethod, CutReport, DEFAULT_EXACT_LIMIT};
