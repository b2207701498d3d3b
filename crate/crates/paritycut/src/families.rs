//! Generators for named graph families and their closed-form parity-signed
//! predicates. Every predicate agrees with general recognition on the
//! corresponding generated family.

use crate::balance::{harary_bipartition, odd_negative_sections};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// A named family instance. Generated vertex numbering is deterministic:
/// hubs and centres first, then pendants or rim vertices in order. Families
/// without an inherent sign pattern (paths, cycles, wheels, ladders, complete
/// bipartite) are emitted all-negative; callers can
/// [`resign`](SignedGraph::resign) them.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyDescriptor {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Star with `positive` positive and `negative` negative pendant edges.
    Star {
        positive: usize,
        negative: usize,
    },
    /// Two centres joined by a positive edge; `positive` positive pendants
    /// on the first, `negative` negative pendants on the second.
    BistarPlus {
        positive: usize,
        negative: usize,
    },
    /// All-negative bistar with `left` / `right` pendants on the two centres.
    BistarAllNeg {
        left: usize,
        right: usize,
    },
    /// Wheel on `order` vertices: a hub joined to every vertex of a rim
    /// cycle of length `order - 1`.
    Wheel {
        order: usize,
    },
    CompleteBipartiteAllNeg {
        left: usize,
        right: usize,
    },
    /// The ladder on `2 * rungs` vertices (a path of the given length times
    /// a single edge), all negative.
    Ladder {
        rungs: usize,
    },
    /// Corona: attach `pendants` fresh degree-1 vertices to every vertex of
    /// `base` with negative edges.
    Corona {
        base: SignedGraph,
        pendants: usize,
    },
}

/// Builds the canonical signed graph of a family.
pub fn generate(d: &FamilyDescriptor) -> Result<SignedGraph> {
    use Sign::Negative as N;
    match d {
        FamilyDescriptor::Path { n } => {
            if *n == 0 {
                return Err(Error::InvalidParameters("path needs n >= 1".into()));
            }
            signed_path(&vec![N; n - 1])
        }
        FamilyDescriptor::Cycle { n } => {
            if *n < 3 {
                return Err(Error::InvalidParameters("cycle needs n >= 3".into()));
            }
            signed_cycle(&vec![N; *n])
        }
        FamilyDescriptor::Star { positive, negative } => {
            let (p, q) = (*positive, *negative);
            if p + q == 0 {
                return Err(Error::InvalidParameters(
                    "star needs at least one edge".into(),
                ));
            }
            let mut edges = Vec::new();
            for i in 0..p {
                edges.push((0, 1 + i, Sign::Positive));
            }
            for i in 0..q {
                edges.push((0, 1 + p + i, N));
            }
            SignedGraph::from_edges(1 + p + q, &edges)
        }
        FamilyDescriptor::BistarPlus { positive, negative } => {
            let (p, q) = (*positive, *negative);
            let mut edges = vec![(0, 1, Sign::Positive)];
            for i in 0..p {
                edges.push((0, 2 + i, Sign::Positive));
            }
            for i in 0..q {
                edges.push((1, 2 + p + i, N));
            }
            SignedGraph::from_edges(2 + p + q, &edges)
        }
        FamilyDescriptor::BistarAllNeg { left, right } => {
            let (a, b) = (*left, *right);
            let mut edges = vec![(0, 1, N)];
            for i in 0..a {
                edges.push((0, 2 + i, N));
            }
            for i in 0..b {
                edges.push((1, 2 + a + i, N));
            }
            SignedGraph::from_edges(2 + a + b, &edges)
        }
        FamilyDescriptor::Wheel { order } => {
            let n = *order;
            if n < 4 {
                return Err(Error::InvalidParameters("wheel needs order >= 4".into()));
            }
            let rim = n - 1;
            let mut edges = Vec::new();
            for i in 1..=rim {
                edges.push((0, i, N));
            }
            for i in 1..rim {
                edges.push((i, i + 1, N));
            }
            edges.push((rim, 1, N));
            SignedGraph::from_edges(n, &edges)
        }
        FamilyDescriptor::CompleteBipartiteAllNeg { left, right } => {
            let (a, b) = (*left, *right);
            if a == 0 || b == 0 {
                return Err(Error::InvalidParameters(
                    "complete bipartite needs both sides nonempty".into(),
                ));
            }
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j, N));
                }
            }
            SignedGraph::from_edges(a + b, &edges)
        }
        FamilyDescriptor::Ladder { rungs } => {
            let k = *rungs;
            if k == 0 {
                return Err(Error::InvalidParameters("ladder needs rungs >= 1".into()));
            }
            let mut edges = Vec::new();
            for i in 0..k - 1 {
                edges.push((i, i + 1, N));
                edges.push((k + i, k + i + 1, N));
            }
            for i in 0..k {
                edges.push((i, k + i, N));
            }
            SignedGraph::from_edges(2 * k, &edges)
        }
        FamilyDescriptor::Corona { base, pendants } => {
            let t = *pendants;
            if t == 0 {
                return Err(Error::InvalidParameters(
                    "corona needs pendants >= 1".into(),
                ));
            }
            let b = base.n();
            let mut edges: Vec<(usize, usize, Sign)> =
                base.edges().map(|((u, v), s)| (u, v, s)).collect();
            for v in 0..b {
                for j in 0..t {
                    edges.push((v, b + v * t + j, N));
                }
            }
            SignedGraph::from_edges(b * (t + 1), &edges)
        }
    }
}

/// A path with the given edge signs in order; `signs` may be empty (one
/// vertex).
pub fn signed_path(signs: &[Sign]) -> Result<SignedGraph> {
    let n = signs.len() + 1;
    let edges: Vec<_> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| (i, i + 1, s))
        .collect();
    SignedGraph::from_edges(n, &edges)
}

/// A cycle with the given edge signs in cyclic order (edge `i` joins `i`
/// and `i + 1 mod n`); needs at least three signs.
pub fn signed_cycle(signs: &[Sign]) -> Result<SignedGraph> {
    let n = signs.len();
    if n < 3 {
        return Err(Error::InvalidParameters(
            "cycle needs at least 3 edges".into(),
        ));
    }
    let edges: Vec<_> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| (i, (i + 1) % n, s))
        .collect();
    SignedGraph::from_edges(n, &edges)
}

/// Closed form for signed cycles: parity signed iff the number `k` of odd
/// negative sections is even and either `k = 0` with the cycle all negative
/// of even length or of odd length with exactly one positive edge, or
/// `k > 0` with the alternating gap sums differing by at most one.
pub fn cycle_is_parity_signed(s: &SignedGraph) -> Result<bool> {
    if s.graph().cycle_order().is_none() {
        return Err(Error::NotACycle);
    }
    let r = odd_negative_sections(s).expect("cycle shape checked");
    let k = r.k();
    if !k.is_multiple_of(2) {
        return Ok(false);
    }
    if k == 0 {
        let n = s.n();
        let even_all_negative = s.is_all_negative() && n.is_multiple_of(2);
        let odd_one_positive = n % 2 == 1 && s.positive_count() == 1;
        Ok(even_all_negative || odd_one_positive)
    } else {
        Ok(r.odd_gap_total.abs_diff(r.even_gap_total) <= 1)
    }
}

/// Closed form for signed paths: with `k` odd negative sections and gap sums
/// `even_gap_total - odd_gap_total = t`, parity signed iff `t` is in
/// `{1, 0, -1}` for odd `k` and in `{0, -1, -2}` for even `k`.
pub fn path_is_parity_signed(s: &SignedGraph) -> Result<bool> {
    if s.graph().path_order().is_none() {
        return Err(Error::NotAPath);
    }
    let r = odd_negative_sections(s).expect("path shape checked");
    let t = r.even_gap_total as isize - r.odd_gap_total as isize;
    Ok(if r.k() % 2 == 1 {
        (-1..=1).contains(&t)
    } else {
        (-2..=0).contains(&t)
    })
}

/// Closed form for stars with `positive` positive and `negative` negative
/// edges: parity signed iff `negative` equals `positive`, `positive + 1`,
/// or `positive + 2`.
pub fn star_is_parity_signed(positive: usize, negative: usize) -> bool {
    negative == positive || negative == positive + 1 || negative == positive + 2
}

/// Closed form for the positive-bridge bistar: with `m + n` odd, parity
/// signed iff `n = m + 1` or `n = m + 3`; with `m + n` even iff `n = m + 2`.
pub fn bistar_plus_is_parity_signed(m: usize, n: usize) -> bool {
    if !(m + n).is_multiple_of(2) {
        n == m + 1 || n == m + 3
    } else {
        n == m + 2
    }
}

/// Closed form for the all-negative bistar: parity signed iff the pendant
/// counts differ by at most one. (The two centres are interchangeable, so
/// the test is symmetric in `m` and `n`.)
pub fn bistar_allneg_is_parity_signed(m: usize, n: usize) -> bool {
    m.abs_diff(n) <= 1
}

/// A connected all-negative signed graph is parity signed iff its underlying
/// graph is bipartite with part sizes differing by at most one.
pub fn negative_homogeneous_is_parity_signed(s: &SignedGraph) -> Result<bool> {
    if !s.is_all_negative() {
        return Err(Error::NotAllNegative);
    }
    match harary_bipartition(s)? {
        Some(parts) => Ok(parts.size_difference() <= 1),
        None => Ok(false),
    }
}

/// Structural shape of a signed graph, as recognized by `classify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Path,
    Cycle,
    Star { positive: usize, negative: usize },
    BistarPlus { positive: usize, negative: usize },
    BistarAllNeg { left: usize, right: usize },
    NegativeHomogeneous,
    Other,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Path => "path",
            Shape::Cycle => "cycle",
            Shape::Star { .. } => "star",
            Shape::BistarPlus { .. } => "bistar-plus",
            Shape::BistarAllNeg { .. } => "bistar-allneg",
            Shape::NegativeHomogeneous => "negative-homogeneous",
            Shape::Other => "general",
        }
    }
}

/// Detects which closed-form predicate, if any, applies to `s`.
pub fn detect_shape(s: &SignedGraph) -> Shape {
    let g = s.graph();
    if !g.is_connected() {
        return Shape::Other;
    }
    if g.cycle_order().is_some() {
        return Shape::Cycle;
    }
    if g.path_order().is_some() {
        return Shape::Path;
    }
    let n = g.n();
    if n >= 3 && g.edge_count() == n - 1 {
        // Trees only beyond this point.
        if let Some(centre) = (0..n).find(|&v| g.degree(v) == n - 1) {
            let negative = g
                .neighbors(centre)
                .iter()
                .filter(|&&w| s.sign(centre, w) == Some(Sign::Negative))
                .count();
            return Shape::Star {
                positive: n - 1 - negative,
                negative,
            };
        }
        let internal: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
        if internal.len() == 2 && g.has_edge(internal[0], internal[1]) {
            let (u, v) = (internal[0], internal[1]);
            let pendant_signs = |c: usize, other: usize| -> Vec<Sign> {
                g.neighbors(c)
                    .iter()
                    .filter(|&&w| w != other)
                    .map(|&w| s.sign(c, w).unwrap())
                    .collect()
            };
            if s.is_all_negative() {
                return Shape::BistarAllNeg {
                    left: g.degree(u) - 1,
                    right: g.degree(v) - 1,
                };
            }
            if s.sign(u, v) == Some(Sign::Positive) {
                for (a, b) in [(u, v), (v, u)] {
                    let at_a = pendant_signs(a, b);
                    let at_b = pendant_signs(b, a);
                    if at_a.iter().all(|x| x.is_positive()) && at_b.iter().all(|x| x.is_negative())
                    {
                        return Shape::BistarPlus {
                            positive: at_a.len(),
                            negative: at_b.len(),
                        };
                    }
                }
            }
        }
    }
    if s.is_all_negative() {
        return Shape::NegativeHomogeneous;
    }
    Shape::Other
}

/// Evaluates the closed-form predicate for the detected shape, or `None`
/// when no closed form applies.
pub fn closed_form_verdict(s: &SignedGraph) -> Result<Option<bool>> {
    Ok(match detect_shape(s) {
        Shape::Cycle => Some(cycle_is_parity_signed(s)?),
        Shape::Path => Some(path_is_parity_signed(s)?),
        Shape::Star { positive, negative } => Some(star_is_parity_signed(positive, negative)),
        Shape::BistarPlus { positive, negative } => {
            Some(bistar_plus_is_parity_signed(positive, negative))
        }
        Shape::BistarAllNeg { left, right } => Some(bistar_allneg_is_parity_signed(left, right)),
        Shape::NegativeHomogeneous => Some(negative_homogeneous_is_parity_signed(s)?),
        Shape::Other => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_is_parity_signed;
    use crate::recognition::is_parity_signed;
    use Sign::{Negative as N, Positive as P};

    #[test]
    fn bistar_plus_generation() {
        let s = generate(&FamilyDescriptor::BistarPlus {
            positive: 2,
            negative: 4,
        })
        .unwrap();
        assert_eq!(s.n(), 8);
        assert_eq!(s.positive_count(), 3); // bridge plus two pendants
        assert_eq!(s.negative_count(), 4);
        assert_eq!(s.sign(0, 1), Some(P));
    }

    #[test]
    fn wheel_generation() {
        let s = generate(&FamilyDescriptor::Wheel { order: 5 }).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.edge_count(), 8);
        assert_eq!(s.graph().degree(0), 4);
    }

    #[test]
    fn complete_bipartite_generation() {
        let s = generate(&FamilyDescriptor::CompleteBipartiteAllNeg { left: 2, right: 3 }).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.edge_count(), 6);
        assert!(s.is_all_negative());
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(generate(&FamilyDescriptor::Wheel { order: 3 }).is_err());
        assert!(generate(&FamilyDescriptor::Star {
            positive: 0,
            negative: 0
        })
        .is_err());
        assert!(generate(&FamilyDescriptor::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn cycle_predicate_examples() {
        assert!(cycle_is_parity_signed(&signed_cycle(&[N; 4]).unwrap()).unwrap());
        assert!(cycle_is_parity_signed(&signed_cycle(&[P, N, N, N, N]).unwrap()).unwrap());
        assert!(!cycle_is_parity_signed(&signed_cycle(&[P; 4]).unwrap()).unwrap());
        let path = signed_path(&[N, N]).unwrap();
        assert_eq!(cycle_is_parity_signed(&path), Err(Error::NotACycle));
    }

    #[test]
    fn path_predicate_examples() {
        assert!(path_is_parity_signed(&signed_path(&[N, N, N]).unwrap()).unwrap());
        assert!(!path_is_parity_signed(&signed_path(&[P, P]).unwrap()).unwrap());
        assert!(path_is_parity_signed(&signed_path(&[P, N]).unwrap()).unwrap());
        let cycle = signed_cycle(&[N; 3]).unwrap();
        assert_eq!(path_is_parity_signed(&cycle), Err(Error::NotAPath));
    }

    #[test]
    fn star_predicate_examples() {
        assert!(star_is_parity_signed(2, 2));
        assert!(star_is_parity_signed(1, 3));
        assert!(!star_is_parity_signed(3, 1));
    }

    #[test]
    fn star_predicate_matches_oracle_on_k14() {
        for positive in 0..=4usize {
            let negative = 4 - positive;
            if positive + negative == 0 {
                continue;
            }
            let s = generate(&FamilyDescriptor::Star { positive, negative }).unwrap();
            assert_eq!(
                star_is_parity_signed(positive, negative),
                oracle_is_parity_signed(&s).unwrap(),
                "star({positive},{negative})"
            );
        }
    }

    #[test]
    fn bistar_predicate_examples() {
        assert!(bistar_plus_is_parity_signed(1, 2));
        assert!(bistar_plus_is_parity_signed(2, 4));
        assert!(!bistar_plus_is_parity_signed(2, 2));
        assert!(bistar_allneg_is_parity_signed(2, 2));
        assert!(bistar_allneg_is_parity_signed(2, 3));
        assert!(!bistar_allneg_is_parity_signed(1, 4));
    }

    #[test]
    fn negative_homogeneous_examples() {
        let c6 = signed_cycle(&[N; 6]).unwrap();
        assert!(negative_homogeneous_is_parity_signed(&c6).unwrap());
        let k23 =
            generate(&FamilyDescriptor::CompleteBipartiteAllNeg { left: 2, right: 3 }).unwrap();
        assert!(negative_homogeneous_is_parity_signed(&k23).unwrap());
        let k13 = generate(&FamilyDescriptor::Star {
            positive: 0,
            negative: 3,
        })
        .unwrap();
        assert!(!negative_homogeneous_is_parity_signed(&k13).unwrap());
        let with_positive = signed_path(&[P]).unwrap();
        assert_eq!(
            negative_homogeneous_is_parity_signed(&with_positive),
            Err(Error::NotAllNegative)
        );
    }

    #[test]
    fn ladders_are_parity_signed() {
        for rungs in 2..=8 {
            let s = generate(&FamilyDescriptor::Ladder { rungs }).unwrap();
            assert!(
                is_parity_signed(&s).unwrap().is_yes(),
                "ladder with {rungs} rungs"
            );
        }
    }

    #[test]
    fn corona_preserves_negative_homogeneity_but_not_always_parity() {
        let c4 = signed_cycle(&[N; 4]).unwrap();
        let corona = generate(&FamilyDescriptor::Corona {
            base: c4,
            pendants: 2,
        })
        .unwrap();
        assert!(corona.is_all_negative());
        assert!(negative_homogeneous_is_parity_signed(&corona).unwrap());

        // An unevenly split base with enough pendants tips the parts apart.
        let p3 = signed_path(&[N, N]).unwrap();
        let lopsided = generate(&FamilyDescriptor::Corona {
            base: p3,
            pendants: 3,
        })
        .unwrap();
        assert!(lopsided.is_all_negative());
        assert!(!negative_homogeneous_is_parity_signed(&lopsided).unwrap());
    }

    #[test]
    fn shape_detection() {
        let path = signed_path(&[N, N, N]).unwrap();
        assert_eq!(detect_shape(&path), Shape::Path);
        let cycle = signed_cycle(&[N; 5]).unwrap();
        assert_eq!(detect_shape(&cycle), Shape::Cycle);
        let star = generate(&FamilyDescriptor::Star {
            positive: 1,
            negative: 3,
        })
        .unwrap();
        assert_eq!(
            detect_shape(&star),
            Shape::Star {
                positive: 1,
                negative: 3
            }
        );
        let bp = generate(&FamilyDescriptor::BistarPlus {
            positive: 2,
            negative: 4,
        })
        .unwrap();
        assert_eq!(
            detect_shape(&bp),
            Shape::BistarPlus {
                positive: 2,
                negative: 4
            }
        );
        let ba = generate(&FamilyDescriptor::BistarAllNeg { left: 2, right: 3 }).unwrap();
        assert_eq!(detect_shape(&ba), Shape::BistarAllNeg { left: 2, right: 3 });
        let k23 =
            generate(&FamilyDescriptor::CompleteBipartiteAllNeg { left: 2, right: 3 }).unwrap();
        assert_eq!(detect_shape(&k23), Shape::NegativeHomogeneous);
    }
}
