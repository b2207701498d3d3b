//! Harary balance testing, the Harary bipartition of balanced connected
//! signed graphs, and decomposition into homogeneous sections.

use crate::error::{Error, Result};
use crate::graph::{canonical_edge, Bipartition, Edge, Sign, SignedGraph};
use std::collections::VecDeque;

/// A maximal connected sub-signed-graph whose edges all carry one sign.
///
/// `position` is set when the underlying graph is a path or cycle: it is the
/// section's index in traversal order (linear for paths, cyclic for cycles,
/// starting from the section containing the first traversal edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub sign: Sign,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub position: Option<usize>,
}

impl Section {
    /// Number of vertices in the section.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges in the section.
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    /// A section is odd or even by its edge count.
    pub fn is_odd(&self) -> bool {
        self.length() % 2 == 1
    }
}

/// All sections of a signed graph; they partition the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionDecomposition {
    pub sections: Vec<Section>,
}

impl SectionDecomposition {
    pub fn positive(&self) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(|s| s.sign.is_positive())
    }

    pub fn negative(&self) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(|s| s.sign.is_negative())
    }
}

/// Whether a linear traversal wraps around.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearShape {
    Path,
    Cycle,
}

/// The odd negative sections of a signed path or cycle, with the positive
/// edge counts of the gaps between them.
///
/// For a cycle with `k > 0` odd negative sections, `gap_positive_counts[i]`
/// is the number of positive edges between section `i` and section
/// `(i + 1) mod k`. For a path there are `k + 1` entries: before the first
/// section, between consecutive ones, and after the last; with `k = 0` the
/// single entry covers the whole path. `odd_gap_total` / `even_gap_total`
/// sum the counts at odd / even gap indices (1-based for cycles, 0-based
/// for paths, matching the traversal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddNegativeSections {
    pub shape: LinearShape,
    pub sections: Vec<Section>,
    pub gap_positive_counts: Vec<usize>,
    pub odd_gap_total: usize,
    pub even_gap_total: usize,
}

impl OddNegativeSections {
    /// Number of odd negative sections.
    pub fn k(&self) -> usize {
        self.sections.len()
    }
}

/// Two-colors a connected signed graph so that positive edges stay within a
/// color class and negative edges cross. Returns `None` if no such coloring
/// exists (the graph is unbalanced). Block 0 contains vertex 0.
pub fn harary_bipartition(s: &SignedGraph) -> Result<Option<Bipartition>> {
    let g = s.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    color[0] = Some(false);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let cu = color[u].expect("queued vertices are colored");
        for &w in g.neighbors(u) {
            let want = match s.sign(u, w).expect("neighbor implies edge") {
                Sign::Positive => cu,
                Sign::Negative => !cu,
            };
            match color[w] {
                None => {
                    color[w] = Some(want);
                    queue.push_back(w);
                }
                Some(c) if c != want => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let membership = color.into_iter().map(|c| c.expect("connected")).collect();
    Ok(Some(Bipartition::from_membership(membership)))
}

/// True iff every cycle of `s` carries an even number of negative edges.
pub fn is_balanced(s: &SignedGraph) -> Result<bool> {
    Ok(harary_bipartition(s)?.is_some())
}

/// Splits `s` into its maximal homogeneous connected sections.
///
/// When the underlying graph is a path or cycle the sections come back in
/// traversal order with `position` set; otherwise they are ordered by their
/// smallest edge and `position` is `None`.
pub fn sections(s: &SignedGraph) -> SectionDecomposition {
    if let Some(runs) = linear_runs(s) {
        let sections = runs
            .1
            .into_iter()
            .enumerate()
            .map(|(i, run)| run_to_section(i, run))
            .collect();
        return SectionDecomposition { sections };
    }

    // General graphs: same-sign union-find over edge endpoints.
    let g = s.graph();
    let mut parent: Vec<usize> = (0..2 * g.n()).collect(); // one DSU per sign
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            parent[r] = parent[parent[r]];
            r = parent[r];
        }
        r
    }
    let offset = |v: usize, sign: Sign| if sign.is_positive() { v } else { v + g.n() };
    for ((u, v), sign) in s.edges() {
        let (a, b) = (
            find(&mut parent, offset(u, sign)),
            find(&mut parent, offset(v, sign)),
        );
        parent[a] = b;
    }
    let mut groups: Vec<(usize, Section)> = Vec::new();
    for ((u, v), sign) in s.edges() {
        let root = find(&mut parent, offset(u, sign));
        match groups
            .iter_mut()
            .find(|(r, sec)| *r == root && sec.sign == sign)
        {
            Some((_, sec)) => sec.edges.push((u, v)),
            None => groups.push((
                root,
                Section {
                    sign,
                    vertices: Vec::new(),
                    edges: vec![(u, v)],
                    position: None,
                },
            )),
        }
    }
    let mut sections: Vec<Section> = groups
        .into_iter()
        .map(|(_, mut sec)| {
            let mut vs: Vec<usize> = sec.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            sec.vertices = vs;
            sec.edges.sort_unstable();
            sec
        })
        .collect();
    sections.sort_by_key(|sec| sec.edges[0]);
    SectionDecomposition { sections }
}

/// One maximal same-sign run of traversal edges.
#[derive(Debug, Clone)]
struct Run {
    sign: Sign,
    edges: Vec<Edge>,     // in traversal order, canonical pairs
    vertices: Vec<usize>, // in traversal order, endpoints included
}

fn run_to_section(position: usize, run: Run) -> Section {
    let mut vertices = run.vertices;
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges = run.edges;
    edges.sort_unstable();
    Section {
        sign: run.sign,
        vertices,
        edges,
        position: Some(position),
    }
}

/// Sign runs along a path or cycle traversal, or `None` if the underlying
/// graph is neither. Cycle runs wrap around; the run containing the first
/// traversal edge comes first.
fn linear_runs(s: &SignedGraph) -> Option<(LinearShape, Vec<Run>)> {
    let g = s.graph();
    let (shape, order) = if let Some(order) = g.path_order() {
        (LinearShape::Path, order)
    } else {
        (LinearShape::Cycle, g.cycle_order()?)
    };

    let m = g.edge_count();
    if m == 0 {
        return Some((shape, Vec::new()));
    }
    let step = |i: usize| {
        let u = order[i];
        let v = order[(i + 1) % order.len()];
        (canonical_edge(u, v), u, v)
    };
    let mut runs: Vec<Run> = Vec::new();
    for i in 0..m {
        let (e, u, v) = step(i);
        let sign = s.sign(e.0, e.1).expect("traversal edge exists");
        match runs.last_mut() {
            Some(run) if run.sign == sign => {
                run.edges.push(e);
                run.vertices.push(v);
            }
            _ => runs.push(Run {
                sign,
                edges: vec![e],
                vertices: vec![u, v],
            }),
        }
    }
    if shape == LinearShape::Cycle
        && runs.len() > 1
        && runs[0].sign == runs.last().unwrap().sign
    {
        // Merge the wrap-around run into the first one.
        let mut last = runs.pop().unwrap();
        let first = &mut runs[0];
        last.edges.append(&mut first.edges);
        first.edges = last.edges;
        last.vertices.append(&mut first.vertices);
        first.vertices = last.vertices;
    }
    Some((shape, runs))
}

/// Extracts the odd negative sections of a signed path or cycle together
/// with the positive-edge counts of the gaps between them.
pub fn odd_negative_sections(s: &SignedGraph) -> Result<OddNegativeSections> {
    let (shape, runs) = linear_runs(s).ok_or(Error::NotPathOrCycle)?;
    let odd_neg: Vec<usize> = runs
        .iter()
        .enumerate()
        .filter(|(_, r)| r.sign.is_negative() && r.edges.len() % 2 == 1)
        .map(|(i, _)| i)
        .collect();
    let k = odd_neg.len();
    let positive_len = |range: &[Run]| -> usize {
        range
            .iter()
            .filter(|r| r.sign.is_positive())
            .map(|r| r.edges.len())
            .sum()
    };

    let mut gaps: Vec<usize> = Vec::new();
    match shape {
        LinearShape::Cycle => {
            // Gap i runs cyclically from section i to section i+1.
            for i in 0..k {
                let from = odd_neg[i];
                let to = odd_neg[(i + 1) % k];
                let mut count = 0;
                let mut j = (from + 1) % runs.len();
                while j != to {
                    if runs[j].sign.is_positive() {
                        count += runs[j].edges.len();
                    }
                    j = (j + 1) % runs.len();
                }
                gaps.push(count);
            }
        }
        LinearShape::Path => {
            if k == 0 {
                gaps.push(positive_len(&runs));
            } else {
                gaps.push(positive_len(&runs[..odd_neg[0]]));
                for w in odd_neg.windows(2) {
                    gaps.push(positive_len(&runs[w[0] + 1..w[1]]));
                }
                gaps.push(positive_len(&runs[odd_neg[k - 1] + 1..]));
            }
        }
    }

    // Cycle gaps are indexed from 1, path gaps from 0.
    let parity_base = match shape {
        LinearShape::Cycle => 1,
        LinearShape::Path => 0,
    };
    let mut odd_gap_total = 0;
    let mut even_gap_total = 0;
    for (j, &count) in gaps.iter().enumerate() {
        if (j + parity_base) % 2 == 1 {
            odd_gap_total += count;
        } else {
            even_gap_total += count;
        }
    }
    let sections = odd_neg
        .into_iter()
        .map(|i| run_to_section(i, runs[i].clone()))
        .collect();
    Ok(OddNegativeSections {
        shape,
        sections,
        gap_positive_counts: gaps,
        odd_gap_total,
        even_gap_total,
    })
}
