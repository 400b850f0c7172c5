//! PD text parsing and over-strand direction inference.

use std::collections::HashMap;

use super::{Crossing, Diagram, DiagramError, EdgeLabel};

struct RawCrossing {
    edges: [EdgeLabel; 4],
    explicit_over_in: Option<usize>,
}

fn parse_tuple(tok: &str, index: usize) -> Result<RawCrossing, DiagramError> {
    let rest = tok
        .strip_prefix('X')
        .ok_or_else(|| syntax(index, tok, "expected `X(...)`"))?;
    let (explicit_over_in, rest) = if let Some(r) = rest.strip_prefix('+') {
        (Some(3), r)
    } else if let Some(r) = rest.strip_prefix('-') {
        (Some(1), r)
    } else {
        (None, rest)
    };
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| syntax(index, tok, "expected `(a,b,c,d)`"))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(syntax(index, tok, "expected 4 comma-separated labels"));
    }
    let mut edges = [0u32; 4];
    for (i, p) in parts.iter().enumerate() {
        edges[i] = p
            .parse()
            .map_err(|_| syntax(index, tok, "labels must be positive integers"))?;
    }
    Ok(RawCrossing { edges, explicit_over_in })
}

fn syntax(index: usize, tok: &str, msg: &str) -> DiagramError {
    DiagramError::Syntax(format!("crossing {index} `{tok}`: {msg}"))
}

pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(DiagramError::EmptyInput);
    }
    let raw: Vec<RawCrossing> = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| parse_tuple(t, i))
        .collect::<Result<_, _>>()?;

    // Label multiplicity first: every label exactly twice.
    let mut counts: HashMap<EdgeLabel, usize> = HashMap::new();
    for rc in &raw {
        for &l in &rc.edges {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    let mut bad: Vec<EdgeLabel> = counts
        .iter()
        .filter_map(|(&l, &c)| (c != 2).then_some(l))
        .collect();
    if !bad.is_empty() {
        bad.sort_unstable();
        return Err(DiagramError::BadLabelMultiplicity(bad));
    }

    let succ = component_successors(&raw);

    let crossings: Vec<Crossing> = raw
        .iter()
        .enumerate()
        .map(|(i, rc)| resolve_over_in(rc, i, &succ))
        .collect::<Result<_, _>>()?;

    Diagram::from_crossings(crossings)
}

/// Cyclic label successor within each link component. Components are the
/// classes of labels joined by the under-strand (a,c) and over-strand (b,d)
/// pairs; within a component the labels run in sorted cyclic order.
fn component_successors(
    raw: &[RawCrossing],
) -> HashMap<EdgeLabel, EdgeLabel> {
    let labels: Vec<EdgeLabel> = {
        let mut v: Vec<EdgeLabel> =
            raw.iter().flat_map(|rc| rc.edges.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let index: HashMap<EdgeLabel, usize> =
        labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for rc in raw {
        for (u, v) in [(0usize, 2usize), (1, 3)] {
            let a = index[&rc.edges[u]];
            let b = index[&rc.edges[v]];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut comps: HashMap<usize, Vec<EdgeLabel>> = HashMap::new();
    for (i, &l) in labels.iter().enumerate() {
        comps.entry(find(&mut parent, i)).or_default().push(l);
    }
    let mut succ = HashMap::new();
    for members in comps.values() {
        // Labels arrive sorted; cyclic successor wraps to the minimum.
        for w in members.windows(2) {
            succ.insert(w[0], w[1]);
        }
        succ.insert(*members.last().unwrap(), members[0]);
    }
    succ
}

fn resolve_over_in(
    rc: &RawCrossing,
    index: usize,
    succ: &HashMap<EdgeLabel, EdgeLabel>,
) -> Result<Crossing, DiagramError> {
    if let Some(slot) = rc.explicit_over_in {
        return Ok(Crossing::new(rc.edges, slot));
    }
    let b = rc.edges[1];
    let d = rc.edges[3];
    let mut candidates = Vec::new();
    if succ.get(&b) == Some(&d) {
        candidates.push(1); // over enters at b, exits at d
    }
    if succ.get(&d) == Some(&b) {
        candidates.push(3); // over enters at d, exits at b
    }
    // When a label repeats inside the tuple, orientation consistency
    // (each label once in, once out) can settle the direction.
    candidates.retain(|&over_in| locally_consistent(rc.edges, over_in));
    match candidates.len() {
        1 => Ok(Crossing::new(rc.edges, candidates[0])),
        0 => Err(DiagramError::CannotInferOverDirection(index)),
        _ => Err(DiagramError::AmbiguousOverDirection(index)),
    }
}

fn locally_consistent(edges: [EdgeLabel; 4], over_in: usize) -> bool {
    let x = Crossing::new(edges, over_in);
    for slot in 0..4 {
        for other in slot + 1..4 {
            if edges[slot] == edges[other]
                && x.is_incoming(slot) == x.is_incoming(other)
            {
                return false;
            }
        }
    }
    true
}
