//! Braid-word closures as PD text, used to build well-known diagrams.
//!
//! A word is a sequence of nonzero integers: k > 0 is the positive generator
//! σ_k (strand k crosses over strand k+1), k < 0 its inverse. The closure
//! identifies the top and bottom endpoints of each strand.

use std::fmt::Write as _;

use crate::diagram::{Diagram, DiagramError};

/// Render the closure of a braid word on `strands` strands as PD text with
/// explicit crossing signs.
pub fn closure_pd_text(strands: usize, word: &[i32]) -> String {
    assert!(strands >= 2, "need at least two strands");
    let n = word.len();
    // Current arc label occupying each strand position; fresh labels are
    // allocated per crossing output pair. Positions use 0-based indexing.
    let _ = n;
    let mut arcs: Vec<u32> = (1..=strands as u32).collect();
    let initial = arcs.clone();
    let mut next = strands as u32 + 1;
    let mut tuples: Vec<(u32, u32, u32, u32, bool)> = Vec::new();
    for &g in word {
        let i = (g.unsigned_abs() as usize) - 1;
        assert!(i + 1 < strands, "generator {g} out of range");
        let (a_l, a_r) = (arcs[i], arcs[i + 1]);
        let (b_l, b_r) = (next, next + 1);
        next += 2;
        tuples.push((a_l, a_r, b_l, b_r, g > 0));
        arcs[i] = b_l;
        arcs[i + 1] = b_r;
    }
    // The closure reconnects each bottom arc to the top arc of the same
    // position: rename the final arc label at each position to the initial
    // one. Final labels are fresh, so this is a one-step substitution.
    let mut text = String::new();
    let mut rename: Vec<(u32, u32)> = Vec::new();
    for (pos, &a) in arcs.iter().enumerate() {
        if a != initial[pos] {
            rename.push((a, initial[pos]));
        }
    }
    let fix = |l: u32| rename.iter().find(|&&(f, _)| f == l).map_or(l, |&(_, t)| t);
    for (a_l, a_r, b_l, b_r, positive) in tuples {
        let (a_l, a_r, b_l, b_r) = (fix(a_l), fix(a_r), fix(b_l), fix(b_r));
        if !text.is_empty() {
            text.push(' ');
        }
        if positive {
            // Under-strand runs a_r -> b_l, over-strand a_l -> b_r; slots
            // are counterclockwise from the incoming under-edge.
            let _ = write!(text, "X+({a_r},{b_r},{b_l},{a_l})");
        } else {
            let _ = write!(text, "X-({a_l},{a_r},{b_r},{b_l})");
        }
    }
    text
}

/// Parse the closure of a braid word directly into a diagram.
pub fn closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    Diagram::parse_pd(&closure_pd_text(strands, word))
}
