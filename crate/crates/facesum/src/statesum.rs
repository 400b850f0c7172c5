//! The face-coloring state sum: enumerate black/white face states with no
//! two black faces sharing an edge, weight each state by crossing and face
//! variables evaluated in Z[ζ₅], and normalize by the writhe to obtain the
//! link invariant as a canonical quadruple.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::CycloInt;
use crate::diagram::{Diagram, DiagramError, FaceSet};
use crate::polyring::{self, Assignment};

/// The 16 model variables evaluated at s = ζ, S = ζ⁴, indexed by crossing
/// code. Legal codes are {0,1,2,4,5,8,10}; the rest stay unset.
#[derive(Clone, Debug)]
pub struct VariableTable {
    pub f0: CycloInt,
    pub f1: CycloInt,
    /// x_code for negative crossings.
    pub x: [Option<CycloInt>; 11],
    /// X_code for positive crossings.
    pub x_upper: [Option<CycloInt>; 11],
}

pub const LEGAL_CODES: [usize; 7] = [0, 1, 2, 4, 5, 8, 10];

impl VariableTable {
    /// Build from an assignment by direct evaluation at ζ.
    pub fn from_assignment(a: &Assignment) -> Self {
        let spec = polyring::zeta_specialization();
        let eval = |name: &str| a.get(name).unwrap().eval_cyclo(&spec);
        let mut x = [None; 11];
        let mut x_upper = [None; 11];
        for code in LEGAL_CODES {
            x[code] = Some(eval(&format!("x{code}")));
            x_upper[code] = Some(eval(&format!("X{code}")));
        }
        VariableTable { f0: eval("f0"), f1: eval("f1"), x, x_upper }
    }

    /// The paper assignment's table, verified once at startup: all 30
    /// invariance checks must pass before any state sum is evaluated.
    pub fn paper() -> &'static VariableTable {
        static TABLE: OnceLock<VariableTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let a = Assignment::paper();
            let report = polyring::verify_invariance(&a);
            assert!(
                report.all_pass(),
                "startup verification failed: {:?}",
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| &c.name)
                    .collect::<Vec<_>>()
            );
            let t = VariableTable::from_assignment(&a);
            let n = NormalizationConstants::validated(&t);
            assert_eq!(n.lambda_plus * n.lambda_minus, CycloInt::ONE);
            t
        })
    }

    pub fn crossing_value(&self, sign: i64, code: usize) -> CycloInt {
        let slot = if sign > 0 { &self.x_upper } else { &self.x };
        slot.get(code).copied().flatten().unwrap_or_else(|| {
            panic!(
                "illegal crossing code {code}: corner faces of a crossing \
                 are cyclically edge-adjacent, so this signals a face bug"
            )
        })
    }
}

/// The curl factors λ₊ and λ₋, with the Lemma chain equalities asserted.
#[derive(Clone, Copy, Debug)]
pub struct NormalizationConstants {
    pub lambda_plus: CycloInt,
    pub lambda_minus: CycloInt,
}

impl NormalizationConstants {
    pub fn from_table(t: &VariableTable) -> Self {
        let x = |c: usize| t.x[c].unwrap();
        let xu = |c: usize| t.x_upper[c].unwrap();
        NormalizationConstants {
            lambda_plus: t.f0 * xu(0) + t.f1 * xu(4),
            lambda_minus: t.f0 * x(0) + t.f1 * x(4),
        }
    }

    /// `from_table` plus the curl-lemma chain equalities; used at startup
    /// for the verified table, where a mismatch is a fatal defect.
    pub fn validated(t: &VariableTable) -> Self {
        let x = |c: usize| t.x[c].unwrap();
        let xu = |c: usize| t.x_upper[c].unwrap();
        let n = Self::from_table(t);
        assert_eq!(n.lambda_plus, t.f0 * xu(10));
        assert_eq!(n.lambda_plus, t.f0 * xu(1) + t.f1 * xu(5));
        assert_eq!(n.lambda_minus, t.f0 * x(10));
        assert_eq!(n.lambda_minus, t.f0 * x(1) + t.f1 * x(5));
        n
    }

    pub fn paper() -> Self {
        Self::from_table(VariableTable::paper())
    }
}

/// A face coloring as a bitmask (bit i set = face i black).
pub type State = u64;

/// Enumerate all states in lexicographic order by face index (face 0 is the
/// most significant choice; white precedes black).
pub fn enumerate_states(fs: &FaceSet) -> Vec<State> {
    let mut out = Vec::new();
    fold_states(fs, &mut |mask| out.push(mask));
    out
}

pub fn count_states(fs: &FaceSet) -> u64 {
    let mut n = 0u64;
    fold_states(fs, &mut |_| n += 1);
    n
}

fn fold_states(fs: &FaceSet, visit: &mut impl FnMut(State)) {
    fn rec(fs: &FaceSet, face: usize, black: u64, visit: &mut impl FnMut(State)) {
        if face == fs.num_faces() {
            visit(black);
            return;
        }
        // white
        rec(fs, face + 1, black, visit);
        // black, unless an already-black neighbor (or the face itself,
        // across an edge) forbids it
        if !fs.is_self_adjacent(face) && fs.adjacency_mask(face) & black == 0 {
            rec(fs, face + 1, black | (1 << face), visit);
        }
    }
    rec(fs, 0, 0, visit);
}

/// Per-crossing data prepared once per diagram.
struct EvalPlan {
    /// (sign, corner faces F0..F3) per crossing.
    crossings: Vec<(i64, [usize; 4])>,
    /// crossings whose last (maximum-index) corner face is this face.
    completes_at: Vec<Vec<usize>>,
    num_faces: usize,
}

impl EvalPlan {
    fn new(d: &Diagram, fs: &FaceSet) -> Self {
        let crossings: Vec<(i64, [usize; 4])> = (0..d.num_crossings())
            .map(|ci| (d.crossings()[ci].sign(), d.corner_faces(fs, ci)))
            .collect();
        let mut completes_at = vec![Vec::new(); fs.num_faces()];
        for (ci, (_, corners)) in crossings.iter().enumerate() {
            let last = *corners.iter().max().unwrap();
            completes_at[last].push(ci);
        }
        EvalPlan { crossings, completes_at, num_faces: fs.num_faces() }
    }

    fn code(corners: &[usize; 4], black: u64) -> usize {
        let bit = |f: usize| ((black >> f) & 1) as usize;
        8 * bit(corners[0]) + 4 * bit(corners[1]) + 2 * bit(corners[2]) + bit(corners[3])
    }
}

/// |σ_X| for one crossing under a state: the 4-bit code of the corner faces
/// F0..F3, MSB first.
pub fn crossing_code(
    d: &Diagram,
    fs: &FaceSet,
    crossing: usize,
    state: State,
) -> usize {
    let corners = d.corner_faces(fs, crossing);
    EvalPlan::code(&corners, state)
}

/// The monomial of one state: the product of x/X variables at the crossings
/// and f0/f1 at the faces, evaluated in Z[ζ₅].
pub fn monomial_value(
    d: &Diagram,
    fs: &FaceSet,
    state: State,
    table: &VariableTable,
) -> CycloInt {
    let mut acc = CycloInt::ONE;
    for f in 0..fs.num_faces() {
        acc = acc * if state & (1 << f) != 0 { table.f1 } else { table.f0 };
    }
    for ci in 0..d.num_crossings() {
        let code = crossing_code(d, fs, ci, state);
        acc = acc * table.crossing_value(d.crossings()[ci].sign(), code);
    }
    acc
}

fn dfs_bracket(
    plan: &EvalPlan,
    table: &VariableTable,
    start_face: usize,
    black: u64,
    product: CycloInt,
    fs: &FaceSet,
) -> CycloInt {
    if start_face == plan.num_faces {
        return product;
    }
    let mut sum = CycloInt::ZERO;
    // white branch
    {
        let mut prod = product * table.f0;
        for &ci in &plan.completes_at[start_face] {
            let (sign, corners) = plan.crossings[ci];
            prod = prod * table.crossing_value(sign, EvalPlan::code(&corners, black));
        }
        sum = sum + dfs_bracket(plan, table, start_face + 1, black, prod, fs);
    }
    // black branch
    if !fs.is_self_adjacent(start_face)
        && fs.adjacency_mask(start_face) & black == 0
    {
        let black2 = black | (1 << start_face);
        let mut prod = product * table.f1;
        for &ci in &plan.completes_at[start_face] {
            let (sign, corners) = plan.crossings[ci];
            prod = prod * table.crossing_value(sign, EvalPlan::code(&corners, black2));
        }
        sum = sum + dfs_bracket(plan, table, start_face + 1, black2, prod, fs);
    }
    sum
}

/// The state sum [D]: sum over all states of their monomials.
///
/// Small diagrams are summed by direct depth-first enumeration; larger ones
/// by exact variable elimination over the face graph, which avoids walking
/// the (exponentially many) individual states. Both are exact and agree
/// bit-for-bit (tested against each other).
pub fn bracket(d: &Diagram) -> Result<CycloInt, DiagramError> {
    bracket_with_table(d, VariableTable::paper())
}

/// Face-count threshold above which elimination replaces enumeration.
const ELIMINATION_THRESHOLD: usize = 18;

pub fn bracket_with_table(
    d: &Diagram,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    d.validate()?;
    let fs = d.faces()?;
    if fs.num_faces() > ELIMINATION_THRESHOLD {
        return Ok(eliminate::bracket(d, &fs, table));
    }
    let plan = EvalPlan::new(d, &fs);
    Ok(dfs_bracket(&plan, table, 0, 0, CycloInt::ONE, &fs))
}

/// Force the enumeration path regardless of size (test/oracle use).
pub fn bracket_enumerated(
    d: &Diagram,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    d.validate()?;
    let fs = d.faces()?;
    let plan = EvalPlan::new(d, &fs);
    Ok(dfs_bracket(&plan, table, 0, 0, CycloInt::ONE, &fs))
}

/// Force the elimination path regardless of size (test/oracle use).
pub fn bracket_eliminated(
    d: &Diagram,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    d.validate()?;
    let fs = d.faces()?;
    Ok(eliminate::bracket(d, &fs, table))
}

mod eliminate {
    //! Exact bucket elimination of face variables.
    //!
    //! The state sum factors as a product of local terms: one binary weight
    //! per face (f0 white / f1 black), one hard constraint per edge-adjacent
    //! face pair (not both black), and one table per crossing over its ≤4
    //! corner faces. Summing out faces one at a time — always a face whose
    //! combined factor scope is smallest — keeps intermediate tables tiny
    //! because face graphs of planar diagrams have small separators.

    use super::{CycloInt, Diagram, VariableTable};
    use crate::diagram::FaceSet;

    struct Factor {
        /// Sorted face ids in scope; bit i of a table index is the color
        /// of vars[i].
        vars: Vec<usize>,
        table: Vec<CycloInt>,
    }

    impl Factor {
        fn constant(c: CycloInt) -> Self {
            Factor { vars: Vec::new(), table: vec![c] }
        }
    }

    /// Pointwise product of two factors over the union of their scopes.
    fn multiply(a: &Factor, b: &Factor) -> Factor {
        let mut vars: Vec<usize> = a.vars.iter().chain(&b.vars).copied().collect();
        vars.sort_unstable();
        vars.dedup();
        let n = vars.len();
        let pos = |f: &Factor| -> Vec<usize> {
            f.vars
                .iter()
                .map(|v| vars.binary_search(v).unwrap())
                .collect()
        };
        let (pa, pb) = (pos(a), pos(b));
        let mut table = vec![CycloInt::ZERO; 1 << n];
        for (idx, slot) in table.iter_mut().enumerate() {
            let sub = |p: &[usize]| -> usize {
                p.iter()
                    .enumerate()
                    .fold(0, |acc, (i, &j)| acc | (((idx >> j) & 1) << i))
            };
            *slot = a.table[sub(&pa)] * b.table[sub(&pb)];
        }
        Factor { vars, table }
    }

    /// Sum a factor over one of its variables.
    fn sum_out(f: &Factor, var: usize) -> Factor {
        let j = f.vars.binary_search(&var).unwrap();
        let vars: Vec<usize> =
            f.vars.iter().copied().filter(|&v| v != var).collect();
        let n = vars.len();
        let mut table = vec![CycloInt::ZERO; 1 << n];
        for (idx, slot) in table.iter_mut().enumerate() {
            // Re-insert the summed variable at position j.
            let low = idx & ((1 << j) - 1);
            let high = (idx >> j) << (j + 1);
            let base = high | low;
            *slot = f.table[base] + f.table[base | (1 << j)];
        }
        Factor { vars, table }
    }

    pub(super) fn bracket(
        d: &Diagram,
        fs: &FaceSet,
        t: &VariableTable,
    ) -> CycloInt {
        let nf = fs.num_faces();
        let mut factors: Vec<Factor> = Vec::new();

        // Per-face weights, with self-adjacent faces pinned white.
        for f in 0..nf {
            let black = if fs.is_self_adjacent(f) { CycloInt::ZERO } else { t.f1 };
            factors.push(Factor { vars: vec![f], table: vec![t.f0, black] });
        }
        // No two adjacent faces both black.
        for f1 in 0..nf {
            for f2 in f1 + 1..nf {
                if fs.adjacent(f1, f2) {
                    factors.push(Factor {
                        vars: vec![f1, f2],
                        table: vec![
                            CycloInt::ONE,
                            CycloInt::ONE,
                            CycloInt::ONE,
                            CycloInt::ZERO,
                        ],
                    });
                }
            }
        }
        // Crossing weights over the (deduplicated) corner faces.
        for ci in 0..d.num_crossings() {
            let corners = d.corner_faces(fs, ci);
            let sign = d.crossings()[ci].sign();
            let mut vars: Vec<usize> = corners.to_vec();
            vars.sort_unstable();
            vars.dedup();
            let n = vars.len();
            let table = (0..1usize << n)
                .map(|idx| {
                    let bit = |face: usize| {
                        let i = vars.binary_search(&face).unwrap();
                        (idx >> i) & 1
                    };
                    let code = 8 * bit(corners[0])
                        + 4 * bit(corners[1])
                        + 2 * bit(corners[2])
                        + bit(corners[3]);
                    // Codes never produced by an admissible state (two
                    // adjacent corners black) multiply a zero constraint
                    // anyway, so any value works; use zero to stay honest.
                    if super::LEGAL_CODES.contains(&code) {
                        t.crossing_value(sign, code)
                    } else {
                        CycloInt::ZERO
                    }
                })
                .collect();
            factors.push(Factor { vars, table });
        }

        // Eliminate the face whose combined scope is smallest, repeatedly.
        let mut remaining: Vec<usize> = (0..nf).collect();
        while let Some(&var) = remaining
            .iter()
            .min_by_key(|&&v| {
                let mut scope: Vec<usize> = factors
                    .iter()
                    .filter(|f| f.vars.contains(&v))
                    .flat_map(|f| f.vars.iter().copied())
                    .collect();
                scope.sort_unstable();
                scope.dedup();
                (scope.len(), v)
            })
        {
            remaining.retain(|&v| v != var);
            let (touching, rest): (Vec<Factor>, Vec<Factor>) =
                factors.into_iter().partition(|f| f.vars.contains(&var));
            factors = rest;
            let product = touching
                .into_iter()
                .reduce(|a, b| multiply(&a, &b))
                .unwrap_or_else(|| Factor::constant(CycloInt::ONE));
            factors.push(sum_out(&product, var));
        }
        factors
            .into_iter()
            .fold(CycloInt::ONE, |acc, f| {
                debug_assert!(f.vars.is_empty());
                acc * f.table[0]
            })
    }
}

/// Parallel evaluation: split on the color assignments of the first
/// ⌈log₂(workers)⌉ faces and combine partial sums by ring addition.
/// Exactness makes the result schedule-independent.
pub fn bracket_parallel(
    d: &Diagram,
    workers: usize,
) -> Result<CycloInt, DiagramError> {
    bracket_parallel_with_table(d, workers, VariableTable::paper())
}

pub fn bracket_parallel_with_table(
    d: &Diagram,
    workers: usize,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    d.validate()?;
    let fs = d.faces()?;
    let plan = EvalPlan::new(d, &fs);
    let split = (workers.max(1) as f64).log2().ceil() as usize;
    let split = split.min(fs.num_faces());

    // All valid prefixes over the first `split` faces, with their partial
    // products, in deterministic order.
    let mut prefixes: Vec<(u64, CycloInt)> = Vec::new();
    fn build_prefixes(
        plan: &EvalPlan,
        table: &VariableTable,
        fs: &FaceSet,
        face: usize,
        split: usize,
        black: u64,
        product: CycloInt,
        out: &mut Vec<(u64, CycloInt)>,
    ) {
        if face == split {
            out.push((black, product));
            return;
        }
        let mut prod = product * table.f0;
        for &ci in &plan.completes_at[face] {
            let (sign, corners) = plan.crossings[ci];
            prod = prod * table.crossing_value(sign, EvalPlan::code(&corners, black));
        }
        build_prefixes(plan, table, fs, face + 1, split, black, prod, out);
        if !fs.is_self_adjacent(face) && fs.adjacency_mask(face) & black == 0 {
            let black2 = black | (1 << face);
            let mut prod = product * table.f1;
            for &ci in &plan.completes_at[face] {
                let (sign, corners) = plan.crossings[ci];
                prod = prod
                    * table.crossing_value(sign, EvalPlan::code(&corners, black2));
            }
            build_prefixes(plan, table, fs, face + 1, split, black2, prod, out);
        }
    }
    build_prefixes(&plan, table, &fs, 0, split, 0, CycloInt::ONE, &mut prefixes);

    let partials: Vec<CycloInt> = prefixes
        .par_iter()
        .map(|&(black, product)| {
            dfs_bracket(&plan, table, split, black, product, &fs)
        })
        .collect();
    Ok(partials
        .into_iter()
        .fold(CycloInt::ZERO, |acc, x| acc + x))
}

/// The normalized invariant ⌈D⌉ = λ₊^(−wr) · [D].
pub fn invariant(d: &Diagram) -> Result<CycloInt, DiagramError> {
    invariant_with_table(d, VariableTable::paper())
}

pub fn invariant_with_table(
    d: &Diagram,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    let b = bracket_with_table(d, table)?;
    Ok(normalize(b, d.writhe(), &NormalizationConstants::from_table(table)))
}

/// The writhe-graded companion value λ₊^(+wr) · [D] = ζ^wr · ⌈D⌉.
///
/// Where `invariant` compensates curls away entirely, this value keeps the
/// blackboard framing: it is constant under parallel-strand and ribbon
/// insertions (and any move preserving the writhe) but multiplies by a
/// fifth root of unity per curl, so it is an invariant of *framed* links.
/// It satisfies the same mirror law (the mirror gives the conjugate), and
/// a non-self-conjugate value proves the framed diagram distinct from its
/// framed mirror — a strictly sharper test than the writhe-independent
/// quadruple whenever wr ≢ 0 (mod 5). The two values coincide when
/// wr ≡ 0 (mod 5).
pub fn framed_invariant(d: &Diagram) -> Result<CycloInt, DiagramError> {
    framed_invariant_with_table(d, VariableTable::paper())
}

pub fn framed_invariant_with_table(
    d: &Diagram,
    table: &VariableTable,
) -> Result<CycloInt, DiagramError> {
    let b = bracket_with_table(d, table)?;
    let norm = NormalizationConstants::from_table(table);
    let wr = d.writhe();
    let factor = if wr >= 0 {
        norm.lambda_plus.pow(wr as u32)
    } else {
        norm.lambda_minus.pow((-wr) as u32)
    };
    Ok(b * factor)
}

pub fn normalize(
    bracket: CycloInt,
    writhe: i64,
    norm: &NormalizationConstants,
) -> CycloInt {
    let factor = if writhe >= 0 {
        norm.lambda_minus.pow(writhe as u32)
    } else {
        norm.lambda_plus.pow((-writhe) as u32)
    };
    bracket * factor
}

/// True iff the quadruple is compatible with amphichirality (q = n, p = o);
/// false proves the link chiral.
pub fn amphichiral_obstruction(q: CycloInt) -> bool {
    q.q == q.n && q.p == q.o
}

/// JSON-ready evaluation report for one diagram.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub crossings: usize,
    pub writhe: i64,
    pub states: u64,
    pub bracket: [i128; 4],
    pub invariant: [i128; 4],
    pub possibly_amphichiral: bool,
    /// Writhe-graded (framed) value ζ^wr · invariant.
    pub framed: [i128; 4],
    /// Whether the framed value is compatible with framed amphichirality.
    pub framed_possibly_amphichiral: bool,
}

pub fn evaluate(d: &Diagram, name: &str) -> Result<InvariantReport, DiagramError> {
    d.validate()?;
    let fs = d.faces()?;
    let b = bracket(d)?;
    let norm = NormalizationConstants::paper();
    let inv = normalize(b, d.writhe(), &norm);
    let framed = framed_invariant(d)?;
    Ok(InvariantReport {
        name: name.to_string(),
        crossings: d.num_crossings(),
        writhe: d.writhe(),
        states: count_states(&fs),
        bracket: [b.n, b.o, b.p, b.q],
        invariant: [inv.n, inv.o, inv.p, inv.q],
        possibly_amphichiral: amphichiral_obstruction(inv),
        framed: [framed.n, framed.o, framed.p, framed.q],
        framed_possibly_amphichiral: amphichiral_obstruction(framed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::CurlSide;

    fn z(n: i128, o: i128, p: i128, q: i128) -> CycloInt {
        CycloInt::new(n, o, p, q)
    }

    #[test]
    fn variable_table_matches_direct_substitution() {
        let t = VariableTable::paper();
        let zeta = CycloInt::zeta;
        assert_eq!(t.f0, CycloInt::ONE);
        assert_eq!(t.f1, z(1, 0, 0, 1));
        assert_eq!(t.x[0].unwrap(), z(1, 0, 0, 1));
        assert_eq!(t.x_upper[0].unwrap(), z(1, 0, 0, 1));
        for code in [1, 4] {
            assert_eq!(t.x[code].unwrap(), zeta(4));
            assert_eq!(t.x_upper[code].unwrap(), zeta(1));
        }
        for code in [2, 8] {
            assert_eq!(t.x[code].unwrap(), zeta(1));
            assert_eq!(t.x_upper[code].unwrap(), zeta(4));
        }
        assert_eq!(t.x[5].unwrap(), -zeta(3));
        assert_eq!(t.x_upper[10].unwrap(), -zeta(3));
        assert_eq!(t.x_upper[5].unwrap(), -zeta(2));
        assert_eq!(t.x[10].unwrap(), -zeta(2));
    }

    #[test]
    fn normalization_constants() {
        let n = NormalizationConstants::paper();
        assert_eq!(n.lambda_plus, -CycloInt::zeta(3));
        assert_eq!(n.lambda_minus, -CycloInt::zeta(2));
        assert_eq!(n.lambda_plus * n.lambda_minus, CycloInt::ONE);
    }

    #[test]
    fn framed_value_laws() {
        let zeta = CycloInt::zeta;
        for d in [trefoil(), positive_curl(), negative_curl()] {
            let inv = invariant(&d).unwrap();
            let framed = framed_invariant(&d).unwrap();
            // framed = ζ^wr · invariant.
            let k = d.writhe().rem_euclid(5);
            assert_eq!(framed, inv * zeta(k));
            // Mirror law holds for the framed value too.
            assert_eq!(framed_invariant(&d.mirror()).unwrap(), framed.conj());
            // Framing-preserving moves leave it fixed; curls rotate it by ζ^±1.
            let edges = d.edge_labels();
            let rib = d.insert_ribbon(edges[0]).unwrap();
            assert_eq!(framed_invariant(&rib).unwrap(), framed);
            let up = d.insert_curl(edges[0], 1, CurlSide::Left).unwrap();
            assert_eq!(framed_invariant(&up).unwrap(), framed * zeta(1));
            let down = d.insert_curl(edges[0], -1, CurlSide::Right).unwrap();
            assert_eq!(framed_invariant(&down).unwrap(), framed * zeta(4));
        }
        // Values coincide exactly when wr ≡ 0 (mod 5).
        let cinq = crate::braid::closure(2, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(
            framed_invariant(&cinq).unwrap(),
            invariant(&cinq).unwrap()
        );
    }

    /// Brute-force oracle: filter all 2^F subsets by the adjacency rule.
    fn oracle_states(fs: &crate::diagram::FaceSet) -> Vec<State> {
        let f = fs.num_faces();
        let mut out = Vec::new();
        for m in 0..(1u64 << f) {
            let mut ok = true;
            'check: for i in 0..f {
                if m & (1 << i) == 0 {
                    continue;
                }
                if fs.is_self_adjacent(i) {
                    ok = false;
                    break;
                }
                for j in i + 1..f {
                    if m & (1 << j) != 0 && fs.adjacent(i, j) {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                out.push(m);
            }
        }
        out
    }

    fn sorted(mut v: Vec<State>) -> Vec<State> {
        v.sort_unstable();
        v
    }

    #[test]
    fn state_counts_match_oracle() {
        let tre = trefoil();
        let fs = tre.faces().unwrap();
        assert_eq!(count_states(&fs), 11);
        assert_eq!(sorted(enumerate_states(&fs)), sorted(oracle_states(&fs)));

        let curl = positive_curl();
        let cfs = curl.faces().unwrap();
        assert_eq!(count_states(&cfs), 5);
        assert_eq!(sorted(enumerate_states(&cfs)), sorted(oracle_states(&cfs)));
    }

    #[test]
    fn all_white_monomial_is_x0_power() {
        // Every crossing contributes x0/X0 = ζ+ζ⁴, faces contribute f0 = 1.
        let d = trefoil();
        let fs = d.faces().unwrap();
        let t = VariableTable::paper();
        let expected = z(1, 0, 0, 1).pow(3);
        assert_eq!(monomial_value(&d, &fs, 0, t), expected);
    }

    #[test]
    fn bracket_matches_state_by_state_oracle() {
        let d = trefoil();
        let fs = d.faces().unwrap();
        let t = VariableTable::paper();
        let mut oracle = CycloInt::ZERO;
        for s in oracle_states(&fs) {
            oracle = oracle + monomial_value(&d, &fs, s, t);
        }
        assert_eq!(bracket(&d).unwrap(), oracle);
    }

    #[test]
    fn bracket_of_mirror_is_conjugate() {
        for d in [trefoil(), positive_curl(), negative_curl()] {
            let b = bracket(&d).unwrap();
            assert_eq!(bracket(&d.mirror()).unwrap(), b.conj());
        }
    }

    #[test]
    fn bracket_independent_of_crossing_order() {
        let a = Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = Diagram::parse_pd("X(5,2,6,3) X(1,4,2,5) X(3,6,4,1)").unwrap();
        assert_eq!(bracket(&a).unwrap(), bracket(&b).unwrap());
    }

    #[test]
    fn invariant_is_stable_under_all_curl_insertions() {
        let d = trefoil();
        let v = invariant(&d).unwrap();
        for sign in [1, -1] {
            for side in [CurlSide::Left, CurlSide::Right] {
                for e in d.edge_labels() {
                    let d2 = d.insert_curl(e, sign, side).unwrap();
                    assert_eq!(
                        invariant(&d2).unwrap(),
                        v,
                        "edge {e}, sign {sign}, side {side:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn invariant_is_stable_under_r2_and_ribbon() {
        let d = trefoil();
        let v = invariant(&d).unwrap();
        let fs = d.faces().unwrap();
        let labels = d.edge_labels();
        let mut tested = 0;
        for (i, &e1) in labels.iter().enumerate() {
            for &e2 in &labels[i + 1..] {
                let s1 = fs.edge_sides(e1).unwrap();
                let s2 = fs.edge_sides(e2).unwrap();
                if !s1.iter().any(|f| s2.contains(f)) {
                    continue;
                }
                // Both orders: edge1 passes over edge2 and vice versa.
                for (a, b) in [(e1, e2), (e2, e1)] {
                    let d2 = d.insert_r2(a, b).unwrap();
                    assert_eq!(invariant(&d2).unwrap(), v, "r2 over ({a},{b})");
                }
                tested += 1;
            }
        }
        assert!(tested > 0);
        for e in labels {
            let d3 = d.insert_ribbon(e).unwrap();
            assert_eq!(invariant(&d3).unwrap(), v, "ribbon on {e}");
        }
    }

    #[test]
    fn unknot_preparations_agree() {
        let plus = invariant(&positive_curl()).unwrap();
        let minus = invariant(&negative_curl()).unwrap();
        assert_eq!(plus, minus);
        // Two-crossing preparation: a curl inserted into a curl.
        let two = positive_curl().insert_curl(1, -1, CurlSide::Right).unwrap();
        assert_eq!(invariant(&two).unwrap(), plus);
    }

    #[test]
    fn elimination_agrees_with_enumeration() {
        let t = VariableTable::paper();
        let mut diagrams = vec![trefoil(), positive_curl(), negative_curl()];
        // Grow a mid-size diagram by mixed insertions.
        let mut d = trefoil();
        for (i, e) in d.edge_labels().into_iter().enumerate() {
            d = d.insert_curl(e, if i % 2 == 0 { 1 } else { -1 }, CurlSide::Left).unwrap();
        }
        d = d.insert_r2(1, 4).unwrap();
        diagrams.push(d);
        for d in diagrams {
            assert_eq!(
                bracket_eliminated(&d, t).unwrap(),
                bracket_enumerated(&d, t).unwrap(),
            );
        }
    }

    #[test]
    fn large_diagram_evaluates_quickly_and_consistently() {
        // 24 curls on the trefoil: 29 faces, far beyond comfortable
        // enumeration, handled by elimination through the dispatcher.
        let mut d = trefoil();
        for i in 0..24 {
            let e = *d.edge_labels().last().unwrap();
            d = d
                .insert_curl(e, if i % 2 == 0 { 1 } else { -1 }, CurlSide::Right)
                .unwrap();
        }
        assert_eq!(invariant(&d).unwrap(), invariant(&trefoil()).unwrap());
    }

    #[test]
    fn parallel_bracket_is_bit_identical() {
        let d = trefoil();
        let seq = bracket(&d).unwrap();
        for workers in [1, 2, 4, 8, 64] {
            assert_eq!(bracket_parallel(&d, workers).unwrap(), seq);
        }
    }

    #[test]
    fn amphichiral_obstruction_examples() {
        assert!(amphichiral_obstruction(z(-4, -1, -1, -4)));
        assert!(!amphichiral_obstruction(z(4, 0, 3, 3)));
        assert!(amphichiral_obstruction(CycloInt::ZERO));
    }
}
