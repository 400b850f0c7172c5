//! Randomized move-invariance checking.
//!
//! Starting from small seed diagrams, a seeded RNG applies random local
//! moves (curl, parallel-strand, ribbon insertions) and checks that the
//! state-sum invariant never changes along the orbit. Any violation is
//! reported with the shortest failing prefix so it can be replayed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclotomic::CycloInt;
use crate::diagram::{CurlSide, Diagram, DiagramError};
use crate::statesum::{self, VariableTable};

/// One local move, replayable from its serialized form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    Curl { edge: u32, sign: i64, side_right: bool },
    Parallel { over: u32, under: u32 },
    Ribbon { edge: u32 },
}

impl Move {
    pub fn apply(&self, d: &Diagram) -> Result<Diagram, DiagramError> {
        match *self {
            Move::Curl { edge, sign, side_right } => {
                let side = if side_right { CurlSide::Right } else { CurlSide::Left };
                d.insert_curl(edge, sign, side)
            }
            Move::Parallel { over, under } => d.insert_r2(over, under),
            Move::Ribbon { edge } => d.insert_ribbon(edge),
        }
    }
}

/// Outcome of one orbit: the moves applied and, on failure, the shortest
/// prefix after which the invariant changed.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub seed_name: String,
    /// PD text of the starting diagram (replayable).
    pub seed_pd: String,
    pub moves: Vec<Move>,
    pub initial: [i128; 4],
    pub pass: bool,
    /// Length of the shortest failing move prefix, if any.
    pub failing_prefix: Option<usize>,
    /// PD text of the first diagram that violated a law, if any.
    pub failing_diagram: Option<String>,
    /// Which law broke: "invariant" or "mirror", if any.
    pub failing_law: Option<String>,
    pub final_value: [i128; 4],
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub diagrams: usize,
    pub moves_per_diagram: usize,
    pub orbits: Vec<OrbitReport>,
    pub pass: bool,
}

/// Seed diagrams the generator can start from: one-crossing unknots and the
/// standard trefoil, with explicit over-in slots throughout.
fn seed_pool() -> Vec<(&'static str, &'static str)> {
    vec![
        ("curl+", "X(1,1,2,2)"),
        ("curl-", "X(1,2,2,1)"),
        ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
        ("hopf++", "X+(1,3,2,4) X+(3,1,4,2)"),
        ("figure8", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
    ]
}

/// Pick a random applicable move. Parallel insertions need two distinct
/// edges on a common face, so candidates are drawn until one fits.
fn random_move<R: Rng>(rng: &mut R, d: &Diagram) -> Move {
    let labels = d.edge_labels();
    loop {
        match rng.gen_range(0..4) {
            0 | 1 => {
                // Curls twice as likely: they keep diagrams from ballooning.
                return Move::Curl {
                    edge: *labels.choose(rng).unwrap(),
                    sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                    side_right: rng.gen_bool(0.5),
                };
            }
            2 => {
                let fs = d.faces().expect("fuzz diagrams stay planar");
                let over = *labels.choose(rng).unwrap();
                let under = *labels.choose(rng).unwrap();
                if over == under {
                    continue;
                }
                let s1 = fs.edge_sides(over).unwrap();
                let s2 = fs.edge_sides(under).unwrap();
                if s1.iter().any(|f| s2.contains(f)) {
                    return Move::Parallel { over, under };
                }
            }
            _ => {
                return Move::Ribbon { edge: *labels.choose(rng).unwrap() };
            }
        }
    }
}

/// Run one orbit: apply `num_moves` random moves and compare the invariant
/// after each step against the seed diagram's value.
pub fn run_orbit<R: Rng>(
    rng: &mut R,
    seed_name: &str,
    start: &Diagram,
    num_moves: usize,
    table: &VariableTable,
) -> OrbitReport {
    let initial = statesum::invariant_with_table(start, table)
        .expect("seed diagram must evaluate");
    let mut d = start.clone();
    let mut moves = Vec::with_capacity(num_moves);
    let mut failing_prefix = None;
    let mut failing_law = None;
    let mut value = initial;
    for step in 0..num_moves {
        let mv = random_move(rng, &d);
        moves.push(mv);
        d = mv.apply(&d).expect("moves picked to be applicable");
        value = statesum::invariant_with_table(&d, table)
            .expect("moved diagram must evaluate");
        if value != initial {
            failing_prefix = Some(step + 1);
            failing_law = Some("invariant".to_string());
            break;
        }
        // Mirror law at every step: the mirrored diagram must evaluate to
        // the conjugate quadruple.
        let mirrored = statesum::invariant_with_table(&d.mirror(), table)
            .expect("mirrored diagram must evaluate");
        if mirrored != value.conj() {
            failing_prefix = Some(step + 1);
            failing_law = Some("mirror".to_string());
            value = mirrored;
            break;
        }
    }
    OrbitReport {
        seed_name: seed_name.to_string(),
        seed_pd: start.to_pd_text(),
        moves,
        initial: quad(initial),
        pass: failing_prefix.is_none(),
        failing_prefix,
        failing_diagram: failing_prefix.map(|_| d.to_pd_text()),
        failing_law,
        final_value: quad(value),
    }
}

fn quad(c: CycloInt) -> [i128; 4] {
    [c.n, c.o, c.p, c.q]
}

/// Fuzz `diagrams` orbits of `moves_per_diagram` moves each, deterministic
/// in `seed`.
pub fn fuzz(seed: u64, diagrams: usize, moves_per_diagram: usize) -> FuzzReport {
    fuzz_with_table(seed, diagrams, moves_per_diagram, VariableTable::paper())
}

pub fn fuzz_with_table(
    seed: u64,
    diagrams: usize,
    moves_per_diagram: usize,
    table: &VariableTable,
) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = seed_pool();
    let mut orbits = Vec::with_capacity(diagrams);
    for _ in 0..diagrams {
        let (name, pd) = pool[rng.gen_range(0..pool.len())];
        let start = Diagram::parse_pd(pd).expect("seed pool parses");
        // Mirror half the time so both chiralities are exercised.
        let start = if rng.gen_bool(0.5) { start.mirror() } else { start };
        orbits.push(run_orbit(&mut rng, name, &start, moves_per_diagram, table));
    }
    let pass = orbits.iter().all(|o| o.pass);
    FuzzReport { seed, diagrams, moves_per_diagram, orbits, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Assignment;

    #[test]
    fn seed_pool_parses_and_evaluates() {
        for (name, pd) in seed_pool() {
            let d = Diagram::parse_pd(pd).unwrap();
            statesum::invariant(&d).unwrap_or_else(|e| {
                panic!("seed {name}: {e}");
            });
        }
    }

    #[test]
    fn fuzz_is_deterministic() {
        let a = fuzz(42, 5, 6);
        let b = fuzz(42, 5, 6);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(a.pass);
    }

    #[test]
    fn different_seeds_give_different_orbits() {
        let a = fuzz(1, 3, 5);
        let b = fuzz(2, 3, 5);
        assert_ne!(
            serde_json::to_string(&a.orbits).unwrap(),
            serde_json::to_string(&b.orbits).unwrap()
        );
    }

    #[test]
    fn corrupted_variable_table_is_caught() {
        // Swap the two double-black crossing weights; the invariance
        // equations fail for this table and fuzzing must notice.
        let vars = crate::polyring::vars_ss();
        let swapped = Assignment::paper()
            .with_replaced("x5", crate::polyring::parse_poly("-s^4 S^2", &vars).unwrap())
            .with_replaced("x10", crate::polyring::parse_poly("-s^2 S^4", &vars).unwrap());
        let report = crate::polyring::verify_invariance(&swapped);
        assert!(!report.all_pass());
        let table = VariableTable::from_assignment(&swapped);
        let fuzz_report = fuzz_with_table(7, 20, 8, &table);
        assert!(!fuzz_report.pass);
        let bad = fuzz_report.orbits.iter().find(|o| !o.pass).unwrap();
        assert!(bad.failing_prefix.unwrap() <= bad.moves.len());
        assert_ne!(bad.final_value, bad.initial);
    }

    #[test]
    fn moves_serialize_for_replay() {
        let mv = Move::Curl { edge: 3, sign: -1, side_right: true };
        let js = serde_json::to_string(&mv).unwrap();
        assert!(js.contains("\"move\":\"curl\""), "{js}");
    }
}
