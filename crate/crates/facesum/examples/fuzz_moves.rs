//! Fuzz the invariant: apply random curl / parallel-strand / ribbon
//! insertions to seed diagrams and confirm the value never moves.
//!
//! Usage: cargo run --example fuzz_moves -- [seed] [diagrams] [moves]

use facesum::fuzz;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().map_or(0, |s| s.parse().expect("seed"));
    let diagrams: usize =
        args.next().map_or(25, |s| s.parse().expect("diagrams"));
    let moves: usize = args.next().map_or(12, |s| s.parse().expect("moves"));

    let report = fuzz::fuzz(seed, diagrams, moves);
    for orbit in &report.orbits {
        println!(
            "{} seed={} moves={} invariant=⌊{},{},{},{}⌋",
            if orbit.pass { "ok  " } else { "FAIL" },
            orbit.seed_name,
            orbit.moves.len(),
            orbit.initial[0],
            orbit.initial[1],
            orbit.initial[2],
            orbit.initial[3],
        );
        if let Some(k) = orbit.failing_prefix {
            println!(
                "     diverged after {k} moves; replay:\n     {}",
                serde_json::to_string(&orbit.moves[..k]).unwrap()
            );
        }
    }
    println!(
        "\n{}/{} orbits kept the invariant constant (seed {seed})",
        report.orbits.iter().filter(|o| o.pass).count(),
        report.orbits.len()
    );
    std::process::exit(if report.pass { 0 } else { 1 });
}
