//! Evaluate one bracket with different worker counts and confirm the
//! results are bit-identical: the arithmetic is exact, so the split of the
//! face-coloring search space cannot affect the sum.

use std::time::Instant;

use facesum::braid;
use facesum::statesum;

fn main() {
    // The (3,7) torus braid closure: 14 crossings, 16 faces.
    let word: Vec<i32> = [1, 2].iter().cycle().take(14).copied().collect();
    let diagram = braid::closure(3, &word).unwrap();
    let faces = diagram.faces().unwrap();
    println!(
        "diagram: {} crossings, {} faces, {} admissible states",
        diagram.num_crossings(),
        faces.num_faces(),
        statesum::count_states(&faces)
    );

    let t0 = Instant::now();
    let sequential = statesum::bracket(&diagram).unwrap();
    println!("sequential: {sequential}  ({:?})", t0.elapsed());

    for workers in [1, 2, 4, 8] {
        let t = Instant::now();
        let parallel = statesum::bracket_parallel(&diagram, workers).unwrap();
        println!("{workers:>2} workers: {parallel}  ({:?})", t.elapsed());
        assert_eq!(parallel, sequential, "exactness is schedule-independent");
    }
    println!("all worker counts agree bit-for-bit");
}
