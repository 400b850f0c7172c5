//! Face tracing on the combinatorial map.
//!
//! Each crossing carries 4 darts in counterclockwise slot order. The face
//! permutation sends a dart across its edge to the far end and then to the
//! next dart clockwise there, so every orbit walks one face with the face
//! on a fixed side. A connected n-crossing diagram traces n + 2 faces.

use std::collections::HashMap;

use super::{Dart, Diagram, DiagramError, EdgeLabel};

/// Evaluator limit: face colorings are packed into u64 bitmasks.
pub const MAX_FACES: usize = 64;

#[derive(Clone, Debug)]
pub struct FaceSet {
    num_faces: usize,
    /// face id per dart, indexed 4*crossing + slot.
    face_of_dart: Vec<usize>,
    /// adjacency[f] = bitmask of faces sharing at least one edge with f.
    adjacency: Vec<u64>,
    /// faces that meet themselves across an edge (can never be black).
    self_adjacent: u64,
    /// per edge label: the face on each side.
    edge_sides: HashMap<EdgeLabel, [usize; 2]>,
}

pub(super) fn trace_faces(d: &Diagram) -> Result<FaceSet, DiagramError> {
    let n = d.num_crossings();
    if n == 0 {
        return Err(DiagramError::NoCrossings);
    }
    // Edge involution over darts.
    let mut occurrences: HashMap<EdgeLabel, Vec<Dart>> = HashMap::new();
    for (ci, x) in d.crossings().iter().enumerate() {
        for (slot, &l) in x.edges.iter().enumerate() {
            occurrences.entry(l).or_default().push((ci, slot));
        }
    }
    let mut theta = vec![usize::MAX; 4 * n];
    for darts in occurrences.values() {
        debug_assert_eq!(darts.len(), 2);
        let a = 4 * darts[0].0 + darts[0].1;
        let b = 4 * darts[1].0 + darts[1].1;
        theta[a] = b;
        theta[b] = a;
    }

    // Orbits of dart -> clockwise-next(theta(dart)).
    let next = |dart: usize| -> usize {
        let far = theta[dart];
        let (c, s) = (far / 4, far % 4);
        4 * c + (s + 3) % 4
    };
    let mut face_of_dart = vec![usize::MAX; 4 * n];
    let mut num_faces = 0;
    for start in 0..4 * n {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = num_faces;
        num_faces += 1;
        let mut cur = start;
        loop {
            face_of_dart[cur] = id;
            cur = next(cur);
            if cur == start {
                break;
            }
        }
    }

    if num_faces != n + 2 {
        return Err(DiagramError::NonPlanar {
            crossings: n,
            found: num_faces,
            expected: n + 2,
        });
    }
    if num_faces > MAX_FACES {
        return Err(DiagramError::TooManyFaces(MAX_FACES));
    }

    let mut adjacency = vec![0u64; num_faces];
    let mut self_adjacent = 0u64;
    let mut edge_sides = HashMap::new();
    for (&label, darts) in &occurrences {
        let f1 = face_of_dart[4 * darts[0].0 + darts[0].1];
        let f2 = face_of_dart[4 * darts[1].0 + darts[1].1];
        edge_sides.insert(label, [f1, f2]);
        if f1 == f2 {
            self_adjacent |= 1 << f1;
        } else {
            adjacency[f1] |= 1 << f2;
            adjacency[f2] |= 1 << f1;
        }
    }

    Ok(FaceSet {
        num_faces,
        face_of_dart,
        adjacency,
        self_adjacent,
        edge_sides,
    })
}

impl FaceSet {
    pub fn num_faces(&self) -> usize {
        self.num_faces
    }

    /// Face at corner k of a crossing (the region between slots k and k+1).
    pub fn corner_face(&self, crossing: usize, corner: usize) -> usize {
        self.face_of_dart[4 * crossing + corner]
    }

    pub fn face_of_dart(&self, dart: Dart) -> usize {
        self.face_of_dart[4 * dart.0 + dart.1]
    }

    /// Faces sharing at least one edge with `face`, as a bitmask.
    pub fn adjacency_mask(&self, face: usize) -> u64 {
        self.adjacency[face]
    }

    pub fn is_self_adjacent(&self, face: usize) -> bool {
        self.self_adjacent & (1 << face) != 0
    }

    pub fn adjacent(&self, f1: usize, f2: usize) -> bool {
        if f1 == f2 {
            return false;
        }
        self.adjacency[f1] & (1 << f2) != 0
    }

    /// The faces on the two sides of an edge (possibly equal).
    pub fn edge_sides(&self, label: EdgeLabel) -> Option<[usize; 2]> {
        self.edge_sides.get(&label).copied()
    }

    /// Edge labels bordering a face.
    pub fn boundary_edges(&self, face: usize) -> Vec<EdgeLabel> {
        let mut edges: Vec<EdgeLabel> = self
            .edge_sides
            .iter()
            .filter_map(|(&l, &[f1, f2])| {
                (f1 == face || f2 == face).then_some(l)
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}
