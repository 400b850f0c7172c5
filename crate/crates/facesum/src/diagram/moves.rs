//! Reidemeister-move pattern insertion for invariance fuzzing.
//!
//! Both insertions work on the combinatorial map directly: an edge is
//! subdivided with fresh labels and the new crossings are written with
//! explicit over-in slots, so no label-succession inference is needed on
//! the result.

use super::{Crossing, Diagram, DiagramError, EdgeLabel};

/// Which side of the strand the curl's loop sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurlSide {
    Left,
    Right,
}

/// Replace the label of one specific edge occurrence.
fn relabel_occurrence(d: &mut Diagram, at: (usize, usize), new: EdgeLabel) {
    d.crossings_mut()[at.0].edges[at.1] = new;
}

pub(super) fn insert_curl(
    d: &Diagram,
    edge: EdgeLabel,
    sign: i64,
    side: CurlSide,
) -> Result<Diagram, DiagramError> {
    assert!(sign == 1 || sign == -1, "curl sign must be ±1");
    let head = d.edge_head(edge).ok_or(DiagramError::NoSuchEdge(edge))?;
    let m1 = d.next_free_label(); // the loop edge
    let m2 = m1 + 1; // continuation toward the old head
    let mut out = d.clone();
    relabel_occurrence(&mut out, head, m2);
    // The strand runs ...--edge--> Y --m2--> old head, with m1 the loop.
    let (edges, over_in) = match (sign, side) {
        (1, CurlSide::Right) => ([edge, m2, m1, m1], 3),
        (1, CurlSide::Left) => ([m1, m1, m2, edge], 3),
        (-1, CurlSide::Right) => ([edge, m1, m1, m2], 1),
        (-1, CurlSide::Left) => ([m1, edge, m2, m1], 1),
        _ => unreachable!(),
    };
    out.crossings_mut().push(Crossing::new(edges, over_in));
    Ok(out)
}

pub(super) fn insert_r2(
    d: &Diagram,
    edge1: EdgeLabel,
    edge2: EdgeLabel,
) -> Result<Diagram, DiagramError> {
    if edge1 == edge2 {
        return Err(DiagramError::R2SameEdge);
    }
    let sides1 = d
        .faces()?
        .edge_sides(edge1)
        .ok_or(DiagramError::NoSuchEdge(edge1))?;
    let fs = d.faces()?;
    let sides2 = fs.edge_sides(edge2).ok_or(DiagramError::NoSuchEdge(edge2))?;
    // Smallest shared face, for determinism.
    let shared = sides1
        .iter()
        .filter(|f| sides2.contains(f))
        .min()
        .copied()
        .ok_or(DiagramError::NoSharedFace(edge1, edge2))?;

    // The darts of each edge whose traversal has the shared face on its side.
    let dart_in_face = |label: EdgeLabel| {
        d.edge_darts(label)
            .unwrap()
            .into_iter()
            .find(|&dart| fs.face_of_dart(dart) == shared)
            .unwrap()
    };
    let d1 = dart_in_face(edge1);
    let d2 = dart_in_face(edge2);
    let d1_head = d.crossings()[d1.0].is_incoming(d1.1);
    let d2_tail = !d.crossings()[d2.0].is_incoming(d2.1);

    let head1 = d.edge_head(edge1).ok_or(DiagramError::NoSuchEdge(edge1))?;
    let head2 = d.edge_head(edge2).ok_or(DiagramError::NoSuchEdge(edge2))?;

    let base = d.next_free_label();
    let (n1, n2, n3, n4) = (base, base + 1, base + 2, base + 3);
    // edge1 runs  ...--edge1--> [first] --n1--> [second] --n2--> old head1
    // edge2 runs  ...--edge2--> [first] --n3--> [second] --n4--> old head2
    // edge1's strand passes over edge2 at both new crossings.
    let mut out = d.clone();
    relabel_occurrence(&mut out, head1, n2);
    relabel_occurrence(&mut out, head2, n4);
    let (xa, xb) = match (d1_head, d2_tail) {
        // Four planar hookups, one per orientation of the two edges along
        // the shared face boundary.
        (true, true) => (
            Crossing::new([edge2, n1, n3, edge1], 3),
            Crossing::new([n3, n1, n4, n2], 1),
        ),
        (false, true) => (
            Crossing::new([n3, n1, n4, edge1], 3),
            Crossing::new([edge2, n1, n3, n2], 1),
        ),
        (true, false) => (
            Crossing::new([n3, edge1, n4, n1], 1),
            Crossing::new([edge2, n2, n3, n1], 3),
        ),
        (false, false) => (
            Crossing::new([edge2, edge1, n3, n1], 1),
            Crossing::new([n3, n2, n4, n1], 3),
        ),
    };
    out.crossings_mut().push(xa);
    out.crossings_mut().push(xb);
    Ok(out)
}

pub(super) fn insert_ribbon(
    d: &Diagram,
    edge: EdgeLabel,
) -> Result<Diagram, DiagramError> {
    // Opposite-sign curl pair on consecutive pieces of one edge: a framed
    // (writhe-preserving) move.
    let with_plus = insert_curl(d, edge, 1, CurlSide::Right)?;
    // The continuation label created by the first insertion.
    let m2 = d.next_free_label() + 1;
    insert_curl(&with_plus, m2, -1, CurlSide::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    #[test]
    fn curl_insertion_all_variants() {
        let d = trefoil();
        for sign in [1, -1] {
            for side in [CurlSide::Left, CurlSide::Right] {
                let d2 = d.insert_curl(1, sign, side).unwrap();
                assert_eq!(d2.num_crossings(), 4);
                assert_eq!(d2.writhe(), d.writhe() + sign);
                assert_eq!(
                    d2.faces().unwrap().num_faces(),
                    d.faces().unwrap().num_faces() + 1,
                    "sign {sign}, side {side:?}"
                );
                d2.validate().unwrap();
            }
        }
    }

    #[test]
    fn curl_insertion_rejects_missing_edge() {
        let d = trefoil();
        assert!(matches!(
            d.insert_curl(99, 1, CurlSide::Left),
            Err(DiagramError::NoSuchEdge(99))
        ));
    }

    #[test]
    fn r2_insertion_preserves_writhe_and_adds_two_faces() {
        let d = trefoil();
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
                let d2 = d.insert_r2(e1, e2).unwrap();
                assert_eq!(d2.num_crossings(), 5);
                assert_eq!(d2.writhe(), d.writhe());
                assert_eq!(d2.faces().unwrap().num_faces(), 7);
                d2.validate().unwrap();
                tested += 1;
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn r2_insertion_rejects_edges_without_shared_face() {
        // In the trefoil every pair of edges shares a face, so grow it
        // first: two R2 insertions produce distant edges.
        let d = trefoil();
        let d2 = d.insert_r2(1, 4).unwrap();
        let fs = d2.faces().unwrap();
        let labels = d2.edge_labels();
        let disjoint = labels.iter().enumerate().find_map(|(i, &e1)| {
            labels[i + 1..].iter().find_map(|&e2| {
                let s1 = fs.edge_sides(e1).unwrap();
                let s2 = fs.edge_sides(e2).unwrap();
                (!s1.iter().any(|f| s2.contains(f))).then_some((e1, e2))
            })
        });
        if let Some((e1, e2)) = disjoint {
            assert!(matches!(
                d2.insert_r2(e1, e2),
                Err(DiagramError::NoSharedFace(_, _))
            ));
        }
        assert!(matches!(
            d2.insert_r2(1, 1),
            Err(DiagramError::R2SameEdge)
        ));
    }

    #[test]
    fn ribbon_insertion_preserves_writhe() {
        let d = trefoil();
        let d2 = d.insert_ribbon(4).unwrap();
        assert_eq!(d2.num_crossings(), 5);
        assert_eq!(d2.writhe(), d.writhe());
        assert_eq!(d2.faces().unwrap().num_faces(), 7);
    }

    #[test]
    fn curl_insertion_into_curl() {
        let d = positive_curl();
        for e in d.edge_labels() {
            for sign in [1, -1] {
                for side in [CurlSide::Left, CurlSide::Right] {
                    let d2 = d.insert_curl(e, sign, side).unwrap();
                    assert_eq!(d2.faces().unwrap().num_faces(), 4);
                }
            }
        }
    }
}
