//! Oriented link projections as combinatorial maps.
//!
//! A diagram is a list of crossings, each a 4-tuple of edge labels listed
//! counterclockwise starting at the incoming under-edge (slot 0). The
//! over-strand occupies slots 1 and 3; which of the two is its incoming end
//! decides the crossing sign. Faces are traced as orbits of the next-dart
//! permutation of the map.

mod faces;
mod moves;
mod parse;

pub use faces::FaceSet;
pub use moves::CurlSide;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type EdgeLabel = u32;

/// Slot indices: 0 = incoming under, 2 = outgoing under, over-strand on 1/3.
pub const UNDER_IN: usize = 0;
pub const UNDER_OUT: usize = 2;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("empty input: a diagram needs at least one crossing")]
    EmptyInput,
    #[error("PD syntax error: {0}")]
    Syntax(String),
    #[error("edge labels must occur exactly twice; bad labels: {0:?}")]
    BadLabelMultiplicity(Vec<EdgeLabel>),
    #[error(
        "ambiguous over-strand direction at crossing {0}; \
         use explicit X+(a,b,c,d)/X-(a,b,c,d) syntax"
    )]
    AmbiguousOverDirection(usize),
    #[error("cannot infer over-strand direction at crossing {0}: neither label succession holds")]
    CannotInferOverDirection(usize),
    #[error("inconsistent strand orientation at edge label {0}")]
    InconsistentOrientation(EdgeLabel),
    #[error(
        "DISCONNECTED: split diagram; prepare the input by joining the \
         components with an R2 clasp (insert_r2) before evaluating"
    )]
    Disconnected,
    #[error("NO_CROSSINGS: adequate projections need at least one crossing")]
    NoCrossings,
    #[error("face tracing produced {found} faces for {crossings} crossings (expected {expected}); the PD code is not a planar diagram")]
    NonPlanar { crossings: usize, found: usize, expected: usize },
    #[error("diagram has more than {0} faces; too large for this evaluator")]
    TooManyFaces(usize),
    #[error("edge label {0} does not exist in the diagram")]
    NoSuchEdge(EdgeLabel),
    #[error("edges {0} and {1} do not border a common face")]
    NoSharedFace(EdgeLabel, EdgeLabel),
    #[error("R2 insertion requires two distinct edges")]
    R2SameEdge,
}

/// One crossing: edge labels counterclockwise from the incoming under-edge,
/// plus the resolved incoming slot of the over-strand (1 or 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edges: [EdgeLabel; 4],
    pub over_in: usize,
}

impl Crossing {
    pub fn new(edges: [EdgeLabel; 4], over_in: usize) -> Self {
        assert!(over_in == 1 || over_in == 3, "over_in must be slot 1 or 3");
        Crossing { edges, over_in }
    }

    /// +1 iff the over-strand enters at slot 3.
    pub fn sign(&self) -> i64 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }

    /// Whether the edge at `slot` points into the crossing.
    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == UNDER_IN || slot == self.over_in
    }
}

/// A dart is one edge-end: (crossing index, slot).
pub type Dart = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
}

/// JSON wire form: crossing tuples plus signs.
#[derive(Serialize, Deserialize)]
struct DiagramJson {
    crossings: Vec<[EdgeLabel; 4]>,
    signs: Vec<i64>,
}

impl Diagram {
    /// Build from resolved crossings, checking label multiplicity and
    /// orientation consistency.
    pub fn from_crossings(
        crossings: Vec<Crossing>,
    ) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::EmptyInput);
        }
        let d = Diagram { crossings };
        d.check_labels()?;
        d.check_orientation()?;
        Ok(d)
    }

    /// Parse PD text: whitespace-separated `X(a,b,c,d)` tuples, with
    /// optional explicit-sign forms `X+(a,b,c,d)` / `X-(a,b,c,d)`.
    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        parse::parse_pd(text)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign()).sum()
    }

    /// All edge labels, sorted.
    pub fn edge_labels(&self) -> Vec<EdgeLabel> {
        let mut labels: Vec<EdgeLabel> = self
            .crossings
            .iter()
            .flat_map(|x| x.edges.iter().copied())
            .collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// The two darts of an edge label.
    pub fn edge_darts(&self, label: EdgeLabel) -> Option<[Dart; 2]> {
        let mut found = Vec::with_capacity(2);
        for (ci, x) in self.crossings.iter().enumerate() {
            for (slot, &l) in x.edges.iter().enumerate() {
                if l == label {
                    found.push((ci, slot));
                }
            }
        }
        match found.len() {
            2 => Some([found[0], found[1]]),
            _ => None,
        }
    }

    /// The dart where the edge leaves a crossing (its tail).
    pub fn edge_tail(&self, label: EdgeLabel) -> Option<Dart> {
        self.edge_darts(label)?
            .into_iter()
            .find(|&(c, s)| !self.crossings[c].is_incoming(s))
    }

    /// The dart where the edge enters a crossing (its head).
    pub fn edge_head(&self, label: EdgeLabel) -> Option<Dart> {
        self.edge_darts(label)?
            .into_iter()
            .find(|&(c, s)| self.crossings[c].is_incoming(s))
    }

    fn check_labels(&self) -> Result<(), DiagramError> {
        let mut counts = std::collections::HashMap::new();
        for x in &self.crossings {
            for &l in &x.edges {
                *counts.entry(l).or_insert(0usize) += 1;
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
        Ok(())
    }

    fn check_orientation(&self) -> Result<(), DiagramError> {
        // Every edge must have exactly one incoming and one outgoing end.
        for label in self.edge_labels() {
            let darts = self.edge_darts(label).unwrap();
            let ins = darts
                .iter()
                .filter(|&&(c, s)| self.crossings[c].is_incoming(s))
                .count();
            if ins != 1 {
                return Err(DiagramError::InconsistentOrientation(label));
            }
        }
        Ok(())
    }

    /// Adequacy: connected underlying graph with at least one crossing.
    pub fn validate(&self) -> Result<(), DiagramError> {
        if self.crossings.is_empty() {
            return Err(DiagramError::NoCrossings);
        }
        // Union-find over crossings joined by shared edge labels.
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for label in self.edge_labels() {
            let [(c1, _), (c2, _)] = self.edge_darts(label).unwrap();
            let r1 = find(&mut parent, c1);
            let r2 = find(&mut parent, c2);
            parent[r1] = r2;
        }
        let root = find(&mut parent, 0);
        for i in 1..n {
            if find(&mut parent, i) != root {
                return Err(DiagramError::Disconnected);
            }
        }
        Ok(())
    }

    /// Trace faces as orbits of the next-dart permutation.
    pub fn faces(&self) -> Result<FaceSet, DiagramError> {
        faces::trace_faces(self)
    }

    /// Corner faces (F0, F1, F2, F3) of a crossing: F0 sits in the corner
    /// between the two incoming strands, the rest proceed counterclockwise.
    pub fn corner_faces(&self, fs: &FaceSet, crossing: usize) -> [usize; 4] {
        let k0 = if self.crossings[crossing].over_in == 1 { 0 } else { 3 };
        std::array::from_fn(|j| fs.corner_face(crossing, (k0 + j) % 4))
    }

    /// Over/under swapped at every crossing; all signs negate, the face
    /// structure is unchanged up to relabeling.
    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let e = x.edges;
                if x.over_in == 1 {
                    // Old over-in slot 1 becomes the new under-in.
                    Crossing::new([e[1], e[2], e[3], e[0]], 3)
                } else {
                    Crossing::new([e[3], e[0], e[1], e[2]], 1)
                }
            })
            .collect();
        Diagram { crossings }
    }

    /// Subdivide `edge` and insert a one-crossing curl of the given sign.
    pub fn insert_curl(
        &self,
        edge: EdgeLabel,
        sign: i64,
        side: CurlSide,
    ) -> Result<Diagram, DiagramError> {
        moves::insert_curl(self, edge, sign, side)
    }

    /// Push `edge1` across `edge2` through a shared face (oriented R2 move);
    /// adds two crossings of opposite sign.
    pub fn insert_r2(
        &self,
        edge1: EdgeLabel,
        edge2: EdgeLabel,
    ) -> Result<Diagram, DiagramError> {
        moves::insert_r2(self, edge1, edge2)
    }

    /// Writhe-preserving pair of opposite curls on one edge (framed move).
    pub fn insert_ribbon(&self, edge: EdgeLabel) -> Result<Diagram, DiagramError> {
        moves::insert_ribbon(self, edge)
    }

    pub fn next_free_label(&self) -> EdgeLabel {
        self.edge_labels().last().map_or(1, |&l| l + 1)
    }

    pub(crate) fn crossings_mut(&mut self) -> &mut Vec<Crossing> {
        &mut self.crossings
    }

    /// JSON form `{"crossings":[[a,b,c,d],...],"signs":[1,-1,...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let j = DiagramJson {
            crossings: self.crossings.iter().map(|x| x.edges).collect(),
            signs: self.crossings.iter().map(|x| x.sign()).collect(),
        };
        serde_json::to_value(j).unwrap()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, DiagramError> {
        let j: DiagramJson = serde_json::from_value(value.clone())
            .map_err(|e| DiagramError::Syntax(e.to_string()))?;
        if j.crossings.len() != j.signs.len() {
            return Err(DiagramError::Syntax(
                "crossings and signs length mismatch".into(),
            ));
        }
        let crossings = j
            .crossings
            .iter()
            .zip(&j.signs)
            .map(|(&edges, &s)| {
                Crossing::new(edges, if s >= 0 { 3 } else { 1 })
            })
            .collect();
        Self::from_crossings(crossings)
    }

    /// Compact PD text with explicit signs, suitable for re-parsing.
    pub fn to_pd_text(&self) -> String {
        self.crossings
            .iter()
            .map(|x| {
                let s = if x.sign() > 0 { "+" } else { "-" };
                format!(
                    "X{}({},{},{},{})",
                    s, x.edges[0], x.edges[1], x.edges[2], x.edges[3]
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Diagram;

    /// Left-handed trefoil from the standard public-table PD.
    pub fn trefoil() -> Diagram {
        Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    pub fn positive_curl() -> Diagram {
        Diagram::parse_pd("X(1,1,2,2)").unwrap()
    }

    pub fn negative_curl() -> Diagram {
        Diagram::parse_pd("X(1,2,2,1)").unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parse_trefoil() {
        let d = trefoil();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.edge_labels().len(), 6);
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn parse_one_crossing_curls() {
        let plus = positive_curl();
        assert_eq!(plus.num_crossings(), 1);
        assert_eq!(plus.edge_labels().len(), 2);
        assert_eq!(plus.writhe(), 1);
        let minus = negative_curl();
        assert_eq!(minus.writhe(), -1);
    }

    #[test]
    fn parse_rejects_odd_label_multiplicity() {
        let err = Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1)").unwrap_err();
        match err {
            DiagramError::BadLabelMultiplicity(labels) => {
                assert_eq!(labels, vec![2, 3, 5, 6]);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn parse_rejects_empty_input() {
        assert!(matches!(
            Diagram::parse_pd(""),
            Err(DiagramError::EmptyInput)
        ));
    }

    #[test]
    fn ambiguous_two_edge_component_demands_explicit_sign() {
        // Hopf-link-style tuples where both label successions hold.
        let err = Diagram::parse_pd("X(1,3,2,4) X(2,4,1,3)").unwrap_err();
        assert!(matches!(err, DiagramError::AmbiguousOverDirection(_)));
        // The explicit form parses.
        let d = Diagram::parse_pd("X+(1,3,2,4) X+(2,4,1,3)").unwrap();
        assert_eq!(d.writhe(), 2);
    }

    #[test]
    fn trefoil_crossing_signs_and_corners() {
        let d = trefoil();
        for x in d.crossings() {
            assert_eq!(x.over_in, 1, "trefoil crossings have over-in at slot 1");
            assert_eq!(x.sign(), -1);
        }
        let fs = d.faces().unwrap();
        // over-in at slot 1 puts the distinguished corner at k0 = 0.
        let cf = d.corner_faces(&fs, 0);
        for (j, f) in cf.iter().enumerate() {
            assert_eq!(*f, fs.corner_face(0, j));
        }
    }

    #[test]
    fn mirror_is_involution_and_negates_writhe() {
        let d = trefoil();
        let m = d.mirror();
        assert_eq!(m.writhe(), 3);
        assert_eq!(m.mirror(), d);
        // Face structure is preserved.
        assert_eq!(
            d.faces().unwrap().num_faces(),
            m.faces().unwrap().num_faces()
        );
    }

    #[test]
    fn validate_examples() {
        assert!(trefoil().validate().is_ok());
        let split = Diagram::parse_pd("X(1,1,2,2) X(3,3,4,4)").unwrap();
        assert!(matches!(split.validate(), Err(DiagramError::Disconnected)));
        let empty = Diagram { crossings: vec![] };
        assert!(matches!(empty.validate(), Err(DiagramError::NoCrossings)));
    }

    #[test]
    fn json_round_trip() {
        let d = trefoil();
        let j = d.to_json();
        assert_eq!(Diagram::from_json(&j).unwrap(), d);
        let text = d.to_pd_text();
        assert_eq!(Diagram::parse_pd(&text).unwrap(), d);
    }
}
