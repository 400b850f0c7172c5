//! Jones polynomial via the Kauffman bracket.
//!
//! Each crossing is smoothed two ways; loops in a full smoothing are counted
//! with union-find over edge labels. The bracket lives in Z[A, A⁻¹]; the
//! writhe-normalized polynomial is re-expressed in q = A⁻⁴.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::Diagram;

#[derive(Debug, Error)]
pub enum JonesError {
    #[error(
        "normalized bracket has exponent {0} not divisible by 4; \
         the diagram is not a valid oriented link diagram"
    )]
    NonIntegralExponent(i64),
}

/// Sparse Laurent polynomial with integer coefficients in one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    /// exponent -> coefficient, zero coefficients never stored.
    terms: BTreeMap<i64, i64>,
    var: &'static str,
}

impl LaurentPoly {
    pub fn zero(var: &'static str) -> Self {
        LaurentPoly { terms: BTreeMap::new(), var }
    }

    pub fn monomial(var: &'static str, exp: i64, coef: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coef);
        p
    }

    pub fn one(var: &'static str) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn add_term(&mut self, exp: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coef).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.var);
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(
                    e1.checked_add(e2).expect("exponent overflow"),
                    c1.checked_mul(c2).expect("coefficient overflow"),
                );
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Substitute the variable by its inverse (exponent negation).
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
            var: self.var,
        }
    }

    /// JSON-ready form: [[exponent, coefficient], ...] ascending.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.terms.iter().map(|(&e, &c)| [e, c]).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest exponent first.
        for (&e, &c) in self.terms.iter().rev() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match e {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, e),
            };
            write!(f, "{sign}{coef}{var}")?;
            first = false;
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
        }
        self.parent[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// The Kauffman bracket ⟨D⟩ in Z[A, A⁻¹], with ⟨unknot⟩ = 1.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let n = d.num_crossings();
    if n == 0 {
        return LaurentPoly::one("A");
    }
    // Dense edge label -> index map for the union-find.
    let labels = d.edge_labels();
    let index: std::collections::HashMap<u32, usize> =
        labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    let delta = {
        // -A^2 - A^-2
        let mut p = LaurentPoly::zero("A");
        p.add_term(2, -1);
        p.add_term(-2, -1);
        p
    };

    let mut bracket = LaurentPoly::zero("A");
    for mask in 0u64..(1 << n) {
        let mut uf = UnionFind::new(labels.len());
        let mut a_count: i64 = 0;
        for (ci, x) in d.crossings().iter().enumerate() {
            let e = |s: usize| index[&x.edges[s]];
            if mask & (1 << ci) == 0 {
                // A-smoothing: join (slot0,slot1) and (slot2,slot3).
                a_count += 1;
                uf.union(e(0), e(1));
                uf.union(e(2), e(3));
            } else {
                // B-smoothing: join (slot0,slot3) and (slot1,slot2).
                uf.union(e(0), e(3));
                uf.union(e(1), e(2));
            }
        }
        let loops = {
            let mut roots: Vec<usize> =
                (0..labels.len()).map(|i| uf.find(i)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len() as i64
        };
        let b_count = n as i64 - a_count;
        // Contribution A^(a-b) * delta^(loops-1).
        let mut term = LaurentPoly::monomial("A", a_count - b_count, 1);
        for _ in 0..loops - 1 {
            term = term.mul(&delta);
        }
        bracket = bracket.add(&term);
    }
    bracket
}

/// The Jones polynomial V(q) = (-A³)^(-wr) ⟨D⟩ with q = A⁻⁴.
pub fn jones(d: &Diagram) -> Result<LaurentPoly, JonesError> {
    let wr = d.writhe();
    let bracket = kauffman_bracket(d);
    // (-A^3)^(-wr) = (-1)^wr A^(-3 wr).
    let sign = if wr.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized =
        bracket.mul(&LaurentPoly::monomial("A", -3 * wr, sign));
    let mut out = LaurentPoly::zero("q");
    for (e, c) in normalized.terms() {
        if e % 4 != 0 {
            return Err(JonesError::NonIntegralExponent(e));
        }
        out.add_term(-e / 4, c);
    }
    Ok(out)
}

/// True iff the Jones polynomial separates the diagram from its mirror,
/// i.e. V(q) ≠ V(q⁻¹).
pub fn jones_distinguishes_mirror(d: &Diagram) -> Result<bool, JonesError> {
    let v = jones(d)?;
    Ok(v != v.invert_variable())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::Diagram;

    fn poly(var: &'static str, pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(var);
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn bracket_of_single_curls() {
        // Positive curl: <D> = -A^3, negative curl: -A^-3.
        assert_eq!(
            kauffman_bracket(&positive_curl()),
            poly("A", &[(3, -1)])
        );
        assert_eq!(
            kauffman_bracket(&negative_curl()),
            poly("A", &[(-3, -1)])
        );
    }

    #[test]
    fn jones_of_unknot_preparations_is_one() {
        assert_eq!(jones(&positive_curl()).unwrap(), LaurentPoly::one("q"));
        assert_eq!(jones(&negative_curl()).unwrap(), LaurentPoly::one("q"));
    }

    #[test]
    fn jones_of_left_trefoil() {
        // Left-handed trefoil: V = -q^-4 + q^-3 + q^-1.
        let v = jones(&trefoil()).unwrap();
        assert_eq!(v, poly("q", &[(-4, -1), (-3, 1), (-1, 1)]));
        // Its mirror is the right-handed trefoil.
        let vm = jones(&trefoil().mirror()).unwrap();
        assert_eq!(vm, v.invert_variable());
        assert_eq!(vm, poly("q", &[(4, -1), (3, 1), (1, 1)]));
    }

    #[test]
    fn jones_detects_trefoil_chirality() {
        assert!(jones_distinguishes_mirror(&trefoil()).unwrap());
    }

    #[test]
    fn figure_eight_is_palindromic() {
        // Standard figure-eight PD; amphichiral, so V(q) = V(1/q).
        let d = Diagram::parse_pd(
            "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
        )
        .unwrap();
        let v = jones(&d).unwrap();
        assert_eq!(
            v,
            poly("q", &[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );
        assert!(!jones_distinguishes_mirror(&d).unwrap());
    }

    #[test]
    fn jones_is_stable_under_curl_insertion() {
        let d = trefoil();
        let v = jones(&d).unwrap();
        for e in d.edge_labels() {
            let d2 = d
                .insert_curl(e, 1, crate::diagram::CurlSide::Right)
                .unwrap();
            assert_eq!(jones(&d2).unwrap(), v);
        }
    }

    #[test]
    fn display_formatting() {
        let v = poly("q", &[(7, -1), (6, 1), (5, -1), (4, 1), (2, 1)]);
        assert_eq!(v.to_string(), "-q^7+q^6-q^5+q^4+q^2");
        assert_eq!(LaurentPoly::zero("q").to_string(), "0");
        assert_eq!(poly("q", &[(0, -3)]).to_string(), "-3");
    }
}
