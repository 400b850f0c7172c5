//! Sparse multivariate polynomials with integer coefficients over a fixed,
//! ordered variable list. The variable order doubles as the lex monomial
//! order used for division (earlier variable = more significant).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered variable list shared by the polynomials of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        VarSet {
            names: Arc::new(names.into_iter().map(Into::into).collect()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Lex order: s > S for the two-variable ring.
pub fn vars_ss() -> VarSet {
    VarSet::new(["s", "S"])
}

/// The 16 model variables of the state-sum equations.
pub const MODEL_VAR_NAMES: [&str; 16] = [
    "f0", "f1", "x0", "X0", "x1", "X1", "x2", "X2", "x4", "X4", "x5", "X5",
    "x8", "X8", "x10", "X10",
];

pub fn vars_model() -> VarSet {
    VarSet::new(MODEL_VAR_NAMES)
}

#[inline]
fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

#[inline]
fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// Map from exponent vectors to nonzero integer coefficients. `BTreeMap`
/// over `Vec<u16>` sorts exponent vectors lexicographically, so the last
/// entry is the leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u16>, i128>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: i128) -> Self {
        let mut p = Self::zero(vars);
        if c != 0 {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::monomial_at(vars, i, 1, 1)
    }

    /// c · vᵉ for a single variable v.
    pub fn monomial_at(vars: &VarSet, i: usize, e: u16, c: i128) -> Self {
        let mut p = Self::zero(vars);
        if c != 0 {
            let mut exp = vec![0u16; vars.len()];
            exp[i] = e;
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &i128)> {
        self.terms.iter()
    }

    /// Variable indices that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for exp in self.terms.keys() {
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    fn add_term(&mut self, exp: Vec<u16>, c: i128) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let nc = cadd(*o.get(), c);
                if nc == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = nc;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (exp, &c) in &rhs.terms {
            out.add_term(exp.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        for (exp, &c) in &self.terms {
            out.terms.insert(exp.clone(), -c);
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = Self::zero(&self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let exp: Vec<u16> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| {
                        x.checked_add(y).expect("monomial exponent overflow")
                    })
                    .collect();
                out.add_term(exp, cmul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u16) -> MultiPoly {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term in lex order, if any.
    pub fn leading_term(&self) -> Option<(&Vec<u16>, i128)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Remainder of multivariate division by an ordered basis: repeatedly
    /// cancel the leading term against the first basis element whose leading
    /// monomial divides it, otherwise move the leading term to the remainder.
    pub fn reduce(&self, basis: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if basis.is_empty() {
            return Err(PolyError::EmptyBasis);
        }
        for b in basis {
            if b.is_zero() {
                return Err(PolyError::ZeroBasisElement);
            }
        }
        let mut p = self.clone();
        let mut rem = Self::zero(&self.vars);
        'outer: while let Some((lexp, lc)) = p.leading_term() {
            let lexp = lexp.clone();
            for b in basis {
                let (bexp, bc) = b.leading_term().unwrap();
                let divides = lexp.iter().zip(bexp).all(|(&a, &b)| a >= b)
                    && lc % bc == 0;
                if divides {
                    let qexp: Vec<u16> =
                        lexp.iter().zip(bexp).map(|(&a, &b)| a - b).collect();
                    let mut quot = Self::zero(&self.vars);
                    quot.terms.insert(qexp, lc / bc);
                    p = p.sub(&quot.mul(b));
                    continue 'outer;
                }
            }
            rem.add_term(lexp.clone(), lc);
            p.terms.remove(&lexp);
        }
        Ok(rem)
    }

    /// Numeric evaluation, mapping variable i to the given CycloInt value.
    pub fn eval_cyclo(
        &self,
        values: &[crate::cyclotomic::CycloInt],
    ) -> crate::cyclotomic::CycloInt {
        use crate::cyclotomic::CycloInt;
        assert_eq!(values.len(), self.vars.len());
        let mut acc = CycloInt::ZERO;
        for (exp, &c) in &self.terms {
            let mut term = CycloInt::canon(c, 0, 0, 0, 0);
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term * values[i].pow(e as u32);
                }
            }
            acc = acc + term;
        }
        acc
    }
}

// Rendered with the leading term first.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, &c) in self.terms.iter().rev() {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = exp.iter().all(|&e| e == 0);
            if mag != 1 || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, " ")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, " ")?;
                }
                first_var = false;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycloInt;

    #[test]
    fn leading_term_is_lex_greatest() {
        let v = vars_ss();
        // s + S^4: lex with s > S makes s the leading term.
        let p = MultiPoly::var(&v, 0).add(&MultiPoly::monomial_at(&v, 1, 4, 1));
        let (exp, c) = p.leading_term().unwrap();
        assert_eq!((exp.as_slice(), c), ([1u16, 0].as_slice(), 1));
    }

    #[test]
    fn normalization_drops_zero_coefficients() {
        let v = vars_ss();
        let p = MultiPoly::var(&v, 0);
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn eval_cyclo_matches_hand_computation() {
        let v = vars_ss();
        // s^2 S^2 at s=ζ, S=ζ⁴ is ζ^10 = 1.
        let p = MultiPoly::monomial_at(&v, 0, 2, 1)
            .mul(&MultiPoly::monomial_at(&v, 1, 2, 1));
        let val = p.eval_cyclo(&[CycloInt::zeta(1), CycloInt::zeta(4)]);
        assert_eq!(val, CycloInt::ONE);
    }
}
