//! Multivariate polynomial arithmetic over {s, S} and the 16 model
//! variables, division modulo the two-element Groebner basis, and the
//! symbolic/numeric verification of the move-invariance equations.

mod parse;
mod poly;

pub use parse::{parse_equations, parse_poly, Equation};
pub use poly::{vars_model, vars_ss, MultiPoly, VarSet, MODEL_VAR_NAMES};

use crate::cyclotomic::CycloInt;
use thiserror::Error;

/// The 25 move-invariance equations, shipped as a text corpus.
pub const EQUATION_CORPUS: &str = include_str!("../../data/equations.txt");

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("reduction requires a non-empty basis")]
    EmptyBasis,
    #[error("basis polynomials must be nonzero")]
    ZeroBasisElement,
}

/// The lex (s > S) Groebner basis of the ideal ⟨p1, p2, p3⟩.
pub fn groebner_basis() -> Vec<MultiPoly> {
    let v = vars_ss();
    vec![
        parse_poly("S^4 + S^3 + S^2 + S + 1", &v).unwrap(),
        parse_poly(
            "s^3 + s^2 S + s^2 + s S^2 + s S + s + S^3 + S^2 + S + 1",
            &v,
        )
        .unwrap(),
    ]
}

/// Generators p1, p2, p3 of the ideal the basis presents.
pub fn ideal_generators() -> Vec<MultiPoly> {
    let v = vars_ss();
    vec![
        parse_poly("1 + s + s^2 + s^3 + s^4", &v).unwrap(),
        parse_poly("1 + S + S^2 + S^3 + S^4", &v).unwrap(),
        parse_poly("s^4 + s^3 S + s^2 S^2 + s S^3 + S^4", &v).unwrap(),
    ]
}

/// Values of s and S at the numeric specialization s = ζ, S = ζ⁴.
pub fn zeta_specialization() -> [CycloInt; 2] {
    [CycloInt::zeta(1), CycloInt::zeta(4)]
}

/// Map from each of the 16 model variables to a polynomial in {s, S}.
#[derive(Clone, Debug)]
pub struct Assignment {
    values: Vec<MultiPoly>,
    model: VarSet,
    target: VarSet,
}

impl Assignment {
    pub fn new(values: Vec<MultiPoly>) -> Self {
        assert_eq!(values.len(), MODEL_VAR_NAMES.len());
        Assignment { values, model: vars_model(), target: vars_ss() }
    }

    /// The assignment that satisfies all 25 equations in R/I.
    pub fn paper() -> Self {
        let v = vars_ss();
        let table: [(&str, &str); 16] = [
            ("f0", "s^2 S^2"),
            ("f1", "s^4 + S^4"),
            ("x0", "s + S"),
            ("X0", "s + S"),
            ("x1", "S"),
            ("X1", "s"),
            ("x2", "s"),
            ("X2", "S"),
            ("x4", "S"),
            ("X4", "s"),
            ("x5", "- s^2 S^4"),
            ("X5", "- s^4 S^2"),
            ("x8", "s"),
            ("X8", "S"),
            ("x10", "- s^4 S^2"),
            ("X10", "- s^2 S^4"),
        ];
        let values = MODEL_VAR_NAMES
            .iter()
            .map(|name| {
                let (_, text) =
                    table.iter().find(|(n, _)| n == name).unwrap();
                parse_poly(text, &v).unwrap()
            })
            .collect();
        Self::new(values)
    }

    pub fn get(&self, name: &str) -> Option<&MultiPoly> {
        self.model.index_of(name).map(|i| &self.values[i])
    }

    /// Replace one model variable (used by the fuzzer's mutation hook).
    pub fn with_replaced(&self, name: &str, value: MultiPoly) -> Self {
        let i = self
            .model
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown model variable `{name}`"));
        let mut values = self.values.clone();
        values[i] = value;
        Assignment { values, model: self.model.clone(), target: self.target.clone() }
    }

    /// Numeric value of each model variable at s = ζ, S = ζ⁴,
    /// in corpus variable order.
    pub fn eval_zeta(&self) -> Vec<CycloInt> {
        let spec = zeta_specialization();
        self.values.iter().map(|p| p.eval_cyclo(&spec)).collect()
    }
}

/// Substitute an assignment into a polynomial over the 16 model variables,
/// expanding to a polynomial in {s, S}.
pub fn substitute(
    eq: &MultiPoly,
    a: &Assignment,
) -> Result<MultiPoly, PolyError> {
    for vi in eq.support() {
        let name = eq.vars().name(vi);
        if a.model.index_of(name).is_none() {
            return Err(PolyError::UnknownVariable(name.to_string()));
        }
    }
    let mut out = MultiPoly::zero(&a.target);
    for (exp, &c) in eq.terms() {
        let mut term = MultiPoly::constant(&a.target, c);
        for (vi, &e) in exp.iter().enumerate() {
            if e > 0 {
                let name = eq.vars().name(vi);
                let idx = a.model.index_of(name).unwrap();
                term = term.mul(&a.values[idx].pow(e));
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The four chain identities behind the curl factors, as corpus-syntax text.
const LEMMA_CHAINS: [(&str, &str); 4] = [
    ("f0 X0 + f1 X4", "f0 X10"),
    ("f0 X10", "f0 X1 + f1 X5"),
    ("f0 x0 + f1 x4", "f0 x10"),
    ("f0 x10", "f0 x1 + f1 x5"),
];

/// Verify the assignment: each of the 25 equations reduces to 0 modulo the
/// Groebner basis and holds numerically at s = ζ, S = ζ⁴; the curl-factor
/// chain identities reduce to 0; and λ₊·λ₋ = 1 numerically.
pub fn verify_invariance(a: &Assignment) -> VerificationReport {
    let model = vars_model();
    let basis = groebner_basis();
    let spec = zeta_specialization();
    let mut checks = Vec::new();

    let eqs = parse_equations(EQUATION_CORPUS, &model)
        .expect("bundled equation corpus must parse");
    for (i, eq) in eqs.iter().enumerate() {
        let diff = eq.difference();
        let (pass, detail) = match substitute(&diff, a) {
            Ok(subst) => {
                let reduced = subst.reduce(&basis).expect("basis is non-empty");
                let numeric = subst.eval_cyclo(&spec);
                let symbolic_ok = reduced.is_zero();
                let numeric_ok = numeric.is_zero();
                (
                    symbolic_ok && numeric_ok,
                    if symbolic_ok && numeric_ok {
                        "reduces to 0 mod B; 0 at s=ζ,S=ζ⁴".to_string()
                    } else {
                        format!(
                            "remainder mod B: {reduced}; value at ζ: {numeric}"
                        )
                    },
                )
            }
            Err(e) => (false, format!("substitution failed: {e}")),
        };
        checks.push(Check {
            name: format!("equation {:02}: {}", i + 1, eq.source),
            pass,
            detail,
        });
    }

    for (lhs, rhs) in LEMMA_CHAINS {
        let diff = parse_poly(lhs, &model)
            .unwrap()
            .sub(&parse_poly(rhs, &model).unwrap());
        let (pass, detail) = match substitute(&diff, a) {
            Ok(subst) => {
                let reduced = subst.reduce(&basis).expect("basis is non-empty");
                (
                    reduced.is_zero(),
                    if reduced.is_zero() {
                        "reduces to 0 mod B".to_string()
                    } else {
                        format!("remainder mod B: {reduced}")
                    },
                )
            }
            Err(e) => (false, format!("substitution failed: {e}")),
        };
        checks.push(Check {
            name: format!("curl chain: {lhs} = {rhs}"),
            pass,
            detail,
        });
    }

    // λ₊ = f0 X0 + f1 X4 and λ₋ = f0 x0 + f1 x4 must be inverse units at ζ.
    let lambda_plus = substitute(
        &parse_poly("f0 X0 + f1 X4", &model).unwrap(),
        a,
    )
    .map(|p| p.eval_cyclo(&spec));
    let lambda_minus = substitute(
        &parse_poly("f0 x0 + f1 x4", &model).unwrap(),
        a,
    )
    .map(|p| p.eval_cyclo(&spec));
    let (pass, detail) = match (lambda_plus, lambda_minus) {
        (Ok(lp), Ok(lm)) => {
            let prod = lp * lm;
            (
                prod == CycloInt::ONE,
                format!("λ₊ = {lp}, λ₋ = {lm}, λ₊·λ₋ = {prod}"),
            )
        }
        _ => (false, "substitution failed".to_string()),
    };
    checks.push(Check { name: "curl factors: λ₊·λ₋ = 1".to_string(), pass, detail });

    VerificationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_elements_reduce_to_zero() {
        let basis = groebner_basis();
        for b in &basis {
            assert!(b.reduce(&basis).unwrap().is_zero());
        }
    }

    #[test]
    fn reduce_examples() {
        let v = vars_ss();
        let basis = groebner_basis();
        let p1 = parse_poly("1 + s + s^2 + s^3 + s^4", &v).unwrap();
        assert!(p1.reduce(&basis).unwrap().is_zero());
        let s = parse_poly("s", &v).unwrap();
        assert_eq!(s.reduce(&basis).unwrap(), s);
    }

    #[test]
    fn ideal_generators_reduce_to_zero() {
        let basis = groebner_basis();
        for (i, p) in ideal_generators().iter().enumerate() {
            assert!(
                p.reduce(&basis).unwrap().is_zero(),
                "generator p{} did not reduce to 0",
                i + 1
            );
        }
    }

    #[test]
    fn ideal_generators_vanish_at_zeta() {
        let spec = zeta_specialization();
        for p in ideal_generators() {
            assert!(p.eval_cyclo(&spec).is_zero());
        }
    }

    #[test]
    fn reduce_rejects_empty_basis() {
        let v = vars_ss();
        let p = parse_poly("s", &v).unwrap();
        assert!(matches!(p.reduce(&[]), Err(PolyError::EmptyBasis)));
    }

    #[test]
    fn substitute_examples() {
        let model = vars_model();
        let a = Assignment::paper();
        // f0^3 x1 X1 - f0 expands to s^7 S^7 - s^2 S^2.
        let eq = parse_poly("f0^3 x1 X1 - f0", &model).unwrap();
        let expanded = substitute(&eq, &a).unwrap();
        let v = vars_ss();
        assert_eq!(expanded, parse_poly("s^7 S^7 - s^2 S^2", &v).unwrap());
        assert!(expanded.reduce(&groebner_basis()).unwrap().is_zero());
        // f0 alone.
        let f0 = parse_poly("f0", &model).unwrap();
        assert_eq!(
            substitute(&f0, &a).unwrap(),
            parse_poly("s^2 S^2", &v).unwrap()
        );
        // 0 stays 0.
        let zero = MultiPoly::zero(&model);
        assert!(substitute(&zero, &a).unwrap().is_zero());
    }

    #[test]
    fn substitute_names_unknown_variable() {
        let extended = VarSet::new(["f0", "y9"]);
        let eq = parse_poly("f0 y9", &extended).unwrap();
        match substitute(&eq, &Assignment::paper()) {
            Err(PolyError::UnknownVariable(name)) => assert_eq!(name, "y9"),
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn paper_assignment_passes_all_checks() {
        let report = verify_invariance(&Assignment::paper());
        assert_eq!(report.checks.len(), 30);
        for c in &report.checks {
            assert!(c.pass, "FAILED: {} ({})", c.name, c.detail);
        }
    }

    #[test]
    fn corrupted_assignment_fails_named_equation() {
        let v = vars_ss();
        let bad = Assignment::paper()
            .with_replaced("X1", parse_poly("S", &v).unwrap());
        let report = verify_invariance(&bad);
        assert!(!report.all_pass());
        let eq3 = report
            .checks
            .iter()
            .find(|c| c.name.contains("f0^3 x1 X1 = f0"))
            .unwrap();
        assert!(!eq3.pass);
    }

    #[test]
    fn curl_factors_at_zeta() {
        // λ₊ = −ζ³, λ₋ = −ζ² under the paper assignment.
        let model = vars_model();
        let a = Assignment::paper();
        let spec = zeta_specialization();
        let lp = substitute(&parse_poly("f0 X0 + f1 X4", &model).unwrap(), &a)
            .unwrap()
            .eval_cyclo(&spec);
        let lm = substitute(&parse_poly("f0 x0 + f1 x4", &model).unwrap(), &a)
            .unwrap()
            .eval_cyclo(&spec);
        assert_eq!(lp, -CycloInt::zeta(3));
        assert_eq!(lm, -CycloInt::zeta(2));
        assert_eq!(lp * lm, CycloInt::ONE);
    }

    #[test]
    fn reduction_is_canonical_under_basis_multiples() {
        // reduce(p) == reduce(p + g·b) for basis elements b.
        let v = vars_ss();
        let basis = groebner_basis();
        let p = parse_poly("s^6 + 3 s^2 S^5 - S^9 + 7", &v).unwrap();
        let g = parse_poly("s^2 - S + 2", &v).unwrap();
        let r0 = p.reduce(&basis).unwrap();
        for b in &basis {
            let r1 = p.add(&g.mul(b)).reduce(&basis).unwrap();
            assert_eq!(r0, r1);
        }
    }

    #[test]
    fn reduced_value_matches_direct_evaluation_at_zeta() {
        let v = vars_ss();
        let basis = groebner_basis();
        let spec = zeta_specialization();
        let p = parse_poly("s^9 S^3 - 4 s + S^7 + 11", &v).unwrap();
        let direct = p.eval_cyclo(&spec);
        let reduced = p.reduce(&basis).unwrap().eval_cyclo(&spec);
        assert_eq!(direct, reduced);
    }
}
