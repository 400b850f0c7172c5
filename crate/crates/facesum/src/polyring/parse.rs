//! Parser for the equation corpus syntax: `LHS = RHS`, `^` exponents,
//! implicit multiplication by juxtaposition, `+`/`-` between terms.

use super::poly::{MultiPoly, VarSet};
use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i128),
    Caret,
    Plus,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<Token>, PolyError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            toks.push(Token::Ident(s));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            toks.push(Token::Int(s.parse().map_err(|_| {
                PolyError::Parse(format!("integer literal out of range: {s}"))
            })?));
        } else {
            chars.next();
            match c {
                '^' => toks.push(Token::Caret),
                '+' => toks.push(Token::Plus),
                '-' => toks.push(Token::Minus),
                '*' => {} // tolerated; juxtaposition is the canonical form
                _ => {
                    return Err(PolyError::Parse(format!(
                        "unexpected character `{c}`"
                    )))
                }
            }
        }
    }
    Ok(toks)
}

/// Parse a polynomial over the given variable set.
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<MultiPoly, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    let mut result = MultiPoly::zero(vars);
    let mut i = 0;
    loop {
        // Sign prefix of the term.
        let mut sign: i128 = 1;
        while i < toks.len() {
            match toks[i] {
                Token::Plus => i += 1,
                Token::Minus => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        if i >= toks.len() {
            return Err(PolyError::Parse("dangling sign".into()));
        }
        // Product of factors until the next +/- or end.
        let mut term = MultiPoly::constant(vars, sign);
        let mut saw_factor = false;
        while i < toks.len() {
            match &toks[i] {
                Token::Plus | Token::Minus => break,
                Token::Int(c) => {
                    term = term.mul(&MultiPoly::constant(vars, *c));
                    saw_factor = true;
                    i += 1;
                }
                Token::Ident(name) => {
                    let vi = vars.index_of(name).ok_or_else(|| {
                        PolyError::UnknownVariable(name.clone())
                    })?;
                    i += 1;
                    let mut e: u16 = 1;
                    if i < toks.len() && toks[i] == Token::Caret {
                        i += 1;
                        match toks.get(i) {
                            Some(Token::Int(n)) if *n >= 0 && *n <= u16::MAX as i128 => {
                                e = *n as u16;
                                i += 1;
                            }
                            _ => {
                                return Err(PolyError::Parse(
                                    "expected exponent after `^`".into(),
                                ))
                            }
                        }
                    }
                    term = term.mul(&MultiPoly::monomial_at(vars, vi, e, 1));
                    saw_factor = true;
                }
                Token::Caret => {
                    return Err(PolyError::Parse("unexpected `^`".into()))
                }
            }
        }
        if !saw_factor {
            return Err(PolyError::Parse("empty term".into()));
        }
        result = result.add(&term);
        if i >= toks.len() {
            break;
        }
    }
    Ok(result)
}

/// One `LHS = RHS` line of the corpus.
#[derive(Debug, Clone)]
pub struct Equation {
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub source: String,
}

impl Equation {
    pub fn difference(&self) -> MultiPoly {
        self.lhs.sub(&self.rhs)
    }
}

/// Parse a corpus: one equation per line, `#` comments and blank lines skipped.
pub fn parse_equations(
    text: &str,
    vars: &VarSet,
) -> Result<Vec<Equation>, PolyError> {
    let mut eqs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut sides = line.splitn(2, '=');
        let lhs_text = sides.next().unwrap();
        let rhs_text = sides.next().ok_or_else(|| {
            PolyError::Parse(format!("line {}: missing `=`", lineno + 1))
        })?;
        eqs.push(Equation {
            lhs: parse_poly(lhs_text, vars)?,
            rhs: parse_poly(rhs_text, vars)?,
            source: line.to_string(),
        });
    }
    Ok(eqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::{vars_model, vars_ss};

    #[test]
    fn parses_signed_products() {
        let v = vars_ss();
        let p = parse_poly("- s^2 S^4 + 3 s", &v).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "-s^2 S^4 + 3 s");
    }

    #[test]
    fn unknown_variable_is_named() {
        let v = vars_ss();
        match parse_poly("s + t", &v) {
            Err(PolyError::UnknownVariable(name)) => assert_eq!(name, "t"),
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn corpus_has_25_equations() {
        let v = vars_model();
        let eqs =
            parse_equations(crate::polyring::EQUATION_CORPUS, &v).unwrap();
        assert_eq!(eqs.len(), 25);
    }
}
