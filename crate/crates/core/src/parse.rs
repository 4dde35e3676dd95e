//! Polynomial text form: a recursive-descent parser and the matching
//! canonical printer.
//!
//! Grammar: integer literals, declared identifiers, `+ - * ^`, parentheses;
//! `^` takes a non-negative integer literal. Juxtaposition is *not*
//! multiplication — `2x` is a syntax error. As a small extension, `a/b`
//! with integer literals denotes a coefficient fraction (exact division
//! over the rationals, modular division otherwise), which is what the
//! printer emits for non-integer rational coefficients; this keeps
//! print-then-parse the identity in both arithmetic modes.

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LPar,
    RPar,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<(Tok, usize), Error> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LPar,
            b')' => Tok::RPar,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((Tok::Int(text.to_string()), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((Tok::Ident(text.to_string()), start));
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a, F: Field> {
    field: &'a F,
    vars: Vec<&'a str>,
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(field: &'a F, src: &'a str, vars: Vec<&'a str>) -> Result<Self, Error> {
        let mut lexer = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let (tok, tok_pos) = lexer.next_token()?;
        Ok(Parser {
            field,
            vars,
            lexer,
            tok,
            tok_pos,
        })
    }

    fn advance(&mut self) -> Result<(), Error> {
        let (tok, pos) = self.lexer.next_token()?;
        self.tok = tok;
        self.tok_pos = pos;
        Ok(())
    }

    fn fail(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.tok_pos,
            msg: msg.into(),
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial<F>, Error> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = acc.add(&self.term()?, self.field);
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = acc.sub(&self.term()?, self.field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, Error> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            acc = acc.mul(&self.factor()?, self.field);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, Error> {
        let mut negate = false;
        loop {
            match self.tok {
                Tok::Plus => self.advance()?,
                Tok::Minus => {
                    negate = !negate;
                    self.advance()?;
                }
                _ => break,
            }
        }
        let mut p = self.primary()?;
        while self.tok == Tok::Caret {
            self.advance()?;
            let e = match &self.tok {
                Tok::Int(text) => text.parse::<u32>().map_err(|_| {
                    self.fail("exponent does not fit in 32 bits")
                })?,
                _ => return Err(self.fail("exponent must be a non-negative integer literal")),
            };
            self.advance()?;
            p = p.pow(e, self.field);
        }
        Ok(if negate { p.neg(self.field) } else { p })
    }

    fn primary(&mut self) -> Result<Polynomial<F>, Error> {
        match self.tok.clone() {
            Tok::Int(text) => {
                self.advance()?;
                let mut c = self.field.from_decimal(&text);
                if self.tok == Tok::Slash {
                    self.advance()?;
                    let den_pos = self.tok_pos;
                    let Tok::Int(den) = self.tok.clone() else {
                        return Err(self.fail("expected an integer denominator"));
                    };
                    self.advance()?;
                    let d = self.field.from_decimal(&den);
                    c = self.field.div(&c, &d).ok_or(Error::Syntax {
                        pos: den_pos,
                        msg: "coefficient denominator is zero in this field".to_string(),
                    })?;
                }
                Ok(Polynomial::constant(self.field, c, self.nvars()))
            }
            Tok::Ident(name) => {
                let pos = self.tok_pos;
                self.advance()?;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::variable(self.field, self.nvars(), i)),
                    None => Err(Error::UnknownVariable { name, pos }),
                }
            }
            Tok::LPar => {
                self.advance()?;
                let p = self.expr()?;
                if self.tok != Tok::RPar {
                    return Err(self.fail("expected `)`"));
                }
                self.advance()?;
                Ok(p)
            }
            Tok::End => Err(self.fail("unexpected end of input")),
            _ => Err(self.fail("expected a literal, a variable, or `(`")),
        }
    }
}

/// Parse `src` over the declared variables.
pub fn parse_polynomial<F: Field, S: AsRef<str>>(
    f: &F,
    src: &str,
    vars: &[S],
) -> Result<Polynomial<F>, Error> {
    let names: Vec<&str> = vars.iter().map(|v| v.as_ref()).collect();
    let mut p = Parser::new(f, src, names)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.fail(
            "expected `+`, `-`, `*`, `^`, or end of input (juxtaposition is not multiplication)",
        ));
    }
    Ok(poly)
}

/// Canonical text form: terms in the storage order, coefficients rendered
/// by the field. Re-parsing the output reproduces the polynomial exactly.
pub fn print_polynomial<F: Field, S: AsRef<str>>(
    f: &F,
    p: &Polynomial<F>,
    vars: &[S],
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let rendered = f.format(c);
        let (neg, mag) = match rendered.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, rendered),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = monomial_text(m, vars);
        match (mono.is_empty(), mag.as_str()) {
            (true, _) => out.push_str(&mag),
            (false, "1") => out.push_str(&mono),
            (false, _) => {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

fn monomial_text<S: AsRef<str>>(m: &Monomial, vars: &[S]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].as_ref().to_string()),
            _ => parts.push(format!("{}^{}", vars[i].as_ref(), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::poly::Polynomial;

    const XY: [&str; 2] = ["x", "y"];

    fn fp() -> Fp {
        Fp::default_prime()
    }

    #[test]
    fn expansion_example_reduces_to_y_squared() {
        let f = fp();
        let got = parse_polynomial(&f, "(x+y)^2 - x^2 - 2*x*y", &XY).unwrap();
        let y = Polynomial::variable(&f, 2, 1);
        assert_eq!(got, y.pow(2, &f));
    }

    #[test]
    fn print_then_parse_is_identity() {
        let f = fp();
        for src in [
            "y^2 - x^3",
            "x*y",
            "x^2 + y^2 - 1",
            "-x + 5",
            "0",
            "3",
            "-7*x^2*y + y - 2",
        ] {
            let p = parse_polynomial(&f, src, &XY).unwrap();
            let text = print_polynomial(&f, &p, &XY);
            let q = parse_polynomial(&f, &text, &XY).unwrap();
            assert_eq!(p, q, "through {text}");
        }
    }

    #[test]
    fn rational_fractions_round_trip() {
        let q = Rationals;
        let p = parse_polynomial(&q, "1/2*x^2 - 3/4", &XY).unwrap();
        let text = print_polynomial(&q, &p, &XY);
        assert_eq!(text, "1/2*x^2 - 3/4");
        assert_eq!(parse_polynomial(&q, &text, &XY).unwrap(), p);
    }

    #[test]
    fn juxtaposition_is_rejected_with_position() {
        let f = fp();
        let err = parse_polynomial(&f, "2x", &XY).unwrap_err();
        match err {
            Error::Syntax { pos, .. } => assert_eq!(pos, 1),
            other => panic!("wrong error {other:?}"),
        }
        assert!(parse_polynomial(&f, "x y", &XY).is_err());
    }

    #[test]
    fn unknown_variable_is_reported_with_name() {
        let f = fp();
        let err = parse_polynomial(&f, "x + w^2", &XY).unwrap_err();
        match err {
            Error::UnknownVariable { name, pos } => {
                assert_eq!(name, "w");
                assert_eq!(pos, 4);
            }
            other => panic!("wrong error {other:?}"),
        }
    }

    #[test]
    fn exponent_must_be_a_literal() {
        let f = fp();
        assert!(parse_polynomial(&f, "x^y", &XY).is_err());
        assert!(parse_polynomial(&f, "x^(2)", &XY).is_err());
        assert!(parse_polynomial(&f, "x^-1", &XY).is_err());
        // zero exponents are legal
        let one = parse_polynomial(&f, "x^0", &XY).unwrap();
        assert!(one.is_unit_constant());
    }

    #[test]
    fn unbalanced_parens_and_garbage() {
        let f = fp();
        assert!(parse_polynomial(&f, "(x + y", &XY).is_err());
        assert!(parse_polynomial(&f, "x + $", &XY).is_err());
        assert!(parse_polynomial(&f, "", &XY).is_err());
        assert!(parse_polynomial(&f, "x / 2", &XY).is_err());
    }

    #[test]
    fn unary_minus_binds_outside_powers() {
        let f = fp();
        let p = parse_polynomial(&f, "-x^2", &XY).unwrap();
        let x = Polynomial::variable(&f, 2, 0);
        assert_eq!(p, x.pow(2, &f).neg(&f));
    }

    #[test]
    fn big_literals_fold_into_the_field() {
        let f = fp();
        let p = parse_polynomial(&f, "123456789012345678901234567890", &XY).unwrap();
        assert!(p.is_unit_constant() || p.nterms() <= 1);
    }
}
