//! Reader for polynomial expressions: integer literals, parameter names,
//! `+ - * / ^` and parentheses. Division is only allowed by a nonzero
//! constant, which makes every canonical string (`-1/4*l5^2 - 1/4*l6^2`)
//! readable again.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Scalar, Vars};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    /// 1-based character column within the parsed text.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for PolyParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, PolyParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Num(s.parse().expect("digits")), col));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if "+-*/^()".contains(c) {
                toks.push((Tok::Sym(c), col));
                i += 1;
            } else {
                return Err(PolyParseError {
                    column: col,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError {
            column: self.column(),
            message: message.into(),
        })
    }
}

struct Parser<'a> {
    lex: Lexer,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.term()?;
        loop {
            match self.lex.peek() {
                Tok::Sym('+') => {
                    self.lex.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.lex.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.lex.peek() {
                Tok::Sym('*') => {
                    self.lex.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => {
                    self.lex.bump();
                    let col = self.lex.column();
                    let d = self.unary()?;
                    let c = d.constant_value().ok_or_else(|| PolyParseError {
                        column: col,
                        message: "division only by a constant".into(),
                    })?;
                    if c.is_zero() {
                        return Err(PolyParseError {
                            column: col,
                            message: "division by zero".into(),
                        });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, PolyParseError> {
        match self.lex.peek() {
            Tok::Sym('-') => {
                self.lex.bump();
                Ok(-self.unary()?)
            }
            Tok::Sym('+') => {
                self.lex.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, PolyParseError> {
        let base = self.atom()?;
        if self.lex.peek() == &Tok::Sym('^') {
            self.lex.bump();
            match self.lex.bump() {
                Tok::Num(n) => {
                    let e: u32 = n.try_into().map_err(|_| PolyParseError {
                        column: self.lex.column(),
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => self.lex.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyParseError> {
        let col = self.lex.column();
        match self.lex.bump() {
            Tok::Num(n) => Ok(Poly::constant(self.vars, Scalar::from_integer(n))),
            Tok::Ident(name) => Poly::var_named(self.vars, &name).map_err(|_| PolyParseError {
                column: col,
                message: format!("unknown name `{name}`"),
            }),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if self.lex.bump() != Tok::Sym(')') {
                    return Err(PolyParseError {
                        column: col,
                        message: "unclosed parenthesis".into(),
                    });
                }
                Ok(inner)
            }
            Tok::End => Err(PolyParseError {
                column: col,
                message: "unexpected end of expression".into(),
            }),
            Tok::Sym(c) => Err(PolyParseError {
                column: col,
                message: format!("unexpected `{c}`"),
            }),
        }
    }
}

/// Parses `text` as a polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &Vars) -> Result<Poly, PolyParseError> {
    let mut p = Parser {
        lex: Lexer::new(text)?,
        vars,
    };
    let out = p.expr()?;
    if p.lex.peek() != &Tok::End {
        return p.lex.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{int, ratio};
    use super::*;

    fn vars() -> Vars {
        Vars::numbered("l", 6)
    }

    #[test]
    fn reads_canonical_strings() {
        let p = parse_poly("-1/4*l5^2 - 1/4*l6^2", &vars()).unwrap();
        let l5 = Poly::var(&vars(), 4);
        let l6 = Poly::var(&vars(), 5);
        assert_eq!(p, (l5.pow(2) + l6.pow(2)).scale(&ratio(-1, 4)));
        assert_eq!(p.to_string(), "-1/4*l5^2 - 1/4*l6^2");
    }

    #[test]
    fn precedence_and_parentheses() {
        let v = vars();
        let p = parse_poly("2*(l1 + l2)^2 - -l3", &v).unwrap();
        let q = parse_poly("2*l1^2 + 4*l1*l2 + 2*l2^2 + l3", &v).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_poly("-l1^2", &v).unwrap(), -Poly::var(&v, 0).pow(2));
        assert_eq!(parse_poly("7", &v).unwrap(), Poly::constant(&v, int(7)));
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_poly("l1 + x9", &vars()).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_poly("l1 / l2", &vars()).unwrap_err();
        assert_eq!(e.column, 6);
        assert!(parse_poly("(l1 + l2", &vars()).is_err());
        assert!(parse_poly("l1 $", &vars()).is_err());
        assert!(parse_poly("1/0", &vars()).is_err());
        assert!(parse_poly("", &vars()).is_err());
    }
}
