//! Recursive-descent parser for rational expressions in declared parameters:
//! integers, names, `+ - * / ^`, parentheses. Used by the TOML/JSON schema.

use super::{Scalar, Var};
use crate::error::{Error, Result};

pub fn parse_scalar(src: &str, allowed: &[Var]) -> Result<Scalar> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        allowed,
        src,
    };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {} in `{}`",
            p.pos, src
        )));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as i64))
                            .ok_or_else(|| Error::Parse(format!("integer overflow in `{src}`")))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Name(name));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` in `{src}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    allowed: &'a [Var],
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| {
                        Error::Parse(format!("division by zero in `{}`", self.src))
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar> {
        let mut negate = false;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Minus => {
                    negate = !negate;
                    self.bump();
                }
                Tok::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let e = match self.bump() {
                Some(Tok::Int(n)) => n,
                _ => {
                    return Err(Error::Parse(format!(
                        "expected integer exponent in `{}`",
                        self.src
                    )))
                }
            };
            base = base
                .pow(e)
                .map_err(|_| Error::Parse(format!("zero to negative power in `{}`", self.src)))?;
        }
        Ok(if negate { -base } else { base })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Scalar::from_int(n)),
            Some(Tok::Name(name)) => {
                match self.allowed.iter().find(|v| v.name() == name) {
                    Some(v) => Ok(Scalar::var(*v)),
                    None => Err(Error::Parse(format!(
                        "unknown name `{name}` in `{}` (not a declared parameter)",
                        self.src
                    ))),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse(format!("missing `)` in `{}`", self.src))),
                }
            }
            other => Err(Error::Parse(format!(
                "unexpected token {other:?} in `{}`",
                self.src
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_catalog_coefficients() {
        let mu = Var::new("mu");
        let kappa = Var::new("kappa");
        let allowed = [mu, kappa];
        let s = parse_scalar("(1-mu^2)/(2*mu)", &allowed).unwrap();
        let m = Scalar::var(mu);
        let expect = (Scalar::one() - m.clone() * m.clone())
            .checked_div(&(Scalar::from_int(2) * m.clone()))
            .unwrap();
        assert_eq!(s, expect);

        let h = parse_scalar("-1/2", &allowed).unwrap();
        assert_eq!(h, Scalar::from_rat(-1, 2));

        let k = parse_scalar("kappa^2*mu - 3", &allowed).unwrap();
        let kk = Scalar::var(kappa);
        assert_eq!(k, kk.clone() * kk * m - Scalar::from_int(3));
    }

    #[test]
    fn rejects_undeclared_names_and_garbage() {
        let allowed = [Var::new("mu")];
        assert!(parse_scalar("nu + 1", &allowed).is_err());
        assert!(parse_scalar("1 +", &allowed).is_err());
        assert!(parse_scalar("(1", &allowed).is_err());
        assert!(parse_scalar("1/0", &allowed).is_err());
        assert!(parse_scalar("2 $ 3", &allowed).is_err());
    }
}
