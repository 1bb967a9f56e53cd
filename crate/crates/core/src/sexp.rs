//! Minimal S-expression reader and canonical single-line printer used by
//! the derivation and term file formats.

use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{parse_formula, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sexp {
    Atom(String),
    Str(String),
    List(Vec<Sexp>),
}

impl Sexp {
    pub fn atom(s: impl Into<String>) -> Sexp {
        Sexp::Atom(s.into())
    }

    pub fn list(items: Vec<Sexp>) -> Sexp {
        Sexp::List(items)
    }

    /// Atoms and `I` print bare; compound formulae are quoted.
    pub fn formula(f: &Formula) -> Sexp {
        match f {
            Formula::Atom(_) | Formula::Unit => Sexp::Atom(f.to_string()),
            _ => Sexp::Str(f.to_string()),
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn to_formula(&self) -> Result<Formula> {
        match self {
            Sexp::Atom(s) | Sexp::Str(s) => parse_formula(s),
            Sexp::List(_) => Err(Error::syntax(0, "expected a formula, found a list")),
        }
    }

    pub fn to_usize(&self) -> Result<usize> {
        self.as_atom()
            .and_then(|a| a.parse().ok())
            .ok_or_else(|| Error::syntax(0, format!("expected a natural number, found {self}")))
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(a) => f.write_str(a),
            Sexp::Str(s) => {
                f.write_str("\"")?;
                for c in s.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")
            }
            Sexp::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn is_atom_char(c: char) -> bool {
    !c.is_whitespace() && c != '(' && c != ')' && c != '"' && c != ';'
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        loop {
            let rest = &self.text[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with(';') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                break;
            }
        }
    }

    fn next_char(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn read(&mut self) -> Result<Sexp> {
        self.skip_ws();
        let start = self.pos;
        match self.next_char() {
            None => Err(Error::syntax(start, "unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.next_char() {
                        Some(')') => {
                            self.pos += 1;
                            return Ok(Sexp::List(items));
                        }
                        None => return Err(Error::syntax(start, "unclosed `(`")),
                        _ => items.push(self.read()?),
                    }
                }
            }
            Some(')') => Err(Error::syntax(start, "unexpected `)`")),
            Some('"') => {
                self.pos += 1;
                let mut out = String::new();
                let mut escaped = false;
                for c in self.text[self.pos..].chars() {
                    self.pos += c.len_utf8();
                    if escaped {
                        out.push(c);
                        escaped = false;
                    } else if c == '\\' {
                        escaped = true;
                    } else if c == '"' {
                        return Ok(Sexp::Str(out));
                    } else {
                        out.push(c);
                    }
                }
                Err(Error::syntax(start, "unterminated string"))
            }
            Some(_) => {
                let len = self.text[self.pos..]
                    .find(|c: char| !is_atom_char(c))
                    .unwrap_or(self.text.len() - self.pos);
                self.pos += len;
                Ok(Sexp::Atom(self.text[start..self.pos].to_string()))
            }
        }
    }
}

/// Reads exactly one S-expression, allowing surrounding whitespace and `;`
/// line comments.
pub fn parse_sexp(text: &str) -> Result<Sexp> {
    let mut r = Reader { text, pos: 0 };
    let s = r.read()?;
    r.skip_ws();
    if r.pos != text.len() {
        return Err(Error::syntax(r.pos, "trailing input after S-expression"));
    }
    Ok(s)
}
