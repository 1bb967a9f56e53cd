//! Formulae, stoups and sequents, together with their concrete syntax.
//!
//! The grammar is ASCII only:
//!
//! ```text
//! formula ::= lolli
//! lolli   ::= tensor ("-o" lolli)?
//! tensor  ::= factor ("*" factor)*
//! factor  ::= "I" | ATOM | "(" formula ")"
//! sequent ::= stoup "|" ctx "|-" formula
//! stoup   ::= "-" | formula
//! ctx     ::= ε | formula ("," formula)*
//! ```
//!
//! `*` is left associative and binds tighter than `-o`, which is right
//! associative.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A formula over an open set of atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Unit,
    Tensor(Arc<Formula>, Arc<Formula>),
    Lolli(Arc<Formula>, Arc<Formula>),
}

/// The optional distinguished antecedent formula. `None` is the empty stoup.
pub type Stoup = Option<Formula>;

/// Ordered antecedent list. No exchange is ever performed on it.
pub type Context = Vec<Formula>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Formula {
    /// Builds an atom, panicking on a name outside `[A-Za-z][A-Za-z0-9_']*`
    /// or on the reserved name `I`. Use [`parse_formula`] for untrusted input.
    pub fn atom(name: &str) -> Formula {
        assert!(is_atom_name(name), "invalid atom name {name:?}");
        Formula::Atom(Arc::from(name))
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Arc::new(a), Arc::new(b))
    }

    pub fn lolli(a: Formula, b: Formula) -> Formula {
        Formula::Lolli(Arc::new(a), Arc::new(b))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn as_tensor(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_lolli(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Lolli(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Number of `I`, `*` and `-o` occurrences.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Unit => 1,
            Formula::Tensor(a, b) | Formula::Lolli(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }

    pub fn atom_occurrences(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Unit => 0,
            Formula::Tensor(a, b) | Formula::Lolli(a, b) => a.atom_occurrences() + b.atom_occurrences(),
        }
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            Formula::Lolli(..) => Polarity::Negative,
            _ => Polarity::Positive,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.polarity() == Polarity::Positive
    }
}

pub fn polarity(f: &Formula) -> Polarity {
    f.polarity()
}

/// A stoup is negative when it is empty, atomic, or an implication.
pub fn is_negative_stoup(s: &Stoup) -> bool {
    match s {
        None => true,
        Some(Formula::Atom(_)) | Some(Formula::Lolli(..)) => true,
        Some(Formula::Unit) | Some(Formula::Tensor(..)) => false,
    }
}

/// `((…(⟦S⟧ ⊗ A1) ⊗ …) ⊗ An)` with the empty stoup read as `I`.
pub fn encode_antecedent(stoup: &Stoup, ctx: &[Formula]) -> Formula {
    let init = stoup.clone().unwrap_or(Formula::Unit);
    ctx.iter().fold(init, |acc, a| Formula::tensor(acc, a.clone()))
}

/// `A1 -o (A2 -o (… -o (An -o C)))`.
pub fn encode_succedent(ctx: &[Formula], succedent: &Formula) -> Formula {
    ctx.iter()
        .rev()
        .fold(succedent.clone(), |acc, a| Formula::lolli(a.clone(), acc))
}

fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    name != "I" && chars.all(is_ident_char)
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub stoup: Stoup,
    pub context: Context,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(stoup: Stoup, context: Context, succedent: Formula) -> Self {
        Sequent { stoup, context, succedent }
    }

    /// Connectives over stoup, context and succedent.
    pub fn connectives(&self) -> usize {
        self.stoup.as_ref().map_or(0, Formula::connectives)
            + self.context.iter().map(Formula::connectives).sum::<usize>()
            + self.succedent.connectives()
    }

    /// `2 * connectives + [stoup empty]`; strictly decreases from conclusion
    /// to premise along every cut-free rule.
    pub fn measure(&self) -> usize {
        2 * self.connectives() + usize::from(self.stoup.is_none())
    }
}

// ---------------------------------------------------------------------------
// Printing

impl Formula {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // prec 0: anything; 1: operand of -o on the left; 2: right operand of *
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Unit => f.write_str("I"),
            Formula::Tensor(a, b) => {
                let parens = prec >= 2;
                if parens {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 1)?;
                f.write_str(" * ")?;
                b.fmt_prec(f, 2)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Formula::Lolli(a, b) => {
                let parens = prec >= 1;
                if parens {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 1)?;
                f.write_str(" -o ")?;
                b.fmt_prec(f, 0)?;
                if parens {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

pub(crate) fn fmt_stoup(s: &Stoup) -> String {
    s.as_ref().map_or_else(|| "-".to_string(), Formula::to_string)
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", fmt_stoup(&self.stoup))?;
        for (i, a) in self.context.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{a}")?;
        }
        write!(f, " |- {}", self.succedent)
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    LParen,
    RParen,
    Star,
    Lolli,
    Dash,
    Bar,
    Turnstile,
    Comma,
    Unit,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Token::LParen,
            ')' => Token::RParen,
            '*' => Token::Star,
            ',' => Token::Comma,
            '-' if bytes.get(i + 1) == Some(&b'o') => {
                i += 1;
                Token::Lolli
            }
            '-' => Token::Dash,
            '|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 1;
                Token::Turnstile
            }
            '|' => Token::Bar,
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len() && is_ident_char(bytes[i + 1] as char) {
                    i += 1;
                }
                let name = &text[start..=i];
                if name == "I" {
                    Token::Unit
                } else {
                    Token::Atom(name.to_string())
                }
            }
            _ => return Err(Error::syntax(start, format!("unexpected character {c:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { tokens: tokenize(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Token, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.tensor()?;
        if self.eat(&Token::Lolli) {
            let rhs = self.formula()?;
            Ok(Formula::lolli(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn tensor(&mut self) -> Result<Formula> {
        let mut acc = self.factor()?;
        while self.eat(&Token::Star) {
            let rhs = self.factor()?;
            acc = Formula::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Formula> {
        let at = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Unit) => {
                self.pos += 1;
                Ok(Formula::Unit)
            }
            Some(Token::Atom(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(Arc::from(name.as_str())))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(Error::syntax(at, "expected a formula")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(Error::syntax(self.offset(), "unexpected trailing input"))
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_sequent(text: &str) -> Result<Sequent> {
    let mut p = Parser::new(text)?;
    let stoup = if p.eat(&Token::Dash) { None } else { Some(p.formula()?) };
    p.expect(&Token::Bar, "`|` after the stoup")?;
    let mut context = Vec::new();
    if p.peek() != Some(&Token::Turnstile) {
        context.push(p.formula()?);
        while p.eat(&Token::Comma) {
            context.push(p.formula()?);
        }
    }
    p.expect(&Token::Turnstile, "`|-`")?;
    let succedent = p.formula()?;
    p.finish()?;
    Ok(Sequent { stoup, context, succedent })
}

impl std::str::FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

impl std::str::FromStr for Sequent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_sequent(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }
    fn x() -> Formula {
        Formula::atom("X")
    }
    fn y() -> Formula {
        Formula::atom("Y")
    }
    fn z() -> Formula {
        Formula::atom("Z")
    }

    #[test]
    fn parses_unit_and_associativity() {
        assert_eq!(f("I"), Formula::Unit);
        assert_eq!(f("X * Y * Z"), Formula::tensor(Formula::tensor(x(), y()), z()));
        assert_eq!(
            f("X * Y -o Z -o W"),
            Formula::lolli(
                Formula::tensor(x(), y()),
                Formula::lolli(z(), Formula::atom("W"))
            )
        );
    }

    #[test]
    fn prints_minimal_parens() {
        assert_eq!(Formula::tensor(Formula::Unit, x()).to_string(), "I * X");
        assert_eq!(Formula::lolli(x(), Formula::lolli(y(), z())).to_string(), "X -o Y -o Z");
        assert_eq!(Formula::tensor(Formula::lolli(x(), x()), y()).to_string(), "(X -o X) * Y");
        assert_eq!(Formula::tensor(x(), Formula::tensor(y(), z())).to_string(), "X * (Y * Z)");
        assert_eq!(Formula::lolli(Formula::lolli(x(), y()), z()).to_string(), "(X -o Y) -o Z");
    }

    #[test]
    fn atoms_with_primes_and_digits() {
        assert_eq!(f("X' * a_1"), Formula::tensor(Formula::atom("X'"), Formula::atom("a_1")));
        assert_eq!(f("IX"), Formula::atom("IX"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_formula("X * ") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_formula("X ) Y") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("1X").is_err());
        assert!(parse_formula("(X").is_err());
        assert!(parse_formula("").is_err());
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("I * X | |- X").unwrap();
        assert_eq!(s.stoup, Some(Formula::tensor(Formula::Unit, x())));
        assert!(s.context.is_empty());
        assert_eq!(s.to_string(), "I * X | |- X");

        let s = parse_sequent("- | X, Y -o Z |- Z").unwrap();
        assert_eq!(s.stoup, None);
        assert_eq!(s.context, vec![x(), Formula::lolli(y(), z())]);
        assert_eq!(s.to_string(), "- | X, Y -o Z |- Z");

        let s = parse_sequent("I -o I | Z |- (I -o I) * Z").unwrap();
        assert_eq!(s.stoup, Some(Formula::lolli(Formula::Unit, Formula::Unit)));
        assert!(parse_sequent("X |- X").is_err());
        assert!(parse_sequent("X | Y,  |- X").is_err());
    }

    #[test]
    fn encodings() {
        let a = Formula::atom("A");
        let b = Formula::atom("B");
        let c = Formula::atom("C");
        assert_eq!(encode_antecedent(&None, &[]), Formula::Unit);
        assert_eq!(
            encode_antecedent(&Some(a.clone()), &[b.clone(), c.clone()]),
            Formula::tensor(Formula::tensor(a.clone(), b.clone()), c.clone())
        );
        assert_eq!(encode_antecedent(&None, &[a.clone()]), Formula::tensor(Formula::Unit, a.clone()));

        assert_eq!(encode_succedent(&[], &c), c);
        assert_eq!(
            encode_succedent(&[a.clone(), b.clone()], &c),
            Formula::lolli(a.clone(), Formula::lolli(b.clone(), c.clone()))
        );
        assert_eq!(encode_succedent(&[x()], &Formula::Unit), Formula::lolli(x(), Formula::Unit));
    }

    #[test]
    fn polarities() {
        assert_eq!(polarity(&Formula::lolli(x(), y())), Polarity::Negative);
        assert_eq!(polarity(&Formula::tensor(x(), y())), Polarity::Positive);
        assert!(!is_negative_stoup(&Some(Formula::tensor(x(), y()))));
        assert!(!is_negative_stoup(&Some(Formula::Unit)));
        assert!(is_negative_stoup(&None));
        assert!(is_negative_stoup(&Some(x())));
        assert!(is_negative_stoup(&Some(Formula::lolli(x(), y()))));
    }
}
