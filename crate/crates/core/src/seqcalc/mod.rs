//! The unfocused sequent calculus: derivation trees, local rule checking,
//! admissible cuts and derived rules, and a brute-force enumerator.

mod cut;
mod derived;
mod enumerate;
mod text;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::{Formula, Sequent};

pub use cut::{ccut, eliminate_cuts, scut};
pub use derived::{iter_left, iter_lolli_right, lolli_left_ctx};
pub use enumerate::{enumerate_all, enumerate_all_with_budget, is_derivable, Enumerator, DEFAULT_BUDGET};
pub use text::{derivation_from_sexp, derivation_to_sexp, parse_derivation, print_derivation};

/// Rules of the calculus plus the two cut rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Ax,
    Pass,
    /// `split` is the length of the context consumed by the first premise.
    LolliL { split: usize },
    LolliR,
    UnitL,
    TensorL,
    UnitR,
    TensorR { split: usize },
    Scut { split: usize, cut: Formula },
    /// `prefix` is the length of Δ0, `split` the length of Γ.
    Ccut { prefix: usize, split: usize, cut: Formula },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Ax => "ax",
            Rule::Pass => "pass",
            Rule::LolliL { .. } => "lL",
            Rule::LolliR => "lR",
            Rule::UnitL => "uL",
            Rule::TensorL => "tL",
            Rule::UnitR => "uR",
            Rule::TensorR { .. } => "tR",
            Rule::Scut { .. } => "scut",
            Rule::Ccut { .. } => "ccut",
        }
    }

    pub fn is_cut(&self) -> bool {
        matches!(self, Rule::Scut { .. } | Rule::Ccut { .. })
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Node {
    rule: Rule,
    premises: Vec<Derivation>,
    conclusion: Sequent,
}

/// An immutable, cheaply clonable derivation tree. Every node caches the
/// sequent it concludes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivation(Arc<Node>);

/// First offending node found by [`validate`]; `path` lists premise indices
/// from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invalid {
    pub path: Vec<usize>,
    pub reason: String,
}

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid node at {:?}: {}", self.path, self.reason)
    }
}

impl Derivation {
    /// Assembles a node without any checking. Use [`validate`] on the result.
    pub fn from_parts(rule: Rule, premises: Vec<Derivation>, conclusion: Sequent) -> Derivation {
        Derivation(Arc::new(Node { rule, premises, conclusion }))
    }

    fn checked(rule: Rule, premises: Vec<Derivation>) -> Result<Derivation> {
        let conclusion = expected_conclusion(&rule, &premises)?;
        Ok(Derivation::from_parts(rule, premises, conclusion))
    }

    pub fn rule(&self) -> &Rule {
        &self.0.rule
    }

    pub fn premises(&self) -> &[Derivation] {
        &self.0.premises
    }

    pub fn premise(&self, i: usize) -> &Derivation {
        &self.0.premises[i]
    }

    pub fn conclusion(&self) -> &Sequent {
        &self.0.conclusion
    }

    pub fn ptr_eq(&self, other: &Derivation) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_cut_free(&self) -> bool {
        !self.rule().is_cut() && self.premises().iter().all(Derivation::is_cut_free)
    }

    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(Derivation::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises().iter().map(Derivation::height).max().unwrap_or(0)
    }

    /// Subderivation at a path of premise indices.
    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        let mut d = self;
        for &i in path {
            d = d.premises().get(i)?;
        }
        Some(d)
    }

    /// Replaces the subderivation at `path`, rebuilding the spine. The
    /// replacement must conclude the same sequent as the original.
    pub fn replace_at(&self, path: &[usize], new: Derivation) -> Derivation {
        match path.split_first() {
            None => new,
            Some((&i, rest)) => {
                let mut premises = self.premises().to_vec();
                premises[i] = premises[i].replace_at(rest, new);
                Derivation::from_parts(self.rule().clone(), premises, self.conclusion().clone())
            }
        }
    }

    // -- smart constructors, computing the conclusion from the premises --

    /// `A | |- A`
    pub fn ax(a: Formula) -> Derivation {
        Derivation::from_parts(Rule::Ax, vec![], Sequent::new(Some(a.clone()), vec![], a))
    }

    /// `- | |- I`
    pub fn unit_r() -> Derivation {
        Derivation::from_parts(Rule::UnitR, vec![], Sequent::new(None, vec![], Formula::Unit))
    }

    pub fn pass(f: Derivation) -> Result<Derivation> {
        Derivation::checked(Rule::Pass, vec![f])
    }

    pub fn unit_l(f: Derivation) -> Result<Derivation> {
        Derivation::checked(Rule::UnitL, vec![f])
    }

    pub fn tensor_l(f: Derivation) -> Result<Derivation> {
        Derivation::checked(Rule::TensorL, vec![f])
    }

    pub fn lolli_r(f: Derivation) -> Result<Derivation> {
        Derivation::checked(Rule::LolliR, vec![f])
    }

    pub fn tensor_r(f: Derivation, g: Derivation) -> Result<Derivation> {
        let split = f.conclusion().context.len();
        Derivation::checked(Rule::TensorR { split }, vec![f, g])
    }

    pub fn lolli_l(f: Derivation, g: Derivation) -> Result<Derivation> {
        let split = f.conclusion().context.len();
        Derivation::checked(Rule::LolliL { split }, vec![f, g])
    }

    /// An explicit, not yet eliminated, stoup cut node.
    pub fn scut_node(f: Derivation, g: Derivation) -> Result<Derivation> {
        let split = f.conclusion().context.len();
        let cut = f.conclusion().succedent.clone();
        Derivation::checked(Rule::Scut { split, cut }, vec![f, g])
    }

    /// An explicit context cut node; `prefix` is the position of the cut
    /// formula in the context of `g`.
    pub fn ccut_node(f: Derivation, g: Derivation, prefix: usize) -> Result<Derivation> {
        let split = f.conclusion().context.len();
        let cut = f.conclusion().succedent.clone();
        Derivation::checked(Rule::Ccut { prefix, split, cut }, vec![f, g])
    }
}

/// Conclusion of a non-leaf rule given its premises, or a description of
/// why the premises do not fit.
fn expected_conclusion(rule: &Rule, premises: &[Derivation]) -> Result<Sequent> {
    let arity = match rule {
        Rule::Ax | Rule::UnitR => 0,
        Rule::Pass | Rule::LolliR | Rule::UnitL | Rule::TensorL => 1,
        _ => 2,
    };
    if premises.len() != arity {
        return Err(Error::mismatch(format!(
            "{} expects {arity} premises, got {}",
            rule.name(),
            premises.len()
        )));
    }
    let p = |i: usize| premises[i].conclusion();
    let fail = |why: &str| Err(Error::mismatch(format!("{}: {why}", rule.name())));
    match rule {
        Rule::Ax | Rule::UnitR => unreachable!("leaf rules carry no premises"),
        Rule::Pass => {
            let s = p(0);
            let Some(a) = &s.stoup else { return fail("premise stoup is empty") };
            let mut context = vec![a.clone()];
            context.extend(s.context.iter().cloned());
            Ok(Sequent::new(None, context, s.succedent.clone()))
        }
        Rule::UnitL => {
            let s = p(0);
            if s.stoup.is_some() {
                return fail("premise stoup must be empty");
            }
            Ok(Sequent::new(Some(Formula::Unit), s.context.clone(), s.succedent.clone()))
        }
        Rule::TensorL => {
            let s = p(0);
            let (Some(a), Some(b)) = (&s.stoup, s.context.first()) else {
                return fail("premise needs a stoup formula and a nonempty context");
            };
            Ok(Sequent::new(
                Some(Formula::tensor(a.clone(), b.clone())),
                s.context[1..].to_vec(),
                s.succedent.clone(),
            ))
        }
        Rule::LolliR => {
            let s = p(0);
            let Some((a, gamma)) = s.context.split_last() else {
                return fail("premise context is empty");
            };
            Ok(Sequent::new(
                s.stoup.clone(),
                gamma.to_vec(),
                Formula::lolli(a.clone(), s.succedent.clone()),
            ))
        }
        Rule::TensorR { split } => {
            let (f, g) = (p(0), p(1));
            if g.stoup.is_some() {
                return fail("second premise stoup must be empty");
            }
            if *split != f.context.len() {
                return fail("split annotation disagrees with the first premise");
            }
            Ok(Sequent::new(
                f.stoup.clone(),
                concat(&f.context, &g.context),
                Formula::tensor(f.succedent.clone(), g.succedent.clone()),
            ))
        }
        Rule::LolliL { split } => {
            let (f, g) = (p(0), p(1));
            if f.stoup.is_some() {
                return fail("first premise stoup must be empty");
            }
            let Some(b) = &g.stoup else { return fail("second premise stoup is empty") };
            if *split != f.context.len() {
                return fail("split annotation disagrees with the first premise");
            }
            Ok(Sequent::new(
                Some(Formula::lolli(f.succedent.clone(), b.clone())),
                concat(&f.context, &g.context),
                g.succedent.clone(),
            ))
        }
        Rule::Scut { split, cut } => {
            let (f, g) = (p(0), p(1));
            if &f.succedent != cut || g.stoup.as_ref() != Some(cut) {
                return fail("cut formula must be the left succedent and the right stoup");
            }
            if *split != f.context.len() {
                return fail("split annotation disagrees with the first premise");
            }
            Ok(Sequent::new(f.stoup.clone(), concat(&f.context, &g.context), g.succedent.clone()))
        }
        Rule::Ccut { prefix, split, cut } => {
            let (f, g) = (p(0), p(1));
            if f.stoup.is_some() {
                return fail("first premise stoup must be empty");
            }
            if &f.succedent != cut || g.context.get(*prefix) != Some(cut) {
                return fail("cut formula must be the left succedent and sit at the given position");
            }
            if *split != f.context.len() {
                return fail("split annotation disagrees with the first premise");
            }
            let mut context = g.context[..*prefix].to_vec();
            context.extend(f.context.iter().cloned());
            context.extend(g.context[prefix + 1..].iter().cloned());
            Ok(Sequent::new(g.stoup.clone(), context, g.succedent.clone()))
        }
    }
}

fn concat(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
    a.iter().chain(b).cloned().collect()
}

/// Checks every node against its rule, recomputing cached conclusions.
pub fn validate(d: &Derivation) -> std::result::Result<(), Invalid> {
    fn go(d: &Derivation, path: &mut Vec<usize>) -> std::result::Result<(), Invalid> {
        for (i, p) in d.premises().iter().enumerate() {
            path.push(i);
            go(p, path)?;
            path.pop();
        }
        let invalid = |reason: String| Invalid { path: path.clone(), reason };
        let c = d.conclusion();
        match d.rule() {
            Rule::Ax => {
                if !d.premises().is_empty() {
                    return Err(invalid("ax has no premises".into()));
                }
                if c.stoup.as_ref() != Some(&c.succedent) || !c.context.is_empty() {
                    return Err(invalid(format!("ax cannot conclude {c}")));
                }
            }
            Rule::UnitR => {
                if !d.premises().is_empty() {
                    return Err(invalid("uR has no premises".into()));
                }
                if c.stoup.is_some() || !c.context.is_empty() || c.succedent != Formula::Unit {
                    return Err(invalid(format!("uR cannot conclude {c}")));
                }
            }
            rule => {
                let expected = expected_conclusion(rule, d.premises()).map_err(|e| invalid(e.to_string()))?;
                if &expected != c {
                    return Err(invalid(format!(
                        "{} with these premises concludes {expected}, not {c}",
                        rule.name()
                    )));
                }
            }
        }
        Ok(())
    }
    go(d, &mut Vec::new())
}

pub fn is_valid(d: &Derivation) -> bool {
    validate(d).is_ok()
}

/// Premise sequents of `rule` read bottom-up from `conclusion`; used when a
/// tree is reconstructed from its text form.
pub(crate) fn premise_sequents(rule: &Rule, c: &Sequent) -> Result<Vec<Sequent>> {
    let fail = || Err(Error::mismatch(format!("rule {} does not apply to {c}", rule.name())));
    match rule {
        Rule::Ax => {
            if c.stoup.as_ref() == Some(&c.succedent) && c.context.is_empty() {
                Ok(vec![])
            } else {
                fail()
            }
        }
        Rule::UnitR => {
            if c.stoup.is_none() && c.context.is_empty() && c.succedent == Formula::Unit {
                Ok(vec![])
            } else {
                fail()
            }
        }
        Rule::Pass => match (&c.stoup, c.context.split_first()) {
            (None, Some((a, rest))) => Ok(vec![Sequent::new(Some(a.clone()), rest.to_vec(), c.succedent.clone())]),
            _ => fail(),
        },
        Rule::UnitL => match &c.stoup {
            Some(Formula::Unit) => Ok(vec![Sequent::new(None, c.context.clone(), c.succedent.clone())]),
            _ => fail(),
        },
        Rule::TensorL => match &c.stoup {
            Some(Formula::Tensor(a, b)) => {
                let mut ctx = vec![(**b).clone()];
                ctx.extend(c.context.iter().cloned());
                Ok(vec![Sequent::new(Some((**a).clone()), ctx, c.succedent.clone())])
            }
            _ => fail(),
        },
        Rule::LolliR => match &c.succedent {
            Formula::Lolli(a, b) => {
                let mut ctx = c.context.clone();
                ctx.push((**a).clone());
                Ok(vec![Sequent::new(c.stoup.clone(), ctx, (**b).clone())])
            }
            _ => fail(),
        },
        Rule::TensorR { split } => match &c.succedent {
            Formula::Tensor(a, b) if *split <= c.context.len() => Ok(vec![
                Sequent::new(c.stoup.clone(), c.context[..*split].to_vec(), (**a).clone()),
                Sequent::new(None, c.context[*split..].to_vec(), (**b).clone()),
            ]),
            _ => fail(),
        },
        Rule::LolliL { split } => match &c.stoup {
            Some(Formula::Lolli(a, b)) if *split <= c.context.len() => Ok(vec![
                Sequent::new(None, c.context[..*split].to_vec(), (**a).clone()),
                Sequent::new(Some((**b).clone()), c.context[*split..].to_vec(), c.succedent.clone()),
            ]),
            _ => fail(),
        },
        Rule::Scut { split, cut } => {
            if *split > c.context.len() {
                return fail();
            }
            Ok(vec![
                Sequent::new(c.stoup.clone(), c.context[..*split].to_vec(), cut.clone()),
                Sequent::new(Some(cut.clone()), c.context[*split..].to_vec(), c.succedent.clone()),
            ])
        }
        Rule::Ccut { prefix, split, cut } => {
            if prefix + split > c.context.len() {
                return fail();
            }
            let mut ctx = c.context[..*prefix].to_vec();
            ctx.push(cut.clone());
            ctx.extend(c.context[prefix + split..].iter().cloned());
            Ok(vec![
                Sequent::new(None, c.context[*prefix..prefix + split].to_vec(), cut.clone()),
                Sequent::new(c.stoup.clone(), ctx, c.succedent.clone()),
            ])
        }
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", derivation_to_sexp(self))
    }
}
