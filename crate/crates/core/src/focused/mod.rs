//! The focused calculus with phases RI, LI, P, F and tag annotations, plus
//! the untagged ("naive") variant used for comparison.
//!
//! A tagged sequent is written `S | Γ ⊢•_ph C`. Tags on context entries
//! record formulae moved into the context by `lR` since the last `tR`;
//! they only ever appear in tagged sequents, after every untagged entry.

mod focus;
mod search;
mod text;

use std::fmt;
use std::sync::Arc;

use crate::formula::{fmt_stoup, is_negative_stoup, Formula, Sequent, Stoup};
use crate::seqcalc::Invalid;

pub use focus::{
    ax_ri, count_maps, emb, focus, il_ri, ir_ri, lolli_l_ri, pass_ri, tensor_r_ri, tl_ri,
};
pub use search::{count, is_derivable, search, search_with_budget, FocusedSearch};
pub use text::{focused_from_sexp, focused_to_sexp, parse_focused, print_focused};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    RI,
    LI,
    P,
    F,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::RI => "RI",
            Phase::LI => "LI",
            Phase::P => "P",
            Phase::F => "F",
        }
    }

    pub fn from_name(s: &str) -> Option<Phase> {
        Some(match s {
            "RI" => Phase::RI,
            "LI" => Phase::LI,
            "P" => Phase::P,
            "F" => Phase::F,
            _ => return None,
        })
    }
}

/// Which rule set a derivation is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Tagged,
    Naive,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub formula: Formula,
    pub tagged: bool,
}

impl Entry {
    pub fn new(formula: Formula, tagged: bool) -> Self {
        Entry { formula, tagged }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.formula, if self.tagged { "•" } else { "" })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FocusedSequent {
    pub phase: Phase,
    /// The turnstile tag.
    pub tagged: bool,
    pub stoup: Stoup,
    pub context: Vec<Entry>,
    pub succedent: Formula,
}

/// `Γ°`: drops every tag.
pub fn strip(ctx: &[Entry]) -> Vec<Entry> {
    ctx.iter().map(|e| Entry::new(e.formula.clone(), false)).collect()
}

pub fn untagged(ctx: &[Formula]) -> Vec<Entry> {
    ctx.iter().map(|f| Entry::new(f.clone(), false)).collect()
}

impl FocusedSequent {
    pub fn new(phase: Phase, tagged: bool, stoup: Stoup, context: Vec<Entry>, succedent: Formula) -> Self {
        FocusedSequent { phase, tagged, stoup, context, succedent }
    }

    /// The untagged phase-`ph` sequent over a plain sequent.
    pub fn plain(phase: Phase, s: &Sequent) -> Self {
        FocusedSequent::new(phase, false, s.stoup.clone(), untagged(&s.context), s.succedent.clone())
    }

    /// Erases phase and tags.
    pub fn erase(&self) -> Sequent {
        Sequent::new(
            self.stoup.clone(),
            self.context.iter().map(|e| e.formula.clone()).collect(),
            self.succedent.clone(),
        )
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        FocusedSequent { phase, ..self.clone() }
    }

    /// Number of tagged entries; by hygiene they form a suffix.
    pub fn tagged_suffix(&self) -> usize {
        self.context.iter().rev().take_while(|e| e.tagged).count()
    }

    /// Why this sequent is not well formed, if it is not: tag hygiene and
    /// the positivity/negativity required by its phase.
    pub fn ill_formed(&self, mode: Mode) -> Option<String> {
        let tags = self.context.iter().filter(|e| e.tagged).count();
        if mode == Mode::Naive && (self.tagged || tags > 0) {
            return Some("naive sequents carry no tags".into());
        }
        if !self.tagged && tags > 0 {
            return Some("untagged sequent has tagged context entries".into());
        }
        if tags != self.tagged_suffix() {
            return Some("an untagged entry follows a tagged one".into());
        }
        if self.phase != Phase::RI && !self.succedent.is_positive() {
            return Some(format!("phase {} needs a positive succedent", self.phase.name()));
        }
        if matches!(self.phase, Phase::P | Phase::F) && !is_negative_stoup(&self.stoup) {
            return Some(format!("phase {} needs a negative stoup", self.phase.name()));
        }
        None
    }
}

impl fmt::Display for FocusedSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", fmt_stoup(&self.stoup))?;
        for (i, e) in self.context.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{}", e.formula)?;
            if e.tagged {
                f.write_str("•")?;
            }
        }
        write!(f, " |-{}{} {}", if self.tagged { "•" } else { "" }, self.phase.name(), self.succedent)
    }
}

impl fmt::Debug for FocusedSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FocusedRule {
    LolliR,
    Li2Ri,
    UnitL,
    TensorL,
    P2Li,
    Pass,
    F2P,
    Ax,
    UnitR,
    TensorR { split: usize },
    LolliL { split: usize },
}

impl FocusedRule {
    pub fn name(&self) -> &'static str {
        match self {
            FocusedRule::LolliR => "lR",
            FocusedRule::Li2Ri => "li2ri",
            FocusedRule::UnitL => "uL",
            FocusedRule::TensorL => "tL",
            FocusedRule::P2Li => "p2li",
            FocusedRule::Pass => "pass",
            FocusedRule::F2P => "f2p",
            FocusedRule::Ax => "ax",
            FocusedRule::UnitR => "uR",
            FocusedRule::TensorR { .. } => "tR",
            FocusedRule::LolliL { .. } => "lL",
        }
    }

    pub fn is_switch(&self) -> bool {
        matches!(self, FocusedRule::Li2Ri | FocusedRule::P2Li | FocusedRule::F2P)
    }
}

#[derive(PartialEq, Eq, Hash)]
struct Node {
    rule: FocusedRule,
    premises: Vec<FocusedDerivation>,
    conclusion: FocusedSequent,
}

/// Immutable focused derivation tree with cached conclusions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FocusedDerivation(Arc<Node>);

impl FocusedDerivation {
    pub fn from_parts(rule: FocusedRule, premises: Vec<FocusedDerivation>, conclusion: FocusedSequent) -> Self {
        FocusedDerivation(Arc::new(Node { rule, premises, conclusion }))
    }

    pub fn rule(&self) -> &FocusedRule {
        &self.0.rule
    }

    pub fn premises(&self) -> &[FocusedDerivation] {
        &self.0.premises
    }

    pub fn premise(&self, i: usize) -> &FocusedDerivation {
        &self.0.premises[i]
    }

    pub fn conclusion(&self) -> &FocusedSequent {
        &self.0.conclusion
    }

    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(FocusedDerivation::size).sum::<usize>()
    }
}

impl fmt::Debug for FocusedDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", focused_to_sexp(self, Mode::Tagged))
    }
}

/// Premises of `rule` read bottom-up from conclusion `c`, including every
/// side condition of the rule in the given mode. The conclusion itself is
/// assumed well formed.
pub fn focused_premises(rule: &FocusedRule, c: &FocusedSequent, mode: Mode) -> Result<Vec<FocusedSequent>, String> {
    let x = c.tagged;
    let n = c.context.len();
    let fail = |why: &str| Err(format!("{} on {c}: {why}", rule.name()));
    let want_phase = match rule {
        FocusedRule::LolliR | FocusedRule::Li2Ri => Phase::RI,
        FocusedRule::UnitL | FocusedRule::TensorL | FocusedRule::P2Li => Phase::LI,
        FocusedRule::Pass | FocusedRule::F2P => Phase::P,
        _ => Phase::F,
    };
    if c.phase != want_phase {
        return fail("wrong phase");
    }
    match rule {
        FocusedRule::LolliR => {
            let Formula::Lolli(a, b) = &c.succedent else { return fail("succedent is not an implication") };
            let mut ctx = c.context.clone();
            ctx.push(Entry::new((**a).clone(), x && mode == Mode::Tagged));
            Ok(vec![FocusedSequent::new(Phase::RI, x, c.stoup.clone(), ctx, (**b).clone())])
        }
        FocusedRule::Li2Ri => {
            if !c.succedent.is_positive() {
                return fail("succedent is not positive");
            }
            Ok(vec![c.with_phase(Phase::LI)])
        }
        FocusedRule::UnitL => {
            if x {
                return fail("only untagged sequents");
            }
            if c.stoup != Some(Formula::Unit) {
                return fail("stoup is not I");
            }
            Ok(vec![FocusedSequent::new(Phase::LI, false, None, c.context.clone(), c.succedent.clone())])
        }
        FocusedRule::TensorL => {
            if x {
                return fail("only untagged sequents");
            }
            let Some(Formula::Tensor(a, b)) = &c.stoup else { return fail("stoup is not a tensor") };
            let mut ctx = vec![Entry::new((**b).clone(), false)];
            ctx.extend(c.context.iter().cloned());
            Ok(vec![FocusedSequent::new(Phase::LI, false, Some((**a).clone()), ctx, c.succedent.clone())])
        }
        FocusedRule::P2Li => {
            if !is_negative_stoup(&c.stoup) {
                return fail("stoup is not negative");
            }
            Ok(vec![c.with_phase(Phase::P)])
        }
        FocusedRule::Pass => {
            if c.stoup.is_some() {
                return fail("stoup is not empty");
            }
            let Some((a, rest)) = c.context.split_first() else { return fail("context is empty") };
            if mode == Mode::Tagged && x && !a.tagged {
                return fail("leftmost context formula is not tagged");
            }
            Ok(vec![FocusedSequent::new(
                Phase::LI,
                false,
                Some(a.formula.clone()),
                strip(rest),
                c.succedent.clone(),
            )])
        }
        FocusedRule::F2P => Ok(vec![c.with_phase(Phase::F)]),
        FocusedRule::Ax => match &c.stoup {
            Some(a @ Formula::Atom(_)) if n == 0 && a == &c.succedent => Ok(vec![]),
            _ => fail("needs `X | |- X` with X an atom"),
        },
        FocusedRule::UnitR => {
            if c.stoup.is_none() && n == 0 && c.succedent == Formula::Unit {
                Ok(vec![])
            } else {
                fail("needs `- | |- I`")
            }
        }
        FocusedRule::TensorR { split } => {
            let Formula::Tensor(a, b) = &c.succedent else { return fail("succedent is not a tensor") };
            if *split > n {
                return fail("split out of range");
            }
            Ok(vec![
                FocusedSequent::new(
                    Phase::RI,
                    mode == Mode::Tagged,
                    c.stoup.clone(),
                    strip(&c.context[..*split]),
                    (**a).clone(),
                ),
                FocusedSequent::new(Phase::RI, false, None, strip(&c.context[*split..]), (**b).clone()),
            ])
        }
        FocusedRule::LolliL { split } => {
            let Some(Formula::Lolli(a, b)) = &c.stoup else { return fail("stoup is not an implication") };
            if *split > n {
                return fail("split out of range");
            }
            if mode == Mode::Tagged && x && !c.context[..*split].iter().any(|e| e.tagged) {
                return fail("first premise context has no tagged formula");
            }
            Ok(vec![
                FocusedSequent::new(Phase::RI, false, None, strip(&c.context[..*split]), (**a).clone()),
                FocusedSequent::new(
                    Phase::LI,
                    false,
                    Some((**b).clone()),
                    strip(&c.context[*split..]),
                    c.succedent.clone(),
                ),
            ])
        }
    }
}

/// Rules whose conclusion can be `c`, in search order: within P, pass
/// before f2p; within F, ax, uR, tR, lL with splits left to right.
pub fn focused_candidates(c: &FocusedSequent, mode: Mode) -> Vec<FocusedRule> {
    let n = c.context.len();
    let all: Vec<FocusedRule> = match c.phase {
        Phase::RI => vec![FocusedRule::LolliR, FocusedRule::Li2Ri],
        Phase::LI => vec![FocusedRule::UnitL, FocusedRule::TensorL, FocusedRule::P2Li],
        Phase::P => vec![FocusedRule::Pass, FocusedRule::F2P],
        Phase::F => {
            let mut v = vec![FocusedRule::Ax, FocusedRule::UnitR];
            v.extend((0..=n).map(|split| FocusedRule::TensorR { split }));
            v.extend((0..=n).map(|split| FocusedRule::LolliL { split }));
            v
        }
    };
    all.into_iter()
        .filter(|r| focused_premises(r, c, mode).is_ok())
        .collect()
}

/// Checks every node: well-formed sequents, matching premises and all tag
/// side conditions of `mode`.
pub fn validate_focused(d: &FocusedDerivation, mode: Mode) -> Result<(), Invalid> {
    fn go(d: &FocusedDerivation, mode: Mode, path: &mut Vec<usize>) -> Result<(), Invalid> {
        let invalid = |reason: String, path: &Vec<usize>| Invalid { path: path.clone(), reason };
        let c = d.conclusion();
        if let Some(why) = c.ill_formed(mode) {
            return Err(invalid(format!("{c}: {why}"), path));
        }
        let expected = focused_premises(d.rule(), c, mode).map_err(|e| invalid(e, path))?;
        if expected.len() != d.premises().len() {
            return Err(invalid(format!("{} expects {} premises", d.rule().name(), expected.len()), path));
        }
        for (i, (p, want)) in d.premises().iter().zip(&expected).enumerate() {
            if p.conclusion() != want {
                return Err(invalid(
                    format!("premise {i} concludes {}, expected {want}", p.conclusion()),
                    path,
                ));
            }
            path.push(i);
            go(p, mode, path)?;
            path.pop();
        }
        Ok(())
    }
    go(d, mode, &mut Vec::new())
}

pub fn is_valid_focused(d: &FocusedDerivation, mode: Mode) -> bool {
    validate_focused(d, mode).is_ok()
}
