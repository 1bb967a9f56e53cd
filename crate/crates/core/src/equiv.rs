//! The congruence ≗ on derivations: eleven generating equations oriented
//! left to right as rewrite rules, normalization under two strategies, and
//! equivalence-class computation by closure under single steps.
//!
//! Equality of derivations is decided through `focus`. The oriented system
//! has critical pairs that do not rejoin (for instance `tR(pass(lR f), g)`
//! reduces both to `pass(tR(lR f, g))` and to `tR(lR(pass f), g)`, two
//! distinct normal forms), so `normalize` is strategy-dependent; see
//! [`find_unjoinable_peak`].

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::focused::focus;
use crate::formula::{Formula, Sequent};
use crate::seqcalc::{enumerate_all_with_budget, Derivation, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    EtaUnit,
    EtaTensor,
    EtaLolli,
    TensorRPass,
    TensorRUnitL,
    TensorRTensorL,
    TensorRLolliL,
    PassLolliR,
    UnitLLolliR,
    TensorLLolliR,
    LolliLLolliR,
}

impl Generator {
    pub const ALL: [Generator; 11] = [
        Generator::EtaUnit,
        Generator::EtaTensor,
        Generator::EtaLolli,
        Generator::TensorRPass,
        Generator::TensorRUnitL,
        Generator::TensorRTensorL,
        Generator::TensorRLolliL,
        Generator::PassLolliR,
        Generator::UnitLLolliR,
        Generator::TensorLLolliR,
        Generator::LolliLLolliR,
    ];

    /// The generator whose left-hand side matches at the root of `d`. The
    /// left-hand sides do not overlap at the root, so there is at most one.
    pub fn matching(d: &Derivation) -> Option<Generator> {
        let first = |i: usize| d.premise(i).rule();
        match d.rule() {
            Rule::Ax => match &d.conclusion().succedent {
                Formula::Unit => Some(Generator::EtaUnit),
                Formula::Tensor(..) => Some(Generator::EtaTensor),
                Formula::Lolli(..) => Some(Generator::EtaLolli),
                Formula::Atom(_) => None,
            },
            Rule::TensorR { .. } => match first(0) {
                Rule::Pass => Some(Generator::TensorRPass),
                Rule::UnitL => Some(Generator::TensorRUnitL),
                Rule::TensorL => Some(Generator::TensorRTensorL),
                Rule::LolliL { .. } => Some(Generator::TensorRLolliL),
                _ => None,
            },
            Rule::Pass if first(0) == &Rule::LolliR => Some(Generator::PassLolliR),
            Rule::UnitL if first(0) == &Rule::LolliR => Some(Generator::UnitLLolliR),
            Rule::TensorL if first(0) == &Rule::LolliR => Some(Generator::TensorLLolliR),
            Rule::LolliL { .. } if first(1) == &Rule::LolliR => Some(Generator::LolliLLolliR),
            _ => None,
        }
    }

    /// Rewrites the root redex of `d` by this generator.
    pub fn apply(self, d: &Derivation) -> Result<Derivation> {
        if Generator::matching(d) != Some(self) {
            return Err(Error::NotApplicable(format!("{self:?} does not match {}", d.rule().name())));
        }
        let p = |i: usize| d.premise(i).clone();
        let pp = |i: usize, j: usize| d.premise(i).premise(j).clone();
        let out = match self {
            Generator::EtaUnit => Derivation::unit_l(Derivation::unit_r())?,
            Generator::EtaTensor => {
                let (a, b) = d.conclusion().succedent.as_tensor().expect("matched a tensor");
                Derivation::tensor_l(Derivation::tensor_r(
                    Derivation::ax(a.clone()),
                    Derivation::pass(Derivation::ax(b.clone()))?,
                )?)?
            }
            Generator::EtaLolli => {
                let (a, b) = d.conclusion().succedent.as_lolli().expect("matched an implication");
                Derivation::lolli_r(Derivation::lolli_l(
                    Derivation::pass(Derivation::ax(a.clone()))?,
                    Derivation::ax(b.clone()),
                )?)?
            }
            Generator::TensorRPass => Derivation::pass(Derivation::tensor_r(pp(0, 0), p(1))?)?,
            Generator::TensorRUnitL => Derivation::unit_l(Derivation::tensor_r(pp(0, 0), p(1))?)?,
            Generator::TensorRTensorL => Derivation::tensor_l(Derivation::tensor_r(pp(0, 0), p(1))?)?,
            Generator::TensorRLolliL => Derivation::lolli_l(pp(0, 0), Derivation::tensor_r(pp(0, 1), p(1))?)?,
            Generator::PassLolliR => Derivation::lolli_r(Derivation::pass(pp(0, 0))?)?,
            Generator::UnitLLolliR => Derivation::lolli_r(Derivation::unit_l(pp(0, 0))?)?,
            Generator::TensorLLolliR => Derivation::lolli_r(Derivation::tensor_l(pp(0, 0))?)?,
            Generator::LolliLLolliR => Derivation::lolli_r(Derivation::lolli_l(p(0), pp(1, 0))?)?,
        };
        debug_assert_eq!(out.conclusion(), d.conclusion());
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    /// Premise indices from the root to the redex.
    pub path: Vec<usize>,
    pub generator: Generator,
}

/// Every redex, leftmost-innermost first (post-order).
pub fn applicable_steps(d: &Derivation) -> Vec<RewriteStep> {
    fn go(d: &Derivation, path: &mut Vec<usize>, out: &mut Vec<RewriteStep>) {
        for (i, p) in d.premises().iter().enumerate() {
            path.push(i);
            go(p, path, out);
            path.pop();
        }
        if let Some(generator) = Generator::matching(d) {
            out.push(RewriteStep { path: path.clone(), generator });
        }
    }
    let mut out = Vec::new();
    go(d, &mut Vec::new(), &mut out);
    out
}

pub fn rewrite_step(d: &Derivation, step: &RewriteStep) -> Result<Derivation> {
    let redex = d
        .at(&step.path)
        .ok_or_else(|| Error::NotApplicable(format!("no node at {:?}", step.path)))?;
    Ok(d.replace_at(&step.path, step.generator.apply(redex)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LeftmostInnermost,
    RightmostOutermost,
}

/// Default rewrite-step budget.
pub const DEFAULT_STEPS: usize = 100_000;

fn first_redex(d: &Derivation, strategy: Strategy) -> Option<RewriteStep> {
    fn outermost(d: &Derivation, path: &mut Vec<usize>) -> Option<RewriteStep> {
        if let Some(generator) = Generator::matching(d) {
            return Some(RewriteStep { path: path.clone(), generator });
        }
        for i in (0..d.premises().len()).rev() {
            path.push(i);
            if let Some(s) = outermost(d.premise(i), path) {
                return Some(s);
            }
            path.pop();
        }
        None
    }
    fn innermost(d: &Derivation, path: &mut Vec<usize>) -> Option<RewriteStep> {
        for (i, p) in d.premises().iter().enumerate() {
            path.push(i);
            if let Some(s) = innermost(p, path) {
                return Some(s);
            }
            path.pop();
        }
        Generator::matching(d).map(|generator| RewriteStep { path: path.clone(), generator })
    }
    match strategy {
        Strategy::LeftmostInnermost => innermost(d, &mut Vec::new()),
        Strategy::RightmostOutermost => outermost(d, &mut Vec::new()),
    }
}

/// Rewrites until no redex remains, failing after `max_steps` steps.
pub fn normalize_with(d: &Derivation, strategy: Strategy, max_steps: usize) -> Result<Derivation> {
    let mut cur = d.clone();
    for _ in 0..max_steps {
        match first_redex(&cur, strategy) {
            None => return Ok(cur),
            Some(step) => cur = rewrite_step(&cur, &step)?,
        }
    }
    match first_redex(&cur, strategy) {
        None => Ok(cur),
        Some(_) => Err(Error::Budget(max_steps)),
    }
}

/// Leftmost-innermost normal form.
pub fn normalize(d: &Derivation) -> Result<Derivation> {
    normalize_with(d, Strategy::LeftmostInnermost, DEFAULT_STEPS)
}

/// `d1 ≗ d2`, decided by comparing focused normal forms.
pub fn equivalent(d1: &Derivation, d2: &Derivation) -> Result<bool> {
    if d1.conclusion() != d2.conclusion() {
        return Err(Error::mismatch(format!(
            "derivations conclude different sequents: {} and {}",
            d1.conclusion(),
            d2.conclusion()
        )));
    }
    Ok(focus(d1) == focus(d2))
}

/// Every one-step reduct of `d`.
pub fn one_step_reducts(d: &Derivation) -> Vec<Derivation> {
    applicable_steps(d)
        .iter()
        .map(|s| rewrite_step(d, s).expect("listed steps apply"))
        .collect()
}

/// Length of the longest rewrite sequence from `d`. Fails if more than
/// `max_terms` distinct terms are reachable or if a cycle is found (which
/// would mean a nonterminating sequence).
pub fn longest_reduction(d: &Derivation, max_terms: usize) -> Result<usize> {
    fn go(
        d: &Derivation,
        memo: &mut HashMap<Derivation, usize>,
        active: &mut HashSet<Derivation>,
        max_terms: usize,
    ) -> Result<usize> {
        if let Some(&n) = memo.get(d) {
            return Ok(n);
        }
        if !active.insert(d.clone()) {
            return Err(Error::mismatch(format!("rewrite cycle through {d:?}")));
        }
        if memo.len() + active.len() > max_terms {
            return Err(Error::Budget(max_terms));
        }
        let mut best = 0;
        for r in one_step_reducts(d) {
            best = best.max(1 + go(&r, memo, active, max_terms)?);
        }
        active.remove(d);
        memo.insert(d.clone(), best);
        Ok(best)
    }
    go(d, &mut HashMap::new(), &mut HashSet::new(), max_terms)
}

/// All terms reachable from `d` by zero or more steps.
pub fn reachable(d: &Derivation, max_terms: usize) -> Result<HashSet<Derivation>> {
    let mut seen = HashSet::new();
    let mut stack = vec![d.clone()];
    while let Some(t) = stack.pop() {
        if !seen.insert(t.clone()) {
            continue;
        }
        if seen.len() > max_terms {
            return Err(Error::Budget(max_terms));
        }
        stack.extend(one_step_reducts(&t));
    }
    Ok(seen)
}

/// A one-step peak `r1 <- d -> r2` whose reducts have no common reduct.
#[derive(Clone, Debug)]
pub struct Peak {
    pub source: Derivation,
    pub left: RewriteStep,
    pub right: RewriteStep,
}

/// Checks every pair of one-step reducts of `d` for joinability.
pub fn find_unjoinable_peak(d: &Derivation, max_terms: usize) -> Result<Option<Peak>> {
    let steps = applicable_steps(d);
    for (i, s1) in steps.iter().enumerate() {
        for s2 in &steps[i + 1..] {
            let r1 = rewrite_step(d, s1)?;
            let r2 = rewrite_step(d, s2)?;
            if r1 == r2 {
                continue;
            }
            let from1 = reachable(&r1, max_terms)?;
            let joins = reachable(&r2, max_terms)?.iter().any(|t| from1.contains(t));
            if !joins {
                return Ok(Some(Peak { source: d.clone(), left: s1.clone(), right: s2.clone() }));
            }
        }
    }
    Ok(None)
}

/// Sequents above this many connectives are refused by the class oracle.
pub const CLASS_CEILING: usize = 8;

/// Partition of all cut-free derivations of `s` into ≗-classes, computed by
/// closing the enumeration under single generator steps in both directions.
/// Classes are listed in order of their first member.
pub fn equivalence_classes(s: &Sequent, budget: usize) -> Result<Vec<Vec<Derivation>>> {
    classes_of(enumerate_all_with_budget(s, budget)?, s)
}

pub(crate) fn classes_of(all: Vec<Derivation>, s: &Sequent) -> Result<Vec<Vec<Derivation>>> {
    if s.connectives() > CLASS_CEILING {
        return Err(Error::mismatch(format!(
            "{s} has more than {CLASS_CEILING} connectives; class enumeration refused"
        )));
    }
    let index: HashMap<&Derivation, usize> = all.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, d) in all.iter().enumerate() {
        for r in one_step_reducts(d) {
            let j = *index.get(&r).expect("reducts are cut-free derivations of the same sequent");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut order: Vec<usize> = Vec::new();
    let mut groups: HashMap<usize, Vec<Derivation>> = HashMap::new();
    for (i, d) in all.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_insert_with(|| {
            order.push(root);
            Vec::new()
        });
        groups.get_mut(&root).unwrap().push(d.clone());
    }
    Ok(order.into_iter().map(|r| groups.remove(&r).unwrap()).collect())
}

/// The ≗-class of `d` among all cut-free derivations of its sequent.
pub fn equivalence_class(d: &Derivation, budget: usize) -> Result<Vec<Derivation>> {
    let classes = equivalence_classes(d.conclusion(), budget)?;
    Ok(classes.into_iter().find(|c| c.contains(d)).unwrap_or_default())
}
