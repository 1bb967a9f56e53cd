//! Exhaustive enumeration of cut-free derivations. Terminates because every
//! premise of a cut-free rule has a strictly smaller [`Sequent::measure`].

use std::collections::HashMap;
use std::sync::Arc;

use super::{premise_sequents, Derivation, Rule};
use crate::error::{Error, Result};
use crate::formula::{Formula, Sequent};

/// Default cap on the number of derivation nodes an [`Enumerator`] may build.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Memoizing enumerator. The memo is keyed by sequent, so one enumerator can
/// be reused across related queries to share subresults.
pub struct Enumerator {
    memo: HashMap<Sequent, Arc<Vec<Derivation>>>,
    derivable: HashMap<Sequent, bool>,
    budget: usize,
    built: usize,
}

/// Rules that could conclude `s`, in the canonical order
/// ax, uR, uL, tL, pass, lR, tR, lL, with splits left to right.
pub(crate) fn candidate_rules(s: &Sequent) -> Vec<Rule> {
    let mut out = Vec::new();
    let n = s.context.len();
    if s.context.is_empty() && s.stoup.as_ref() == Some(&s.succedent) {
        out.push(Rule::Ax);
    }
    if s.stoup.is_none() && s.context.is_empty() && s.succedent == Formula::Unit {
        out.push(Rule::UnitR);
    }
    match &s.stoup {
        Some(Formula::Unit) => out.push(Rule::UnitL),
        Some(Formula::Tensor(..)) => out.push(Rule::TensorL),
        None if n > 0 => out.push(Rule::Pass),
        _ => {}
    }
    match &s.succedent {
        Formula::Lolli(..) => out.push(Rule::LolliR),
        Formula::Tensor(..) => out.extend((0..=n).map(|split| Rule::TensorR { split })),
        _ => {}
    }
    if let Some(Formula::Lolli(..)) = &s.stoup {
        out.extend((0..=n).map(|split| Rule::LolliL { split }));
    }
    out
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator::new(DEFAULT_BUDGET)
    }
}

impl Enumerator {
    pub fn new(budget: usize) -> Self {
        Enumerator { memo: HashMap::new(), derivable: HashMap::new(), budget, built: 0 }
    }

    /// Nodes built so far, across all queries.
    pub fn nodes_built(&self) -> usize {
        self.built
    }

    /// All cut-free derivations of `s` in canonical order.
    pub fn all(&mut self, s: &Sequent) -> Result<Arc<Vec<Derivation>>> {
        if let Some(hit) = self.memo.get(s) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        for rule in candidate_rules(s) {
            let premises = premise_sequents(&rule, s)?;
            let lists = premises.iter().map(|p| self.all(p)).collect::<Result<Vec<_>>>()?;
            let combos: usize = lists.iter().map(|l| l.len()).product();
            self.built += combos;
            if self.built > self.budget {
                return Err(Error::Budget(self.budget));
            }
            match lists.as_slice() {
                [] => out.push(Derivation::from_parts(rule, vec![], s.clone())),
                [a] => out.extend(a.iter().map(|p| Derivation::from_parts(rule.clone(), vec![p.clone()], s.clone()))),
                [a, b] => {
                    for p in a.iter() {
                        for q in b.iter() {
                            out.push(Derivation::from_parts(rule.clone(), vec![p.clone(), q.clone()], s.clone()));
                        }
                    }
                }
                _ => unreachable!("rules have at most two premises"),
            }
        }
        let out = Arc::new(out);
        self.memo.insert(s.clone(), out.clone());
        Ok(out)
    }

    /// Derivability without building trees.
    pub fn is_derivable(&mut self, s: &Sequent) -> bool {
        if let Some(&hit) = self.derivable.get(s) {
            return hit;
        }
        let ok = candidate_rules(s).into_iter().any(|rule| {
            premise_sequents(&rule, s)
                .map(|ps| ps.iter().all(|p| self.is_derivable(p)))
                .unwrap_or(false)
        });
        self.derivable.insert(s.clone(), ok);
        ok
    }
}

/// Every cut-free derivation of `s`, each exactly once, in canonical order.
/// Panics if the default budget is exhausted; see
/// [`enumerate_all_with_budget`].
pub fn enumerate_all(s: &Sequent) -> Vec<Derivation> {
    enumerate_all_with_budget(s, DEFAULT_BUDGET).expect("enumeration budget exhausted")
}

pub fn enumerate_all_with_budget(s: &Sequent, budget: usize) -> Result<Vec<Derivation>> {
    let all = Enumerator::new(budget).all(s)?;
    Ok(Arc::try_unwrap(all).unwrap_or_else(|shared| (*shared).clone()))
}

pub fn is_derivable(s: &Sequent) -> bool {
    Enumerator::default().is_derivable(s)
}
