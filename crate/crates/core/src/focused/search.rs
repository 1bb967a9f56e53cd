//! Exhaustive root-first search in the focused calculus.

use std::collections::HashMap;
use std::sync::Arc;

use super::{focused_candidates, focused_premises, FocusedDerivation, FocusedSequent, Mode, Phase};
use crate::error::{Error, Result};
use crate::formula::Sequent;
use crate::seqcalc::DEFAULT_BUDGET;

/// Memoizing search engine for one mode.
pub struct FocusedSearch {
    mode: Mode,
    memo: HashMap<FocusedSequent, Arc<Vec<FocusedDerivation>>>,
    counts: HashMap<FocusedSequent, u128>,
    budget: usize,
    built: usize,
}

impl FocusedSearch {
    pub fn new(mode: Mode, budget: usize) -> Self {
        FocusedSearch { mode, memo: HashMap::new(), counts: HashMap::new(), budget, built: 0 }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Every derivation of a focused sequent, in search order.
    pub fn derivations(&mut self, c: &FocusedSequent) -> Result<Arc<Vec<FocusedDerivation>>> {
        if let Some(hit) = self.memo.get(c) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        for rule in focused_candidates(c, self.mode) {
            let premises = focused_premises(&rule, c, self.mode).expect("candidate rules apply");
            let lists = premises.iter().map(|p| self.derivations(p)).collect::<Result<Vec<_>>>()?;
            self.built += lists.iter().map(|l| l.len()).product::<usize>();
            if self.built > self.budget {
                return Err(Error::Budget(self.budget));
            }
            match lists.as_slice() {
                [] => out.push(FocusedDerivation::from_parts(rule, vec![], c.clone())),
                [a] => out.extend(
                    a.iter()
                        .map(|p| FocusedDerivation::from_parts(rule.clone(), vec![p.clone()], c.clone())),
                ),
                [a, b] => {
                    for p in a.iter() {
                        for q in b.iter() {
                            out.push(FocusedDerivation::from_parts(rule.clone(), vec![p.clone(), q.clone()], c.clone()));
                        }
                    }
                }
                _ => unreachable!("rules have at most two premises"),
            }
        }
        let out = Arc::new(out);
        self.memo.insert(c.clone(), out.clone());
        Ok(out)
    }

    /// Number of derivations without building them.
    pub fn count(&mut self, c: &FocusedSequent) -> u128 {
        if let Some(&hit) = self.counts.get(c) {
            return hit;
        }
        let mut total: u128 = 0;
        for rule in focused_candidates(c, self.mode) {
            let premises = focused_premises(&rule, c, self.mode).expect("candidate rules apply");
            let mut prod: u128 = 1;
            for p in &premises {
                if prod == 0 {
                    break;
                }
                prod = prod.saturating_mul(self.count(p));
            }
            total = total.saturating_add(prod);
        }
        self.counts.insert(c.clone(), total);
        total
    }
}

/// All focused derivations of `S | Γ ⊢_RI A` for the given mode.
pub fn search(s: &Sequent, mode: Mode) -> Vec<FocusedDerivation> {
    search_with_budget(s, mode, DEFAULT_BUDGET).expect("search budget exhausted")
}

pub fn search_with_budget(s: &Sequent, mode: Mode, budget: usize) -> Result<Vec<FocusedDerivation>> {
    let all = FocusedSearch::new(mode, budget).derivations(&FocusedSequent::plain(Phase::RI, s))?;
    Ok(Arc::try_unwrap(all).unwrap_or_else(|shared| (*shared).clone()))
}

pub fn count(s: &Sequent, mode: Mode) -> u128 {
    FocusedSearch::new(mode, usize::MAX).count(&FocusedSequent::plain(Phase::RI, s))
}

pub fn is_derivable(s: &Sequent) -> bool {
    count(s, Mode::Tagged) > 0
}
