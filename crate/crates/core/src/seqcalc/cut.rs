//! Admissible cut rules. Both procedures take cut-free derivations and return
//! cut-free derivations.

use super::{Derivation, Rule};
use crate::error::{Error, Result};

fn require_cut_free(d: &Derivation, which: &str) -> Result<()> {
    if d.is_cut_free() {
        Ok(())
    } else {
        Err(Error::mismatch(format!("{which} premise of a cut must be cut-free")))
    }
}

/// `S | Γ ⊢ A` and `A | Δ ⊢ C` give `S | Γ, Δ ⊢ C`.
pub fn scut(f: &Derivation, g: &Derivation) -> Result<Derivation> {
    let a = &f.conclusion().succedent;
    if g.conclusion().stoup.as_ref() != Some(a) {
        return Err(Error::mismatch(format!(
            "scut: left succedent {a} does not match right stoup {}",
            crate::formula::fmt_stoup(&g.conclusion().stoup)
        )));
    }
    require_cut_free(f, "left")?;
    require_cut_free(g, "right")?;
    scut_rec(f, g)
}

/// `- | Γ ⊢ A` and `S | Δ0, A, Δ1 ⊢ C` give `S | Δ0, Γ, Δ1 ⊢ C`, where
/// `pos` is the length of Δ0.
pub fn ccut(f: &Derivation, g: &Derivation, pos: usize) -> Result<Derivation> {
    let fc = f.conclusion();
    if fc.stoup.is_some() {
        return Err(Error::mismatch("ccut: left premise must have an empty stoup"));
    }
    if g.conclusion().context.get(pos) != Some(&fc.succedent) {
        return Err(Error::mismatch(format!(
            "ccut: context position {pos} of the right premise is not {}",
            fc.succedent
        )));
    }
    require_cut_free(f, "left")?;
    require_cut_free(g, "right")?;
    ccut_rec(f, g, pos)
}

fn scut_rec(f: &Derivation, g: &Derivation) -> Result<Derivation> {
    match f.rule() {
        Rule::Ax => Ok(g.clone()),
        Rule::Pass => Derivation::pass(scut_rec(f.premise(0), g)?),
        Rule::UnitL => Derivation::unit_l(scut_rec(f.premise(0), g)?),
        Rule::TensorL => Derivation::tensor_l(scut_rec(f.premise(0), g)?),
        Rule::LolliL { .. } => Derivation::lolli_l(f.premise(0).clone(), scut_rec(f.premise(1), g)?),
        Rule::UnitR => unit_r_cut(g),
        Rule::TensorR { .. } => tensor_r_cut(f, g),
        Rule::LolliR => lolli_r_cut(f, g),
        Rule::Scut { .. } | Rule::Ccut { .. } => unreachable!("inputs are cut-free"),
    }
}

/// Left premise is `uR`; the right one has stoup `I`.
fn unit_r_cut(g: &Derivation) -> Result<Derivation> {
    match g.rule() {
        Rule::Ax => Ok(Derivation::unit_r()),
        Rule::UnitL => Ok(g.premise(0).clone()),
        Rule::LolliR => Derivation::lolli_r(unit_r_cut(g.premise(0))?),
        Rule::TensorR { .. } => Derivation::tensor_r(unit_r_cut(g.premise(0))?, g.premise(1).clone()),
        _ => unreachable!("no other rule concludes a sequent with stoup I"),
    }
}

/// Left premise ends in `tR`; the right one has a tensor in its stoup.
fn tensor_r_cut(f: &Derivation, g: &Derivation) -> Result<Derivation> {
    match g.rule() {
        Rule::Ax => Ok(f.clone()),
        Rule::TensorL => {
            let (f1, f2) = (f.premise(0), f.premise(1));
            let inner = ccut_rec(f2, g.premise(0), 0)?;
            scut_rec(f1, &inner)
        }
        Rule::LolliR => Derivation::lolli_r(scut_rec(f, g.premise(0))?),
        Rule::TensorR { .. } => Derivation::tensor_r(scut_rec(f, g.premise(0))?, g.premise(1).clone()),
        _ => unreachable!("no other rule concludes a sequent with a tensor stoup"),
    }
}

/// Left premise ends in `lR`; the right one has an implication in its stoup.
fn lolli_r_cut(f: &Derivation, g: &Derivation) -> Result<Derivation> {
    match g.rule() {
        Rule::Ax => Ok(f.clone()),
        Rule::LolliL { .. } => {
            let body = f.premise(0);
            let pos = body.conclusion().context.len() - 1;
            let inner = ccut_rec(g.premise(0), body, pos)?;
            scut_rec(&inner, g.premise(1))
        }
        Rule::LolliR => Derivation::lolli_r(scut_rec(f, g.premise(0))?),
        Rule::TensorR { .. } => Derivation::tensor_r(scut_rec(f, g.premise(0))?, g.premise(1).clone()),
        _ => unreachable!("no other rule concludes a sequent with an implication stoup"),
    }
}

fn ccut_rec(f: &Derivation, g: &Derivation, pos: usize) -> Result<Derivation> {
    match g.rule() {
        Rule::Pass if pos == 0 => scut_rec(f, g.premise(0)),
        Rule::Pass => Derivation::pass(ccut_rec(f, g.premise(0), pos - 1)?),
        Rule::UnitL => Derivation::unit_l(ccut_rec(f, g.premise(0), pos)?),
        Rule::TensorL => Derivation::tensor_l(ccut_rec(f, g.premise(0), pos + 1)?),
        Rule::LolliR => Derivation::lolli_r(ccut_rec(f, g.premise(0), pos)?),
        Rule::LolliL { split } => {
            if pos < *split {
                Derivation::lolli_l(ccut_rec(f, g.premise(0), pos)?, g.premise(1).clone())
            } else {
                Derivation::lolli_l(g.premise(0).clone(), ccut_rec(f, g.premise(1), pos - split)?)
            }
        }
        Rule::TensorR { split } => {
            if pos < *split {
                Derivation::tensor_r(ccut_rec(f, g.premise(0), pos)?, g.premise(1).clone())
            } else {
                Derivation::tensor_r(g.premise(0).clone(), ccut_rec(f, g.premise(1), pos - split)?)
            }
        }
        Rule::Ax | Rule::UnitR => unreachable!("the cut position lies in an empty context"),
        Rule::Scut { .. } | Rule::Ccut { .. } => unreachable!("inputs are cut-free"),
    }
}

/// Replaces every cut node by the result of the admissible cut procedure,
/// innermost cuts first.
pub fn eliminate_cuts(d: &Derivation) -> Result<Derivation> {
    if d.is_cut_free() {
        return Ok(d.clone());
    }
    let premises = d
        .premises()
        .iter()
        .map(eliminate_cuts)
        .collect::<Result<Vec<_>>>()?;
    match d.rule() {
        Rule::Scut { .. } => scut_rec(&premises[0], &premises[1]),
        Rule::Ccut { prefix, .. } => ccut_rec(&premises[0], &premises[1], *prefix),
        Rule::Ax => Ok(d.clone()),
        Rule::UnitR => Ok(Derivation::unit_r()),
        Rule::Pass => Derivation::pass(premises[0].clone()),
        Rule::UnitL => Derivation::unit_l(premises[0].clone()),
        Rule::TensorL => Derivation::tensor_l(premises[0].clone()),
        Rule::LolliR => Derivation::lolli_r(premises[0].clone()),
        Rule::TensorR { .. } => Derivation::tensor_r(premises[0].clone(), premises[1].clone()),
        Rule::LolliL { .. } => Derivation::lolli_l(premises[0].clone(), premises[1].clone()),
    }
}
