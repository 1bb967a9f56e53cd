//! Iterated invertible rules and the context implication-left rule.

use super::{ccut, Derivation};
use crate::error::{Error, Result};
use crate::formula::{Formula, Stoup};

/// From `S | Γ, Δ ⊢ C` derive `⟦S | Γ⟧⊗ | Δ ⊢ C` by one `uL` (when the stoup
/// is empty) followed by one `tL` per formula of Γ.
pub fn iter_left(stoup: &Stoup, gamma: &[Formula], d: &Derivation) -> Result<Derivation> {
    let c = d.conclusion();
    if &c.stoup != stoup || !c.context.starts_with(gamma) {
        return Err(Error::mismatch(format!("iter_left: {c} does not start with the given antecedent")));
    }
    let mut out = match stoup {
        None => Derivation::unit_l(d.clone())?,
        Some(_) => d.clone(),
    };
    for _ in gamma {
        out = Derivation::tensor_l(out)?;
    }
    Ok(out)
}

/// From `S | Γ, Δ ⊢ C` derive `S | Γ ⊢ ⟦Δ | C⟧⊸`, with `dlen = |Δ|`.
pub fn iter_lolli_right(d: &Derivation, dlen: usize) -> Result<Derivation> {
    if dlen > d.conclusion().context.len() {
        return Err(Error::mismatch("iter_lolli_right: context shorter than requested"));
    }
    let mut out = d.clone();
    for _ in 0..dlen {
        out = Derivation::lolli_r(out)?;
    }
    Ok(out)
}

/// Given `f : - | Γ ⊢ A` and `g : S | Δ0, B, Δ1 ⊢ C` with `B` at position
/// `pos`, derive `S | Δ0, A -o B, Γ, Δ1 ⊢ C` by cutting
/// `pass (lL (f, ax_B))` into `g`.
pub fn lolli_left_ctx(f: &Derivation, g: &Derivation, pos: usize) -> Result<Derivation> {
    let b = g
        .conclusion()
        .context
        .get(pos)
        .ok_or_else(|| Error::mismatch(format!("lolli_left_ctx: no context formula at {pos}")))?;
    let left = Derivation::pass(Derivation::lolli_l(f.clone(), Derivation::ax(b.clone()))?)?;
    ccut(&left, g, pos)
}
