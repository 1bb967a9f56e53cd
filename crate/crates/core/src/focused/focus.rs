//! `emb` erases phases and tags. `focus` goes the other way by replacing
//! each unfocused rule with an admissible rule on RI-phase derivations.
//!
//! The interesting admissible rule is `tensor_r_ri`: its first premise may
//! end in `lR` steps, whose introduced formulae (the extra context Γ′) are
//! exactly the ones that become tagged once the `tR` is finally placed.

use super::{
    count as count_focused, Entry, FocusedDerivation, FocusedRule, FocusedSequent, Mode, Phase,
};
use crate::error::{Error, Result};
use crate::formula::{Formula, Sequent};
use crate::seqcalc::{eliminate_cuts, Derivation, Rule};

type FD = FocusedDerivation;

fn mk(rule: FocusedRule, premises: Vec<FD>, conclusion: FocusedSequent) -> FD {
    FD::from_parts(rule, premises, conclusion)
}

// -- rule constructors computing conclusions; inputs are assumed to fit --

fn lolli_r(f: FD) -> FD {
    let c = f.conclusion();
    let (a, rest) = c.context.split_last().expect("lR premise has a nonempty context");
    let concl = FocusedSequent::new(
        Phase::RI,
        c.tagged,
        c.stoup.clone(),
        rest.to_vec(),
        Formula::lolli(a.formula.clone(), c.succedent.clone()),
    );
    mk(FocusedRule::LolliR, vec![f], concl)
}

fn switch(rule: FocusedRule, to: Phase, f: FD) -> FD {
    let concl = f.conclusion().with_phase(to);
    mk(rule, vec![f], concl)
}

fn li2ri(f: FD) -> FD {
    switch(FocusedRule::Li2Ri, Phase::RI, f)
}

fn p2li(f: FD) -> FD {
    switch(FocusedRule::P2Li, Phase::LI, f)
}

fn f2p(f: FD) -> FD {
    switch(FocusedRule::F2P, Phase::P, f)
}

fn unit_l(h: FD) -> FD {
    let c = h.conclusion();
    let concl = FocusedSequent::new(Phase::LI, false, Some(Formula::Unit), c.context.clone(), c.succedent.clone());
    mk(FocusedRule::UnitL, vec![h], concl)
}

fn tensor_l(h: FD) -> FD {
    let c = h.conclusion();
    let a = c.stoup.clone().expect("tL premise has a stoup");
    let concl = FocusedSequent::new(
        Phase::LI,
        false,
        Some(Formula::tensor(a, c.context[0].formula.clone())),
        c.context[1..].to_vec(),
        c.succedent.clone(),
    );
    mk(FocusedRule::TensorL, vec![h], concl)
}

/// Untagged `pass`.
fn pass(h: FD) -> FD {
    let c = h.conclusion();
    let mut ctx = vec![Entry::new(c.stoup.clone().expect("pass premise has a stoup"), false)];
    ctx.extend(c.context.iter().cloned());
    let concl = FocusedSequent::new(Phase::P, false, None, ctx, c.succedent.clone());
    mk(FocusedRule::Pass, vec![h], concl)
}

fn unit_r_f() -> FD {
    mk(FocusedRule::UnitR, vec![], FocusedSequent::new(Phase::F, false, None, vec![], Formula::Unit))
}

/// Untagged `lL` in phase F.
fn lolli_l(f: FD, h: FD) -> FD {
    let (fc, hc) = (f.conclusion(), h.conclusion());
    let stoup = Formula::lolli(fc.succedent.clone(), hc.stoup.clone().expect("lL second premise has a stoup"));
    let ctx = fc.context.iter().chain(&hc.context).cloned().collect();
    let concl = FocusedSequent::new(Phase::F, false, Some(stoup), ctx, hc.succedent.clone());
    let split = fc.context.len();
    mk(FocusedRule::LolliL { split }, vec![f, h], concl)
}

// -- admissible RI rules --

/// `A | |-_RI A`, the η-long identity.
pub fn ax_ri(a: &Formula) -> FD {
    match a {
        Formula::Atom(_) => {
            let c = FocusedSequent::new(Phase::F, false, Some(a.clone()), vec![], a.clone());
            li2ri(p2li(f2p(mk(FocusedRule::Ax, vec![], c))))
        }
        Formula::Unit => il(ir_ri()),
        Formula::Tensor(x, y) => tl(tensor_now_or_permute(0, &ax_ri(x), &pass_rec(ax_ri(y)))),
        Formula::Lolli(x, y) => lolli_r(lolli_l_rec(pass_rec(ax_ri(x)), ax_ri(y))),
    }
}

/// `- | |-_RI I`
pub fn ir_ri() -> FD {
    li2ri(p2li(f2p(unit_r_f())))
}

fn il(f: FD) -> FD {
    match f.rule() {
        FocusedRule::LolliR => lolli_r(il(f.premise(0).clone())),
        FocusedRule::Li2Ri => li2ri(unit_l(f.premise(0).clone())),
        r => unreachable!("RI derivation ends in {}", r.name()),
    }
}

fn tl(f: FD) -> FD {
    match f.rule() {
        FocusedRule::LolliR => lolli_r(tl(f.premise(0).clone())),
        FocusedRule::Li2Ri => li2ri(tensor_l(f.premise(0).clone())),
        r => unreachable!("RI derivation ends in {}", r.name()),
    }
}

fn pass_rec(f: FD) -> FD {
    match f.rule() {
        FocusedRule::LolliR => lolli_r(pass_rec(f.premise(0).clone())),
        FocusedRule::Li2Ri => li2ri(p2li(pass(f.premise(0).clone()))),
        r => unreachable!("RI derivation ends in {}", r.name()),
    }
}

fn lolli_l_rec(f: FD, g: FD) -> FD {
    match g.rule() {
        FocusedRule::LolliR => lolli_r(lolli_l_rec(f, g.premise(0).clone())),
        FocusedRule::Li2Ri => li2ri(p2li(f2p(lolli_l(f, g.premise(0).clone())))),
        r => unreachable!("RI derivation ends in {}", r.name()),
    }
}

fn require_ri_untagged(f: &FD, what: &str) -> Result<()> {
    let c = f.conclusion();
    if c.phase != Phase::RI || c.tagged {
        return Err(Error::mismatch(format!("{what}: expected an untagged RI derivation, got {c}")));
    }
    Ok(())
}

/// From `- | Γ ⊢_RI C` derive `I | Γ ⊢_RI C`.
pub fn il_ri(f: &FD) -> Result<FD> {
    require_ri_untagged(f, "il_ri")?;
    if f.conclusion().stoup.is_some() {
        return Err(Error::mismatch("il_ri: premise stoup must be empty"));
    }
    Ok(il(f.clone()))
}

/// From `A | B, Γ ⊢_RI C` derive `A ⊗ B | Γ ⊢_RI C`.
pub fn tl_ri(f: &FD) -> Result<FD> {
    require_ri_untagged(f, "tl_ri")?;
    let c = f.conclusion();
    if c.stoup.is_none() || c.context.is_empty() {
        return Err(Error::mismatch("tl_ri: premise needs a stoup and a nonempty context"));
    }
    Ok(tl(f.clone()))
}

/// From `A | Γ ⊢_RI C` derive `- | A, Γ ⊢_RI C`.
pub fn pass_ri(f: &FD) -> Result<FD> {
    require_ri_untagged(f, "pass_ri")?;
    if f.conclusion().stoup.is_none() {
        return Err(Error::mismatch("pass_ri: premise stoup is empty"));
    }
    Ok(pass_rec(f.clone()))
}

/// From `- | Γ ⊢_RI A` and `B | Δ ⊢_RI C` derive `A -o B | Γ, Δ ⊢_RI C`.
pub fn lolli_l_ri(f: &FD, g: &FD) -> Result<FD> {
    require_ri_untagged(f, "lolli_l_ri")?;
    require_ri_untagged(g, "lolli_l_ri")?;
    if f.conclusion().stoup.is_some() || g.conclusion().stoup.is_none() {
        return Err(Error::mismatch("lolli_l_ri: premise stoups do not fit"));
    }
    Ok(lolli_l_rec(f.clone(), g.clone()))
}

/// From `S | Γ, Γ′ ⊢_RI A` and `- | Δ ⊢_RI B` derive
/// `S | Γ, Δ ⊢_RI ⟦Γ′ | A⟧⊸ ⊗ B`.
pub fn tensor_r_ri(gamma_prime: &[Formula], f: &FD, g: &FD) -> Result<FD> {
    require_ri_untagged(f, "tensor_r_ri")?;
    require_ri_untagged(g, "tensor_r_ri")?;
    let fc = f.conclusion();
    let ends_with = fc.context.len() >= gamma_prime.len()
        && fc.context[fc.context.len() - gamma_prime.len()..]
            .iter()
            .zip(gamma_prime)
            .all(|(e, a)| &e.formula == a);
    if !ends_with {
        return Err(Error::mismatch("tensor_r_ri: first premise context does not end in Γ′"));
    }
    if g.conclusion().stoup.is_some() {
        return Err(Error::mismatch("tensor_r_ri: second premise stoup must be empty"));
    }
    Ok(tensor_now_or_permute(gamma_prime.len(), f, g))
}

/// `n_new` is |Γ′|: the trailing context entries of `f` that will be tagged.
fn tensor_now_or_permute(n_new: usize, f: &FD, g: &FD) -> FD {
    match f.rule() {
        FocusedRule::LolliR => tensor_now_or_permute(n_new + 1, f.premise(0), g),
        FocusedRule::Li2Ri => li2ri(tensor_li(n_new, f.premise(0), g)),
        r => unreachable!("RI derivation ends in {}", r.name()),
    }
}

fn tensor_li(n_new: usize, h: &FD, g: &FD) -> FD {
    match h.rule() {
        FocusedRule::UnitL => unit_l(tensor_li(n_new, h.premise(0), g)),
        FocusedRule::TensorL => tensor_l(tensor_li(n_new, h.premise(0), g)),
        FocusedRule::P2Li => tensor_p(n_new, h.premise(0), g),
        r => unreachable!("LI derivation ends in {}", r.name()),
    }
}

/// Result is in phase LI.
fn tensor_p(n_new: usize, k: &FD, g: &FD) -> FD {
    let n_old = k.conclusion().context.len() - n_new;
    match k.rule() {
        FocusedRule::Pass if n_old > 0 => p2li(pass(tensor_li(n_new, k.premise(0), g))),
        FocusedRule::F2P => {
            let m = k.premise(0);
            match m.rule() {
                FocusedRule::LolliL { split } if *split <= n_old => {
                    p2li(f2p(lolli_l(m.premise(0).clone(), tensor_li(n_new, m.premise(1), g))))
                }
                _ => tensor_here(n_new, k, g),
            }
        }
        _ => tensor_here(n_new, k, g),
    }
}

/// Places the `tR` directly below `k`, whose new formulae get tagged.
fn tensor_here(n_new: usize, k: &FD, g: &FD) -> FD {
    let kc = k.conclusion();
    let n_old = kc.context.len() - n_new;
    let mut first = li2ri(p2li(retag(k, n_old)));
    for _ in 0..n_new {
        first = lolli_r(first);
    }
    let gc = g.conclusion();
    let ctx = kc.context[..n_old].iter().chain(&gc.context).cloned().collect();
    let succ = Formula::tensor(first.conclusion().succedent.clone(), gc.succedent.clone());
    let concl = FocusedSequent::new(Phase::F, false, kc.stoup.clone(), ctx, succ);
    p2li(f2p(mk(FocusedRule::TensorR { split: n_old }, vec![first, g.clone()], concl)))
}

/// The same P-phase derivation under a tagged turnstile with its context
/// entries from `n_old` on tagged. Premises of pass and of every F rule are
/// untagged, so only the two bottom conclusions change.
fn retag(k: &FD, n_old: usize) -> FD {
    let tag = |c: &FocusedSequent| {
        let mut c = c.clone();
        c.tagged = true;
        for (i, e) in c.context.iter_mut().enumerate() {
            e.tagged = i >= n_old;
        }
        c
    };
    match k.rule() {
        FocusedRule::Pass => mk(FocusedRule::Pass, k.premises().to_vec(), tag(k.conclusion())),
        FocusedRule::F2P => {
            let m = k.premise(0);
            let m = mk(m.rule().clone(), m.premises().to_vec(), tag(m.conclusion()));
            mk(FocusedRule::F2P, vec![m], tag(k.conclusion()))
        }
        r => unreachable!("P derivation ends in {}", r.name()),
    }
}

/// The canonical focused representative of a derivation's ≗-class. Cut
/// nodes are eliminated first. Panics on an invalid derivation.
pub fn focus(d: &Derivation) -> FD {
    if !d.is_cut_free() {
        return focus(&eliminate_cuts(d).expect("focus expects a valid derivation"));
    }
    let p = |i: usize| focus(d.premise(i));
    match d.rule() {
        Rule::Ax => ax_ri(&d.conclusion().succedent),
        Rule::UnitR => ir_ri(),
        Rule::Pass => pass_rec(p(0)),
        Rule::UnitL => il(p(0)),
        Rule::TensorL => tl(p(0)),
        Rule::LolliR => lolli_r(p(0)),
        Rule::TensorR { .. } => tensor_now_or_permute(0, &p(0), &p(1)),
        Rule::LolliL { .. } => lolli_l_rec(p(0), p(1)),
        Rule::Scut { .. } | Rule::Ccut { .. } => unreachable!("cuts were eliminated"),
    }
}

/// Erases phases, switches and tags.
pub fn emb(d: &FD) -> Derivation {
    let ps: Vec<Derivation> = d.premises().iter().map(emb).collect();
    let rule = match d.rule() {
        FocusedRule::Li2Ri | FocusedRule::P2Li | FocusedRule::F2P => return ps.into_iter().next().unwrap(),
        FocusedRule::LolliR => Rule::LolliR,
        FocusedRule::UnitL => Rule::UnitL,
        FocusedRule::TensorL => Rule::TensorL,
        FocusedRule::Pass => Rule::Pass,
        FocusedRule::Ax => Rule::Ax,
        FocusedRule::UnitR => Rule::UnitR,
        FocusedRule::TensorR { split } => Rule::TensorR { split: *split },
        FocusedRule::LolliL { split } => Rule::LolliL { split: *split },
    };
    Derivation::from_parts(rule, ps, d.conclusion().erase())
}

/// Number of maps `a → b` in the free skew monoidal closed category.
pub fn count_maps(a: &Formula, b: &Formula) -> u128 {
    count_focused(&Sequent::new(Some(a.clone()), vec![], b.clone()), Mode::Tagged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focused::{is_valid_focused, search, validate_focused};
    use crate::formula::{parse_formula, parse_sequent};
    use crate::seqcalc::{enumerate_all, is_valid};

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn ax_ri_is_valid() {
        for a in ["X", "I", "X * Y", "X -o Y", "(X -o I) * (I * Y)", "(X * Y) -o Z -o W"] {
            let a = parse_formula(a).unwrap();
            let d = ax_ri(&a);
            validate_focused(&d, Mode::Tagged).unwrap();
            assert_eq!(d.conclusion(), &FocusedSequent::plain(Phase::RI, &Sequent::new(Some(a.clone()), vec![], a)));
        }
    }

    #[test]
    fn rho_via_tensor_r_ri() {
        let x = Formula::atom("X");
        let d = tensor_r_ri(&[], &ax_ri(&x), &ir_ri()).unwrap();
        assert!(is_valid_focused(&d, Mode::Tagged));
        assert_eq!(d.conclusion().erase(), seq("X | |- X * I"));
        assert_eq!(search(&seq("X | |- X * I"), Mode::Tagged), vec![d]);
    }

    #[test]
    fn tensor_r_ri_grows_gamma_prime() {
        // - | Y |- (X -o X) * Y needs the new X passivated under the tag.
        let f = lolli_r(pass_rec(ax_ri(&Formula::atom("X"))));
        let g = pass_rec(ax_ri(&Formula::atom("Y")));
        let d = tensor_r_ri(&[], &f, &g).unwrap();
        validate_focused(&d, Mode::Tagged).unwrap();
        assert_eq!(search(&seq("- | Y |- (X -o X) * Y"), Mode::Tagged), vec![d.clone()]);

        // same result with Γ′ given explicitly
        let d2 = tensor_r_ri(&[Formula::atom("X")], &pass_rec(ax_ri(&Formula::atom("X"))), &g).unwrap();
        assert_eq!(d2, d);
        assert!(tensor_r_ri(&[Formula::atom("Y")], &f, &g).is_err());
    }

    #[test]
    fn admissible_rules_reject_bad_input() {
        let x = ax_ri(&Formula::atom("X"));
        assert!(il_ri(&x).is_err());
        assert!(tl_ri(&x).is_err());
        assert!(pass_ri(&ir_ri()).is_err());
        assert!(lolli_l_ri(&x, &x).is_err());
        assert!(pass_ri(&x).is_ok());
    }

    #[test]
    fn focus_emb_round_trip() {
        for s in [
            "X | I * Y |- X * (I * Y)",
            "X | I, Y |- (X * I) * Y",
            "I -o (X -o Y) | I, X |- Y",
            "I -o I | Z |- (I -o I) * Z",
            "X -o Y | Z |- (X -o Y) * Z",
            "X -o Y * Z | X |- Y * Z",
            "(X * Y) -o Z | |- X -o Y -o Z",
        ] {
            let ds = search(&seq(s), Mode::Tagged);
            assert!(!ds.is_empty(), "{s}");
            for d in ds {
                let e = emb(&d);
                assert!(is_valid(&e));
                assert_eq!(e.conclusion(), &seq(s));
                assert_eq!(focus(&e), d, "{s}");
            }
        }
    }

    #[test]
    fn focus_lands_in_search_output() {
        for s in ["- | X, Y |- X * Y", "X * Y | Z |- X * (Y * Z)", "- | X -o Y, X |- Y", "I | |- X -o I * X"] {
            let found = search(&seq(s), Mode::Tagged);
            for d in enumerate_all(&seq(s)) {
                let f = focus(&d);
                validate_focused(&f, Mode::Tagged).unwrap();
                assert!(found.contains(&f), "{s}: {d:?}");
            }
        }
    }

    #[test]
    fn both_pair_derivations_focus_alike() {
        let ds = enumerate_all(&seq("- | X, Y |- X * Y"));
        assert_eq!(ds.len(), 2);
        assert_eq!(focus(&ds[0]), focus(&ds[1]));
    }

    #[test]
    fn counting_maps() {
        let f = |s: &str| parse_formula(s).unwrap();
        assert_eq!(count_maps(&f("X"), &f("X")), 1);
        assert_eq!(count_maps(&f("X"), &f("I * X")), 0);
        assert_eq!(count_maps(&f("I * X"), &f("X")), 1);
    }
}
