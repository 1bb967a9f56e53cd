//! Text form of focused derivations:
//! `(focused PHASE untagged "SEQUENT" TREE)` or
//! `(focused PHASE tagged K "SEQUENT" TREE)` where the last K context entries
//! carry tags. Naive derivations use the head `naive` and are never tagged.
//! Tree rule atoms: `lR li2ri uL tL p2li pass f2p ax uR tR lL`.

use super::{focused_premises, Entry, FocusedDerivation, FocusedRule, FocusedSequent, Mode, Phase};
use crate::error::{Error, Result};
use crate::formula::parse_sequent;
use crate::sexp::{parse_sexp, Sexp};

fn tree_to_sexp(d: &FocusedDerivation) -> Sexp {
    let mut items = vec![Sexp::atom(d.rule().name())];
    if let FocusedRule::TensorR { split } | FocusedRule::LolliL { split } = d.rule() {
        items.push(Sexp::atom(split.to_string()));
    }
    items.extend(d.premises().iter().map(tree_to_sexp));
    Sexp::list(items)
}

pub fn focused_to_sexp(d: &FocusedDerivation, mode: Mode) -> Sexp {
    let c = d.conclusion();
    let mut items = vec![
        Sexp::atom(if mode == Mode::Naive { "naive" } else { "focused" }),
        Sexp::atom(c.phase.name()),
    ];
    if c.tagged {
        items.push(Sexp::atom("tagged"));
        items.push(Sexp::atom(c.tagged_suffix().to_string()));
    } else {
        items.push(Sexp::atom("untagged"));
    }
    items.push(Sexp::Str(c.erase().to_string()));
    items.push(tree_to_sexp(d));
    Sexp::list(items)
}

pub fn print_focused(d: &FocusedDerivation, mode: Mode) -> String {
    focused_to_sexp(d, mode).to_string()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::syntax(0, msg)
}

fn tree_from_sexp(s: &Sexp, c: &FocusedSequent, mode: Mode) -> Result<FocusedDerivation> {
    let items = s.as_list().ok_or_else(|| bad(format!("expected a rule node, found {s}")))?;
    let head = items.first().and_then(Sexp::as_atom).ok_or_else(|| bad("rule node must start with a rule name"))?;
    let split = || -> Result<usize> { items.get(1).ok_or_else(|| bad(format!("`{head}` needs a split")))?.to_usize() };
    let (rule, subtrees) = match head {
        "lR" => (FocusedRule::LolliR, &items[1..]),
        "li2ri" => (FocusedRule::Li2Ri, &items[1..]),
        "uL" => (FocusedRule::UnitL, &items[1..]),
        "tL" => (FocusedRule::TensorL, &items[1..]),
        "p2li" => (FocusedRule::P2Li, &items[1..]),
        "pass" => (FocusedRule::Pass, &items[1..]),
        "f2p" => (FocusedRule::F2P, &items[1..]),
        "ax" => (FocusedRule::Ax, &items[1..]),
        "uR" => (FocusedRule::UnitR, &items[1..]),
        "tR" => (FocusedRule::TensorR { split: split()? }, &items[2..]),
        "lL" => (FocusedRule::LolliL { split: split()? }, &items[2..]),
        other => return Err(bad(format!("unknown focused rule `{other}`"))),
    };
    let premises = focused_premises(&rule, c, mode).map_err(Error::Mismatch)?;
    if premises.len() != subtrees.len() {
        return Err(bad(format!("`{head}` takes {} premises, found {}", premises.len(), subtrees.len())));
    }
    let children = subtrees
        .iter()
        .zip(&premises)
        .map(|(t, p)| tree_from_sexp(t, p, mode))
        .collect::<Result<Vec<_>>>()?;
    Ok(FocusedDerivation::from_parts(rule, children, c.clone()))
}

/// Reads a focused derivation and the mode named by its header. The tree is
/// checked against the rules of that mode while it is read.
pub fn focused_from_sexp(s: &Sexp) -> Result<(Mode, FocusedDerivation)> {
    let items = s.as_list().ok_or_else(|| bad("expected a (focused ...) form"))?;
    let mode = match items.first().and_then(Sexp::as_atom) {
        Some("focused") => Mode::Tagged,
        Some("naive") => Mode::Naive,
        _ => return Err(bad("expected a (focused ...) or (naive ...) form")),
    };
    let phase = items
        .get(1)
        .and_then(Sexp::as_atom)
        .and_then(Phase::from_name)
        .ok_or_else(|| bad("expected a phase RI, LI, P or F"))?;
    let (tagged, k, rest) = match items.get(2).and_then(Sexp::as_atom) {
        Some("untagged") => (false, 0, &items[3..]),
        Some("tagged") => {
            let k = items.get(3).ok_or_else(|| bad("`tagged` needs a count"))?.to_usize()?;
            (true, k, &items[4..])
        }
        _ => return Err(bad("expected `untagged` or `tagged K`")),
    };
    let [Sexp::Str(seq), tree] = rest else { return Err(bad("expected \"SEQUENT\" TREE")) };
    let plain = parse_sequent(seq)?;
    let n = plain.context.len();
    if k > n {
        return Err(bad("more tagged entries than context formulae"));
    }
    let context = plain
        .context
        .iter()
        .enumerate()
        .map(|(i, f)| Entry::new(f.clone(), i >= n - k))
        .collect();
    let c = FocusedSequent::new(phase, tagged, plain.stoup, context, plain.succedent);
    if let Some(why) = c.ill_formed(mode) {
        return Err(Error::mismatch(format!("{c}: {why}")));
    }
    Ok((mode, tree_from_sexp(tree, &c, mode)?))
}

pub fn parse_focused(text: &str) -> Result<(Mode, FocusedDerivation)> {
    focused_from_sexp(&parse_sexp(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focused::{is_valid_focused, search};
    use crate::formula::parse_sequent;

    #[test]
    fn round_trip_search_output() {
        for s in ["X | I * Y |- X * (I * Y)", "- | Y |- (X -o X) * Y", "X -o Y * Z | X |- Y * Z", "A' | B |- A' * B"] {
            for mode in [Mode::Tagged, Mode::Naive] {
                for d in search(&parse_sequent(s).unwrap(), mode) {
                    let text = print_focused(&d, mode);
                    let (m, back) = parse_focused(&text).unwrap();
                    assert_eq!((m, &back), (mode, &d));
                    assert_eq!(print_focused(&back, m), text);
                    assert!(is_valid_focused(&back, m));
                }
            }
        }
    }

    #[test]
    fn tagged_header_round_trips() {
        let d = search(&parse_sequent("- | Y |- (X -o X) * Y").unwrap(), Mode::Tagged).remove(0);
        // dig out the tagged sequent - | X• |-•P X inside the first tR premise
        let mut stack = vec![d];
        let mut found = None;
        while let Some(n) = stack.pop() {
            if n.conclusion().tagged && n.conclusion().tagged_suffix() == 1 && n.conclusion().phase == Phase::P {
                found = Some(n.clone());
            }
            stack.extend(n.premises().iter().cloned());
        }
        let sub = found.expect("a tagged P sequent");
        let text = print_focused(&sub, Mode::Tagged);
        assert!(text.starts_with("(focused P tagged 1 \"- | X |- X\""), "{text}");
        assert_eq!(parse_focused(&text).unwrap().1, sub);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_focused("(focused RI untagged \"X | |- X\" (ax))").is_err());
        assert!(parse_focused("(naive P tagged 1 \"- | X |- X\" (pass (p2li (f2p (ax)))))").is_err());
        assert!(parse_focused("(focused P tagged 0 \"- | X |- X\" (pass (p2li (f2p (ax)))))").is_err());
        assert!(parse_focused("(focused Q untagged \"X | |- X\" (ax))").is_err());
        assert!(parse_focused("(focused F untagged \"X | |- X\" (ax))").is_ok());
    }
}
