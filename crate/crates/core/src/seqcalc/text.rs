//! Text form of unfocused derivations:
//! `(proof "SEQUENT" TREE)` where TREE uses the rule atoms
//! `ax pass lL lR uL tL uR tR scut ccut`, e.g. `(proof "X | |- X * I" (tR 0 (ax) (uR)))`.
//! Premise sequents are not stored; they are recomputed from the end sequent.

use super::{premise_sequents, Derivation, Rule};
use crate::error::{Error, Result};
use crate::formula::{parse_sequent, Sequent};
use crate::sexp::{parse_sexp, Sexp};

pub(crate) fn tree_to_sexp(d: &Derivation) -> Sexp {
    let mut items = vec![Sexp::atom(d.rule().name())];
    match d.rule() {
        Rule::LolliL { split } | Rule::TensorR { split } => items.push(Sexp::atom(split.to_string())),
        Rule::Scut { split, cut } => {
            items.push(Sexp::atom(split.to_string()));
            items.push(Sexp::formula(cut));
        }
        Rule::Ccut { prefix, split, cut } => {
            items.push(Sexp::atom(prefix.to_string()));
            items.push(Sexp::atom(split.to_string()));
            items.push(Sexp::formula(cut));
        }
        _ => {}
    }
    items.extend(d.premises().iter().map(tree_to_sexp));
    Sexp::list(items)
}

pub fn derivation_to_sexp(d: &Derivation) -> Sexp {
    Sexp::list(vec![
        Sexp::atom("proof"),
        Sexp::Str(d.conclusion().to_string()),
        tree_to_sexp(d),
    ])
}

pub fn print_derivation(d: &Derivation) -> String {
    derivation_to_sexp(d).to_string()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::syntax(0, msg)
}

/// Splits a tree node into its rule and premise subtrees.
fn read_rule(s: &Sexp) -> Result<(Rule, &[Sexp])> {
    let items = s.as_list().ok_or_else(|| bad(format!("expected a rule node, found {s}")))?;
    let head = items
        .first()
        .and_then(Sexp::as_atom)
        .ok_or_else(|| bad("rule node must start with a rule name"))?;
    let args = &items[1..];
    let need = |n: usize| -> Result<()> {
        if args.len() < n {
            Err(bad(format!("`{head}` is missing arguments")))
        } else {
            Ok(())
        }
    };
    let (rule, rest) = match head {
        "ax" => (Rule::Ax, args),
        "uR" => (Rule::UnitR, args),
        "pass" => (Rule::Pass, args),
        "lR" => (Rule::LolliR, args),
        "uL" => (Rule::UnitL, args),
        "tL" => (Rule::TensorL, args),
        "tR" => {
            need(1)?;
            (Rule::TensorR { split: args[0].to_usize()? }, &args[1..])
        }
        "lL" => {
            need(1)?;
            (Rule::LolliL { split: args[0].to_usize()? }, &args[1..])
        }
        "scut" => {
            need(2)?;
            (Rule::Scut { split: args[0].to_usize()?, cut: args[1].to_formula()? }, &args[2..])
        }
        "ccut" => {
            need(3)?;
            let rule = Rule::Ccut {
                prefix: args[0].to_usize()?,
                split: args[1].to_usize()?,
                cut: args[2].to_formula()?,
            };
            (rule, &args[3..])
        }
        other => return Err(bad(format!("unknown rule `{other}`"))),
    };
    Ok((rule, rest))
}

pub(crate) fn tree_from_sexp(s: &Sexp, conclusion: &Sequent) -> Result<Derivation> {
    let (rule, subtrees) = read_rule(s)?;
    let premises = premise_sequents(&rule, conclusion)?;
    if premises.len() != subtrees.len() {
        return Err(bad(format!(
            "`{}` takes {} premises, found {}",
            rule.name(),
            premises.len(),
            subtrees.len()
        )));
    }
    let children = subtrees
        .iter()
        .zip(&premises)
        .map(|(t, p)| tree_from_sexp(t, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Derivation::from_parts(rule, children, conclusion.clone()))
}

pub fn derivation_from_sexp(s: &Sexp) -> Result<Derivation> {
    match s.as_list() {
        Some([head, Sexp::Str(seq), tree]) if head.as_atom() == Some("proof") => {
            tree_from_sexp(tree, &parse_sequent(seq)?)
        }
        _ => Err(bad("expected (proof \"SEQUENT\" TREE)")),
    }
}

pub fn parse_derivation(text: &str) -> Result<Derivation> {
    derivation_from_sexp(&parse_sexp(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_sequent;
    use crate::seqcalc::{enumerate_all, is_valid};

    #[test]
    fn rho_golden() {
        let text = "(proof \"X | |- X * I\" (tR 0 (ax) (uR)))";
        let d = parse_derivation(text).unwrap();
        assert!(is_valid(&d));
        assert_eq!(print_derivation(&d), text);
    }

    #[test]
    fn round_trips_enumerated() {
        for s in ["X * Y | Z |- X * (Y * Z)", "I -o (X -o Y) | I, X |- Y", "X' | Y |- X' * Y"] {
            for d in enumerate_all(&parse_sequent(s).unwrap()) {
                let text = print_derivation(&d);
                let back = parse_derivation(&text).unwrap();
                assert_eq!(back, d);
                assert_eq!(print_derivation(&back), text);
            }
        }
    }

    #[test]
    fn cut_nodes_round_trip() {
        let f = Derivation::tensor_r(Derivation::ax(crate::formula::Formula::atom("X")), Derivation::unit_r()).unwrap();
        let g = enumerate_all(&parse_sequent("X * I | |- X * I").unwrap()).remove(0);
        let d = Derivation::scut_node(f.clone(), g).unwrap();
        let text = print_derivation(&d);
        assert!(text.contains("(scut 0 \"X * I\""));
        assert_eq!(parse_derivation(&text).unwrap(), d);

        let h = enumerate_all(&parse_sequent("- | X * I, Y |- (X * I) * Y").unwrap()).remove(0);
        let p = Derivation::pass(f).unwrap();
        let c = Derivation::ccut_node(p, h, 0).unwrap();
        let text = print_derivation(&c);
        assert_eq!(parse_derivation(&text).unwrap(), c);
    }

    #[test]
    fn rejects_ill_fitting_trees() {
        assert!(parse_derivation("(proof \"X | |- Y\" (ax))").is_err());
        assert!(parse_derivation("(proof \"X | |- X\" (ax (ax)))").is_err());
        assert!(parse_derivation("(proof \"- | X |- X\" (uL (ax)))").is_err());
        assert!(parse_derivation("(proof \"X | |- X * I\" (tR 3 (ax) (uR)))").is_err());
        assert!(parse_derivation("(proof \"X | |- X\" (frob))").is_err());
        assert!(parse_derivation("(derivation \"X | |- X\" (ax))").is_err());
    }
}
