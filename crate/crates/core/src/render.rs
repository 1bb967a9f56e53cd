//! Proof trees as ASCII art or as a standalone LaTeX document using
//! `bussproofs`.

use crate::focused::{FocusedDerivation, FocusedSequent};
use crate::formula::{Formula, Sequent, Stoup};
use crate::seqcalc::{Derivation, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Latex,
}

impl Format {
    pub fn from_name(s: &str) -> Option<Format> {
        match s {
            "ascii" => Some(Format::Ascii),
            "latex" => Some(Format::Latex),
            _ => None,
        }
    }
}

/// A proof tree stripped down to what is drawn.
struct Tree {
    rule: String,
    latex_rule: String,
    conclusion: String,
    latex_conclusion: String,
    premises: Vec<Tree>,
}

fn rule_label(rule: &Rule) -> String {
    match rule {
        Rule::TensorR { split } | Rule::LolliL { split } => format!("{} {split}", rule.name()),
        Rule::Scut { .. } => "scut".into(),
        Rule::Ccut { prefix, .. } => format!("ccut {prefix}"),
        _ => rule.name().into(),
    }
}

fn latex_rule_name(name: &str) -> String {
    match name {
        "ax" => r"\mathsf{ax}".into(),
        "pass" => r"\mathsf{pass}".into(),
        "lL" => r"{\multimap}\mathsf{L}".into(),
        "lR" => r"{\multimap}\mathsf{R}".into(),
        "uL" => r"\mathsf{IL}".into(),
        "uR" => r"\mathsf{IR}".into(),
        "tL" => r"{\otimes}\mathsf{L}".into(),
        "tR" => r"{\otimes}\mathsf{R}".into(),
        "scut" => r"\mathsf{scut}".into(),
        "ccut" => r"\mathsf{ccut}".into(),
        "li2ri" => r"\mathsf{LI2RI}".into(),
        "p2li" => r"\mathsf{P2LI}".into(),
        "f2p" => r"\mathsf{F2P}".into(),
        other => format!(r"\mathsf{{{other}}}"),
    }
}

pub fn latex_formula(f: &Formula) -> String {
    fn go(f: &Formula, prec: u8, out: &mut String) {
        match f {
            Formula::Atom(name) => {
                let base = name.trim_end_matches('\'');
                out.push_str(r"\mathit{");
                out.push_str(&base.replace('_', r"\_"));
                out.push('}');
                out.push_str(&name[base.len()..]);
            }
            Formula::Unit => out.push_str(r"\mathsf{I}"),
            Formula::Tensor(a, b) | Formula::Lolli(a, b) => {
                let tensor = matches!(f, Formula::Tensor(..));
                let parens = if tensor { prec >= 2 } else { prec >= 1 };
                if parens {
                    out.push('(');
                }
                go(a, 1, out);
                out.push_str(if tensor { r" \otimes " } else { r" \multimap " });
                go(b, if tensor { 2 } else { 0 }, out);
                if parens {
                    out.push(')');
                }
            }
        }
    }
    let mut out = String::new();
    go(f, 0, &mut out);
    out
}

fn latex_stoup(s: &Stoup) -> String {
    s.as_ref().map_or_else(|| "{-}".into(), latex_formula)
}

fn latex_sequent(s: &Sequent) -> String {
    let ctx: Vec<String> = s.context.iter().map(latex_formula).collect();
    format!(r"{} \mid {} \vdash {}", latex_stoup(&s.stoup), ctx.join(", "), latex_formula(&s.succedent))
}

fn latex_focused_sequent(s: &FocusedSequent) -> String {
    let ctx: Vec<String> = s
        .context
        .iter()
        .map(|e| {
            let f = latex_formula(&e.formula);
            if e.tagged {
                format!(r"{f}^{{\bullet}}")
            } else {
                f
            }
        })
        .collect();
    let tag = if s.tagged { r"^{\bullet}" } else { "" };
    format!(
        r"{} \mid {} \vdash{tag}_{{\mathsf{{{}}}}} {}",
        latex_stoup(&s.stoup),
        ctx.join(", "),
        s.phase.name(),
        latex_formula(&s.succedent)
    )
}

fn tree_of(d: &Derivation) -> Tree {
    let rule = rule_label(d.rule());
    Tree {
        latex_rule: latex_rule_name(d.rule().name()),
        rule,
        conclusion: d.conclusion().to_string(),
        latex_conclusion: latex_sequent(d.conclusion()),
        premises: d.premises().iter().map(tree_of).collect(),
    }
}

fn tree_of_focused(d: &FocusedDerivation) -> Tree {
    let name = d.rule().name();
    let rule = match d.rule() {
        crate::focused::FocusedRule::TensorR { split } | crate::focused::FocusedRule::LolliL { split } => {
            format!("{name} {split}")
        }
        _ => name.to_string(),
    };
    Tree {
        rule,
        latex_rule: latex_rule_name(name),
        conclusion: d.conclusion().to_string(),
        latex_conclusion: latex_focused_sequent(d.conclusion()),
        premises: d.premises().iter().map(tree_of_focused).collect(),
    }
}

/// Lines of equal display width; the conclusion is the last line and
/// starts at column `left`.
struct Block {
    lines: Vec<String>,
    width: usize,
    left: usize,
    concl_width: usize,
}

fn cols(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, width: usize) -> String {
    let mut out = s.to_string();
    out.extend(std::iter::repeat(' ').take(width.saturating_sub(cols(s))));
    out
}

const GAP: usize = 3;

fn layout(t: &Tree) -> Block {
    let blocks: Vec<Block> = t.premises.iter().map(layout).collect();
    // premises side by side, bottoms aligned
    let height = blocks.iter().map(|b| b.lines.len()).max().unwrap_or(0);
    let mut above: Vec<String> = vec![String::new(); height];
    let mut offset = 0;
    let mut span: Option<(usize, usize)> = None;
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            for line in above.iter_mut() {
                *line = pad(line, offset + GAP);
            }
            offset += GAP;
        }
        let shift = height - b.lines.len();
        for (row, line) in above.iter_mut().enumerate() {
            let piece = if row >= shift { b.lines[row - shift].as_str() } else { "" };
            *line = pad(line, offset);
            line.push_str(&pad(piece, b.width));
        }
        let (l, r) = (offset + b.left, offset + b.left + b.concl_width);
        span = Some(span.map_or((l, r), |(sl, sr)| (sl.min(l), sr.max(r))));
        offset += b.width;
    }
    let (pl, pr) = span.unwrap_or((0, 0));
    let concl_w = cols(&t.conclusion);
    let bar_w = (pr - pl).max(concl_w);
    // centre the bar under the premises' conclusions; shift everything right
    // if it would start before column 0
    let wanted = pl as isize - ((bar_w - (pr - pl)) / 2) as isize;
    let shift = (-wanted).max(0) as usize;
    let bar_left = (wanted + shift as isize) as usize;
    let mut lines: Vec<String> = above.iter().map(|l| format!("{}{l}", " ".repeat(shift))).collect();
    let bar = format!("{}{} {}", " ".repeat(bar_left), "-".repeat(bar_w), t.rule);
    let concl_left = bar_left + (bar_w - concl_w) / 2;
    let concl = format!("{}{}", " ".repeat(concl_left), t.conclusion);
    lines.push(bar);
    lines.push(concl);
    let width = lines.iter().map(|l| cols(l)).max().unwrap_or(0);
    let lines = lines.iter().map(|l| pad(l, width)).collect();
    Block { lines, width, left: concl_left, concl_width: concl_w }
}

fn ascii(t: &Tree) -> String {
    let b = layout(t);
    let mut out = String::new();
    for l in b.lines {
        out.push_str(l.trim_end());
        out.push('\n');
    }
    out
}

fn latex_body(t: &Tree, out: &mut String) {
    if t.premises.is_empty() {
        out.push_str("\\AxiomC{}\n");
    }
    for p in &t.premises {
        latex_body(p, out);
    }
    out.push_str(&format!("\\RightLabel{{${}$}}\n", t.latex_rule));
    let inf = match t.premises.len() {
        0 | 1 => "UnaryInfC",
        2 => "BinaryInfC",
        _ => "TrinaryInfC",
    };
    out.push_str(&format!("\\{inf}{{${}$}}\n", t.latex_conclusion));
}

fn latex(t: &Tree) -> String {
    let mut out = String::from(
        "\\documentclass[varwidth=\\maxdimen]{standalone}\n\\usepackage{amssymb}\n\\usepackage{bussproofs}\n\\begin{document}\n\\begin{prooftree}\n",
    );
    latex_body(t, &mut out);
    out.push_str("\\end{prooftree}\n\\end{document}\n");
    out
}

fn render_tree(t: &Tree, format: Format) -> String {
    match format {
        Format::Ascii => ascii(t),
        Format::Latex => latex(t),
    }
}

pub fn render_derivation(d: &Derivation, format: Format) -> String {
    render_tree(&tree_of(d), format)
}

pub fn render_focused(d: &FocusedDerivation, format: Format) -> String {
    render_tree(&tree_of_focused(d), format)
}
