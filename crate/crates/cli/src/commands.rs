use std::process::ExitCode;

use serde_json::{json, Map, Value};
use sknmill::equiv::{self, Strategy};
use sknmill::focused::{self, emb, focus, print_focused, FocusedDerivation, FocusedSearch, FocusedSequent, Mode, Phase};
use sknmill::hilbert::{self, HilbertDerivation};
use sknmill::render::{render_derivation, render_focused, Format};
use sknmill::seqcalc::{print_derivation, Derivation, Enumerator};
use sknmill::sexp::{parse_sexp, Sexp};
use sknmill::{parse_sequent, Error};

use crate::{Calculus, Cli, Command, RenderFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// What a command produced, before it is printed.
pub struct Outcome {
    command: &'static str,
    input: Vec<String>,
    status: u8,
    result: Value,
    /// Plain-text form of `result`.
    text: String,
    count: Option<Value>,
    derivations: Option<Vec<String>>,
    error: Option<String>,
}

impl Outcome {
    fn new(command: &'static str, input: Vec<String>) -> Self {
        Outcome { command, input, status: EXIT_OK, result: Value::Null, text: String::new(), count: None, derivations: None, error: None }
    }

    fn answer(mut self, result: impl Into<String>, status: u8) -> Self {
        let r = result.into();
        self.result = Value::String(r.clone());
        self.text = r;
        self.status = status;
        self
    }

    fn failed(mut self, e: Error) -> Self {
        self.status = match e {
            Error::Budget(_) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        self.error = Some(e.to_string());
        self
    }

    pub fn emit(self, cli: &Cli) -> ExitCode {
        if cli.json {
            let mut env = Map::new();
            env.insert("command".into(), json!(self.command));
            env.insert("input".into(), json!(self.input));
            env.insert("result".into(), self.result);
            if let Some(c) = self.count {
                env.insert("count".into(), c);
            }
            if let Some(ds) = self.derivations {
                env.insert("derivations".into(), json!(ds));
            }
            if let Some(e) = &self.error {
                env.insert("error".into(), json!(e));
            }
            println!("{}", Value::Object(env));
        } else if let Some(e) = &self.error {
            eprintln!("error: {e}");
        } else {
            print!("{}", self.text);
            if !self.text.is_empty() && !self.text.ends_with('\n') {
                println!();
            }
        }
        ExitCode::from(self.status)
    }
}

fn count_value(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |n| json!(n))
}

fn read_file(path: &str) -> Result<Sexp, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Syntax { pos: 0, msg: format!("{path}: {e}") })?;
    parse_sexp(&text)
}

/// The parsed contents of a FILE argument.
enum Input {
    Proof(Derivation),
    Focused(Mode, FocusedDerivation),
    Term(HilbertDerivation),
}

fn read_input(path: &str) -> Result<Input, Error> {
    let s = read_file(path)?;
    match s.as_list().and_then(|l| l.first()).and_then(Sexp::as_atom) {
        Some("proof") => Ok(Input::Proof(sknmill::seqcalc::derivation_from_sexp(&s)?)),
        Some("focused") | Some("naive") => {
            let (m, d) = focused::focused_from_sexp(&s)?;
            Ok(Input::Focused(m, d))
        }
        Some(_) => Ok(Input::Term(hilbert::hilbert_from_sexp(&s)?)),
        None => Err(Error::Syntax { pos: 0, msg: format!("{path}: expected a (proof ...), (focused ...) or term form") }),
    }
}

fn read_proof(path: &str) -> Result<Derivation, Error> {
    match read_input(path)? {
        Input::Proof(d) => Ok(d),
        _ => Err(Error::Mismatch(format!("{path}: expected a (proof ...) form"))),
    }
}

fn wrong_kind(path: &str, want: &str) -> Error {
    Error::Mismatch(format!("{path}: expected {want}"))
}

/// Focused normal form of a derivation or focused derivation.
fn canonical(input: Input, path: &str) -> Result<FocusedDerivation, Error> {
    match input {
        Input::Proof(d) => Ok(focus(&d)),
        Input::Focused(Mode::Tagged, d) if d.conclusion().phase == Phase::RI && !d.conclusion().tagged => Ok(d),
        Input::Focused(_, d) => {
            if d.conclusion().phase != Phase::RI || d.conclusion().tagged {
                return Err(wrong_kind(path, "a focused derivation of an untagged RI sequent"));
            }
            Ok(focus(&emb(&d)))
        }
        Input::Term(_) => Err(wrong_kind(path, "a derivation")),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Derive { seq } => {
            let out = Outcome::new("derive", vec![seq.clone()]);
            let found = parse_sequent(seq).and_then(|s| {
                let mut search = FocusedSearch::new(Mode::Tagged, cli.budget);
                search.derivations(&FocusedSequent::plain(Phase::RI, &s))
            });
            match found {
                Ok(ds) => match ds.first() {
                    Some(d) => {
                        let text = print_focused(d, Mode::Tagged);
                        let mut out = out.answer(text.clone(), EXIT_OK);
                        out.derivations = Some(vec![text]);
                        out
                    }
                    None => out.answer("not derivable", EXIT_NEGATIVE),
                },
                Err(e) => out.failed(e),
            }
        }
        Command::Enumerate { seq } => {
            let out = Outcome::new("enumerate", vec![seq.clone()]);
            let listed = parse_sequent(seq).and_then(|s| match cli.calculus {
                Calculus::Unfocused => Ok(Enumerator::new(cli.budget).all(&s)?.iter().map(print_derivation).collect::<Vec<_>>()),
                Calculus::Tagged | Calculus::Naive => {
                    let mode = if cli.calculus == Calculus::Naive { Mode::Naive } else { Mode::Tagged };
                    let ds = FocusedSearch::new(mode, cli.budget).derivations(&FocusedSequent::plain(Phase::RI, &s))?;
                    Ok(ds.iter().map(|d| print_focused(d, mode)).collect())
                }
            });
            match listed {
                Ok(ds) => {
                    let mut text = ds.join("\n");
                    if !ds.is_empty() {
                        text.push('\n');
                    }
                    let mut out = Outcome { text, ..out };
                    out.result = json!("ok");
                    out.count = Some(json!(ds.len()));
                    out.derivations = Some(ds);
                    out
                }
                Err(e) => out.failed(e),
            }
        }
        Command::Count { seq } => {
            let out = Outcome::new("count", vec![seq.clone()]);
            let n = parse_sequent(seq).and_then(|s| match cli.calculus {
                Calculus::Unfocused => Ok(Enumerator::new(cli.budget).all(&s)?.len() as u128),
                Calculus::Tagged => Ok(focused::count(&s, Mode::Tagged)),
                Calculus::Naive => Ok(focused::count(&s, Mode::Naive)),
            });
            match n {
                Ok(n) => {
                    let mut out = out.answer(n.to_string(), EXIT_OK);
                    out.result = count_value(n);
                    out.count = Some(count_value(n));
                    out
                }
                Err(e) => out.failed(e),
            }
        }
        Command::Decide { seq } => {
            let out = Outcome::new("decide", vec![seq.clone()]);
            match parse_sequent(seq) {
                Ok(s) if focused::is_derivable(&s) => out.answer("derivable", EXIT_OK),
                Ok(_) => out.answer("not derivable", EXIT_NEGATIVE),
                Err(e) => out.failed(e),
            }
        }
        Command::Normalize { file } => {
            let out = Outcome::new("normalize", vec![file.clone()]);
            let r = read_proof(file).and_then(|d| equiv::normalize_with(&d, Strategy::LeftmostInnermost, cli.budget));
            match r {
                Ok(n) => out.answer(print_derivation(&n), EXIT_OK),
                Err(e) => out.failed(e),
            }
        }
        Command::Eq { left, right } => {
            let out = Outcome::new("eq", vec![left.clone(), right.clone()]);
            match decide_eq(left, right) {
                Ok(true) => out.answer("equal", EXIT_OK),
                Ok(false) => out.answer("not equal", EXIT_NEGATIVE),
                Err(e) => out.failed(e),
            }
        }
        Command::Focus { file } => {
            let out = Outcome::new("focus", vec![file.clone()]);
            match read_proof(file) {
                Ok(d) => out.answer(print_focused(&focus(&d), Mode::Tagged), EXIT_OK),
                Err(e) => out.failed(e),
            }
        }
        Command::Emb { file } => {
            let out = Outcome::new("emb", vec![file.clone()]);
            match read_input(file) {
                Ok(Input::Focused(_, d)) => out.answer(print_derivation(&emb(&d)), EXIT_OK),
                Ok(_) => out.failed(wrong_kind(file, "a (focused ...) or (naive ...) form")),
                Err(e) => out.failed(e),
            }
        }
        Command::Hilbert2seq { file } => {
            let out = Outcome::new("hilbert2seq", vec![file.clone()]);
            let r = read_input(file).and_then(|i| match i {
                Input::Term(t) => hilbert::to_seqcalc(&t),
                _ => Err(wrong_kind(file, "a Hilbert term")),
            });
            match r {
                Ok(d) => out.answer(print_derivation(&d), EXIT_OK),
                Err(e) => out.failed(e),
            }
        }
        Command::Seq2hilbert { file } => {
            let out = Outcome::new("seq2hilbert", vec![file.clone()]);
            match read_proof(file).and_then(|d| hilbert::from_seqcalc(&d)) {
                Ok(t) => out.answer(hilbert::print_hilbert(&t), EXIT_OK),
                Err(e) => out.failed(e),
            }
        }
        Command::Render { file, format } => {
            let out = Outcome::new("render", vec![file.clone()]);
            let format = match format {
                RenderFormat::Ascii => Format::Ascii,
                RenderFormat::Latex => Format::Latex,
            };
            match read_input(file) {
                Ok(Input::Proof(d)) => out.answer(render_derivation(&d, format), EXIT_OK),
                Ok(Input::Focused(_, d)) => out.answer(render_focused(&d, format), EXIT_OK),
                Ok(Input::Term(_)) => out.failed(wrong_kind(file, "a derivation")),
                Err(e) => out.failed(e),
            }
        }
    }
}

fn decide_eq(left: &str, right: &str) -> Result<bool, Error> {
    match (read_input(left)?, read_input(right)?) {
        (Input::Term(a), Input::Term(b)) => hilbert::hilbert_equal(&a, &b),
        (Input::Term(_), _) | (_, Input::Term(_)) => {
            Err(Error::Mismatch("cannot compare a Hilbert term with a derivation".into()))
        }
        (a, b) => {
            let (a, b) = (canonical(a, left)?, canonical(b, right)?);
            if a.conclusion() != b.conclusion() {
                return Err(Error::Mismatch(format!(
                    "derivations of different sequents: {} vs {}",
                    a.conclusion().erase(),
                    b.conclusion().erase()
                )));
            }
            Ok(a == b)
        }
    }
}
