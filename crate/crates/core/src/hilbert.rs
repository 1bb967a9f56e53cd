//! Hilbert-style terms for maps `A ⇒ B` of the free skew monoidal closed
//! category, their translation to and from sequent derivations, and equality
//! of terms decided through focusing.
//!
//! Text form: `(id A)`, `(comp F G)`, `(tensor F G)`, `(lolli F G)`,
//! `(lam A)`, `(rho A)`, `(alpha A B C)`, `(pi F)`, `(pi-inv F)`. `comp F G`
//! runs `F` first. Compound formulae are quoted.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::focused::focus;
use crate::formula::{encode_antecedent, Formula};
use crate::seqcalc::{eliminate_cuts, scut, Derivation, Rule};
use crate::sexp::{parse_sexp, Sexp};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Id(Formula),
    Comp(HilbertDerivation, HilbertDerivation),
    Tensor(HilbertDerivation, HilbertDerivation),
    /// Contravariant in the first argument: `C ⇒ A` and `B ⇒ D` give
    /// `A -o B ⇒ C -o D`.
    Lolli(HilbertDerivation, HilbertDerivation),
    Lam(Formula),
    Rho(Formula),
    Alpha(Formula, Formula, Formula),
    Pi(HilbertDerivation),
    PiInv(HilbertDerivation),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Node {
    term: Term,
    source: Formula,
    target: Formula,
}

/// A term together with its cached source and target.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertDerivation(Arc<Node>);

impl HilbertDerivation {
    fn make(term: Term, source: Formula, target: Formula) -> Self {
        HilbertDerivation(Arc::new(Node { term, source, target }))
    }

    pub fn term(&self) -> &Term {
        &self.0.term
    }

    pub fn source(&self) -> &Formula {
        &self.0.source
    }

    pub fn target(&self) -> &Formula {
        &self.0.target
    }

    pub fn id(a: Formula) -> Self {
        Self::make(Term::Id(a.clone()), a.clone(), a)
    }

    /// Not checked here; see [`validate_hilbert`] and [`Self::then`].
    pub fn comp(f: HilbertDerivation, g: HilbertDerivation) -> Self {
        let (s, t) = (f.source().clone(), g.target().clone());
        Self::make(Term::Comp(f, g), s, t)
    }

    /// Checked composition.
    pub fn then(self, g: HilbertDerivation) -> Result<Self> {
        if self.target() != g.source() {
            return Err(Error::mismatch(format!(
                "comp: target {} does not match source {}",
                self.target(),
                g.source()
            )));
        }
        Ok(Self::comp(self, g))
    }

    pub fn tensor(f: HilbertDerivation, g: HilbertDerivation) -> Self {
        let s = Formula::tensor(f.source().clone(), g.source().clone());
        let t = Formula::tensor(f.target().clone(), g.target().clone());
        Self::make(Term::Tensor(f, g), s, t)
    }

    pub fn lolli(f: HilbertDerivation, g: HilbertDerivation) -> Self {
        let s = Formula::lolli(f.target().clone(), g.source().clone());
        let t = Formula::lolli(f.source().clone(), g.target().clone());
        Self::make(Term::Lolli(f, g), s, t)
    }

    /// `I * A ⇒ A`
    pub fn lam(a: Formula) -> Self {
        Self::make(Term::Lam(a.clone()), Formula::tensor(Formula::Unit, a.clone()), a)
    }

    /// `A ⇒ A * I`
    pub fn rho(a: Formula) -> Self {
        Self::make(Term::Rho(a.clone()), a.clone(), Formula::tensor(a, Formula::Unit))
    }

    /// `(A * B) * C ⇒ A * (B * C)`
    pub fn alpha(a: Formula, b: Formula, c: Formula) -> Self {
        let s = Formula::tensor(Formula::tensor(a.clone(), b.clone()), c.clone());
        let t = Formula::tensor(a.clone(), Formula::tensor(b.clone(), c.clone()));
        Self::make(Term::Alpha(a, b, c), s, t)
    }

    /// From `A * B ⇒ C` to `A ⇒ B -o C`.
    pub fn pi(f: HilbertDerivation) -> Result<Self> {
        let (a, b) = f
            .source()
            .as_tensor()
            .ok_or_else(|| Error::mismatch(format!("pi: source {} is not a tensor", f.source())))?;
        let (a, t) = (a.clone(), Formula::lolli(b.clone(), f.target().clone()));
        Ok(Self::make(Term::Pi(f), a, t))
    }

    /// From `A ⇒ B -o C` to `A * B ⇒ C`.
    pub fn pi_inv(f: HilbertDerivation) -> Result<Self> {
        let (b, c) = f
            .target()
            .as_lolli()
            .ok_or_else(|| Error::mismatch(format!("pi-inv: target {} is not an implication", f.target())))?;
        let (s, c) = (Formula::tensor(f.source().clone(), b.clone()), c.clone());
        Ok(Self::make(Term::PiInv(f), s, c))
    }

    pub fn size(&self) -> usize {
        1 + match self.term() {
            Term::Comp(f, g) | Term::Tensor(f, g) | Term::Lolli(f, g) => f.size() + g.size(),
            Term::Pi(f) | Term::PiInv(f) => f.size(),
            _ => 0,
        }
    }
}

impl fmt::Debug for HilbertDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", hilbert_to_sexp(self))
    }
}

impl fmt::Display for HilbertDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", hilbert_to_sexp(self))
    }
}

/// Checks every composition; the other constructors are typed by
/// construction.
pub fn validate_hilbert(t: &HilbertDerivation) -> bool {
    match t.term() {
        Term::Comp(f, g) => f.target() == g.source() && validate_hilbert(f) && validate_hilbert(g),
        Term::Tensor(f, g) | Term::Lolli(f, g) => validate_hilbert(f) && validate_hilbert(g),
        Term::Pi(f) | Term::PiInv(f) => validate_hilbert(f),
        Term::Id(_) | Term::Lam(_) | Term::Rho(_) | Term::Alpha(..) => true,
    }
}

fn require_valid(t: &HilbertDerivation) -> Result<()> {
    if validate_hilbert(t) {
        Ok(())
    } else {
        Err(Error::mismatch(format!("ill-typed term {t}")))
    }
}

/// Cut-free derivation of `source | |- target`.
pub fn to_seqcalc(t: &HilbertDerivation) -> Result<Derivation> {
    require_valid(t)?;
    compile(t)
}

fn compile(t: &HilbertDerivation) -> Result<Derivation> {
    use Derivation as D;
    match t.term() {
        Term::Id(a) => Ok(D::ax(a.clone())),
        Term::Comp(f, g) => scut(&compile(f)?, &compile(g)?),
        Term::Tensor(f, g) => D::tensor_l(D::tensor_r(compile(f)?, D::pass(compile(g)?)?)?),
        Term::Lolli(f, g) => D::lolli_r(D::lolli_l(D::pass(compile(f)?)?, compile(g)?)?),
        Term::Lam(a) => D::tensor_l(D::unit_l(D::pass(D::ax(a.clone()))?)?),
        Term::Rho(a) => D::tensor_r(D::ax(a.clone()), D::unit_r()),
        Term::Alpha(a, b, c) => {
            let bc = D::pass(D::tensor_r(D::ax(b.clone()), D::pass(D::ax(c.clone()))?)?)?;
            D::tensor_l(D::tensor_l(D::tensor_r(D::ax(a.clone()), bc)?)?)
        }
        Term::Pi(f) => {
            let (a, b) = f.source().as_tensor().expect("typed by construction");
            let pair = D::tensor_r(D::ax(a.clone()), D::pass(D::ax(b.clone()))?)?;
            D::lolli_r(scut(&pair, &compile(f)?)?)
        }
        Term::PiInv(f) => {
            let (b, c) = f.target().as_lolli().expect("typed by construction");
            let apply = D::lolli_l(D::pass(D::ax(b.clone()))?, D::ax(c.clone()))?;
            D::tensor_l(scut(&compile(f)?, &apply)?)
        }
    }
}

/// `m ⊗ A1 ⊗ … ⊗ An`, left nested: lifts `m : X ⇒ Y` to
/// `⟦X | Γ⟧ ⇒ ⟦Y | Γ⟧`.
fn under_context(m: HilbertDerivation, ctx: &[Formula]) -> HilbertDerivation {
    ctx.iter()
        .fold(m, |acc, a| HilbertDerivation::tensor(acc, HilbertDerivation::id(a.clone())))
}

/// `⟦X | Γ⟧ ⇒ X ⊗ ⟦- | Γ⟧`
fn split_off(x: &Formula, ctx: &[Formula]) -> HilbertDerivation {
    match ctx.split_last() {
        None => HilbertDerivation::rho(x.clone()),
        Some((a, rest)) => {
            let head = HilbertDerivation::tensor(split_off(x, rest), HilbertDerivation::id(a.clone()));
            let rest_enc = encode_antecedent(&None, rest);
            HilbertDerivation::comp(head, HilbertDerivation::alpha(x.clone(), rest_enc, a.clone()))
        }
    }
}

/// Term `⟦S | Γ⟧⊗ ⇒ C` for a derivation of `S | Γ ⊢ C`. Cuts are
/// eliminated first.
pub fn from_seqcalc(d: &Derivation) -> Result<HilbertDerivation> {
    let d = if d.is_cut_free() { d.clone() } else { eliminate_cuts(d)? };
    Ok(interpret(&d))
}

fn interpret(d: &Derivation) -> HilbertDerivation {
    use HilbertDerivation as H;
    let c = d.conclusion();
    match d.rule() {
        Rule::Ax => H::id(c.succedent.clone()),
        Rule::UnitR => H::id(Formula::Unit),
        Rule::UnitL | Rule::TensorL => interpret(d.premise(0)),
        Rule::Pass => {
            let a = c.context[0].clone();
            H::comp(under_context(H::lam(a), &c.context[1..]), interpret(d.premise(0)))
        }
        Rule::LolliR => H::pi(interpret(d.premise(0))).expect("premise source is a tensor"),
        Rule::LolliL { split } => {
            let ab = c.stoup.clone().expect("lL has a stoup");
            let (gamma, delta) = c.context.split_at(*split);
            let apply = H::pi_inv(H::id(ab.clone())).expect("implication");
            let m = H::comp(
                split_off(&ab, gamma),
                H::comp(H::tensor(H::id(ab.clone()), interpret(d.premise(0))), apply),
            );
            H::comp(under_context(m, delta), interpret(d.premise(1)))
        }
        Rule::TensorR { split } => {
            let (gamma, delta) = c.context.split_at(*split);
            let left = encode_antecedent(&c.stoup, gamma);
            H::comp(
                split_off(&left, delta),
                H::tensor(interpret(d.premise(0)), interpret(d.premise(1))),
            )
        }
        Rule::Scut { .. } | Rule::Ccut { .. } => unreachable!("cuts eliminated"),
    }
}

/// Equality of parallel terms modulo the equations of skew monoidal closed
/// categories, decided by comparing focused normal forms.
pub fn hilbert_equal(t1: &HilbertDerivation, t2: &HilbertDerivation) -> Result<bool> {
    if t1.source() != t2.source() || t1.target() != t2.target() {
        return Err(Error::mismatch(format!(
            "terms are not parallel: {} => {} vs {} => {}",
            t1.source(),
            t1.target(),
            t2.source(),
            t2.target()
        )));
    }
    Ok(focus(&to_seqcalc(t1)?) == focus(&to_seqcalc(t2)?))
}

pub fn hilbert_to_sexp(t: &HilbertDerivation) -> Sexp {
    let f = Sexp::formula;
    let items = match t.term() {
        Term::Id(a) => vec![Sexp::atom("id"), f(a)],
        Term::Comp(x, y) => vec![Sexp::atom("comp"), hilbert_to_sexp(x), hilbert_to_sexp(y)],
        Term::Tensor(x, y) => vec![Sexp::atom("tensor"), hilbert_to_sexp(x), hilbert_to_sexp(y)],
        Term::Lolli(x, y) => vec![Sexp::atom("lolli"), hilbert_to_sexp(x), hilbert_to_sexp(y)],
        Term::Lam(a) => vec![Sexp::atom("lam"), f(a)],
        Term::Rho(a) => vec![Sexp::atom("rho"), f(a)],
        Term::Alpha(a, b, c) => vec![Sexp::atom("alpha"), f(a), f(b), f(c)],
        Term::Pi(x) => vec![Sexp::atom("pi"), hilbert_to_sexp(x)],
        Term::PiInv(x) => vec![Sexp::atom("pi-inv"), hilbert_to_sexp(x)],
    };
    Sexp::list(items)
}

pub fn print_hilbert(t: &HilbertDerivation) -> String {
    hilbert_to_sexp(t).to_string()
}

/// Reads a term and type checks it.
pub fn hilbert_from_sexp(s: &Sexp) -> Result<HilbertDerivation> {
    let t = read(s)?;
    require_valid(&t)?;
    Ok(t)
}

fn read(s: &Sexp) -> Result<HilbertDerivation> {
    use HilbertDerivation as H;
    let bad = |msg: String| Error::syntax(0, msg);
    let items = s.as_list().ok_or_else(|| bad(format!("expected a term, found {s}")))?;
    let head = items.first().and_then(Sexp::as_atom).ok_or_else(|| bad("term must start with a constructor".into()))?;
    let args = &items[1..];
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(bad(format!("`{head}` takes {n} arguments, found {}", args.len())))
        }
    };
    let formula = |i: usize| args[i].to_formula();
    match head {
        "id" | "lam" | "rho" => {
            arity(1)?;
            let a = formula(0)?;
            Ok(match head {
                "id" => H::id(a),
                "lam" => H::lam(a),
                _ => H::rho(a),
            })
        }
        "alpha" => {
            arity(3)?;
            Ok(H::alpha(formula(0)?, formula(1)?, formula(2)?))
        }
        "comp" | "tensor" | "lolli" => {
            arity(2)?;
            let (x, y) = (read(&args[0])?, read(&args[1])?);
            Ok(match head {
                "comp" => H::comp(x, y),
                "tensor" => H::tensor(x, y),
                _ => H::lolli(x, y),
            })
        }
        "pi" => {
            arity(1)?;
            H::pi(read(&args[0])?)
        }
        "pi-inv" => {
            arity(1)?;
            H::pi_inv(read(&args[0])?)
        }
        other => Err(bad(format!("unknown term constructor `{other}`"))),
    }
}

pub fn parse_hilbert(text: &str) -> Result<HilbertDerivation> {
    hilbert_from_sexp(&parse_sexp(text)?)
}

/// Random well-typed term out of `source`, nested at most `depth` deep.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, source: &Formula, depth: usize) -> HilbertDerivation {
    use HilbertDerivation as H;
    let mut options: Vec<H> = vec![H::id(source.clone()), H::rho(source.clone())];
    if let Some((a, b)) = source.as_tensor() {
        if *a == Formula::Unit {
            options.push(H::lam(b.clone()));
        }
        if let Some((x, y)) = a.as_tensor() {
            options.push(H::alpha(x.clone(), y.clone(), b.clone()));
        }
    }
    if depth > 0 {
        let d = depth - 1;
        if let Some((a, b)) = source.as_tensor() {
            options.push(H::tensor(random_term(rng, a, d), random_term(rng, b, d)));
            let h = random_term(rng, source, d);
            options.push(H::pi_inv(H::pi(h).expect("tensor source")).expect("implication target"));
            let f = random_term(rng, a, d);
            if f.target().as_lolli().is_some_and(|(x, _)| x == b) {
                options.push(H::pi_inv(f).expect("implication target"));
            }
        }
        if let Some((a, b)) = source.as_lolli() {
            options.push(H::lolli(random_term_into(rng, a, d), random_term(rng, b, d)));
        }
        let f = random_term(rng, source, d);
        let g = random_term(rng, f.target(), d);
        options.push(H::comp(f, g));
        let extra = if rng.gen_bool(0.5) { Formula::Unit } else { Formula::atom("Y") };
        let h = random_term(rng, &Formula::tensor(source.clone(), extra), d);
        options.push(H::pi(h).expect("tensor source"));
    }
    let i = rng.gen_range(0..options.len());
    options.swap_remove(i)
}

/// Random well-typed term into `target`.
fn random_term_into<R: Rng + ?Sized>(rng: &mut R, target: &Formula, depth: usize) -> HilbertDerivation {
    use HilbertDerivation as H;
    let mut options: Vec<H> = vec![H::id(target.clone()), H::lam(target.clone())];
    if let Some((a, b)) = target.as_tensor() {
        if *b == Formula::Unit {
            options.push(H::rho(a.clone()));
        }
        if let Some((y, z)) = b.as_tensor() {
            options.push(H::alpha(a.clone(), y.clone(), z.clone()));
        }
        if depth > 0 {
            options.push(H::tensor(random_term_into(rng, a, depth - 1), random_term_into(rng, b, depth - 1)));
        }
    }
    let i = rng.gen_range(0..options.len());
    options.swap_remove(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::equivalent;
    use crate::formula::{parse_formula, parse_sequent};
    use crate::seqcalc::{enumerate_all, is_valid, parse_derivation};

    type H = HilbertDerivation;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn comp(x: H, y: H) -> H {
        x.then(y).unwrap()
    }

    fn eq(x: &H, y: &H) -> bool {
        hilbert_equal(x, y).unwrap()
    }

    #[test]
    fn typing() {
        let lam = H::lam(f("X"));
        assert_eq!((lam.source(), lam.target()), (&f("I * X"), &f("X")));
        assert!(validate_hilbert(&lam));
        assert!(!validate_hilbert(&H::comp(H::rho(f("X")), H::lam(f("X")))));
        let p = H::pi(H::alpha(f("X"), f("Y"), f("Z"))).unwrap();
        assert_eq!((p.source(), p.target()), (&f("X * Y"), &f("Z -o X * (Y * Z)")));
        assert!(H::pi(H::id(f("X"))).is_err());
        let back = H::pi_inv(p).unwrap();
        assert_eq!(back.source(), &f("(X * Y) * Z"));
        let l = H::lolli(H::lam(f("X")), H::id(f("Y")));
        assert_eq!((l.source(), l.target()), (&f("X -o Y"), &f("I * X -o Y")));
    }

    #[test]
    fn compiled_structure_maps() {
        let lam = to_seqcalc(&H::lam(f("X"))).unwrap();
        assert_eq!(
            lam,
            parse_derivation("(proof \"I * X | |- X\" (tL (uL (pass (ax)))))").unwrap()
        );
        let rho = to_seqcalc(&H::rho(f("X"))).unwrap();
        assert_eq!(rho, parse_derivation("(proof \"X | |- X * I\" (tR 0 (ax) (uR)))").unwrap());
        let alpha = to_seqcalc(&H::alpha(f("X"), f("Y"), f("Z"))).unwrap();
        assert!(enumerate_all(alpha.conclusion()).contains(&alpha));
        assert_eq!(crate::focused::count_maps(&f("(X * Y) * Z"), &f("X * (Y * Z)")), 1);
        for t in [H::id(f("X * Y -o Z")), H::pi(H::lam(f("X"))).unwrap(), H::lolli(H::lam(f("X")), H::rho(f("Y")))] {
            let d = to_seqcalc(&t).unwrap();
            assert!(is_valid(&d) && d.is_cut_free());
            assert_eq!(d.conclusion(), &parse_sequent(&format!("{} | |- {}", t.source(), t.target())).unwrap());
        }
        assert!(to_seqcalc(&H::comp(H::rho(f("X")), H::lam(f("X")))).is_err());
    }

    #[test]
    fn identity_compiles_to_eta_expanded_axiom() {
        let id = to_seqcalc(&H::id(f("X * Y"))).unwrap();
        assert!(equivalent(&id, &Derivation::ax(f("X * Y"))).unwrap());
    }

    #[test]
    fn round_trip_from_derivations() {
        for s in ["X * I | |- X * I", "(X * Y) * Z | |- X * (Y * Z)", "(X * Y) -o Z | |- X -o (Y -o Z)", "I -o X | |- X", "I | |- X -o I * X", "X -o Y | |- (I * X) -o Y * I"] {
            for d in enumerate_all(&parse_sequent(s).unwrap()) {
                let t = from_seqcalc(&d).unwrap();
                assert!(validate_hilbert(&t), "{t}");
                assert_eq!((t.source().to_string(), t.target()), (d.conclusion().stoup.clone().unwrap().to_string(), &d.conclusion().succedent));
                assert!(equivalent(&to_seqcalc(&t).unwrap(), &d).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn rho_display_reads_back_as_rho() {
        let d = parse_derivation("(proof \"X | |- X * I\" (tR 0 (ax) (uR)))").unwrap();
        assert!(eq(&from_seqcalc(&d).unwrap(), &H::rho(f("X"))));
    }

    #[test]
    fn mac_lane_diagrams() {
        let (a, b, c, d) = (f("X"), f("Y"), f("Z"), f("W"));
        let i = Formula::Unit;
        // λ_I ∘ ρ_I = id
        assert!(eq(&comp(H::rho(i.clone()), H::lam(i.clone())), &H::id(i.clone())));
        // (A ⊗ λ_B) ∘ α_{A,I,B} ∘ (ρ_A ⊗ B) = id
        let t = comp(
            comp(H::tensor(H::rho(a.clone()), H::id(b.clone())), H::alpha(a.clone(), i.clone(), b.clone())),
            H::tensor(H::id(a.clone()), H::lam(b.clone())),
        );
        assert!(eq(&t, &H::id(Formula::tensor(a.clone(), b.clone()))));
        // λ_{A⊗B} ∘ α_{I,A,B} = λ_A ⊗ B
        assert!(eq(
            &comp(H::alpha(i.clone(), a.clone(), b.clone()), H::lam(Formula::tensor(a.clone(), b.clone()))),
            &H::tensor(H::lam(a.clone()), H::id(b.clone())),
        ));
        // α_{A,B,I} ∘ ρ_{A⊗B} = A ⊗ ρ_B
        assert!(eq(
            &comp(H::rho(Formula::tensor(a.clone(), b.clone())), H::alpha(a.clone(), b.clone(), i.clone())),
            &H::tensor(H::id(a.clone()), H::rho(b.clone())),
        ));
        // pentagon
        let bc = Formula::tensor(b.clone(), c.clone());
        let cd = Formula::tensor(c.clone(), d.clone());
        let ab = Formula::tensor(a.clone(), b.clone());
        let upper = comp(
            comp(H::tensor(H::alpha(a.clone(), b.clone(), c.clone()), H::id(d.clone())), H::alpha(a.clone(), bc, d.clone())),
            H::tensor(H::id(a.clone()), H::alpha(b.clone(), c.clone(), d.clone())),
        );
        let lower = comp(H::alpha(ab, c.clone(), d.clone()), H::alpha(a.clone(), b.clone(), cd));
        assert!(eq(&upper, &lower));
    }

    #[test]
    fn non_equations_are_separated() {
        let ii = Formula::tensor(Formula::Unit, Formula::Unit);
        // ρ_I ∘ λ_I is not the identity on I ⊗ I
        assert!(!eq(&comp(H::lam(Formula::Unit), H::rho(Formula::Unit)), &H::id(ii)));
        // λ_X and ρ_X do not compose to anything invertible: I ⊗ X ⇒ X ⇒ X ⊗ I has
        // a unique map, but X ⇒ I ⊗ X has none
        assert_eq!(crate::focused::count_maps(&f("X"), &f("I * X")), 0);
    }

    #[test]
    fn naturality() {
        let g = H::pi(H::lam(f("X"))).unwrap(); // I ⇒ X -o X
        let (a, b) = (g.source().clone(), g.target().clone());
        assert!(eq(
            &comp(H::tensor(H::id(Formula::Unit), g.clone()), H::lam(b.clone())),
            &comp(H::lam(a.clone()), g.clone()),
        ));
        assert!(eq(
            &comp(g.clone(), H::rho(b.clone())),
            &comp(H::rho(a.clone()), H::tensor(g.clone(), H::id(Formula::Unit))),
        ));
        let h = H::lam(f("Y"));
        let y = f("Z");
        assert!(eq(
            &comp(H::tensor(H::tensor(g.clone(), h.clone()), H::id(y.clone())), H::alpha(b.clone(), f("Y"), y.clone())),
            &comp(H::alpha(a, h.source().clone(), y.clone()), H::tensor(g, H::tensor(h, H::id(y)))),
        ));
    }

    #[test]
    fn adjunction_round_trips() {
        let t = H::alpha(f("X"), f("Y"), f("Z"));
        assert!(eq(&H::pi_inv(H::pi(t.clone()).unwrap()).unwrap(), &t));
        let u = H::pi(H::lam(f("X"))).unwrap();
        assert!(eq(&H::pi(H::pi_inv(u.clone()).unwrap()).unwrap(), &u));
    }

    #[test]
    fn random_terms_are_well_typed() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        for src in ["X", "I * X", "(X * Y) * I", "X -o Y", "(I -o X) * Y"] {
            for _ in 0..50 {
                let t = random_term(&mut rng, &f(src), 3);
                assert!(validate_hilbert(&t), "{t}");
                assert_eq!(t.source(), &f(src));
                assert_eq!(parse_hilbert(&print_hilbert(&t)).unwrap(), t);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let s = "(comp (rho X) (pi-inv (pi (id \"X * I\"))))";
        let t = parse_hilbert(s).unwrap();
        assert_eq!(print_hilbert(&t), s);
        assert!(parse_hilbert("(comp (rho X) (lam X))").is_err());
        assert!(parse_hilbert("(pi (id X))").is_err());
        assert!(parse_hilbert("(alpha X Y)").is_err());
        assert!(parse_hilbert("(frob X)").is_err());
    }
}
