//! Systematic and random generation of small test sequents, and batch
//! sweeps over them.

use std::collections::HashMap;

use rand::Rng;

use crate::equiv::{self, classes_of};
use crate::error::Result;
use crate::focused::{emb, focus, FocusedSearch, FocusedSequent, Mode, Phase};
use crate::formula::{Formula, Sequent};
use crate::par::par_map;
use crate::seqcalc::{Derivation, Enumerator};

/// Bounds for [`sequents`]. `I` counts as a connective.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub atoms: Vec<String>,
    pub max_connectives: usize,
    pub max_atom_occurrences: usize,
    pub max_context: usize,
    /// Keep only derivable sequents.
    pub derivable_only: bool,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            atoms: vec!["X".into(), "Y".into(), "Z".into()],
            max_connectives: 6,
            max_atom_occurrences: 6,
            max_context: 2,
            derivable_only: true,
        }
    }
}

/// Formula shapes with exactly `c` connectives and `k` atom slots; slots
/// are the placeholder atom `_`.
fn shapes(c: usize, k: usize, memo: &mut HashMap<(usize, usize), Vec<Formula>>) -> Vec<Formula> {
    if let Some(hit) = memo.get(&(c, k)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    match (c, k) {
        (0, 1) => out.push(Formula::Atom("_".into())),
        (1, 0) => out.push(Formula::Unit),
        _ => {}
    }
    if c >= 1 {
        for ca in 0..c {
            for ka in 0..=k {
                let left = shapes(ca, ka, memo);
                if left.is_empty() {
                    continue;
                }
                let right = shapes(c - 1 - ca, k - ka, memo);
                for a in &left {
                    for b in &right {
                        out.push(Formula::tensor(a.clone(), b.clone()));
                        out.push(Formula::lolli(a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    memo.insert((c, k), out.clone());
    out
}

/// Fills the slots of `f` from `labels`, left to right.
fn fill(f: &Formula, labels: &mut impl Iterator<Item = Formula>) -> Formula {
    match f {
        Formula::Atom(_) => labels.next().expect("one label per slot"),
        Formula::Unit => Formula::Unit,
        Formula::Tensor(a, b) => {
            let a = fill(a, labels);
            Formula::tensor(a, fill(b, labels))
        }
        Formula::Lolli(a, b) => {
            let a = fill(a, labels);
            Formula::lolli(a, fill(b, labels))
        }
    }
}

/// Restricted growth strings of length `k` over at most `m` symbols: each
/// labelling of `k` slots up to renaming, first-occurrence order.
fn growth_strings(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in out {
            let used = s.iter().max().map_or(0, |x| x + 1);
            for v in 0..=used.min(m - 1) {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Every sequent within the bounds, one per renaming class of atoms (atoms
/// appear in first-occurrence order, stoup then context then succedent),
/// ordered by size.
pub fn sequents(p: &FamilyParams) -> Vec<Sequent> {
    let atoms: Vec<Formula> = p.atoms.iter().map(|a| Formula::atom(a)).collect();
    let mut memo = HashMap::new();
    let mut sized: Vec<(usize, usize, Formula)> = Vec::new();
    for c in 0..=p.max_connectives {
        for k in 0..=p.max_atom_occurrences {
            for f in shapes(c, k, &mut memo) {
                sized.push((c, k, f));
            }
        }
    }
    // shapes of whole sequents: optional stoup, context, succedent
    let mut skeletons: Vec<Sequent> = Vec::new();
    fn ctxs(
        sized: &[(usize, usize, Formula)],
        len: usize,
        c: usize,
        k: usize,
        prefix: &mut Vec<Formula>,
        out: &mut Vec<(Vec<Formula>, usize, usize)>,
    ) {
        out.push((prefix.clone(), c, k));
        if len == 0 {
            return;
        }
        for (fc, fk, f) in sized {
            if *fc <= c && *fk <= k {
                prefix.push(f.clone());
                ctxs(sized, len - 1, c - fc, k - fk, prefix, out);
                prefix.pop();
            }
        }
    }
    let (nc, nk) = (p.max_connectives, p.max_atom_occurrences);
    let mut stoups: Vec<(Option<Formula>, usize, usize)> = vec![(None, nc, nk)];
    stoups.extend(sized.iter().map(|(c, k, f)| (Some(f.clone()), nc - c, nk - k)));
    for (stoup, c, k) in stoups {
        let mut contexts = Vec::new();
        ctxs(&sized, p.max_context, c, k, &mut Vec::new(), &mut contexts);
        for (ctx, c, k) in contexts {
            for (fc, fk, succ) in &sized {
                if *fc <= c && *fk <= k {
                    skeletons.push(Sequent::new(stoup.clone(), ctx.clone(), succ.clone()));
                }
            }
        }
    }
    let mut enumerator = Enumerator::new(usize::MAX);
    let mut out = Vec::new();
    for sk in skeletons {
        let slots = sk.stoup.iter().chain(&sk.context).chain([&sk.succedent]).map(Formula::atom_occurrences).sum();
        for labels in growth_strings(slots, atoms.len()) {
            let mut it = labels.into_iter().map(|i| atoms[i].clone());
            let stoup = sk.stoup.as_ref().map(|f| fill(f, &mut it));
            let context = sk.context.iter().map(|f| fill(f, &mut it)).collect();
            let succedent = fill(&sk.succedent, &mut it);
            let s = Sequent::new(stoup, context, succedent);
            if p.derivable_only && !(balanced(&s) && enumerator.is_derivable(&s)) {
                continue;
            }
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.connectives() + s.context.len());
    out
}

/// Every atom occurs as often on the left as on the right, counted with
/// polarity; a necessary condition for derivability.
fn balanced(s: &Sequent) -> bool {
    fn walk(f: &Formula, sign: i32, acc: &mut HashMap<Formula, i32>) {
        match f {
            Formula::Atom(_) => *acc.entry(f.clone()).or_default() += sign,
            Formula::Unit => {}
            Formula::Tensor(a, b) => {
                walk(a, sign, acc);
                walk(b, sign, acc);
            }
            Formula::Lolli(a, b) => {
                walk(a, -sign, acc);
                walk(b, sign, acc);
            }
        }
    }
    let mut acc = HashMap::new();
    for f in s.stoup.iter().chain(&s.context) {
        walk(f, -1, &mut acc);
    }
    walk(&s.succedent, 1, &mut acc);
    acc.values().all(|&v| v == 0)
}

/// Random formula over `atoms` with at most `max_connectives` connectives.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, atoms: &[Formula], max_connectives: usize) -> Formula {
    let n = rng.gen_range(0..=max_connectives);
    formula_with(rng, atoms, n)
}

fn formula_with<R: Rng + ?Sized>(rng: &mut R, atoms: &[Formula], n: usize) -> Formula {
    match n {
        0 => atoms[rng.gen_range(0..atoms.len())].clone(),
        1 if rng.gen_bool(0.2) => Formula::Unit,
        _ => {
            let left = rng.gen_range(0..n);
            let (a, b) = (formula_with(rng, atoms, left), formula_with(rng, atoms, n - 1 - left));
            if rng.gen_bool(0.5) {
                Formula::tensor(a, b)
            } else {
                Formula::lolli(a, b)
            }
        }
    }
}

/// Bounds for the random samplers.
#[derive(Clone, Debug)]
pub struct SampleParams {
    pub atoms: Vec<Formula>,
    /// Per formula.
    pub max_connectives: usize,
    pub max_context: usize,
    /// Attempts before a sampler gives up.
    pub tries: usize,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams {
            atoms: vec![Formula::atom("X"), Formula::atom("Y")],
            max_connectives: 2,
            max_context: 2,
            tries: 20_000,
        }
    }
}

fn random_context<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> Vec<Formula> {
    let n = rng.gen_range(0..=p.max_context);
    (0..n).map(|_| random_formula(rng, &p.atoms, p.max_connectives)).collect()
}

/// A uniformly chosen cut-free derivation of a random derivable sequent
/// whose unset parts are drawn at random.
pub fn random_derivation<R: Rng + ?Sized>(
    rng: &mut R,
    p: &SampleParams,
    stoup: Option<Option<Formula>>,
    succedent: Option<Formula>,
) -> Option<Derivation> {
    for _ in 0..p.tries {
        let st = stoup.clone().unwrap_or_else(|| {
            if rng.gen_bool(0.3) {
                None
            } else {
                Some(random_formula(rng, &p.atoms, p.max_connectives))
            }
        });
        let ctx = random_context(rng, p);
        let succ = succedent.clone().unwrap_or_else(|| random_formula(rng, &p.atoms, p.max_connectives + 1));
        let s = Sequent::new(st, ctx, succ);
        if !balanced(&s) || !crate::focused::is_derivable(&s) {
            continue;
        }
        let all = crate::seqcalc::enumerate_all_with_budget(&s, 200_000).ok()?;
        return Some(all[rng.gen_range(0..all.len())].clone());
    }
    None
}

/// `f : S | Γ ⊢ A` and `g : A | Δ ⊢ C`.
pub fn random_scut_pair<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> Option<(Derivation, Derivation)> {
    for _ in 0..p.tries {
        let f = random_derivation(rng, p, None, None)?;
        let a = f.conclusion().succedent.clone();
        let narrow = SampleParams { tries: 50, ..p.clone() };
        if let Some(g) = random_derivation(rng, &narrow, Some(Some(a)), None) {
            return Some((f, g));
        }
    }
    None
}

/// `f : - | Γ ⊢ A` and `g : S | Δ0, A, Δ1 ⊢ C` with the position of `A`.
pub fn random_ccut_pair<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> Option<(Derivation, Derivation, usize)> {
    for _ in 0..p.tries {
        let g = random_derivation(rng, p, None, None)?;
        let ctx = &g.conclusion().context;
        if ctx.is_empty() {
            continue;
        }
        let pos = rng.gen_range(0..ctx.len());
        let narrow = SampleParams { tries: 50, ..p.clone() };
        if let Some(f) = random_derivation(rng, &narrow, Some(None), Some(ctx[pos].clone())) {
            return Some((f, g, pos));
        }
    }
    None
}

/// Per-sequent outcome of [`check_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub sequent: Sequent,
    pub unfocused: usize,
    pub classes: usize,
    pub focused: usize,
    pub naive: usize,
    /// focus(emb f) = f for every focused f.
    pub retraction: bool,
    /// emb(focus g) lies in the ≗-class of g for every unfocused g.
    pub section: bool,
    /// focus is constant on each class and injective across classes.
    pub focus_separates_classes: bool,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.classes == self.focused && self.retraction && self.section && self.focus_separates_classes
    }
}

/// Compares the class count of the unfocused calculus with the number of
/// tagged focused derivations, and checks that `focus`/`emb` are mutually
/// inverse up to ≗.
pub fn check_bijection(s: &Sequent, budget: usize) -> Result<BijectionReport> {
    let all = Enumerator::new(budget).all(s)?.to_vec();
    let unfocused = all.len();
    let classes = classes_of(all, s)?;
    let mut search = FocusedSearch::new(Mode::Tagged, budget);
    let found = search.derivations(&FocusedSequent::plain(Phase::RI, s))?;
    let naive = FocusedSearch::new(Mode::Naive, budget).count(&FocusedSequent::plain(Phase::RI, s)) as usize;

    let retraction = found.iter().all(|f| &focus(&emb(f)) == f);

    let mut class_of = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for d in c {
            class_of.insert(d.clone(), i);
        }
    }
    let mut section = true;
    let mut image_of_class: Vec<Option<crate::focused::FocusedDerivation>> = vec![None; classes.len()];
    let mut separates = true;
    for (i, c) in classes.iter().enumerate() {
        for d in c {
            let f = focus(d);
            let back = emb(&f);
            if class_of.get(&back) != Some(&i) {
                section = false;
            }
            match &image_of_class[i] {
                None => image_of_class[i] = Some(f),
                Some(g) if g != &f => separates = false,
                _ => {}
            }
        }
    }
    let images: std::collections::HashSet<_> = image_of_class.iter().flatten().collect();
    if images.len() != classes.len() {
        separates = false;
    }
    Ok(BijectionReport {
        sequent: s.clone(),
        unfocused,
        classes: classes.len(),
        focused: found.len(),
        naive,
        retraction,
        section,
        focus_separates_classes: separates,
    })
}

/// Runs [`check_bijection`] over many sequents, in parallel when enabled.
pub fn sweep_bijection(family: &[Sequent], budget: usize) -> Vec<Result<BijectionReport>> {
    par_map(family, |s| check_bijection(s, budget))
}

/// Per-sequent outcome of [`check_rewriting`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteReport {
    pub derivations: usize,
    /// Derivations whose rewrite graph is finite and acyclic within budget.
    pub terminating: usize,
    pub peaks_checked: usize,
    pub unjoinable_peaks: usize,
    /// Derivations whose two strategies give different normal forms.
    pub strategy_disagreements: usize,
    /// First unjoinable peak found, printed.
    pub witness: Option<String>,
}

/// Termination, joinability of one-step peaks, and strategy independence
/// for every cut-free derivation of `s`.
pub fn check_rewriting(s: &Sequent, budget: usize, max_terms: usize) -> Result<RewriteReport> {
    let all = Enumerator::new(budget).all(s)?;
    let mut r = RewriteReport { derivations: all.len(), ..Default::default() };
    for d in all.iter() {
        if equiv::longest_reduction(d, max_terms).is_ok() {
            r.terminating += 1;
        }
        let steps = equiv::applicable_steps(d).len();
        r.peaks_checked += steps * steps.saturating_sub(1) / 2;
        if let Some(peak) = equiv::find_unjoinable_peak(d, max_terms)? {
            r.unjoinable_peaks += 1;
            if r.witness.is_none() {
                r.witness = Some(format!(
                    "{} at {:?}: {:?} vs {:?} at {:?}",
                    crate::seqcalc::print_derivation(&peak.source),
                    peak.left.path,
                    peak.left.generator,
                    peak.right.generator,
                    peak.right.path
                ));
            }
        }
        let li = equiv::normalize_with(d, equiv::Strategy::LeftmostInnermost, max_terms)?;
        let ro = equiv::normalize_with(d, equiv::Strategy::RightmostOutermost, max_terms)?;
        if li != ro {
            r.strategy_disagreements += 1;
        }
    }
    Ok(r)
}

pub fn sweep_rewriting(family: &[Sequent], budget: usize, max_terms: usize) -> Vec<Result<RewriteReport>> {
    par_map(family, |s| check_rewriting(s, budget, max_terms))
}
