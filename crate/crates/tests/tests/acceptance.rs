//! Acceptance criteria, each checked at its stated tolerance.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use sknmill::equiv::equivalence_classes;
use sknmill::family::{
    random_ccut_pair, random_derivation, random_scut_pair, sequents, sweep_bijection, sweep_rewriting, FamilyParams,
    SampleParams,
};
use sknmill::focused::{self, count_maps, focus, Mode};
use sknmill::hilbert::{from_seqcalc, hilbert_equal, random_term, to_seqcalc, validate_hilbert, HilbertDerivation as H};
use sknmill::seqcalc::{self, ccut, enumerate_all, is_valid, scut};
use sknmill::{parse_formula, parse_sequent, Derivation, Formula, Sequent};
use sknmill_tests::{Report, Verdict};

fn seq(s: &str) -> Sequent {
    parse_sequent(s).unwrap()
}

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn derivability_goldens() -> Verdict {
    let derivable = [
        "I*X | |- X",
        "X | |- X*I",
        "(X*Y)*Z | |- X*(Y*Z)",
        "I -o X | |- X",
        "(X*Y) -o Z | |- X -o (Y -o Z)",
        "I | |- X -o (I*X)",
        "- | Y |- (X -o X)*Y",
        "X -o Y | Z |- (X -o Y)*Z",
        "X -o (Y*Z) | X |- Y*Z",
    ];
    let underivable = ["X | |- I*X", "X*I | |- X", "X*(Y*Z) | |- (X*Y)*Z"];
    let mut wrong = vec![];
    for (list, expected) in [(&derivable[..], true), (&underivable[..], false)] {
        for s in list {
            let s = seq(s);
            // both the focused decision procedure and exhaustive unfocused search
            if focused::is_derivable(&s) != expected || seqcalc::is_derivable(&s) != expected {
                wrong.push(s.to_string());
            }
        }
    }
    Verdict::new(wrong.is_empty(), format!("{} sequents, wrong: {wrong:?}", derivable.len() + underivable.len()))
}

fn essential_nondeterminism() -> Verdict {
    let cases = ["X | I*Y |- X*(I*Y)", "X | I, Y |- (X*I)*Y", "I -o (X -o Y) | I, X |- Y", "I -o I | Z |- (I -o I)*Z"];
    let counts: Vec<usize> = cases.iter().map(|s| focused::search(&seq(s), Mode::Tagged).len()).collect();
    Verdict::new(counts.iter().all(|&c| c == 2), format!("tagged counts {counts:?}, expected [2, 2, 2, 2]"))
}

fn classes(s: &Sequent) -> usize {
    equivalence_classes(s, 1_000_000).unwrap().len()
}

fn naive_vs_tagged() -> Verdict {
    let pair = seq("- | X, Y |- X*Y");
    let (naive, tagged, cls) = (focused::count(&pair, Mode::Naive), focused::count(&pair, Mode::Tagged), classes(&pair));
    let mut pass = naive == 2 && tagged == 1 && cls == 1;
    let mut detail = format!("`{pair}`: naive {naive}, tagged {tagged}, classes {cls}");
    // the ⊸L / ⊗R interchange: A -o X | Γ, Δ, Λ with f : - | Γ ⊢ A,
    // g : X | Δ ⊢ P, h : - | Λ ⊢ D
    let lolli = seq("X -o Y | X, Z |- Y * Z");
    let (n2, t2, c2) = (focused::count(&lolli, Mode::Naive), focused::count(&lolli, Mode::Tagged), classes(&lolli));
    pass &= n2 > t2 && t2 as usize == c2;
    detail.push_str(&format!("; `{lolli}`: naive {n2}, tagged {t2}, classes {c2}"));
    Verdict::new(pass, detail)
}

fn family() -> Vec<Sequent> {
    sequents(&FamilyParams::default())
}

fn bijection_suite(fam: &[Sequent]) -> Verdict {
    let start = Instant::now();
    let reports = sweep_bijection(fam, 2_000_000);
    let elapsed = start.elapsed();
    let mut bad = vec![];
    let (mut derivations, mut focused_total) = (0, 0);
    for r in &reports {
        match r {
            Ok(r) => {
                derivations += r.unfocused;
                focused_total += r.focused;
                if !r.ok() {
                    bad.push(r.sequent.to_string());
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    let pass = fam.len() >= 500 && bad.is_empty() && elapsed < Duration::from_secs(600);
    Verdict::new(
        pass,
        format!(
            "{} sequents (<= 6 connectives, atoms X Y Z), {derivations} unfocused derivations, {focused_total} classes = focused derivations, {} failures {:?}, sweep {:.1}s",
            fam.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>(),
            elapsed.as_secs_f64()
        ),
    )
}

fn rewrite_system(fam: &[Sequent]) -> Verdict {
    let reports = sweep_rewriting(fam, 2_000_000, 200_000);
    let (mut derivations, mut terminating, mut peaks, mut unjoinable, mut disagree, mut errors) = (0, 0, 0, 0, 0, 0);
    let mut witness = None;
    for r in reports {
        match r {
            Ok(r) => {
                derivations += r.derivations;
                terminating += r.terminating;
                peaks += r.peaks_checked;
                unjoinable += r.unjoinable_peaks;
                disagree += r.strategy_disagreements;
                if witness.is_none() {
                    witness = r.witness;
                }
            }
            Err(_) => errors += 1,
        }
    }
    let pass = terminating == derivations && unjoinable == 0 && disagree == 0 && errors == 0;
    Verdict::new(
        pass,
        format!(
            "{derivations} derivations: {terminating} terminate; {peaks} one-step peaks, derivations with an unjoinable peak {unjoinable}; strategy disagreements {disagree}; errors {errors}; first witness {}",
            witness.unwrap_or_else(|| "none".into())
        ),
    )
}

fn same(d: &Derivation, e: &Derivation) -> bool {
    focus(d) == focus(e)
}

fn cut_admissibility() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let p = SampleParams::default();
    let (mut pairs, mut triples, mut bad) = (0, 0, vec![]);
    for _ in 0..200 {
        let (f, g) = random_scut_pair(&mut rng, &p).expect("scut pair");
        pairs += 1;
        let fg = scut(&f, &g).unwrap();
        let a = f.conclusion().succedent.clone();
        if !(is_valid(&fg) && fg.is_cut_free())
            || !same(&scut(&Derivation::ax(a.clone()), &g).unwrap(), &g)
            || !same(&scut(&f, &Derivation::ax(a)).unwrap(), &f)
        {
            bad.push(format!("scut {} / {}", f.conclusion(), g.conclusion()));
        }
        let narrow = SampleParams { tries: 100, ..p.clone() };
        if let Some(h) = random_derivation(&mut rng, &narrow, Some(Some(g.conclusion().succedent.clone())), None) {
            triples += 1;
            if !same(&scut(&fg, &h).unwrap(), &scut(&f, &scut(&g, &h).unwrap()).unwrap()) {
                bad.push(format!("scut assoc {} / {} / {}", f.conclusion(), g.conclusion(), h.conclusion()));
            }
        }
    }
    let mut ccut_triples = 0;
    for _ in 0..200 {
        let (f, g, pos) = random_ccut_pair(&mut rng, &p).expect("ccut pair");
        pairs += 1;
        let fg = ccut(&f, &g, pos).unwrap();
        let a = f.conclusion().succedent.clone();
        let pass_ax = Derivation::pass(Derivation::ax(a)).unwrap();
        if !(is_valid(&fg) && fg.is_cut_free())
            || !same(&ccut(&pass_ax, &g, pos).unwrap(), &g)
            || !same(&ccut(&f, &pass_ax, 0).unwrap(), &f)
        {
            bad.push(format!("ccut {} / {} at {pos}", f.conclusion(), g.conclusion()));
        }
        // (e into f) into g = e into (f into g)
        let ctx = &f.conclusion().context;
        if !ctx.is_empty() {
            let q = ctx.len() - 1;
            let narrow = SampleParams { tries: 100, ..p.clone() };
            if let Some(e) = random_derivation(&mut rng, &narrow, Some(None), Some(ctx[q].clone())) {
                ccut_triples += 1;
                let left = ccut(&ccut(&e, &f, q).unwrap(), &g, pos).unwrap();
                let right = ccut(&e, &fg, pos + q).unwrap();
                if !same(&left, &right) {
                    bad.push(format!("ccut assoc {} / {} / {}", e.conclusion(), f.conclusion(), g.conclusion()));
                }
            }
        }
    }
    Verdict::new(
        bad.is_empty() && pairs >= 200,
        format!("{pairs} composable pairs, {triples} scut triples, {ccut_triples} ccut triples; failures {bad:?}"),
    )
}

fn hilbert_coherence() -> Verdict {
    let mut failures: Vec<String> = vec![];
    let mut check = |name: &str, l: H, r: H| match hilbert_equal(&l, &r) {
        Ok(true) => {}
        Ok(false) => failures.push(format!("{name}: {l} vs {r}")),
        Err(e) => failures.push(format!("{name}: {e}")),
    };
    let i = Formula::Unit;
    let comp = |a: H, b: H| a.then(b).unwrap();
    check("λ_I ∘ ρ_I", comp(H::rho(i.clone()), H::lam(i.clone())), H::id(i.clone()));
    let instances = [
        (f("X"), f("Y"), f("Z"), f("W")),
        (f("X -o Y"), f("I * Z"), f("(X * I) -o I"), f("Y * (W -o X)")),
    ];
    for (a, b, c, d) in instances {
        let ab = Formula::tensor(a.clone(), b.clone());
        check(
            "triangle",
            comp(
                comp(H::tensor(H::rho(a.clone()), H::id(b.clone())), H::alpha(a.clone(), i.clone(), b.clone())),
                H::tensor(H::id(a.clone()), H::lam(b.clone())),
            ),
            H::id(ab.clone()),
        );
        check(
            "λ square",
            comp(H::alpha(i.clone(), a.clone(), b.clone()), H::lam(ab.clone())),
            H::tensor(H::lam(a.clone()), H::id(b.clone())),
        );
        check(
            "ρ square",
            comp(H::rho(ab.clone()), H::alpha(a.clone(), b.clone(), i.clone())),
            H::tensor(H::id(a.clone()), H::rho(b.clone())),
        );
        let bc = Formula::tensor(b.clone(), c.clone());
        let cd = Formula::tensor(c.clone(), d.clone());
        check(
            "pentagon",
            comp(
                comp(H::tensor(H::alpha(a.clone(), b.clone(), c.clone()), H::id(d.clone())), H::alpha(a.clone(), bc, d.clone())),
                H::tensor(H::id(a.clone()), H::alpha(b.clone(), c.clone(), d.clone())),
            ),
            comp(H::alpha(ab, c.clone(), d.clone()), H::alpha(a.clone(), b.clone(), cd)),
        );
    }
    let diagrams_ok = failures.is_empty();

    let mut rng = StdRng::seed_from_u64(0xc0de);
    let sources = ["X", "I", "I * X", "(X * Y) * Z", "X -o Y", "(I -o X) * Y", "X * (Y -o I)"];
    let mut terms = 0;
    for src in sources {
        for _ in 0..40 {
            let t = random_term(&mut rng, &f(src), 3);
            terms += 1;
            let back = to_seqcalc(&t).and_then(|d| from_seqcalc(&d));
            match back {
                Ok(u) if validate_hilbert(&u) && hilbert_equal(&u, &t).unwrap_or(false) => {}
                _ => failures.push(format!("term round trip {t}")),
            }
        }
    }
    let mut derivations = 0;
    let small = FamilyParams { max_connectives: 4, max_atom_occurrences: 4, max_context: 0, ..Default::default() };
    for s in sequents(&small).into_iter().filter(|s| s.stoup.is_some()) {
        for d in enumerate_all(&s) {
            derivations += 1;
            let ok = from_seqcalc(&d)
                .and_then(|t| to_seqcalc(&t))
                .map(|e| focus(&e) == focus(&d))
                .unwrap_or(false);
            if !ok {
                failures.push(format!("derivation round trip {}", seqcalc::print_derivation(&d)));
            }
        }
    }
    let maps = (count_maps(&f("X"), &f("I*X")), count_maps(&f("I*X"), &f("X")));
    if maps != (0, 1) {
        failures.push(format!("count_maps {maps:?}"));
    }
    Verdict::new(
        failures.is_empty(),
        format!(
            "diagrams {} (5 at atoms + 4 compound); {terms} term round trips; {derivations} derivation round trips; count_maps(X, I*X)={}, count_maps(I*X, X)={}; failures {:?}",
            if diagrams_ok { "hold" } else { "FAIL" },
            maps.0,
            maps.1,
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn main() {
    let mut report = Report::new();
    report.criterion("1", "derivability goldens", derivability_goldens);
    report.criterion("2", "essential non-determinism counts", essential_nondeterminism);
    report.criterion("3", "naive vs tagged", naive_vs_tagged);
    let fam = family();
    report.criterion("4", "bijection suite", || bijection_suite(&fam));
    report.criterion("5", "rewrite system", || rewrite_system(&fam));
    report.criterion("6", "cut admissibility", cut_admissibility);
    report.criterion("7", "Hilbert coherence", hilbert_coherence);
    report.finish();
}
