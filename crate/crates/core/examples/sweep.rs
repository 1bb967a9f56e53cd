//! Runs the bijection and rewriting sweeps over a sequent family.
//!
//! cargo run --release --example sweep -- [connectives] [atom-occurrences] [context]

use std::time::Instant;

use sknmill::family::{sequents, sweep_bijection, sweep_rewriting, FamilyParams};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let d = FamilyParams::default();
    let p = FamilyParams {
        max_connectives: args.first().copied().unwrap_or(d.max_connectives),
        max_atom_occurrences: args.get(1).copied().unwrap_or(d.max_atom_occurrences),
        max_context: args.get(2).copied().unwrap_or(d.max_context),
        ..d
    };
    let t = Instant::now();
    let fam = sequents(&p);
    println!("{} sequents in {:.2?}", fam.len(), t.elapsed());

    let t = Instant::now();
    let reports = sweep_bijection(&fam, 2_000_000);
    let bad: Vec<_> = reports.iter().filter(|r| !r.as_ref().is_ok_and(|r| r.ok())).collect();
    println!("bijection: {} failures in {:.2?}", bad.len(), t.elapsed());

    let t = Instant::now();
    let (mut derivations, mut unjoinable, mut disagree, mut witness) = (0, 0, 0, None);
    for r in sweep_rewriting(&fam, 2_000_000, 200_000).into_iter().flatten() {
        derivations += r.derivations;
        unjoinable += r.unjoinable_peaks;
        disagree += r.strategy_disagreements;
        witness = witness.or(r.witness);
    }
    println!("rewriting: {derivations} derivations, {unjoinable} with unjoinable peaks, {disagree} strategy disagreements in {:.2?}", t.elapsed());
    if let Some(w) = witness {
        println!("witness: {w}");
    }
}
