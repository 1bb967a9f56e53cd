//! Proof theory of the sequent calculus for skew non-commutative
//! multiplicative intuitionistic linear logic (SkNMILL): derivations and
//! cut admissibility, the congruence on derivations, a tag-annotated focused
//! calculus that picks one canonical derivation per equivalence class, and a
//! Hilbert-style term calculus for the free skew monoidal closed category.

pub mod equiv;
pub mod error;
pub mod family;
pub mod focused;
pub mod formula;
pub mod hilbert;
pub mod par;
pub mod render;
pub mod seqcalc;
pub mod sexp;

pub use error::{Error, Result};
pub use formula::{parse_formula, parse_sequent, Formula, Sequent, Stoup};
pub use seqcalc::Derivation;
