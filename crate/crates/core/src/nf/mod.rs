//! Hereditary base-`k` Ackermann normal forms.

mod bch;
mod classify;
mod eval;
mod expand;
mod pred;
mod sandwich;

pub use bch::base_change;
pub use classify::{classify, nf_cmp, NfClass};
pub use eval::{eval_term, eval_term_radix, validate_nf, Validity};
pub use expand::{right_expand, right_expand_full};
pub use pred::{left_expansion, predecessor, predecessor_with, LeftExpansion, PredMode, PredOutcome};
pub use sandwich::{normal_form, normal_form_in, sandwich, sandwich_in, Magnitude, SandwichSeq, SandwichStep};

pub use crate::term::{parse, print, term_norm};
