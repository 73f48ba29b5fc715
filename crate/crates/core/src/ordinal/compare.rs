//! Order on hereditary block terms read as Veblen normal forms.
//!
//! The same structural comparison orders base-`k` normal forms by value, since
//! the omega image of normal forms is order preserving.

use std::cmp::Ordering;

use crate::term::{Block, Term};

/// Compares two terms in merged normal form (strictly descending heads).
pub fn cmp_terms<K>(x: &Term<K>, y: &Term<K>) -> Ordering {
    for (bx, by) in x.blocks().iter().zip(y.blocks()) {
        let o = cmp_heads(bx, by).then_with(|| bx.coeff.cmp(&by.coeff));
        if o != Ordering::Equal {
            return o;
        }
    }
    x.len().cmp(&y.len())
}

/// Compares `phi(a,b)` with `phi(a',b')`.
pub fn cmp_heads<K>(x: &Block<K>, y: &Block<K>) -> Ordering {
    match cmp_terms(&x.index, &y.index) {
        Ordering::Equal => cmp_terms(&x.arg, &y.arg),
        // a < a': below iff b < phi(a',b')
        Ordering::Less => match cmp_with_head(&x.arg, y) {
            Ordering::Less => Ordering::Less,
            _ => Ordering::Greater,
        },
        // a > a': below iff phi(a,b) <= b'
        Ordering::Greater => match cmp_with_head(&y.arg, x) {
            Ordering::Less => Ordering::Greater,
            _ => Ordering::Less,
        },
    }
}

/// Compares a term with the single block `phi(h.index, h.arg)`.
pub fn cmp_with_head<K>(x: &Term<K>, h: &Block<K>) -> Ordering {
    let Some(first) = x.head() else {
        return Ordering::Less;
    };
    match cmp_heads(first, h) {
        Ordering::Equal if first.coeff > 1u8.into() || x.len() > 1 => Ordering::Greater,
        o => o,
    }
}
