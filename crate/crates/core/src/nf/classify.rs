use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nat::Nat;
use crate::ordinal::cmp_terms;
use crate::NfTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NfClass {
    /// `n = 1` and `b = 0`
    CaseA,
    /// `b = penum > 0`
    CaseB,
    /// `b > penum`
    CaseC,
}

/// Value order on base-`k` normal forms (independent of `k`).
pub fn nf_cmp(s: &NfTerm, t: &NfTerm) -> Ordering {
    cmp_terms(s, t)
}

/// Case of the head block `A_a b` of a normal form.
pub fn classify(t: &NfTerm, _k: &Nat) -> Result<NfClass> {
    let h = t.head().ok_or(Error::ZeroTerm)?;
    Ok(classify_head(&h.index, &h.arg))
}

pub(crate) fn classify_head(index: &NfTerm, arg: &NfTerm) -> NfClass {
    if arg.is_zero() {
        return NfClass::CaseA;
    }
    // b = penum exactly when b's own normal form is one block of higher index
    match arg.as_single() {
        Some(inner) if nf_cmp(&inner.index, index) == Ordering::Greater => NfClass::CaseB,
        _ => NfClass::CaseC,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::sandwich::{normal_form, sandwich};
    use crate::term::parse;

    #[test]
    fn examples() {
        let two = Nat::from(2u8);
        let c = |s: &str| classify(&parse(s).unwrap(), &two).unwrap();
        assert_eq!(c("A(0,0)"), NfClass::CaseA);
        assert_eq!(c("A(0,A(A(0,0),0))"), NfClass::CaseB);
        assert_eq!(c("A(0,A(0,0))"), NfClass::CaseC);
        assert_eq!(classify(&NfTerm::zero(), &two), Err(Error::ZeroTerm));
    }

    #[test]
    fn agrees_with_sandwich_definition() {
        for k in 2..5u32 {
            let k = Nat::from(k);
            for m in 1..3000u32 {
                let m = Nat::from(m);
                let s = sandwich(&m, &k).unwrap();
                let last = s.last();
                let want = if s.steps.len() == 1 && last.b == Nat::from(0u8) {
                    NfClass::CaseA
                } else if last.b == s.penum() {
                    NfClass::CaseB
                } else {
                    NfClass::CaseC
                };
                let head = normal_form(&last.value, &k).unwrap();
                assert_eq!(classify(&head, &k).unwrap(), want, "m={m} k={k}");
            }
        }
    }
}
