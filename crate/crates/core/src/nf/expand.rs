use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::nat::{EvalBudget, Nat, RadixNat};
use crate::nf::eval::{eval_term, eval_term_radix};
use crate::nf::sandwich::normal_form;
use crate::NfTerm;

/// `A^l_{a-1}(k, A_a(k, b-s))` for a head `A_a b`, written as nested blocks.
///
/// With `check_guard`, the result must satisfy
/// `A_{a-1} b <= A^l_{a-1} A_a(b-s) < A_a b`, which makes it normal as written
/// when the head is in case B.
pub fn right_expand(
    t: &NfTerm,
    s: &Nat,
    l: &Nat,
    k: &Nat,
    check_guard: bool,
    budget: &EvalBudget,
) -> Result<NfTerm> {
    if l.is_zero() || l > k {
        return Err(Error::NotApplicable("layer count must lie in 1..=k"));
    }
    let out = expand_layers(t, s, l, k, budget)?;
    if check_guard {
        let h = t.head().ok_or(Error::ZeroTerm)?;
        let lower = NfTerm::single(lower_index(t, k, budget)?, h.arg.clone());
        let head = NfTerm::single(h.index.clone(), h.arg.clone());
        let le = |x: &NfTerm, y: &NfTerm| -> Result<Ordering> {
            let (Some(x), Some(y)) = (
                eval_term_radix(x, k, budget)?,
                eval_term_radix(y, k, budget)?,
            ) else {
                return Err(Error::Blowup);
            };
            Ok(RadixNat::cmp(&x, &y))
        };
        if le(&lower, &out)? == Ordering::Greater || le(&out, &head)? != Ordering::Less {
            return Err(Error::GuardViolated);
        }
    }
    Ok(out)
}

/// Full right expansion: `A_a b = A^{s k}_{a-1} A_a(b-s)` as nested blocks.
pub fn right_expand_full(t: &NfTerm, s: &Nat, k: &Nat, budget: &EvalBudget) -> Result<NfTerm> {
    expand_layers(t, s, &(s * k), k, budget)
}

fn lower_index(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<NfTerm> {
    let h = t.head().ok_or(Error::ZeroTerm)?;
    let a = eval_term(&h.index, k, budget)?.value().ok_or(Error::Blowup)?;
    if a.is_zero() {
        return Err(Error::NotApplicable("right expansion needs a head index a >= 1"));
    }
    normal_form(&(a - 1u8), k)
}

fn expand_layers(t: &NfTerm, s: &Nat, l: &Nat, k: &Nat, budget: &EvalBudget) -> Result<NfTerm> {
    let h = t.head().ok_or(Error::ZeroTerm)?;
    let below = lower_index(t, k, budget)?;
    let b = eval_term(&h.arg, k, budget)?.value().ok_or(Error::Blowup)?;
    if s.is_zero() || s > &(&b + 1u8) {
        return Err(Error::NotApplicable("expansion depth must lie in 1..=b+1"));
    }
    // A_a(-1) = 1
    let mut out = if s == &(&b + 1u8) {
        NfTerm::one()
    } else {
        NfTerm::single(h.index.clone(), normal_form(&(b - s), k)?)
    };
    let layers: u64 = num_traits::ToPrimitive::to_u64(l)
        .filter(|&n| n <= budget.max_nodes)
        .ok_or(Error::Blowup)?;
    for _ in 0..layers {
        out = NfTerm::single(below.clone(), out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn examples() {
        let d = EvalBudget::default();
        let a11 = parse("A(A(0,0),A(0,0))").unwrap();
        let t = right_expand(&a11, &n(2), &n(2), &n(2), false, &d).unwrap();
        assert_eq!(t.to_string(), "A(0,A(0,A(0,0)))");
        assert_eq!(eval_term(&t, &n(2), &d).unwrap().value(), Some(n(4)));
        let full = right_expand_full(&a11, &n(2), &n(2), &d).unwrap();
        assert_eq!(eval_term(&full, &n(2), &d).unwrap().value(), Some(n(65536)));

        let a10 = parse("A(A(0,0),0)").unwrap();
        let t = right_expand(&a10, &n(1), &n(3), &n(3), false, &d).unwrap();
        assert_eq!(eval_term(&t, &n(3), &d).unwrap().value(), Some(n(7625597484987)));

        let a21 = parse("A(A(0,A(0,0)),A(0,0))").unwrap();
        let t = right_expand(&a21, &n(1), &n(2), &n(2), false, &d).unwrap();
        assert_eq!(t.to_string(), "A(A(0,0),A(A(0,0),A(A(0,A(0,0)),0)))");
        assert!(right_expand(&a21, &n(1), &n(3), &n(2), false, &d).is_err());
    }

    #[test]
    fn guard() {
        let d = EvalBudget::default();
        // A_1 1 at base 2: A_0 1 <= A_0^2 A_1(-1) = 4 < 65536
        let a11 = parse("A(A(0,0),A(0,0))").unwrap();
        assert!(right_expand(&a11, &n(2), &n(2), &n(2), true, &d).is_ok());
        // A_0 A_1 0 = 16 < A_0 1 = 2 fails the lower side? no: 2 <= 16; but s=1, l=1
        // gives A_0(A_1 0) = 16 which is below A_1 1 and above A_0 1
        assert!(right_expand(&a11, &n(1), &n(1), &n(2), true, &d).is_ok());
        // A_1 0 at base 2 with s=1, l=1: A_0 1 = 2 <= A_0 1 = 2 < 4 holds
        let a10 = parse("A(A(0,0),0)").unwrap();
        assert!(right_expand(&a10, &n(1), &n(1), &n(2), true, &d).is_ok());
    }
}
