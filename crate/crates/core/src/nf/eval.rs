use num_traits::Zero;

use crate::error::Result;
use crate::nat::{ack_eval, radix_ack, Arg, BoundedNat, EvalBudget, Nat, RadixNat};
use crate::nf::sandwich::{normal_form, normal_form_in};
use crate::NfTerm;

/// Integer value of `t` read in base `k`.
pub fn eval_term(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<BoundedNat> {
    let mut total = Nat::zero();
    for b in t.blocks() {
        let BoundedNat::Value(a) = eval_term(&b.index, k, budget)? else {
            return Ok(BoundedNat::Exceeded);
        };
        let BoundedNat::Value(x) = eval_term(&b.arg, k, budget)? else {
            return Ok(BoundedNat::Exceeded);
        };
        let BoundedNat::Value(v) = ack_eval(&a, k, &Arg::Nat(x), budget)? else {
            return Ok(BoundedNat::Exceeded);
        };
        total += v * &b.coeff;
        if !budget.fits(&total) {
            return Ok(BoundedNat::Exceeded);
        }
    }
    Ok(BoundedNat::Value(total))
}

/// Value of `t` as a sparse radix-`k` number; reaches values whose top
/// exponent is itself up to the digit cap.
pub fn eval_term_radix(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<Option<RadixNat>> {
    let mut total = RadixNat::zero(k);
    for b in t.blocks() {
        let BoundedNat::Value(a) = eval_term(&b.index, k, budget)? else {
            return Ok(None);
        };
        let Some(x) = eval_term_radix(&b.arg, k, budget)? else {
            return Ok(None);
        };
        let Some(x) = x.to_nat(budget) else {
            return Ok(None);
        };
        let Some(v) = radix_ack(&a, k, &Arg::Nat(x), budget) else {
            return Ok(None);
        };
        let Some(s) = v.mul_nat(&b.coeff, budget).and_then(|v| total.add(&v, budget)) else {
            return Ok(None);
        };
        total = s;
    }
    Ok(Some(total))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(String),
    Exceeded,
}

/// Valid iff `t` is exactly the base-`k` normal form of its own value.
pub fn validate_nf(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<Validity> {
    if let Some(b) = t.blocks().iter().find(|b| b.coeff.is_zero()) {
        return Ok(Validity::Invalid(format!(
            "zero coefficient on A({},{})",
            b.index, b.arg
        )));
    }
    let expected = match eval_term(t, k, budget)? {
        BoundedNat::Value(v) => normal_form(&v, k)?,
        BoundedNat::Exceeded => {
            let Some(v) = eval_term_radix(t, k, budget)? else {
                return Ok(Validity::Exceeded);
            };
            match normal_form_in(&v, k, budget)? {
                Some(nf) => nf,
                None => return Ok(Validity::Exceeded),
            }
        }
    };
    if &expected == t {
        Ok(Validity::Valid)
    } else {
        let mut shown = expected.to_string();
        if shown.len() > 200 {
            shown.truncate(200);
            shown.push_str("...");
        }
        Ok(Validity::Invalid(format!("value has normal form {shown}")))
    }
}
