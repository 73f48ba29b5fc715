use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::nat::{ack_cmp_threshold, radix_ack, Arg, EvalBudget, Nat, RadixNat, Threshold};
use crate::term::Block;
use crate::NfTerm;

/// Exact natural numbers the sandwiching search can run over.
pub trait Magnitude: Clone + Ord {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    /// `A_a(k,b)` when it is at most `bound`.
    fn ack_at_most(a: &Nat, k: &Nat, b: &Nat, bound: &Self, budget: &EvalBudget) -> Option<Self>;
    fn materialize(&self, budget: &EvalBudget) -> Option<Nat>;
    /// `(self div d, self mod d)` for `d` a power of the base.
    fn divmod_block(&self, d: &Self, budget: &EvalBudget) -> Option<(Nat, Self)>;
}

impl Magnitude for Nat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        Nat::zero()
    }

    fn ack_at_most(a: &Nat, k: &Nat, b: &Nat, bound: &Self, _: &EvalBudget) -> Option<Self> {
        match ack_cmp_threshold(a, k, &Arg::Nat(b.clone()), bound).ok()? {
            Threshold::LeqWith(v) => Some(v),
            Threshold::Greater => None,
        }
    }

    fn materialize(&self, _: &EvalBudget) -> Option<Nat> {
        Some(self.clone())
    }

    fn divmod_block(&self, d: &Self, _: &EvalBudget) -> Option<(Nat, Self)> {
        Some(self.div_rem(d))
    }
}

impl Magnitude for RadixNat {
    fn is_zero(&self) -> bool {
        RadixNat::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        RadixNat::zero(self.radix())
    }

    fn ack_at_most(a: &Nat, k: &Nat, b: &Nat, bound: &Self, budget: &EvalBudget) -> Option<Self> {
        radix_ack(a, k, &Arg::Nat(b.clone()), budget).filter(|v| v <= bound)
    }

    fn materialize(&self, budget: &EvalBudget) -> Option<Nat> {
        self.to_nat(budget)
    }

    fn divmod_block(&self, d: &Self, budget: &EvalBudget) -> Option<(Nat, Self)> {
        self.divmod_power(d.power_exponent()?, budget)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichStep<M = Nat> {
    pub a: Nat,
    pub b: Nat,
    /// `A_a(k,b)`
    pub value: M,
}

/// Sandwiching sequence `(a_i, b_i, m_i)` for `i = 1..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichSeq<M = Nat> {
    pub steps: Vec<SandwichStep<M>>,
    pub m: M,
    pub k: Nat,
}

impl<M: Magnitude> SandwichSeq<M> {
    pub fn last(&self) -> &SandwichStep<M> {
        self.steps.last().expect("nonempty sandwich")
    }

    /// `m_{n-1}`, or 0 when `n <= 1`.
    pub fn penum(&self) -> M {
        match self.steps.len() {
            0 | 1 => self.m.zero_like(),
            n => self.steps[n - 2].value.clone(),
        }
    }
}

fn check_base(k: &Nat) -> Result<()> {
    if *k < Nat::from(2u8) {
        Err(Error::BaseTooSmall)
    } else {
        Ok(())
    }
}

/// Sandwiching sequence over any magnitude domain. `None` when a step leaves the budget.
pub fn sandwich_in<M: Magnitude>(m: &M, k: &Nat, budget: &EvalBudget) -> Result<Option<SandwichSeq<M>>> {
    check_base(k)?;
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let at_most = |a: &Nat, b: &Nat| M::ack_at_most(a, k, b, m, budget);
    let mut steps = Vec::new();
    let mut prev = Nat::zero();
    // halts once A_0(k, m_n) > m
    while at_most(&Nat::zero(), &prev).is_some() {
        let mut a = Nat::zero();
        while at_most(&(&a + 1u8), &prev).is_some() {
            a += 1u8;
        }
        let mut lo = prev.clone();
        let mut lo_val = at_most(&a, &lo).expect("index chosen with A_a(m_i) <= m");
        let mut stride = Nat::one();
        let mut hi = loop {
            let c = &lo + &stride;
            match at_most(&a, &c) {
                Some(v) => {
                    lo = c;
                    lo_val = v;
                    stride <<= 1u8;
                }
                None => break c,
            }
        };
        while &hi - &lo > Nat::one() {
            let mid: Nat = (&lo + &hi) >> 1u8;
            match at_most(&a, &mid) {
                Some(v) => {
                    lo = mid;
                    lo_val = v;
                }
                None => hi = mid,
            }
        }
        let next = lo_val.materialize(budget);
        steps.push(SandwichStep {
            a,
            b: lo,
            value: lo_val,
        });
        match next {
            Some(x) => prev = x,
            None => break,
        }
    }
    Ok(Some(SandwichSeq {
        steps,
        m: m.clone(),
        k: k.clone(),
    }))
}

/// The sandwiching sequence of `m >= 1` in base `k`.
pub fn sandwich(m: &Nat, k: &Nat) -> Result<SandwichSeq> {
    Ok(sandwich_in(m, k, &EvalBudget::default())?.expect("concrete sandwich never exceeds"))
}

/// Hereditary normal form over any magnitude domain, head blocks merged into
/// coefficients. `None` when a step leaves the budget.
pub fn normal_form_in<M: Magnitude>(m: &M, k: &Nat, budget: &EvalBudget) -> Result<Option<NfTerm>> {
    check_base(k)?;
    let mut blocks = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let Some(seq) = sandwich_in(&cur, k, budget)? else {
            return Ok(None);
        };
        let last = seq.last();
        let Some((p, q)) = cur.divmod_block(&last.value, budget) else {
            return Ok(None);
        };
        blocks.push(Block::new(normal_form(&last.a, k)?, normal_form(&last.b, k)?, p));
        cur = q;
    }
    Ok(Some(NfTerm::from_blocks(blocks)))
}

/// The base-`k` normal form of `m`.
pub fn normal_form(m: &Nat, k: &Nat) -> Result<NfTerm> {
    Ok(normal_form_in(m, k, &EvalBudget::default())?.expect("concrete normal form never exceeds"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    fn triples(s: &SandwichSeq) -> Vec<(Nat, Nat, Nat)> {
        s.steps.iter().map(|t| (t.a.clone(), t.b.clone(), t.value.clone())).collect()
    }

    #[test]
    fn small_sandwiches() {
        assert_eq!(triples(&sandwich(&n(1), &n(2)).unwrap()), vec![(n(0), n(0), n(1))]);
        assert_eq!(
            triples(&sandwich(&n(21), &n(2)).unwrap()),
            vec![(n(1), n(0), n(4)), (n(0), n(4), n(16))]
        );
        assert_eq!(sandwich(&n(0), &n(2)), Err(Error::ZeroInput));
        assert_eq!(sandwich(&n(5), &n(1)), Err(Error::BaseTooSmall));
        let s = sandwich(&n(16), &n(2)).unwrap();
        assert_eq!(s.penum(), n(4));
    }

    #[test]
    fn normal_forms_print() {
        let nf = |m, k| normal_form(&n(m), &n(k)).unwrap().to_string();
        assert_eq!(nf(0, 3), "0");
        assert_eq!(nf(1, 5), "A(0,0)");
        assert_eq!(nf(3, 2), "A(0,A(0,0))+A(0,0)");
        assert_eq!(nf(4, 2), "A(A(0,0),0)");
        assert_eq!(nf(8, 2), "A(A(0,0),0)*2");
        assert_eq!(nf(12, 2), "A(A(0,0),0)*3");
        assert_eq!(nf(3, 4), "A(0,0)*3");
        assert_eq!(nf(21, 2), "A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)");
        assert_eq!(nf(26, 3), "A(0,A(0,0)*2)*2+A(0,A(0,0))*2+A(0,0)*2");
    }

    #[test]
    fn radix_domain_agrees_on_small_values() {
        let d = EvalBudget::default();
        for k in 2..5u64 {
            for m in 1..300u64 {
                let r = RadixNat::from_nat(&n(m), &n(k));
                assert_eq!(
                    normal_form_in(&r, &n(k), &d).unwrap().unwrap(),
                    normal_form(&n(m), &n(k)).unwrap()
                );
            }
        }
    }
}
