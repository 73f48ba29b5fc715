//! Brute-force reference implementations for tests.
//!
//! Nothing here uses the optimized evaluator, binary search, memoization or
//! coefficient merging: indices and arguments are found by linear scans and
//! every Ackermann value is recomputed from the recursion.

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::nf::{SandwichSeq, SandwichStep};
use crate::Nat;

/// `A_a(k,b)` by unfolding the recursion, `None` above `max_bits` bits.
pub fn naive_ack(a: u64, k: &Nat, b: Option<&Nat>, max_bits: u64) -> Option<Nat> {
    naive(a, k, b, &Cap::Bits(max_bits))
}

/// Upper limit on naive evaluation.
#[derive(Debug, Clone)]
enum Cap<'a> {
    Value(&'a Nat),
    Bits(u64),
}

impl Cap<'_> {
    fn over(&self, v: &Nat) -> bool {
        match self {
            Cap::Value(c) => v > *c,
            Cap::Bits(b) => v.bits() > *b,
        }
    }
}

/// `A_a(k,b)` by unfolding the recursion; `None` once a value passes the cap.
fn naive(a: u64, k: &Nat, b: Option<&Nat>, cap: &Cap) -> Option<Nat> {
    let Some(b) = b else {
        return Some(Nat::one());
    };
    if a == 0 {
        // k^b >= 2^b
        let bits = match cap {
            Cap::Value(c) => c.bits(),
            Cap::Bits(x) => *x,
        };
        if b > &Nat::from(bits) {
            return None;
        }
        let v = k.pow(b.to_u32()?);
        return (!cap.over(&v)).then_some(v);
    }
    // A_a(k,b) > b
    if cap.over(b) {
        return None;
    }
    let reps = k.to_u64()?;
    let mut v = Nat::one();
    let mut j = Nat::zero();
    loop {
        for _ in 0..reps {
            v = naive(a - 1, k, Some(&v), cap)?;
        }
        if &j == b {
            return Some(v);
        }
        j += 1u8;
    }
}

fn at_most(a: u64, k: &Nat, b: &Nat, m: &Nat) -> Option<Nat> {
    naive(a, k, Some(b), &Cap::Value(m))
}

fn check_base(k: &Nat) -> Result<()> {
    if *k < Nat::from(2u8) {
        Err(Error::BaseTooSmall)
    } else {
        Ok(())
    }
}

/// Sandwiching sequence by exhaustive linear search.
pub fn oracle_sandwich(m: &Nat, k: &Nat) -> Result<SandwichSeq> {
    check_base(k)?;
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut steps = Vec::new();
    let mut prev = Nat::zero();
    while at_most(0, k, &prev, m).is_some() {
        let mut a = 0u64;
        while at_most(a + 1, k, &prev, m).is_some() {
            a += 1;
        }
        let mut b = prev.clone();
        while at_most(a, k, &(&b + 1u8), m).is_some() {
            b += 1u8;
        }
        let value = at_most(a, k, &b, m).expect("scan stays below m");
        steps.push(SandwichStep {
            a: Nat::from(a),
            b,
            value: value.clone(),
        });
        prev = value;
    }
    Ok(SandwichSeq {
        steps,
        m: m.clone(),
        k: k.clone(),
    })
}

const STEP_BITS: u64 = 3_321_929; // 10^6 decimal digits

/// Value of the base change `k -> l` of `n`, computed from oracle sandwiches
/// with one block per sandwich (no coefficients).
fn changed_value(n: &Nat, k: &Nat, l: &Nat) -> Result<Nat> {
    if n.is_zero() {
        return Ok(Nat::zero());
    }
    let s = oracle_sandwich(n, k)?;
    let last = s.steps.last().expect("nonempty");
    let a = changed_value(&last.a, k, l)?.to_u64().ok_or(Error::Overflow)?;
    let b = changed_value(&last.b, k, l)?;
    let head = naive(a, l, Some(&b), &Cap::Bits(STEP_BITS)).ok_or(Error::Overflow)?;
    let total = head + changed_value(&(n - &last.value), k, l)?;
    if total.bits() > STEP_BITS {
        return Err(Error::Overflow);
    }
    Ok(total)
}

/// `<n>(k -> k+1) - 1` for `n >= 1`.
pub fn oracle_goodstein_step(n: &Nat, k: &Nat) -> Result<Nat> {
    check_base(k)?;
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(changed_value(n, k, &(k + 1u8))? - 1u8)
}

/// Maximal-value-then-maximal-index approximation `m = A_a(k,b) + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltNF {
    pub a0: Nat,
    pub b0: Nat,
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
}

pub fn alt_normal_form(m: &Nat, k: &Nat) -> Result<AltNF> {
    check_base(k)?;
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut best: Option<(u64, Nat, Nat)> = None;
    let mut a = 0u64;
    while at_most(a, k, &Nat::zero(), m).is_some() {
        let mut b = Nat::zero();
        while at_most(a, k, &(&b + 1u8), m).is_some() {
            b += 1u8;
        }
        let v = at_most(a, k, &b, m).expect("scan stays below m");
        // ties go to the larger index
        if best.as_ref().is_none_or(|(_, _, bv)| &v >= bv) {
            best = Some((a, b, v));
        }
        a += 1;
    }
    let (a, b, v) = best.expect("A_0(k,0) = 1 <= m");
    Ok(AltNF {
        a0: Nat::from(a),
        b0: b.clone(),
        a: Nat::from(a),
        b,
        c: m - v,
    })
}

/// Compares `A_1^p(k,x)` with `A_1^q(k,y)` using strict monotonicity of `A_1`.
fn cmp_a1_iterates(k: &Nat, p: u64, x: &Nat, q: u64, y: &Nat) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let c = p.min(q);
    let (p, q) = (p - c, q - c);
    // one side is now a bare number: push the other through A_1 under a cap
    let lift = |n: u64, start: &Nat, cap: &Nat| -> Option<Nat> {
        let mut v = start.clone();
        for _ in 0..n {
            v = naive(1, k, Some(&v), &Cap::Value(cap))?;
        }
        Some(v)
    };
    if p == 0 {
        match lift(q, y, x) {
            Some(v) => x.cmp(&v),
            None => Ordering::Less,
        }
    } else {
        match lift(p, x, y) {
            Some(v) => v.cmp(y),
            None => Ordering::Greater,
        }
    }
}

/// For `j in 1..=j_max`, checks that `A_1^j(k,2)` differs from every
/// `A_2(k,d) = A_1^{k(d+1)}(k,1)` up to the first one above it.
pub fn a1_iterates_avoid_a2(k: &Nat, j_max: u64) -> Result<bool> {
    check_base(k)?;
    let kk = k.to_u64().ok_or(Error::Overflow)?;
    let (two, one) = (Nat::from(2u8), Nat::one());
    for j in 1..=j_max {
        let mut d = 0u64;
        loop {
            match cmp_a1_iterates(k, kk * (d + 1), &one, j, &two) {
                std::cmp::Ordering::Equal => return Ok(false),
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Less => d += 1,
            }
        }
    }
    Ok(true)
}
