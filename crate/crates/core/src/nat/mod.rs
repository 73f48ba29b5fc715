//! Exact evaluation of the base-parametrized Ackermann hierarchy
//! `A_a(k,-1) = 1`, `A_0(k,b) = k^b`, `A_{a+1}(k,b) = A_a^k(A_{a+1}(k,b-1))`.

mod radix;
pub(crate) use radix::radix_ack;
mod tower;
pub use tower::tower_ack;

pub use radix::RadixNat;
pub use tower::Tower;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Nat = BigUint;

/// Second Ackermann argument: a natural number or the `-1` sentinel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arg {
    MinusOne,
    Nat(Nat),
}

impl From<Nat> for Arg {
    fn from(n: Nat) -> Self {
        Arg::Nat(n)
    }
}

impl From<u64> for Arg {
    fn from(n: u64) -> Self {
        Arg::Nat(Nat::from(n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalBudget {
    /// Cap on the decimal length of any intermediate value.
    pub max_digits: u64,
    /// Cap on recursive unfoldings.
    pub max_calls: u64,
    /// Cap on blocks produced by symbolic term operations.
    pub max_nodes: u64,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget {
            max_digits: 100_000,
            max_calls: 10_000_000,
            max_nodes: 1_000_000,
        }
    }
}

impl EvalBudget {
    pub fn with_digits(max_digits: u64) -> Self {
        EvalBudget {
            max_digits: max_digits.max(1),
            ..Default::default()
        }
    }

    /// Largest bit length whose decimal length stays within `max_digits`.
    pub(crate) fn max_bits(&self) -> u64 {
        (self.max_digits as f64 * std::f64::consts::LOG2_10).floor() as u64
    }

    pub(crate) fn fits(&self, v: &Nat) -> bool {
        v.bits() <= self.max_bits()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundedNat {
    Value(Nat),
    Exceeded,
}

impl BoundedNat {
    pub fn value(self) -> Option<Nat> {
        match self {
            BoundedNat::Value(v) => Some(v),
            BoundedNat::Exceeded => None,
        }
    }

    fn from_opt(v: Option<Nat>) -> Self {
        v.map_or(BoundedNat::Exceeded, BoundedNat::Value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    LeqWith(Nat),
    Greater,
}

fn check_base(k: &Nat) -> Result<()> {
    if *k < Nat::from(2u8) {
        Err(Error::BaseTooSmall)
    } else {
        Ok(())
    }
}

pub(crate) fn log2(k: &Nat) -> f64 {
    match k.to_f64() {
        Some(f) if f.is_finite() => f.log2(),
        _ => k.bits() as f64,
    }
}

type MemoKey = (Nat, Nat, Nat);

fn memo() -> &'static Mutex<HashMap<MemoKey, Nat>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, Nat>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

const MEMO_MAX_BITS: u64 = 1 << 16;
const MEMO_MAX_ENTRIES: usize = 1 << 16;

/// Evaluator with a size limit: `None` means the true value lies above the limit.
struct Eval<'a> {
    k: &'a Nat,
    max_bits: u64,
    cap: Option<&'a Nat>,
    calls: u64,
    max_calls: u64,
}

impl Eval<'_> {
    fn over(&self, v: &Nat) -> bool {
        v.bits() > self.max_bits || self.cap.is_some_and(|c| v > c)
    }

    fn tick(&mut self) -> Option<()> {
        self.calls += 1;
        (self.calls <= self.max_calls).then_some(())
    }

    fn pow(&mut self, b: &Nat) -> Option<Nat> {
        // k^b has about b*log2(k) bits
        let est = b.to_f64().unwrap_or(f64::INFINITY) * log2(self.k);
        if est > self.max_bits as f64 + 2.0 {
            return None;
        }
        if let Some(c) = self.cap {
            if est > c.bits() as f64 + 2.0 {
                return None;
            }
        }
        let v = self.k.pow(b.to_u32()?);
        (!self.over(&v)).then_some(v)
    }

    fn ack(&mut self, a: &Nat, b: &Arg) -> Option<Nat> {
        self.tick()?;
        let b = match b {
            Arg::MinusOne => {
                let one = Nat::one();
                return (!self.over(&one)).then_some(one);
            }
            Arg::Nat(b) => b,
        };
        if a.is_zero() {
            return self.pow(b);
        }
        // max{a,b} < A_a(k,b)
        if self.over(a) || self.over(b) {
            return None;
        }
        let key = (a.clone(), self.k.clone(), b.clone());
        if let Some(v) = memo().lock().unwrap().get(&key) {
            return (!self.over(v)).then(|| v.clone());
        }
        let two = Nat::from(2u8);
        if *a > two {
            // A_a(k,b) >= A_2(k,0)
            self.ack(&two, &Arg::Nat(Nat::zero()))?;
        }
        let lower = a - 1u8;
        let reps = self.k.to_u64()?;
        let mut v = Nat::one();
        let mut j = Nat::zero();
        loop {
            for _ in 0..reps {
                v = self.ack(&lower, &Arg::Nat(v))?;
            }
            if &j == b {
                break;
            }
            j += 1u8;
        }
        if v.bits() <= MEMO_MAX_BITS {
            let mut m = memo().lock().unwrap();
            if m.len() < MEMO_MAX_ENTRIES {
                m.insert(key, v.clone());
            }
        }
        Some(v)
    }
}

/// Native evaluation for small values; `None` if the value exceeds `cap`.
fn ack_small(a: u64, k: u64, b: Option<u64>, cap: u64) -> Option<u64> {
    let Some(b) = b else {
        return (cap >= 1).then_some(1);
    };
    if a == 0 {
        let mut v: u64 = 1;
        for _ in 0..b {
            v = v.checked_mul(k).filter(|&x| x <= cap)?;
        }
        return (v <= cap).then_some(v);
    }
    if a >= cap || b >= cap {
        return None;
    }
    let mut v = 1;
    for _ in 0..=b {
        for _ in 0..k {
            v = ack_small(a - 1, k, Some(v), cap)?;
        }
    }
    Some(v)
}

/// `A_a(k,b)` if it fits `budget`, otherwise `Exceeded`.
pub fn ack_eval(a: &Nat, k: &Nat, b: &Arg, budget: &EvalBudget) -> Result<BoundedNat> {
    check_base(k)?;
    let mut ev = Eval {
        k,
        max_bits: budget.max_bits(),
        cap: None,
        calls: 0,
        max_calls: budget.max_calls,
    };
    Ok(BoundedNat::from_opt(ev.ack(a, b)))
}

/// Decides `A_a(k,b) <= t`, returning the value when it holds.
pub fn ack_cmp_threshold(a: &Nat, k: &Nat, b: &Arg, t: &Nat) -> Result<Threshold> {
    check_base(k)?;
    let to_res = |v: Option<Nat>| v.map_or(Threshold::Greater, Threshold::LeqWith);
    if let (Some(a), Some(k), Some(t)) = (a.to_u64(), k.to_u64(), t.to_u64()) {
        let b = match b {
            Arg::MinusOne => Some(None),
            Arg::Nat(b) => b.to_u64().map(Some),
        };
        match b {
            Some(b) => return Ok(to_res(ack_small(a, k, b, t).map(Nat::from))),
            None => return Ok(Threshold::Greater),
        }
    }
    if let Arg::Nat(bv) = b {
        if (!a.is_zero() && a >= t) || bv >= t {
            return Ok(Threshold::Greater);
        }
    }
    let mut ev = Eval {
        k,
        max_bits: t.bits(),
        cap: Some(t),
        calls: 0,
        max_calls: u64::MAX,
    };
    Ok(to_res(ev.ack(a, b)))
}

/// The `j`-fold iterate `A_a^j(k,b)`.
pub fn ack_iter(a: &Nat, k: &Nat, b: &Arg, j: &Nat, budget: &EvalBudget) -> Result<BoundedNat> {
    check_base(k)?;
    if j.is_zero() {
        return match b {
            Arg::MinusOne => Err(Error::IterZeroOnSentinel),
            Arg::Nat(b) => Ok(BoundedNat::Value(b.clone())),
        };
    }
    let mut ev = Eval {
        k,
        max_bits: budget.max_bits(),
        cap: None,
        calls: 0,
        max_calls: budget.max_calls,
    };
    let mut x = match ev.ack(a, b) {
        Some(x) => x,
        None => return Ok(BoundedNat::Exceeded),
    };
    let mut i = Nat::one();
    while &i < j {
        x = match ev.ack(a, &Arg::Nat(x)) {
            Some(x) => x,
            None => return Ok(BoundedNat::Exceeded),
        };
        i += 1u8;
    }
    Ok(BoundedNat::Value(x))
}

/// Convenience wrapper over small arguments.
pub fn ack(a: u64, k: u64, b: u64) -> Option<Nat> {
    ack_eval(
        &Nat::from(a),
        &Nat::from(k),
        &Arg::from(b),
        &EvalBudget::default(),
    )
    .ok()?
    .value()
}
