//! The process `G_0 = m`, `G_{i+1} = <G_i>(i+2 -> i+3) - 1`, run on integers or
//! on normal-form terms, with the ordinal assignment `O_m(i)` that bounds it.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nat::{BoundedNat, EvalBudget, Nat};
use crate::nf::{base_change, eval_term, normal_form, predecessor};
use crate::ordinal::{cmp_terms, to_ordinal};
use crate::{NfTerm, OrdTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Concrete,
    Symbolic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Concrete => "concrete",
            Mode::Symbolic => "symbolic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Concrete(Nat),
    Symbolic(NfTerm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodsteinState {
    pub i: u64,
    /// Always `i + 2`.
    pub base: Nat,
    pub value: Value,
}

impl GoodsteinState {
    pub fn start(m: &Nat, mode: Mode) -> GoodsteinState {
        let base = Nat::from(2u8);
        let value = match mode {
            Mode::Concrete => Value::Concrete(m.clone()),
            Mode::Symbolic => Value::Symbolic(normal_form(m, &base).expect("base 2")),
        };
        GoodsteinState { i: 0, base, value }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Concrete(v) => v.is_zero(),
            Value::Symbolic(t) => t.is_zero(),
        }
    }

    /// Normal form of the current value in the current base.
    pub fn term(&self) -> NfTerm {
        match &self.value {
            Value::Concrete(v) => normal_form(v, &self.base).expect("base >= 2"),
            Value::Symbolic(t) => t.clone(),
        }
    }
}

/// One step: base change `i+2 -> i+3`, then subtract one.
pub fn gstep(s: &GoodsteinState, budget: &EvalBudget) -> Result<GoodsteinState> {
    if s.is_zero() {
        return Err(Error::ZeroInput);
    }
    let next = &s.base + 1u8;
    let value = match &s.value {
        Value::Concrete(v) => {
            let t = base_change(&normal_form(v, &s.base)?, &s.base, &next)?;
            match eval_term(&t, &next, budget)? {
                BoundedNat::Value(w) => Value::Concrete(w - 1u8),
                BoundedNat::Exceeded => return Err(Error::Blowup),
            }
        }
        Value::Symbolic(t) => {
            let t = base_change(t, &s.base, &next)?;
            Value::Symbolic(predecessor(&t, &next, budget)?)
        }
    };
    Ok(GoodsteinState {
        i: s.i + 1,
        base: next,
        value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub i: u64,
    #[serde(with = "nat_string")]
    pub base: Nat,
    pub nf: NfTerm,
    pub ordinal: OrdTerm,
    /// This entry's ordinal exceeds the next one's (vacuously true for the last).
    pub descent_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    MaxSteps,
    Blowup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// `G_i = 0`.
    Terminated(u64),
    /// Stopped with `G_i` nonzero.
    Budget { i: u64, reason: StopReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodsteinTrace {
    #[serde(with = "nat_string")]
    pub seed: Nat,
    pub mode: Mode,
    pub entries: Vec<TraceEntry>,
    pub outcome: Outcome,
}

/// Runs at most `max_steps` steps from `G_0 = m`.
pub fn grun(m: &Nat, mode: Mode, max_steps: u64, budget: &EvalBudget) -> GoodsteinTrace {
    let mut s = GoodsteinState::start(m, mode);
    let mut entries = Vec::new();
    let outcome = loop {
        let nf = s.term();
        entries.push(TraceEntry {
            i: s.i,
            base: s.base.clone(),
            ordinal: to_ordinal(&nf),
            nf,
            descent_ok: true,
        });
        if s.is_zero() {
            break Outcome::Terminated(s.i);
        }
        if s.i >= max_steps {
            break Outcome::Budget {
                i: s.i,
                reason: StopReason::MaxSteps,
            };
        }
        match gstep(&s, budget) {
            Ok(n) => s = n,
            Err(_) => {
                break Outcome::Budget {
                    i: s.i,
                    reason: StopReason::Blowup,
                }
            }
        }
    };
    for j in 1..entries.len() {
        let ok = cmp_terms(&entries[j - 1].ordinal, &entries[j].ordinal) == Ordering::Greater;
        entries[j - 1].descent_ok = ok;
    }
    GoodsteinTrace {
        seed: m.clone(),
        mode,
        entries,
        outcome,
    }
}

/// Every consecutive pair of ordinals strictly decreases (vacuous for one entry).
pub fn descent_check(tr: &GoodsteinTrace) -> bool {
    tr.entries
        .windows(2)
        .all(|w| cmp_terms(&w[0].ordinal, &w[1].ordinal) == Ordering::Greater)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Blowup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsBoundRow {
    pub k: u64,
    /// `O_m(k)`, absent when the symbolic run could not reach step `k`.
    pub lhs: Option<OrdTerm>,
    /// `<k+1> O_m(0)`.
    pub rhs: OrdTerm,
    pub verdict: Verdict,
}

/// Checks `O_m(k) >= <k+1> O_m(0)` for `k = 0..=steps` while `G_k` is defined
/// and nonzero-or-first-zero.
pub fn fs_bound_check(m: &Nat, steps: u64, budget: &EvalBudget) -> Vec<FsBoundRow> {
    let tr = grun(m, Mode::Symbolic, steps, budget);
    let mut rows = Vec::new();
    let mut rhs = tr.entries[0].ordinal.clone();
    for k in 0..=steps {
        if k > 0 && !rhs.is_zero() {
            rhs = crate::ordinal::fund_seq(&rhs, &Nat::from(k + 1)).expect("nonzero");
        }
        match tr.entries.get(k as usize) {
            Some(e) => {
                let ok = cmp_terms(&e.ordinal, &rhs) != Ordering::Less;
                rows.push(FsBoundRow {
                    k,
                    lhs: Some(e.ordinal.clone()),
                    rhs: rhs.clone(),
                    verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                });
            }
            None => {
                if matches!(tr.outcome, Outcome::Terminated(_)) {
                    break;
                }
                rows.push(FsBoundRow {
                    k,
                    lhs: None,
                    rhs: rhs.clone(),
                    verdict: Verdict::Blowup,
                });
            }
        }
    }
    rows
}

pub(crate) mod nat_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Nat;

    pub fn serialize<S: Serializer>(n: &Nat, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Nat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    fn values(tr: &GoodsteinTrace) -> Vec<Nat> {
        let d = EvalBudget::default();
        tr.entries
            .iter()
            .map(|e| eval_term(&e.nf, &e.base, &d).unwrap().value().unwrap())
            .collect()
    }

    #[test]
    fn small_seeds_terminate() {
        let d = EvalBudget::default();
        for (m, idx, vals) in [
            (0u64, 0u64, vec![0u64]),
            (1, 1, vec![1, 0]),
            (2, 3, vec![2, 2, 1, 0]),
            (3, 5, vec![3, 3, 3, 2, 1, 0]),
        ] {
            for mode in [Mode::Concrete, Mode::Symbolic] {
                let tr = grun(&n(m), mode, 50, &d);
                assert_eq!(tr.outcome, Outcome::Terminated(idx), "m={m} {mode}");
                assert_eq!(values(&tr), vals.iter().map(|&v| n(v)).collect::<Vec<_>>());
                assert!(descent_check(&tr));
            }
        }
    }

    #[test]
    fn first_steps() {
        let d = EvalBudget::default();
        let s = gstep(&GoodsteinState::start(&n(4), Mode::Concrete), &d).unwrap();
        assert_eq!(s.value, Value::Concrete(n(7625597484986)));
        assert_eq!(s.base, n(3));
        let s = gstep(&GoodsteinState::start(&n(3), Mode::Concrete), &d).unwrap();
        assert_eq!(s.value, Value::Concrete(n(3)));
    }

    #[test]
    fn seed_three_ordinals() {
        let tr = grun(&n(3), Mode::Concrete, 10, &EvalBudget::default());
        let ords: Vec<String> = tr.entries.iter().map(|e| e.ordinal.to_string()).collect();
        assert_eq!(
            ords,
            [
                "phi(0,phi(0,0))+phi(0,0)",
                "phi(0,phi(0,0))",
                "phi(0,0)*3",
                "phi(0,0)*2",
                "phi(0,0)",
                "0"
            ]
        );
    }

    #[test]
    fn json_round_trip() {
        let tr = grun(&n(3), Mode::Symbolic, 10, &EvalBudget::default());
        let s = serde_json::to_string(&tr).unwrap();
        assert!(s.contains("\"outcome\":{\"terminated\":5}"));
        let back: GoodsteinTrace = serde_json::from_str(&s).unwrap();
        assert_eq!(back, tr);
    }

    #[test]
    fn fs_bounds() {
        let d = EvalBudget::default();
        for (m, steps) in [(3u64, 4u64), (4, 3), (1, 1)] {
            let rows = fs_bound_check(&n(m), steps, &d);
            assert!(rows.iter().all(|r| r.verdict == Verdict::Pass), "m={m}: {rows:?}");
        }
        let rows = fs_bound_check(&n(1), 1, &d);
        assert!(rows[1].rhs.is_zero() && rows[1].lhs.as_ref().unwrap().is_zero());
    }
}
