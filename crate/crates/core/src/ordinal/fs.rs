//! Fundamental sequences, iterated step-down and the relations `<=_k`.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{canonicalize, cmp_terms, iterate_phi};
use crate::error::{Error, Result};
use crate::term::Block;
use crate::{Nat, OrdTerm};

/// Trailing block is `phi_0 0`.
pub fn is_successor(t: &OrdTerm) -> bool {
    t.last().is_some_and(|b| b.index.is_zero() && b.arg.is_zero())
}

/// `x` if `a` is a successor, 1 otherwise.
pub fn x_hat(a: &OrdTerm, x: &Nat) -> Nat {
    if is_successor(a) {
        x.clone()
    } else {
        Nat::one()
    }
}

/// `l` is a single block `phi_b g` with `b > a`, i.e. a fixed point of `phi_a`.
pub fn in_fix(a: &OrdTerm, l: &OrdTerm) -> bool {
    let l = canonicalize(l);
    l.as_single()
        .is_some_and(|b| cmp_terms(&b.index, &canonicalize(a)) == Ordering::Greater)
}

/// `[x] xi`.
pub fn fund_seq(xi: &OrdTerm, x: &Nat) -> Result<OrdTerm> {
    if xi.is_zero() {
        return Err(Error::ZeroHasNoFS);
    }
    Ok(fs(&canonicalize(xi), x))
}

/// The successor predecessor `b - 1` of a successor term.
fn drop_one(b: &OrdTerm) -> OrdTerm {
    let (last, init) = b.blocks().split_last().expect("successor is nonzero");
    let mut out = init.to_vec();
    if !last.coeff.is_one() {
        out.push(Block::new(OrdTerm::zero(), OrdTerm::zero(), &last.coeff - 1u8));
    }
    OrdTerm::from_blocks(out)
}

fn times(b: &Block<crate::Veblen>, x: &Nat) -> OrdTerm {
    if x.is_zero() {
        return OrdTerm::zero();
    }
    OrdTerm::node(b.index.clone(), b.arg.clone(), x.clone(), &OrdTerm::zero())
}

/// On canonical nonzero input.
pub(crate) fn fs(xi: &OrdTerm, x: &Nat) -> OrdTerm {
    let (last, init) = xi.blocks().split_last().expect("nonzero");
    let mut out = init.to_vec();
    if !last.coeff.is_one() {
        out.push(Block::new(last.index.clone(), last.arg.clone(), &last.coeff - 1u8));
    }
    out.extend_from_slice(fs_block(&last.index, &last.arg, x).blocks());
    OrdTerm::from_blocks(out)
}

fn fs_block(a: &OrdTerm, b: &OrdTerm, x: &Nat) -> OrdTerm {
    if a.is_zero() {
        if b.is_zero() {
            return OrdTerm::zero();
        }
        if let Some(l) = fix_block(a, b) {
            // lambda * x
            return times(l, x);
        }
        if is_successor(b) {
            // gap rule: [x] phi_0(b+1) = phi_0(b) * x
            let base = Block::new(OrdTerm::zero(), drop_one(b), Nat::one());
            return times(&base, x);
        }
        return OrdTerm::single(OrdTerm::zero(), fs(b, x));
    }
    let n = x_hat(a, x);
    let a1 = fs(a, x);
    if b.is_zero() {
        return iterate_phi(&a1, &n, OrdTerm::one());
    }
    if is_successor(b) {
        return iterate_phi(&a1, &n, OrdTerm::single(a.clone(), drop_one(b)));
    }
    if fix_block(a, b).is_some() {
        return iterate_phi(&a1, &n, b.clone());
    }
    OrdTerm::single(a.clone(), fs(b, x))
}

fn fix_block<'t>(a: &OrdTerm, l: &'t OrdTerm) -> Option<&'t Block<crate::Veblen>> {
    l.as_single()
        .filter(|b| cmp_terms(&b.index, a) == Ordering::Greater)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum StepdownOutcome {
    /// `<l> xi = 0` for the first time at `l`; `l = 1` for `xi = 0`.
    ReachedZero(u64),
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepdownReport {
    pub start: OrdTerm,
    pub steps: Vec<(u64, OrdTerm)>,
    pub outcome: StepdownOutcome,
}

/// `<2> xi = [2] xi`, `<n+1> xi = [n+1] <n> xi`, until zero or `max_steps`.
pub fn stepdown(xi: &OrdTerm, max_steps: u64) -> StepdownReport {
    let start = canonicalize(xi);
    let mut cur = start.clone();
    let mut steps = Vec::new();
    let mut x = 1u64;
    let outcome = loop {
        if cur.is_zero() {
            break StepdownOutcome::ReachedZero(x);
        }
        if steps.len() as u64 >= max_steps {
            break StepdownOutcome::BudgetExceeded;
        }
        x += 1;
        cur = fs(&cur, &Nat::from(x));
        steps.push((x, cur.clone()));
    };
    StepdownReport { start, steps, outcome }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Preceq {
    Holds,
    Fails,
    BudgetExceeded,
}

/// Walks `b, [k]b, [k][k]b, ...` looking for `a`; also returns the chain.
pub fn preceq_k_chain(a: &OrdTerm, b: &OrdTerm, k: &Nat, max_steps: u64) -> (Preceq, Vec<OrdTerm>) {
    let a = canonicalize(a);
    let mut cur = canonicalize(b);
    let mut chain = vec![cur.clone()];
    loop {
        match cmp_terms(&cur, &a) {
            Ordering::Equal => return (Preceq::Holds, chain),
            Ordering::Less => return (Preceq::Fails, chain),
            Ordering::Greater if chain.len() as u64 > max_steps => {
                return (Preceq::BudgetExceeded, chain)
            }
            Ordering::Greater => {
                cur = fs(&cur, k);
                chain.push(cur.clone());
            }
        }
    }
}

pub fn preceq_k_bounded(a: &OrdTerm, b: &OrdTerm, k: &Nat, max_steps: u64) -> Preceq {
    preceq_k_chain(a, b, k, max_steps).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn o(s: &str) -> OrdTerm {
        parse(s).unwrap()
    }

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn rules() {
        for x in 1..10 {
            assert!(fund_seq(&o("phi(0,0)"), &n(x)).unwrap().is_zero());
        }
        assert_eq!(
            fund_seq(&o("phi(phi(0,0),0)"), &n(2)).unwrap(),
            o("phi(0,phi(0,phi(0,0)))")
        );
        assert_eq!(
            fund_seq(&o("phi(0,phi(phi(0,0),0))"), &n(3)).unwrap(),
            o("phi(phi(0,0),0)*3")
        );
        assert_eq!(fund_seq(&o("phi(0,phi(0,0))"), &n(2)).unwrap(), o("phi(0,0)*2"));
        // omega^3 -> omega^2 * 4 (gap rule)
        assert_eq!(fund_seq(&o("phi(0,phi(0,0)*3)"), &n(4)).unwrap(), o("phi(0,phi(0,0)*2)*4"));
        // omega^omega -> omega^x
        assert_eq!(
            fund_seq(&o("phi(0,phi(0,phi(0,0)))"), &n(3)).unwrap(),
            o("phi(0,phi(0,0)*3)")
        );
        // coefficients and tails
        assert_eq!(fund_seq(&o("phi(0,phi(0,0))*2+phi(0,0)"), &n(5)).unwrap(), o("phi(0,phi(0,0))*2"));
        assert_eq!(fund_seq(&o("phi(0,phi(0,0))*2"), &n(5)).unwrap(), o("phi(0,phi(0,0))+phi(0,0)*5"));
        // phi_2 0 with x = 2: alpha successor, [2]2 = 1
        assert_eq!(
            fund_seq(&o("phi(phi(0,0)*2,0)"), &n(2)).unwrap(),
            o("phi(phi(0,0),phi(phi(0,0),phi(0,0)))")
        );
        // rule 8: phi_1(phi_2 0) with x = 2 iterates phi_{[2]1} = phi_0 twice
        assert_eq!(
            fund_seq(&o("phi(phi(0,0),phi(phi(0,0)*2,0))"), &n(2)).unwrap(),
            o("phi(0,phi(0,phi(phi(0,0)*2,0)))")
        );
        assert_eq!(fund_seq(&OrdTerm::zero(), &n(2)), Err(Error::ZeroHasNoFS));
    }

    #[test]
    fn fix_membership() {
        assert!(in_fix(&OrdTerm::zero(), &o("phi(phi(0,0),0)")));
        assert!(!in_fix(&OrdTerm::zero(), &o("phi(0,0)")));
        assert!(!in_fix(&o("phi(0,0)"), &o("phi(0,0)+phi(0,0)")));
    }

    #[test]
    fn stepdowns() {
        let r = stepdown(&o("phi(0,0)"), 5);
        assert_eq!(r.outcome, StepdownOutcome::ReachedZero(2));
        let r = stepdown(&o("phi(0,phi(0,0))"), 10);
        assert_eq!(r.outcome, StepdownOutcome::ReachedZero(4));
        assert_eq!(r.steps[0].1, o("phi(0,0)*2"));
        let r = stepdown(&o("phi(phi(0,0),0)"), 20_000);
        assert_eq!(r.outcome, StepdownOutcome::BudgetExceeded);
        assert!(r
            .steps
            .windows(2)
            .all(|w| cmp_terms(&w[1].1, &w[0].1) == Ordering::Less));
    }

    #[test]
    fn preceq() {
        let e0 = o("phi(phi(0,0),0)");
        assert_eq!(preceq_k_bounded(&e0, &e0, &n(2), 0), Preceq::Holds);
        let f = fund_seq(&e0, &n(2)).unwrap();
        assert_eq!(preceq_k_bounded(&f, &e0, &n(2), 1), Preceq::Holds);
        // omega -> 2 -> 1 -> 0 under [2]
        let w = o("phi(0,phi(0,0))");
        assert_eq!(preceq_k_bounded(&o("phi(0,0)"), &w, &n(2), 10), Preceq::Holds);
        assert_eq!(preceq_k_bounded(&o("phi(0,0)*3"), &w, &n(2), 10), Preceq::Fails);
    }
}
