//! Symbolic predecessor on base-`k` normal forms.

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::nat::{ack_eval, log2, Arg, BoundedNat, EvalBudget, Nat};
use crate::nf::classify::{classify_head, NfClass};
use crate::nf::eval::eval_term;
use crate::nf::sandwich::normal_form;
use crate::term::Block;
use crate::NfTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredMode {
    /// The normal form of `m - 1`, or `Blowup`.
    Exact,
    /// The normal form of some `m' <= m - 1`: tails that do not fit are
    /// dropped and oversized coefficients lowered. Terms built this way are
    /// prefixes (or lowered-coefficient prefixes) of the exact answer.
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredOutcome {
    pub term: NfTerm,
    /// False when `term` is the exact predecessor.
    pub truncated: bool,
}

/// Left expansion sequence `c_0, ..., c_a` of a head `A_a b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftExpansion {
    pub c: Vec<NfTerm>,
}

/// Base-`k` normal form of `val(t) - 1`.
pub fn predecessor(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<NfTerm> {
    Ok(predecessor_with(t, k, budget, PredMode::Exact)?.term)
}

pub fn predecessor_with(t: &NfTerm, k: &Nat, budget: &EvalBudget, mode: PredMode) -> Result<PredOutcome> {
    let mut cx = Ctx::new(k, budget, mode)?;
    let term = cx.pred(t)?;
    Ok(PredOutcome {
        term,
        truncated: cx.truncated,
    })
}

/// Left expansion `c_0 < ... < c_a` of a single block `A_a b` with `a >= 1`.
pub fn left_expansion(t: &NfTerm, k: &Nat, budget: &EvalBudget) -> Result<LeftExpansion> {
    let h = t
        .as_single()
        .ok_or(Error::NotApplicable("left expansion needs a single block"))?;
    let mut cx = Ctx::new(k, budget, PredMode::Exact)?;
    Ok(LeftExpansion {
        c: cx.left_expansion(&h.index, &h.arg)?,
    })
}

struct Ctx<'a> {
    k: &'a Nat,
    km1: Nat,
    reps: u64,
    budget: &'a EvalBudget,
    mode: PredMode,
    nodes: u64,
    truncated: bool,
}

impl<'a> Ctx<'a> {
    fn new(k: &'a Nat, budget: &'a EvalBudget, mode: PredMode) -> Result<Self> {
        if *k < Nat::from(2u8) {
            return Err(Error::BaseTooSmall);
        }
        let km1 = k - 1u8;
        let reps = km1.to_u64().ok_or(Error::Blowup)?;
        Ok(Ctx {
            k,
            km1,
            reps,
            budget,
            mode,
            nodes: 0,
            truncated: false,
        })
    }

    fn lower_bound(&self) -> bool {
        self.mode == PredMode::LowerBound
    }

    fn charge(&mut self, n: u64) -> Result<()> {
        self.nodes += n;
        if self.nodes > self.budget.max_nodes {
            Err(Error::Blowup)
        } else {
            Ok(())
        }
    }

    /// Runs `f` in exact mode: used for anything that becomes a head index or
    /// argument, where a smaller stand-in could break normality.
    fn exact<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        let saved = self.mode;
        self.mode = PredMode::Exact;
        let r = f(self);
        self.mode = saved;
        r
    }

    fn value(&self, t: &NfTerm) -> Result<Option<Nat>> {
        Ok(eval_term(t, self.k, self.budget)?.value())
    }

    fn pred(&mut self, t: &NfTerm) -> Result<NfTerm> {
        let blocks = t.blocks();
        let (last, init) = blocks.split_last().ok_or(Error::ZeroTerm)?;
        let mut out = init.to_vec();
        if !last.coeff.is_one() {
            out.push(Block::new(last.index.clone(), last.arg.clone(), &last.coeff - 1u8));
        }
        let tail = self.pred_block(&last.index, &last.arg)?;
        out.extend_from_slice(tail.blocks());
        // every copied block counts, so long descending runs stay bounded;
        // lower-bound runs are cut in the level-0 loop instead
        if !self.lower_bound() {
            self.charge(out.len() as u64)?;
        }
        Ok(NfTerm::from_blocks(out))
    }

    /// `A_a b - 1` for a normal head block.
    fn pred_block(&mut self, index: &NfTerm, arg: &NfTerm) -> Result<NfTerm> {
        match self.pred_block_inner(index, arg) {
            Err(Error::Blowup) if self.lower_bound() => {
                self.truncated = true;
                Ok(NfTerm::zero())
            }
            r => r,
        }
    }

    fn pred_block_inner(&mut self, index: &NfTerm, arg: &NfTerm) -> Result<NfTerm> {
        if index.is_zero() {
            return self.pred_level0(arg);
        }
        // (k-1) c_a + (c_a - 1)
        let c = self.exact(|s| s.left_expansion(index, arg))?;
        let ca = c.last().expect("nonempty expansion");
        let d = ca.head().expect("c_a is a block").arg.clone();
        let mut out = vec![Block::new(NfTerm::zero(), d.clone(), self.km1.clone())];
        let tail = self.pred_block(&NfTerm::zero(), &d)?;
        out.extend_from_slice(tail.blocks());
        Ok(NfTerm::from_blocks(out))
    }

    /// `A_0 b - 1`: each CaseC step emits `A_0(b-1) * (k-1)` and continues with
    /// `A_0(b-1) - 1`; a CaseB argument ends the run by division.
    fn pred_level0(&mut self, arg: &NfTerm) -> Result<NfTerm> {
        let zero = NfTerm::zero();
        let mut out = Vec::new();
        let mut b = arg.clone();
        while !b.is_zero() {
            if classify_head(&zero, &b) == NfClass::CaseB {
                match self.pred_by_division(&b) {
                    Ok(t) => out.extend_from_slice(t.blocks()),
                    Err(Error::Blowup) if self.lower_bound() => self.truncated = true,
                    Err(e) => return Err(e),
                }
                break;
            }
            let step = self.charge(1).and_then(|_| self.exact(|s| s.pred(&b)));
            let b1 = match step {
                Ok(b1) => b1,
                Err(Error::Blowup) if self.lower_bound() => {
                    self.truncated = true;
                    break;
                }
                Err(e) => return Err(e),
            };
            out.push(Block::new(zero.clone(), b1.clone(), self.km1.clone()));
            b = b1;
        }
        Ok(NfTerm::from_blocks(out))
    }

    /// `k^b - 1 = b*p + (b-1)` where `b = A_a' b'` with `a' > 0` (so `b` is a
    /// power of `k` and divides `k^b`).
    fn pred_by_division(&mut self, b: &NfTerm) -> Result<NfTerm> {
        let h = b.as_single().expect("CaseB argument is one block");
        let bv = self.value(b)?;
        let max_bits = self.budget.max_bits() as f64;
        if let Some(bv) = &bv {
            let fits = bv.to_f64().unwrap_or(f64::INFINITY) * log2(self.k) <= max_bits;
            if fits {
                let m = self.k.pow(bv.to_u32().ok_or(Error::Blowup)?);
                let p = (m - 1u8) / bv;
                let tail = self.pred(b)?;
                return Ok(NfTerm::node(h.index.clone(), h.arg.clone(), p, &tail));
            }
        }
        if !self.lower_bound() {
            return Err(Error::Blowup);
        }
        // k^e <= k^b - 1 for the largest e that fits, so k^e div b <= p
        let e = (max_bits / log2(self.k)).floor() as u32;
        let ke = self.k.pow(e);
        let p = match &bv {
            Some(bv) => (&ke / bv).max(Nat::one()),
            None => ke,
        };
        self.truncated = true;
        Ok(NfTerm::node(h.index.clone(), h.arg.clone(), p, &NfTerm::zero()))
    }

    fn left_expansion(&mut self, index: &NfTerm, arg: &NfTerm) -> Result<Vec<NfTerm>> {
        let a = self.value(index)?.ok_or(Error::Blowup)?;
        if a.is_zero() {
            return Err(Error::NotApplicable("left expansion needs a head index a >= 1"));
        }
        let a = a.to_u64().filter(|&a| a <= self.budget.max_nodes).ok_or(Error::Blowup)?;
        let c0 = match classify_head(index, arg) {
            NfClass::CaseA => NfTerm::one(),
            NfClass::CaseC => NfTerm::single(index.clone(), self.pred(arg)?),
            NfClass::CaseB => {
                // A_a(b-1) needs a right expansion over b*k levels; only
                // feasible when the value itself materializes
                let bv = self.value(arg)?.ok_or(Error::Blowup)?;
                let v = ack_eval(&Nat::from(a), self.k, &Arg::Nat(bv - 1u8), self.budget)?;
                match v {
                    BoundedNat::Value(v) => normal_form(&v, self.k)?,
                    BoundedNat::Exceeded => return Err(Error::Blowup),
                }
            }
        };
        let mut c = vec![c0];
        for i in 1..=a {
            let idx = normal_form(&Nat::from(a - i), self.k)?;
            self.charge(self.reps)?;
            let mut t = c.last().expect("c_0 present").clone();
            for _ in 0..self.reps {
                t = NfTerm::single(idx.clone(), t);
            }
            let d = self.pred(&t)?;
            c.push(NfTerm::single(idx, d));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    fn val(t: &NfTerm, k: u64) -> Nat {
        eval_term(t, &n(k), &EvalBudget::default()).unwrap().value().unwrap()
    }

    #[test]
    fn examples() {
        let d = EvalBudget::default();
        let p = predecessor(&parse("A(A(0,0),0)").unwrap(), &n(2), &d).unwrap();
        assert_eq!(p.to_string(), "A(0,A(0,0))+A(0,0)");
        assert!(predecessor(&NfTerm::one(), &n(5), &d).unwrap().is_zero());
        let p = predecessor(&parse("A(A(0,0),0)").unwrap(), &n(3), &d).unwrap();
        assert_eq!(val(&p, 3), n(7625597484986));
        assert_eq!(p, normal_form(&n(7625597484986), &n(3)).unwrap());
        assert_eq!(predecessor(&NfTerm::zero(), &n(2), &d), Err(Error::ZeroTerm));
    }

    #[test]
    fn left_expansions() {
        let d = EvalBudget::default();
        let le = |s: &str, k| left_expansion(&parse(s).unwrap(), &n(k), &d).unwrap().c;
        let c = le("A(A(0,0),0)", 2);
        assert_eq!(c.iter().map(|t| val(t, 2)).collect::<Vec<_>>(), vec![n(1), n(2)]);
        let c = le("A(A(0,0),0)", 3);
        assert_eq!(c[1], parse("A(0,A(0,A(0,0)*2)*2+A(0,A(0,0))*2+A(0,0)*2)").unwrap());
        assert_eq!(val(&c[1], 3), n(3).pow(26u32));
        assert!(matches!(
            left_expansion(&parse("A(0,A(0,0))").unwrap(), &n(2), &d),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn case_iv_division() {
        let d = EvalBudget::default();
        // 16 - 1 = 4*3 + 3 at base 2
        let t = parse("A(0,A(A(0,0),0))").unwrap();
        let p = predecessor(&t, &n(2), &d).unwrap();
        assert_eq!(p.to_string(), "A(A(0,0),0)*3+A(0,A(0,0))+A(0,0)");
        // 3^(3^27) - 1 does not fit; lower bound keeps head and a big coefficient
        let t = parse("A(0,A(A(0,0),0))").unwrap();
        assert_eq!(predecessor(&t, &n(3), &d), Err(Error::Blowup));
        let lb = predecessor_with(&t, &n(3), &d, PredMode::LowerBound).unwrap();
        assert!(lb.truncated);
        assert_eq!(lb.term.len(), 1);
        assert!(lb.term.head().unwrap().coeff > n(2));
    }

    #[test]
    fn a2_0_base_2() {
        // A_2(2,0) = A_1(65536); its predecessor needs 2^65536-sized runs
        let t = parse("A(A(0,A(0,0)),0)").unwrap();
        let d = EvalBudget::default();
        assert_eq!(predecessor(&t, &n(2), &d), Err(Error::Blowup));
    }

    #[test]
    fn agrees_with_integer_decrement() {
        let d = EvalBudget::default();
        for k in 2..6u64 {
            for m in 1..3000u64 {
                let t = normal_form(&n(m), &n(k)).unwrap();
                let p = predecessor(&t, &n(k), &d).unwrap();
                assert_eq!(p, normal_form(&n(m - 1), &n(k)).unwrap(), "m={m} k={k}");
            }
        }
    }
}
