//! Naturals too large to materialize, written as sparse base-`k` digit maps.
//!
//! `k^(3^27) + 5` costs two map entries. Exponents are ordinary `Nat`s and are
//! bounded by the budget's digit cap, so every representable value is below
//! `k^(10^max_digits)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{log2, Arg, EvalBudget, Nat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadixNat {
    radix: Nat,
    /// exponent -> digit, digits in `1..radix`
    digits: BTreeMap<Nat, Nat>,
}

impl RadixNat {
    pub fn zero(radix: &Nat) -> Self {
        RadixNat {
            radix: radix.clone(),
            digits: BTreeMap::new(),
        }
    }

    pub fn radix(&self) -> &Nat {
        &self.radix
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// `radix^e`, or `None` when `e` breaks the digit cap.
    pub fn power(radix: &Nat, e: Nat, budget: &EvalBudget) -> Option<Self> {
        if !budget.fits(&e) {
            return None;
        }
        let mut digits = BTreeMap::new();
        digits.insert(e, Nat::one());
        Some(RadixNat {
            radix: radix.clone(),
            digits,
        })
    }

    pub fn from_nat(n: &Nat, radix: &Nat) -> Self {
        let mut raw = BTreeMap::new();
        raw.insert(Nat::zero(), n.clone());
        RadixNat {
            radix: radix.clone(),
            digits: normalize(raw, radix),
        }
    }

    pub fn top_exponent(&self) -> Option<&Nat> {
        self.digits.keys().next_back()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `Some(self)` if `self` is equal to a single power `radix^e`.
    pub fn power_exponent(&self) -> Option<&Nat> {
        match self.digits.iter().next() {
            Some((e, d)) if self.digits.len() == 1 && d.is_one() => Some(e),
            _ => None,
        }
    }

    /// Materializes the value if its decimal length fits the budget.
    pub fn to_nat(&self, budget: &EvalBudget) -> Option<Nat> {
        let Some(top) = self.top_exponent() else {
            return Some(Nat::zero());
        };
        let est = top.to_f64().unwrap_or(f64::INFINITY) * log2(&self.radix);
        if est > budget.max_bits() as f64 + 2.0 {
            return None;
        }
        let mut acc = Nat::zero();
        let mut prev: Option<&Nat> = None;
        for (e, d) in self.digits.iter().rev() {
            if let Some(p) = prev {
                acc *= self.radix.pow((p - e).to_u32()?);
            }
            acc += d;
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc *= self.radix.pow(p.to_u32()?);
        }
        budget.fits(&acc).then_some(acc)
    }

    pub fn add(&self, other: &RadixNat, budget: &EvalBudget) -> Option<Self> {
        let mut raw = self.digits.clone();
        for (e, d) in &other.digits {
            *raw.entry(e.clone()).or_insert_with(Nat::zero) += d;
        }
        self.finish(raw, budget)
    }

    pub fn mul_nat(&self, c: &Nat, budget: &EvalBudget) -> Option<Self> {
        let raw = self.digits.iter().map(|(e, d)| (e.clone(), d * c)).collect();
        self.finish(raw, budget)
    }

    /// Splits into `(self div radix^e, self mod radix^e)`; the quotient must
    /// materialize within the budget.
    pub fn divmod_power(&self, e: &Nat, budget: &EvalBudget) -> Option<(Nat, RadixNat)> {
        let low: BTreeMap<Nat, Nat> = self
            .digits
            .range(..e.clone())
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        let high = RadixNat {
            radix: self.radix.clone(),
            digits: self
                .digits
                .range(e.clone()..)
                .map(|(a, b)| (a - e, b.clone()))
                .collect(),
        };
        let q = high.to_nat(budget)?;
        Some((
            q,
            RadixNat {
                radix: self.radix.clone(),
                digits: low,
            },
        ))
    }

    /// `self - other` for `self >= other`. Borrows that would fill long runs of
    /// `radix-1` digits beyond `max_nodes` give `None`.
    pub fn sub(&self, other: &RadixNat, budget: &EvalBudget) -> Option<Self> {
        assert!(self >= other, "RadixNat subtraction underflow");
        let top = &self.radix - 1u8;
        let mut d = self.digits.clone();
        for (e, x) in &other.digits {
            let cur = d.remove(e).unwrap_or_default();
            if &cur >= x {
                let r = cur - x;
                if !r.is_zero() {
                    d.insert(e.clone(), r);
                }
                continue;
            }
            let (f, fd) = d
                .range((std::ops::Bound::Excluded(e.clone()), std::ops::Bound::Unbounded))
                .next()
                .map(|(a, b)| (a.clone(), b.clone()))
                .expect("minuend is larger");
            let gap = &f - e - 1u8;
            if gap.to_u64().is_none_or(|g| g + d.len() as u64 > budget.max_nodes) {
                return None;
            }
            let fd = fd - 1u8;
            if fd.is_zero() {
                d.remove(&f);
            } else {
                d.insert(f.clone(), fd);
            }
            let mut g = e + 1u8;
            while g < f {
                d.insert(g.clone(), top.clone());
                g += 1u8;
            }
            d.insert(e.clone(), cur + &self.radix - x);
        }
        Some(RadixNat {
            radix: self.radix.clone(),
            digits: d,
        })
    }

    fn finish(&self, raw: BTreeMap<Nat, Nat>, budget: &EvalBudget) -> Option<Self> {
        let digits = normalize(raw, &self.radix);
        if digits.len() as u64 > budget.max_nodes {
            return None;
        }
        if let Some(t) = digits.keys().next_back() {
            if !budget.fits(t) {
                return None;
            }
        }
        Some(RadixNat {
            radix: self.radix.clone(),
            digits,
        })
    }
}

fn normalize(mut raw: BTreeMap<Nat, Nat>, radix: &Nat) -> BTreeMap<Nat, Nat> {
    let mut out = BTreeMap::new();
    while let Some((e, c)) = raw.pop_first() {
        if c.is_zero() {
            continue;
        }
        let (q, r) = c.div_rem(radix);
        if !q.is_zero() {
            *raw.entry(&e + 1u8).or_insert_with(Nat::zero) += q;
        }
        if !r.is_zero() {
            out.insert(e, r);
        }
    }
    out
}

impl PartialOrd for RadixNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadixNat {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.digits.iter().rev();
        let mut b = other.digits.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ea, da)), Some((eb, db))) => {
                    let o = ea.cmp(eb).then_with(|| da.cmp(db));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

/// `A_a(k,b)` as a radix-`k` value. Every argument handed to `A_0` has to
/// materialize, so the deepest exponent is the only unmaterialized part.
pub(crate) fn radix_ack(a: &Nat, k: &Nat, b: &Arg, budget: &EvalBudget) -> Option<RadixNat> {
    let b = match b {
        Arg::MinusOne => return Some(RadixNat::from_nat(&Nat::one(), k)),
        Arg::Nat(b) => b,
    };
    if a.is_zero() {
        return RadixNat::power(k, b.clone(), budget);
    }
    if !budget.fits(a) || !budget.fits(b) {
        return None;
    }
    let lower = a - 1u8;
    let reps = k.to_u64()?;
    let mut v = RadixNat::from_nat(&Nat::one(), k);
    let mut j = Nat::zero();
    loop {
        for _ in 0..reps {
            let x = v.to_nat(budget)?;
            v = radix_ack(&lower, k, &Arg::Nat(x), budget)?;
        }
        if &j == b {
            break;
        }
        j += 1u8;
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Nat {
        Nat::from(x)
    }

    #[test]
    fn round_trips_small_values() {
        let d = EvalBudget::default();
        for k in 2..6u64 {
            for m in 0..500u64 {
                let r = RadixNat::from_nat(&n(m), &n(k));
                assert_eq!(r.to_nat(&d), Some(n(m)));
            }
        }
    }

    #[test]
    fn arithmetic_matches_bignum() {
        let d = EvalBudget::default();
        let k = n(3);
        for x in (0..2000u64).step_by(37) {
            for y in (0..x).step_by(23) {
                let (rx, ry) = (RadixNat::from_nat(&n(x), &k), RadixNat::from_nat(&n(y), &k));
                assert_eq!(rx.add(&ry, &d).unwrap().to_nat(&d), Some(n(x + y)));
                assert_eq!(rx.sub(&ry, &d).unwrap().to_nat(&d), Some(n(x - y)));
                assert_eq!(rx.mul_nat(&n(y), &d).unwrap().to_nat(&d), Some(n(x * y)));
                assert_eq!(rx.cmp(&ry), x.cmp(&y));
                let (q, r) = rx.divmod_power(&n(2), &d).unwrap();
                assert_eq!((q, r.to_nat(&d).unwrap()), (n(x / 9), n(x % 9)));
            }
        }
    }

    #[test]
    fn huge_powers_stay_symbolic() {
        let d = EvalBudget::default();
        let k = n(3);
        let e = n(7625597484987);
        let p = RadixNat::power(&k, e.clone(), &d).unwrap();
        assert!(p.to_nat(&d).is_none());
        let q = p.add(&RadixNat::from_nat(&n(5), &k), &d).unwrap();
        assert!(q > p);
        assert_eq!(q.len(), 3);
        // k^e - 1 would need e digits
        assert!(p.sub(&RadixNat::from_nat(&n(1), &k), &d).is_none());
        let r = radix_ack(&n(1), &k, &Arg::from(0), &d).unwrap();
        assert_eq!(r.to_nat(&d), Some(e.clone()));
        let big = radix_ack(&n(0), &k, &Arg::Nat(e), &d).unwrap();
        assert_eq!(big, p);
        assert!(radix_ack(&n(1), &k, &Arg::from(1), &d).is_none());
    }
}
