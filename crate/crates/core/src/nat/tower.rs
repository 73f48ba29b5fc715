//! Iterated exponentials `k^k^...^top`, kept as (height, top) so that values
//! like `A_1(3,1) = 3^3^3^3^27` compare without being written out.

use std::fmt;

use num_traits::{One, ToPrimitive};

use super::{log2, Arg, EvalBudget, Nat};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tower {
    /// Number of pending exponentiations; compared before `top`.
    height: Nat,
    top: Nat,
    base: Nat,
}

impl Tower {
    /// `A_0^height(k, top)`, folded until the next exponentiation no longer fits.
    pub fn new(base: &Nat, height: Nat, top: Nat, budget: &EvalBudget) -> Tower {
        let mut t = Tower {
            height,
            top,
            base: base.clone(),
        };
        t.fold(budget);
        t
    }

    pub fn height(&self) -> &Nat {
        &self.height
    }

    pub fn top(&self) -> &Nat {
        &self.top
    }

    /// Applies `A_0` another `n` times.
    pub fn raise(&self, n: &Nat, budget: &EvalBudget) -> Tower {
        Tower::new(&self.base, &self.height + n, self.top.clone(), budget)
    }

    fn fold(&mut self, budget: &EvalBudget) {
        while self.height > Nat::from(0u8) {
            let est = self.top.to_f64().unwrap_or(f64::INFINITY) * log2(&self.base);
            if est > budget.max_bits() as f64 {
                return;
            }
            self.top = self.base.pow(self.top.to_u32().expect("checked size"));
            self.height -= 1u8;
        }
    }
}

/// `A_a(k,b)` for `a <= 1` as a tower, using only the recursion
/// `A_1(b) = A_0^k(A_1(b-1))`.
pub fn tower_ack(a: &Nat, k: &Nat, b: &Arg, budget: &EvalBudget) -> Option<Tower> {
    let b = match b {
        Arg::MinusOne => return Some(Tower::new(k, Nat::from(0u8), Nat::one(), budget)),
        Arg::Nat(b) => b,
    };
    if a == &Nat::from(0u8) {
        return Some(Tower::new(k, Nat::one(), b.clone(), budget));
    }
    if a != &Nat::one() {
        return None;
    }
    let mut v = Tower::new(k, Nat::from(0u8), Nat::one(), budget);
    let mut j = Nat::from(0u8);
    loop {
        v = v.raise(k, budget);
        if &j == b {
            return Some(v);
        }
        j += 1u8;
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.height.to_usize().unwrap_or(usize::MAX);
        if h > 64 {
            return write!(f, "{}^^{}[{}]", self.base, self.height, self.top);
        }
        for _ in 0..h {
            write!(f, "{}^(", self.base)?;
        }
        write!(f, "{}", self.top)?;
        for _ in 0..h {
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_3_1_is_six_threes() {
        let d = EvalBudget::default();
        let k = Nat::from(3u8);
        let a = tower_ack(&Nat::one(), &k, &Arg::from(1), &d).unwrap();
        let six = Tower::new(&k, Nat::from(6u8), Nat::one(), &d);
        assert_eq!(a, six);
        assert_eq!(a.to_string(), "3^(3^(3^(7625597484987)))");
        let five = Tower::new(&k, Nat::from(5u8), Nat::one(), &d);
        assert!(five < six);
    }

    #[test]
    fn small_towers_fold_completely() {
        let d = EvalBudget::default();
        let k = Nat::from(2u8);
        let t = tower_ack(&Nat::one(), &k, &Arg::from(1), &d).unwrap();
        assert_eq!(t.height(), &Nat::from(0u8));
        assert_eq!(t.top(), &Nat::from(65536u32));
    }
}
