//! Fixed-point-free Veblen terms below Gamma_0.

mod compare;
mod fs;

use std::cmp::Ordering;

use num_traits::Zero;

pub use compare::{cmp_heads, cmp_terms, cmp_with_head};
pub use fs::{
    preceq_k_chain,
    fund_seq, in_fix, is_successor, preceq_k_bounded, stepdown, x_hat, Preceq, StepdownOutcome,
    StepdownReport,
};

use crate::error::{Error, Result};
use crate::term::Block;
use crate::{NfTerm, OrdTerm};

/// Merges adjacent blocks with equal heads, hereditarily.
pub fn canonicalize(t: &OrdTerm) -> OrdTerm {
    let mut out: Vec<Block<crate::Veblen>> = Vec::with_capacity(t.len());
    for b in t.blocks() {
        let b = Block::new(canonicalize(&b.index), canonicalize(&b.arg), b.coeff.clone());
        match out.last_mut() {
            Some(prev) if prev.same_head(&b) => prev.coeff += &b.coeff,
            _ => out.push(b),
        }
    }
    OrdTerm::from_blocks(out)
}

/// Every node has coefficient >= 1 and the sum is weakly descending.
///
/// In the fixed-point-free hierarchy `phi_a b` exceeds both `a` and `b` for
/// every pair, so index and argument never need a separate check; the tail is
/// below the whole term exactly when the blocks descend.
pub fn ord_validate(t: &OrdTerm) -> bool {
    let blocks = t.blocks();
    blocks.iter().all(|b| !b.coeff.is_zero() && ord_validate(&b.index) && ord_validate(&b.arg))
        && blocks.windows(2).all(|w| {
            let (x, y) = (canonicalize(&OrdTerm::single(w[0].index.clone(), w[0].arg.clone())),
                          canonicalize(&OrdTerm::single(w[1].index.clone(), w[1].arg.clone())));
            cmp_terms(&y, &x) != Ordering::Greater
        })
}

/// Validated comparison; accepts unmerged (weakly descending) sums.
pub fn ord_compare(x: &OrdTerm, y: &OrdTerm) -> Result<Ordering> {
    if !ord_validate(x) || !ord_validate(y) {
        return Err(Error::InvalidTerm);
    }
    Ok(cmp_terms(&canonicalize(x), &canonicalize(y)))
}

/// Base-omega image: `A_a b * p + q` becomes `phi_a b * p + q`.
pub fn to_ordinal(t: &NfTerm) -> OrdTerm {
    t.retag()
}

/// `gamma_0 = 0`, `gamma_{n+1} = phi_{gamma_n} 0`.
pub fn gamma(n: usize) -> OrdTerm {
    let mut g = OrdTerm::zero();
    for _ in 0..n {
        g = OrdTerm::single(g, OrdTerm::zero());
    }
    g
}

/// `phi_0 0 * n`, the finite ordinal `n`.
pub fn finite(n: u64) -> OrdTerm {
    if n == 0 {
        OrdTerm::zero()
    } else {
        OrdTerm::node(OrdTerm::zero(), OrdTerm::zero(), n.into(), &OrdTerm::zero())
    }
}

pub fn omega() -> OrdTerm {
    OrdTerm::single(OrdTerm::zero(), OrdTerm::one())
}

/// `phi_a^n(z)` as nested blocks.
pub(crate) fn iterate_phi(a: &OrdTerm, n: &crate::Nat, z: OrdTerm) -> OrdTerm {
    let mut out = z;
    let mut i = crate::Nat::zero();
    while &i < n {
        out = OrdTerm::single(a.clone(), out);
        i += 1u8;
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn o(s: &str) -> OrdTerm {
        parse(s).unwrap()
    }

    #[test]
    fn compare_examples() {
        let c = |a: &str, b: &str| ord_compare(&o(a), &o(b)).unwrap();
        assert_eq!(c("0", "phi(0,0)"), Ordering::Less);
        assert_eq!(c("phi(0,phi(0,0))", "phi(phi(0,0),0)"), Ordering::Less);
        assert_eq!(c("phi(phi(0,0),0)+phi(0,0)", "phi(phi(0,0),0)"), Ordering::Greater);
        assert_eq!(c("phi(0,0)+phi(0,0)", "phi(0,0)*2"), Ordering::Equal);
        // eps_0 < omega^(eps_0) in the fixed-point-free hierarchy
        assert_eq!(c("phi(phi(0,0),0)", "phi(0,phi(phi(0,0),0))"), Ordering::Less);
        assert_eq!(c("phi(0,phi(0,0))*5", "phi(0,phi(0,0)*2)"), Ordering::Less);
    }

    #[test]
    fn validate_examples() {
        assert!(ord_validate(&OrdTerm::zero()));
        assert!(ord_validate(&o("phi(phi(phi(0,0),0),0)")));
        assert!(ord_validate(&o("phi(0,phi(phi(0,0),0))")));
        assert!(ord_validate(&o("phi(0,0)+phi(0,0)")));
        assert!(!ord_validate(&o("phi(0,0)+phi(0,phi(0,0))")));
        assert!(!ord_validate(&OrdTerm::node(OrdTerm::zero(), OrdTerm::zero(), 0u8.into(), &OrdTerm::zero())));
        assert!(ord_compare(&o("phi(0,0)+phi(1,0)".replace('1', "phi(0,0)").as_str()), &OrdTerm::zero()).is_err());
    }

    #[test]
    fn images_and_gamma() {
        use crate::nf::normal_form;
        let two = crate::Nat::from(2u8);
        assert_eq!(to_ordinal(&normal_form(&4u8.into(), &two).unwrap()).to_string(), "phi(phi(0,0),0)");
        assert_eq!(to_ordinal(&normal_form(&2u8.into(), &two).unwrap()), omega());
        assert!(to_ordinal(&NfTerm::zero()).is_zero());
        assert_eq!(gamma(0), OrdTerm::zero());
        assert_eq!(gamma(1).to_string(), "phi(0,0)");
        assert_eq!(gamma(2).to_string(), "phi(phi(0,0),0)");
        assert_eq!(finite(3).to_string(), "phi(0,0)*3");
    }
}
