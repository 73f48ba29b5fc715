use std::cmp::Ordering;

use ack_goodstein::goodstein::{descent_check, grun, GoodsteinTrace, Mode};
use ack_goodstein::nat::{ack_cmp_threshold, ack_eval, Arg, EvalBudget, Threshold};
use ack_goodstein::nf::{
    base_change, classify, eval_term, nf_cmp, normal_form, predecessor, sandwich, validate_nf, NfClass,
    Validity,
};
use ack_goodstein::oracle::{naive_ack, oracle_sandwich};
use ack_goodstein::ordinal::{cmp_terms, fund_seq, ord_compare, ord_validate, to_ordinal};
use ack_goodstein::term::parse;
use ack_goodstein::verify::random_ordinal;
use ack_goodstein::{Nat, NfTerm, OrdTerm, Veblen};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn n(x: u64) -> Nat {
    Nat::from(x)
}

fn val(t: &NfTerm, k: u64) -> Nat {
    eval_term(t, &n(k), &EvalBudget::default()).unwrap().value().unwrap()
}

fn ordinal(seed: u64, depth: u32) -> OrdTerm {
    random_ordinal(&mut ChaCha8Rng::seed_from_u64(seed), depth, false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn normal_form_round_trips(m in 0u64..2_000_000, k in 2u64..7) {
        let t = normal_form(&n(m), &n(k)).unwrap();
        prop_assert_eq!(val(&t, k), n(m));
        prop_assert_eq!(parse::<ack_goodstein::Ack>(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn sandwich_matches_oracle(m in 1u64..200_000, k in 2u64..6) {
        let s = sandwich(&n(m), &n(k)).unwrap();
        let o = oracle_sandwich(&n(m), &n(k)).unwrap();
        prop_assert_eq!(s.steps, o.steps);
    }

    #[test]
    fn nf_order_matches_values(m in 0u64..50_000, d in 0u64..50_000, k in 2u64..5) {
        let (x, y) = (normal_form(&n(m), &n(k)).unwrap(), normal_form(&n(m + d), &n(k)).unwrap());
        prop_assert_eq!(nf_cmp(&x, &y), m.cmp(&(m + d)));
    }

    #[test]
    fn predecessor_decrements(m in 1u64..1_000_000, k in 2u64..6) {
        let t = normal_form(&n(m), &n(k)).unwrap();
        let p = predecessor(&t, &n(k), &EvalBudget::default()).unwrap();
        prop_assert_eq!(p, normal_form(&n(m - 1), &n(k)).unwrap());
    }

    #[test]
    fn base_change_keeps_normality(m in 1u64..3_000, k in 2u64..5, up in 1u64..3) {
        let t = normal_form(&n(m), &n(k)).unwrap();
        let b = base_change(&t, &n(k), &n(k + up)).unwrap();
        let v = validate_nf(&b, &n(k + up), &EvalBudget::with_digits(20_000)).unwrap();
        prop_assert!(v == Validity::Valid || v == Validity::Exceeded, "{} -> {} is {:?}", t, b, v);
        prop_assert_eq!(ord_compare(&to_ordinal(&t), &to_ordinal(&b)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn classify_is_total_on_normal_forms(m in 1u64..100_000, k in 2u64..5) {
        let t = normal_form(&n(m), &n(k)).unwrap();
        let c = classify(&t, &n(k)).unwrap();
        let h = t.head().unwrap();
        prop_assert_eq!(c == NfClass::CaseA, h.arg.is_zero());
    }

    #[test]
    fn threshold_agrees_with_value(a in 0u64..3, k in 2u64..5, b in 0u64..4, t in 0u64..100_000) {
        let v = naive_ack(a, &n(k), Some(&n(b)), 4_000);
        let got = ack_cmp_threshold(&n(a), &n(k), &Arg::Nat(n(b)), &n(t)).unwrap();
        match v {
            Some(v) if v <= n(t) => prop_assert_eq!(got, Threshold::LeqWith(v)),
            _ => prop_assert_eq!(got, Threshold::Greater),
        }
    }

    #[test]
    fn fundamental_sequence_descends(seed in any::<u64>(), x in 1u64..6) {
        let xi = ordinal(seed, 5);
        prop_assume!(!xi.is_zero());
        let f = fund_seq(&xi, &n(x)).unwrap();
        prop_assert!(ord_validate(&f));
        prop_assert_eq!(cmp_terms(&f, &xi), Ordering::Less);
    }

    #[test]
    fn ordinal_print_parse(seed in any::<u64>()) {
        let xi = ordinal(seed, 5);
        let back: OrdTerm = parse::<Veblen>(&xi.to_string()).unwrap();
        prop_assert_eq!(back, xi);
    }

    #[test]
    fn ordinal_order_is_antisymmetric(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (x, y) = (ordinal(s1, 4), ordinal(s2, 4));
        prop_assert_eq!(cmp_terms(&x, &y), cmp_terms(&y, &x).reverse());
        prop_assert_eq!(cmp_terms(&x, &y) == Ordering::Equal, x == y);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn goodstein_descends(m in 0u64..200, symbolic in any::<bool>()) {
        let mode = if symbolic { Mode::Symbolic } else { Mode::Concrete };
        let tr = grun(&n(m), mode, 10, &EvalBudget::with_digits(2_000));
        prop_assert!(descent_check(&tr));
        let json = serde_json::to_string(&tr).unwrap();
        let back: GoodsteinTrace = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, tr);
    }
}

#[test]
fn ackermann_small_values() {
    let b = EvalBudget::default();
    let v = |a: u64, k: u64, x: u64| ack_eval(&n(a), &n(k), &Arg::Nat(n(x)), &b).unwrap().value().unwrap();
    assert_eq!(v(0, 2, 10), n(1024));
    assert_eq!(v(1, 2, 0), n(4));
    assert_eq!(v(1, 2, 1), n(65536));
    assert_eq!(v(1, 3, 0), n(3).pow(27u32));
}

#[test]
fn worked_normal_forms() {
    let nf = |m: u64, k: u64| normal_form(&n(m), &n(k)).unwrap().to_string();
    assert_eq!(nf(21, 2), "A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)");
    assert_eq!(nf(26, 3), "A(0,A(0,0)*2)*2+A(0,A(0,0))*2+A(0,0)*2");
    assert_eq!(nf(8, 2), "A(A(0,0),0)*2");
    assert_eq!(nf(0, 5), "0");
}
