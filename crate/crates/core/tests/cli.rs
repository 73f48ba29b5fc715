use ack_goodstein::cli::run_cli;
use ack_goodstein::goodstein::{GoodsteinTrace, Outcome};

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("ackgood").chain(args.iter().copied());
    let code = run_cli(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn nf_and_gamma() {
    assert_eq!(
        run(&["nf", "--m", "21", "--base", "2"]),
        (0, "A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)\n".into())
    );
    assert_eq!(run(&["gamma", "--n", "2"]), (0, "phi(phi(0,0),0)\n".into()));
}

#[test]
fn goodstein_json_trace() {
    let (code, out) = run(&["goodstein", "--seed", "3", "--mode", "concrete", "--max-steps", "10", "--format", "json"]);
    assert_eq!(code, 0);
    let tr: GoodsteinTrace = serde_json::from_str(&out).unwrap();
    assert_eq!(tr.outcome, Outcome::Terminated(5));
    assert_eq!(tr.entries.len(), 6);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], "3");
    assert_eq!(v["outcome"]["terminated"], 5);
}

#[test]
fn base_change_of_number_and_term() {
    let want = (0, "A(A(0,0),A(0,0))+A(0,0)\n".to_string());
    assert_eq!(run(&["bch", "--from", "2", "--to", "3", "--m", "65537"]), want);
    assert_eq!(run(&["bch", "--from", "2", "--to", "3", "--term", "A(A(0,0),A(0,0))+A(0,0)"]), want);
    let (code, _) = run(&["bch", "--from", "2", "--to", "3", "--term", "A(0,0)*2"]);
    assert_eq!(code, 2);
}

#[test]
fn sandwich_rows() {
    let (code, out) = run(&["sandwich", "--m", "2^65537"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split(' ').collect()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], ["1", "1", "65536"]);
    assert_eq!(&rows[1][..2], ["0", "65537"]);
}

#[test]
fn ordinals() {
    assert_eq!(run(&["ord", "--m", "3"]), (0, "phi(0,phi(0,0))+phi(0,0)\n".into()));
    assert_eq!(
        run(&["fs", "--ord", "phi(phi(0,0),0)", "--x", "2"]),
        (0, "phi(0,phi(0,phi(0,0)))\n".into())
    );
    let (code, out) = run(&["stepdown", "--ord", "phi(0,phi(0,0))"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("reached zero at 4\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nf", "--m", "x"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["eval", "--term", "A(A(0,A(0,0)),0)"]).0, 3);
    assert_eq!(run(&["validate", "--term", "A(0,0)*2"]).0, 1);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn eval_tower() {
    assert_eq!(
        run(&["eval", "--a", "1", "--b", "1", "--base", "3"]),
        (0, "3^(3^(3^(7625597484987)))\n".into())
    );
    assert_eq!(run(&["eval", "--term", "A(A(0,0),0)*3", "--base", "2"]), (0, "12\n".into()));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "bachmann", "--seed", "7", "--limit", "20", "--format", "json"];
    let (c1, o1) = run(&args);
    let (c2, o2) = run(&args);
    assert_eq!((c1, &o1), (c2, &o2));
    assert_eq!(c1, 0);
    let v: serde_json::Value = serde_json::from_str(&o1).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn pred_lower_bound() {
    assert_eq!(run(&["pred", "--m", "16"]), (0, "A(A(0,0),0)*3+A(0,A(0,0))+A(0,0)\n".into()));
    let (code, out) = run(&["pred", "--term", "A(0,A(A(0,0),0))", "--base", "3", "--lower-bound", "--max-digits", "1000"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("(lower bound)\n"), "{out}");
}
