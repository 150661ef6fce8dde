use std::io::Write;
use std::process::{Command, Stdio};
use std::sync::Arc;

use binomials::algebra::{Exponent, MonomialOrder, Scalar};
use binomials::cli::input::{parse_input, write_session};
use binomials::engine::{Binomial, BinomialIdeal, Ring};
use binomials::oracle;
use proptest::prelude::*;

const CELLULAR: &str = "ring X Y Z\nideal I\nX^4*Y^2 - Z^6\nX^3*Y^2 - Z^5\nX^2 - Y*Z\n";

fn binary(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_binomials"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(binary(&["gb"], "ring X Y\nideal I\nX - Y\n").0, 0);
    // input errors
    let (code, _, err) = binary(&["gb"], "ring X Y\nideal I\nX^2 - Y + X\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{}", err);
    assert_eq!(binary(&["gb"], "ring X\nideal I\nX - W\n").0, 2);
    assert_eq!(binary(&["gb", "--order", "revlex"], "ring X\nideal I\nX\n").0, 2);
    assert_eq!(binary(&["no-such-command"], "").0, 2);
    assert_eq!(binary(&["fibers", "--matrix", "1 2", "--target", "1 2"], "").0, 2);
    // refusals and false predicates
    let (code, out, _) = binary(&["is-mesoprimary"], "ring X Y\nideal I\nX^2 - 1\nX*Y - Y\nY^2\n");
    assert_eq!(code, 1);
    assert!(out.contains("witness: Y"));
    assert_eq!(binary(&["is-prime"], "ring X Y\nideal I\nX^2 - Y^2\n").0, 1);
    assert_eq!(binary(&["is-prime"], "ring X Y\nideal I\nX - Y\n").0, 0);
    assert_eq!(binary(&["pure-part", "--lambda", "1,1"], "ring X Y\nideal I\nX - Y\n").0, 1);
    assert_eq!(binary(&["lattice-decomp"], "ring X Y\nideal I\nX^2 - X*Y\n").0, 1);
    assert_eq!(binary(&["fibers", "--matrix", "1 -1", "--target", "0"], "").0, 1);
    assert_eq!(binary(&["mesoprimes"], "ring X Y\nideal I\nX^2 - X*Y\n").0, 1);
    assert_eq!(binary(&["--help"], "").0, 0);
}

#[test]
fn deterministic_output() {
    let cases: &[&[&str]] = &[
        &["cellular", "--oracle"],
        &["cellular", "--json"],
        &["gb", "--order", "lex", "--json"],
        &["is-cellular"],
        &["congruence", "table", "--max", "40"],
    ];
    for args in cases {
        let first = binary(args, CELLULAR);
        for _ in 0..3 {
            assert_eq!(binary(args, CELLULAR), first, "{:?}", args);
        }
    }
}

#[test]
fn cellular_example_end_to_end() {
    let (code, out, _) = binary(&["cellular", "--oracle"], CELLULAR);
    assert_eq!(code, 0);
    assert_eq!(out.matches("component ").count(), 3);
    assert!(out.contains("oracle: intersection of components equals the input: ok"));
    let (code, out, _) = binary(&["cellular", "--json"], CELLULAR);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
}

#[test]
fn quotient_tables() {
    let (code, out, _) = binary(&["congruence", "table", "--max", "5"], "ring X Y\nideal I\nX - Y\nY^2\n");
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows, ["+ | 0 a ∞", "---------", "0 | 0 a ∞", "a | a ∞ ∞", "∞ | ∞ ∞ ∞"]);
    let (code, _, err) = binary(&["congruence", "table", "--max", "5"], "ring X\nideal I\nX^7 - X^2\n");
    assert_eq!(code, 1, "{}", err);
}

#[test]
fn gb_output_parses_back() {
    let (_, out, _) = binary(&["gb", "--order", "lex"], CELLULAR);
    let back = parse_input(&format!("ring X Y Z\nideal J\n{}", out)).unwrap();
    let orig = parse_input(CELLULAR).unwrap();
    assert_eq!(back.ideal(None).unwrap(), orig.ideal(None).unwrap());
}

fn exponent(n: usize) -> impl Strategy<Value = Exponent> {
    proptest::collection::vec(0u32..=3, n).prop_map(Exponent::new)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::sample::select(vec!["1", "-1", "2", "-1/3", "zeta(3,1)", "zeta(8,3)", "3^(2/5)", "-2^(1/2)*5/7"])
        .prop_map(|s| s.parse().unwrap())
}

fn ideal() -> impl Strategy<Value = BinomialIdeal> {
    (1..=3usize).prop_flat_map(|n| {
        let b = (exponent(n), exponent(n), scalar(), 0..5u8).prop_map(|(u, v, c, k)| {
            if k == 0 {
                Binomial::monomial(u)
            } else {
                Binomial::new(u.clone(), c, v, &MonomialOrder::grevlex()).unwrap_or_else(|| Binomial::monomial(u))
            }
        });
        proptest::collection::vec(b, 0..=3)
            .prop_map(move |g| BinomialIdeal::new(Arc::new(Ring::generic(n)), g).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse(i in ideal(), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
        let text = write_session(i.ring(), &[("I".into(), &i)], &order);
        let back = parse_input(&text).unwrap();
        let j = back.ideal(None).unwrap();
        prop_assert_eq!(j, &i);
        if let (Some(a), Some(b)) = (oracle::from_binomial_ideal(&i), oracle::from_binomial_ideal(j)) {
            prop_assert!(oracle::ideal_equal(&a, &b));
        }
        // generator lines also survive verbatim
        let raw: Vec<String> = i.generators().iter().map(|g| g.display_with(i.names()).to_string()).collect();
        let again = parse_input(&format!("ring {}\nideal I\n{}\n", i.names().join(" "), raw.join("\n"))).unwrap();
        prop_assert_eq!(again.ideal(None).unwrap().generators(), i.generators());
    }
}
