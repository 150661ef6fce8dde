//! Acceptance gate. One test drives all eight criteria and prints a
//! PASS/FAIL line per criterion; it fails if any criterion fails.
//! Run with `cargo test -p binomials --test acceptance -- --nocapture`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use binomials::algebra::{Exponent, MonomialOrder, Scalar};
use binomials::cellular::{cellular_decompose, is_cellular};
use binomials::cli::{self, input::parse_input};
use binomials::congruence::{cancellative_intersect, classify_congruence, maximal_ideal, quotient_table, Congruence};
use binomials::engine::{colon, eliminate, intersect, pure_part, Binomial, BinomialIdeal, Ring};
use binomials::lattice::{
    character_of, lattice_primary_decomposition, smith_normal_form, toric_ideal, IntMatrix, Lattice,
};
use binomials::mesoprimary::{associated_mesoprimes, is_mesoprimary, is_mesoprime, is_prime};
use binomials::oracle::{self, RationalPoly};
use binomials::cellular::CellularComponent;
use binomials::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

type Outcome = Result<String, String>;
type Suite = fn() -> Result<(), String>;
type Criterion = fn() -> Outcome;

const CASES: u32 = 500;
const FIXTURE_LIMIT: Duration = Duration::from_secs(5);

fn ring(names: &[&str]) -> Arc<Ring> {
    Arc::new(Ring::new(names.iter().map(|s| s.to_string()).collect()))
}

fn session_ideal(text: &str) -> BinomialIdeal {
    parse_input(text).unwrap().ideal(None).unwrap().clone()
}

fn polys(i: &BinomialIdeal) -> Vec<RationalPoly> {
    oracle::from_binomial_ideal(i).expect("rational coefficients")
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn timed(label: &str, f: impl FnOnce() -> Result<(), String>) -> Result<(), String> {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < FIXTURE_LIMIT, format!("{} took {:?}", label, took))
}

fn run_cli(args: &[&str], stdin: &str) -> cli::Output {
    let mut all = vec!["binomials"];
    all.extend_from_slice(args);
    cli::run(all, &mut stdin.as_bytes())
}

// 1 ------------------------------------------------------------------------

fn toric_kernel() -> Outcome {
    let expected = session_ideal("ring X Y Z\nideal E\nY^2 - X*Z\nX^2*Y - Z^2\nX^3 - Y*Z\n");
    timed("toric", || {
        let r = ring(&["X", "Y", "Z"]);
        let t = toric_ideal(&IntMatrix::from_i64(&[vec![3, 4, 5]]).unwrap(), &r).map_err(|e| e.to_string())?;
        ensure(oracle::ideal_equal(&polys(&t), &polys(&expected)), format!("toric ideal {} differs", t))?;
        ensure(t == expected, "engine equality for the toric ideal")
    })?;
    timed("elimination", || {
        let s = parse_input("ring T X Y Z\nideal I\nX - T^3\nY - T^4\nZ - T^5\n").unwrap();
        let e = eliminate(s.ideal(None).unwrap(), &[1, 2, 3]).map_err(|e| e.to_string())?;
        let want = session_ideal("ring T X Y Z\nideal E\nY^2 - X*Z\nX^2*Y - Z^2\nX^3 - Y*Z\n");
        ensure(oracle::ideal_equal(&polys(&e), &polys(&want)), format!("elimination gave {}", e))?;
        let reference = oracle::rational_eliminate(&polys(s.ideal(None).unwrap()), 4, &[1, 2, 3]);
        ensure(oracle::ideal_equal(&reference, &polys(&want)), "oracle elimination disagrees with the expected kernel")
    })?;
    timed("cli", || {
        let out = run_cli(&["toric", "--matrix", "3 4 5"], "");
        ensure(out.code == 0, format!("toric exit code {}", out.code))?;
        let got = session_ideal(&format!("ring x1 x2 x3\nideal T\n{}", out.stdout));
        let want = session_ideal("ring x1 x2 x3\nideal E\nx2^2 - x1*x3\nx1^2*x2 - x3^2\nx1^3 - x2*x3\n");
        ensure(oracle::ideal_equal(&polys(&got), &polys(&want)), "CLI toric output")
    })?;
    Ok("toric ideal of (3 4 5) and the twisted-cubic elimination both equal <Y^2-XZ, X^2Y-Z^2, X^3-YZ>".into())
}

// 2 ------------------------------------------------------------------------

fn augmentation_pair() -> Outcome {
    timed("augmentation", || {
        let i1 = session_ideal("ring X Y\nideal I\nX - Y\nY^2\n");
        let i0 = session_ideal("ring X Y\nideal I\nX - Y\nY^3 - Y^2\n");
        let p = pure_part(&i1, &[Scalar::one(), Scalar::one()]).map_err(|e| e.to_string())?;
        ensure(p == i0, format!("pure part is {}", p))?;
        ensure(oracle::ideal_equal(&polys(&p), &polys(&i0)), "oracle disagrees on the pure part")?;
        let m = maximal_ideal(&i0, Some(4)).map_err(|e| e.to_string())?;
        ensure(m.ideal == i1, format!("maximal ideal is {}", m.ideal))?;
        // the pure part is the intersection with the augmentation ideal
        let aug = session_ideal("ring X Y\nideal A\nX - 1\nY - 1\n");
        let meet = oracle::rational_intersect(&polys(&i1), &polys(&aug));
        ensure(oracle::ideal_equal(&meet, &polys(&i0)), "I0 is not I1 intersected with the augmentation ideal")
    })?;
    Ok("pure_part(<X-Y,Y^2>,(1,1)) = <X-Y,Y^3-Y^2> and maximal_ideal(.., B=4) = <X-Y,Y^2>".into())
}

// 3 ------------------------------------------------------------------------

fn cellular_decomposition() -> Outcome {
    let text = "ring X Y Z\nideal I\nX^4*Y^2 - Z^6\nX^3*Y^2 - Z^5\nX^2 - Y*Z\n";
    let input = session_ideal(text);
    let mut count = 0;
    timed("cellular", || {
        let comps = cellular_decompose(&input).map_err(|e| e.to_string())?;
        count = comps.len();
        for c in &comps {
            ensure(is_cellular(c.ideal()).map_err(|e| e.to_string())?.is_some(), format!("{} is not cellular", c.ideal()))?;
            ensure(c.ideal().contains_ideal(&input), format!("{} does not contain the input", c.ideal()))?;
        }
        let parts: Vec<&BinomialIdeal> = comps.iter().map(|c| c.ideal()).collect();
        let meet = oracle::intersect_all(&parts).ok_or("non-rational component")?;
        ensure(oracle::ideal_equal(&meet, &polys(&input)), "oracle intersection differs from the input")
    })?;
    let listed = [
        "Y - Z\nX - Z\n",
        "Z^2\nX*Z\nX^2 - Y*Z\n",
        "X^2 - Y*Z\nX*Y^3*Z - Z^5\nX*Z^5 - Z^6\nZ^7\nY^7\n",
    ];
    for body in listed {
        let c = session_ideal(&format!("ring X Y Z\nideal C\n{}", body));
        ensure(c.contains_ideal(&input), format!("listed component {} does not contain the input", c))?;
    }
    Ok(format!("{} cellular components, each containing the input, oracle intersection equals the input", count))
}

// 4 ------------------------------------------------------------------------

fn mesoprimary_witness() -> Outcome {
    timed("mesoprimary", || {
        let i = session_ideal("ring X Y\nideal I\nX^2 - 1\nX*Y - Y\nY^2\n");
        let check = is_mesoprimary(&i).map_err(|e| e.to_string())?;
        ensure(!check.mesoprimary, "reported mesoprimary")?;
        ensure(check.witness == Some(Exponent::new(vec![0, 1])), format!("witness {:?}", check.witness))?;
        let comp = CellularComponent::new(i.clone()).map_err(|e| e.to_string())?;
        let ms = associated_mesoprimes(&comp).map_err(|e| e.to_string())?;
        let a = session_ideal("ring X Y\nideal A\nX - 1\nY\n");
        let b = session_ideal("ring X Y\nideal B\nX^2 - 1\nY\n");
        ensure(ms.len() == 2, format!("{} mesoprimes", ms.len()))?;
        ensure(ms.iter().any(|(m, _)| *m.ideal() == a), "<X-1,Y> missing")?;
        ensure(ms.iter().any(|(m, _)| *m.ideal() == b), "<X^2-1,Y> missing")?;
        let out = run_cli(&["is-mesoprimary"], "ring X Y\nideal I\nX^2 - 1\nX*Y - Y\nY^2\n");
        ensure(out.code == 1 && out.stdout.contains("witness: Y"), "CLI verdict")
    })?;
    Ok("not mesoprimary with witness Y; associated mesoprimes <X-1,Y> and <X^2-1,Y>".into())
}

// 5 ------------------------------------------------------------------------

fn lattice_decomposition() -> Outcome {
    let mut summary = Vec::new();
    for (text, expected) in [("X^2 - Y^2", 2usize), ("X^3 - Y^3", 3)] {
        timed(text, || {
            let i = session_ideal(&format!("ring X Y\nideal I\n{}\n", text));
            let rho = character_of(&i).map_err(|e| e.to_string())?;
            let parts = lattice_primary_decomposition(&rho, i.ring()).map_err(|e| e.to_string())?;
            let index = rho.lattice().index_in(&rho.lattice().saturation()).map_err(|e| e.to_string())?;
            ensure(parts.len() == expected, format!("{}: {} components", text, parts.len()))?;
            ensure(index == BigInt::from(expected), format!("{}: index {}", text, index))?;
            for (_, p) in &parts {
                ensure(is_prime(p).map_err(|e| e.to_string())?, format!("{} is not prime", p))?;
                ensure(p.contains_ideal(&i), format!("{} does not contain the input", p))?;
            }
            let refs: Vec<&BinomialIdeal> = parts.iter().map(|(_, p)| p).collect();
            match oracle::intersect_all(&refs) {
                Some(meet) => ensure(oracle::ideal_equal(&meet, &polys(&i)), format!("{}: oracle intersection differs", text))?,
                // roots of unity beyond ±1 are outside the oracle's field
                None => ensure(expected == 3, format!("{}: unexpected non-rational component", text))?,
            }
            summary.push(format!("{} -> {} primes", text, parts.len()));
            Ok(())
        })?;
    }
    Ok(format!("{}; counts equal |Sat(L)/L|", summary.join(", ")))
}

// 6 ------------------------------------------------------------------------

fn congruence_fixtures() -> Outcome {
    timed("tables", || {
        let c = Congruence::new(session_ideal("ring X Y\nideal I\nX - Y\nY^2\n")).map_err(|e| e.to_string())?;
        let t = quotient_table(&c, 5).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<&str>> = (0..t.len()).map(|i| (0..t.len()).map(|j| t.sum_label(i, j)).collect()).collect();
        ensure(t.labels() == ["0", "a", "∞"], format!("labels {:?}", t.labels()))?;
        ensure(rows == vec![vec!["0", "a", "∞"], vec!["a", "∞", "∞"], vec!["∞", "∞", "∞"]], format!("table {:?}", rows))?;
        let c = Congruence::new(session_ideal("ring X Y\nideal I\nX - Y\nY^2 - 1\n")).map_err(|e| e.to_string())?;
        let t = quotient_table(&c, 5).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<&str>> = (0..t.len()).map(|i| (0..t.len()).map(|j| t.sum_label(i, j)).collect()).collect();
        ensure(rows == vec![vec!["0", "a"], vec!["a", "0"]], format!("Z/2 table {:?}", rows))
    })?;
    timed("cancellative intersection", || {
        let a = session_ideal("ring X Y\nideal A\nX^2 - Y^2\n");
        let b = session_ideal("ring X Y\nideal B\nX^3 - Y^3\n");
        let six = session_ideal("ring X Y\nideal C\nX^6 - Y^6\n");
        let ca = Congruence::new(a.clone()).map_err(|e| e.to_string())?;
        let cb = Congruence::new(b.clone()).map_err(|e| e.to_string())?;
        let meet = cancellative_intersect(&ca, &cb).map_err(|e| e.to_string())?;
        ensure(*meet.ideal() == six, format!("cancellative intersection {}", meet.ideal()))?;
        let full = oracle::rational_intersect(&polys(&a), &polys(&b));
        let quartic = RationalPoly::from_i64(2, &[(1, &[4, 0]), (1, &[3, 1]), (-1, &[1, 3]), (-1, &[0, 4])]);
        ensure(oracle::ideal_equal(&full, std::slice::from_ref(&quartic)), "oracle intersection is not the quartic")?;
        // strict containment: X^6 − Y^6 lies in the quartic's ideal, not conversely
        let o = MonomialOrder::grevlex();
        let gb = oracle::rational_gb(&full, &o);
        ensure(oracle::contains(&gb, &polys(&six)[0], &o), "X^6-Y^6 not in the oracle intersection")?;
        let six_gb = oracle::rational_gb(&polys(&six), &o);
        ensure(!oracle::contains(&six_gb, &quartic, &o), "containment is not strict")
    })?;
    Ok("tables {0,a,inf} and Z/2 reproduced; cancellative intersection <X^6-Y^6> strictly inside the quartic".into())
}

// 7 ------------------------------------------------------------------------

fn exponent(n: usize, max_deg: u32) -> impl Strategy<Value = Exponent> {
    proptest::collection::vec(0..=max_deg, n).prop_map(move |mut v| {
        while v.iter().sum::<u32>() > max_deg {
            let k = (0..v.len()).max_by_key(|&i| v[i]).unwrap();
            v[k] -= 1;
        }
        Exponent::new(v)
    })
}

fn rational_scalar() -> impl Strategy<Value = Scalar> {
    prop::sample::select(vec!["1", "1", "1", "-1", "2", "1/2", "-3", "2/3"]).prop_map(|s| s.parse().unwrap())
}

fn any_scalar() -> impl Strategy<Value = Scalar> {
    prop::sample::select(vec!["1", "1", "-1", "2", "1/3", "zeta(3,1)", "zeta(4,1)", "2^(1/2)", "-5/2"])
        .prop_map(|s| s.parse().unwrap())
}

fn binomial(n: usize, coeff: BoxedStrategy<Scalar>, max_deg: u32) -> impl Strategy<Value = Binomial> {
    (exponent(n, max_deg), exponent(n, max_deg), coeff, 0..6u8).prop_map(|(u, v, c, k)| {
        if k == 0 {
            Binomial::monomial(u)
        } else {
            Binomial::new(u.clone(), c, v, &MonomialOrder::grevlex()).unwrap_or_else(|| Binomial::monomial(u))
        }
    })
}

fn ideal_strategy(coeff: fn() -> BoxedStrategy<Scalar>, max_deg: u32, max_gens: usize) -> impl Strategy<Value = BinomialIdeal> {
    (1..=3usize).prop_flat_map(move |n| {
        proptest::collection::vec(binomial(n, coeff(), max_deg), 1..=max_gens)
            .prop_map(move |gens| BinomialIdeal::new(Arc::new(Ring::generic(n)), gens).unwrap())
    })
}

fn boxed_rational() -> BoxedStrategy<Scalar> {
    rational_scalar().boxed()
}

fn boxed_any() -> BoxedStrategy<Scalar> {
    any_scalar().boxed()
}

fn unital() -> BoxedStrategy<Scalar> {
    Just(Scalar::one()).boxed()
}

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn suite_gb_shape() -> Result<(), String> {
    runner()
        .run(&(ideal_strategy(boxed_any, 6, 3), prop::bool::ANY), |(ideal, lex)| {
            let o = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
            let gb = ideal.groebner_basis(&o);
            for g in gb.elements() {
                let terms = 1 + usize::from(g.trail().is_some());
                prop_assert!(terms <= 2);
                if let Some(t) = g.trail() {
                    prop_assert_eq!(o.compare(g.lead(), t), std::cmp::Ordering::Greater);
                }
                // reduced: no lead divides a term of another element
                for h in gb.elements() {
                    if h != g {
                        prop_assert!(!h.lead().divides(g.lead()));
                        if let Some(t) = g.trail() {
                            prop_assert!(!h.lead().divides(t));
                        }
                    }
                }
            }
            for f in ideal.generators() {
                prop_assert!(ideal.contains(f), "generator {:?} not reduced to zero", f);
            }
            Ok(())
        })
        .map_err(|e| format!("(a) {}", e))
}

fn suite_congruence_axioms() -> Result<(), String> {
    let strat = ideal_strategy(unital, 6, 3).prop_flat_map(|i| {
        let n = i.nvars();
        (Just(i), exponent(n, 4), exponent(n, 4), exponent(n, 3), 0..3usize, 0..3usize)
    });
    runner()
        .run(&strat, |(ideal, u, w, t, gi, gj)| {
            if ideal.is_unit() {
                return Ok(());
            }
            let c = Congruence::new(ideal.clone()).map_err(|e| fail(e.to_string()))?;
            let gens = ideal.generators();
            let g = &gens[gi % gens.len()];
            let h = &gens[gj % gens.len()];
            // a generator relates its two sides, after any translation
            if let Some(b) = g.trail() {
                prop_assert!(c.related(&g.lead().add(&u), &b.add(&u)));
            }
            prop_assert!(c.related(&u, &u));
            prop_assert_eq!(c.related(&u, &w), c.related(&w, &u));
            if c.related(&u, &w) {
                prop_assert!(c.related(&u.add(&t), &w.add(&t)));
            }
            // transitivity along a two-step chain
            if let (Some(b), Some(d)) = (g.trail(), h.trail()) {
                let x = g.lead().add(&u);
                let y = b.add(&u);
                if let Some(shift) = y.checked_sub(h.lead()) {
                    let z = d.add(&shift);
                    prop_assert!(c.related(&x, &y) && c.related(&y, &z));
                    prop_assert!(c.related(&x, &z));
                }
            }
            // the nil class absorbs
            if c.is_nil(&u) {
                prop_assert!(c.is_nil(&u.add(&t)));
            }
            Ok(())
        })
        .map_err(|e| format!("(b) {}", e))
}

fn suite_engine_vs_oracle() -> Result<(), String> {
    runner()
        .run(&(ideal_strategy(boxed_rational, 5, 3), prop::bool::ANY), |(ideal, lex)| {
            let o = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
            let gb = ideal.groebner_basis(&o);
            let mut mine: Vec<RationalPoly> = gb.elements().iter().map(|b| RationalPoly::from_binomial(b).unwrap()).collect();
            let mut theirs = oracle::rational_gb(&polys(&ideal), &o);
            let key = |p: &RationalPoly| p.leading(&o).map(|(e, _)| e.clone());
            mine.sort_by_key(key);
            theirs.sort_by_key(key);
            prop_assert_eq!(mine, theirs);
            Ok(())
        })
        .map_err(|e| format!("(c) {}", e))
}

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1..=3usize, 1..=3usize).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
            .prop_map(|rows| IntMatrix::from_i64(&rows).unwrap())
    })
}

fn suite_snf() -> Result<(), String> {
    runner()
        .run(&small_matrix(), |a| {
            let s = smith_normal_form(&a);
            let uav = s.u.mul(&a).unwrap().mul(&s.v).unwrap();
            prop_assert_eq!(&uav, &s.d);
            prop_assert!(s.u.determinant().unwrap().abs().is_one());
            prop_assert!(s.v.determinant().unwrap().abs().is_one());
            let inv = s.invariant_factors();
            for i in 0..s.d.nrows() {
                for j in 0..s.d.ncols() {
                    if i != j {
                        prop_assert!(s.d[(i, j)].is_zero());
                    }
                }
            }
            for w in inv.windows(2) {
                prop_assert!(!w[0].is_negative() && (w[1].clone() % &w[0]).is_zero());
            }
            Ok(())
        })
        .map_err(|e| format!("(d) {}", e))
}

fn suite_saturations() -> Result<(), String> {
    let strat = (1..=3usize).prop_flat_map(|n| {
        (Just(n), proptest::collection::vec(proptest::collection::vec(-8i64..=8, n), 1..=3), prop::sample::select(vec![2u64, 2, 3]))
    });
    runner()
        .run(&strat, |(n, gens, p)| {
            let l = Lattice::from_i64(n, &gens).unwrap();
            let s = l.saturations(p).map_err(|e| fail(e.to_string()))?;
            let whole = l.index_in(&s.sat).map_err(|e| fail(e.to_string()))?;
            let a = l.index_in(&s.sat_p).map_err(|e| fail(e.to_string()))?;
            let b = l.index_in(&s.sat_prime_p).map_err(|e| fail(e.to_string()))?;
            prop_assert_eq!(&a * &b, whole);
            // Sat_p/L is a p-group, Sat'_p/L has order prime to p
            let mut q = a.clone();
            while (&q % BigInt::from(p)).is_zero() {
                q /= p;
            }
            prop_assert!(q.is_one());
            prop_assert!(!(&b % BigInt::from(p)).is_zero());
            Ok(())
        })
        .map_err(|e| format!("(e) {}", e))
}

/// Ideals chosen to exercise every predicate, combined with a random extra
/// generator so the corpus covers neighbours of each class.
fn predicate_corpus() -> Vec<&'static str> {
    vec![
        "X - Y",
        "X^2 - Y^2",
        "X^3 - Y^3",
        "X^2 - Y*Z",
        "X*Y - 1",
        "X^2 - 1\nX*Y - Y\nY^2",
        "X - Y\nY^2",
        "X - Y\nY^3 - Y^2",
        "X^2\nY",
        "X*Y",
        "X^2 - X*Y",
        "Y^2 - X*Z\nX^2*Y - Z^2\nX^3 - Y*Z",
        "X - Y\nZ^2",
        "X^2 - Y^2\nZ",
        "X^4 - Y^4\nX*Z - Y*Z",
        "X^2 - Y",
        "Z^3\nX*Z - Y*Z",
    ]
}

fn suite_implications() -> Result<(), String> {
    let corpus = predicate_corpus();
    let strat = (0..corpus.len(), binomial(3, boxed_rational(), 3), prop::bool::ANY);
    runner()
        .run(&strat, |(k, extra, add)| {
            let base = session_ideal(&format!("ring X Y Z\nideal I\n{}\n", corpus[k]));
            let ideal = if add { base.with_generators([extra]).canonical() } else { base };
            if ideal.is_unit() {
                return Ok(());
            }
            let prime = is_prime(&ideal).map_err(|e| fail(e.to_string()))?;
            let meso = is_mesoprime(&ideal).map_err(|e| fail(e.to_string()))?.is_some();
            let cellular = is_cellular(&ideal).map_err(|e| fail(e.to_string()))?.is_some();
            let mesoprimary = match is_mesoprimary(&ideal) {
                Ok(c) => c.mesoprimary,
                Err(Error::SearchTooLarge(_)) => return Ok(()),
                Err(e) => return Err(fail(e.to_string())),
            };
            prop_assert!(!prime || meso, "prime but not mesoprime: {}", ideal);
            prop_assert!(!meso || mesoprimary, "mesoprime but not mesoprimary: {}", ideal);
            prop_assert!(!mesoprimary || cellular, "mesoprimary but not cellular: {}", ideal);
            // the same chain on the induced congruence, when it is maximal
            if ideal.is_unital() {
                if let Ok(c) = Congruence::new(ideal.clone()) {
                    if c.is_maximal() {
                        let f = classify_congruence(&c).map_err(|e| fail(e.to_string()))?;
                        prop_assert!(!f.toric || f.prime);
                        prop_assert!(!f.prime || f.primary);
                        prop_assert!(!f.mesoprimary || f.primary);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| format!("(f) {}", e))
}

fn property_suites() -> Outcome {
    let suites: [(&str, Suite); 6] = [
        ("a", suite_gb_shape),
        ("b", suite_congruence_axioms),
        ("c", suite_engine_vs_oracle),
        ("d", suite_snf),
        ("e", suite_saturations),
        ("f", suite_implications),
    ];
    let results: Vec<(&str, Result<(), String>)> = suites.iter().map(|(name, f)| (*name, f())).collect();
    let failures: Vec<String> = results.iter().filter_map(|(_, r)| r.clone().err()).collect();
    if failures.is_empty() {
        Ok(format!("suites (a)-(f) passed, {} cases each", CASES))
    } else {
        Err(failures.join("; "))
    }
}

// 8 ------------------------------------------------------------------------

fn negative_controls() -> Outcome {
    timed("negative controls", || {
        let one = |n: i64| RationalPoly::from_i64(1, &[(1, &[1]), (-n, &[0])]);
        let cubic = RationalPoly::from_i64(1, &[(1, &[3]), (-1, &[0])]);
        let q = oracle::rational_colon(&[cubic], &one(1));
        let want = RationalPoly::from_i64(1, &[(1, &[2]), (1, &[1]), (1, &[0])]);
        ensure(oracle::ideal_equal(&q, &[want]), "oracle quotient is not X^2+X+1")?;
        let meet = oracle::rational_intersect(&[one(1)], &[one(2)]);
        let want = RationalPoly::from_i64(1, &[(1, &[2]), (-3, &[1]), (2, &[0])]);
        ensure(oracle::ideal_equal(&meet, &[want]), "oracle intersection is not X^2-3X+2")?;

        let i = session_ideal("ring X\nideal I\nX^3 - 1\n");
        let f = Binomial::pure(Exponent::new(vec![1]), Exponent::new(vec![0]), &MonomialOrder::grevlex()).unwrap();
        ensure(matches!(colon(&i, &f), Err(Error::NonBinomial(_))), "engine accepted a binomial quotient")?;
        let a = session_ideal("ring X\nideal A\nX - 1\n");
        let b = session_ideal("ring X\nideal B\nX - 2\n");
        ensure(matches!(intersect(&a, &b), Err(Error::NonBinomial(_))), "engine accepted a general intersection")
    })?;
    Ok("oracle gives X^2+X+1 and X^2-3X+2; engine refuses both with NonBinomial".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 toric kernel", toric_kernel),
        ("2 augmentation pair", augmentation_pair),
        ("3 cellular decomposition", cellular_decomposition),
        ("4 mesoprimary witness", mesoprimary_witness),
        ("5 lattice decomposition", lattice_decomposition),
        ("6 congruence fixtures", congruence_fixtures),
        ("7 property suites", property_suites),
        ("8 negative controls", negative_controls),
    ];
    // sequential on purpose: fixture timings must not compete for CPU
    println!();
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {}", name, detail),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {}", name, why);
            }
        }
    }
    assert_eq!(failed, 0, "{} acceptance criteria failed", failed);
}
