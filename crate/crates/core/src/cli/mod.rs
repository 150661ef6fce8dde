//! Command-line front end. [`run`] does all the work and returns the text
//! for stdout and stderr together with the exit code, so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 mathematical refusal or a false predicate,
//! 2 input error.

pub mod input;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{Exponent, MonomialOrder, Term};
use crate::cellular::{cellular_decompose, cellularity, prune, CellularComponent, Cellularity};
use crate::congruence::{
    classify_congruence, classify_element, is_lattice_ideal, maximal_ideal, quotient_table, Completeness, Congruence,
};
use crate::engine::{colon_monomial, eliminate, intersect_monomial, pure_part, saturate_vars, BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::{
    character_of, fibers, is_positive, lattice_primary_decomposition, smith_normal_form, toric_ideal, IntMatrix,
};
use crate::mesoprimary::{
    associated_mesoprimes, cellular_radical, is_mesoprimary, is_mesoprime, is_prime, mesoprimary_primary_decomposition,
};
use crate::oracle::{self, RationalPoly};
use input::{
    parse_input, parse_int_list, parse_matrix_literal, parse_monomial, parse_scalar_list, parse_term_literal,
    parse_variables, Session,
};

#[derive(Debug, Parser)]
#[command(name = "binomials", version, about = "Binomial ideals, their decompositions and monoid congruences")]
pub struct Cli {
    /// Input file; `-` or absent reads stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Ideal to operate on (default: the first one declared).
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    /// Monomial order: lex, grevlex, or elim:X,Y (grevlex tie-break).
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check the result with the rational polynomial engine.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Accepted and ignored; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis under --order.
    Gb,
    /// Normal form of a term.
    Nf { term: String },
    /// Intersection with the subring of the kept variables.
    Eliminate {
        #[arg(long)]
        keep: String,
    },
    /// Quotient by a monomial.
    Colon {
        #[arg(long)]
        monomial: String,
    },
    /// Saturation by the product of the listed variables.
    Saturate {
        #[arg(long)]
        vars: String,
    },
    /// Intersection with a monomial ideal.
    IntersectMonomial {
        #[arg(long)]
        monomials: String,
    },
    /// Pure binomial part with respect to a rescaling.
    PurePart {
        #[arg(long)]
        lambda: String,
    },
    /// Largest ideal inducing the same congruence.
    Maximal {
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Cellular decomposition.
    Cellular {
        #[arg(long)]
        prune: bool,
    },
    /// Associated mesoprimes of a cellular ideal.
    Mesoprimes,
    IsCellular,
    IsMesoprimary,
    IsMesoprime,
    IsPrime,
    /// Radical of a cellular ideal.
    Radical,
    /// Primary decomposition of a mesoprimary ideal.
    MesoPrimaryDecomp,
    /// Prime decomposition of a lattice ideal.
    LatticeDecomp,
    /// Toric ideal of an integer matrix.
    Toric {
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Whether the monoid of the matrix columns is positive.
    IsPositive {
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Nonnegative solutions of A·u = target.
    Fibers {
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        target: String,
    },
    /// Smith normal form U·A·V = D.
    Snf {
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Monoid congruence of a pure ideal.
    Congruence {
        #[command(subcommand)]
        action: CongruenceCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CongruenceCommand {
    /// Structural flags, plus element flags with --element.
    Classify {
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Whether two monomials are congruent.
    Related { u: String, v: String },
    /// Addition table of a finite quotient.
    Table {
        #[arg(long, default_value_t = 64)]
        max: usize,
    },
}

/// Everything a process invocation would produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }

    fn predicate(holds: bool, text: String, json: Value) -> Self {
        Report { text, json, code: if holds { 0 } else { 1 } }
    }

    fn with_oracle(mut self, check: OracleCheck) -> Self {
        let (line, value) = match check {
            OracleCheck::Agrees(what) => (format!("oracle: {}: ok", what), json!({"check": what, "agrees": true})),
            OracleCheck::Disagrees(what) => {
                self.code = 1;
                (format!("oracle: {}: MISMATCH", what), json!({"check": what, "agrees": false}))
            }
            OracleCheck::Skipped(why) => (format!("oracle: skipped ({})", why), json!({"skipped": why})),
        };
        self.text.push('\n');
        self.text.push_str(&line);
        if let Value::Object(m) = &mut self.json {
            m.insert("oracle".into(), value);
        }
        self
    }
}

enum OracleCheck {
    Agrees(String),
    Disagrees(String),
    Skipped(String),
}

impl OracleCheck {
    fn from(what: &str, result: Option<bool>) -> Self {
        match result {
            Some(true) => OracleCheck::Agrees(what.into()),
            Some(false) => OracleCheck::Disagrees(what.into()),
            None => OracleCheck::Skipped("coefficients outside the rationals".into()),
        }
    }
}

struct Context<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    session: Option<Session>,
}

impl Context<'_> {
    fn session(&mut self) -> Result<&Session> {
        if self.session.is_none() {
            let text = match &self.cli.input {
                Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {}: {}", p.display(), e)))?,
                _ => {
                    let mut buf = String::new();
                    self.stdin
                        .read_to_string(&mut buf)
                        .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {}", e)))?;
                    buf
                }
            };
            self.session = Some(parse_input(&text)?);
        }
        Ok(self.session.as_ref().unwrap())
    }

    fn ideal(&mut self) -> Result<BinomialIdeal> {
        let name = self.cli.ideal.clone();
        Ok(self.session()?.ideal(name.as_deref())?.clone())
    }

    /// A literal such as `"3 4 5"`, a matrix name, or the first matrix of
    /// the input.
    fn matrix(&mut self, arg: &Option<String>) -> Result<IntMatrix> {
        match arg {
            Some(a) if a.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') => self
                .session()?
                .matrix(a)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("no matrix named '{}'", a))),
            Some(a) => parse_matrix_literal(a),
            None => self
                .session()?
                .first_matrix()
                .cloned()
                .ok_or_else(|| Error::InvalidInput("no matrix given".into())),
        }
    }

    /// The input's ring when it has `n` variables and an input was given,
    /// otherwise `x1, …, xn`.
    fn ring_for(&mut self, n: usize) -> Result<Arc<Ring>> {
        if self.cli.input.is_some() {
            if let Some(r) = &self.session()?.ring {
                if r.nvars() == n {
                    return Ok(r.clone());
                }
            }
        }
        Ok(Arc::new(Ring::generic(n)))
    }
}

/// Parses an order argument for a ring.
pub fn parse_order(text: &str, ring: &Ring) -> Result<MonomialOrder> {
    match text.trim() {
        "lex" => Ok(MonomialOrder::lex()),
        "grevlex" => Ok(MonomialOrder::grevlex()),
        t => match t.strip_prefix("elim:") {
            Some(vars) => {
                let block = parse_variables(vars, ring.names())?;
                Ok(MonomialOrder::elimination(block, MonomialOrder::grevlex()))
            }
            None => Err(Error::InvalidInput(format!("unknown monomial order '{}'", t))),
        },
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let json_mode = cli.json;
    let mut ctx = Context { cli: &cli, stdin, session: None };
    match execute(&mut ctx) {
        Ok(r) => {
            let stdout = if json_mode {
                format!("{}\n", serde_json::to_string_pretty(&r.json).unwrap())
            } else {
                format!("{}\n", r.text)
            };
            Output { code: r.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 1 };
            let kind = if code == 2 { "input-error" } else { "refused" };
            let stdout = if json_mode {
                format!("{}\n", serde_json::to_string_pretty(&json!({"status": kind, "error": e.to_string()})).unwrap())
            } else {
                String::new()
            };
            Output { code, stdout, stderr: format!("error: {}\n", e) }
        }
    }
}

fn ideal_lines(ideal: &BinomialIdeal, order: &MonomialOrder) -> Vec<String> {
    let gb = ideal.groebner_basis(order);
    if gb.is_empty() {
        return vec!["0".into()];
    }
    gb.elements().iter().map(|g| g.display_with(ideal.names()).to_string()).collect()
}

fn ideal_json(ideal: &BinomialIdeal, order: &MonomialOrder) -> Value {
    let gb = ideal.groebner_basis(order);
    let gens: Vec<Value> = gb
        .elements()
        .iter()
        .map(|g| {
            let mut v = serde_json::to_value(g).unwrap();
            v["text"] = json!(g.display_with(ideal.names()).to_string());
            v
        })
        .collect();
    json!({"variables": ideal.names(), "order": order.to_string(), "generators": gens})
}

fn indented(lines: &[String]) -> String {
    lines.iter().map(|l| format!("  {}", l)).collect::<Vec<_>>().join("\n")
}

fn names_of(ring: &Ring, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&i| ring.names()[i].clone()).collect()
}

fn set_text(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn term_text(t: &Term, names: &[String]) -> String {
    let mono = t.exponent.display_with(names).to_string();
    if t.coeff.is_one() {
        mono
    } else if t.exponent.is_zero() {
        t.coeff.to_string()
    } else {
        format!("{}*{}", t.coeff, mono)
    }
}

fn vector_text(v: &[impl ToString]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn matrix_text(m: &IntMatrix) -> String {
    m.rows().iter().map(|r| format!("  {}", vector_text(r))).collect::<Vec<_>>().join("\n")
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn polys(ideal: &BinomialIdeal) -> Option<Vec<RationalPoly>> {
    oracle::from_binomial_ideal(ideal)
}

fn oracle_equal(ideal: &BinomialIdeal, expected: impl FnOnce() -> Option<Vec<RationalPoly>>) -> Option<bool> {
    let mine = polys(ideal)?;
    Some(oracle::ideal_equal(&mine, &expected()?))
}

fn oracle_intersection(input: &BinomialIdeal, parts: &[&BinomialIdeal]) -> Option<bool> {
    if parts.is_empty() {
        return Some(input.is_unit());
    }
    let meet = oracle::intersect_all(parts)?;
    Some(oracle::ideal_equal(&polys(input)?, &meet))
}

fn execute(ctx: &mut Context<'_>) -> Result<Report> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Toric { matrix } => return cmd_toric(ctx, matrix),
        Command::IsPositive { matrix } => {
            let a = ctx.matrix(matrix)?;
            let p = is_positive(&a)?;
            return Ok(Report::predicate(p, p.to_string(), json!({"positive": p})));
        }
        Command::Fibers { matrix, target } => {
            let a = ctx.matrix(matrix)?;
            let t = parse_int_list(target)?;
            let f = fibers(&a, &t)?;
            let text = if f.is_empty() {
                "(no solutions)".to_string()
            } else {
                f.iter().map(|u| vector_text(u.as_slice())).collect::<Vec<_>>().join("\n")
            };
            return Ok(Report::new(text, json!({"target": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "fiber": f})));
        }
        Command::Snf { matrix } => {
            let a = ctx.matrix(matrix)?;
            let s = smith_normal_form(&a);
            let inv: Vec<String> = s.invariant_factors().iter().map(BigInt::to_string).collect();
            let text = format!(
                "invariant factors: {}\nD =\n{}\nU =\n{}\nV =\n{}",
                vector_text(&inv),
                matrix_text(&s.d),
                matrix_text(&s.u),
                matrix_text(&s.v)
            );
            let js = json!({"invariant_factors": inv, "d": matrix_json(&s.d), "u": matrix_json(&s.u), "v": matrix_json(&s.v)});
            return Ok(Report::new(text, js));
        }
        _ => {}
    }

    let ideal = ctx.ideal()?;
    let ring = ideal.ring().clone();
    let names = ring.names().to_vec();
    let order = parse_order(&cli.order, &ring)?;
    order.validate(ring.nvars())?;
    let gens = || polys(&ideal);

    let report = match &cli.command {
        Command::Gb => {
            let gb = ideal.groebner_basis(&order);
            let r = Report::new(ideal_lines(&ideal, &order).join("\n"), ideal_json(&ideal, &order));
            if cli.oracle {
                let check = gens().map(|g| {
                    let mut reference = oracle::rational_gb(&g, &order);
                    let mut mine: Vec<RationalPoly> =
                        gb.elements().iter().map(|b| RationalPoly::from_binomial(b).unwrap()).collect();
                    let key = |p: &RationalPoly| p.leading(&order).map(|(e, _)| e.clone());
                    reference.sort_by_key(key);
                    mine.sort_by_key(key);
                    reference == mine
                });
                r.with_oracle(OracleCheck::from("reduced basis matches", check))
            } else {
                r
            }
        }
        Command::Nf { term } => {
            let t = parse_term_literal(term, &names)?;
            let nf = ideal.normal_form(&t);
            let text = nf.as_ref().map_or("0".to_string(), |t| term_text(t, &names));
            Report::new(text.clone(), json!({"normal_form": text, "exponent": nf.map(|t| t.exponent)}))
        }
        Command::Eliminate { keep } => {
            let keep = parse_variables(keep, &names)?;
            let e = eliminate(&ideal, &keep)?;
            let mut r = Report::new(ideal_lines(&e, &order).join("\n"), ideal_json(&e, &order));
            if cli.oracle {
                let check = oracle_equal(&e, || Some(oracle::rational_eliminate(&gens()?, ring.nvars(), &keep)));
                r = r.with_oracle(OracleCheck::from("elimination ideal", check));
            }
            r
        }
        Command::Colon { monomial } => {
            let u = parse_monomial(monomial, &names)?;
            let q = colon_monomial(&ideal, &u)?;
            let mut r = Report::new(ideal_lines(&q, &order).join("\n"), ideal_json(&q, &order));
            if cli.oracle {
                let m = RationalPoly::term(num_rational::BigRational::from_integer(1.into()), u.clone());
                let check = oracle_equal(&q, || Some(oracle::rational_colon(&gens()?, &m)));
                r = r.with_oracle(OracleCheck::from("quotient ideal", check));
            }
            r
        }
        Command::Saturate { vars } => {
            let vars = parse_variables(vars, &names)?;
            let s = saturate_vars(&ideal, &vars)?;
            let mut r = Report::new(ideal_lines(&s, &order).join("\n"), ideal_json(&s, &order));
            if cli.oracle {
                let m = RationalPoly::term(
                    num_rational::BigRational::from_integer(1.into()),
                    Exponent::indicator(ring.nvars(), &vars),
                );
                let check = oracle_equal(&s, || Some(oracle::rational_saturate(&gens()?, &m)));
                r = r.with_oracle(OracleCheck::from("saturation", check));
            }
            r
        }
        Command::IntersectMonomial { monomials } => {
            let ms: Vec<Exponent> = monomials
                .split(',')
                .filter(|m| !m.trim().is_empty())
                .map(|m| parse_monomial(m, &names))
                .collect::<Result<_>>()?;
            let i = intersect_monomial(&ideal, &ms)?;
            let mut r = Report::new(ideal_lines(&i, &order).join("\n"), ideal_json(&i, &order));
            if cli.oracle {
                let one = || num_rational::BigRational::from_integer(1.into());
                let mono: Vec<RationalPoly> = ms.iter().map(|u| RationalPoly::term(one(), u.clone())).collect();
                let check = oracle_equal(&i, || Some(oracle::rational_intersect(&gens()?, &mono)));
                r = r.with_oracle(OracleCheck::from("intersection", check));
            }
            r
        }
        Command::PurePart { lambda } => {
            let l = parse_scalar_list(lambda)?;
            let p = pure_part(&ideal, &l)?;
            Report::new(ideal_lines(&p, &order).join("\n"), ideal_json(&p, &order))
        }
        Command::Maximal { bound } => {
            let m = maximal_ideal(&ideal, *bound)?;
            let complete = m.completeness == Completeness::Complete;
            let mut lines = ideal_lines(&m.ideal, &order);
            lines.push(format!("completeness: {}", if complete { "complete" } else { "unknown" }));
            if let Some(w) = &m.witness {
                lines.push(format!("nil witness: {}", w.display_with(&names)));
            }
            let mut js = ideal_json(&m.ideal, &order);
            js["completeness"] = json!(m.completeness);
            js["witness"] = json!(m.witness);
            Report::new(lines.join("\n"), js)
        }
        Command::Cellular { prune: do_prune } => {
            let comps = cellular_decompose(&ideal)?;
            let (comps, minimal) = if *do_prune {
                let p = prune(comps);
                (p.components, Some(p.minimal))
            } else {
                (comps, None)
            };
            let mut text = Vec::new();
            for (k, c) in comps.iter().enumerate() {
                text.push(format!("component {} (delta = {}):", k + 1, set_text(&names_of(&ring, c.delta()))));
                text.push(indented(&ideal_lines(c.ideal(), &order)));
            }
            if let Some(m) = minimal {
                text.push(format!("minimal: {}", m));
            }
            let js: Vec<Value> = comps
                .iter()
                .map(|c| {
                    let mut v = ideal_json(c.ideal(), &order);
                    v["delta"] = json!(names_of(&ring, c.delta()));
                    v
                })
                .collect();
            let mut r = Report::new(text.join("\n"), json!({"components": js, "minimal": minimal}));
            if cli.oracle {
                let parts: Vec<&BinomialIdeal> = comps.iter().map(CellularComponent::ideal).collect();
                r = r.with_oracle(OracleCheck::from("intersection of components equals the input", oracle_intersection(&ideal, &parts)));
            }
            r
        }
        Command::Mesoprimes => {
            let comp = CellularComponent::new(ideal.clone())?;
            let ms = associated_mesoprimes(&comp)?;
            let mut text = Vec::new();
            let mut js = Vec::new();
            for (k, (m, w)) in ms.iter().enumerate() {
                text.push(format!("mesoprime {} (witness {}):", k + 1, w.display_with(&names)));
                text.push(indented(&ideal_lines(m.ideal(), &order)));
                let mut v = ideal_json(m.ideal(), &order);
                v["witness"] = json!(w.display_with(&names).to_string());
                v["delta"] = json!(names_of(&ring, m.delta()));
                v["lattice"] = json!(m.lattice());
                js.push(v);
            }
            Report::new(text.join("\n"), json!({"mesoprimes": js}))
        }
        Command::IsCellular => match cellularity(&ideal)? {
            Cellularity::Cellular { delta, nilpotency } => {
                let nil: Vec<String> = nilpotency.iter().map(|&(i, d)| format!("{}^{}", names[i], d)).collect();
                let text = format!("true\ndelta: {}\nnilpotent: {}", set_text(&names_of(&ring, &delta)), set_text(&nil));
                Report::predicate(true, text, json!({"cellular": true, "delta": names_of(&ring, &delta), "nilpotent": nil}))
            }
            Cellularity::NotCellular { variable } => Report::predicate(
                false,
                format!("false\nwitness: {}", names[variable]),
                json!({"cellular": false, "witness": names[variable]}),
            ),
        },
        Command::IsMesoprimary => {
            let c = is_mesoprimary(&ideal)?;
            let w = c.witness.as_ref().map(|w| w.display_with(&names).to_string());
            let text = match &w {
                Some(w) => format!("{}\nwitness: {}", c.mesoprimary, w),
                None => c.mesoprimary.to_string(),
            };
            Report::predicate(c.mesoprimary, text, json!({"mesoprimary": c.mesoprimary, "witness": w}))
        }
        Command::IsMesoprime => match is_mesoprime(&ideal)? {
            Some(m) => {
                let text = format!("true\ndelta: {}\nlattice: {}", set_text(&names_of(&ring, m.delta())), m.lattice());
                Report::predicate(true, text, json!({"mesoprime": true, "delta": names_of(&ring, m.delta()), "lattice": m.lattice()}))
            }
            None => Report::predicate(false, "false".into(), json!({"mesoprime": false})),
        },
        Command::IsPrime => {
            let p = is_prime(&ideal)?;
            Report::predicate(p, p.to_string(), json!({"prime": p}))
        }
        Command::Radical => {
            let comp = CellularComponent::new(ideal.clone())?;
            let r = cellular_radical(&comp)?;
            Report::new(ideal_lines(r.ideal(), &order).join("\n"), ideal_json(r.ideal(), &order))
        }
        Command::MesoPrimaryDecomp => {
            let parts = mesoprimary_primary_decomposition(&ideal)?;
            let mut r = components_report(&parts, &order);
            if cli.oracle {
                let refs: Vec<&BinomialIdeal> = parts.iter().collect();
                r = r.with_oracle(OracleCheck::from("intersection of components equals the input", oracle_intersection(&ideal, &refs)));
            }
            r
        }
        Command::LatticeDecomp => {
            if !is_lattice_ideal(&ideal)? {
                return Err(Error::Precondition("the ideal is not a lattice ideal (it has monomials or is not saturated)".into()));
            }
            let rho = character_of(&ideal)?;
            let parts: Vec<BinomialIdeal> = lattice_primary_decomposition(&rho, &ring)?.into_iter().map(|(_, i)| i).collect();
            let index = rho.lattice().index_in(&rho.lattice().saturation())?;
            let mut r = components_report(&parts, &order);
            r.text = format!("lattice: {}\nindex in saturation: {}\n{}", rho.lattice(), index, r.text);
            r.json["lattice"] = json!(rho.lattice());
            r.json["index"] = json!(index.to_string());
            if cli.oracle {
                let refs: Vec<&BinomialIdeal> = parts.iter().collect();
                r = r.with_oracle(OracleCheck::from("intersection of components equals the input", oracle_intersection(&ideal, &refs)));
            }
            r
        }
        Command::Congruence { action } => cmd_congruence(&ideal, action, &order)?,
        Command::Toric { .. } | Command::IsPositive { .. } | Command::Fibers { .. } | Command::Snf { .. } => unreachable!(),
    };
    Ok(report)
}

fn components_report(parts: &[BinomialIdeal], order: &MonomialOrder) -> Report {
    let mut text = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        text.push(format!("component {}:", k + 1));
        text.push(indented(&ideal_lines(p, order)));
    }
    let js: Vec<Value> = parts.iter().map(|p| ideal_json(p, order)).collect();
    Report::new(text.join("\n"), json!({"components": js}))
}

fn cmd_toric(ctx: &mut Context<'_>, matrix: &Option<String>) -> Result<Report> {
    let a = ctx.matrix(matrix)?;
    let ring = ctx.ring_for(a.ncols())?;
    let order = parse_order(&ctx.cli.order, &ring)?;
    let t = toric_ideal(&a, &ring)?;
    Ok(Report::new(ideal_lines(&t, &order).join("\n"), ideal_json(&t, &order)))
}

fn cmd_congruence(ideal: &BinomialIdeal, action: &CongruenceCommand, order: &MonomialOrder) -> Result<Report> {
    let names = ideal.names().to_vec();
    match action {
        CongruenceCommand::Classify { element, bound } => {
            let mut c = Congruence::new(ideal.clone())?;
            if !c.is_maximal() {
                c = Congruence::maximalized(ideal.clone(), *bound)?;
            }
            let flags = classify_congruence(&c)?;
            let mut text = vec![
                format!("cancellative: {}", flags.cancellative),
                format!("prime: {}", flags.prime),
                format!("primary: {}", flags.primary),
                format!("mesoprimary: {}", flags.mesoprimary),
                format!("toric: {}", flags.toric),
            ];
            let mut js = json!({"congruence": flags, "maximal_ideal": ideal_json(c.ideal(), order)});
            if let Some(e) = element {
                let u = parse_monomial(e, &names)?;
                let f = classify_element(&c, &u)?;
                text.push(format!("element {}:", u.display_with(&names)));
                text.push(format!("  nil: {}", f.nil));
                text.push(format!("  nilpotent: {}", f.nilpotent));
                text.push(format!("  cancellable: {}", f.cancellable));
                text.push(format!("  partly cancellable: {}", f.partly_cancellable));
                js["element"] = json!(f);
            }
            Ok(Report::new(text.join("\n"), js))
        }
        CongruenceCommand::Related { u, v } => {
            let c = Congruence::new(ideal.clone())?;
            let (u, v) = (parse_monomial(u, &names)?, parse_monomial(v, &names)?);
            let rel = c.related(&u, &v);
            let show = |e: &Exponent| match c.class_id(e) {
                crate::congruence::ClassId::Nil => "nil".to_string(),
                crate::congruence::ClassId::Class(x) => x.display_with(&names).to_string(),
            };
            let text = format!("{}\nclass of {}: {}\nclass of {}: {}", rel, u.display_with(&names), show(&u), v.display_with(&names), show(&v));
            Ok(Report::predicate(rel, text, json!({"related": rel, "classes": [c.class_id(&u), c.class_id(&v)]})))
        }
        CongruenceCommand::Table { max } => {
            let c = Congruence::new(ideal.clone())?;
            let t = quotient_table(&c, *max)?;
            Ok(Report::new(t.to_string(), serde_json::to_value(&t).unwrap()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str], stdin: &str) -> Output {
        let mut all = vec!["binomials"];
        all.extend_from_slice(args);
        run(all, &mut stdin.as_bytes())
    }

    #[test]
    fn table_command() {
        let out = go(&["congruence", "table", "--max", "5"], "ring X Y\nideal I\nX - Y\nY^2\n");
        assert_eq!(out.code, 0, "{:?}", out);
        assert!(out.stdout.contains("a | a ∞ ∞"), "{}", out.stdout);
    }

    #[test]
    fn exit_codes() {
        let out = go(&["is-mesoprimary"], "ring X Y\nideal I\nX^2 - 1\nX*Y - Y\nY^2\n");
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("witness: Y"), "{}", out.stdout);
        assert_eq!(go(&["gb"], "ring X\nideal I\nX - Y\n").code, 2);
        assert_eq!(go(&["frobnicate"], "").code, 2);
        assert_eq!(go(&["toric", "--matrix", "3 4 5"], "").code, 0);
        assert_eq!(go(&["pure-part", "--lambda", "1,1"], "ring X Y\nideal I\nX - Y\n").code, 1);
    }
}
