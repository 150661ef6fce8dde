//! Operations under which binomial ideals stay binomial.
//!
//! Everything here reduces to one elimination: add an auxiliary variable
//! `T` as variable `n+1`, compute a Gröbner basis under a block order that
//! eliminates it, and keep the elements free of `T`. Because the inner order
//! is grevlex, the kept elements are already the reduced grevlex basis of
//! the result and are cached as such.

use std::sync::Arc;

use crate::algebra::{Exponent, MonomialOrder, Scalar};
use crate::engine::groebner::{groebner_basis, ReducedGB};
use crate::engine::{Binomial, BinomialIdeal, Ring};
use crate::error::{Error, Result};

fn check_vars(n: usize, vars: &[usize]) -> Result<()> {
    match vars.iter().find(|&&i| i >= n) {
        Some(&i) => Err(Error::InvalidInput(format!("variable index {} out of range for {} variables", i + 1, n))),
        None => Ok(()),
    }
}

/// `I ∩ k[X_i : i ∈ keep]`, still viewed inside `k[X]`.
pub fn eliminate(ideal: &BinomialIdeal, keep: &[usize]) -> Result<BinomialIdeal> {
    let n = ideal.nvars();
    check_vars(n, keep)?;
    if keep.is_empty() {
        return Err(Error::Precondition("elimination needs at least one kept variable".into()));
    }
    let block: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    if block.is_empty() {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::elimination(block, MonomialOrder::grevlex());
    let gb = ideal.groebner_basis(&order);
    let kept: Vec<Binomial> = gb.elements().iter().filter(|b| b.supported_on(keep)).cloned().collect();
    Ok(BinomialIdeal::from_basis(
        ideal.ring().clone(),
        ReducedGB::from_reduced(MonomialOrder::grevlex(), kept),
    ))
}

/// Computes the part free of the auxiliary variable (index `n`) of the
/// ideal generated by `gens` in `n + 1` variables.
fn eliminate_auxiliary(ring: &Arc<Ring>, gens: &[Binomial]) -> BinomialIdeal {
    let n = ring.nvars();
    let order = MonomialOrder::elimination([n], MonomialOrder::grevlex());
    let gb = groebner_basis(gens, &order);
    let kept: Vec<Binomial> = gb
        .elements()
        .iter()
        .filter(|b| b.lead()[n] == 0 && b.trail().is_none_or(|t| t[n] == 0))
        .map(|b| b.map_exponents(|e| e.truncated(n)))
        .collect();
    BinomialIdeal::from_basis(ring.clone(), ReducedGB::from_reduced(MonomialOrder::grevlex(), kept))
}

fn aux(n: usize) -> Exponent {
    Exponent::unit(n + 1, n)
}

/// `T·g` for every generator `g` of `I`.
fn times_aux(ideal: &BinomialIdeal) -> impl Iterator<Item = Binomial> + '_ {
    let n = ideal.nvars();
    let t = aux(n);
    ideal
        .generators()
        .iter()
        .map(move |g| g.map_exponents(|e| e.extended(&[0])).mul_monomial(&t))
}

/// `(1 − T)·X^m`, which is the binomial `X^m − T·X^m`.
fn one_minus_aux(n: usize, m: &Exponent, order: &MonomialOrder) -> Binomial {
    let m = m.extended(&[0]);
    let tm = m.add(&aux(n));
    Binomial::pure(m, tm, order).expect("distinct exponents")
}

/// `I ∩ M` for a monomial ideal `M = ⟨X^m : m ∈ monomials⟩`.
pub fn intersect_monomial(ideal: &BinomialIdeal, monomials: &[Exponent]) -> Result<BinomialIdeal> {
    let n = ideal.nvars();
    if let Some(m) = monomials.iter().find(|m| m.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.len() });
    }
    if monomials.is_empty() {
        return Ok(BinomialIdeal::zero(ideal.ring().clone()));
    }
    if monomials.iter().any(Exponent::is_zero) {
        return Ok(ideal.clone());
    }
    let o = MonomialOrder::grevlex();
    let mut gens: Vec<Binomial> = times_aux(ideal).collect();
    gens.extend(monomials.iter().map(|m| one_minus_aux(n, m, &o)));
    Ok(eliminate_auxiliary(ideal.ring(), &gens))
}

/// `(I : X^u)`, computed as `(I ∩ ⟨X^u⟩) / X^u`.
pub fn colon_monomial(ideal: &BinomialIdeal, u: &Exponent) -> Result<BinomialIdeal> {
    let n = ideal.nvars();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    if u.is_zero() {
        return Ok(ideal.clone());
    }
    let meet = intersect_monomial(ideal, std::slice::from_ref(u))?;
    // every term of an element of ⟨X^u⟩ is divisible by X^u, and dividing
    // by a monomial keeps the basis reduced
    let divided: Vec<Binomial> = meet
        .generators()
        .iter()
        .map(|b| b.div_monomial(u).expect("divisible by X^u"))
        .collect();
    Ok(BinomialIdeal::from_basis(
        ideal.ring().clone(),
        ReducedGB::from_reduced(MonomialOrder::grevlex(), divided),
    ))
}

/// `I : (∏_{i∈vars} X_i)^∞`, by repeated colon until the ideal stops growing.
pub fn saturate_vars(ideal: &BinomialIdeal, vars: &[usize]) -> Result<BinomialIdeal> {
    let n = ideal.nvars();
    check_vars(n, vars)?;
    let u = Exponent::indicator(n, vars);
    let mut current = ideal.clone();
    loop {
        if current.is_unit() {
            return Ok(current.canonical());
        }
        let next = colon_monomial(&current, &u)?;
        if next == current {
            return Ok(next);
        }
        current = next;
    }
}

/// Colon by a single binomial. Only monomial divisors are supported: the
/// quotient by a genuine binomial need not be binomial.
pub fn colon(ideal: &BinomialIdeal, f: &Binomial) -> Result<BinomialIdeal> {
    if f.is_monomial() {
        colon_monomial(ideal, f.lead())
    } else {
        Err(Error::NonBinomial(format!(
            "quotient by the binomial {} is not binomial in general",
            f.display_with(ideal.names())
        )))
    }
}

/// `I ∩ J` when one side is a monomial ideal; refused otherwise, since the
/// intersection of two binomial ideals need not be binomial.
pub fn intersect(a: &BinomialIdeal, b: &BinomialIdeal) -> Result<BinomialIdeal> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() });
    }
    let monomial_gens = |i: &BinomialIdeal| -> Option<Vec<Exponent>> {
        let gb = i.grevlex_basis();
        gb.elements().iter().all(Binomial::is_monomial).then(|| gb.elements().iter().map(|m| m.lead().clone()).collect())
    };
    if let Some(m) = monomial_gens(b) {
        intersect_monomial(a, &m)
    } else if let Some(m) = monomial_gens(a) {
        intersect_monomial(b, &m)
    } else {
        Err(Error::NonBinomial(
            "intersection of two non-monomial binomial ideals is not binomial in general".into(),
        ))
    }
}

/// The pure binomial ideal `I ∩ ⟨X_i − λ_i⟩` for an ideal `I` containing
/// monomials, via `(A + T·P + (1−T)·Q) ∩ k[X]` where `A` collects the
/// non-monomial basis elements, `P = ⟨X_i − λ_i⟩` and `Q` the monomials.
pub fn pure_part(ideal: &BinomialIdeal, lambda: &[Scalar]) -> Result<BinomialIdeal> {
    let n = ideal.nvars();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: lambda.len() });
    }
    let gb = ideal.grevlex_basis();
    if !gb.has_monomials() {
        return Err(Error::NoMonomials);
    }
    let o = MonomialOrder::grevlex();
    let mut gens = Vec::new();
    for b in gb.elements() {
        match (b.trail(), b.coeff()) {
            (Some(t), Some(c)) => {
                let lhs = BinomialIdeal::evaluate_monomial(lambda, b.lead());
                let rhs = c.mul(&BinomialIdeal::evaluate_monomial(lambda, t));
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "{} does not vanish at the given point",
                        b.display_with(ideal.names())
                    )));
                }
                gens.push(b.map_exponents(|e| e.extended(&[0])));
            }
            _ => gens.push(one_minus_aux(n, b.lead(), &o)),
        }
    }
    let t = aux(n);
    for (i, l) in lambda.iter().enumerate() {
        // T·(X_i − λ_i)
        let txi = Exponent::unit(n + 1, i).add(&t);
        gens.push(Binomial::new(txi, l.clone(), t.clone(), &o).expect("distinct exponents"));
    }
    Ok(eliminate_auxiliary(ideal.ring(), &gens))
}
