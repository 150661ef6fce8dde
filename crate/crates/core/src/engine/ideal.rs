use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::algebra::{Exponent, MonomialOrder, Scalar, Term};
use crate::engine::groebner::{groebner_basis, ReducedGB};
use crate::engine::Binomial;
use crate::error::{Error, Result};

/// Variable names of a polynomial ring `k[X_1, …, X_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Self {
        Ring { names }
    }

    /// Ring with variables `x1, …, xn`.
    pub fn generic(n: usize) -> Self {
        Ring { names: (1..=n).map(|i| format!("x{}", i)).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// The ring with one extra variable appended.
    pub fn with_auxiliary(&self) -> Ring {
        let mut names = self.names.clone();
        let mut aux = String::from("_t");
        while names.contains(&aux) {
            aux.push('_');
        }
        names.push(aux);
        Ring { names }
    }
}

/// An ideal of `k[X]` given by binomial generators, with a write-once
/// cache of reduced Gröbner bases per monomial order.
pub struct BinomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Binomial>,
    memo: RwLock<HashMap<MonomialOrder, Arc<ReducedGB>>>,
}

impl Clone for BinomialIdeal {
    fn clone(&self) -> Self {
        let memo = self.memo.read().map(|m| m.clone()).unwrap_or_default();
        BinomialIdeal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            memo: RwLock::new(memo),
        }
    }
}

impl fmt::Debug for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display_with(self.ring.names()).to_string())
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Ideal equality (not generator equality).
impl PartialEq for BinomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && self.grevlex_basis().elements() == other.grevlex_basis().elements()
    }
}

impl Eq for BinomialIdeal {}

impl BinomialIdeal {
    pub fn new(ring: Arc<Ring>, gens: Vec<Binomial>) -> Result<Self> {
        let n = ring.nvars();
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
            }
        }
        Ok(BinomialIdeal::from_parts(ring, gens))
    }

    pub(crate) fn from_parts(ring: Arc<Ring>, gens: Vec<Binomial>) -> Self {
        BinomialIdeal { ring, gens, memo: RwLock::new(HashMap::new()) }
    }

    /// The ideal whose generators are exactly `gb`, with `gb` pre-cached.
    pub(crate) fn from_basis(ring: Arc<Ring>, gb: ReducedGB) -> Self {
        let ideal = BinomialIdeal::from_parts(ring, gb.elements().to_vec());
        ideal.memo.write().unwrap().insert(gb.order().clone(), Arc::new(gb));
        ideal
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        BinomialIdeal::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let n = ring.nvars();
        BinomialIdeal::from_parts(ring, vec![Binomial::monomial(Exponent::zero(n))])
    }

    /// Monomial ideal generated by `X^e` for the given exponents.
    pub fn monomial_ideal(ring: Arc<Ring>, exps: &[Exponent]) -> Result<Self> {
        BinomialIdeal::new(ring, exps.iter().cloned().map(Binomial::monomial).collect())
    }

    /// `⟨X_j : j ∈ vars⟩`.
    pub fn variables(ring: Arc<Ring>, vars: &[usize]) -> Self {
        let n = ring.nvars();
        let gens = vars.iter().map(|&j| Binomial::monomial(Exponent::unit(n, j))).collect();
        BinomialIdeal::from_parts(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn names(&self) -> &[String] {
        self.ring.names()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.gens
    }

    /// Reduced Gröbner basis for `order`, computed at most once per order
    /// (concurrent callers may duplicate work but observe the same result).
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<ReducedGB> {
        if let Some(gb) = self.memo.read().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(groebner_basis(&self.gens, order));
        self.memo
            .write()
            .unwrap()
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    pub fn grevlex_basis(&self) -> Arc<ReducedGB> {
        self.groebner_basis(&MonomialOrder::grevlex())
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty() || self.grevlex_basis().is_empty()
    }

    /// Normal form of a term under grevlex.
    pub fn normal_form(&self, t: &Term) -> Option<Term> {
        self.grevlex_basis().normal_form(t)
    }

    pub fn contains_monomial(&self, u: &Exponent) -> bool {
        self.grevlex_basis().normal_form_exponent(u).is_none()
    }

    /// Decides `f ∈ I` from the normal forms of the two terms of `f`.
    pub fn contains(&self, f: &Binomial) -> bool {
        let gb = self.grevlex_basis();
        let (a, b) = f.terms();
        let na = gb.normal_form(&a);
        let nb = b.and_then(|t| gb.normal_form(&t));
        match (na, nb) {
            (None, None) => true,
            (Some(x), Some(y)) => x.exponent == y.exponent && x.coeff.is_negation_of(&y.coeff),
            _ => false,
        }
    }

    pub fn contains_ideal(&self, other: &BinomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// True when the ideal contains no monomial.
    pub fn is_pure(&self) -> bool {
        !self.grevlex_basis().has_monomials()
    }

    /// Generated by binomials with coefficient 1 and monomials. Decided on
    /// the reduced basis, which is unital whenever the ideal is.
    pub fn is_unital(&self) -> bool {
        self.grevlex_basis().elements().iter().all(Binomial::is_unital)
    }

    /// `I + J`.
    pub fn sum(&self, other: &BinomialIdeal) -> Result<BinomialIdeal> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(BinomialIdeal::from_parts(self.ring.clone(), gens))
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Binomial>) -> BinomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        BinomialIdeal::from_parts(self.ring.clone(), gens)
    }

    /// Same ideal, generators replaced by its reduced grevlex basis.
    pub fn canonical(&self) -> BinomialIdeal {
        let gb = self.grevlex_basis();
        BinomialIdeal::from_basis(self.ring.clone(), (*gb).clone())
    }

    /// Largest total degree among the reduced grevlex basis elements.
    pub fn max_basis_degree(&self) -> u64 {
        self.grevlex_basis().elements().iter().map(Binomial::max_degree).max().unwrap_or(0)
    }

    /// All coefficients of the reduced basis as rationals, when they are.
    pub fn has_rational_coefficients(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.coeff().is_none_or(|c| c.to_rational().is_some()))
    }

    /// Rescaling check used by augmentation: `λ^a = c·λ^b`.
    pub(crate) fn evaluate_monomial(lambda: &[Scalar], u: &Exponent) -> Scalar {
        lambda
            .iter()
            .zip(u.as_slice())
            .fold(Scalar::one(), |acc, (l, &k)| acc.mul(&l.pow_i64(k as i64)))
    }
}
