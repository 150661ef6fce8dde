//! Buchberger's algorithm specialised to binomials.
//!
//! Reducing a term by a binomial yields a single term (or zero, for a
//! monomial divisor), and every S-polynomial of two binomials has at most
//! two terms. Polynomials therefore never grow past two terms and the only
//! additive event is the collision of two terms with equal exponents.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Exponent, MonomialOrder, Term};
use crate::engine::Binomial;

/// Reduced Gröbner basis: interreduced, monic, sorted by increasing lead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedGB {
    #[serde(skip)]
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

impl ReducedGB {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.first().is_some_and(Binomial::is_unit)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Binomial> {
        self.elements.iter().filter(|b| b.is_monomial())
    }

    pub fn has_monomials(&self) -> bool {
        self.monomials().next().is_some()
    }

    /// Normal form of a term; `None` iff it reduces to zero.
    pub fn normal_form(&self, t: &Term) -> Option<Term> {
        reduce_term(t.clone(), &self.elements, &self.order)
    }

    /// Normal form of `X^u`.
    pub fn normal_form_exponent(&self, u: &Exponent) -> Option<Term> {
        self.normal_form(&Term::monomial(u.clone()))
    }

    /// Trusted constructor for bases known to be reduced for `order`
    /// (such as the surviving part of an elimination basis).
    pub(crate) fn from_reduced(order: MonomialOrder, mut elements: Vec<Binomial>) -> Self {
        elements.sort_by(|a, b| order.compare(a.lead(), b.lead()));
        ReducedGB { order, elements }
    }
}

/// Reduces a single term modulo `basis` until no lead divides it.
pub fn reduce_term(mut t: Term, basis: &[Binomial], order: &MonomialOrder) -> Option<Term> {
    'outer: loop {
        for g in basis {
            if let Some(q) = t.exponent.checked_sub(g.lead()) {
                match (g.trail(), g.coeff()) {
                    (Some(trail), Some(c)) => {
                        let next = q.add(trail);
                        debug_assert_eq!(order.compare(&next, &t.exponent), Ordering::Less);
                        t = Term::new(t.coeff.mul(c), next);
                        continue 'outer;
                    }
                    _ => return None,
                }
            }
        }
        return Some(t);
    }
}

fn reduce_pair(t1: Option<Term>, t2: Option<Term>, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let r1 = t1.and_then(|t| reduce_term(t, basis, order));
    let r2 = t2.and_then(|t| reduce_term(t, basis, order));
    Binomial::from_terms(r1, r2, order)
}

fn s_polynomial(f: &Binomial, g: &Binomial) -> (Option<Term>, Option<Term>) {
    let m = f.lead().lcm(g.lead());
    let side = |b: &Binomial, sign_flip: bool| -> Option<Term> {
        let shift = m.checked_sub(b.lead()).unwrap();
        b.trail().map(|t| {
            let c = b.coeff().unwrap();
            // X^shift·b = X^m − c·X^{shift+t}
            let c = if sign_flip { c.clone() } else { c.neg() };
            Term::new(c, shift.add(t))
        })
    };
    // X^{m−a}f − X^{m−a'}g = −c·X^{m−a+b} + c'·X^{m−a'+b'}
    (side(f, false), side(g, true))
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[Binomial], order: &MonomialOrder) -> ReducedGB {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        let g = g.oriented(order);
        let (a, b) = g.terms();
        if let Some(r) = reduce_pair(Some(a), b, &basis, order) {
            if r.is_unit() {
                return unit_basis(order, r.nvars());
            }
            basis.push(r);
        }
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal selection strategy: smallest lcm, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|p, q| {
                let lp = basis[p.0].lead().lcm(basis[p.1].lead());
                let lq = basis[q.0].lead().lcm(basis[q.1].lead());
                order.compare(&lp, &lq).then_with(|| p.cmp(q))
            })
            .unwrap();
        pending.remove(&(i, j));

        let (f, g) = (&basis[i], &basis[j]);
        if f.lead().is_coprime(g.lead()) {
            continue;
        }
        let m = f.lead().lcm(g.lead());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&m)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let (a, b) = s_polynomial(f, g);
        if let Some(h) = reduce_pair(a, b, &basis, order) {
            if h.is_unit() {
                return unit_basis(order, h.nvars());
            }
            let new = basis.len();
            basis.push(h);
            for k in 0..new {
                pending.insert((k, new));
            }
        }
    }

    interreduce(basis, order)
}

fn unit_basis(order: &MonomialOrder, n: usize) -> ReducedGB {
    ReducedGB {
        order: order.clone(),
        elements: vec![Binomial::monomial(Exponent::zero(n))],
    }
}

fn interreduce(mut basis: Vec<Binomial>, order: &MonomialOrder) -> ReducedGB {
    basis.sort_by(|a, b| order.compare(a.lead(), b.lead()));
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in basis {
        if !minimal.iter().any(|m| m.lead().divides(b.lead())) {
            minimal.push(b);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for b in &minimal {
        let (lead, trail) = b.terms();
        let trail = trail.and_then(|t| reduce_term(t, &minimal, order));
        reduced.push(Binomial::from_terms(Some(lead), trail, order).expect("lead term survives"));
    }
    ReducedGB { order: order.clone(), elements: reduced }
}
