//! A small, general Gröbner engine over `ℚ`, kept separate from the binomial
//! machinery so it can check it. It handles arbitrary polynomials, which
//! makes it the reference for intersections and quotients whose results
//! are not binomial. Speed is not a goal.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Exponent, MonomialOrder};
use crate::engine::{Binomial, BinomialIdeal};

/// A polynomial with rational coefficients; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    n: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl RationalPoly {
    pub fn zero(n: usize) -> Self {
        RationalPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        RationalPoly::term(c, Exponent::zero(n))
    }

    pub fn term(c: BigRational, e: Exponent) -> Self {
        let n = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        RationalPoly { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BigRational, Exponent)>) -> Self {
        let mut p = RationalPoly::zero(n);
        for (c, e) in terms {
            assert_eq!(e.len(), n, "exponent length");
            p.add_term(c, e);
        }
        p
    }

    /// From integer coefficients and exponent slices; handy in tests.
    pub fn from_i64(n: usize, terms: &[(i64, &[u32])]) -> Self {
        RationalPoly::from_terms(
            n,
            terms.iter().map(|(c, e)| (BigRational::from_integer((*c).into()), Exponent::new(e.to_vec()))),
        )
    }

    /// `X^lead − c·X^trail` when `c` is rational.
    pub fn from_binomial(b: &Binomial) -> Option<Self> {
        let mut p = RationalPoly::term(BigRational::one(), b.lead().clone());
        if let (Some(t), Some(c)) = (b.trail(), b.coeff()) {
            p.add_term(-c.to_rational()?, t.clone());
        }
        Some(p)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, c: BigRational, e: Exponent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }

    pub fn sub(&self, other: &RationalPoly) -> RationalPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> RationalPoly {
        if k.is_zero() {
            return RationalPoly::zero(self.n);
        }
        RationalPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul_term(&self, k: &BigRational, w: &Exponent) -> RationalPoly {
        if k.is_zero() {
            return RationalPoly::zero(self.n);
        }
        RationalPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.add(w), c * k)).collect() }
    }

    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        let mut out = RationalPoly::zero(self.n);
        for (e, c) in &other.terms {
            out = out.add(&self.mul_term(c, e));
        }
        out
    }

    /// Leading exponent and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn monic(&self, order: &MonomialOrder) -> RationalPoly {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Appends `k` variables with exponent zero.
    pub fn extended(&self, k: usize) -> RationalPoly {
        let pad = vec![0; k];
        RationalPoly {
            n: self.n + k,
            terms: self.terms.iter().map(|(e, c)| (e.extended(&pad), c.clone())).collect(),
        }
    }

    pub fn truncated(&self, n: usize) -> RationalPoly {
        RationalPoly { n, terms: self.terms.iter().map(|(e, c)| (e.truncated(n), c.clone())).collect() }
    }

    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|e| e.supported_on(vars))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String], order: &'a MonomialOrder) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names, order }
    }
}

pub struct PolyDisplay<'a> {
    p: &'a RationalPoly,
    names: &'a [String],
    order: &'a MonomialOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.p.terms.iter().collect();
        terms.sort_by(|a, b| self.order.compare(b.0, a.0));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if e.is_zero() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", e.display_with(self.names))?;
            } else {
                write!(f, "{}*{}", mag, e.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

/// Full reduction of `p` modulo `basis`.
pub fn reduce(p: &RationalPoly, basis: &[RationalPoly], order: &MonomialOrder) -> RationalPoly {
    let mut rest = p.clone();
    let mut rem = RationalPoly::zero(p.n);
    while let Some((e, c)) = rest.leading(order).map(|(e, c)| (e.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let (ge, gc) = g.leading(order)?;
            e.checked_sub(ge).map(|q| (g, q, gc.clone()))
        });
        match divisor {
            Some((g, q, gc)) => rest = rest.sub(&g.mul_term(&(&c / gc), &q)),
            None => {
                rest.add_term(-c.clone(), e.clone());
                rem.add_term(c, e);
            }
        }
    }
    rem
}

fn s_poly(f: &RationalPoly, g: &RationalPoly, order: &MonomialOrder) -> RationalPoly {
    let (fe, fc) = f.leading(order).unwrap();
    let (ge, gc) = g.leading(order).unwrap();
    let m = fe.lcm(ge);
    let a = f.mul_term(&fc.recip(), &m.checked_sub(fe).unwrap());
    let b = g.mul_term(&gc.recip(), &m.checked_sub(ge).unwrap());
    a.sub(&b)
}

/// Reduced Gröbner basis over `ℚ`, monic and sorted by increasing lead.
/// Plain Buchberger with only the coprime-leads criterion.
pub fn rational_gb(gens: &[RationalPoly], order: &MonomialOrder) -> Vec<RationalPoly> {
    let mut basis: Vec<RationalPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    // normal strategy: the pair with the smallest lcm of leads goes first
    let lcm_of = |basis: &[RationalPoly], (i, j): (usize, usize)| {
        basis[i].leading(order).unwrap().0.lcm(basis[j].leading(order).unwrap().0)
    };
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| order.compare(&lcm_of(&basis, pairs[a]), &lcm_of(&basis, pairs[b])))
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (fe, ge) = (basis[i].leading(order).unwrap().0, basis[j].leading(order).unwrap().0);
        if fe.is_coprime(ge) {
            continue;
        }
        let h = reduce(&s_poly(&basis[i], &basis[j], order), &basis, order);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.monic(order));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimise, then interreduce
    basis.sort_by(|a, b| order.compare(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    let mut minimal: Vec<RationalPoly> = Vec::new();
    for g in basis {
        let ge = g.leading(order).unwrap().0.clone();
        if !minimal.iter().any(|m| m.leading(order).unwrap().0.divides(&ge)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<RationalPoly> = minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, g)| g.clone()).collect();
        let (le, lc) = minimal[k].leading(order).map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let tail = minimal[k].sub(&RationalPoly::term(lc, le.clone()));
        let tail = reduce(&tail, &others, order);
        reduced.push(RationalPoly::term(BigRational::one(), le).add(&tail));
    }
    reduced
}

pub fn contains(basis: &[RationalPoly], f: &RationalPoly, order: &MonomialOrder) -> bool {
    reduce(f, basis, order).is_zero()
}

/// Equality of the ideals generated by `a` and `b`.
pub fn ideal_equal(a: &[RationalPoly], b: &[RationalPoly]) -> bool {
    let o = MonomialOrder::grevlex();
    rational_gb(a, &o) == rational_gb(b, &o)
}

/// `I ∩ k[X_i : i ∈ keep]`.
pub fn rational_eliminate(gens: &[RationalPoly], n: usize, keep: &[usize]) -> Vec<RationalPoly> {
    let block: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let o = MonomialOrder::elimination(block, MonomialOrder::grevlex());
    rational_gb(gens, &o).into_iter().filter(|g| g.supported_on(keep)).collect()
}

/// `I ∩ J` as `(T·I + (1−T)·J) ∩ k[X]`.
pub fn rational_intersect(a: &[RationalPoly], b: &[RationalPoly]) -> Vec<RationalPoly> {
    let n = a.first().or(b.first()).map_or(0, RationalPoly::nvars);
    if a.iter().all(RationalPoly::is_zero) || b.iter().all(RationalPoly::is_zero) {
        return Vec::new();
    }
    let t = RationalPoly::term(BigRational::one(), Exponent::unit(n + 1, n));
    let one_minus_t = RationalPoly::constant(n + 1, BigRational::one()).sub(&t);
    let mut gens: Vec<RationalPoly> = a.iter().map(|f| f.extended(1).mul(&t)).collect();
    gens.extend(b.iter().map(|g| g.extended(1).mul(&one_minus_t)));
    let keep: Vec<usize> = (0..n).collect();
    let kept = rational_eliminate(&gens, n + 1, &keep);
    rational_gb(&kept.iter().map(|p| p.truncated(n)).collect::<Vec<_>>(), &MonomialOrder::grevlex())
}

/// `I : f^∞`, as `(I + ⟨1 − T·f⟩) ∩ k[X]`.
pub fn rational_saturate(a: &[RationalPoly], f: &RationalPoly) -> Vec<RationalPoly> {
    let n = f.nvars();
    let t = RationalPoly::term(BigRational::one(), Exponent::unit(n + 1, n));
    let mut gens: Vec<RationalPoly> = a.iter().map(|g| g.extended(1)).collect();
    gens.push(RationalPoly::constant(n + 1, BigRational::one()).sub(&t.mul(&f.extended(1))));
    let keep: Vec<usize> = (0..n).collect();
    let kept = rational_eliminate(&gens, n + 1, &keep);
    rational_gb(&kept.iter().map(|p| p.truncated(n)).collect::<Vec<_>>(), &MonomialOrder::grevlex())
}

/// Exact quotient `p / g`, if `g` divides `p`.
pub fn divide_exact(p: &RationalPoly, g: &RationalPoly) -> Option<RationalPoly> {
    let o = MonomialOrder::grevlex();
    let (ge, gc) = g.leading(&o)?;
    let mut rest = p.clone();
    let mut q = RationalPoly::zero(p.n);
    while let Some((e, c)) = rest.leading(&o).map(|(e, c)| (e.clone(), c.clone())) {
        let w = e.checked_sub(ge)?;
        let k = &c / gc;
        rest = rest.sub(&g.mul_term(&k, &w));
        q.add_term(k, w);
    }
    Some(q)
}

/// `(I : ⟨g⟩) = (I ∩ ⟨g⟩) / g`.
pub fn rational_colon(a: &[RationalPoly], g: &RationalPoly) -> Vec<RationalPoly> {
    let meet = rational_intersect(a, std::slice::from_ref(g));
    let quotients: Vec<RationalPoly> = meet.iter().map(|p| divide_exact(p, g).expect("divisible by g")).collect();
    rational_gb(&quotients, &MonomialOrder::grevlex())
}

/// The generators of a binomial ideal as rational polynomials, when all
/// coefficients are rational.
pub fn from_binomial_ideal(ideal: &BinomialIdeal) -> Option<Vec<RationalPoly>> {
    ideal.generators().iter().map(RationalPoly::from_binomial).collect()
}

/// Oracle equality between a binomial ideal and a rational generating set.
pub fn equals_binomial_ideal(ideal: &BinomialIdeal, polys: &[RationalPoly]) -> Option<bool> {
    Some(ideal_equal(&from_binomial_ideal(ideal)?, polys))
}

/// Oracle intersection of several binomial ideals.
pub fn intersect_all(ideals: &[&BinomialIdeal]) -> Option<Vec<RationalPoly>> {
    let mut it = ideals.iter();
    let mut acc = from_binomial_ideal(it.next()?)?;
    for i in it {
        acc = rational_intersect(&acc, &from_binomial_ideal(i)?);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, t: &[(i64, &[u32])]) -> RationalPoly {
        RationalPoly::from_i64(n, t)
    }

    #[test]
    fn gb_examples() {
        let o = MonomialOrder::grevlex();
        let f = p(1, &[(1, &[2]), (-1, &[0])]);
        assert_eq!(rational_gb(std::slice::from_ref(&f), &o), vec![f]);
        let g = rational_gb(&[p(1, &[(1, &[3]), (-1, &[0])]), p(1, &[(1, &[1]), (-1, &[0])])], &o);
        assert_eq!(g, vec![p(1, &[(1, &[1]), (-1, &[0])])]);
    }

    #[test]
    fn twisted_cubic() {
        // variables T, X, Y, Z
        let gens = vec![
            p(4, &[(1, &[0, 1, 0, 0]), (-1, &[3, 0, 0, 0])]),
            p(4, &[(1, &[0, 0, 1, 0]), (-1, &[4, 0, 0, 0])]),
            p(4, &[(1, &[0, 0, 0, 1]), (-1, &[5, 0, 0, 0])]),
        ];
        let k = rational_eliminate(&gens, 4, &[1, 2, 3]);
        let expected = vec![
            p(4, &[(1, &[0, 0, 2, 0]), (-1, &[0, 1, 0, 1])]),
            p(4, &[(1, &[0, 2, 1, 0]), (-1, &[0, 0, 0, 2])]),
            p(4, &[(1, &[0, 3, 0, 0]), (-1, &[0, 0, 1, 1])]),
        ];
        assert!(ideal_equal(&k, &expected));
    }

    #[test]
    fn intersections() {
        let a = vec![p(1, &[(1, &[1]), (-1, &[0])])];
        let b = vec![p(1, &[(1, &[1]), (-2, &[0])])];
        assert!(ideal_equal(&rational_intersect(&a, &b), &[p(1, &[(1, &[2]), (-3, &[1]), (2, &[0])])]));
        let c = vec![p(2, &[(1, &[2, 0]), (-1, &[0, 2])])];
        let d = vec![p(2, &[(1, &[3, 0]), (-1, &[0, 3])])];
        let want = p(2, &[(1, &[4, 0]), (1, &[3, 1]), (-1, &[1, 3]), (-1, &[0, 4])]);
        assert!(ideal_equal(&rational_intersect(&c, &d), &[want]));
        assert!(ideal_equal(&rational_intersect(&c, &c), &c));
    }

    #[test]
    fn equality_examples() {
        let i0 = vec![p(2, &[(1, &[1, 0]), (-1, &[0, 1])]), p(2, &[(1, &[0, 3]), (-1, &[0, 2])])];
        let i1 = vec![p(2, &[(1, &[1, 0]), (-1, &[0, 1])]), p(2, &[(1, &[0, 2])])];
        let aug = vec![p(2, &[(1, &[1, 0]), (-1, &[0, 0])]), p(2, &[(1, &[0, 1]), (-1, &[0, 0])])];
        assert!(ideal_equal(&i0, &rational_intersect(&i1, &aug)));
        assert!(ideal_equal(&i0, &i0));
        assert!(!ideal_equal(&[p(1, &[(1, &[1])])], &[p(1, &[(1, &[2])])]));
    }

    #[test]
    fn non_binomial_quotient() {
        let i = vec![p(1, &[(1, &[3]), (-1, &[0])])];
        let g = p(1, &[(1, &[1]), (-1, &[0])]);
        let q = rational_colon(&i, &g);
        assert!(ideal_equal(&q, &[p(1, &[(1, &[2]), (1, &[1]), (1, &[0])])]));
    }

    #[test]
    fn saturation() {
        // ⟨X²−XY⟩ : X^∞ = ⟨X−Y⟩
        let i = vec![p(2, &[(1, &[2, 0]), (-1, &[1, 1])])];
        let s = rational_saturate(&i, &p(2, &[(1, &[1, 0])]));
        assert!(ideal_equal(&s, &[p(2, &[(1, &[1, 0]), (-1, &[0, 1])])]));
    }

    #[test]
    fn display() {
        let names = vec!["X".to_string(), "Y".to_string()];
        let f = p(2, &[(1, &[4, 0]), (1, &[3, 1]), (-1, &[1, 3]), (-1, &[0, 4])]);
        assert_eq!(f.display_with(&names, &MonomialOrder::lex()).to_string(), "X^4 + X^3*Y - X*Y^3 - Y^4");
    }
}
