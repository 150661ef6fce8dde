use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Exponent, MonomialOrder, Scalar, Term};

/// `X^lead − coeff·X^trail`, or the monic monomial `X^lead`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    lead: Exponent,
    #[serde(skip_serializing_if = "Option::is_none")]
    trail: Option<Exponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeff: Option<Scalar>,
}

impl Binomial {
    pub fn monomial(exponent: Exponent) -> Self {
        Binomial { lead: exponent, trail: None, coeff: None }
    }

    /// `X^u − c·X^v` oriented so that the lead is larger under `order`.
    /// Returns `None` when `u = v` and `c = 1` (the zero polynomial); when
    /// `u = v` and `c ≠ 1` the result is the monomial `X^u`.
    pub fn new(u: Exponent, c: Scalar, v: Exponent, order: &MonomialOrder) -> Option<Self> {
        Binomial::from_terms(
            Some(Term::monomial(u)),
            Some(Term::new(c.neg(), v)),
            order,
        )
    }

    /// `X^u − X^v`.
    pub fn pure(u: Exponent, v: Exponent, order: &MonomialOrder) -> Option<Self> {
        Binomial::new(u, Scalar::one(), v, order)
    }

    /// The polynomial `t1 + t2`, made monic and oriented. Collisions of the
    /// two exponents are resolved by a coefficient equality test only.
    pub fn from_terms(t1: Option<Term>, t2: Option<Term>, order: &MonomialOrder) -> Option<Self> {
        match (t1, t2) {
            (None, None) => None,
            (Some(t), None) | (None, Some(t)) => Some(Binomial::monomial(t.exponent)),
            (Some(a), Some(b)) => {
                if a.exponent == b.exponent {
                    if a.coeff.is_negation_of(&b.coeff) {
                        None
                    } else {
                        Some(Binomial::monomial(a.exponent))
                    }
                } else {
                    let (hi, lo) = match order.compare(&a.exponent, &b.exponent) {
                        Ordering::Greater => (a, b),
                        _ => (b, a),
                    };
                    let coeff = lo.coeff.div(&hi.coeff).neg();
                    Some(Binomial {
                        lead: hi.exponent,
                        trail: Some(lo.exponent),
                        coeff: Some(coeff),
                    })
                }
            }
        }
    }

    pub fn lead(&self) -> &Exponent {
        &self.lead
    }

    pub fn trail(&self) -> Option<&Exponent> {
        self.trail.as_ref()
    }

    pub fn coeff(&self) -> Option<&Scalar> {
        self.coeff.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.trail.is_none()
    }

    /// True for the constant monomial `1`.
    pub fn is_unit(&self) -> bool {
        self.trail.is_none() && self.lead.is_zero()
    }

    pub fn nvars(&self) -> usize {
        self.lead.len()
    }

    /// Unital in the sense of having coefficient 1 (monomials included).
    pub fn is_unital(&self) -> bool {
        self.coeff.as_ref().is_none_or(Scalar::is_one)
    }

    /// Its two terms as a polynomial: `X^lead` and `−coeff·X^trail`.
    pub fn terms(&self) -> (Term, Option<Term>) {
        let lead = Term::monomial(self.lead.clone());
        let trail = self
            .trail
            .as_ref()
            .map(|t| Term::new(self.coeff.as_ref().unwrap().neg(), t.clone()));
        (lead, trail)
    }

    /// Re-orients under `order` (inverting the coefficient when the terms
    /// swap places).
    pub fn oriented(&self, order: &MonomialOrder) -> Binomial {
        match &self.trail {
            None => self.clone(),
            Some(t) => {
                if order.compare(&self.lead, t) == Ordering::Greater {
                    self.clone()
                } else {
                    let c = self.coeff.as_ref().unwrap().inv();
                    Binomial {
                        lead: t.clone(),
                        trail: Some(self.lead.clone()),
                        coeff: Some(c),
                    }
                }
            }
        }
    }

    /// `X^w · self`.
    pub fn mul_monomial(&self, w: &Exponent) -> Binomial {
        Binomial {
            lead: self.lead.add(w),
            trail: self.trail.as_ref().map(|t| t.add(w)),
            coeff: self.coeff.clone(),
        }
    }

    /// `self / X^w` when both terms are divisible.
    pub fn div_monomial(&self, w: &Exponent) -> Option<Binomial> {
        let lead = self.lead.checked_sub(w)?;
        let trail = match &self.trail {
            Some(t) => Some(t.checked_sub(w)?),
            None => None,
        };
        Some(Binomial { lead, trail, coeff: self.coeff.clone() })
    }

    /// Maps both exponents, keeping the coefficient.
    pub fn map_exponents(&self, f: impl Fn(&Exponent) -> Exponent) -> Binomial {
        Binomial {
            lead: f(&self.lead),
            trail: self.trail.as_ref().map(&f),
            coeff: self.coeff.clone(),
        }
    }

    /// Variables appearing in either term.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.lead.support();
        if let Some(t) = &self.trail {
            for i in t.support() {
                if !s.contains(&i) {
                    s.push(i);
                }
            }
        }
        s.sort_unstable();
        s
    }

    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.lead.supported_on(vars) && self.trail.as_ref().is_none_or(|t| t.supported_on(vars))
    }

    pub fn max_degree(&self) -> u64 {
        self.lead.degree().max(self.trail.as_ref().map_or(0, Exponent::degree))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> BinomialDisplay<'a> {
        BinomialDisplay { b: self, names }
    }
}

pub struct BinomialDisplay<'a> {
    b: &'a Binomial,
    names: &'a [String],
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.b.lead.display_with(self.names))?;
        if let (Some(t), Some(c)) = (&self.b.trail, &self.b.coeff) {
            // the trail term's coefficient in the polynomial is −c
            let k = c.neg();
            let text = k.to_string();
            let (sign, mag) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            let mono = t.display_with(self.names).to_string();
            if t.is_zero() {
                write!(f, " {} {}", sign, mag)?;
            } else if mag == "1" {
                write!(f, " {} {}", sign, mono)?;
            } else {
                write!(f, " {} {}*{}", sign, mag, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["X".into(), "Y".into()]
    }

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn orientation_and_display() {
        let o = MonomialOrder::lex();
        let b = Binomial::new(e(&[0, 1]), "2".parse().unwrap(), e(&[1, 0]), &o).unwrap();
        // Y − 2X  ⇒  X − (1/2)Y after orientation
        assert_eq!(b.lead(), &e(&[1, 0]));
        assert_eq!(b.coeff().unwrap(), &"1/2".parse().unwrap());
        assert_eq!(b.display_with(&names()).to_string(), "X - 1/2*Y");
        let plus = Binomial::new(e(&[1, 0]), Scalar::minus_one(), e(&[0, 1]), &o).unwrap();
        assert_eq!(plus.display_with(&names()).to_string(), "X + Y");
        let c = Binomial::new(e(&[2, 0]), Scalar::one(), e(&[0, 0]), &o).unwrap();
        assert_eq!(c.display_with(&names()).to_string(), "X^2 - 1");
    }

    #[test]
    fn collisions() {
        let o = MonomialOrder::grevlex();
        assert_eq!(Binomial::pure(e(&[1, 1]), e(&[1, 1]), &o), None);
        let m = Binomial::new(e(&[1, 1]), "3".parse().unwrap(), e(&[1, 1]), &o).unwrap();
        assert!(m.is_monomial());
    }

    #[test]
    fn reorientation_inverts_coefficient() {
        let b = Binomial::new(e(&[1, 0]), "3".parse().unwrap(), e(&[0, 1]), &MonomialOrder::lex()).unwrap();
        let r = b.oriented(&MonomialOrder::lex().with_permutation(vec![1, 0]));
        assert_eq!(r.lead(), &e(&[0, 1]));
        assert_eq!(r.coeff().unwrap(), &"1/3".parse().unwrap());
    }
}
