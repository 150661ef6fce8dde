//! The congruence `u ∼ v ⟺ X^u − λX^v ∈ J` on `ℕⁿ` induced by a binomial
//! ideal `J`.
//!
//! Classes are named by normal-form exponents under grevlex; the class of
//! monomials lying in `J` is the formal nil element `∞`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::algebra::Exponent;
use crate::cellular::is_cellular;
use crate::engine::{colon_monomial, eliminate, saturate_vars, Binomial, BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::character::character_of_saturated;
use crate::lattice::{lattice_ideal, PartialCharacter};
use crate::mesoprimary::{is_mesoprimary, is_mesoprime, is_prime};

/// Largest number of exponents examined by the nil search.
pub const MAX_NIL_CANDIDATES: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    Nil,
    Class(Exponent),
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClassId::Nil => s.serialize_str("nil"),
            ClassId::Class(e) => e.serialize(s),
        }
    }
}

/// Whether an ideal is known to be the largest one inducing its congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Completeness {
    Complete,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Congruence {
    ideal: BinomialIdeal,
    maximal: bool,
}

/// True when `J` is a lattice ideal: no monomials and saturated at every
/// variable.
pub fn is_lattice_ideal(ideal: &BinomialIdeal) -> Result<bool> {
    if !ideal.is_pure() {
        return Ok(false);
    }
    let all: Vec<usize> = (0..ideal.nvars()).collect();
    Ok(saturate_vars(ideal, &all)? == *ideal)
}

impl Congruence {
    /// The congruence of `J`. It is flagged maximal when `J` contains a
    /// monomial or is a lattice ideal; other pure ideals may be completed
    /// with [`Congruence::maximalized`].
    pub fn new(ideal: BinomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let maximal = !ideal.is_pure() || is_lattice_ideal(&ideal)?;
        Ok(Congruence { ideal, maximal })
    }

    /// Replaces `J` by the result of [`maximal_ideal`].
    pub fn maximalized(ideal: BinomialIdeal, bound: Option<u64>) -> Result<Self> {
        let m = maximal_ideal(&ideal, bound)?;
        Ok(Congruence { ideal: m.ideal, maximal: m.completeness == Completeness::Complete })
    }

    pub fn ideal(&self) -> &BinomialIdeal {
        &self.ideal
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn class_id(&self, u: &Exponent) -> ClassId {
        match self.ideal.grevlex_basis().normal_form_exponent(u) {
            None => ClassId::Nil,
            Some(t) => ClassId::Class(t.exponent),
        }
    }

    pub fn related(&self, u: &Exponent, v: &Exponent) -> bool {
        self.class_id(u) == self.class_id(v)
    }

    /// `[u] ≠ [0]` and `[u + e_i] = [u]` for every `i`, which makes `[u]`
    /// absorbing.
    pub fn is_nil(&self, u: &Exponent) -> bool {
        let n = self.nvars();
        let cu = self.class_id(u);
        cu != self.class_id(&Exponent::zero(n)) && (0..n).all(|i| self.class_id(&u.add(&Exponent::unit(n, i))) == cu)
    }

    fn require_maximal(&self) -> Result<()> {
        if self.maximal {
            Ok(())
        } else {
            Err(Error::NonMaximalCongruence)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementFlags {
    pub nil: bool,
    pub nilpotent: bool,
    pub cancellable: bool,
    pub partly_cancellable: bool,
}

/// Classifies `[u]` in a maximal congruence.
pub fn classify_element(c: &Congruence, u: &Exponent) -> Result<ElementFlags> {
    c.require_maximal()?;
    let j = &c.ideal;
    if u.len() != j.nvars() {
        return Err(Error::DimensionMismatch { expected: j.nvars(), found: u.len() });
    }
    let nil = c.is_nil(u);
    let nilpotent = saturate_vars(j, &u.support())?.is_unit();
    let cancellable = colon_monomial(j, u)? == *j;
    let partly_cancellable = if cancellable || nil {
        // a nil element satisfies the condition vacuously
        true
    } else {
        let delta = is_cellular(j)?.ok_or(Error::NotPrimary)?;
        if delta.is_empty() {
            true
        } else {
            eliminate(&colon_monomial(j, u)?, &delta)? == eliminate(j, &delta)?
        }
    };
    Ok(ElementFlags { nil, nilpotent, cancellable, partly_cancellable })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceFlags {
    pub cancellative: bool,
    pub prime: bool,
    pub primary: bool,
    pub mesoprimary: bool,
    pub toric: bool,
}

pub fn classify_congruence(c: &Congruence) -> Result<CongruenceFlags> {
    c.require_maximal()?;
    let j = &c.ideal;
    let flags = CongruenceFlags {
        cancellative: is_lattice_ideal(j)?,
        prime: is_mesoprime(j)?.is_some(),
        primary: is_cellular(j)?.is_some(),
        mesoprimary: is_mesoprimary(j)?.mesoprimary,
        toric: is_prime(j)?,
    };
    debug_assert!(!flags.toric || flags.prime);
    debug_assert!(!flags.prime || flags.primary);
    debug_assert!(!flags.mesoprimary || flags.primary);
    Ok(flags)
}

/// Outcome of [`maximal_ideal`].
#[derive(Clone, Debug)]
pub struct MaximalIdeal {
    pub ideal: BinomialIdeal,
    pub completeness: Completeness,
    /// The nil exponent that was found, if any.
    pub witness: Option<Exponent>,
}

/// `2·(largest degree in the reduced basis) + n`.
pub fn default_nil_bound(ideal: &BinomialIdeal) -> u64 {
    2 * ideal.max_basis_degree() + ideal.nvars() as u64
}

/// Exponents of total degree `d` in `n` variables, lexicographically
/// decreasing.
fn exponents_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Exponent::new(cur.clone()));
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, n, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Exponent::zero(0));
        }
        return out;
    }
    rec(0, n, d, &mut vec![0; n], &mut out);
    out
}

/// The largest ideal inducing the same congruence as `J`. A `J` with
/// monomials is already maximal, and so is a lattice ideal (a group has no
/// nil). Otherwise exponents up to degree `bound` are searched for a nil
/// class; one nil exponent `u` suffices, since every monomial of its class
/// lies in `J + ⟨X^u⟩`.
pub fn maximal_ideal(ideal: &BinomialIdeal, bound: Option<u64>) -> Result<MaximalIdeal> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_pure() || is_lattice_ideal(ideal)? {
        return Ok(MaximalIdeal { ideal: ideal.clone(), completeness: Completeness::Complete, witness: None });
    }
    let n = ideal.nvars();
    let bound = bound.unwrap_or_else(|| default_nil_bound(ideal));
    let c = Congruence { ideal: ideal.clone(), maximal: false };
    let gb = ideal.grevlex_basis();
    let mut examined = 0usize;
    for d in 0..=bound {
        let d = u32::try_from(d).map_err(|_| Error::SearchTooLarge(format!("degree bound {}", bound)))?;
        for u in exponents_of_degree(n, d) {
            examined += 1;
            if examined > MAX_NIL_CANDIDATES {
                return Err(Error::SearchTooLarge(format!("nil search up to degree {}", bound)));
            }
            // only standard exponents need testing: any other one shares
            // its class with a standard exponent of no larger degree
            if gb.normal_form_exponent(&u).is_some_and(|t| t.exponent != u) {
                continue;
            }
            if c.is_nil(&u) {
                let m = ideal.with_generators([Binomial::monomial(u.clone())]).canonical();
                return Ok(MaximalIdeal { ideal: m, completeness: Completeness::Complete, witness: Some(u) });
            }
        }
    }
    Ok(MaximalIdeal { ideal: ideal.clone(), completeness: Completeness::Unknown, witness: None })
}

/// Addition table of a finite quotient monoid `ℕⁿ/∼`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTable {
    labels: Vec<String>,
    classes: Vec<ClassId>,
    /// `table[i][j]` is the index of `classes[i] + classes[j]`.
    table: Vec<Vec<usize>>,
}

fn label(k: usize) -> String {
    if k == 0 {
        return "0".into();
    }
    let k = k - 1;
    let letter = (b'a' + (k % 26) as u8) as char;
    if k < 26 {
        letter.to_string()
    } else {
        format!("{}{}", letter, k / 26)
    }
}

impl QuotientTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn classes(&self) -> &[ClassId] {
        &self.classes
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn has_nil(&self) -> bool {
        self.classes.last() == Some(&ClassId::Nil)
    }

    /// Label of `classes[i] + classes[j]`.
    pub fn sum_label(&self, i: usize, j: usize) -> &str {
        &self.labels[self.table[i][j]]
    }
}

impl fmt::Display for QuotientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(1);
        write!(f, "{:>w$} |", "+", w = w)?;
        for l in &self.labels {
            write!(f, " {:>w$}", l, w = w)?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((w + 1) * (self.labels.len() + 1) + 1))?;
        for (i, l) in self.labels.iter().enumerate() {
            write!(f, "{:>w$} |", l, w = w)?;
            for &k in &self.table[i] {
                write!(f, " {:>w$}", self.labels[k], w = w)?;
            }
            if i + 1 < self.labels.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Serialize for QuotientTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<&str>> = self.table.iter().map(|r| r.iter().map(|&k| self.labels[k].as_str()).collect()).collect();
        let mut st = s.serialize_struct("QuotientTable", 3)?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("representatives", &self.classes)?;
        st.serialize_field("table", &rows)?;
        st.end()
    }
}

/// Explores `ℕⁿ/∼` breadth-first from `[0]` along the generators `[e_i]`.
/// Fails once more than `max_classes` classes (nil included) are found.
pub fn quotient_table(c: &Congruence, max_classes: usize) -> Result<QuotientTable> {
    let n = c.nvars();
    let mut classes: Vec<Exponent> = vec![Exponent::zero(n)];
    let mut index: HashMap<Exponent, usize> = HashMap::from([(Exponent::zero(n), 0)]);
    let mut has_nil = false;
    let over = |classes: usize, nil: bool| classes + usize::from(nil) > max_classes;
    if over(1, false) {
        return Err(Error::BudgetExceeded { budget: max_classes, found: 1 });
    }
    let mut head = 0;
    while head < classes.len() {
        let rep = classes[head].clone();
        head += 1;
        for i in 0..n {
            match c.class_id(&rep.add(&Exponent::unit(n, i))) {
                ClassId::Nil => has_nil = true,
                ClassId::Class(e) => {
                    if !index.contains_key(&e) {
                        index.insert(e.clone(), classes.len());
                        classes.push(e);
                    }
                }
            }
            if over(classes.len(), has_nil) {
                return Err(Error::BudgetExceeded {
                    budget: max_classes,
                    found: classes.len() + usize::from(has_nil),
                });
            }
        }
    }
    let k = classes.len();
    let nil_index = k;
    let total = k + usize::from(has_nil);
    let mut table = vec![vec![nil_index; total]; total];
    for i in 0..k {
        for j in 0..k {
            table[i][j] = match c.class_id(&classes[i].add(&classes[j])) {
                ClassId::Nil => nil_index,
                ClassId::Class(e) => index[&e],
            };
        }
    }
    let mut labels: Vec<String> = (0..k).map(label).collect();
    let mut ids: Vec<ClassId> = classes.into_iter().map(ClassId::Class).collect();
    if has_nil {
        labels.push("∞".into());
        ids.push(ClassId::Nil);
    }
    Ok(QuotientTable { labels, classes: ids, table })
}

/// The monomial ideal `⟨X^e : e ∈ E⟩` inducing the Rees congruence modulo
/// the ideal `E + ℕⁿ`.
pub fn rees_ideal(ring: &Arc<Ring>, gens: &[Exponent]) -> Result<BinomialIdeal> {
    if gens.iter().any(Exponent::is_zero) {
        return Err(Error::Precondition("the monoid ideal must be proper (0 is a generator)".into()));
    }
    BinomialIdeal::monomial_ideal(ring.clone(), gens)
}

/// `∼₁ ∩ ∼₂` for cancellative congruences, realised by the lattice ideal of
/// `L₁ ∩ L₂`.
pub fn cancellative_intersect(a: &Congruence, b: &Congruence) -> Result<Congruence> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() });
    }
    if !is_lattice_ideal(&a.ideal)? || !is_lattice_ideal(&b.ideal)? {
        return Err(Error::NotCancellative);
    }
    let la = character_of_saturated(&a.ideal)?;
    let lb = character_of_saturated(&b.ideal)?;
    let l = la.lattice().intersect(lb.lattice())?;
    let ideal = lattice_ideal(&PartialCharacter::trivial(l), a.ideal.ring())?;
    Ok(Congruence { ideal, maximal: true })
}

/// Pairwise decision for `∼₁ ∩ ∼₂` without constructing an ideal.
pub fn related_in_both(a: &Congruence, b: &Congruence, u: &Exponent, v: &Exponent) -> bool {
    a.related(u, v) && b.related(u, v)
}
