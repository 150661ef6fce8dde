//! Cellular binomial ideals and cellular decomposition.
//!
//! An ideal is cellular when every variable is either a nonzerodivisor or
//! nilpotent modulo it. A non-cellular ideal is split along a variable
//! `X_i` that is neither, as `I = (I : X_i^d) ∩ (I + ⟨X_i^d⟩)` with `d` the
//! point where the colons `I : X_i^k` stabilise; both parts strictly
//! contain `I`, so the recursion terminates.

use serde::Serialize;

use crate::algebra::Exponent;
use crate::engine::{colon_monomial, saturate_vars, Binomial, BinomialIdeal};
use crate::error::{Error, Result};

/// How each variable behaves modulo an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cellularity {
    /// `delta` holds the nonzerodivisors; every other variable `i` has
    /// `X_i^d ∈ I` with `d` listed in `nilpotency`.
    Cellular { delta: Vec<usize>, nilpotency: Vec<(usize, u32)> },
    /// `variable` is a zerodivisor that is not nilpotent.
    NotCellular { variable: usize },
}

fn is_nonzerodivisor(ideal: &BinomialIdeal, i: usize) -> Result<bool> {
    let q = colon_monomial(ideal, &Exponent::unit(ideal.nvars(), i))?;
    Ok(q == *ideal)
}

fn is_nilpotent(ideal: &BinomialIdeal, i: usize) -> Result<bool> {
    Ok(saturate_vars(ideal, &[i])?.is_unit())
}

fn nilpotency_index(ideal: &BinomialIdeal, i: usize) -> u32 {
    let n = ideal.nvars();
    (1..).find(|&d| ideal.contains_monomial(&Exponent::power_of_var(n, i, d))).unwrap()
}

/// Classifies every variable modulo `I`.
pub fn cellularity(ideal: &BinomialIdeal) -> Result<Cellularity> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut delta = Vec::new();
    let mut nilpotency = Vec::new();
    for i in 0..ideal.nvars() {
        if is_nonzerodivisor(ideal, i)? {
            delta.push(i);
        } else if is_nilpotent(ideal, i)? {
            nilpotency.push((i, nilpotency_index(ideal, i)));
        } else {
            return Ok(Cellularity::NotCellular { variable: i });
        }
    }
    Ok(Cellularity::Cellular { delta, nilpotency })
}

/// The set `δ` of nonzerodivisor variables if `I` is cellular.
pub fn is_cellular(ideal: &BinomialIdeal) -> Result<Option<Vec<usize>>> {
    Ok(match cellularity(ideal)? {
        Cellularity::Cellular { delta, .. } => Some(delta),
        Cellularity::NotCellular { .. } => None,
    })
}

/// A `δ`-cellular ideal together with its nilpotency exponents.
#[derive(Clone, Debug)]
pub struct CellularComponent {
    delta: Vec<usize>,
    ideal: BinomialIdeal,
    nilpotency: Vec<(usize, u32)>,
}

impl CellularComponent {
    /// Verifies cellularity; fails with the offending variable otherwise.
    pub fn new(ideal: BinomialIdeal) -> Result<Self> {
        match cellularity(&ideal)? {
            Cellularity::Cellular { delta, nilpotency } => Ok(CellularComponent {
                delta,
                ideal: ideal.canonical(),
                nilpotency,
            }),
            Cellularity::NotCellular { variable } => Err(Error::NotCellular {
                variable: ideal.names()[variable].clone(),
            }),
        }
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn ideal(&self) -> &BinomialIdeal {
        &self.ideal
    }

    /// `(i, d_i)` for each `i ∉ δ`.
    pub fn nilpotency(&self) -> &[(usize, u32)] {
        &self.nilpotency
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<String>) {
        let names = self.ideal.names();
        let gens = self
            .ideal
            .grevlex_basis()
            .elements()
            .iter()
            .map(|b| b.display_with(names).to_string())
            .collect();
        (self.delta.clone(), gens)
    }
}

impl PartialEq for CellularComponent {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta && self.ideal == other.ideal
    }
}

impl Eq for CellularComponent {}

impl Serialize for CellularComponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let names = self.ideal.names();
        let delta: Vec<&String> = self.delta.iter().map(|&i| &names[i]).collect();
        let nil: Vec<(&String, u32)> = self.nilpotency.iter().map(|&(i, d)| (&names[i], d)).collect();
        let gens: Vec<String> = self.ideal.generators().iter().map(|b| b.display_with(names).to_string()).collect();
        let mut st = s.serialize_struct("CellularComponent", 3)?;
        st.serialize_field("delta", &delta)?;
        st.serialize_field("nilpotency", &nil)?;
        st.serialize_field("generators", &gens)?;
        st.end()
    }
}

/// First variable that is a zerodivisor without being nilpotent.
fn splitting_variable(ideal: &BinomialIdeal) -> Result<Option<usize>> {
    for i in 0..ideal.nvars() {
        if !is_nonzerodivisor(ideal, i)? && !is_nilpotent(ideal, i)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Smallest `d` with `I : X_i^d = I : X_i^{d+1}`, and that colon.
fn stable_colon(ideal: &BinomialIdeal, i: usize) -> Result<(u32, BinomialIdeal)> {
    let x = Exponent::unit(ideal.nvars(), i);
    let mut d = 1;
    let mut current = colon_monomial(ideal, &x)?;
    loop {
        let next = colon_monomial(&current, &x)?;
        if next == current {
            return Ok((d, current));
        }
        current = next;
        d += 1;
    }
}

/// Splits `I` at variable `i`: returns `(I : X_i^d, I + ⟨X_i^d⟩, d)`.
pub fn split(ideal: &BinomialIdeal, i: usize) -> Result<(BinomialIdeal, BinomialIdeal, u32)> {
    let (d, quotient) = stable_colon(ideal, i)?;
    let power = Binomial::monomial(Exponent::power_of_var(ideal.nvars(), i, d));
    Ok((quotient, ideal.with_generators([power]), d))
}

fn decompose(ideal: BinomialIdeal) -> Result<Vec<CellularComponent>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let Some(i) = splitting_variable(&ideal)? else {
        return Ok(vec![CellularComponent::new(ideal)?]);
    };
    let (left, right, _) = split(&ideal, i)?;
    debug_assert!(left.contains_ideal(&ideal) && left != ideal);
    debug_assert!(right.contains_ideal(&ideal) && right != ideal);
    let (a, b) = rayon::join(|| decompose(left), || decompose(right));
    let mut out = a?;
    out.extend(b?);
    Ok(out)
}

/// A list of cellular ideals whose intersection is `I`, deduplicated and
/// sorted by `δ` and reduced basis.
pub fn cellular_decompose(ideal: &BinomialIdeal) -> Result<Vec<CellularComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut comps = decompose(ideal.clone())?;
    comps.sort_by_cached_key(CellularComponent::sort_key);
    comps.dedup();
    Ok(comps)
}

/// Result of [`prune`]. Pairwise containment pruning cannot certify that
/// no component is implied by the intersection of several others, so
/// `minimal` is only claimed when a single component remains.
#[derive(Clone, Debug, Serialize)]
pub struct Pruned {
    pub components: Vec<CellularComponent>,
    pub minimal: bool,
}

/// Drops duplicates and every component that contains another one.
pub fn prune(components: Vec<CellularComponent>) -> Pruned {
    let mut kept: Vec<CellularComponent> = Vec::new();
    for c in components {
        if kept.iter().any(|k| k.ideal.contains_ideal(&c.ideal) && c.ideal.contains_ideal(&k.ideal)) {
            continue;
        }
        kept.push(c);
    }
    // duplicates are gone, so containment between survivors is strict
    let n = kept.len();
    let redundant: Vec<bool> = (0..n)
        .map(|i| (0..n).any(|j| j != i && kept[i].ideal.contains_ideal(&kept[j].ideal)))
        .collect();
    let components: Vec<CellularComponent> = kept
        .into_iter()
        .zip(redundant)
        .filter(|(_, r)| !r)
        .map(|(c, _)| c)
        .collect();
    let minimal = components.len() <= 1;
    Pruned { components, minimal }
}
