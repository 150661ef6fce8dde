//! Mesoprimes, mesoprimary ideals and their primary decomposition.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Exponent;
use crate::cellular::{cellularity, CellularComponent, Cellularity};
use crate::engine::{colon_monomial, eliminate, saturate_vars, BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::character::character_of_saturated;
use crate::lattice::{lattice_ideal, lattice_primary_decomposition, Lattice, PartialCharacter};

/// Largest number of candidate monomials examined for associated mesoprimes.
pub const MAX_CANDIDATES: usize = 200_000;

/// `I_L(ρ) + ⟨X_j : j ∉ δ⟩` with `L ⊆ ℤ^δ`.
#[derive(Clone, Debug)]
pub struct Mesoprime {
    delta: Vec<usize>,
    character: PartialCharacter,
    ideal: BinomialIdeal,
}

impl Mesoprime {
    pub fn new(delta: Vec<usize>, character: PartialCharacter, ring: &Arc<Ring>) -> Result<Self> {
        let n = ring.nvars();
        if let Some(&i) = delta.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidInput(format!("variable index {} out of range", i + 1)));
        }
        let outside: Vec<usize> = (0..n).filter(|i| !delta.contains(i)).collect();
        if character.lattice().basis().iter().any(|b| outside.iter().any(|&j| !b[j].is_zero())) {
            return Err(Error::InvalidInput("lattice is not supported on delta".into()));
        }
        let lat = lattice_ideal(&character, ring)?;
        let ideal = lat.sum(&BinomialIdeal::variables(ring.clone(), &outside))?.canonical();
        Ok(Mesoprime { delta, character, ideal })
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn character(&self) -> &PartialCharacter {
        &self.character
    }

    pub fn lattice(&self) -> &Lattice {
        self.character.lattice()
    }

    pub fn ideal(&self) -> &BinomialIdeal {
        &self.ideal
    }

    /// Prime iff the lattice is saturated.
    pub fn is_prime(&self) -> bool {
        self.lattice().is_saturated()
    }
}

impl PartialEq for Mesoprime {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta && self.character == other.character
    }
}

impl Eq for Mesoprime {}

impl fmt::Display for Mesoprime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

impl Serialize for Mesoprime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let names = self.ideal.names();
        let delta: Vec<&String> = self.delta.iter().map(|&i| &names[i]).collect();
        let gens: Vec<String> = self.ideal.generators().iter().map(|b| b.display_with(names).to_string()).collect();
        let mut st = s.serialize_struct("Mesoprime", 4)?;
        st.serialize_field("delta", &delta)?;
        st.serialize_field("lattice", self.lattice())?;
        st.serialize_field("values", self.character.values())?;
        st.serialize_field("generators", &gens)?;
        st.end()
    }
}

/// The character of `(I : X^u) ∩ k[δ]`, which is variable-saturated when
/// `I` is `δ`-cellular and `X^u ∉ I`.
fn delta_character(ideal: &BinomialIdeal, delta: &[usize], u: &Exponent) -> Result<PartialCharacter> {
    let n = ideal.nvars();
    if delta.is_empty() {
        return Ok(PartialCharacter::trivial(Lattice::zero(n)));
    }
    let q = colon_monomial(ideal, u)?;
    character_of_saturated(&eliminate(&q, delta)?)
}

/// Standard monomials of `I` supported outside `δ`, by degree then
/// lexicographically.
fn candidates(comp: &CellularComponent) -> Result<Vec<Exponent>> {
    let n = comp.ideal().nvars();
    let nil = comp.nilpotency();
    let size = nil.iter().try_fold(1usize, |acc, &(_, d)| acc.checked_mul(d as usize));
    if size.is_none_or(|s| s > MAX_CANDIDATES) {
        return Err(Error::SearchTooLarge("too many candidate monomials".into()));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nil.len()];
    loop {
        let mut e = vec![0u32; n];
        for (k, &(i, _)) in nil.iter().enumerate() {
            e[i] = cur[k];
        }
        let e = Exponent::new(e);
        if !comp.ideal().contains_monomial(&e) {
            out.push(e);
        }
        let mut k = nil.len();
        loop {
            if k == 0 {
                out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.as_slice().cmp(a.as_slice())));
                return Ok(out);
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < nil[k].1 {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Distinct associated mesoprimes of a cellular ideal, each with the first
/// witness monomial `X^u` that produces it.
pub fn associated_mesoprimes(comp: &CellularComponent) -> Result<Vec<(Mesoprime, Exponent)>> {
    let ideal = comp.ideal();
    let cands = candidates(comp)?;
    let chars: Vec<PartialCharacter> = cands
        .par_iter()
        .map(|u| delta_character(ideal, comp.delta(), u))
        .collect::<Result<_>>()?;
    let mut seen: Vec<(PartialCharacter, Exponent)> = Vec::new();
    for (c, u) in chars.into_iter().zip(cands) {
        if !seen.iter().any(|(s, _)| *s == c) {
            seen.push((c, u));
        }
    }
    seen.into_iter()
        .map(|(c, u)| Ok((Mesoprime::new(comp.delta().to_vec(), c, ideal.ring())?, u)))
        .collect()
}

/// Verdict of [`is_mesoprimary`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MesoprimaryCheck {
    pub mesoprimary: bool,
    /// For a non-cellular ideal, the offending variable; otherwise a
    /// monomial whose mesoprime differs from that of `1`.
    pub witness: Option<Exponent>,
}

/// Cellular with a single associated mesoprime.
pub fn is_mesoprimary(ideal: &BinomialIdeal) -> Result<MesoprimaryCheck> {
    let n = ideal.nvars();
    let comp = match cellularity(ideal)? {
        Cellularity::NotCellular { variable } => {
            return Ok(MesoprimaryCheck { mesoprimary: false, witness: Some(Exponent::unit(n, variable)) })
        }
        Cellularity::Cellular { .. } => CellularComponent::new(ideal.clone())?,
    };
    let mut base: Option<PartialCharacter> = None;
    for u in candidates(&comp)? {
        let c = delta_character(comp.ideal(), comp.delta(), &u)?;
        match &base {
            None => base = Some(c),
            Some(b) if *b != c => return Ok(MesoprimaryCheck { mesoprimary: false, witness: Some(u) }),
            Some(_) => {}
        }
    }
    Ok(MesoprimaryCheck { mesoprimary: true, witness: None })
}

/// Recognises `I = I_L(ρ) + ⟨X_j : j ∉ δ⟩`, where `δ` is the set of
/// variables not in `I`.
pub fn is_mesoprime(ideal: &BinomialIdeal) -> Result<Option<Mesoprime>> {
    if ideal.is_unit() {
        return Ok(None);
    }
    let n = ideal.nvars();
    let delta: Vec<usize> = (0..n).filter(|&i| !ideal.contains_monomial(&Exponent::unit(n, i))).collect();
    let outside: Vec<usize> = (0..n).filter(|i| !delta.contains(i)).collect();
    let part = if delta.is_empty() {
        BinomialIdeal::zero(ideal.ring().clone())
    } else {
        eliminate(ideal, &delta)?
    };
    if !part.is_pure() {
        return Ok(None);
    }
    if saturate_vars(&part, &delta)? != part {
        return Ok(None);
    }
    let rebuilt = part.sum(&BinomialIdeal::variables(ideal.ring().clone(), &outside))?;
    if rebuilt != *ideal {
        return Ok(None);
    }
    let character = character_of_saturated(&part)?;
    Ok(Some(Mesoprime::new(delta, character, ideal.ring())?))
}

/// Binomial primality: a mesoprime whose lattice is saturated.
pub fn is_prime(ideal: &BinomialIdeal) -> Result<bool> {
    Ok(is_mesoprime(ideal)?.is_some_and(|m| m.is_prime()))
}

/// `√I = I_L(ρ) + ⟨X_j : j ∉ δ⟩` where `I_L(ρ) = I ∩ k[δ]`.
pub fn cellular_radical(comp: &CellularComponent) -> Result<Mesoprime> {
    let n = comp.ideal().nvars();
    let c = delta_character(comp.ideal(), comp.delta(), &Exponent::zero(n))?;
    Mesoprime::new(comp.delta().to_vec(), c, comp.ideal().ring())
}

/// `I = ⋂_j (I + I_j)` where the `I_j` are the prime components of the
/// lattice ideal `I ∩ k[δ]`; each `I + I_j` is primary.
pub fn mesoprimary_primary_decomposition(ideal: &BinomialIdeal) -> Result<Vec<BinomialIdeal>> {
    let check = is_mesoprimary(ideal)?;
    if !check.mesoprimary {
        let witness = check.witness.expect("non-mesoprimary verdicts carry a witness");
        return Err(Error::NotMesoprimary { witness: witness.display_with(ideal.names()).to_string() });
    }
    let comp = CellularComponent::new(ideal.clone())?;
    let radical = cellular_radical(&comp)?;
    lattice_primary_decomposition(radical.character(), ideal.ring())?
        .into_iter()
        .map(|(_, ij)| Ok(ideal.sum(&ij)?.canonical()))
        .collect()
}
