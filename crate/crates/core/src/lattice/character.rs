//! Partial characters `ρ : L → k*` and the lattice ideals `I_L(ρ)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Exponent, MonomialOrder, Scalar};
use crate::engine::{saturate_vars, Binomial, BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::intmat::{hermite, smith_normal_form, IntMatrix};
use crate::lattice::Lattice;

/// Upper bound on the number of extensions enumerated at once.
pub const MAX_EXTENSIONS: u64 = 1 << 20;

/// A lattice together with one value per stored basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartialCharacter {
    lattice: Lattice,
    values: Vec<Scalar>,
}

impl PartialCharacter {
    /// The character on `⟨gens⟩` taking `values[j]` at `gens[j]`. Fails if
    /// the prescribed values are inconsistent on relations among `gens`.
    pub fn from_generators(n: usize, gens: Vec<Vec<BigInt>>, values: Vec<Scalar>) -> Result<Self> {
        if gens.len() != values.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), found: values.len() });
        }
        let lattice = Lattice::new(n, gens.clone())?;
        let m = IntMatrix::with_shape(gens.len(), n, gens)?;
        let hf = hermite(&m);
        let eval = |row: &[BigInt]| {
            row.iter()
                .zip(&values)
                .filter(|(k, _)| !k.is_zero())
                .fold(Scalar::one(), |acc, (k, v)| acc.mul(&v.pow(k)))
        };
        for i in hf.rank..hf.u.nrows() {
            if !eval(hf.u.row(i)).is_one() {
                return Err(Error::InvalidInput("character values are inconsistent on a relation".into()));
            }
        }
        let values = (0..hf.rank).map(|i| eval(hf.u.row(i))).collect();
        debug_assert_eq!(hf.h.rows()[..hf.rank], lattice.basis()[..]);
        Ok(PartialCharacter { lattice, values })
    }

    pub fn trivial(lattice: Lattice) -> Self {
        let values = vec![Scalar::one(); lattice.rank()];
        PartialCharacter { lattice, values }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Scalar::is_one)
    }

    /// `ρ(v)`, if `v ∈ L`.
    pub fn eval(&self, v: &[BigInt]) -> Option<Scalar> {
        let c = self.lattice.coordinates(v)?;
        Some(
            c.iter()
                .zip(&self.values)
                .filter(|(k, _)| !k.is_zero())
                .fold(Scalar::one(), |acc, (k, s)| acc.mul(&s.pow(k))),
        )
    }
}

impl fmt::Display for PartialCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .lattice
            .basis()
            .iter()
            .zip(&self.values)
            .map(|(b, v)| {
                let b: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("({}) -> {}", b.join(","), v)
            })
            .collect();
        if pairs.is_empty() {
            write!(f, "trivial character on the zero lattice")
        } else {
            write!(f, "{}", pairs.join("; "))
        }
    }
}

/// `v = v⁺ − v⁻` as exponents.
pub(crate) fn split_vector(v: &[BigInt]) -> Result<(Exponent, Exponent)> {
    let part = |keep_positive: bool| -> Result<Exponent> {
        v.iter()
            .map(|x| {
                let y = if keep_positive == x.is_positive() { x.abs() } else { BigInt::zero() };
                y.to_u32().ok_or_else(|| Error::InvalidInput(format!("exponent {} is too large", y)))
            })
            .collect::<Result<Vec<u32>>>()
            .map(Exponent::new)
    };
    Ok((part(true)?, part(false)?))
}

/// `I_L(ρ)`: the basis binomials `X^{b⁺} − ρ(b)·X^{b⁻}` saturated at every
/// variable.
pub fn lattice_ideal(rho: &PartialCharacter, ring: &Arc<Ring>) -> Result<BinomialIdeal> {
    let n = ring.nvars();
    if rho.lattice.ambient() != n {
        return Err(Error::DimensionMismatch { expected: n, found: rho.lattice.ambient() });
    }
    let o = MonomialOrder::grevlex();
    let mut gens = Vec::with_capacity(rho.values.len());
    for (b, v) in rho.lattice.basis().iter().zip(&rho.values) {
        let (plus, minus) = split_vector(b)?;
        gens.push(Binomial::new(plus, v.clone(), minus, &o).expect("nonzero lattice vector"));
    }
    let ideal = BinomialIdeal::new(ring.clone(), gens)?;
    let all: Vec<usize> = (0..n).collect();
    saturate_vars(&ideal, &all)
}

/// The unique `ρ` with `I : (∏X_i)^∞ = I_L(ρ)`, for `I` without monomials.
pub fn character_of(ideal: &BinomialIdeal) -> Result<PartialCharacter> {
    let n = ideal.nvars();
    if let Some(m) = ideal.grevlex_basis().monomials().next() {
        return Err(Error::NotPure(m.display_with(ideal.names()).to_string()));
    }
    let all: Vec<usize> = (0..n).collect();
    let sat = saturate_vars(ideal, &all)?;
    character_of_saturated(&sat)
}

/// Reads `ρ` off the reduced basis of an ideal already known to be a
/// lattice ideal.
pub(crate) fn character_of_saturated(sat: &BinomialIdeal) -> Result<PartialCharacter> {
    let n = sat.nvars();
    let gb = sat.grevlex_basis();
    let mut gens = Vec::with_capacity(gb.len());
    let mut values = Vec::with_capacity(gb.len());
    for b in gb.elements() {
        match (b.trail(), b.coeff()) {
            (Some(t), Some(c)) => {
                gens.push(b.lead().difference(t).into_iter().map(BigInt::from).collect());
                values.push(c.clone());
            }
            _ => return Err(Error::NotPure(b.display_with(sat.names()).to_string())),
        }
    }
    PartialCharacter::from_generators(n, gens, values)
}

/// All extensions of `ρ` to a lattice `M ⊇ L` with `M/L` finite, ordered
/// lexicographically by root branch.
pub fn extend_character(rho: &PartialCharacter, sup: &Lattice) -> Result<Vec<PartialCharacter>> {
    let l = &rho.lattice;
    if !l.is_sublattice_of(sup) {
        return Err(Error::NotSublattice);
    }
    if l.rank() != sup.rank() {
        return Err(Error::InfiniteIndex { sub: l.rank(), sup: sup.rank() });
    }
    let n = l.ambient();
    if l.rank() == 0 {
        return Ok(vec![PartialCharacter::trivial(sup.clone())]);
    }
    // coordinates of L's basis in M's basis, then U·C·V = D gives adapted
    // bases f = V⁻¹·M of M and U·L = D·f of L
    let coords: Vec<Vec<BigInt>> = l.basis().iter().map(|b| sup.coordinates(b).unwrap()).collect();
    let s = smith_normal_form(&IntMatrix::new(coords)?);
    let vinv = s.v.unimodular_inverse().expect("V is unimodular");
    let mbasis = sup.basis_matrix();
    let f: Vec<Vec<BigInt>> = (0..l.rank()).map(|i| mbasis.left_mul(vinv.row(i))).collect();
    let d = s.invariant_factors();
    let targets: Vec<Scalar> = (0..l.rank())
        .map(|i| {
            s.u.row(i)
                .iter()
                .zip(rho.values())
                .filter(|(k, _)| !k.is_zero())
                .fold(Scalar::one(), |acc, (k, v)| acc.mul(&v.pow(k)))
        })
        .collect();
    let degrees: Vec<u64> = d
        .iter()
        .map(|x| x.to_u64().ok_or_else(|| Error::SearchTooLarge(format!("invariant factor {}", x))))
        .collect::<Result<_>>()?;
    let total = degrees.iter().try_fold(1u64, |acc, &k| acc.checked_mul(k).filter(|&t| t <= MAX_EXTENSIONS));
    if total.is_none() {
        return Err(Error::SearchTooLarge(format!("more than {} character extensions", MAX_EXTENSIONS)));
    }

    let mut out = Vec::with_capacity(total.unwrap() as usize);
    let mut branch = vec![0u64; degrees.len()];
    loop {
        let values: Vec<Scalar> = targets
            .iter()
            .zip(&degrees)
            .zip(&branch)
            .map(|((t, &deg), &k)| t.root(deg, k))
            .collect();
        out.push(PartialCharacter::from_generators(n, f.clone(), values)?);
        // odometer, last index fastest
        let mut i = degrees.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            branch[i] += 1;
            if branch[i] < degrees[i] {
                break;
            }
            branch[i] = 0;
        }
    }
}

/// `I_L(ρ) = ⋂_j I_{Sat(L)}(ρ_j)` over the extensions `ρ_j` of `ρ` to
/// `Sat(L)`; each component is prime.
pub fn lattice_primary_decomposition(
    rho: &PartialCharacter,
    ring: &Arc<Ring>,
) -> Result<Vec<(PartialCharacter, BinomialIdeal)>> {
    let sat = rho.lattice.saturation();
    extend_character(rho, &sat)?
        .into_par_iter()
        .map(|r| {
            let ideal = lattice_ideal(&r, ring)?;
            Ok((r, ideal))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<Ring> {
        Arc::new(Ring::new(vec!["X".into(), "Y".into()]))
    }

    fn lat(g: &[Vec<i64>]) -> Lattice {
        Lattice::from_i64(2, g).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ideal(gens: Vec<Binomial>) -> BinomialIdeal {
        BinomialIdeal::new(ring2(), gens).unwrap()
    }

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn lattice_ideal_examples() {
        let o = MonomialOrder::grevlex();
        let r = ring2();
        let i = lattice_ideal(&PartialCharacter::trivial(lat(&[vec![1, -1]])), &r).unwrap();
        assert_eq!(i, ideal(vec![Binomial::pure(e(&[1, 0]), e(&[0, 1]), &o).unwrap()]));
        let i = lattice_ideal(&PartialCharacter::trivial(lat(&[vec![2, -2]])), &r).unwrap();
        assert_eq!(i, ideal(vec![Binomial::pure(e(&[2, 0]), e(&[0, 2]), &o).unwrap()]));
        let minus = PartialCharacter::from_generators(2, vec![big(&[1, -1])], vec![Scalar::minus_one()]).unwrap();
        let i = lattice_ideal(&minus, &r).unwrap();
        assert_eq!(i, ideal(vec![Binomial::new(e(&[1, 0]), Scalar::minus_one(), e(&[0, 1]), &o).unwrap()]));
    }

    #[test]
    fn character_examples() {
        let o = MonomialOrder::grevlex();
        let rho = character_of(&ideal(vec![Binomial::pure(e(&[1, 1]), e(&[0, 1]), &o).unwrap()])).unwrap();
        assert_eq!(rho.lattice(), &lat(&[vec![1, 0]]));
        assert!(rho.values()[0].is_one());
        let rho = character_of(&ideal(vec![Binomial::new(e(&[1, 0]), Scalar::minus_one(), e(&[0, 1]), &o).unwrap()])).unwrap();
        assert_eq!(rho.lattice(), &lat(&[vec![1, -1]]));
        assert_eq!(rho.values()[0], Scalar::minus_one());
        let rho = character_of(&BinomialIdeal::zero(ring2())).unwrap();
        assert_eq!(rho.lattice().rank(), 0);
        assert!(matches!(character_of(&ideal(vec![Binomial::monomial(e(&[1, 0]))])), Err(Error::NotPure(_))));
    }

    #[test]
    fn inconsistent_values_rejected() {
        let r = PartialCharacter::from_generators(2, vec![big(&[1, -1]), big(&[2, -2])], vec![Scalar::one(), Scalar::minus_one()]);
        assert!(r.is_err());
    }

    #[test]
    fn extension_examples() {
        let rho = PartialCharacter::trivial(lat(&[vec![2, -2]]));
        let ext = extend_character(&rho, &lat(&[vec![1, -1]])).unwrap();
        let vals: Vec<Scalar> = ext.iter().map(|r| r.values()[0].clone()).collect();
        assert_eq!(vals, vec![Scalar::one(), Scalar::minus_one()]);
        assert_eq!(extend_character(&rho, rho.lattice()).unwrap(), vec![rho.clone()]);
        let rho3 = PartialCharacter::trivial(lat(&[vec![3, -3]]));
        let ext = extend_character(&rho3, &lat(&[vec![1, -1]])).unwrap();
        let vals: Vec<Scalar> = ext.iter().map(|r| r.values()[0].clone()).collect();
        assert_eq!(vals, vec![Scalar::one(), Scalar::root_of_unity(3, 1), Scalar::root_of_unity(3, 2)]);
        for r in &ext {
            assert_eq!(r.eval(&big(&[3, -3])).unwrap(), Scalar::one());
        }
    }

    #[test]
    fn decomposition_of_x2_minus_y2() {
        let rho = PartialCharacter::trivial(lat(&[vec![2, -2]]));
        let comps = lattice_primary_decomposition(&rho, &ring2()).unwrap();
        let o = MonomialOrder::grevlex();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].1, ideal(vec![Binomial::pure(e(&[1, 0]), e(&[0, 1]), &o).unwrap()]));
        assert_eq!(comps[1].1, ideal(vec![Binomial::new(e(&[1, 0]), Scalar::minus_one(), e(&[0, 1]), &o).unwrap()]));
        let sat = PartialCharacter::trivial(lat(&[vec![1, -1]]));
        assert_eq!(lattice_primary_decomposition(&sat, &ring2()).unwrap().len(), 1);
    }
}
