use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::intmat::{hermite, left_kernel, smith_normal_form, IntMatrix};

/// A subgroup of `ℤⁿ`, stored by the nonzero rows of its Hermite normal
/// form. Two lattices are equal iff their stored bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    n: usize,
    basis: Vec<Vec<BigInt>>,
}

/// `(Sat(L), Sat_p(L), Sat'_p(L))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Saturations {
    pub sat: Lattice,
    pub sat_p: Lattice,
    pub sat_prime_p: Lattice,
}

impl Lattice {
    /// Lattice spanned by `gens` in `ℤⁿ`.
    pub fn new(n: usize, gens: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
        let m = IntMatrix::with_shape(gens.len(), n, gens)?;
        let hf = hermite(&m);
        Ok(Lattice { n, basis: hf.h.rows()[..hf.rank].to_vec() })
    }

    pub fn from_i64(n: usize, gens: &[Vec<i64>]) -> Result<Self> {
        Lattice::new(n, gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zero(n: usize) -> Self {
        Lattice { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Lattice::new(n, IntMatrix::identity(n).rows().to_vec()).unwrap()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::with_shape(self.basis.len(), self.n, self.basis.clone()).unwrap()
    }

    /// Coordinates of `v` in the stored basis, if `v ∈ L`.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.n {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let c = b.iter().position(|x| !x.is_zero()).unwrap();
            if !rest[..c].iter().all(Zero::is_zero) {
                return None;
            }
            let (q, r) = rest[c].div_rem(&b[c]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rest.iter_mut().zip(b) {
                *x -= &q * y;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.n == other.n && self.basis.iter().all(|b| other.contains(b))
    }

    /// Basis `w_i` with `L = ⟨d_i·w_i⟩` and `Sat(L) = ⟨w_i⟩`.
    fn adapted_basis(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        if self.basis.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let s = smith_normal_form(&self.basis_matrix());
        let vinv = s.v.unimodular_inverse().expect("V is unimodular");
        let d = s.invariant_factors();
        let w = (0..d.len()).map(|i| vinv.row(i).to_vec()).collect();
        (w, d)
    }

    pub fn saturation(&self) -> Lattice {
        let (w, _) = self.adapted_basis();
        Lattice::new(self.n, w).unwrap()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// The three saturations at a prime `p`, with `p = 0` giving
    /// `Sat_0 = L` and `Sat'_0 = Sat(L)`.
    pub fn saturations(&self, p: u64) -> Result<Saturations> {
        let (w, d) = self.adapted_basis();
        let sat = Lattice::new(self.n, w.clone())?;
        if p == 0 {
            return Ok(Saturations { sat: sat.clone(), sat_p: self.clone(), sat_prime_p: sat });
        }
        if !num_prime::nt_funcs::is_prime64(p) {
            return Err(Error::InvalidInput(format!("{} is not a prime", p)));
        }
        let p = BigInt::from(p);
        let mut sat_p = Vec::new();
        let mut sat_prime = Vec::new();
        for (wi, di) in w.iter().zip(&d) {
            let mut pv = BigInt::one();
            while (di / &pv).is_multiple_of(&p) {
                pv *= &p;
            }
            let cofactor = di / &pv;
            sat_p.push(wi.iter().map(|x| x * &cofactor).collect());
            sat_prime.push(wi.iter().map(|x| x * &pv).collect());
        }
        Ok(Saturations {
            sat,
            sat_p: Lattice::new(self.n, sat_p)?,
            sat_prime_p: Lattice::new(self.n, sat_prime)?,
        })
    }

    /// `|M / L|` for `L = self ⊆ M`.
    pub fn index_in(&self, sup: &Lattice) -> Result<BigInt> {
        if !self.is_sublattice_of(sup) {
            return Err(Error::NotSublattice);
        }
        if self.rank() != sup.rank() {
            return Err(Error::InfiniteIndex { sub: self.rank(), sup: sup.rank() });
        }
        let rows: Vec<Vec<BigInt>> = self.basis.iter().map(|b| sup.coordinates(b).unwrap()).collect();
        Ok(IntMatrix::new(rows)?.determinant()?.abs())
    }

    /// `L₁ ∩ L₂`, from the left kernel of the stacked bases `[B₁; B₂]`.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.basis.is_empty() || other.basis.is_empty() {
            return Ok(Lattice::zero(self.n));
        }
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let k = left_kernel(&IntMatrix::new(stacked)?);
        let r = self.basis.len();
        let b1 = self.basis_matrix();
        let gens = k.iter().map(|y| b1.left_mul(&y[..r])).collect();
        Lattice::new(self.n, gens)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|b| format!("({})", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "Z<{}>", rows.join(", "))
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<serde_json::Value>> = self.basis.iter().map(|r| r.iter().map(big_json).collect()).collect();
        let mut st = s.serialize_struct("Lattice", 3)?;
        st.serialize_field("ambient", &self.n)?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("basis", &rows)?;
        st.end()
    }
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub(crate) fn big_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(x.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lat(n: usize, g: &[Vec<i64>]) -> Lattice {
        Lattice::from_i64(n, g).unwrap()
    }

    #[test]
    fn saturation_examples() {
        let l = lat(2, &[vec![2, -2]]);
        let s0 = l.saturations(0).unwrap();
        assert_eq!(s0.sat, lat(2, &[vec![1, -1]]));
        assert_eq!(s0.sat_p, l);
        assert_eq!(s0.sat_prime_p, lat(2, &[vec![1, -1]]));
        let s2 = l.saturations(2).unwrap();
        assert_eq!(s2.sat_p, lat(2, &[vec![1, -1]]));
        assert_eq!(s2.sat_prime_p, l);
        let sat = lat(3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        let s = sat.saturations(3).unwrap();
        assert!(s.sat == sat && s.sat_p == sat && s.sat_prime_p == sat);
        assert!(l.saturations(4).is_err());
    }

    #[test]
    fn intersection_examples() {
        let a = lat(2, &[vec![2, -2]]);
        let b = lat(2, &[vec![3, -3]]);
        assert_eq!(a.intersect(&b).unwrap(), lat(2, &[vec![6, -6]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(lat(2, &[vec![1, 0]]).intersect(&lat(2, &[vec![0, 1]])).unwrap(), Lattice::zero(2));
    }

    #[test]
    fn index() {
        let l = lat(2, &[vec![3, -3]]);
        assert_eq!(l.index_in(&l.saturation()).unwrap(), BigInt::from(3));
        assert!(matches!(lat(2, &[vec![1, 0]]).index_in(&Lattice::full(2)), Err(Error::InfiniteIndex { .. })));
        assert!(matches!(Lattice::full(2).index_in(&l), Err(Error::NotSublattice)));
    }

    fn gens() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..=3).prop_flat_map(|r| prop::collection::vec(prop::collection::vec(-12i64..=12, 3), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn saturation_indices_multiply(g in gens(), p in prop::sample::select(vec![2u64, 3, 5])) {
            let l = lat(3, &g);
            let s = l.saturations(p).unwrap();
            let total = l.index_in(&s.sat).unwrap();
            let a = l.index_in(&s.sat_p).unwrap();
            let b = l.index_in(&s.sat_prime_p).unwrap();
            prop_assert_eq!(a * b, total);
            prop_assert!(s.sat.is_saturated());
        }

        #[test]
        fn intersection_is_contained(g in gens(), h in gens()) {
            let (a, b) = (lat(3, &g), lat(3, &h));
            let c = a.intersect(&b).unwrap();
            prop_assert!(c.is_sublattice_of(&a) && c.is_sublattice_of(&b));
            // anything in both spans with small coordinates lies in c
            for x in a.basis() {
                prop_assert_eq!(b.contains(x), c.contains(x));
            }
        }
    }
}
