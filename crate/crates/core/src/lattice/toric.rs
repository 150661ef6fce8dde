//! Toric ideals, positivity of affine monoids, and fibers of `deg_A`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Exponent;
use crate::engine::{BinomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::lattice::character::{lattice_ideal, PartialCharacter};
use crate::lattice::intmat::{kernel, IntMatrix};
use crate::lattice::Lattice;

/// Cap on the number of inequalities kept during elimination.
const MAX_INEQUALITIES: usize = 200_000;
/// Cap on the size of the search box for fibers.
pub const MAX_FIBER_BOX: u128 = 50_000_000;

fn check_columns(a: &IntMatrix) -> Result<()> {
    match (0..a.ncols()).find(|&j| a.column(j).iter().all(Zero::is_zero)) {
        Some(j) => Err(Error::ZeroColumn(j + 1)),
        None => Ok(()),
    }
}

/// The toric ideal `I_A = I_{ker A}(1)`.
pub fn toric_ideal(a: &IntMatrix, ring: &Arc<Ring>) -> Result<BinomialIdeal> {
    if a.ncols() != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), found: a.ncols() });
    }
    check_columns(a)?;
    let l = Lattice::new(a.ncols(), kernel(a))?;
    lattice_ideal(&PartialCharacter::trivial(l), ring)
}

/// `coeffs · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

impl Ineq {
    /// Scales so that the first nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Ineq {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for x in self.coeffs.iter_mut() {
                *x /= &c;
            }
            self.rhs /= c;
        }
        self
    }
}

/// Fourier–Motzkin elimination of variable `k`.
fn eliminate_var(system: Vec<Ineq>, k: usize) -> Result<Vec<Ineq>> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), BTreeSet::new());
    for q in system {
        if q.coeffs[k].is_positive() {
            pos.push(q);
        } else if q.coeffs[k].is_negative() {
            neg.push(q);
        } else {
            out.insert(q);
        }
    }
    if pos.len() * neg.len() + out.len() > MAX_INEQUALITIES {
        return Err(Error::SearchTooLarge("too many inequalities during Fourier-Motzkin elimination".into()));
    }
    for p in &pos {
        for q in &neg {
            let (a, b) = (p.coeffs[k].clone(), -q.coeffs[k].clone());
            let coeffs: Vec<BigRational> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
            let rhs = &p.rhs * &b + &q.rhs * &a;
            out.insert(Ineq { coeffs, rhs }.normalized());
        }
    }
    Ok(out.into_iter().collect())
}

fn system_for(a: &IntMatrix, target: &[BigInt]) -> Vec<Ineq> {
    let n = a.ncols();
    let mut sys = Vec::new();
    for (i, t) in target.iter().enumerate() {
        let row: Vec<BigRational> = a.row(i).iter().cloned().map(BigRational::from_integer).collect();
        let t = BigRational::from_integer(t.clone());
        sys.push(Ineq { coeffs: row.clone(), rhs: t.clone() }.normalized());
        sys.push(Ineq { coeffs: row.into_iter().map(|x| -x).collect(), rhs: -t }.normalized());
    }
    for j in 0..n {
        let mut c = vec![BigRational::zero(); n];
        c[j] = -BigRational::from_integer(1.into());
        sys.push(Ineq { coeffs: c, rhs: BigRational::zero() });
    }
    sys
}

fn feasible_after(system: Vec<Ineq>, vars: impl IntoIterator<Item = usize>) -> Result<Vec<Ineq>> {
    let mut sys = system;
    for k in vars {
        sys = eliminate_var(sys, k)?;
    }
    Ok(sys)
}

/// True iff `deg_A⁻¹(0) = {0}`, decided by checking that
/// `{A·u = 0, u ≥ 0, Σu = 1}` has no rational solution.
pub fn is_positive(a: &IntMatrix) -> Result<bool> {
    check_columns(a)?;
    let n = a.ncols();
    let mut sys = system_for(a, &vec![BigInt::zero(); a.nrows()]);
    let one = vec![BigRational::from_integer(1.into()); n];
    sys.push(Ineq { coeffs: one.clone(), rhs: BigRational::from_integer(1.into()) });
    sys.push(Ineq { coeffs: one.into_iter().map(|x| -x).collect(), rhs: BigRational::from_integer((-1).into()) });
    let rest = feasible_after(sys, 0..n)?;
    let feasible = rest.iter().all(|q| !q.rhs.is_negative());
    Ok(!feasible)
}

/// All `u ∈ ℕⁿ` with `A·u = target`, sorted lexicographically.
pub fn fibers(a: &IntMatrix, target: &[BigInt]) -> Result<Vec<Exponent>> {
    if target.len() != a.nrows() {
        return Err(Error::DimensionMismatch { expected: a.nrows(), found: target.len() });
    }
    if !is_positive(a)? {
        return Err(Error::NotPositive);
    }
    let n = a.ncols();
    let sys = system_for(a, target);
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let rest = feasible_after(sys.clone(), (0..n).filter(|&k| k != i))?;
        if rest.iter().any(|q| q.coeffs.iter().all(Zero::is_zero) && q.rhs.is_negative()) {
            return Ok(Vec::new());
        }
        let ub = rest
            .iter()
            .filter(|q| q.coeffs[i].is_positive())
            .map(|q| (&q.rhs / &q.coeffs[i]).floor().to_integer())
            .min()
            .expect("positivity bounds every coordinate");
        if ub.is_negative() {
            return Ok(Vec::new());
        }
        bounds.push(ub.to_u32().ok_or_else(|| Error::SearchTooLarge(format!("coordinate bound {}", ub)))?);
    }
    let size = bounds.iter().fold(1u128, |acc, &b| acc.saturating_mul(b as u128 + 1));
    if size > MAX_FIBER_BOX {
        return Err(Error::SearchTooLarge(format!("fiber search box has {} points", size)));
    }

    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| a.column(j)).collect();
    let mut out = Vec::new();
    let mut u = vec![0u32; n];
    let mut residual: Vec<BigInt> = target.to_vec();
    search(0, &bounds, &cols, &mut u, &mut residual, &mut out);
    Ok(out)
}

fn search(i: usize, bounds: &[u32], cols: &[Vec<BigInt>], u: &mut Vec<u32>, residual: &mut Vec<BigInt>, out: &mut Vec<Exponent>) {
    if i == bounds.len() {
        if residual.iter().all(Zero::is_zero) {
            out.push(Exponent::new(u.clone()));
        }
        return;
    }
    for k in 0..=bounds[i] {
        u[i] = k;
        search(i + 1, bounds, cols, u, residual, out);
        for (r, c) in residual.iter_mut().zip(&cols[i]) {
            *r -= c;
        }
    }
    for (r, c) in residual.iter_mut().zip(&cols[i]) {
        *r += c * BigInt::from(bounds[i] + 1);
    }
    u[i] = 0;
}
