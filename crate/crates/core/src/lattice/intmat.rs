//! Dense integer matrices with Hermite and Smith normal forms.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows })
    }

    /// Matrix with the given shape; `rows` may be empty when `nrows = 0`.
    pub fn with_shape(nrows: usize, ncols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.len() != nrows {
            return Err(Error::DimensionMismatch { expected: nrows, found: rows.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: r.len() });
        }
        Ok(IntMatrix { rows: nrows, cols: ncols, data: rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.cols)
            .map(|j| v.iter().zip(&self.data).map(|(a, r)| a * &r[j]).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &m[n - 1][n - 1] })
    }

    /// Inverse of a unimodular matrix; `None` if not unimodular.
    #[allow(clippy::needless_range_loop)]
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut r: Vec<BigRational> = self.data[i].iter().cloned().map(BigRational::from_integer).collect();
                r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * n {
                        let t = &f * &a[c][j];
                        a[i][j] -= t;
                    }
                }
            }
        }
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = &a[i][n + j];
                if !x.is_integer() {
                    return None;
                }
                out.data[i][j] = x.to_integer();
            }
        }
        Some(out)
    }

    fn row_combine(&mut self, r: usize, s: usize, coeffs: [&BigInt; 4]) {
        // (row_r, row_s) ← (a·row_r + b·row_s, c·row_r + d·row_s)
        let [a, b, c, d] = coeffs;
        for j in 0..self.cols {
            let x = &self.data[r][j];
            let y = &self.data[s][j];
            let nr = a * x + b * y;
            let ns = c * x + d * y;
            self.data[r][j] = nr;
            self.data[s][j] = ns;
        }
    }

    fn add_row_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let t = k * &self.data[src][j];
            self.data[target][j] += t;
        }
    }

    fn add_col_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        for r in self.data.iter_mut() {
            let t = k * &r[src];
            r[target] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for x in self.data[r].iter_mut() {
            *x = -&*x;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in self.data.iter_mut() {
            r.swap(a, b);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i][j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row-style Hermite normal form `U·A = H`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`; rows past the rank are zero.
pub fn hermite(a: &IntMatrix) -> Hermite {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h.data[i][c].is_zero() {
                continue;
            }
            if h.data[r][c].is_zero() {
                h.data.swap(r, i);
                u.data.swap(r, i);
                continue;
            }
            let eg = h.data[r][c].extended_gcd(&h.data[i][c]);
            let a = &h.data[r][c] / &eg.gcd;
            let b = &h.data[i][c] / &eg.gcd;
            let nb = -b;
            let coeffs = [&eg.x, &eg.y, &nb, &a];
            h.row_combine(r, i, coeffs);
            u.row_combine(r, i, coeffs);
        }
        if h.data[r][c].is_zero() {
            continue;
        }
        if h.data[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for k in 0..r {
            let q = -h.data[k][c].div_floor(&h.data[r][c]);
            if !q.is_zero() {
                h.add_row_multiple(k, r, &q);
                u.add_row_multiple(k, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hermite { h, u, rank: r, pivots }
}

/// `U·A·V = D` with `D` diagonal, `d₁ | d₂ | ⋯`, and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.data[i][i].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let best = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d.data[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| d.data[i][j].abs().cmp(&d.data[k][l].abs()));
            let Some((pi, pj)) = best else {
                return SmithForm { u, d, v };
            };
            d.data.swap(t, pi);
            u.data.swap(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                let q = -(&d.data[i][t] / &d.data[t][t]);
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
                clean &= d.data[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = -(&d.data[t][j] / &d.data[t][t]);
                if !q.is_zero() {
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
                clean &= d.data[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.data[i][j].is_multiple_of(&d.data[t][t])));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.data[t][t].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

/// Basis of `{x ∈ ℤⁿ : A·x = 0}` (saturated by construction).
pub fn kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    left_kernel(&a.transpose())
}

/// Basis of `{y : y·A = 0}`.
pub fn left_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let hf = hermite(a);
    (hf.rank..a.rows).map(|i| hf.u.data[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn check_smith(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(f.iter().all(|x| x.is_positive()));
        s
    }

    #[test]
    fn smith_examples() {
        let s = check_smith(&m(&[vec![2, -2]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
        let s = check_smith(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = check_smith(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn hermite_shape() {
        let a = m(&[vec![4, 6, 2], vec![2, 3, 1], vec![0, 5, 7]]);
        let hf = hermite(&a);
        assert_eq!(hf.u.mul(&a).unwrap(), hf.h);
        assert_eq!(hf.rank, 2);
        assert_eq!(hf.u.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn kernel_of_345() {
        let k = kernel(&m(&[vec![3, 4, 5]]));
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().zip([3, 4, 5]).map(|(x, c)| x * c).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(a.determinant().unwrap(), BigInt::one());
        let inv = a.unimodular_inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), IntMatrix::identity(2));
        assert!(m(&[vec![2, 0], vec![0, 1]]).unimodular_inverse().is_none());
    }

    fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn smith_invariants(rows in matrix()) {
            check_smith(&m(&rows));
        }

        #[test]
        fn hermite_invariants(rows in matrix()) {
            let a = m(&rows);
            let hf = hermite(&a);
            prop_assert_eq!(hf.u.mul(&a).unwrap(), hf.h.clone());
            prop_assert_eq!(hf.u.determinant().unwrap().abs(), BigInt::one());
            for (i, &c) in hf.pivots.iter().enumerate() {
                prop_assert!(hf.h[(i, c)].is_positive());
                for k in 0..i {
                    prop_assert!(!hf.h[(k, c)].is_negative() && hf.h[(k, c)] < hf.h[(i, c)]);
                }
                for j in 0..c {
                    prop_assert!(hf.h[(i, j)].is_zero());
                }
            }
            for i in hf.rank..a.nrows() {
                prop_assert!(hf.h.row(i).iter().all(Zero::is_zero));
            }
        }
    }
}
