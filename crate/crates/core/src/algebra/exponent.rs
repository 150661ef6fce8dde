use std::fmt;
use std::ops::Index;

use serde::{Serialize, Serializer};

/// Exponent vector `u ∈ ℕⁿ` of the monomial `X^u`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Exponent(v)
    }

    /// `X_i^d`.
    pub fn power_of_var(n: usize, i: usize, d: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = d;
        Exponent(v)
    }

    /// Product of the variables in `vars`.
    pub fn indicator(n: usize, vars: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &i in vars {
            v[i] = 1;
        }
        Exponent(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// `X^self | X^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&i))
    }

    pub fn scale(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|e| e * k).collect())
    }

    /// Appends `extra` trailing coordinates.
    pub fn extended(&self, extra: &[u32]) -> Exponent {
        let mut v = self.0.clone();
        v.extend_from_slice(extra);
        Exponent(v)
    }

    pub fn truncated(&self, n: usize) -> Exponent {
        Exponent(self.0[..n].to_vec())
    }

    /// `u - v` as an integer vector.
    pub fn difference(&self, other: &Exponent) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect()
    }

    /// Splits an integer vector into its positive and negative parts.
    pub fn split_signed(v: &[i64]) -> (Exponent, Exponent) {
        let plus = v.iter().map(|&x| x.max(0) as u32).collect();
        let minus = v.iter().map(|&x| (-x).max(0) as u32).collect();
        (Exponent(plus), Exponent(minus))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { exp: self, names }
    }
}

impl Index<usize> for Exponent {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

pub struct MonomialDisplay<'a> {
    exp: &'a Exponent,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exp.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Exponent::new(vec![2, 0, 1]);
        let b = Exponent::new(vec![1, 3, 1]);
        assert_eq!(a.lcm(&b), Exponent::new(vec![2, 3, 1]));
        assert_eq!(a.gcd(&b), Exponent::new(vec![1, 0, 1]));
        assert!(!a.divides(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.lcm(&b).checked_sub(&a), Some(Exponent::new(vec![0, 3, 0])));
    }

    #[test]
    fn monomial_text() {
        let names: Vec<String> = ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Exponent::new(vec![2, 1, 0]).display_with(&names).to_string(), "X^2*Y");
        assert_eq!(Exponent::zero(3).display_with(&names).to_string(), "1");
    }
}
