//! Monomial orders on `ℕⁿ`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Exponent;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Block elimination order: compares the total degree in `block` first
    /// and breaks ties with `inner`. Any monomial involving a block variable
    /// is larger than every monomial free of them.
    Elim {
        block: BTreeSet<usize>,
        inner: Box<MonomialOrder>,
    },
}

/// A monomial order together with an optional variable permutation.
/// `perm[k]` is the variable that is `k`-th most significant; `None`
/// means `X_1 > X_2 > ⋯ > X_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, perm: None }
    }

    /// Elimination order for the variables in `block`.
    pub fn elimination(block: impl IntoIterator<Item = usize>, inner: MonomialOrder) -> Self {
        MonomialOrder {
            kind: OrderKind::Elim {
                block: block.into_iter().collect(),
                inner: Box::new(inner),
            },
            perm: None,
        }
    }

    /// Reorders the variables for lex/grevlex comparisons. Has no effect on
    /// the block test of an elimination order (its inner order carries its
    /// own permutation).
    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    /// Checks that the permutation and block indices fit `n` variables.
    pub fn validate(&self, n: usize) -> Result<()> {
        if let Some(p) = &self.perm {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.len() });
            }
            let seen: BTreeSet<usize> = p.iter().copied().collect();
            if seen.len() != n || seen.iter().any(|&i| i >= n) {
                return Err(Error::InvalidInput("variable order is not a permutation".into()));
            }
        }
        if let OrderKind::Elim { block, inner } = &self.kind {
            if block.iter().any(|&i| i >= n) {
                return Err(Error::InvalidInput("elimination block index out of range".into()));
            }
            inner.validate(n)?;
        }
        Ok(())
    }

    #[inline]
    fn var_at(&self, k: usize) -> usize {
        match &self.perm {
            Some(p) => p[k],
            None => k,
        }
    }

    /// Comparison without dimension checks; callers guarantee equal lengths.
    pub fn compare(&self, u: &Exponent, v: &Exponent) -> Ordering {
        let n = u.len();
        match &self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    let i = self.var_at(k);
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match u.degree().cmp(&v.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for k in (0..n).rev() {
                    let i = self.var_at(k);
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
            OrderKind::Elim { block, inner } => {
                let du: u64 = block.iter().map(|&i| u[i] as u64).sum();
                let dv: u64 = block.iter().map(|&i| v[i] as u64).sum();
                du.cmp(&dv).then_with(|| inner.compare(u, v))
            }
        }
    }

    /// Checked comparison.
    pub fn cmp(&self, u: &Exponent, v: &Exponent) -> Result<Ordering> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: u.len(), found: v.len() });
        }
        self.validate(u.len())?;
        Ok(self.compare(u, v))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Lex => write!(f, "lex")?,
            OrderKind::Grevlex => write!(f, "grevlex")?,
            OrderKind::Elim { block, inner } => {
                let b: Vec<String> = block.iter().map(|i| i.to_string()).collect();
                write!(f, "elim[{}]({})", b.join(","), inner)?
            }
        }
        if let Some(p) = &self.perm {
            let p: Vec<String> = p.iter().map(|i| i.to_string()).collect();
            write!(f, "<{}>", p.join(","))?;
        }
        Ok(())
    }
}
