//! Exact nonzero coefficients.
//!
//! A [`Scalar`] is an element of the multiplicative group
//! `μ∞ × { ∏ p^{α_p} : α_p ∈ ℚ }`, written additively as
//! `(ℚ/ℤ) ⊕ ⊕_p ℚ`. Binomial computations only multiply, invert, extract
//! roots and compare coefficients, so this group is all that is needed to
//! stay exact over the algebraic closure of ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Scalar {
    /// `t` in `[0, 1)`, standing for `e^{2πi t}`.
    torsion: BigRational,
    /// prime `p` ↦ exponent `α_p`, never zero.
    primes: BTreeMap<u64, BigRational>,
}

fn frac_part(q: &BigRational) -> BigRational {
    q - q.floor()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::one()
    }
}

impl Scalar {
    pub fn one() -> Self {
        Scalar {
            torsion: BigRational::zero(),
            primes: BTreeMap::new(),
        }
    }

    pub fn minus_one() -> Self {
        Scalar::root_of_unity(2, 1)
    }

    /// `e^{2πi k/m}`.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        assert!(m >= 1, "root of unity of order zero");
        Scalar {
            torsion: frac_part(&BigRational::new(BigInt::from(k), BigInt::from(m))),
            primes: BTreeMap::new(),
        }
    }

    fn from_parts(torsion: BigRational, primes: BTreeMap<u64, BigRational>) -> Self {
        let torsion = frac_part(&torsion);
        let primes = primes.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        Scalar { torsion, primes }
    }

    /// `p^e` for a prime `p`. The caller is responsible for primality.
    pub fn prime_power(p: u64, e: BigRational) -> Self {
        let mut primes = BTreeMap::new();
        primes.insert(p, e);
        Scalar::from_parts(BigRational::zero(), primes)
    }

    /// Nonzero rational to scalar; `None` for zero or when a prime factor of
    /// the numerator or denominator does not fit in 64 bits.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        if q.is_zero() {
            return None;
        }
        let torsion = if q.is_negative() { rat(1, 2) } else { BigRational::zero() };
        let mut primes: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (part, sign) in [(q.numer().abs(), 1i64), (q.denom().abs(), -1i64)] {
            let n = part.to_u64()?;
            for (p, e) in num_prime::nt_funcs::factorize64(n) {
                *primes.entry(p).or_insert_with(BigRational::zero) +=
                    BigRational::from_integer(BigInt::from(sign * e as i64));
            }
        }
        Some(Scalar::from_parts(torsion, primes))
    }

    pub fn from_integer(n: i64) -> Option<Self> {
        Scalar::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn torsion(&self) -> &BigRational {
        &self.torsion
    }

    pub fn primes(&self) -> &BTreeMap<u64, BigRational> {
        &self.primes
    }

    pub fn is_one(&self) -> bool {
        self.torsion.is_zero() && self.primes.is_empty()
    }

    /// Roots of unity have an empty prime part.
    pub fn is_root_of_unity(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let mut primes = self.primes.clone();
        for (p, e) in &other.primes {
            *primes.entry(*p).or_insert_with(BigRational::zero) += e;
        }
        Scalar::from_parts(&self.torsion + &other.torsion, primes)
    }

    pub fn inv(&self) -> Scalar {
        Scalar::from_parts(
            -self.torsion.clone(),
            self.primes.iter().map(|(p, e)| (*p, -e.clone())).collect(),
        )
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn neg(&self) -> Scalar {
        self.mul(&Scalar::minus_one())
    }

    pub fn pow(&self, k: &BigInt) -> Scalar {
        let k = BigRational::from_integer(k.clone());
        Scalar::from_parts(
            &self.torsion * &k,
            self.primes.iter().map(|(p, e)| (*p, e * &k)).collect(),
        )
    }

    pub fn pow_i64(&self, k: i64) -> Scalar {
        self.pow(&BigInt::from(k))
    }

    /// The `branch`-th `d`-th root: principal root times `e^{2πi branch/d}`.
    /// For fixed `d` the roots for `branch = 0..d` are pairwise distinct and
    /// exhaust all `d`-th roots of `self`.
    pub fn root(&self, d: u64, branch: u64) -> Scalar {
        assert!(d >= 1, "root of degree zero");
        let dq = BigRational::from_integer(BigInt::from(d));
        let torsion = &self.torsion / &dq + BigRational::new(BigInt::from(branch), BigInt::from(d));
        Scalar::from_parts(
            torsion,
            self.primes.iter().map(|(p, e)| (*p, e / &dq)).collect(),
        )
    }

    /// `self == -other`.
    pub fn is_negation_of(&self, other: &Scalar) -> bool {
        self.div(other) == Scalar::minus_one()
    }

    /// The value as a rational number, when it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        let negative = if self.torsion.is_zero() {
            false
        } else if self.torsion == rat(1, 2) {
            true
        } else {
            return None;
        };
        let mut numer = BigInt::one();
        let mut denom = BigInt::one();
        for (p, e) in &self.primes {
            if !e.is_integer() {
                return None;
            }
            let k = e.to_integer();
            let mag = k.abs().to_u32()?;
            let pk = num_traits::pow(BigInt::from(*p), mag as usize);
            if k.is_positive() {
                numer *= pk;
            } else {
                denom *= pk;
            }
        }
        let q = BigRational::new(numer, denom);
        Some(if negative { -q } else { q })
    }
}

impl fmt::Display for Scalar {
    /// Writes the literal grammar accepted by [`Scalar::from_str`]:
    /// an optional sign, then `*`-joined factors among `zeta(m,k)`, a
    /// rational `p/q`, and prime powers `p^(a/b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        let negative = self.torsion == rat(1, 2);
        if !self.torsion.is_zero() && !negative {
            let t = &self.torsion;
            factors.push(format!("zeta({},{})", t.denom(), t.numer()));
        }
        let mut numer = BigUint::one();
        let mut denom = BigUint::one();
        let mut integral = Vec::new();
        let mut fractional = Vec::new();
        for (p, e) in &self.primes {
            if e.is_integer() {
                integral.push(format!("{}^{}", p, e));
                if let Some(k) = e.to_integer().to_i64().filter(|k| k.abs() <= 64) {
                    let pk = num_traits::pow(BigUint::from(*p), k.unsigned_abs() as usize);
                    if k > 0 {
                        numer *= pk;
                    } else {
                        denom *= pk;
                    }
                } else {
                    numer = BigUint::from(u64::MAX) + 1u32;
                }
            } else {
                fractional.push(format!("{}^({})", p, e));
            }
        }
        let limit = BigUint::from(u64::MAX);
        if numer > limit || denom > limit {
            factors.extend(integral);
        } else if !denom.is_one() {
            factors.push(format!("{}/{}", numer, denom));
        } else if !numer.is_one() || (factors.is_empty() && fractional.is_empty()) {
            factors.push(numer.to_string());
        }
        factors.extend(fractional);
        if negative {
            write!(f, "-")?;
        }
        write!(f, "{}", factors.join("*"))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Scalar", 3)?;
        st.serialize_field("torsion", &self.torsion.to_string())?;
        let primes: BTreeMap<String, String> = self
            .primes
            .iter()
            .map(|(p, e)| (p.to_string(), e.to_string()))
            .collect();
        st.serialize_field("primes", &primes)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

struct LiteralCursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> LiteralCursor<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == c {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
        Ok(if negative { -n } else { n })
    }

    fn rational_exponent(&mut self) -> Result<BigRational> {
        if self.eat(b'(') {
            let n = self.integer()?;
            let d = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
            self.expect(b')')?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(self.integer()?))
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(b"zeta") {
            self.pos += 4;
            self.expect(b'(')?;
            let m = self.integer()?;
            self.expect(b',')?;
            let k = self.integer()?;
            self.expect(b')')?;
            if !m.is_positive() {
                return Err(self.err("zeta order must be positive"));
            }
            let t = BigRational::new(k, m);
            return Ok(Scalar::from_parts(t, BTreeMap::new()));
        }
        let base = self.integer()?;
        if base.is_negative() {
            return Err(self.err("sign allowed only at the start of a coefficient"));
        }
        if self.eat(b'^') {
            let e = self.rational_exponent()?;
            let b = Scalar::from_rational(&BigRational::from_integer(base))
                .ok_or_else(|| self.err("zero or oversized base"))?;
            let mut primes = BTreeMap::new();
            for (p, k) in b.primes {
                primes.insert(p, k * &e);
            }
            return Ok(Scalar::from_parts(BigRational::zero(), primes));
        }
        let denom = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
        if denom.is_zero() || denom.is_negative() {
            return Err(self.err("denominator must be positive"));
        }
        Scalar::from_rational(&BigRational::new(base, denom))
            .ok_or_else(|| self.err("zero coefficient or factor too large"))
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = LiteralCursor { s: s.as_bytes(), pos: 0 };
        let negative = if cur.eat(b'-') {
            true
        } else {
            cur.eat(b'+');
            false
        };
        let mut acc = cur.factor()?;
        while cur.eat(b'*') {
            acc = acc.mul(&cur.factor()?);
        }
        cur.skip_ws();
        if cur.pos != s.len() {
            return Err(cur.err("unexpected trailing characters"));
        }
        Ok(if negative { acc.neg() } else { acc })
    }
}
