//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored in the power basis `1, ζ_n, ..., ζ_n^{φ(n)-1}`
//! modulo the cyclotomic polynomial `Φ_n`, always over its *smallest*
//! conductor. Every operation re-minimizes, so structural equality of the
//! stored form is equality of field elements.
//!
//! Minimization descends one prime at a time. For `p² | n` the subfield
//! `Q(ζ_{n/p})` is spanned by the basis powers divisible by `p`. For `p ∥ n`
//! the element is rewritten over `Q(ζ_{n/p})` in the basis `ζ_p, ..., ζ_p^{p-1}`
//! and lies in the subfield iff all of those coordinates agree.

mod field;
mod parse;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::poly::Poly;
use crate::scalar::{from_i64, FieldScalar};

pub use parse::ParseError;

pub(crate) use field::{field, lcm, reduce};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("value {0} is not rational")]
pub struct NotRational(pub String);

/// An element of `Q(ζ_n)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc<T> {
    conductor: usize,
    coeffs: Vec<T>,
}

impl<T: FieldScalar> Cyc<T> {
    pub fn zero() -> Self {
        Cyc { conductor: 1, coeffs: vec![T::zero()] }
    }

    pub fn one() -> Self {
        Self::from_scalar(T::one())
    }

    pub fn from_scalar(c: T) -> Self {
        Cyc { conductor: 1, coeffs: vec![c] }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_scalar(from_i64(v))
    }

    /// `ζ_n^k`, written `E(n)^k`.
    pub fn root_of_unity(n: usize, k: i64) -> Self {
        assert!(n >= 1, "E(0) is undefined");
        let e = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![T::zero(); n];
        dense[e] = T::one();
        Self::from_dense(n, dense)
    }

    /// Canonicalizes `Σ dense[k] ζ_n^k` (indices taken modulo nothing; any
    /// length is accepted and reduced modulo `Φ_n`).
    pub fn from_dense(n: usize, dense: Vec<T>) -> Self {
        let coeffs = reduce(n, dense);
        let (conductor, coeffs) = minimize(n, coeffs);
        Cyc { conductor, coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Power-basis coordinates over the conductor.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Result<T, NotRational>
    where
        T: fmt::Display,
    {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(NotRational(self.to_string()))
        }
    }

    /// Coordinates of `self` in the power basis of `Q(ζ_n)`; `n` must be a
    /// multiple of the conductor.
    pub fn embed(&self, n: usize) -> Vec<T> {
        assert_eq!(n % self.conductor, 0, "Q(ζ_{}) is not a subfield of Q(ζ_{n})", self.conductor);
        reduce(n, self.spread(n))
    }

    /// Unreduced representative in `Q[x]/(x^n - 1)`.
    fn spread(&self, n: usize) -> Vec<T> {
        let step = n / self.conductor;
        let mut dense = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[k * step] = c.clone();
            }
        }
        dense
    }

    /// Nonzero `(exponent, coefficient)` pairs over the conductor.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_n ↦ ζ_n^a`; `a` must be coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let a = a.rem_euclid(n as i64) as usize;
        assert_eq!(field::gcd(a, n), 1, "exponent {a} is not a unit modulo {n}");
        let mut dense = vec![T::zero(); n];
        for (k, c) in self.terms() {
            dense[(k * a) % n] = c.clone();
        }
        Self::from_dense(n, dense)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Cyc { conductor: self.conductor, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    fn combine(&self, other: &Self, sign: T) -> Self {
        if self.conductor == other.conductor {
            let coeffs: Vec<T> =
                self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + sign.clone() * b.clone()).collect();
            let (conductor, coeffs) = minimize(self.conductor, coeffs);
            return Cyc { conductor, coeffs };
        }
        let n = lcm(self.conductor, other.conductor);
        let mut dense = self.spread(n);
        for (slot, b) in dense.iter_mut().zip(other.spread(n)) {
            if !b.is_zero() {
                *slot = slot.clone() + sign.clone() * b;
            }
        }
        Self::from_dense(n, dense)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, T::one())
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, -T::one())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let n = lcm(self.conductor, other.conductor);
        let (sa, sb) = (n / self.conductor, n / other.conductor);
        let mut dense = vec![T::zero(); n];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                let e = (i * sa + j * sb) % n;
                dense[e] = dense[e].clone() + a.clone() * b.clone();
            }
        }
        Self::from_dense(n, dense)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_n`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_scalar(T::one() / self.coeffs[0].clone()));
        }
        let n = self.conductor;
        let modulus = Poly::from_coeffs(field::field(n).poly.iter().map(|&c| from_i64::<T>(c)).collect());
        let a = Poly::from_coeffs(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&modulus);
        debug_assert_eq!(g.degree(), Some(0), "Φ_n is irreducible");
        Some(Self::from_dense(n, s.rem(&modulus).into_coeffs()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }

    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let (mut result, mut b) = (Self::one(), base);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        Some(result)
    }
}

fn minimize<T: FieldScalar>(mut n: usize, mut coeffs: Vec<T>) -> (usize, Vec<T>) {
    loop {
        if n == 1 {
            return (1, coeffs);
        }
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            return (1, vec![coeffs.swap_remove(0)]);
        }
        let primes = field::field(n).primes.clone();
        match primes.iter().find_map(|&p| descend(n, p, &coeffs).map(|c| (p, c))) {
            Some((p, c)) => {
                n /= p;
                coeffs = c;
            }
            None => return (n, coeffs),
        }
    }
}

/// Tries to rewrite an element of `Q(ζ_n)` over `Q(ζ_{n/p})`.
fn descend<T: FieldScalar>(n: usize, p: usize, coeffs: &[T]) -> Option<Vec<T>> {
    let m = n / p;
    if m % p == 0 {
        // Φ_n(x) = Φ_m(x^p): residues of exponents mod p never mix.
        if coeffs.iter().enumerate().any(|(k, c)| k % p != 0 && !c.is_zero()) {
            return None;
        }
        return Some(coeffs.iter().step_by(p).cloned().collect());
    }
    // ζ_n = ζ_m^u ζ_p^v with u p + v m ≡ 1 (mod n)
    let u = field::inv_mod(p % m.max(1), m);
    let v = field::inv_mod(m % p, p);
    let mut parts = vec![vec![T::zero(); m]; p];
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (j, e) = ((k * v) % p, (k * u) % m);
        parts[j][e] = parts[j][e].clone() + c.clone();
    }
    let parts: Vec<Vec<T>> = parts.into_iter().map(|d| reduce(m, d)).collect();
    if parts[2..].iter().any(|y| *y != parts[1]) {
        return None;
    }
    Some(parts[0].iter().zip(&parts[1]).map(|(a, b)| a.clone() - b.clone()).collect())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl<T: FieldScalar> $trait<&Cyc<T>> for &Cyc<T> {
            type Output = Cyc<T>;
            fn $method(self, rhs: &Cyc<T>) -> Cyc<T> {
                self.$impl(rhs)
            }
        }
        impl<T: FieldScalar> $trait<Cyc<T>> for Cyc<T> {
            type Output = Cyc<T>;
            fn $method(self, rhs: Cyc<T>) -> Cyc<T> {
                self.$impl(&rhs)
            }
        }
        impl<T: FieldScalar> $trait<&Cyc<T>> for Cyc<T> {
            type Output = Cyc<T>;
            fn $method(self, rhs: &Cyc<T>) -> Cyc<T> {
                self.$impl(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<T: FieldScalar> Neg for Cyc<T> {
    type Output = Cyc<T>;
    fn neg(self) -> Cyc<T> {
        self.scale(&-T::one())
    }
}

impl<T: FieldScalar> Neg for &Cyc<T> {
    type Output = Cyc<T>;
    fn neg(self) -> Cyc<T> {
        self.scale(&-T::one())
    }
}

impl<T: FieldScalar> std::iter::Sum for Cyc<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyc::zero(), |acc, x| acc + x)
    }
}

impl<T: FieldScalar> From<i64> for Cyc<T> {
    fn from(v: i64) -> Self {
        Cyc::from_integer(v)
    }
}

/// Canonical text form: terms by decreasing exponent in `E(n)` notation,
/// e.g. `E(12)^3-2*E(12)+1/2`. Parses back to the same value.
impl<T: FieldScalar + fmt::Display> fmt::Display for Cyc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.abs();
            let body = match (k, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => format!("E({n})"),
                (1, false) => format!("{abs}*E({n})"),
                (_, true) => format!("E({n})^{k}"),
                (_, false) => format!("{abs}*E({n})^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl<T: FieldScalar + fmt::Display> fmt::Debug for Cyc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

impl std::str::FromStr for Cyc<crate::Rational> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse::parse(s)
    }
}

#[cfg(test)]
mod tests;
