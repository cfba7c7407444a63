//! Solvability by radicals, decided negatively through Frobenius cycle types.
//!
//! By Dedekind's theorem the degrees of the factors of `f mod p` form the
//! cycle type of an element of the Galois group. Two rules turn one such
//! cycle type into a proof that the group is not solvable:
//!
//! * a prime cycle length `q` with `n/2 < q < n - 2`: some power of the
//!   element is a `q`-cycle, the group is primitive, and Jordan's theorem
//!   gives `A_n` inside it;
//! * `n` prime and exactly one even cycle, of length 2: an odd power is a
//!   transposition, and a transitive group of prime degree with a
//!   transposition is `S_n`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::fp::{distinct_degree, FpPoly};
use super::{factor_over_q, squarefree_part, GaloisError, IntPolynomial};
use crate::quiver::Quiver;

pub const DEFAULT_PRIME_BUDGET: u64 = 10_000;

/// Largest prime budget honoured; keeps `p^2` inside `u64`.
const MAX_BUDGET: u64 = 1 << 31;

pub fn primes_below(n: u64) -> Vec<u64> {
    let n = n.min(MAX_BUDGET) as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut sieve = vec![true; n];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            for j in (i * i..n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Degrees of the irreducible factors of `f mod p`, ascending.
pub fn ddf_pattern(f: &IntPolynomial, p: u64) -> Result<Vec<usize>, GaloisError> {
    let bad = |reason: &str| Err(GaloisError::BadPrime { p, reason: reason.to_string() });
    if f.is_zero() {
        return Err(GaloisError::ZeroPolynomial);
    }
    if !is_prime(p) {
        return bad("not a prime");
    }
    if p >= MAX_BUDGET {
        return bad("too large");
    }
    if (f.leading().unwrap() % BigInt::from(p)).is_zero() {
        return bad("divides the leading coefficient");
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let fp = FpPoly::from_int(f, p);
    if !fp.is_squarefree() {
        return bad("the reduction is not squarefree");
    }
    let mut pattern = Vec::new();
    for (g, d) in distinct_degree(&fp.monic()) {
        pattern.extend(std::iter::repeat_n(d, g.degree().unwrap() / d));
    }
    Ok(pattern)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Solvable,
    NotSolvable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    /// A prime cycle `q` with `n/2 < q < n - 2`.
    PrimeCycle { q: usize },
    /// Prime degree and a cycle type with a single even part, equal to 2.
    PrimeDegreeTransposition,
}

impl Rule {
    fn applies(&self, n: usize, pattern: &[usize]) -> bool {
        match self {
            Rule::PrimeCycle { q } => pattern.contains(q) && 2 * q > n && q + 2 < n && is_prime(*q as u64),
            Rule::PrimeDegreeTransposition => {
                is_prime(n as u64)
                    && pattern.iter().filter(|&&c| c % 2 == 0).count() == 1
                    && pattern.iter().all(|&c| c % 2 == 1 || c == 2)
            }
        }
    }

    fn find(n: usize, pattern: &[usize]) -> Option<Rule> {
        let cycle = pattern.iter().copied().filter(|&q| Rule::PrimeCycle { q }.applies(n, pattern)).max();
        if let Some(q) = cycle {
            return Some(Rule::PrimeCycle { q });
        }
        Rule::PrimeDegreeTransposition.applies(n, pattern).then_some(Rule::PrimeDegreeTransposition)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub prime: u64,
    pub pattern: Vec<usize>,
}

impl Witness {
    fn replays(&self, f: &IntPolynomial) -> bool {
        ddf_pattern(f, self.prime).is_ok_and(|p| p == self.pattern)
    }
}

/// Proof that an irreducible factor has a non-solvable Galois group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub factor: IntPolynomial,
    pub degree: usize,
    pub rule: Rule,
    pub witness: Witness,
    /// A prime modulo which the factor stays irreducible, when one was seen
    /// before the rule fired.
    pub irreducibility: Option<Witness>,
    pub explanation: String,
}

impl Certificate {
    /// Recomputes every cited cycle type and re-checks the deduction.
    pub fn replay(&self) -> bool {
        let n = self.degree;
        if self.factor.degree() != Some(n) || n < 5 {
            return false;
        }
        let irreducible = match &self.irreducibility {
            Some(w) => w.pattern == [n] && w.replays(&self.factor),
            None => factor_over_q(&self.factor).is_ok_and(|fz| fz.factors.len() == 1 && fz.factors[0].1 == 1),
        };
        irreducible && self.witness.replays(&self.factor) && self.rule.applies(n, &self.witness.pattern)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorVerdict {
    pub factor: IntPolynomial,
    pub degree: usize,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    /// Number of good primes whose cycle types were examined.
    pub primes_examined: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvabilityVerdict {
    pub polynomial: IntPolynomial,
    pub verdict: Verdict,
    pub prime_budget: u64,
    pub factors: Vec<FactorVerdict>,
}

impl SolvabilityVerdict {
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.factors.iter().filter_map(|f| f.certificate.as_ref())
    }
}

fn explain(rule: &Rule, n: usize, w: &Witness) -> String {
    match rule {
        Rule::PrimeCycle { q } => format!(
            "mod {} the factor splits with degrees {:?}; a power of this Frobenius element is a {q}-cycle with {}/2 < {q} < {}, so the Galois group contains A_{n}",
            w.prime, w.pattern, n, n - 2
        ),
        Rule::PrimeDegreeTransposition => format!(
            "mod {} the factor splits with degrees {:?}; an odd power of this Frobenius element is a transposition, and a transitive group of prime degree {n} containing one is S_{n}",
            w.prime, w.pattern
        ),
    }
}

fn factor_verdict(g: &IntPolynomial, primes: &[u64]) -> FactorVerdict {
    let n = g.degree().unwrap();
    let mut out = FactorVerdict {
        factor: g.clone(),
        degree: n,
        verdict: Verdict::Solvable,
        certificate: None,
        primes_examined: 0,
    };
    if n <= 4 {
        return out;
    }
    out.verdict = Verdict::Unknown;
    let mut irreducibility = None;
    for &p in primes {
        let Ok(pattern) = ddf_pattern(g, p) else { continue };
        out.primes_examined += 1;
        let witness = Witness { prime: p, pattern };
        if let Some(rule) = Rule::find(n, &witness.pattern) {
            out.verdict = Verdict::NotSolvable;
            out.certificate = Some(Certificate {
                factor: g.clone(),
                degree: n,
                explanation: explain(&rule, n, &witness),
                rule,
                witness,
                irreducibility,
            });
            return out;
        }
        if irreducibility.is_none() && witness.pattern == [n] {
            irreducibility = Some(witness);
        }
    }
    out
}

/// Tri-state solvability verdict for `f`, using the primes below `prime_budget`.
pub fn solvability(f: &IntPolynomial, prime_budget: u64) -> Result<SolvabilityVerdict, GaloisError> {
    let sf = squarefree_part(f)?;
    let primes = primes_below(prime_budget);
    let factors: Vec<FactorVerdict> =
        factor_over_q(&sf)?.factors.iter().map(|(g, _)| factor_verdict(g, &primes)).collect();
    let verdict = if factors.iter().any(|v| v.verdict == Verdict::NotSolvable) {
        Verdict::NotSolvable
    } else if factors.iter().all(|v| v.verdict == Verdict::Solvable) {
        Verdict::Solvable
    } else {
        Verdict::Unknown
    };
    Ok(SolvabilityVerdict { polynomial: f.clone(), verdict, prime_budget, factors })
}

/// Solvability of the characteristic polynomial of a quiver's adjacency matrix.
pub fn component_solvability(q: &Quiver, prime_budget: u64) -> Result<SolvabilityVerdict, GaloisError> {
    solvability(&q.char_poly(), prime_budget)
}
