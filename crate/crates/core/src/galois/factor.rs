//! Factorization over the rationals: squarefree decomposition, modular
//! factorization, Hensel lifting and recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::fp::{distinct_degree, factor_squarefree, reduce_big, FpPoly};
use super::{GaloisError, IntPolynomial, MAX_DEGREE};
use crate::{Poly, Rational};

/// `content · Π factor^multiplicity`, factors primitive with positive leading
/// coefficient, ordered by degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "serialize_bigint")]
    pub content: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Factorization {
    pub fn expand(&self) -> IntPolynomial {
        self.factors.iter().fold(IntPolynomial::constant(self.content.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

fn check_input(f: &IntPolynomial) -> Result<(), GaloisError> {
    match f.degree() {
        None => Err(GaloisError::ZeroPolynomial),
        Some(d) if d > MAX_DEGREE => Err(GaloisError::DegreeTooLarge(d)),
        _ => Ok(()),
    }
}

/// Product of the distinct irreducible factors, as a primitive polynomial.
pub fn squarefree_part(f: &IntPolynomial) -> Result<IntPolynomial, GaloisError> {
    check_input(f)?;
    if f.degree() == Some(0) {
        return Ok(IntPolynomial::one());
    }
    let q = f.to_rational_poly();
    let g = q.gcd(&q.derivative());
    Ok(IntPolynomial::from_rational_poly(&q.div_rem(&g).0))
}

/// Yun's algorithm: pairs `(g_i, i)` with `f = c · Π g_i^i` and the `g_i`
/// squarefree and pairwise coprime. Trivial `g_i` are omitted.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, GaloisError> {
    check_input(f)?;
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let a: Poly<Rational> = f.to_rational_poly();
    let da = a.derivative();
    let a0 = a.gcd(&da);
    let mut b = a.div_rem(&a0).0;
    let mut c = da.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().is_some_and(|k| k > 0) {
        let ai = b.gcd(&d);
        b = b.div_rem(&ai).0;
        c = d.div_rem(&ai).0;
        d = c.sub(&b.derivative());
        if ai.degree().is_some_and(|k| k > 0) {
            out.push((IntPolynomial::from_rational_poly(&ai), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Complete factorization into irreducibles over the rationals.
pub fn factor_over_q(f: &IntPolynomial) -> Result<Factorization, GaloisError> {
    check_input(f)?;
    let mut content = f.content();
    if f.leading().unwrap().is_negative() {
        content = -content;
    }
    let prim = f.primitive_part();
    let shift = prim.coeffs().iter().take_while(|c| c.is_zero()).count();
    let prim = IntPolynomial::new(prim.coeffs()[shift..].to_vec());
    let mut factors = Vec::new();
    for (g, m) in squarefree_decomposition(&prim)? {
        for h in factor_squarefree_z(&g) {
            factors.push((h, m));
        }
    }
    if shift > 0 {
        factors.push((IntPolynomial::x(), shift as u32));
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    let out = Factorization { content, factors };
    debug_assert_eq!(&out.expand(), f);
    Ok(out)
}

pub(crate) fn seeded_rng(f: &IntPolynomial, p: u64) -> ChaCha8Rng {
    // FNV-1a over the coefficient bytes and the prime
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |b: u8| {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    };
    for c in f.coeffs() {
        for b in c.to_signed_bytes_le() {
            eat(b);
        }
        eat(0xff);
    }
    for b in p.to_le_bytes() {
        eat(b);
    }
    ChaCha8Rng::seed_from_u64(h)
}

const CANDIDATE_PRIMES: usize = 8;
const PRIME_SCAN_LIMIT: u64 = 5000;

/// Factors a primitive squarefree polynomial with nonzero constant term.
fn factor_squarefree_z(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.leading().unwrap().clone();

    // Degrees a true factor can have must be subset sums of every pattern.
    let mut allowed = vec![true; n + 1];
    let mut best: Option<(usize, u64)> = None;
    let mut good = 0;
    for p in super::primes_below(PRIME_SCAN_LIMIT).into_iter().filter(|&p| p > 2) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = FpPoly::from_int(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        let ddf = distinct_degree(&fp.monic());
        let count: usize = ddf.iter().map(|(g, d)| g.degree().unwrap() / d).sum();
        if count == 1 {
            return vec![f.clone()];
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for (g, d) in &ddf {
            for _ in 0..g.degree().unwrap() / d {
                for s in (*d..=n).rev() {
                    if sums[s - d] {
                        sums[s] = true;
                    }
                }
            }
        }
        for (a, s) in allowed.iter_mut().zip(&sums) {
            *a &= *s;
        }
        if best.is_none_or(|(c, _)| count < c) {
            best = Some((count, p));
        }
        good += 1;
        if good == CANDIDATE_PRIMES {
            break;
        }
    }
    if !allowed[1..n].iter().any(|&a| a) {
        return vec![f.clone()];
    }
    let (_, p) = best.expect("some prime is good for a squarefree polynomial");

    let fp = FpPoly::from_int(f, p).monic();
    let mut rng = seeded_rng(f, p);
    let modular = factor_squarefree(&fp, &mut rng);

    // p^k > 2 |lc| 2^n ||f||_2 bounds the coefficients of lc times any factor.
    let norm = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lc_inv = lc.extended_gcd(&pk).x;
    let target: Vec<BigInt> = f.coeffs().iter().map(|c| reduce_big(&(c * &lc_inv), &pk)).collect();
    let lifted = lift_tree(&target, &modular, p, k);
    recombine(f, lifted, &pk, &allowed)
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| reduce_big(c, m)).collect()
}

fn lift_tree(target: &[BigInt], us: &[FpPoly], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if us.len() == 1 {
        return vec![target.to_vec()];
    }
    let h = us.len() / 2;
    let prod = |fs: &[FpPoly]| fs.iter().fold(FpPoly::one(p), |acc, f| acc.mul(f));
    let (g, hh) = lift_pair(target, &prod(&us[..h]), &prod(&us[h..]), p, k);
    let mut out = lift_tree(&g, &us[..h], p, k);
    out.extend(lift_tree(&hh, &us[h..], p, k));
    out
}

/// Linear Hensel lifting of `F ≡ g0 h0 (mod p)` to `F ≡ G H (mod p^k)` with
/// `G`, `H` monic.
fn lift_pair(target: &[BigInt], g0: &FpPoly, h0: &FpPoly, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = g0.ext_gcd(h0);
    assert!(one.is_one(), "modular factors must be coprime");
    let to_big = |f: &FpPoly| f.c.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>();
    let (mut g, mut h) = (to_big(g0), to_big(h0));
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let gh = mul_mod(&g, &h, &next);
        let diff: Vec<u64> = target
            .iter()
            .zip(&gh)
            .map(|(a, b)| {
                let d = reduce_big(&(a - b), &next);
                debug_assert!((&d % &pj).is_zero());
                (d / &pj).to_u64().unwrap()
            })
            .collect();
        let e = FpPoly::new(p, diff);
        let (q, r) = e.mul(&t).div_rem(g0);
        let dh = e.mul(&s).add(&q.mul(h0));
        for (i, c) in r.c.iter().enumerate() {
            g[i] += &pj * c;
        }
        for (i, c) in dh.c.iter().enumerate() {
            h[i] += &pj * c;
        }
        pj *= &pb;
    }
    (g, h)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = reduce_big(c, m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(f: &IntPolynomial, mut us: Vec<Vec<BigInt>>, pk: &BigInt, allowed: &[bool]) -> Vec<IntPolynomial> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= us.len() {
        let lc = rest.leading().unwrap().clone();
        let lc_f0 = &lc * rest.coeff(0);
        let mut hit = None;
        let mut subset: Vec<usize> = (0..s).collect();
        loop {
            let deg: usize = subset.iter().map(|&i| us[i].len() - 1).sum();
            if allowed[deg] {
                // constant term first: cheap rejection before the full product
                let c0 = subset.iter().fold(lc.clone(), |acc, &i| reduce_big(&(acc * &us[i][0]), pk));
                let c0 = symmetric(&c0, pk);
                if !c0.is_zero() && (&lc_f0 % &c0).is_zero() {
                    let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| mul_mod(&acc, &us[i], pk));
                    let g = IntPolynomial::new(prod.iter().map(|c| symmetric(c, pk)).collect()).primitive_part();
                    if let Some(q) = rest.div_exact(&g) {
                        hit = Some((subset.clone(), g, q));
                        break;
                    }
                }
            }
            if !next_combination(&mut subset, us.len()) {
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                rest = q;
                for &i in subset.iter().rev() {
                    us.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if rest.degree().is_some_and(|d| d > 0) {
        found.push(rest.primitive_part());
    }
    found
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
