//! Integral fast path for character arithmetic.
//!
//! Character values are algebraic integers, so their power-basis coordinates
//! are integers. All values of a table are lifted into one ambient ring
//! `Z[x]/(x^n - 1)` with `n` the lcm of the conductors, where products are
//! cyclic convolutions of short term lists. Reduction modulo `Φ_n` happens
//! once per accumulated sum, which keeps inner products cheap enough for
//! sweeps over whole tables. Any overflow or non-integral input makes the
//! caller fall back to generic [`Cyclotomic`] arithmetic.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::cyclotomic::{field, lcm, reduce};
use crate::{Cyclotomic, Rational};

/// Terms `(exponent mod n, coefficient)` of an unreduced ambient element.
pub(crate) type Sparse = Vec<(u32, i128)>;

/// Operands below this bound multiply without overflowing `i128`.
const LIMIT: u128 = 1 << 62;

#[derive(Debug)]
pub(crate) struct Ambient {
    pub n: usize,
    sizes: Vec<i128>,
    order: i128,
    /// `rows[i][c]` is `χ_i(c)`.
    pub rows: Vec<Vec<Sparse>>,
    /// `size(c) · conj(χ_i(c))`, the right-hand factor of a pairing with `χ_i`.
    weighted_duals: Vec<Vec<Sparse>>,
}

impl Ambient {
    pub fn build(sizes: &[u64], order: u64, characters: &[Vec<Cyclotomic>]) -> Option<Ambient> {
        let n = characters.iter().flatten().map(Cyclotomic::conductor).fold(1, lcm);
        let mut amb = Ambient {
            n,
            sizes: sizes.iter().map(|&s| s as i128).collect(),
            order: order as i128,
            rows: Vec::new(),
            weighted_duals: Vec::new(),
        };
        amb.rows = characters.iter().map(|row| amb.lift_all(row)).collect::<Option<Vec<_>>>()?;
        amb.weighted_duals = amb
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&amb.sizes)
                    .map(|(v, &size)| {
                        v.iter()
                            .map(|&(e, c)| {
                                Some((
                                    (n as u32 - e) % n as u32,
                                    size.checked_mul(c).filter(|w| w.unsigned_abs() < LIMIT)?,
                                ))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Option<_>>()?;
        Some(amb)
    }

    pub fn lift(&self, x: &Cyclotomic) -> Option<Sparse> {
        if self.n % x.conductor() != 0 {
            return None;
        }
        let step = self.n / x.conductor();
        let mut dense = vec![0i128; self.n];
        for (k, c) in x.terms() {
            if !c.denom().is_one() {
                return None;
            }
            dense[k * step] = c.numer().to_i128()?;
        }
        self.sparsify(&mut dense)?;
        Some(dense.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(e, c)| (e as u32, c)).collect())
    }

    /// For each prime `p | n` the terms `x^{e + j n/p}`, `0 ≤ j < p`, sum to
    /// zero in `Q(ζ_n)`. Shifting each such coset by its most common value
    /// never adds terms and turns power-basis values like `ζ^{p-1}` back into
    /// single monomials.
    fn sparsify(&self, dense: &mut [i128]) -> Option<()> {
        for &p in &field(self.n).primes {
            let stride = self.n / p;
            for e in 0..stride {
                let mut counts: Vec<(i128, usize)> = Vec::new();
                for j in 0..p {
                    let v = dense[e + j * stride];
                    match counts.iter_mut().find(|c| c.0 == v) {
                        Some(c) => c.1 += 1,
                        None => counts.push((v, 1)),
                    }
                }
                let (mode, hits) = counts.iter().copied().max_by_key(|c| (c.1, c.0 == 0)).unwrap_or((0, 0));
                let zeros = counts.iter().find(|c| c.0 == 0).map_or(0, |c| c.1);
                if mode != 0 && hits > zeros {
                    for j in 0..p {
                        let slot = &mut dense[e + j * stride];
                        *slot = slot.checked_sub(mode)?;
                    }
                }
            }
        }
        Some(())
    }

    pub fn lift_all(&self, values: &[Cyclotomic]) -> Option<Vec<Sparse>> {
        values.iter().map(|v| self.lift(v)).collect()
    }

    pub fn mul(&self, a: &Sparse, b: &Sparse) -> Option<Sparse> {
        let n = self.n as u32;
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for &(i, x) in a {
            for &(j, y) in b {
                terms.push(((i + j) % n, x.checked_mul(y)?));
            }
        }
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Sparse = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = last.1.checked_add(c)?,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Some(out)
    }

    pub fn mul_all(&self, a: &[Sparse], b: &[Sparse]) -> Option<Vec<Sparse>> {
        a.iter().zip(b).map(|(x, y)| self.mul(x, y)).collect()
    }

    /// Adds `scale · a · conj(b)` into `acc`.
    fn accumulate(&self, acc: &mut [i128], a: &Sparse, b: &Sparse, scale: i128) -> Option<()> {
        let n = self.n as u32;
        for &(e, x) in a {
            let sx = scale.checked_mul(x)?;
            if sx.unsigned_abs() >= LIMIT {
                return None;
            }
            for &(f, y) in b {
                if y.unsigned_abs() >= LIMIT {
                    return None;
                }
                let slot = &mut acc[(if e >= f { e - f } else { e + n - f }) as usize];
                // Both factors are below 2^62, so the product fits.
                *slot = slot.checked_add(sx * y)?;
            }
        }
        Some(())
    }

    fn pairing_coords(&self, f: &[Sparse], g: &[Sparse]) -> Option<Vec<i128>> {
        let mut acc = vec![0i128; self.n];
        for ((fc, gc), &size) in f.iter().zip(g).zip(&self.sizes) {
            self.accumulate(&mut acc, fc, gc, size)?;
        }
        Some(reduce(self.n, acc))
    }

    /// `(1/|G|) Σ_c size(c) f(c) conj(g(c))`.
    pub fn pairing(&self, f: &[Sparse], g: &[Sparse]) -> Option<Cyclotomic> {
        Some(self.finish(self.pairing_coords(f, g)?, self.order))
    }

    /// `⟨f, χ_j⟩` when it is a non-negative integer; `None` otherwise or on
    /// overflow.
    pub fn multiplicity(&self, f: &[Sparse], j: usize) -> Option<u64> {
        let n = self.n as u32;
        let mut acc = vec![0i128; self.n];
        for (fc, gc) in f.iter().zip(&self.weighted_duals[j]) {
            for &(e, x) in fc {
                if x.unsigned_abs() >= LIMIT {
                    return None;
                }
                for &(d, y) in gc {
                    let k = e + d;
                    let slot = &mut acc[(if k >= n { k - n } else { k }) as usize];
                    // Both factors are below 2^62, so the product fits.
                    *slot = slot.checked_add(x * y)?;
                }
            }
        }
        let coords = reduce(self.n, acc);
        if coords[1..].iter().any(|&c| c != 0) || coords[0] < 0 || coords[0] % self.order != 0 {
            return None;
        }
        u64::try_from(coords[0] / self.order).ok()
    }

    /// `Σ_i χ_i(c) conj(χ_i(d))` over all rows.
    pub fn column_pairing(&self, c: usize, d: usize) -> Option<Cyclotomic> {
        let mut acc = vec![0i128; self.n];
        for row in &self.rows {
            self.accumulate(&mut acc, &row[c], &row[d], 1)?;
        }
        Some(self.finish(reduce(self.n, acc), 1))
    }

    /// Canonical reduced coordinates in `Q(ζ_n)`, usable as a hash key.
    pub fn reduced(&self, s: &Sparse) -> Vec<i128> {
        let mut dense = vec![0i128; self.n];
        for &(e, c) in s {
            dense[e as usize] += c;
        }
        reduce(self.n, dense)
    }

    fn finish(&self, coords: Vec<i128>, denom: i128) -> Cyclotomic {
        if coords[1..].iter().all(|&c| c == 0) {
            return Cyclotomic::from_scalar(Rational::new(BigInt::from(coords[0]), BigInt::from(denom)));
        }
        let d = BigInt::from(denom);
        Cyclotomic::from_dense(self.n, coords.into_iter().map(|c| Rational::new(BigInt::from(c), d.clone())).collect())
    }
}
