//! Per-conductor data for `Q(ζ_n)`: the cyclotomic polynomial, Euler's phi
//! and the prime divisors, computed once per process and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::scalar::{from_i64, Scalar};

#[derive(Debug)]
pub(crate) struct FieldData {
    pub phi: usize,
    /// `Φ_n`, constant term first; monic of degree `phi`.
    pub poly: Vec<i64>,
    pub primes: Vec<usize>,
}

static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FieldData>>>> = OnceLock::new();

pub(crate) fn field(n: usize) -> Arc<FieldData> {
    assert!(n >= 1, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return Arc::clone(f);
    }
    // Computed outside the lock: the recursion below calls back into `field`.
    let data = Arc::new(compute(n));
    cache.lock().unwrap().entry(n).or_insert(data).clone()
}

fn compute(n: usize) -> FieldData {
    let primes = prime_divisors(n);
    // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = exact_div_monic(&num, &field(d).poly);
    }
    FieldData { phi: num.len() - 1, poly: num, primes }
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let q = rem[k];
        if q == 0 {
            continue;
        }
        for (i, c) in den.iter().enumerate() {
            rem[k - dd + i] -= q * c;
        }
        quot[k - dd] = q;
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division left a remainder");
    quot
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
pub(crate) fn euler_phi(n: usize) -> usize {
    field(n).phi
}

/// Reduces a polynomial in `ζ_n` (any length, constant first) modulo `Φ_n`,
/// returning exactly `phi(n)` coordinates.
pub(crate) fn reduce<T: Scalar>(n: usize, mut dense: Vec<T>) -> Vec<T> {
    let f = field(n);
    let phi = f.phi;
    if dense.len() < phi {
        dense.resize(phi, T::zero());
        return dense;
    }
    for k in (phi..dense.len()).rev() {
        if dense[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut dense[k], T::zero());
        for (i, &p) in f.poly[..phi].iter().enumerate() {
            let slot = &mut dense[k - phi + i];
            match p {
                0 => {}
                1 => *slot = slot.clone() - c.clone(),
                -1 => *slot = slot.clone() + c.clone(),
                _ => *slot = slot.clone() - c.clone() * from_i64::<T>(p),
            }
        }
    }
    dense.truncate(phi);
    dense
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Inverse of `a` modulo `m` for coprime inputs (`m == 1` gives 0).
pub(crate) fn inv_mod(a: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible modulo {m}");
    t.rem_euclid(m as i64) as usize
}
