//! Dense exact linear algebra, generic over the scalar type.
//!
//! Row reduction and nullspaces need a [`FieldScalar`]; the characteristic
//! polynomial uses the division-free Berkowitz recurrence and therefore works
//! over any commutative ring, e.g. `BigInt`.

use std::ops::{Index, IndexMut};

use crate::scalar::{FieldScalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert_eq!(self.rows, self.cols, "matrix power of a non-square matrix");
        let mut result = Self::identity(self.rows);
        for _ in 0..exp {
            result = result.mul(self);
        }
        result
    }

    /// `self - c*I`.
    pub fn shift_diagonal(&self, c: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].clone() - c.clone();
        }
        m
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Coefficients of `det(xI - self)`, constant term first.
    ///
    /// Berkowitz's algorithm: no divisions, `O(n^4)` ring operations.
    pub fn char_poly(&self) -> Vec<T> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return vec![T::one()];
        }
        // `v` holds coefficients highest degree first.
        let mut v = vec![T::one(), -self[(0, 0)].clone()];
        for r in 1..n {
            // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
            let mut t = Vec::with_capacity(r + 2);
            t.push(T::one());
            t.push(-self[(r, r)].clone());
            let mut col: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for _ in 0..r {
                let dot = (0..r).fold(T::zero(), |acc, j| acc + self[(r, j)].clone() * col[j].clone());
                t.push(-dot);
                col = (0..r)
                    .map(|i| (0..r).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * col[j].clone()))
                    .collect();
            }
            let mut next = vec![T::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i.min(r) + 1) {
                    *slot = slot.clone() + t[i - j].clone() * vj.clone();
                }
            }
            v = next;
        }
        v.reverse();
        v
    }
}

/// Berkowitz for a non-negative integer matrix in checked `i128`, skipping
/// zero entries. `None` on overflow; callers then fall back to `BigInt`.
pub(crate) fn char_poly_small(a: &[Vec<u64>]) -> Option<Vec<i128>> {
    let n = a.len();
    if n == 0 {
        return Some(vec![1]);
    }
    let entries: Vec<Vec<(usize, i128)>> = a
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, i128::from(v))).collect())
        .collect();
    let at = |i: usize, j: usize| i128::from(a[i][j]);
    let mut v: Vec<i128> = vec![1, -at(0, 0)];
    for r in 1..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(1);
        t.push(-at(r, r));
        let mut col: Vec<i128> = (0..r).map(|i| at(i, r)).collect();
        for _ in 0..r {
            let mut dot = 0i128;
            for &(j, x) in entries[r].iter().take_while(|e| e.0 < r) {
                dot = dot.checked_add(x.checked_mul(col[j])?)?;
            }
            t.push(dot.checked_neg()?);
            let mut next = vec![0i128; r];
            for (i, slot) in next.iter_mut().enumerate() {
                for &(j, x) in entries[i].iter().take_while(|e| e.0 < r) {
                    *slot = slot.checked_add(x.checked_mul(col[j])?)?;
                }
            }
            col = next;
        }
        let mut next = vec![0i128; r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i.min(r) + 1) {
                *slot = slot.checked_add(t[i - j].checked_mul(*vj)?)?;
            }
        }
        v = next;
    }
    v.reverse();
    Some(v)
}

impl<T: FieldScalar> Matrix<T> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = T::one() / m[(row, col)].clone();
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == row || m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in col..m.cols {
                    let d = f.clone() * m[(row, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - d;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[derive(Clone, Debug, PartialEq)]
struct Inequality<T> {
    coeffs: Vec<T>,
    bound: T,
}

impl<T: FieldScalar> Inequality<T> {
    /// Scale so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let s = T::one() / lead.abs();
            for c in &mut self.coeffs {
                *c = c.clone() * s.clone();
            }
            self.bound = self.bound * s;
        }
        self
    }
}

/// Looks for coefficients `y` such that every entry of `sum_j y_j basis[j]`
/// is strictly positive, by Fourier–Motzkin elimination on the system
/// `sum_j y_j basis[j][i] >= 1`.
///
/// Returns the combined vector when one exists.
pub fn positive_combination<T: FieldScalar>(basis: &[Vec<T>]) -> Option<Vec<T>> {
    let d = basis.len();
    let n = basis.first()?.len();
    let original: Vec<Inequality<T>> =
        (0..n).map(|i| Inequality { coeffs: basis.iter().map(|b| b[i].clone()).collect(), bound: T::one() }).collect();
    let mut systems = vec![original];
    for var in (0..d).rev() {
        let current = systems.last().unwrap();
        let mut next: Vec<Inequality<T>> = Vec::new();
        let push = |ineq: Inequality<T>, next: &mut Vec<Inequality<T>>| {
            let ineq = ineq.normalized();
            if !next.contains(&ineq) {
                next.push(ineq);
            }
        };
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for ineq in current {
            let a = &ineq.coeffs[var];
            if a.is_zero() {
                push(ineq.clone(), &mut next);
            } else if a.is_positive() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        for p in &pos {
            for q in &neg {
                let (ap, aq) = (p.coeffs[var].clone(), -q.coeffs[var].clone());
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| aq.clone() * x.clone() + ap.clone() * y.clone())
                    .collect();
                let bound = aq.clone() * p.bound.clone() + ap.clone() * q.bound.clone();
                push(Inequality { coeffs, bound }, &mut next);
            }
        }
        systems.push(next);
    }
    if systems.last().unwrap().iter().any(|ineq| ineq.bound.is_positive()) {
        return None;
    }
    // Back substitution: variable k is bounded by the system in which
    // variables 0..=k are still present.
    let mut y = vec![T::zero(); d];
    for var in 0..d {
        let system = &systems[d - 1 - var];
        let (mut lower, mut upper): (Option<T>, Option<T>) = (None, None);
        for ineq in system {
            let a = ineq.coeffs[var].clone();
            if a.is_zero() {
                continue;
            }
            let rest = (0..var).fold(T::zero(), |acc, j| acc + ineq.coeffs[j].clone() * y[j].clone());
            let limit = (ineq.bound.clone() - rest) / a.clone();
            if a.is_positive() {
                if lower.as_ref().is_none_or(|l| (limit.clone() - l.clone()).is_positive()) {
                    lower = Some(limit);
                }
            } else if upper.as_ref().is_none_or(|u| (u.clone() - limit.clone()).is_positive()) {
                upper = Some(limit);
            }
        }
        y[var] = lower.or(upper).unwrap_or_else(T::zero);
    }
    let v: Vec<T> = (0..n).map(|i| (0..d).fold(T::zero(), |acc, j| acc + y[j].clone() * basis[j][i].clone())).collect();
    debug_assert!(v.iter().all(|x| x.is_positive()));
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Q::from_integer(v)).collect()).collect())
    }

    #[test]
    fn char_poly_small_cases() {
        let a = Matrix::from_rows(vec![vec![0i64, 2], vec![2, 0]]).map(|&v| BigInt::from(v));
        let expect: Vec<BigInt> = [-4, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(a.char_poly(), expect);

        let cycle = Matrix::from_rows(vec![vec![0i64, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(cycle.char_poly(), vec![-1, 0, 0, 1]);

        let tri = Matrix::from_rows(vec![vec![1i64, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]);
        assert_eq!(tri.char_poly(), vec![2, -1, -2, 1]);
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        // Independent route: det(xI - A) at several integer points by
        // Leibniz expansion, compared against the Berkowitz polynomial.
        fn det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            (0..n)
                .map(|c| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &v)| v).collect())
                        .collect();
                    let sign = if c % 2 == 0 { 1 } else { -1 };
                    sign * m[0][c] * det(&minor)
                })
                .sum()
        }
        let a = vec![vec![2, 1, 0, 3], vec![1, 0, 4, 1], vec![0, 2, 1, 1], vec![5, 0, 1, 0]];
        let cp = Matrix::from_rows(a.clone()).char_poly();
        for x in -3..=3 {
            let shifted: Vec<Vec<i64>> =
                (0..4).map(|i| (0..4).map(|j| if i == j { x - a[i][j] } else { -a[i][j] }).collect()).collect();
            let at_x: i64 = cp.iter().rev().fold(0, |acc, c| acc * x + c);
            assert_eq!(at_x, det(&shifted));
        }
    }

    #[test]
    fn small_char_poly_agrees_with_bigint() {
        let a: Vec<Vec<u64>> = vec![vec![2, 1, 0, 3], vec![1, 0, 4, 1], vec![0, 2, 1, 1], vec![5, 0, 1, 0]];
        let big =
            Matrix::from_rows(a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).char_poly();
        let small: Vec<BigInt> = char_poly_small(&a).unwrap().into_iter().map(BigInt::from).collect();
        assert_eq!(small, big);
        assert_eq!(char_poly_small(&[vec![u64::MAX]]), Some(vec![-(u64::MAX as i128), 1]));
        assert_eq!(char_poly_small(&vec![vec![u64::MAX; 3]; 3]), None);
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(|x| *x == Q::from_integer(0)));
        }
        assert_eq!(q(&[&[1, 0], &[0, 1]]).nullspace().len(), 0);
    }

    #[test]
    fn positive_combination_found_and_refuted() {
        let one = Q::from_integer(1);
        let zero = Q::from_integer(0);
        let basis = vec![vec![one, zero, -one], vec![zero, one, one]];
        let v = positive_combination(&basis).unwrap();
        assert!(v.iter().all(|x| *x > zero));

        // Every combination has entries summing to zero: no positive vector.
        let basis = vec![vec![one, -one, zero], vec![zero, one, -one]];
        assert!(positive_combination(&basis).is_none());
    }
}
