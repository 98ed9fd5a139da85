use std::fmt;
use std::ops::Mul;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polynomial::{int_json, Poly};
use crate::Scalar;

/// Dense square matrix over an exact integer ring.
///
/// Matrices act on column vectors; `(A * B) v = A (B v)`. Public accessors
/// are 1-based to match the usual `e_1, ..., e_n` labelling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            data.extend(row);
        }
        Ok(Matrix { n, data })
    }

    /// Panics on ragged input; meant for literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_small(v)).collect())
                .collect(),
        )
        .expect("square matrix literal")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.n + c]
    }

    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.n + c]
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.at(i - 1, j - 1)
    }

    /// Sets the entry in row `i`, column `j` (1-based).
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        *self.at_mut(i - 1, j - 1) = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.at(i, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        let v = out.at_mut(r, c);
                        *v = v.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product of a sequence of matrices, in order. `n` is the dimension of
    /// the empty product.
    pub fn product<'a, I>(n: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        T: 'a,
    {
        factors
            .into_iter()
            .fold(Self::identity(n), |acc, m| &acc * m)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                (0..self.n).fold(T::zero(), |acc, c| {
                    acc + self.at(r, c).clone() * v[c].clone()
                })
            })
            .collect()
    }

    pub fn det(&self) -> T {
        let cp = charpoly(self);
        let c0 = cp.constant_term();
        if self.n.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// `{"dim": n, "rows": [[...], ...]}`
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .rows()
            .map(|r| r.iter().map(int_json).collect())
            .collect();
        json!({ "dim": self.n, "rows": rows })
    }
}

impl<'a, T: Scalar> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on a dimension mismatch; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Scalar> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.n.max(1)))
            .finish()
    }
}

/// Characteristic polynomial `det(xI - M)` by Berkowitz's algorithm.
///
/// Division-free, so it is exact over any commutative ring. Works on the
/// leading principal submatrices: if `M_r = [[M_{r-1}, C], [R, a]]` then the
/// coefficient vector of `M_r` is a lower-triangular Toeplitz matrix with
/// first column `(1, -a, -RC, -R M_{r-1} C, ..., -R M_{r-1}^{r-2} C)`
/// applied to that of `M_{r-1}`.
pub fn charpoly<T: Scalar>(m: &Matrix<T>) -> Poly<T> {
    let n = m.dim();
    // descending coefficients of the current leading block
    let mut desc: Vec<T> = vec![T::one()];
    for r in 0..n {
        let a = m.at(r, r).clone();
        let mut column = Vec::with_capacity(r + 2);
        column.push(T::one());
        column.push(-a);
        // v = C (entries 0..r of column r), then repeatedly v = M_{r-1} v
        let mut v: Vec<T> = (0..r).map(|i| m.at(i, r).clone()).collect();
        for step in 0..r {
            let rc = (0..r).fold(T::zero(), |acc, j| acc + m.at(r, j).clone() * v[j].clone());
            column.push(-rc);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| acc + m.at(i, j).clone() * v[j].clone())
                    })
                    .collect();
            }
        }
        // Toeplitz (r+2) x (r+1) times desc (length r+1)
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i)).fold(T::zero(), |acc, j| {
                    if i - j < column.len() {
                        acc + column[i - j].clone() * desc[j].clone()
                    } else {
                        acc
                    }
                })
            })
            .collect();
        desc = next;
    }
    Poly::from_desc(&desc)
}
