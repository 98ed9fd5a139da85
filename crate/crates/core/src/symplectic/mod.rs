//! Integer symplectic matrices and the factored companion matrix.
//!
//! The symplectic form is
//!
//! ```text
//! J = [  0  0 ...  0  1 ]
//!     [  0  0 ... -1  0 ]
//!     [      ...        ]
//!     [ -1  0 ...  0  0 ]
//! ```
//!
//! with `J[i][2g-i+1] = (-1)^{i+1}`, and `A` is symplectic when
//! `Aᵀ J A = J`. A row operation "add `k` times row `j` to row `i`" is the
//! matrix `I + k E_{ij}`.

mod matrix;
pub mod spectral;

use std::fmt;

use serde_json::{json, Value};

pub use matrix::{charpoly, Matrix};
pub use spectral::{spectral_radius_estimate, SpectralEstimate};

use crate::error::{Error, Result};
use crate::polynomial::{int_json, SymplecticPoly};
use crate::Scalar;

fn check_index(g: usize, i: usize) -> Result<()> {
    if (1..=2 * g).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            max: 2 * g,
        })
    }
}

fn check_pair(g: usize, i: usize, j: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::ZeroGenus);
    }
    check_index(g, i)?;
    check_index(g, j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(())
}

fn sign<T: Scalar>(odd: bool) -> T {
    if odd {
        -T::one()
    } else {
        T::one()
    }
}

/// The involution `i ↦ 2g - i + 1` pairing `e_i` with its dual.
pub fn sigma(g: usize, i: usize) -> Result<usize> {
    check_index(g, i)?;
    Ok(2 * g - i + 1)
}

/// The `2g × 2g` symplectic form.
pub fn j_form<T: Scalar>(g: usize) -> Matrix<T> {
    let n = 2 * g;
    let mut j = Matrix::zero(n);
    for i in 1..=n {
        j.set(i, n - i + 1, sign(i % 2 == 0));
    }
    j
}

/// `Aᵀ J A = J`. Errors on odd dimension.
pub fn is_symplectic<T: Scalar>(m: &Matrix<T>) -> Result<bool> {
    if !m.dim().is_multiple_of(2) {
        return Err(Error::OddDimension(m.dim()));
    }
    let j = j_form(m.dim() / 2);
    Ok(&(&m.transpose() * &j) * m == j)
}

/// `I + k E_{ij}` in dimension `n`: adds `k` times row `j` to row `i`.
pub fn row_addition<T: Scalar>(n: usize, i: usize, j: usize, k: T) -> Matrix<T> {
    let mut m = Matrix::<T>::identity(n);
    let cur = m.get(i, j).clone();
    m.set(i, j, cur + k);
    m
}

/// `N_{i,j}`: the row operation `(e_i, e_j) ↦ (-e_j, e_i)`.
pub fn n_matrix<T: Scalar>(n: usize, i: usize, j: usize) -> Matrix<T> {
    let mut m = Matrix::identity(n);
    m.set(i, i, T::zero());
    m.set(j, j, T::zero());
    m.set(i, j, -T::one());
    m.set(j, i, T::one());
    m
}

/// `SE_{i,j}^power`.
///
/// For `i = σ(j)` this is the single row operation `e_i ↦ e_i + e_j`;
/// otherwise it is paired with `e_{σ(j)} ↦ e_{σ(j)} + (-1)^{i+j+1} e_{σ(i)}`.
/// The nilpotent part squares to zero, so the power scales the
/// off-diagonal entries.
pub fn elementary_se<T: Scalar>(g: usize, i: usize, j: usize, power: T) -> Result<Matrix<T>> {
    check_pair(g, i, j)?;
    let n = 2 * g;
    let (si, sj) = (sigma(g, i)?, sigma(g, j)?);
    let mut m = row_addition(n, i, j, power.clone());
    if i != sj {
        let s: T = sign((i + j).is_multiple_of(2));
        let cur = m.get(sj, si).clone();
        m.set(sj, si, cur + s * power);
    }
    Ok(m)
}

/// `W_{i,j}`: `N_{i,j}` when `i = σ(j)`, else `N_{i,j} N_{σ(j),σ(i)}`.
///
/// For `i` and `j` of equal parity the second rotation is taken as
/// `N_{σ(i),σ(j)}` so that the result stays symplectic.
pub fn perm_w<T: Scalar>(g: usize, i: usize, j: usize) -> Result<Matrix<T>> {
    check_pair(g, i, j)?;
    let n = 2 * g;
    let (si, sj) = (sigma(g, i)?, sigma(g, j)?);
    let nij = n_matrix(n, i, j);
    Ok(if i == sj {
        nij
    } else if (i + j) % 2 == 1 {
        &nij * &n_matrix(n, sj, si)
    } else {
        // same parity: the dual rotation must run the other way to
        // preserve the form
        &nij * &n_matrix(n, si, sj)
    })
}

/// Diagonal matrix negating `e_j` and `e_{σ(j)}`; symplectic and of order 2.
pub fn handle_negation<T: Scalar>(g: usize, j: usize) -> Result<Matrix<T>> {
    let sj = sigma(g, j)?;
    let mut d = Matrix::identity(2 * g);
    d.set(j, j, -T::one());
    d.set(sj, sj, -T::one());
    Ok(d)
}

/// `W_{i,j}` with the columns `j` and `σ(j)` negated, i.e. `W_{i,j} D_j`.
pub fn perm_w_flipped<T: Scalar>(g: usize, i: usize, j: usize) -> Result<Matrix<T>> {
    Ok(&perm_w(g, i, j)? * &handle_negation(g, j)?)
}

/// Companion matrix `A_q`: first row `-c_1, ..., -c_{2g}`, ones on the
/// subdiagonal.
pub fn companion<T: Scalar>(r: &SymplecticPoly<T>) -> Matrix<T> {
    let n = r.degree();
    let mut m = Matrix::zero(n);
    for (k, c) in r.cs().into_iter().enumerate() {
        m.set(1, k + 1, -c);
    }
    for i in 2..=n {
        m.set(i, i - 1, T::one());
    }
    m
}

/// `Y_i = X_i N_i`, where `X_i = I + t_i E_{i,i+1}` and `N_i = N_{i,i+1}`.
/// The ordered product `Y_1 ⋯ Y_{2g-1}` is the companion matrix.
pub fn y_factor<T: Scalar>(r: &SymplecticPoly<T>, i: usize) -> Matrix<T> {
    let n = r.degree();
    assert!((1..n).contains(&i), "Y index {i} out of range 1..{n}");
    &row_addition(n, i, i + 1, r.t(i)) * &n_matrix(n, i, i + 1)
}

/// One factor of a structured symplectic product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor<T> {
    /// `SE_{i,j}^exponent`
    Se { i: usize, j: usize, exponent: T },
    /// `W_{i,j}`
    W { i: usize, j: usize },
    /// `W_{i,j}` with columns `j`, `σ(j)` negated.
    WFlipped { i: usize, j: usize },
}

impl<T: Scalar> Factor<T> {
    pub fn matrix(&self, g: usize) -> Result<Matrix<T>> {
        match self {
            Factor::Se { i, j, exponent } => elementary_se(g, *i, *j, exponent.clone()),
            Factor::W { i, j } => perm_w(g, *i, *j),
            Factor::WFlipped { i, j } => perm_w_flipped(g, *i, *j),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Factor::Se { i, j, exponent } => {
                json!({ "kind": "SE", "i": i, "j": j, "exponent": int_json(exponent) })
            }
            Factor::W { i, j } => json!({ "kind": "W", "i": i, "j": j }),
            Factor::WFlipped { i, j } => json!({ "kind": "W'", "i": i, "j": j }),
        }
    }
}

impl<T: Scalar> fmt::Display for Factor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Se { i, j, exponent } => write!(f, "SE({i},{j})^{exponent}"),
            Factor::W { i, j } => write!(f, "W({i},{j})"),
            Factor::WFlipped { i, j } => write!(f, "W'({i},{j})"),
        }
    }
}

/// An ordered product of elementary symplectic factors in genus `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorSpec<T> {
    pub genus: usize,
    pub factors: Vec<Factor<T>>,
}

impl<T: Scalar> FactorSpec<T> {
    pub fn evaluate(&self) -> Result<Matrix<T>> {
        let mats = self
            .factors
            .iter()
            .map(|f| f.matrix(self.genus))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::product(2 * self.genus, &mats))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "text": self.to_string(),
            "factors": self.factors.iter().map(Factor::to_json).collect::<Vec<_>>(),
        })
    }
}

impl<T: Scalar> fmt::Display for FactorSpec<T> {
    /// `SE(1,2)^-6 . W(1,2) . SE(2,3)^5 . W(2,3)`; `I` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "I");
        }
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " . ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Checks that `order` is a permutation of `1..=g`.
pub fn validate_order(g: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; g + 1];
    let ok = order.len() == g
        && order.iter().all(|&k| {
            let fresh = (1..=g).contains(&k) && !seen[k];
            if fresh {
                seen[k] = true;
            }
            fresh
        });
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidOrder(order.to_vec(), g))
    }
}

/// The factored conjugate of the companion matrix,
/// `B_q = SE_{1,2}^{t_1} W_{1,2} ⋯ SE_{g,g+1}^{t_g} W_{g,g+1}`,
/// together with its evaluated product.
///
/// Each block `SE_{i,i+1}^{t_i} W_{i,i+1}` equals `Y_i Y_{2g-i}` (or `Y_g`
/// for `i = g`), which uses `t_{2g-i} = t_i` for palindromic input. The
/// symplectic-polynomial type already guarantees constant term 1.
pub fn factored_bq<T: Scalar>(r: &SymplecticPoly<T>) -> (FactorSpec<T>, Matrix<T>) {
    let order: Vec<usize> = (1..=r.genus()).collect();
    factored_bq_ordered(r, &order).expect("canonical order is valid")
}

/// As [`factored_bq`], with the `g` blocks multiplied in the given order (a
/// permutation of `1..=g`).
pub fn factored_bq_ordered<T: Scalar>(
    r: &SymplecticPoly<T>,
    order: &[usize],
) -> Result<(FactorSpec<T>, Matrix<T>)> {
    let g = r.genus();
    validate_order(g, order)?;
    let factors = order
        .iter()
        .flat_map(|&i| {
            [
                Factor::Se {
                    i,
                    j: i + 1,
                    exponent: r.t(i),
                },
                Factor::W { i, j: i + 1 },
            ]
        })
        .collect();
    let spec = FactorSpec { genus: g, factors };
    let product = spec.evaluate()?;
    Ok((spec, product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, IntPoly};
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }
    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn j_form_examples() {
        assert_eq!(j_form::<BigInt>(1), m(&[&[0, 1], &[-1, 0]]));
        assert_eq!(
            j_form::<BigInt>(2),
            m(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]])
        );
        for g in 1..=6 {
            let j = j_form::<BigInt>(g);
            assert_eq!(&j * &j, IntMatrix::identity(2 * g).neg());
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(2, 1).unwrap(), 4);
        assert_eq!(sigma(2, 2).unwrap(), 3);
        for g in 1..=5 {
            for i in 1..=2 * g {
                assert_eq!(sigma(g, sigma(g, i).unwrap()).unwrap(), i);
            }
        }
        assert!(sigma(2, 0).is_err());
        assert!(sigma(2, 5).is_err());
    }

    #[test]
    fn se_matches_genus_two_display() {
        let a = 7;
        assert_eq!(
            elementary_se(2, 1, 2, b(-a)).unwrap(),
            m(&[&[1, -a, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, -a], &[0, 0, 0, 1]])
        );
        assert_eq!(
            elementary_se(2, 2, 3, b(4)).unwrap(),
            m(&[&[1, 0, 0, 0], &[0, 1, 4, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
        assert!(elementary_se(2, 1, 2, b(0)).unwrap().is_identity());
        assert!(matches!(
            elementary_se(2, 2, 2, b(1)),
            Err(Error::EqualIndices(2))
        ));
    }

    #[test]
    fn se_power_is_matrix_power() {
        for (i, j) in [(1, 2), (2, 3), (1, 5), (4, 2)] {
            let one = elementary_se(3, i, j, b(1)).unwrap();
            assert_eq!(elementary_se(3, i, j, b(4)).unwrap(), one.pow(4));
        }
    }

    #[test]
    fn w_matches_genus_two_display() {
        assert_eq!(
            perm_w::<BigInt>(2, 1, 2).unwrap(),
            m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])
        );
        assert_eq!(
            perm_w::<BigInt>(2, 2, 3).unwrap(),
            m(&[&[1, 0, 0, 0], &[0, 0, -1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
        );
        // sign-flipped variants shown next to them
        assert_eq!(
            perm_w_flipped::<BigInt>(2, 1, 2).unwrap(),
            m(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, -1, 0]])
        );
        assert_eq!(
            perm_w_flipped::<BigInt>(2, 2, 3).unwrap(),
            m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, -1, 0, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn w_has_order_four() {
        for g in 2..=4 {
            for i in 1..=2 * g {
                for j in 1..=2 * g {
                    if i != j {
                        let w = perm_w::<BigInt>(g, i, j).unwrap();
                        assert!(w.pow(4).is_identity());
                        assert!(!w.pow(2).is_identity());
                        assert!(is_symplectic(&w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn symplecticity() {
        assert!(is_symplectic(&IntMatrix::identity(4)).unwrap());
        assert!(is_symplectic(&j_form::<BigInt>(3)).unwrap());
        assert!(!is_symplectic(&m(&[&[2, 0], &[0, 1]])).unwrap());
        assert!(matches!(
            is_symplectic(&IntMatrix::identity(3)),
            Err(Error::OddDimension(3))
        ));
        for g in 1..=5 {
            for i in 1..=2 * g {
                for j in 1..=2 * g {
                    if i == j {
                        continue;
                    }
                    for k in -5..=5 {
                        assert!(is_symplectic(&elementary_se(g, i, j, b(k)).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn companion_genus_two() {
        let r = SymplecticPoly::new(IntPoly::from_i64s(&[1, 3, -2, 3, 1])).unwrap();
        let a = companion(&r);
        assert_eq!(
            a,
            m(&[
                &[-3, 2, -3, -1],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0]
            ])
        );
        assert_eq!(charpoly(&a), *r.poly());
        assert_eq!(a.det(), b(1));
        // the companion matrix itself is generally not symplectic
        assert!(!is_symplectic(&a).unwrap());
    }

    #[test]
    fn companion_is_ordered_y_product() {
        let r = SymplecticPoly::new(IntPoly::from_i64s(&[1, 8, 7, 22, 7, 8, 1])).unwrap();
        let ys: Vec<IntMatrix> = (1..6).map(|i| y_factor(&r, i)).collect();
        assert_eq!(Matrix::product(6, &ys), companion(&r));
    }

    #[test]
    fn bq_genus_two() {
        let r = SymplecticPoly::new(IntPoly::from_i64s(&[1, 6, 5, 6, 1])).unwrap();
        let (spec, bq) = factored_bq(&r);
        assert_eq!(spec.to_string(), "SE(1,2)^-6 . W(1,2) . SE(2,3)^5 . W(2,3)");
        assert!(is_symplectic(&bq).unwrap());
        assert_eq!(charpoly(&bq), *r.poly());
        assert_eq!(bq.det(), b(1));
    }

    #[test]
    fn order_validation() {
        assert!(validate_order(3, &[3, 1, 2]).is_ok());
        assert!(validate_order(3, &[1, 1, 2]).is_err());
        assert!(validate_order(3, &[1, 2]).is_err());
        assert!(validate_order(3, &[0, 1, 2]).is_err());
    }
}
