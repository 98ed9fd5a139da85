use std::collections::BTreeMap;

use super::Poly;
use crate::error::{Error, Result};
use crate::Scalar;

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Memo of cyclotomic polynomials, built by exact division of `x^n - 1`
/// by `Φ_d` for the proper divisors `d` of `n`.
#[derive(Debug, Default)]
pub struct CyclotomicTable<T> {
    table: BTreeMap<u64, Poly<T>>,
}

impl<T: Scalar> CyclotomicTable<T> {
    pub fn new() -> Self {
        CyclotomicTable {
            table: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, n: u64) -> &Poly<T> {
        assert!(n >= 1, "cyclotomic index must be positive");
        if !self.table.contains_key(&n) {
            for d in divisors(n) {
                if self.table.contains_key(&d) {
                    continue;
                }
                let mut phi = &Poly::monomial(T::one(), d as usize) - &Poly::one();
                for e in divisors(d).into_iter().filter(|&e| e < d) {
                    phi = phi
                        .exact_div_monic(&self.table[&e])
                        .expect("x^d - 1 is divisible by Φ_e for e | d");
                }
                self.table.insert(d, phi);
            }
        }
        &self.table[&n]
    }
}

/// The `n`-th cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_poly<T: Scalar>(n: u64) -> Poly<T> {
    CyclotomicTable::new().get(n).clone()
}

/// Result of [`is_cyclotomic_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicTest {
    pub is_product: bool,
    /// Indices `n` of the `Φ_n` factors, with multiplicity, ascending. Only
    /// meaningful when `is_product` holds.
    pub factors: Vec<u64>,
}

/// Decides whether a monic polynomial is a product of cyclotomic
/// polynomials.
///
/// Every `Φ_n` with `φ(n) ≤ deg r` is tried by repeated exact division. Since
/// `φ(n) ≥ √(n/2)`, scanning `n ≤ 8·deg²` cannot miss a candidate.
pub fn is_cyclotomic_product<T: Scalar>(r: &Poly<T>) -> Result<CyclotomicTest> {
    if !r.is_monic() {
        return Err(Error::NotMonic(r.to_desc_string()));
    }
    if r.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm(r.to_desc_string()));
    }
    let deg = r.degree().unwrap_or(0) as u64;
    let mut rest = r.clone();
    let mut factors = Vec::new();
    let mut table = CyclotomicTable::new();
    for n in 1..=8 * deg * deg {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if remaining == 0 {
            break;
        }
        if totient(n) > remaining {
            continue;
        }
        let phi = table.get(n);
        while let Some(q) = rest.exact_div_monic(phi) {
            rest = q;
            factors.push(n);
        }
    }
    let is_product = rest == Poly::one();
    Ok(CyclotomicTest {
        is_product,
        factors: if is_product { factors } else { Vec::new() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn p(asc: &[i64]) -> IntPoly {
        IntPoly::from_i64s(asc)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(
            cyclotomic_poly::<i64>(1),
            crate::Poly64::from_i64s(&[-1, 1])
        );
        assert_eq!(
            cyclotomic_poly::<num_bigint::BigInt>(5),
            p(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            cyclotomic_poly::<num_bigint::BigInt>(8),
            p(&[1, 0, 0, 0, 1])
        );
        assert_eq!(
            cyclotomic_poly::<num_bigint::BigInt>(10),
            p(&[1, -1, 1, -1, 1])
        );
        // Φ_105 famously has a coefficient -2
        let phi105 = cyclotomic_poly::<i64>(105);
        assert_eq!(phi105.degree(), Some(48));
        assert!(phi105.coeffs().contains(&-2));
    }

    #[test]
    fn totients() {
        let t: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(t, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn detector_examples() {
        let t = is_cyclotomic_product(&p(&[1, 0, 0, 0, 1])).unwrap();
        assert!(t.is_product);
        assert_eq!(t.factors, vec![8]);
        let t = is_cyclotomic_product(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(t.factors, vec![5]);
        assert!(
            !is_cyclotomic_product(&p(&[1, 6, 5, 6, 1]))
                .unwrap()
                .is_product
        );
        // (x-1)^2 (x^2+x+1)
        let t = is_cyclotomic_product(&p(&[1, -1, 0, -1, 1])).unwrap();
        assert_eq!(t.factors, vec![1, 1, 3]);
    }

    #[test]
    fn detector_rejects_zero_constant() {
        assert!(matches!(
            is_cyclotomic_product(&p(&[0, 1, 1])),
            Err(Error::ZeroConstantTerm(_))
        ));
    }
}
