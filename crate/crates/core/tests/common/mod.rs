//! Independent reference implementations used as test oracles. Nothing
//! here calls into the library's algorithms; polynomials are plain
//! ascending `i128` coefficient vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use pacert::{IntMatrix, IntPoly};

pub type P = Vec<i128>;

pub fn trim(mut p: P) -> P {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(a: &[i128], b: &[i128]) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn add(a: &[i128], b: &[i128]) -> P {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

pub fn scale(a: &[i128], k: i128) -> P {
    trim(a.iter().map(|x| x * k).collect())
}

/// Exact division by a monic divisor; panics on a nonzero remainder.
pub fn div_exact(a: &[i128], d: &[i128]) -> P {
    assert_eq!(*d.last().unwrap(), 1);
    let mut rem = a.to_vec();
    if rem.len() < d.len() {
        assert!(trim(rem).is_empty());
        return Vec::new();
    }
    let mut q = vec![0i128; rem.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + d.len() - 1];
        q[k] = c;
        for (j, dj) in d.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    assert!(trim(rem).is_empty(), "inexact division");
    trim(q)
}

pub fn mobius(n: u64) -> i128 {
    let (mut m, mut k, mut mu) = (n, 2u64, 1i128);
    while k * k <= m {
        if m % k == 0 {
            m /= k;
            if m % k == 0 {
                return 0;
            }
            mu = -mu;
        }
        k += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

/// `Φ_n = ∏_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_oracle(n: u64) -> P {
    let mut num: P = vec![1];
    let mut den: P = vec![1];
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mut xd = vec![0i128; d as usize + 1];
        xd[0] = -1;
        xd[d as usize] = 1;
        match mobius(n / d) {
            1 => num = mul(&num, &xd),
            -1 => den = mul(&den, &xd),
            _ => {}
        }
    }
    // den is monic up to sign; normalize
    if *den.last().unwrap() < 0 {
        den = scale(&den, -1);
        num = scale(&num, -1);
    }
    let q = div_exact(&num, &den);
    if *q.last().unwrap() < 0 {
        scale(&q, -1)
    } else {
        q
    }
}

/// Every product of cyclotomic polynomials of total degree `1..=max_deg`.
pub fn cyclotomic_products(max_deg: usize) -> BTreeSet<P> {
    let table: Vec<P> = (1..=64u64)
        .map(cyclotomic_oracle)
        .filter(|p| p.len() - 1 <= max_deg)
        .collect();
    let mut out = BTreeSet::new();
    fn go(table: &[P], start: usize, cur: P, max_deg: usize, out: &mut BTreeSet<P>) {
        for (k, phi) in table.iter().enumerate().skip(start) {
            let next = mul(&cur, phi);
            if next.len() - 1 <= max_deg {
                out.insert(next.clone());
                go(table, k, next, max_deg, out);
            }
        }
    }
    go(&table, 0, vec![1], max_deg, &mut out);
    out
}

/// `det(xI - M)` by cofactor expansion along the first row, over
/// polynomial entries.
pub fn cofactor_charpoly(m: &[Vec<i64>]) -> P {
    let n = m.len();
    let entries: Vec<Vec<P>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -(m[i][j] as i128);
                    if i == j {
                        trim(vec![c, 1])
                    } else {
                        trim(vec![c])
                    }
                })
                .collect()
        })
        .collect();
    det(&entries)
}

fn det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: P = Vec::new();
    for j in 0..n {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = mul(&m[0][j], &det(&minor));
        acc = add(&acc, &if j % 2 == 0 { term } else { scale(&term, -1) });
    }
    acc
}

pub fn to_int_poly(p: &[i128]) -> IntPoly {
    IntPoly::new(p.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn from_int_poly(p: &IntPoly) -> P {
    p.coeffs()
        .iter()
        .map(|c| i128::try_from(c).expect("coefficient fits in i128"))
        .collect()
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.rows()
        .map(|row| {
            row.iter()
                .map(|c| i64::try_from(c).expect("entry fits in i64"))
                .collect()
        })
        .collect()
}

/// `x^g q(x + 1/x)` by direct expansion over Laurent exponents.
pub fn sym_oracle(q: &[i128]) -> P {
    let g = q.len() - 1;
    // (x + 1/x)^k x^g = Σ_j C(k, j) x^{g + k - 2j}
    let mut out = vec![0i128; 2 * g + 1];
    for (k, &a) in q.iter().enumerate() {
        let mut binom = 1i128;
        for j in 0..=k {
            out[g + k - 2 * j] += a * binom;
            binom = binom * (k - j) as i128 / (j as i128 + 1);
        }
    }
    trim(out)
}
