//! Floating-point spectral radius, for diagnostics only.

use num_complex::Complex64;

use serde_json::{json, Value};

use super::{charpoly, Matrix};
use crate::polynomial::Poly;
use crate::Scalar;

const MAX_ITERATIONS: usize = 2000;

/// Largest root modulus of a characteristic polynomial, with a residual
/// bound. Never certified: the bound assumes exact floating evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralEstimate {
    pub value: f64,
    pub error: f64,
}

impl SpectralEstimate {
    pub fn to_json(&self) -> Value {
        json!({ "value": self.value, "error": self.error, "certified": false })
    }
}

fn eval(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    // value and derivative by Horner, coefficients ascending
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial by Aberth–Ehrlich iteration.
///
/// Returns an empty vector for constants.
pub fn roots<T: Scalar>(p: &Poly<T>) -> Vec<Complex64> {
    let lead = match p.leading() {
        Some(l) => l.to_f64().unwrap_or(f64::NAN),
        None => return Vec::new(),
    };
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN) / lead)
        .collect();
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    // Cauchy bound for the initial circle
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.5 + 0.1, theta)
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (pv, dpv) = eval(&coeffs, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        1.0 / d
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Radius of a disc around `z` that contains a root of the degree-`n`
/// polynomial: the smaller of `n |p/p'|` and `|p|^{1/n}` (monic `p`).
fn inclusion_radius(coeffs: &[f64], z: Complex64) -> f64 {
    let n = (coeffs.len() - 1) as f64;
    let (p, dp) = eval(coeffs, z);
    let newton = if dp.norm() > 0.0 {
        n * p.norm() / dp.norm()
    } else {
        f64::INFINITY
    };
    newton.min(p.norm().powf(1.0 / n))
}

fn content<T: Scalar>(p: &Poly<T>) -> T {
    p.coeffs().iter().fold(T::zero(), |acc, c| acc.gcd(c))
}

fn primitive<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    let c = content(p);
    let mut q = Poly::new(p.coeffs().iter().map(|v| v.clone() / c.clone()).collect());
    if q.leading().is_some_and(|l| l.is_negative()) {
        q = -q;
    }
    q
}

fn derivative<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_small(k as i64))
            .collect(),
    )
}

/// Gcd over `Z[x]` by the primitive remainder sequence, normalized to a
/// positive leading coefficient.
fn poly_gcd<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    while !b.is_zero() {
        let lb = b.leading().cloned().expect("nonzero");
        let db = b.degree().expect("nonzero");
        let mut r = a.clone();
        while r.degree().is_some_and(|d| d >= db) {
            let lr = r.leading().cloned().expect("nonzero");
            let shift = r.degree().expect("nonzero") - db;
            r = &r.scale(&lb) - &b.shift(shift).scale(&lr);
        }
        a = b;
        b = if r.is_zero() { r } else { primitive(&r) };
    }
    a
}

/// `p / gcd(p, p')` for monic `p`; same roots, all simple.
fn squarefree_part<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    let g = poly_gcd(p, &derivative(p));
    if g.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    p.exact_div_monic(&g)
        .expect("gcd of a monic polynomial divides it")
}

/// Estimate of the spectral radius of `m` from the roots of its exact
/// characteristic polynomial.
pub fn spectral_radius_estimate<T: Scalar>(m: &Matrix<T>) -> SpectralEstimate {
    poly_root_radius(&charpoly(m))
}

/// Largest root modulus of a monic polynomial with an error bound.
pub fn poly_root_radius<T: Scalar>(p: &Poly<T>) -> SpectralEstimate {
    let p = if p.is_monic() {
        squarefree_part(p)
    } else {
        p.clone()
    };
    let p = &p;
    let zs = roots(p);
    if zs.is_empty() {
        return SpectralEstimate {
            value: 0.0,
            error: 0.0,
        };
    }
    let lead = p.leading().and_then(|l| l.to_f64()).unwrap_or(1.0);
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN) / lead)
        .collect();
    let value = zs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let error = zs
        .iter()
        .map(|&z| inclusion_radius(&coeffs, z))
        .fold(0.0, f64::max)
        + value * f64::EPSILON * 4.0;
    SpectralEstimate { value, error }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, IntPoly};

    #[test]
    fn golden_companion() {
        let m = IntMatrix::from_i64_rows(&[&[3, -1], &[1, 0]]);
        let est = spectral_radius_estimate(&m);
        let exact = (3.0 + 5f64.sqrt()) / 2.0;
        assert!((est.value - exact).abs() < 1e-9);
        assert!(est.error < 1e-9);
    }

    #[test]
    fn identity_has_radius_one() {
        let est = spectral_radius_estimate(&IntMatrix::identity(4));
        assert!((est.value - 1.0).abs() < 1e-12, "{est:?}");
        assert!((est.value - 1.0).abs() <= est.error);
    }

    #[test]
    fn squarefree_reduction() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let a = IntPoly::from_i64s(&[-1, 1]).pow(3);
        let b = IntPoly::from_i64s(&[2, 1]).pow(2);
        let c = IntPoly::from_i64s(&[1, 0, 1]);
        let p = &(&a * &b) * &c;
        let expected = &(&IntPoly::from_i64s(&[-1, 1]) * &IntPoly::from_i64s(&[2, 1])) * &c;
        assert_eq!(squarefree_part(&p), expected);
        let est = poly_root_radius(&p);
        assert!((est.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn roots_of_quartic() {
        let p = IntPoly::from_i64s(&[1, 6, 5, 6, 1]);
        let zs = roots(&p);
        assert_eq!(zs.len(), 4);
        let coeffs = [1.0, 6.0, 5.0, 6.0, 1.0];
        for z in zs {
            assert!(eval(&coeffs, z).0.norm() < 1e-8);
        }
        let est = poly_root_radius(&p);
        // the outermost root satisfies ζ + 1/ζ = -3 - √6
        let s = -3.0 - 6f64.sqrt();
        let zeta = (s - (s * s - 4.0).sqrt()) / 2.0;
        assert!((est.value - zeta.abs()).abs() < 1e-9);
    }
}
