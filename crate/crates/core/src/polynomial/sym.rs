use super::Poly;
use crate::error::{Error, Result};
use crate::Scalar;

/// A symplectic polynomial: monic, palindromic, of even degree `2g ≥ 2`.
///
/// These are exactly the characteristic polynomials of integer symplectic
/// matrices. The coefficients are read off as
/// `x^{2g} + c_1 x^{2g-1} + ... + c_{2g-1} x + c_{2g}` (with `c_{2g} = 1`),
/// and the recipe signs are `t_i = (-1)^i c_i` for `1 ≤ i ≤ 2g-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticPoly<T> {
    poly: Poly<T>,
}

impl<T: Scalar> SymplecticPoly<T> {
    pub fn new(poly: Poly<T>) -> Result<Self> {
        let ok = poly.is_monic()
            && poly.degree().is_some_and(|d| d >= 2 && d % 2 == 0)
            && poly.is_palindromic();
        if ok {
            Ok(SymplecticPoly { poly })
        } else {
            Err(Error::NotSymplectic(poly.to_desc_string()))
        }
    }

    pub fn parse_desc(s: &str) -> Result<Self> {
        Self::new(Poly::parse_desc(s)?)
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<T> {
        self.poly
    }

    pub fn genus(&self) -> usize {
        self.degree() / 2
    }

    pub fn degree(&self) -> usize {
        self.poly.coeffs().len() - 1
    }

    /// `c_i`, the coefficient of `x^{2g-i}`, for `0 ≤ i ≤ 2g` (`c_0 = 1`).
    pub fn c(&self, i: usize) -> T {
        assert!(i <= self.degree(), "c index {i} out of range");
        self.poly.coeff(self.degree() - i)
    }

    /// `[c_1, ..., c_{2g}]`
    pub fn cs(&self) -> Vec<T> {
        (1..=self.degree()).map(|i| self.c(i)).collect()
    }

    /// `t_i = (-1)^i c_i` for `1 ≤ i ≤ 2g-1`.
    pub fn t(&self, i: usize) -> T {
        assert!(
            (1..self.degree()).contains(&i),
            "t index {i} out of range 1..{}",
            self.degree()
        );
        let c = self.c(i);
        if i.is_multiple_of(2) {
            c
        } else {
            -c
        }
    }

    /// `[t_1, ..., t_{2g-1}]`
    pub fn ts(&self) -> Vec<T> {
        (1..self.degree()).map(|i| self.t(i)).collect()
    }
}

/// Symmetrization: `sym(q)(x) = x^{deg q} · q(x + 1/x)`.
///
/// Expanded as `Σ_k a_k x^{g-k} (x^2 + 1)^k` for `q = Σ_k a_k x^k`.
pub fn sym<T: Scalar>(q: &Poly<T>) -> Result<SymplecticPoly<T>> {
    let g = match q.degree() {
        Some(g) if g >= 1 && q.is_monic() => g,
        _ => return Err(Error::NotMonic(q.to_desc_string())),
    };
    let x2_plus_1 = Poly::from_i64s(&[1, 0, 1]);
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for (k, a) in q.coeffs().iter().enumerate() {
        if !a.is_zero() {
            acc = &acc + &power.shift(g - k).scale(a);
        }
        if k < g {
            power = &power * &x2_plus_1;
        }
    }
    SymplecticPoly::new(acc)
}

/// Inverse of [`sym`] on monic polynomials.
///
/// Writes `x^{-g} r(x) = r_g + Σ_{k≥1} r_{g+k} (x^k + x^{-k})` and replaces
/// each `x^k + x^{-k}` by `p_k(y)`, where `p_0 = 2`, `p_1 = y` and
/// `p_k = y p_{k-1} - p_{k-2}`.
pub fn desym<T: Scalar>(r: &SymplecticPoly<T>) -> Poly<T> {
    let g = r.genus();
    let coeffs = r.poly().coeffs();
    let y = Poly::<T>::x();
    let mut prev = Poly::constant(T::one() + T::one());
    let mut cur = y.clone();
    let mut q = Poly::constant(coeffs[g].clone());
    for k in 1..=g {
        if k > 1 {
            let next = &(&y * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        q = &q + &cur.scale(&coeffs[g + k]);
    }
    debug_assert!(q.is_monic());
    q
}

/// Convenience for raw polynomials: rejects non-symplectic input.
pub fn desym_poly<T: Scalar>(r: &Poly<T>) -> Result<Poly<T>> {
    Ok(desym(&SymplecticPoly::new(r.clone())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;
    use num_bigint::BigInt;

    fn p(asc: &[i64]) -> IntPoly {
        IntPoly::from_i64s(asc)
    }

    #[test]
    fn sym_of_x() {
        assert_eq!(sym(&p(&[0, 1])).unwrap().poly(), &p(&[1, 0, 1]));
    }

    #[test]
    fn sym_of_genus_two_quadratic() {
        for (a, b) in [(1, 1), (-3, 7), (0, 2), (5, -4)] {
            let h = p(&[b - 2, a, 1]);
            assert_eq!(sym(&h).unwrap().poly(), &p(&[1, a, b, a, 1]));
        }
    }

    #[test]
    fn worked_seed() {
        let r = sym(&p(&[3, 6, 1])).unwrap();
        assert_eq!(r.poly(), &p(&[1, 6, 5, 6, 1]));
        let ts: Vec<BigInt> = [-6, 5, -6].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(r.ts(), ts);
        assert_eq!(r.c(4), BigInt::from(1));
    }

    #[test]
    fn sym_rejects_non_monic() {
        assert!(matches!(sym(&p(&[1, 2])), Err(Error::NotMonic(_))));
        assert!(sym(&p(&[1])).is_err());
        assert!(sym(&IntPoly::zero()).is_err());
    }

    #[test]
    fn desym_examples() {
        let r = SymplecticPoly::new(p(&[1, 0, 1])).unwrap();
        assert_eq!(desym(&r), p(&[0, 1]));
        let r = SymplecticPoly::new(p(&[1, 6, 5, 6, 1])).unwrap();
        assert_eq!(desym(&r), p(&[3, 6, 1]));
        for (a, b) in [(2, 9), (-1, 1), (0, 0)] {
            let r = SymplecticPoly::new(p(&[1, a, b, a, 1])).unwrap();
            assert_eq!(desym(&r), p(&[b - 2, a, 1]));
        }
    }

    #[test]
    fn desym_rejects_bad_input() {
        assert!(desym_poly(&p(&[3, 6, 1])).is_err());
        assert!(desym_poly(&p(&[1, 2, 3, 1])).is_err());
        assert!(desym_poly(&p(&[2, 1, 2])).is_err());
        assert!(desym_poly(&p(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn coefficient_transfer() {
        // coefficient of x^{g-1} in q equals c_1 and c_{2g-1}
        let q = p(&[7, -2, 0, 11, 1]);
        let r = sym(&q).unwrap();
        assert_eq!(r.c(1), BigInt::from(11));
        assert_eq!(r.c(7), BigInt::from(11));
    }

    #[test]
    fn root_correspondence() {
        // every root ζ of sym(q) has ζ + 1/ζ equal to a root of q
        let q = p(&[1, -3, 1]);
        let r = sym(&q).unwrap();
        assert_eq!(r.poly(), &p(&[1, -3, 3, -3, 1]));
        let q_roots = [(3.0 + 5f64.sqrt()) / 2.0, (3.0 - 5f64.sqrt()) / 2.0];
        let zs = crate::symplectic::spectral::roots(r.poly());
        assert_eq!(zs.len(), 4);
        for z in zs {
            let s = z + 1.0 / z;
            assert!(q_roots.iter().any(|&t| (s - t).norm() < 1e-9), "{z}");
        }
    }
}
