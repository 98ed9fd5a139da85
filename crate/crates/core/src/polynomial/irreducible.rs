use super::Poly;
use crate::error::{Error, Result};
use crate::Scalar;

/// Largest trial divisor used when factoring integers. Values whose
/// cofactor is not fully resolved below this bound are treated as
/// unfactorable by the callers.
const TRIAL_DIVISION_LIMIT: u64 = 2_000_000;

/// Tri-state outcome of a decision procedure that may run out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Proven,
    Refuted,
    Inconclusive,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Proven => "proven",
            Decision::Refuted => "refuted",
            Decision::Inconclusive => "inconclusive",
        }
    }
}

/// Irreducibility verdict over `Z` together with its evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility<T> {
    /// Degree one.
    Linear,
    /// Eisenstein's criterion holds at this prime.
    Eisenstein(T),
    /// Kronecker's search found no factor of degree `≤ deg/2`.
    Exhaustive,
    /// A nontrivial monic factor.
    Factor(Poly<T>),
    Inconclusive(String),
}

impl<T: Scalar> Irreducibility<T> {
    pub fn decision(&self) -> Decision {
        match self {
            Irreducibility::Linear | Irreducibility::Eisenstein(_) | Irreducibility::Exhaustive => {
                Decision::Proven
            }
            Irreducibility::Factor(_) => Decision::Refuted,
            Irreducibility::Inconclusive(_) => Decision::Inconclusive,
        }
    }

    /// Short human-readable description of the evidence.
    pub fn witness(&self) -> String {
        match self {
            Irreducibility::Linear => "degree 1".into(),
            Irreducibility::Eisenstein(p) => format!("eisenstein:{p}"),
            Irreducibility::Exhaustive => "kronecker:exhaustive".into(),
            Irreducibility::Factor(f) => format!("factor:{}", f.to_desc_string()),
            Irreducibility::Inconclusive(why) => format!("inconclusive:{why}"),
        }
    }
}

pub fn is_prime<T: Scalar>(n: &T) -> bool {
    let two = T::from_small(2);
    if *n < two {
        return false;
    }
    let mut d = two;
    while d.clone() * d.clone() <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Distinct prime divisors of `|n|` found by trial division, and whether the
/// factorization is complete. Returns an empty, complete list for `n = ±1`
/// and an empty, incomplete list for `n = 0`.
pub fn prime_divisors<T: Scalar>(n: &T) -> (Vec<T>, bool) {
    let mut m = n.abs();
    if m.is_zero() {
        return (Vec::new(), false);
    }
    let mut primes = Vec::new();
    let mut d = T::from_small(2);
    let limit = T::from_u64(TRIAL_DIVISION_LIMIT).expect("scalar too narrow");
    while d.clone() * d.clone() <= m {
        if d > limit {
            primes.push(m);
            return (primes, false);
        }
        if m.is_multiple_of(&d) {
            while m.is_multiple_of(&d) {
                m = m / d.clone();
            }
            primes.push(d.clone());
        }
        d = d + T::one();
    }
    if m > T::one() {
        primes.push(m);
    }
    (primes, true)
}

/// Positive divisors of a nonzero integer, or `None` if `|n|` is too large to
/// factor by trial division.
fn positive_divisors<T: Scalar>(n: &T) -> Option<Vec<T>> {
    let (primes, complete) = prime_divisors(n);
    if !complete {
        return None;
    }
    let mut m = n.abs();
    let mut divs = vec![T::one()];
    for p in primes {
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m = m / p.clone();
            e += 1;
        }
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = T::one();
            for _ in 0..=e {
                next.push(d.clone() * pk.clone());
                pk = pk * p.clone();
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Eisenstein's criterion at `p` for a monic polynomial: `p` divides every
/// non-leading coefficient and `p^2` does not divide the constant term.
pub fn eisenstein_witness<T: Scalar>(q: &Poly<T>, p: &T) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !q.is_monic() {
        return Err(Error::NotMonic(q.to_desc_string()));
    }
    let coeffs = q.coeffs();
    let lower = &coeffs[..coeffs.len() - 1];
    if lower.is_empty() {
        return Ok(false);
    }
    let p2 = p.clone() * p.clone();
    Ok(lower.iter().all(|c| c.is_multiple_of(p)) && !coeffs[0].is_multiple_of(&p2))
}

/// Kronecker's factor search for a monic polynomial.
///
/// For each candidate degree `d ≤ deg/2` the polynomial is evaluated at
/// `d + 1` integer nodes; every choice of signed divisors of those values is
/// interpolated (Newton form, exact integer division) and trial-divided.
/// `budget` caps the total number of divisor combinations examined; when it
/// would be exceeded the result is [`Irreducibility::Inconclusive`].
pub fn kronecker_irreducible<T: Scalar>(q: &Poly<T>, budget: u64) -> Result<Irreducibility<T>> {
    let g = match q.degree() {
        Some(g) if g >= 1 && q.is_monic() => g,
        _ => return Err(Error::NotMonic(q.to_desc_string())),
    };
    if g == 1 {
        return Ok(Irreducibility::Linear);
    }
    if q.constant_term().is_zero() {
        return Ok(Irreducibility::Factor(Poly::x()));
    }

    // candidate nodes 0, 1, -1, 2, -2, ...
    let node_count = g + 4;
    let mut nodes: Vec<(T, T)> = Vec::with_capacity(node_count);
    for k in 0..node_count as i64 {
        let x = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        let x = T::from_small(x);
        let v = q.eval(&x);
        if v.is_zero() {
            let root_factor = Poly::new(vec![-x, T::one()]);
            return Ok(Irreducibility::Factor(root_factor));
        }
        nodes.push((x, v));
    }
    let mut with_divisors = Vec::with_capacity(nodes.len());
    for (x, v) in nodes {
        match positive_divisors(&v) {
            Some(divs) => with_divisors.push((x, divs)),
            None => {
                return Ok(Irreducibility::Inconclusive(format!(
                    "value {v} at node {x} too large to factor"
                )))
            }
        }
    }
    // fewest divisors first keeps the search small
    with_divisors.sort_by_key(|(_, d)| d.len());

    let mut spent: u64 = 0;
    for d in 1..=g / 2 {
        let chosen = &with_divisors[..d + 1];
        let combos = chosen.iter().try_fold(1u64, |acc, (_, divs)| {
            acc.checked_mul(2 * divs.len() as u64)
        });
        let combos = match combos {
            Some(c) if spent.saturating_add(c) <= budget => c,
            _ => {
                return Ok(Irreducibility::Inconclusive(format!(
                    "budget {budget} exhausted at factor degree {d}"
                )))
            }
        };
        spent += combos;
        if let Some(f) = search_degree(q, chosen, d) {
            return Ok(Irreducibility::Factor(f));
        }
    }
    Ok(Irreducibility::Exhaustive)
}

fn search_degree<T: Scalar>(q: &Poly<T>, chosen: &[(T, Vec<T>)], d: usize) -> Option<Poly<T>> {
    let xs: Vec<T> = chosen.iter().map(|(x, _)| x.clone()).collect();
    let radices: Vec<usize> = chosen.iter().map(|(_, divs)| 2 * divs.len()).collect();
    let mut digits = vec![0usize; chosen.len()];
    loop {
        let values: Vec<T> = digits
            .iter()
            .zip(chosen)
            .map(|(&k, (_, divs))| {
                let v = divs[k / 2].clone();
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        if let Some(cand) = interpolate(&xs, &values) {
            if cand.degree() == Some(d) {
                let lead = cand.leading().cloned().unwrap_or_else(T::zero);
                if lead.abs().is_one() {
                    let monic = if lead.is_negative() { -cand } else { cand };
                    if q.exact_div_monic(&monic).is_some() {
                        return Some(monic);
                    }
                }
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return None;
            }
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Newton interpolation through `(xs[k], ys[k])`. Returns `None` when a
/// divided difference is not an integer, which rules out any integer
/// polynomial through these points.
fn interpolate<T: Scalar>(xs: &[T], ys: &[T]) -> Option<Poly<T>> {
    let n = xs.len();
    let mut dd: Vec<T> = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let num = dd[k].clone() - dd[k - 1].clone();
            let den = xs[k].clone() - xs[k - level].clone();
            let (quot, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                return None;
            }
            dd[k] = quot;
        }
    }
    // Horner on the Newton form
    let mut acc = Poly::constant(dd[n - 1].clone());
    for k in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[k].clone(), T::one()]);
        acc = &(&acc * &lin) + &Poly::constant(dd[k].clone());
    }
    Some(acc)
}

/// Full irreducibility decision for a monic polynomial: Eisenstein at every
/// prime dividing the constant term, then Kronecker's search.
pub fn decide_irreducible<T: Scalar>(q: &Poly<T>, budget: u64) -> Result<Irreducibility<T>> {
    if !q.is_monic() {
        return Err(Error::NotMonic(q.to_desc_string()));
    }
    if q.degree() == Some(1) {
        return Ok(Irreducibility::Linear);
    }
    let (primes, _) = prime_divisors(&q.constant_term());
    for p in primes {
        if is_prime(&p) && eisenstein_witness(q, &p)? {
            return Ok(Irreducibility::Eisenstein(p));
        }
    }
    kronecker_irreducible(q, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;
    use num_bigint::BigInt;

    fn p(asc: &[i64]) -> IntPoly {
        IntPoly::from_i64s(asc)
    }
    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn eisenstein_examples() {
        assert!(eisenstein_witness(&p(&[3, 6, 1]), &b(3)).unwrap());
        assert!(!eisenstein_witness(&p(&[9, 6, 1]), &b(3)).unwrap());
        assert!(!eisenstein_witness(&p(&[1, 1, 1]), &b(2)).unwrap());
        assert!(matches!(
            eisenstein_witness(&p(&[3, 6, 1]), &b(6)),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(
            kronecker_irreducible(&p(&[1, 1, 1]), 1000).unwrap(),
            Irreducibility::Exhaustive
        );
        assert_eq!(
            kronecker_irreducible(&p(&[0, 1, 1]), 1000).unwrap(),
            Irreducibility::Factor(p(&[0, 1]))
        );
        assert_eq!(
            kronecker_irreducible(&p(&[-1, 5, 1]), 1000)
                .unwrap()
                .decision(),
            Decision::Proven
        );
    }

    #[test]
    fn kronecker_finds_quadratic_factors() {
        // (x^2+x+1)(x^2+3x-5) has no rational roots
        let f = &p(&[1, 1, 1]) * &p(&[-5, 3, 1]);
        match kronecker_irreducible(&f, 1_000_000).unwrap() {
            Irreducibility::Factor(g) => {
                assert!(g == p(&[1, 1, 1]) || g == p(&[-5, 3, 1]));
            }
            other => panic!("expected a factor, got {other:?}"),
        }
        // x^4 + 1 is irreducible
        assert_eq!(
            kronecker_irreducible(&p(&[1, 0, 0, 0, 1]), 1_000_000).unwrap(),
            Irreducibility::Exhaustive
        );
    }

    #[test]
    fn kronecker_budget_exhaustion_is_inconclusive() {
        let f = p(&[720720, 1, 0, 0, 1]);
        let r = kronecker_irreducible(&f, 3).unwrap();
        assert_eq!(r.decision(), Decision::Inconclusive);
    }

    #[test]
    fn kronecker_rejects_non_monic() {
        assert!(kronecker_irreducible(&p(&[1, 2]), 10).is_err());
    }

    #[test]
    fn primes() {
        let ps: Vec<i64> = (0..30).filter(is_prime).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(&b(-360)), (vec![b(2), b(3), b(5)], true));
        assert_eq!(positive_divisors(&b(12)).unwrap().len(), 6);
    }

    #[test]
    fn interpolation_through_integer_points() {
        let f = p(&[-5, 3, 1]);
        let xs = [b(0), b(1), b(-1)];
        let ys: Vec<BigInt> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys).unwrap(), f);
        assert!(interpolate(&[b(0), b(2)], &[b(0), b(1)]).is_none());
    }

    #[test]
    fn decide_prefers_eisenstein() {
        assert_eq!(
            decide_irreducible(&p(&[3, 6, 1]), 10).unwrap(),
            Irreducibility::Eisenstein(b(3))
        );
    }
}
