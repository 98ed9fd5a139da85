use num_integer::Integer;
use serde_json::{json, Value};

use super::cyclotomic::is_cyclotomic_product;
use super::irreducible::{decide_irreducible, is_prime, Decision, Irreducibility};
use super::sym::{desym, sym, SymplecticPoly};
use super::Poly;
use crate::error::{Error, Result};
use crate::Scalar;

/// Default cap on divisor combinations for Kronecker's search.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Largest `k ≥ 1` with `r ∈ Z[x^k]`: the gcd of the nonconstant exponents
/// carrying a nonzero coefficient (1 for constants).
pub fn power_index<T: Scalar>(r: &Poly<T>) -> usize {
    r.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .fold(0usize, |acc, (k, _)| acc.gcd(&k))
        .max(1)
}

/// Outcome of the three hypotheses of the homological criterion on a
/// symplectic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport<T> {
    /// Symplectic irreducibility, decided on `desym(r)`.
    pub irreducibility: Irreducibility<T>,
    /// Whether `r` is a product of cyclotomic polynomials.
    pub cyclotomic: bool,
    /// The `Φ_n` indices when `cyclotomic` holds.
    pub cyclotomic_witness: Vec<u64>,
    pub power_index: usize,
    pub verdict: Decision,
    /// Seed-level constraint violations and other remarks.
    pub notes: Vec<String>,
}

impl<T: Scalar> CriterionReport<T> {
    pub fn symp_irreducible(&self) -> Decision {
        self.irreducibility.decision()
    }

    fn combine(
        irreducibility: Irreducibility<T>,
        cyclotomic: bool,
        witness: Vec<u64>,
        k: usize,
    ) -> Self {
        let irr = irreducibility.decision();
        let verdict = if irr == Decision::Refuted || cyclotomic || k > 1 {
            Decision::Refuted
        } else if irr == Decision::Proven {
            Decision::Proven
        } else {
            Decision::Inconclusive
        };
        CriterionReport {
            irreducibility,
            cyclotomic,
            cyclotomic_witness: witness,
            power_index: k,
            verdict,
            notes: Vec::new(),
        }
    }

    /// The failing hypothesis, if any, in a fixed priority order.
    pub fn reason(&self) -> &'static str {
        if self.power_index > 1 {
            "power index > 1"
        } else if self.cyclotomic {
            "cyclotomic"
        } else if self.symp_irreducible() == Decision::Refuted {
            "symplectically reducible"
        } else if self.verdict == Decision::Inconclusive {
            "inconclusive"
        } else {
            "criterion satisfied"
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "irreducible": self.symp_irreducible().as_str(),
            "irreducible_witness": self.irreducibility.witness(),
            "cyclotomic": self.cyclotomic,
            "cyclotomic_witness": self.cyclotomic_witness,
            "power_index": self.power_index,
            "verdict": self.verdict.as_str(),
            "notes": self.notes,
        })
    }
}

/// Runs the homological criterion on a symplectic polynomial.
pub fn check_criterion<T: Scalar>(
    r: &SymplecticPoly<T>,
    budget: u64,
) -> Result<CriterionReport<T>> {
    let q = desym(r);
    let irreducibility = decide_irreducible(&q, budget)?;
    let cyc = is_cyclotomic_product(r.poly())?;
    let k = power_index(r.poly());
    Ok(CriterionReport::combine(
        irreducibility,
        cyc.is_product,
        cyc.factors,
        k,
    ))
}

/// `q(x) = x^g + a_{g-1} p x^{g-1} + ... + a_0 p` (or without the factor
/// `p` when no prime is given).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedPoly<T> {
    genus: usize,
    /// `a_0, ..., a_{g-1}`
    a: Vec<T>,
    prime: Option<T>,
}

impl<T: Scalar> SeedPoly<T> {
    /// Structural validation only: `g ≥ 2`, `g` coefficients, `a_0 ≠ 0`
    /// and a prime `p` when one is given. The growth and divisibility
    /// hypotheses are checked by [`SeedPoly::constraint_violations`].
    pub fn new(genus: usize, a: Vec<T>, prime: Option<T>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidSeed(format!("genus {genus} < 2")));
        }
        if a.len() != genus {
            return Err(Error::InvalidSeed(format!(
                "expected {genus} coefficients a_0..a_{}, got {}",
                genus - 1,
                a.len()
            )));
        }
        if a[0].is_zero() {
            return Err(Error::InvalidSeed("a_0 = 0 makes q divisible by x".into()));
        }
        if let Some(p) = &prime {
            if !is_prime(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
        }
        Ok(SeedPoly { genus, a, prime })
    }

    /// Takes coefficients in the command-line order `a_{g-1}, ..., a_0`.
    pub fn from_desc(genus: usize, desc: &[T], prime: Option<T>) -> Result<Self> {
        Self::new(genus, desc.iter().rev().cloned().collect(), prime)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn prime(&self) -> Option<&T> {
        self.prime.as_ref()
    }

    pub fn poly(&self) -> Poly<T> {
        let p = self.prime.clone().unwrap_or_else(T::one);
        let mut coeffs: Vec<T> = self.a.iter().map(|a| a.clone() * p.clone()).collect();
        coeffs.push(T::one());
        Poly::new(coeffs)
    }

    /// Violations of the hypotheses that guarantee certification.
    pub fn constraint_violations(&self) -> Vec<String> {
        let g = self.genus;
        let bound = T::from_small(2 * g as i64);
        let top = self.a[g - 1].clone();
        let mut out = Vec::new();
        match &self.prime {
            Some(p) => {
                if self.a[0].is_multiple_of(p) {
                    out.push(format!("p = {p} divides a_0 = {}", self.a[0]));
                }
                if (top.clone() * p.clone()).abs() <= bound {
                    out.push(format!(
                        "|a_{} p| = {} is not > 2g = {bound}",
                        g - 1,
                        (top * p.clone()).abs()
                    ));
                }
            }
            None => {
                if top.abs() <= bound {
                    out.push(format!(
                        "|a_{}| = {} is not > 2g = {bound}",
                        g - 1,
                        top.abs()
                    ));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "seed",
            "genus": self.genus,
            "prime": self.prime.as_ref().map(super::int_json),
            "coeffs_desc": self.a.iter().rev().map(super::int_json).collect::<Vec<_>>(),
            "q": self.poly().to_json(),
        })
    }
}

/// Symmetrizes a seed and runs the criterion on the result.
///
/// When the seed violates its growth or divisibility hypotheses the
/// violations are recorded in the report's notes and a `proven` verdict is
/// downgraded to `inconclusive`; refutations are kept.
pub fn seed_to_symplectic<T: Scalar>(
    seed: &SeedPoly<T>,
    budget: u64,
) -> Result<(SymplecticPoly<T>, CriterionReport<T>)> {
    let r = sym(&seed.poly())?;
    let mut report = check_criterion(&r, budget)?;
    let violations = seed.constraint_violations();
    if !violations.is_empty() {
        if report.verdict == Decision::Proven {
            report.verdict = Decision::Inconclusive;
            report
                .notes
                .push("seed hypotheses fail; recipe guarantee does not apply".into());
        }
        report.notes.extend(violations);
    }
    Ok((r, report))
}
