//! End-to-end certification: polynomial in, pseudo-Anosov coset out.
//!
//! A [`Certificate`] bundles the criterion report, the factored matrix,
//! the twist word and the consistency checks tying them together. Its
//! verdict is `certified-pA-coset` only when the criterion is proven and
//! every exact check passes.

mod genus2;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

pub use genus2::{
    flipped_spec, genus2_criterion, genus2_word, Genus2Params, Genus2Reason, SignVariant,
};

use crate::error::{Error, Result};
use crate::homology::{recipe_word, MCWord};
use crate::polynomial::{
    check_criterion, seed_to_symplectic, CriterionReport, Decision, SeedPoly, SymplecticPoly,
    DEFAULT_BUDGET,
};
use crate::symplectic::spectral::poly_root_radius;
use crate::symplectic::{
    charpoly, companion, factored_bq_ordered, is_symplectic, FactorSpec, Matrix, SpectralEstimate,
};
use crate::Scalar;

/// Statement attached to every certificate.
pub const COSET_NOTE: &str =
    "the verdict applies to every element of the coset f·I(S), where f is \
     the word below and I(S) is the Torelli group; the word is one representative";

/// What was fed to the pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertInput<T> {
    Seed(SeedPoly<T>),
    Symplectic(SymplecticPoly<T>),
    Genus2(Genus2Params<T>, SignVariant),
}

impl<T: Scalar> CertInput<T> {
    pub fn to_json(&self) -> Value {
        match self {
            CertInput::Seed(s) => s.to_json(),
            CertInput::Symplectic(r) => json!({
                "kind": "symplectic",
                "genus": r.genus(),
                "r": r.poly().to_json(),
            }),
            CertInput::Genus2(p, variant) => json!({
                "kind": "genus2",
                "a": crate::polynomial::int_json(&p.a),
                "b": crate::polynomial::int_json(&p.b),
                "sign_variant": variant.as_str(),
            }),
        }
    }
}

impl<T: Scalar> fmt::Display for CertInput<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertInput::Seed(s) => {
                let coeffs: Vec<String> = s.a().iter().rev().map(|c| c.to_string()).collect();
                write!(f, "seed genus {} coeffs {}", s.genus(), coeffs.join(","))?;
                if let Some(p) = s.prime() {
                    write!(f, " prime {p}")?;
                }
                Ok(())
            }
            CertInput::Symplectic(r) => write!(f, "polynomial {}", r.poly().to_desc_string()),
            CertInput::Genus2(p, v) => {
                write!(f, "genus2 a={} b={} ({} signs)", p.a, p.b, v.as_str())
            }
        }
    }
}

/// Knobs for [`certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Kronecker divisor-combination budget.
    pub budget: u64,
    /// Block order, a permutation of `1..=g`; canonical when `None`.
    pub order: Option<Vec<usize>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: DEFAULT_BUDGET,
            order: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    CertifiedPaCoset,
    Refuted,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedPaCoset => "certified-pA-coset",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl FromStr for Verdict {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "certified-pA-coset" => Ok(Verdict::CertifiedPaCoset),
            "refuted" => Ok(Verdict::Refuted),
            "inconclusive" => Ok(Verdict::Inconclusive),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact consistency checks between the polynomial, matrix and word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    /// The factored matrix is symplectic.
    pub symplectic: bool,
    /// The factored matrix (and the companion matrix, on the recipe path)
    /// has characteristic polynomial `r`.
    pub charpoly: bool,
    /// `Ψ(word)` equals the factored matrix.
    pub psi: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.symplectic && self.charpoly && self.psi
    }

    pub fn to_json(&self) -> Value {
        json!({ "symplectic": self.symplectic, "charpoly": self.charpoly, "psi": self.psi })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<T> {
    pub input: CertInput<T>,
    pub polynomial: SymplecticPoly<T>,
    pub criterion: CriterionReport<T>,
    pub factor_spec: FactorSpec<T>,
    pub matrix: Matrix<T>,
    pub word: MCWord<T>,
    pub checks: Checks,
    pub spectral_radius: SpectralEstimate,
    pub verdict: Verdict,
}

impl<T: Scalar> Certificate<T> {
    /// Assembles a certificate and derives its verdict.
    fn assemble(
        input: CertInput<T>,
        polynomial: SymplecticPoly<T>,
        criterion: CriterionReport<T>,
        factor_spec: FactorSpec<T>,
        matrix: Matrix<T>,
        word: MCWord<T>,
        checks: Checks,
    ) -> Self {
        let verdict = match criterion.verdict {
            Decision::Proven if checks.all() => Verdict::CertifiedPaCoset,
            Decision::Refuted => Verdict::Refuted,
            _ => Verdict::Inconclusive,
        };
        let spectral_radius = poly_root_radius(polynomial.poly());
        Certificate {
            input,
            polynomial,
            criterion,
            factor_spec,
            matrix,
            word,
            checks,
            spectral_radius,
            verdict,
        }
    }

    pub fn genus(&self) -> usize {
        self.polynomial.genus()
    }

    pub fn surface_model(&self) -> String {
        format!("genus {}, at most one boundary component", self.genus())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.to_json(),
            "polynomial": self.polynomial.poly().to_json(),
            "criterion": self.criterion.to_json(),
            "factor_spec": self.factor_spec.to_json(),
            "matrix": self.matrix.to_json(),
            "word": self.word.to_json(),
            "checks": self.checks.to_json(),
            "spectral_radius": self.spectral_radius.to_json(),
            "verdict": self.verdict.as_str(),
            "reason": self.criterion.reason(),
            "coset_note": COSET_NOTE,
            "surface": self.surface_model(),
            "version": env!("CARGO_PKG_VERSION"),
        })
    }
}

impl<T: Scalar> fmt::Display for Certificate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.criterion;
        writeln!(f, "verdict:         {} ({})", self.verdict, c.reason())?;
        writeln!(f, "input:           {}", self.input)?;
        writeln!(f, "surface:         {}", self.surface_model())?;
        writeln!(
            f,
            "polynomial:      {}",
            self.polynomial.poly().to_desc_string()
        )?;
        writeln!(
            f,
            "irreducible:     {} [{}]",
            c.symp_irreducible().as_str(),
            c.irreducibility.witness()
        )?;
        let witness: Vec<String> = c.cyclotomic_witness.iter().map(u64::to_string).collect();
        writeln!(
            f,
            "cyclotomic:      {} [{}]",
            c.cyclotomic,
            witness.join(",")
        )?;
        writeln!(f, "power index:     {}", c.power_index)?;
        for note in &c.notes {
            writeln!(f, "note:            {note}")?;
        }
        writeln!(f, "factor spec:     {}", self.factor_spec)?;
        writeln!(f, "matrix:")?;
        for line in self.matrix.to_string().lines() {
            writeln!(f, "  {line}")?;
        }
        writeln!(f, "word:            {}", self.word)?;
        writeln!(
            f,
            "checks:          symplectic={} charpoly={} psi={}",
            self.checks.symplectic, self.checks.charpoly, self.checks.psi
        )?;
        writeln!(
            f,
            "spectral radius: {} ± {:e} (not certified)",
            self.spectral_radius.value, self.spectral_radius.error
        )?;
        writeln!(f, "coset:           {COSET_NOTE}")?;
        write!(f, "version:         {}", env!("CARGO_PKG_VERSION"))
    }
}

/// Runs the full pipeline on a seed, a symplectic polynomial or a genus-2
/// parameter pair.
///
/// On the recipe path the word is `B_1^{t_1} H_1 ⋯ B_g^{t_g} H_g` (in the
/// requested block order) and the matrix is the matching factored `B_q`.
pub fn certify<T: Scalar>(input: CertInput<T>, options: &Options) -> Result<Certificate<T>> {
    let (r, report) = match &input {
        CertInput::Seed(seed) => seed_to_symplectic(seed, options.budget)?,
        CertInput::Symplectic(r) => (r.clone(), check_criterion(r, options.budget)?),
        CertInput::Genus2(p, variant) => {
            if options.order.is_some() {
                return Err(Error::Parse(
                    "block order is not supported for the genus-2 word".into(),
                ));
            }
            return Ok(genus2_word(p, *variant, options.budget)?.1);
        }
    };
    let order: Vec<usize> = options
        .order
        .clone()
        .unwrap_or_else(|| (1..=r.genus()).collect());
    let (spec, bq) = factored_bq_ordered(&r, &order)?;
    let word = recipe_word(&r, Some(&order))?;
    let checks = Checks {
        symplectic: is_symplectic(&bq)?,
        charpoly: charpoly(&bq) == *r.poly() && charpoly(&companion(&r)) == *r.poly(),
        psi: word.psi() == bq,
    };
    Ok(Certificate::assemble(
        input, r, report, spec, bq, word, checks,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;
    use num_bigint::BigInt;

    fn sym_input(asc: &[i64]) -> CertInput<BigInt> {
        CertInput::Symplectic(SymplecticPoly::new(IntPoly::from_i64s(asc)).unwrap())
    }

    #[test]
    fn worked_seed_certifies() {
        let seed = SeedPoly::from_desc(
            2,
            &[BigInt::from(2), BigInt::from(1)],
            Some(BigInt::from(3)),
        )
        .unwrap();
        let cert = certify(CertInput::Seed(seed), &Options::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedPaCoset);
        assert_eq!(
            cert.polynomial.poly(),
            &IntPoly::from_i64s(&[1, 6, 5, 6, 1])
        );
        assert_eq!(
            cert.word.to_string(),
            "T[x1+x2]^6 . T[x1]^-6 . T[x2]^-6 . H1 . T[y2]^5 . H2"
        );
        assert!(cert.checks.all());
        assert!(cert.spectral_radius.value > 1.0);
        let v = cert.to_json();
        for key in [
            "input",
            "criterion",
            "factor_spec",
            "word",
            "checks",
            "spectral_radius",
            "verdict",
            "version",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["spectral_radius"]["certified"], false);
        assert_eq!(v["criterion"]["irreducible_witness"], "eisenstein:3");
    }

    #[test]
    fn refutations() {
        let cert = certify(sym_input(&[1, 1, 1, 1, 1]), &Options::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::Refuted);
        assert_eq!(cert.criterion.reason(), "cyclotomic");
        // the checks still pass; only the criterion fails
        assert!(cert.checks.all());
        let cert = certify(sym_input(&[1, 0, 3, 0, 1]), &Options::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::Refuted);
        assert_eq!(cert.criterion.power_index, 2);
    }

    #[test]
    fn inconclusive_is_never_certified() {
        let opts = Options {
            budget: 0,
            order: None,
        };
        // irreducible but without an Eisenstein prime: Kronecker needs budget
        let cert = certify(sym_input(&[1, 5, 1, 5, 1]), &opts).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn order_is_respected_and_validated() {
        let input = sym_input(&[1, 7, 3, -2, 3, 7, 1]);
        let opts = Options {
            budget: DEFAULT_BUDGET,
            order: Some(vec![3, 1, 2]),
        };
        let cert = certify(input.clone(), &opts).unwrap();
        assert!(cert.checks.all());
        assert_eq!(cert.factor_spec.factors.len(), 6);
        let bad = Options {
            budget: DEFAULT_BUDGET,
            order: Some(vec![1, 1, 2]),
        };
        assert!(matches!(certify(input, &bad), Err(Error::InvalidOrder(..))));
    }

    #[test]
    fn json_is_deterministic() {
        let a = certify(sym_input(&[1, 7, 3, -2, 3, 7, 1]), &Options::default()).unwrap();
        let b = certify(sym_input(&[1, 7, 3, -2, 3, 7, 1]), &Options::default()).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert!(a.to_string().contains(a.verdict.as_str()));
    }
}
