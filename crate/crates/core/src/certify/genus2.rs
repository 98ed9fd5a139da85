//! Genus 2 in closed form.
//!
//! For `r = x⁴ + a x³ + b x² + a x + 1 = sym(x² + a x + (b - 2))` the
//! criterion reduces to: `a ≠ 0`, `(a, b) ∉ {(1, 1), (-1, 1)}`, and
//! `a² - 4b + 8` is not a perfect square.

use std::fmt;
use std::str::FromStr;

use super::{CertInput, Certificate, Checks};
use crate::error::{Error, Result};
use crate::homology::{btm_word_pow, recipe_word, BlockKind, HClass, MCWord, TwistLetter};
use crate::polynomial::{check_criterion, Decision, Poly, SymplecticPoly};
use crate::symplectic::{charpoly, is_symplectic, Factor, FactorSpec};
use crate::Scalar;

/// `x⁴ + a x³ + b x² + a x + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genus2Params<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Genus2Params<T> {
    pub fn new(a: T, b: T) -> Self {
        Genus2Params { a, b }
    }

    pub fn poly(&self) -> SymplecticPoly<T> {
        let (a, b) = (self.a.clone(), self.b.clone());
        SymplecticPoly::new(Poly::new(vec![T::one(), a.clone(), b, a, T::one()]))
            .expect("palindromic quartic")
    }

    /// `a² - 4b + 8`, the discriminant of `x² + a x + (b - 2)`.
    pub fn discriminant(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_small(4) * self.b.clone() + T::from_small(8)
    }
}

/// Which clause of the genus-2 test decided the outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Genus2Reason {
    /// `a = 0`: `r` is a polynomial in `x²`.
    PowerIndex,
    /// `(a, b) = (±1, 1)`: `r` is `Φ_5` or `Φ_10`.
    Cyclotomic,
    /// `a² - 4b + 8` is a square, so `x² + a x + (b - 2)` splits.
    PerfectSquare,
    Satisfied,
}

impl Genus2Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Genus2Reason::PowerIndex => "power index > 1",
            Genus2Reason::Cyclotomic => "cyclotomic",
            Genus2Reason::PerfectSquare => "perfect square",
            Genus2Reason::Satisfied => "criterion satisfied",
        }
    }
}

impl fmt::Display for Genus2Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The closed-form genus-2 criterion.
pub fn genus2_criterion<T: Scalar>(p: &Genus2Params<T>) -> (bool, Genus2Reason) {
    let one = T::one();
    if p.a.is_zero() {
        return (false, Genus2Reason::PowerIndex);
    }
    if p.b == one && p.a.abs() == one {
        return (false, Genus2Reason::Cyclotomic);
    }
    let d = p.discriminant();
    if !d.is_negative() {
        let s = d.sqrt();
        if s.clone() * s == d {
            return (false, Genus2Reason::PerfectSquare);
        }
    }
    (true, Genus2Reason::Satisfied)
}

/// Spelling of the two handle switches in the genus-2 word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignVariant {
    /// `H_1` and `H_2` as in the general recipe; `Ψ` is exactly
    /// `SE(1,2)^-a W(1,2) SE(2,3)^b W(2,3)`.
    Canonical,
    /// `(T_{y2} T_{x2} T_{y1+y2} T_{x1} T_{y1})^3` and `T_{x2} T_{y2} T_{x2}`,
    /// whose images are the `W` factors with the middle two columns
    /// negated. The product is unchanged.
    #[default]
    Flipped,
}

impl SignVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            SignVariant::Canonical => "canonical",
            SignVariant::Flipped => "flipped",
        }
    }
}

impl FromStr for SignVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(SignVariant::Canonical),
            "flipped" => Ok(SignVariant::Flipped),
            _ => Err(Error::Parse(format!(
                "unknown sign variant {s:?} (expected canonical or flipped)"
            ))),
        }
    }
}

fn one_letter_run<T: Scalar>(labels: &[&str], reps: usize, kind: BlockKind<T>) -> MCWord<T> {
    let letters: Vec<TwistLetter<T>> = labels
        .iter()
        .map(|l| TwistLetter::new(HClass::parse(2, l).expect("label"), T::one()).expect("letter"))
        .collect();
    MCWord::from_letters(2, letters)
        .expect("genus 2")
        .repeat(reps)
        .annotate(kind)
}

/// The flipped-sign genus-2 word
/// `(T_{x1+x2} T_{x1}^-1 T_{x2}^-1)^a (T_{y2} T_{x2} T_{y1+y2} T_{x1} T_{y1})^3
/// T_{y2}^b (T_{x2} T_{y2} T_{x2})`.
fn flipped_word<T: Scalar>(p: &Genus2Params<T>) -> Result<MCWord<T>> {
    let first = btm_word_pow(2, 1, 2, -p.a.clone())?;
    let switch1 = one_letter_run(
        &["y2", "x2", "y1+y2", "x1", "y1"],
        3,
        BlockKind::FlippedSwitch { i: 1, j: 2 },
    );
    let third = btm_word_pow(2, 2, 3, p.b.clone())?;
    let switch2 = one_letter_run(
        &["x2", "y2", "x2"],
        1,
        BlockKind::FlippedSwitch { i: 2, j: 3 },
    );
    first.concat(&switch1)?.concat(&third)?.concat(&switch2)
}

/// The genus-2 word for `(a, b)` and its certificate.
///
/// The word is always produced; the certificate carries the refutation
/// when the criterion fails. The closed-form test and the general
/// criterion are both run, and a disagreement (which would indicate a bug)
/// downgrades the verdict to inconclusive.
pub fn genus2_word<T: Scalar>(
    p: &Genus2Params<T>,
    variant: SignVariant,
    budget: u64,
) -> Result<(MCWord<T>, Certificate<T>)> {
    let r = p.poly();
    let word = match variant {
        SignVariant::Canonical => recipe_word(&r, None)?,
        SignVariant::Flipped => flipped_word(p)?,
    };
    let spec = word.factor_spec().expect("genus-2 blocks tile the word");
    let matrix = spec.evaluate()?;
    let psi = word.psi();
    let checks = Checks {
        symplectic: is_symplectic(&matrix)?,
        charpoly: charpoly(&matrix) == *r.poly(),
        psi: psi == matrix,
    };
    let mut report = check_criterion(&r, budget)?;
    let (closed_form, reason) = genus2_criterion(p);
    let general = report.verdict == Decision::Proven;
    if report.verdict != Decision::Inconclusive && closed_form != general {
        report.verdict = Decision::Inconclusive;
        report.notes.push(format!(
            "closed-form genus-2 test ({reason}) disagrees with the general criterion"
        ));
    }
    let cert = Certificate::assemble(
        CertInput::Genus2(p.clone(), variant),
        r,
        report,
        spec,
        matrix,
        word.clone(),
        checks,
    );
    Ok((word, cert))
}

/// The four factors the flipped word maps to, one per block.
pub fn flipped_spec<T: Scalar>(p: &Genus2Params<T>) -> FactorSpec<T> {
    FactorSpec {
        genus: 2,
        factors: vec![
            Factor::Se {
                i: 1,
                j: 2,
                exponent: -p.a.clone(),
            },
            Factor::WFlipped { i: 1, j: 2 },
            Factor::Se {
                i: 2,
                j: 3,
                exponent: p.b.clone(),
            },
            Factor::WFlipped { i: 2, j: 3 },
        ],
    }
}
