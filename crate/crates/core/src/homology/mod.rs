//! First homology of a genus-`g` surface, Dehn twists and their action.
//!
//! Classes are integer vectors in the basis `e_1, ..., e_{2g}` with the
//! pairing `⟨u, v⟩ = uᵀ J v`. The symplectic basis labels are
//! `x_k = e_k, y_k = e_{σ(k)}` for odd `k` and `x_k = e_{σ(k)}, y_k = e_k`
//! for even `k`, so in genus 2: `e_1 = x_1`, `e_4 = y_1`, `e_3 = x_2`,
//! `e_2 = y_2`.

mod word;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

pub use word::{
    btm_word, btm_word_pow, handle_switch_word, psi, recipe_word, Block, BlockKind, MCWord,
    TwistLetter,
};

use crate::error::{Error, Result};
use crate::symplectic::Matrix;
use crate::Scalar;

/// A class in `H_1(S, Z) ≅ Z^{2g}`, in e-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HClass {
    genus: usize,
    vec: Vec<i64>,
}

/// e-basis index of `x_k`.
fn x_index(g: usize, k: usize) -> usize {
    if k % 2 == 1 {
        k
    } else {
        2 * g - k + 1
    }
}

/// e-basis index of `y_k`.
fn y_index(g: usize, k: usize) -> usize {
    2 * g - x_index(g, k) + 1
}

impl HClass {
    pub fn from_vec(genus: usize, vec: Vec<i64>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::ZeroGenus);
        }
        if vec.len() != 2 * genus {
            return Err(Error::DimensionMismatch(vec.len(), 2 * genus));
        }
        Ok(HClass { genus, vec })
    }

    pub fn zero(genus: usize) -> Self {
        HClass {
            genus,
            vec: vec![0; 2 * genus],
        }
    }

    /// `e_i`, 1-based.
    pub fn e(genus: usize, i: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::ZeroGenus);
        }
        if !(1..=2 * genus).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: 2 * genus,
            });
        }
        let mut c = Self::zero(genus);
        c.vec[i - 1] = 1;
        Ok(c)
    }

    pub fn x(genus: usize, k: usize) -> Result<Self> {
        Self::check_label(genus, k)?;
        Self::e(genus, x_index(genus, k))
    }

    pub fn y(genus: usize, k: usize) -> Result<Self> {
        Self::check_label(genus, k)?;
        Self::e(genus, y_index(genus, k))
    }

    fn check_label(genus: usize, k: usize) -> Result<()> {
        if genus == 0 {
            Err(Error::ZeroGenus)
        } else if (1..=genus).contains(&k) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                max: genus,
            })
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn vec(&self) -> &[i64] {
        &self.vec
    }

    /// Entry at e-index `i` (1-based).
    pub fn get(&self, i: usize) -> i64 {
        self.vec[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.vec.iter().all(|&v| v == 0)
    }

    /// The gcd of the entries is 1.
    pub fn is_primitive(&self) -> bool {
        self.vec.iter().fold(0i64, |acc, v| acc.gcd(v)) == 1
    }

    pub fn scale(&self, k: i64) -> Self {
        HClass {
            genus: self.genus,
            vec: self.vec.iter().map(|v| v * k).collect(),
        }
    }

    /// Coefficients on `(x_k, y_k)` for `k = 1..=g`.
    pub fn xy_coords(&self) -> Vec<(i64, i64)> {
        let g = self.genus;
        (1..=g)
            .map(|k| (self.get(x_index(g, k)), self.get(y_index(g, k))))
            .collect()
    }

    /// Parses a signed combination of labels such as `x1+x2`, `-y1+2x3` or
    /// `e4`. Whitespace is ignored.
    pub fn parse(genus: usize, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("homology class {s:?}: {why}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero(genus);
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, after) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == text.len() => (1, rest),
                _ => return Err(bad("expected + or -")),
            };
            let digits = after.bytes().take_while(u8::is_ascii_digit).count();
            let coeff: i64 = if digits == 0 {
                1
            } else {
                after[..digits]
                    .parse()
                    .map_err(|_| bad("coefficient overflow"))?
            };
            let after = &after[digits..];
            let kind = after.chars().next().ok_or_else(|| bad("missing label"))?;
            let after = &after[1..];
            let idx_len = after.bytes().take_while(u8::is_ascii_digit).count();
            if idx_len == 0 {
                return Err(bad("missing label index"));
            }
            let idx: usize = after[..idx_len]
                .parse()
                .map_err(|_| bad("bad label index"))?;
            let basis = match kind {
                'x' => Self::x(genus, idx)?,
                'y' => Self::y(genus, idx)?,
                'e' => Self::e(genus, idx)?,
                _ => return Err(bad("labels are x, y or e")),
            };
            out = &out + &basis.scale(sign * coeff);
            rest = &after[idx_len..];
        }
        Ok(out)
    }
}

impl fmt::Display for HClass {
    /// Label form over `x_1, y_1, ..., x_g, y_g`, e.g. `x1+x2`, `-y1+2x3`;
    /// `0` for the zero class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, (xc, yc)) in self.xy_coords().into_iter().enumerate() {
            for (c, name) in [(xc, 'x'), (yc, 'y')] {
                if c == 0 {
                    continue;
                }
                if c < 0 {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                if c.abs() != 1 {
                    write!(f, "{}", c.abs())?;
                }
                write!(f, "{name}{}", k + 1)?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &HClass {
    type Output = HClass;
    fn add(self, rhs: &HClass) -> HClass {
        assert_eq!(self.genus, rhs.genus, "genus mismatch");
        HClass {
            genus: self.genus,
            vec: self.vec.iter().zip(&rhs.vec).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HClass {
    type Output = HClass;
    fn sub(self, rhs: &HClass) -> HClass {
        self + &-rhs
    }
}

impl Neg for &HClass {
    type Output = HClass;
    fn neg(self) -> HClass {
        self.scale(-1)
    }
}

/// The algebraic intersection number `uᵀ J v`.
pub fn pairing(u: &HClass, v: &HClass) -> Result<i64> {
    if u.genus != v.genus {
        return Err(Error::GenusMismatch(u.genus, v.genus));
    }
    let n = 2 * u.genus;
    Ok((1..=n)
        .map(|i| {
            let s = if i % 2 == 1 { 1 } else { -1 };
            s * u.get(i) * v.get(n - i + 1)
        })
        .sum())
}

/// Matrix of the Dehn twist `T_c^k` on homology: `v ↦ v + k ⟨v, c⟩ c`.
///
/// In matrix form this is `I + k c (Jc)ᵀ`, with `(Jc)_i = (-1)^{i+1}
/// c_{σ(i)}`. Only primitive classes are accepted.
pub fn twist_action<T: Scalar>(c: &HClass, k: T) -> Result<Matrix<T>> {
    if !c.is_primitive() {
        return Err(Error::NotPrimitive(c.to_string()));
    }
    let n = 2 * c.genus;
    let jc: Vec<i64> = (1..=n)
        .map(|i| {
            let s = if i % 2 == 1 { 1 } else { -1 };
            s * c.get(n - i + 1)
        })
        .collect();
    let mut m = Matrix::<T>::identity(n);
    for r in 1..=n {
        let cr = c.get(r);
        if cr == 0 {
            continue;
        }
        for (s, &js) in jc.iter().enumerate() {
            if js != 0 {
                let delta = k.clone() * T::from_small(cr * js);
                let cur = m.get(r, s + 1).clone();
                m.set(r, s + 1, cur + delta);
            }
        }
    }
    Ok(m)
}
