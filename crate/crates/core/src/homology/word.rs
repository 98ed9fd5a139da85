//! Words in Dehn twists and their action on homology.

use std::fmt;

use serde_json::{json, Value};

use super::{twist_action, HClass};
use crate::error::{Error, Result};
use crate::polynomial::{int_json, SymplecticPoly};
use crate::symplectic::{sigma, validate_order, Factor, FactorSpec, Matrix};
use crate::Scalar;

/// `T_c^exponent` for a primitive class `c` and nonzero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistLetter<T> {
    class: HClass,
    exponent: T,
}

impl<T: Scalar> TwistLetter<T> {
    pub fn new(class: HClass, exponent: T) -> Result<Self> {
        if exponent.is_zero() {
            return Err(Error::ZeroExponent);
        }
        if !class.is_primitive() {
            return Err(Error::NotPrimitive(class.to_string()));
        }
        Ok(TwistLetter { class, exponent })
    }

    pub fn class(&self) -> &HClass {
        &self.class
    }

    pub fn exponent(&self) -> &T {
        &self.exponent
    }

    pub fn inverse(&self) -> Self {
        TwistLetter {
            class: self.class.clone(),
            exponent: -self.exponent.clone(),
        }
    }

    pub fn matrix(&self) -> Matrix<T> {
        twist_action(&self.class, self.exponent.clone()).expect("letter class is primitive")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.to_string(),
            "vector": self.class.vec(),
            "exponent": int_json(&self.exponent),
        })
    }
}

impl<T: Scalar> fmt::Display for TwistLetter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[{}]", self.class)?;
        if !self.exponent.is_one() {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// What a contiguous run of letters realizes on homology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind<T> {
    /// `B_{i,j}^power`, acting as `SE_{i,j}^power`.
    Btm { i: usize, j: usize, power: T },
    /// The handle switch `H_index`, acting as `W_{index,index+1}`.
    HandleSwitch { index: usize },
    /// A handle switch spelled so that it acts as `W_{i,j}` with columns
    /// `j` and `σ(j)` negated.
    FlippedSwitch { i: usize, j: usize },
}

impl<T: Scalar> BlockKind<T> {
    /// The matrix factor this block maps to under `Ψ`.
    pub fn factor(&self) -> Factor<T> {
        match self {
            BlockKind::Btm { i, j, power } => Factor::Se {
                i: *i,
                j: *j,
                exponent: power.clone(),
            },
            BlockKind::HandleSwitch { index } => Factor::W {
                i: *index,
                j: index + 1,
            },
            BlockKind::FlippedSwitch { i, j } => Factor::WFlipped { i: *i, j: *j },
        }
    }
}

/// A labelled run `letters[start..start + len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block<T> {
    pub kind: BlockKind<T>,
    pub start: usize,
    pub len: usize,
}

impl<T: Scalar> Block<T> {
    pub fn to_json(&self) -> Value {
        let mut v = match &self.kind {
            BlockKind::Btm { i, j, power } => {
                json!({ "kind": "btm", "i": i, "j": j, "power": int_json(power) })
            }
            BlockKind::HandleSwitch { index } => json!({ "kind": "handle_switch", "index": index }),
            BlockKind::FlippedSwitch { i, j } => {
                json!({ "kind": "flipped_switch", "i": i, "j": j })
            }
        };
        v["start"] = json!(self.start);
        v["len"] = json!(self.len);
        v
    }
}

/// A word in Dehn twists, read left to right; `Ψ` multiplies the letter
/// matrices in the same order. Blocks are optional annotations. The word
/// stands for its whole Torelli coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MCWord<T> {
    genus: usize,
    letters: Vec<TwistLetter<T>>,
    blocks: Vec<Block<T>>,
}

impl<T: Scalar> MCWord<T> {
    pub fn identity(genus: usize) -> Self {
        MCWord {
            genus,
            letters: Vec::new(),
            blocks: Vec::new(),
        }
    }

    pub fn from_letters(genus: usize, letters: Vec<TwistLetter<T>>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.class.genus() != genus) {
            return Err(Error::GenusMismatch(genus, bad.class.genus()));
        }
        Ok(MCWord {
            genus,
            letters,
            blocks: Vec::new(),
        })
    }

    /// A word whose letters form a single block.
    fn block(genus: usize, letters: Vec<TwistLetter<T>>, kind: BlockKind<T>) -> Result<Self> {
        let mut w = Self::from_letters(genus, letters)?;
        w.blocks.push(Block {
            kind,
            start: 0,
            len: w.letters.len(),
        });
        Ok(w)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[TwistLetter<T>] {
        &self.letters
    }

    pub fn blocks(&self) -> &[Block<T>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        let offset = self.letters.len();
        let mut out = self.clone();
        out.letters.extend(other.letters.iter().cloned());
        out.blocks.extend(other.blocks.iter().map(|b| Block {
            kind: b.kind.clone(),
            start: b.start + offset,
            len: b.len,
        }));
        Ok(out)
    }

    /// Reversed letters with negated exponents; block annotations are
    /// dropped.
    pub fn inverse(&self) -> Self {
        MCWord {
            genus: self.genus,
            letters: self
                .letters
                .iter()
                .rev()
                .map(TwistLetter::inverse)
                .collect(),
            blocks: Vec::new(),
        }
    }

    /// `self` repeated `n` times, without annotations.
    pub fn repeat(&self, n: usize) -> Self {
        MCWord {
            genus: self.genus,
            letters: cycle(&self.letters, n),
            blocks: Vec::new(),
        }
    }

    /// Replaces the annotations by a single block spanning the word.
    pub fn annotate(mut self, kind: BlockKind<T>) -> Self {
        let len = self.letters.len();
        self.blocks = vec![Block {
            kind,
            start: 0,
            len,
        }];
        self
    }

    /// The action on homology.
    pub fn psi(&self) -> Matrix<T> {
        psi(self)
    }

    /// The factor sequence read off the block annotations, when the blocks
    /// tile the word.
    pub fn factor_spec(&self) -> Option<FactorSpec<T>> {
        let mut pos = 0;
        for b in &self.blocks {
            if b.start != pos {
                return None;
            }
            pos += b.len;
        }
        (pos == self.letters.len()).then(|| FactorSpec {
            genus: self.genus,
            factors: self.blocks.iter().map(|b| b.kind.factor()).collect(),
        })
    }

    /// Parses the text form. `H<i>` expands to [`handle_switch_word`];
    /// whitespace is ignored and `I` (or nothing) is the empty word.
    pub fn parse(genus: usize, s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = Self::identity(genus);
        if text.is_empty() || text == "I" {
            return Ok(w);
        }
        for tok in text.split('.') {
            let piece = if let Some(idx) = tok.strip_prefix('H') {
                let i: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad handle switch {tok:?}")))?;
                handle_switch_word(genus, i)?
            } else {
                let letter = parse_letter(genus, tok)?;
                Self::from_letters(genus, vec![letter])?
            };
            w = w.concat(&piece)?;
        }
        Ok(w)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "text": self.to_string(),
            "letters": self.letters.iter().map(TwistLetter::to_json).collect::<Vec<_>>(),
            "blocks": self.blocks.iter().map(Block::to_json).collect::<Vec<_>>(),
        })
    }
}

fn parse_letter<T: Scalar>(genus: usize, tok: &str) -> Result<TwistLetter<T>> {
    let bad = || Error::Parse(format!("bad twist letter {tok:?}"));
    let body = tok.strip_prefix("T[").ok_or_else(bad)?;
    let close = body.find(']').ok_or_else(bad)?;
    let class = HClass::parse(genus, &body[..close])?;
    let tail = &body[close + 1..];
    let exponent = if tail.is_empty() {
        T::one()
    } else {
        let e = tail.strip_prefix('^').ok_or_else(bad)?;
        let e = e.strip_prefix('+').unwrap_or(e);
        T::from_str_radix(e, 10).map_err(|_| bad())?
    };
    TwistLetter::new(class, exponent)
}

impl<T: Scalar> fmt::Display for MCWord<T> {
    /// Letters joined by ` . `; runs annotated as canonical handle switches
    /// are abbreviated to `H<i>`. The empty word prints as `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens: Vec<String> = Vec::new();
        let mut pos = 0;
        while pos < self.letters.len() {
            let switch = self.blocks.iter().find_map(|b| match b.kind {
                BlockKind::HandleSwitch { index } if b.start == pos && b.len > 0 => {
                    Some((index, b.len))
                }
                _ => None,
            });
            match switch {
                Some((index, len)) => {
                    tokens.push(format!("H{index}"));
                    pos += len;
                }
                None => {
                    tokens.push(self.letters[pos].to_string());
                    pos += 1;
                }
            }
        }
        if tokens.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "{}", tokens.join(" . "))
        }
    }
}

fn cycle<T: Clone>(letters: &[T], n: usize) -> Vec<T> {
    letters
        .iter()
        .cycle()
        .take(letters.len() * n)
        .cloned()
        .collect()
}

fn sign_of(odd_index: usize) -> i64 {
    if odd_index % 2 == 1 {
        1
    } else {
        -1
    }
}

fn letter<T: Scalar>(class: HClass, exponent: T) -> TwistLetter<T> {
    TwistLetter::new(class, exponent).expect("generator letters are well formed")
}

/// The bounding-triple word `B_{i,j}^power`, with `Ψ = SE_{i,j}^power`.
///
/// With `t = (-1)^{j+1}`: `T_{e_i}^{t·power}` when `i = σ(j)`, otherwise
/// `T_{e_i+e_{σ(j)}}^{t·power} T_{e_i}^{-t·power} T_{e_{σ(j)}}^{-t·power}`
/// (the three curves are disjoint, so the power distributes). A zero
/// power gives an empty block.
pub fn btm_word_pow<T: Scalar>(g: usize, i: usize, j: usize, power: T) -> Result<MCWord<T>> {
    let sj = sigma(g, j)?;
    sigma(g, i)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    let e = T::from_small(sign_of(j)) * power.clone();
    let kind = BlockKind::Btm { i, j, power };
    if e.is_zero() {
        return MCWord::block(g, Vec::new(), kind);
    }
    let a = HClass::e(g, i)?;
    let letters = if i == sj {
        vec![letter(a, e)]
    } else {
        let b = HClass::e(g, sj)?;
        vec![
            letter(&a + &b, e.clone()),
            letter(a, -e.clone()),
            letter(b, -e),
        ]
    };
    MCWord::block(g, letters, kind)
}

/// `B_{i,j}`, i.e. [`btm_word_pow`] with power 1.
pub fn btm_word<T: Scalar>(g: usize, i: usize, j: usize) -> Result<MCWord<T>> {
    btm_word_pow(g, i, j, T::one())
}

/// The handle switch `H_i`, `1 ≤ i ≤ g`, with `Ψ(H_i) = W_{i,i+1}`.
///
/// For `i = g` it is the quarter turn `(T_{e_g} T_{e_{g+1}} T_{e_g})^t`;
/// for `i < g` it is
/// `((T_{e_σ(i)} T_{e_i} T_{e_σ(i)+e_{i+1}} T_{e_σ(i+1)} T_{e_{i+1}})^3
/// (T_{e_σ(i)} T_{e_i})^3)^t`, where `t = (-1)^{i+1}`.
pub fn handle_switch_word<T: Scalar>(g: usize, i: usize) -> Result<MCWord<T>> {
    if g == 0 {
        return Err(Error::ZeroGenus);
    }
    if !(1..=g).contains(&i) {
        return Err(Error::UnsupportedHandleSwitch { index: i, genus: g });
    }
    let e = |k: usize| HClass::e(g, k).expect("index in range");
    let one = || T::one();
    let si = 2 * g - i + 1;
    let base = if i == g {
        vec![
            letter(e(i), one()),
            letter(e(si), one()),
            letter(e(i), one()),
        ]
    } else {
        let si1 = 2 * g - i;
        let five = [
            letter(e(si), one()),
            letter(e(i), one()),
            letter(&e(si) + &e(i + 1), one()),
            letter(e(si1), one()),
            letter(e(i + 1), one()),
        ];
        let two = [letter(e(si), one()), letter(e(i), one())];
        let mut v = cycle(&five, 3);
        v.extend(cycle(&two, 3));
        v
    };
    let mut w = MCWord::from_letters(g, base)?;
    if sign_of(i) < 0 {
        w = w.inverse();
    }
    let len = w.letters.len();
    w.blocks.push(Block {
        kind: BlockKind::HandleSwitch { index: i },
        start: 0,
        len,
    });
    Ok(w)
}

/// `Ψ(w)`: the product of the letters' transvection matrices in word order.
pub fn psi<T: Scalar>(w: &MCWord<T>) -> Matrix<T> {
    let n = 2 * w.genus;
    let mut m = Matrix::<T>::identity(n);
    // right-multiplying by I + k c (Jc)ᵀ is the rank-one update
    // M + k (M c)(Jc)ᵀ
    for l in &w.letters {
        let c = l.class.vec();
        let jc: Vec<i64> = (0..n)
            .map(|s| {
                if s % 2 == 0 {
                    c[n - 1 - s]
                } else {
                    -c[n - 1 - s]
                }
            })
            .collect();
        let mc: Vec<T> = (1..=n)
            .map(|r| {
                (1..=n)
                    .filter(|&s| c[s - 1] != 0)
                    .fold(T::zero(), |acc, s| {
                        acc + m.get(r, s).clone() * T::from_small(c[s - 1])
                    })
            })
            .collect();
        for (r, mcr) in mc.iter().enumerate() {
            if mcr.is_zero() {
                continue;
            }
            let scaled = mcr.clone() * l.exponent.clone();
            for (s, &js) in jc.iter().enumerate() {
                if js != 0 {
                    let cur = m.get(r + 1, s + 1).clone();
                    m.set(r + 1, s + 1, cur + scaled.clone() * T::from_small(js));
                }
            }
        }
    }
    m
}

/// The word `B_1^{t_1} H_1 ⋯ B_g^{t_g} H_g` for a symplectic polynomial,
/// where `B_i = B_{i,i+1}` and `t_i` are the recipe signs of `r`.
///
/// `order` permutes the `g` blocks `B_i^{t_i} H_i`; the default is
/// `1, ..., g`. `Ψ` of the result equals the matching
/// [`factored_bq_ordered`](crate::symplectic::factored_bq_ordered) product.
pub fn recipe_word<T: Scalar>(r: &SymplecticPoly<T>, order: Option<&[usize]>) -> Result<MCWord<T>> {
    let g = r.genus();
    let canonical: Vec<usize> = (1..=g).collect();
    let order = order.unwrap_or(&canonical);
    validate_order(g, order)?;
    let mut w = MCWord::identity(g);
    for &i in order {
        w = w.concat(&btm_word_pow(g, i, i + 1, r.t(i))?)?;
        w = w.concat(&handle_switch_word(g, i)?)?;
    }
    Ok(w)
}
