//! Artin braid groups `B_n`: words, the permutation and abelianization maps,
//! the Artin action on the free group `F_n`, and the central-extension
//! arithmetic of Robb's pure quotient `P̃_{0,d}`.
//!
//! Convention for the action: `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹` and
//! `x_{i+1} ↦ x_i`, fixing all other generators, and a word acts
//! homomorphically, `ρ(uv) = ρ(u) ∘ ρ(v)`. Under this convention every braid
//! fixes the product `x_1 x_2 ⋯ x_n` exactly, and `ρ(b)(x_k)` is a conjugate
//! of `x_{π(b)(k)}` where `π` is [`BraidWord::permutation`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::freegroup::{
    Alphabet, Automorphism, FreeEndomorphism, FreeGroupError, FreeWord, Letter,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator s{index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("{what} requires d >= {min}, got {d}")]
    TooFewStrands {
        what: &'static str,
        min: usize,
        d: usize,
    },
    #[error("fiber alphabet has rank {rank}, braid has {strands} strands")]
    AlphabetRank { rank: usize, strands: usize },
    #[error("bad braid word: {0}")]
    Parse(#[from] FreeGroupError),
    #[error("Robb elements have lengths {0} and {1}")]
    RobbLength(usize, usize),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;

/// `σ_index^{±1}`, with `index` counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn inverted(self) -> Self {
        BraidLetter {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

fn braid_alphabet(strands: usize) -> Alphabet {
    Alphabet::numbered("s", strands.saturating_sub(1))
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds from signed indices: `3` is `σ₃`, `-2` is `σ₂⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        Self::new(
            strands,
            letters
                .iter()
                .map(|&k| BraidLetter {
                    index: k.unsigned_abs() as usize,
                    positive: k > 0,
                })
                .collect(),
        )
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn sigma(strands: usize, index: usize) -> Result<Self> {
        Self::new(
            strands,
            vec![BraidLetter {
                index,
                positive: true,
            }],
        )
    }

    /// Parses the shared word syntax over `s1 .. s{n-1}`.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        let w = braid_alphabet(strands).parse_word(s)?;
        Self::from_free_word(strands, &w)
    }

    /// Reads a free word whose generator `k` stands for `σ_{k+1}`.
    pub fn from_free_word(strands: usize, w: &FreeWord) -> Result<Self> {
        Self::new(
            strands,
            w.letters()
                .iter()
                .map(|l| BraidLetter {
                    index: l.gen + 1,
                    positive: !l.inverse,
                })
                .collect(),
        )
    }

    pub fn to_free_word(&self) -> FreeWord {
        FreeWord::reduce(
            self.letters
                .iter()
                .map(|l| Letter::signed(l.index - 1, l.positive)),
        )
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Image in the abelianization `Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    /// Image in `S_n` as a 0-based map `k ↦ π(k)`, with `π(uv) = π(u) ∘ π(v)`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        // right-multiplying by a transposition swaps the entries at i-1, i
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }

    /// The Artin action on `F_n = ⟨x_1, …, x_n⟩` with generators named
    /// `x1 .. xn`.
    pub fn artin_action(&self) -> Automorphism {
        let alphabet = Arc::new(Alphabet::numbered("x", self.strands));
        self.artin_action_on(alphabet)
            .expect("alphabet rank matches by construction")
    }

    /// The Artin action on a free group whose generators, in order, are
    /// the strands.
    pub fn artin_action_on(&self, alphabet: Arc<Alphabet>) -> Result<Automorphism> {
        if alphabet.rank() != self.strands {
            return Err(BraidError::AlphabetRank {
                rank: alphabet.rank(),
                strands: self.strands,
            });
        }
        let forward = act(&self.letters, self.strands);
        let backward = act(&self.inverse().letters, self.strands);
        let forward = FreeEndomorphism::from_images(alphabet.clone(), forward)?;
        let backward = FreeEndomorphism::from_images(alphabet, backward)?;
        Ok(Automorphism::from_parts_unchecked(forward, backward))
    }
}

/// Images of the generators under `ρ(l_1) ∘ ⋯ ∘ ρ(l_k)`.
fn act(letters: &[BraidLetter], n: usize) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (0..n).map(FreeWord::generator).collect();
    for l in letters {
        let (i, j) = (l.index - 1, l.index);
        let (xi, xj) = (images[i].clone(), images[j].clone());
        if l.positive {
            // x_i ↦ x_i x_j x_i⁻¹, x_j ↦ x_i
            images[i] = xj.conjugate(&xi);
            images[j] = xi;
        } else {
            // x_i ↦ x_j, x_j ↦ x_j⁻¹ x_i x_j
            images[i] = xj.clone();
            images[j] = xi.conjugate(&xj.inverse());
        }
    }
    images
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", l.index)?;
            if !l.positive {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `σ_1 ⋯ σ_{d-2} σ_{d-1}² σ_{d-2} ⋯ σ_1`, whose normal closure cuts `B_d`
/// down to the sphere braid group.
pub fn spherical_relator(d: usize) -> Result<BraidWord> {
    if d < 2 {
        return Err(BraidError::TooFewStrands {
            what: "spherical relator",
            min: 2,
            d,
        });
    }
    let mut signed: Vec<i32> = (1..d as i32).collect();
    signed.extend((1..d as i32).rev());
    BraidWord::from_signed(d, &signed)
}

/// Positive half twist `Δ = (σ_1)(σ_2σ_1)⋯(σ_{d-1}⋯σ_1)`.
pub fn half_twist(d: usize) -> Result<BraidWord> {
    let mut signed = Vec::new();
    for top in 1..d as i32 {
        signed.extend((1..=top).rev());
    }
    BraidWord::from_signed(d, &signed)
}

/// Full twist `Δ² = (σ_1 ⋯ σ_{d-1})^d`, generating the center of `B_d`.
pub fn full_twist(d: usize) -> Result<BraidWord> {
    let row: Vec<i32> = (1..d as i32).collect();
    Ok(BraidWord::from_signed(d, &row)?.pow(d as i64))
}

/// `[x_2, (x_3x_1)⁻¹ x_2 (x_3x_1)]` over `x_1 .. x_{d-1}` (generator `k`
/// is `x_{k+1}`), the extra relator defining `B̃_d`.
pub fn robb_relator(d: usize) -> Result<FreeWord> {
    if d < 4 {
        return Err(BraidError::TooFewStrands {
            what: "Robb relator",
            min: 4,
            d,
        });
    }
    let x = FreeWord::generator;
    let c = x(2).mul(&x(0));
    let b = c.inverse().mul(&x(1)).mul(&c);
    Ok(FreeWord::commutator(&x(1), &b))
}

/// Element `μ^ε · v_1^{k_1} ⋯ v_{d-1}^{k_{d-1}}` of `P̃_{0,d}`, the central
/// extension of `Z^{d-1}` by `⟨μ⟩ ≅ Z/2` in which adjacent `v`'s commute up
/// to `μ` and all other pairs commute.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RobbElement {
    pub mu: bool,
    pub exponents: Vec<i64>,
}

impl RobbElement {
    /// Identity of `P̃_{0,d}` (exponent vector of length `d - 1`).
    pub fn identity(d: usize) -> Self {
        RobbElement {
            mu: false,
            exponents: vec![0; d - 1],
        }
    }

    pub fn mu(d: usize) -> Self {
        RobbElement {
            mu: true,
            ..Self::identity(d)
        }
    }

    /// `v_i` for `1 ≤ i ≤ d - 1`.
    pub fn v(d: usize, i: usize) -> Self {
        let mut e = Self::identity(d);
        e.exponents[i - 1] = 1;
        e
    }

    pub fn is_identity(&self) -> bool {
        !self.mu && self.exponents.iter().all(|&k| k == 0)
    }

    pub fn inverse(&self) -> Self {
        let neg = RobbElement {
            mu: false,
            exponents: self.exponents.iter().map(|k| -k).collect(),
        };
        // x · x⁻¹ must be trivial, so μ(x⁻¹) cancels μ(x) plus the cocycle
        let c = cocycle(&self.exponents, &neg.exponents);
        RobbElement {
            mu: self.mu ^ c,
            ..neg
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.exponents.len() + 1);
        for _ in 0..e.unsigned_abs() {
            out = robb_multiply(&out, &base).expect("same length");
        }
        out
    }

    /// Whether every `k_i` is even (the finite-index free abelian part
    /// times `⟨μ⟩`).
    pub fn is_even(&self) -> bool {
        self.exponents.iter().all(|k| k % 2 == 0)
    }
}

/// Parity of `Σ_i a_{i+1} b_i`: collecting `v_i^{b_i}` leftward past
/// `v_{i+1}^{a_{i+1}}` costs that many commutators `μ`.
fn cocycle(a: &[i64], b: &[i64]) -> bool {
    let mut s = 0i64;
    for i in 0..a.len().saturating_sub(1) {
        s += (a[i + 1] & 1) * (b[i] & 1);
    }
    s & 1 == 1
}

pub fn robb_multiply(a: &RobbElement, b: &RobbElement) -> Result<RobbElement> {
    if a.exponents.len() != b.exponents.len() {
        return Err(BraidError::RobbLength(a.exponents.len(), b.exponents.len()));
    }
    Ok(RobbElement {
        mu: a.mu ^ b.mu ^ cocycle(&a.exponents, &b.exponents),
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| x + y)
            .collect(),
    })
}

/// Commutator `[a, b] = a b a⁻¹ b⁻¹` in `P̃_{0,d}`.
pub fn robb_commutator(a: &RobbElement, b: &RobbElement) -> Result<RobbElement> {
    let ab = robb_multiply(a, b)?;
    let abai = robb_multiply(&ab, &a.inverse())?;
    robb_multiply(&abai, &b.inverse())
}

/// Evaluates every defining relation of `P̃_{0,d}` in the normal-form
/// arithmetic; returns the ones that fail as human-readable labels.
pub fn robb_relation_failures(d: usize) -> Result<Vec<String>> {
    if d < 4 {
        return Err(BraidError::TooFewStrands {
            what: "P̃_{0,d}",
            min: 4,
            d,
        });
    }
    let mut bad = Vec::new();
    let mu = RobbElement::mu(d);
    if !robb_multiply(&mu, &mu)?.is_identity() {
        bad.push("mu^2 = 1".to_string());
    }
    for i in 1..d {
        let vi = RobbElement::v(d, i);
        if !robb_commutator(&mu, &vi)?.is_identity() {
            bad.push(format!("[mu, v{i}] = 1"));
        }
        for j in 1..d {
            if i == j {
                continue;
            }
            let c = robb_commutator(&vi, &RobbElement::v(d, j))?;
            let want = if i.abs_diff(j) == 1 {
                mu.clone()
            } else {
                RobbElement::identity(d)
            };
            if c != want {
                bad.push(format!("[v{i}, v{j}]"));
            }
        }
    }
    Ok(bad)
}
