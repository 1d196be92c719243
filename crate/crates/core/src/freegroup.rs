//! Free groups of finite rank: reduced words, a shared text syntax, and
//! endomorphisms given by generator images.
//!
//! Word syntax is whitespace separated: `g` is a generator, `g^-1` its
//! inverse, `g^k` a power, `( ... )^k` a grouped power, and a bare `^k` token
//! raises everything before it (at the same nesting level) to the `k`-th
//! power. A leading capital letter may also denote an inverse (`A1` is
//! `a1^-1`) when the capitalised name is not itself a generator. The empty
//! string (or `1`) is the identity. The printer emits one letter per token,
//! so printing and parsing are inverse on reduced words.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("generator names must be nonempty")]
    EmptyName,
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("generator index {gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: usize, rank: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("maps are not mutually inverse on generator {0}")]
    NotInverse(String),
}

pub type Result<T, E = FreeGroupError> = std::result::Result<T, E>;

const RESERVED: &[char] = &['(', ')', '^', ',', '<', '>', '|'];

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "1"
        && !name
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
        && !name.starts_with(|c: char| c.is_ascii_digit() || c == '-')
}

/// An ordered list of distinct generator names.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if name.is_empty() {
                return Err(FreeGroupError::EmptyName);
            }
            if !valid_name(&name) {
                return Err(FreeGroupError::InvalidName(name));
            }
            if out.index.contains_key(&name) {
                return Err(FreeGroupError::DuplicateName(name));
            }
            out.index.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        Ok(out)
    }

    /// Alphabet `prefix1, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("numbered names are valid")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Resolves a single letter token (no power suffix).
    fn resolve(&self, token: &str) -> Result<Letter> {
        if let Some(gen) = self.index_of(token) {
            return Ok(Letter::new(gen));
        }
        let mut chars = token.chars();
        if let Some(first) = chars.next() {
            if first.is_uppercase() {
                let lowered: String = first.to_lowercase().chain(chars).collect();
                if let Some(gen) = self.index_of(&lowered) {
                    return Ok(Letter::inv(gen));
                }
            }
        }
        Err(FreeGroupError::UnknownGenerator(token.to_string()))
    }

    pub fn parse_word(&self, s: &str) -> Result<FreeWord> {
        let mut parser = WordParser {
            alphabet: self,
            src: s,
            pos: 0,
        };
        let w = parser.sequence(false)?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        let mut out = String::new();
        for (k, l) in w.letters().iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(self.name(l.gen));
            if l.inverse {
                out.push_str("^-1");
            }
        }
        out
    }

    /// Compact display with collapsed exponents, e.g. `a1^3 b2^-1`.
    pub fn format_word_compact(&self, w: &FreeWord) -> String {
        let mut parts = Vec::new();
        let letters = w.letters();
        let mut k = 0;
        while k < letters.len() {
            let l = letters[k];
            let mut run = 1;
            while k + run < letters.len() && letters[k + run] == l {
                run += 1;
            }
            let e = if l.inverse { -(run as i64) } else { run as i64 };
            if e == 1 {
                parts.push(self.name(l.gen).to_string());
            } else {
                parts.push(format!("{}^{}", self.name(l.gen), e));
            }
            k += run;
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

struct WordParser<'a> {
    alphabet: &'a Alphabet,
    src: &'a str,
    pos: usize,
}

impl WordParser<'_> {
    fn error(&self, msg: &str) -> FreeGroupError {
        FreeGroupError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        // caller consumed '^'
        let start = self.pos;
        if let Some(c) = self.peek() {
            if c == '-' || c == '+' {
                self.pos += 1;
            }
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| FreeGroupError::Syntax {
                pos: start,
                msg: "expected integer exponent".into(),
            })
    }

    fn sequence(&mut self, nested: bool) -> Result<FreeWord> {
        let mut acc = FreeWord::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if nested {
                        return Err(self.error("unclosed '('"));
                    }
                    return Ok(acc);
                }
                Some(')') => {
                    if nested {
                        return Ok(acc);
                    }
                    return Err(self.error("unbalanced ')'"));
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(true)?;
                    self.pos += 1; // ')'
                    let inner = self.power_suffix(inner)?;
                    acc = acc.mul(&inner);
                }
                Some('^') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    acc = acc.pow(e);
                }
                Some(_) => {
                    let start = self.pos;
                    while let Some(c) = self.peek() {
                        if c.is_whitespace() || RESERVED.contains(&c) {
                            break;
                        }
                        self.pos += c.len_utf8();
                    }
                    let token = &self.src[start..self.pos];
                    if token.is_empty() {
                        return Err(self.error("unexpected character"));
                    }
                    let base = if token == "1" {
                        FreeWord::identity()
                    } else {
                        FreeWord::from_letter(self.alphabet.resolve(token)?)
                    };
                    let w = self.power_suffix(base)?;
                    acc = acc.mul(&w);
                }
            }
        }
    }

    fn power_suffix(&mut self, base: FreeWord) -> Result<FreeWord> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn signed(gen: usize, positive: bool) -> Self {
        Letter {
            gen,
            inverse: !positive,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        Self::from_letter(Letter::new(gen))
    }

    pub fn from_letter(l: Letter) -> Self {
        FreeWord { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeWord { letters: out }
    }

    /// Builds a word from `(generator, ±1)` pairs, reducing on the way.
    pub fn from_signed(pairs: &[(usize, i8)]) -> Self {
        Self::reduce(pairs.iter().map(|&(g, s)| Letter::signed(g, s > 0)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            match letters.last() {
                Some(&last) if last.cancels(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        FreeWord { letters }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g · self · g⁻¹`, the `h^g` convention.
    pub fn conjugate(&self, g: &FreeWord) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.sign())
            .sum()
    }

    pub fn total_exponent(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclically_reduced(&self) -> Self {
        let l = &self.letters;
        let mut lo = 0;
        let mut hi = l.len();
        while hi - lo >= 2 && l[lo].cancels(l[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        FreeWord {
            letters: l[lo..hi].to_vec(),
        }
    }

    /// A canonical representative of the cyclic word up to rotation and
    /// inversion; two relators define the same normal closure contribution
    /// when their keys agree.
    pub fn cyclic_key(&self) -> Vec<Letter> {
        let c = self.cyclically_reduced();
        let inv = c.inverse();
        let mut best: Option<Vec<Letter>> = None;
        for w in [&c.letters, &inv.letters] {
            let n = w.len();
            for r in 0..n.max(1) {
                let rot: Vec<Letter> = w[r..].iter().chain(&w[..r]).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Replaces each letter by a word (homomorphic extension).
    pub fn substitute<F>(&self, mut image: F) -> FreeWord
    where
        F: FnMut(usize) -> FreeWord,
    {
        let mut out = FreeWord::identity();
        for l in &self.letters {
            let w = image(l.gen);
            if l.inverse {
                out = out.mul(&w.inverse());
            } else {
                out = out.mul(&w);
            }
        }
        out
    }

    /// Renumbers generators through `map`; `None` deletes the letter.
    pub fn relabel<F: Fn(usize) -> Option<usize>>(&self, map: F) -> FreeWord {
        FreeWord::reduce(self.letters.iter().filter_map(|l| {
            map(l.gen).map(|g| Letter {
                gen: g,
                inverse: l.inverse,
            })
        }))
    }
}

/// An endomorphism of the free group on `alphabet`, given by the image of
/// each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEndomorphism {
    alphabet: Arc<Alphabet>,
    images: Vec<FreeWord>,
}

impl FreeEndomorphism {
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        let images = (0..alphabet.rank()).map(FreeWord::generator).collect();
        FreeEndomorphism { alphabet, images }
    }

    pub fn from_images(alphabet: Arc<Alphabet>, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(FreeGroupError::ImageCount {
                expected: alphabet.rank(),
                got: images.len(),
            });
        }
        for w in &images {
            check_rank(w, alphabet.rank())?;
        }
        Ok(FreeEndomorphism { alphabet, images })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, gen: usize) -> &FreeWord {
        &self.images[gen]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        check_rank(w, self.alphabet.rank())?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &FreeWord) -> FreeWord {
        w.substitute(|g| self.images[g].clone())
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        if self.alphabet != other.alphabet {
            return Err(FreeGroupError::AlphabetMismatch);
        }
        Ok(FreeEndomorphism {
            alphabet: self.alphabet.clone(),
            images: other
                .images
                .iter()
                .map(|w| self.apply_unchecked(w))
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, w)| *w == FreeWord::generator(g))
    }
}

fn check_rank(w: &FreeWord, rank: usize) -> Result<()> {
    match w.max_generator() {
        Some(g) if g >= rank => Err(FreeGroupError::GeneratorOutOfRange { gen: g, rank }),
        _ => Ok(()),
    }
}

/// An endomorphism together with a verified two-sided inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    forward: FreeEndomorphism,
    backward: FreeEndomorphism,
}

impl Automorphism {
    pub fn new(forward: FreeEndomorphism, backward: FreeEndomorphism) -> Result<Self> {
        let a = forward.compose(&backward)?;
        let b = backward.compose(&forward)?;
        for g in 0..forward.alphabet.rank() {
            if *a.image(g) != FreeWord::generator(g) || *b.image(g) != FreeWord::generator(g) {
                return Err(FreeGroupError::NotInverse(
                    forward.alphabet.name(g).to_string(),
                ));
            }
        }
        Ok(Automorphism { forward, backward })
    }

    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        let id = FreeEndomorphism::identity(alphabet);
        Automorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    pub(crate) fn from_parts_unchecked(
        forward: FreeEndomorphism,
        backward: FreeEndomorphism,
    ) -> Self {
        Automorphism { forward, backward }
    }

    pub fn forward(&self) -> &FreeEndomorphism {
        &self.forward
    }

    pub fn inverse_map(&self) -> &FreeEndomorphism {
        &self.backward
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.forward.apply(w)
    }

    pub fn image(&self, gen: usize) -> &FreeWord {
        self.forward.image(gen)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        Ok(Automorphism {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }
}
