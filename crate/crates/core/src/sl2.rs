//! Exact `SL(2,Z)` arithmetic, normal forms in the amalgam
//! `Z/4 ∗_{Z/2} Z/6 = ⟨A⟩ ∗_{⟨−I⟩} ⟨B⟩`, and the model
//! `(Z/2 × Z/2) ⋊ SL(2,Z)` of the sphere braid group `B_4(S²)`.
//!
//! Fixed matrices: `S = [[1,1],[0,1]]`, `T = [[1,0],[1,1]]`,
//! `A = [[0,1],[-1,0]]`, `B = [[0,-1],[1,1]]`, so that `A² = B³ = −I`,
//! `AB = S` and `AB² = T`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("determinant is {0}, not 1")]
    Determinant(BigInt),
    #[error("amalgam word syntax at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("the Klein model needs 4 strands, got {0}")]
    Strands(usize),
}

pub type Result<T, E = Sl2Error> = std::result::Result<T, E>;

/// An integer matrix `[[a, b], [c, d]]` of determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sl2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Sl2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Sl2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = &m.a * &m.d - &m.b * &m.c;
        if !det.is_one() {
            return Err(Sl2Error::Determinant(det));
        }
        Ok(m)
    }

    fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2::new(a, b, c, d).expect("fixed matrix")
    }

    pub fn identity() -> Self {
        Self::raw(1, 0, 0, 1)
    }

    pub fn neg_identity() -> Self {
        Self::raw(-1, 0, 0, -1)
    }

    pub fn s() -> Self {
        Self::raw(1, 1, 0, 1)
    }

    pub fn t() -> Self {
        Self::raw(1, 0, 1, 1)
    }

    pub fn a() -> Self {
        Self::raw(0, 1, -1, 0)
    }

    pub fn b() -> Self {
        Self::raw(0, -1, 1, 1)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        Sl2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> Sl2 {
        Sl2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Sl2 {
        Sl2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn pow(&self, e: i64) -> Sl2 {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut out = Sl2::identity();
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == Sl2::identity()
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Equality in `PSL(2,Z)`.
    pub fn eq_projective(&self, o: &Sl2) -> bool {
        self == o || *self == o.neg()
    }

    /// Action on `(Z/2)²` by reducing entries mod 2.
    pub fn act_mod2(&self, v: [u8; 2]) -> [u8; 2] {
        let bit = |x: &BigInt| x.is_odd() as u8;
        [
            (bit(&self.a) * v[0] + bit(&self.b) * v[1]) % 2,
            (bit(&self.c) * v[0] + bit(&self.d) * v[1]) % 2,
        ]
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderClass {
    Finite(u32),
    Infinite,
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderClass::Finite(k) => write!(f, "finite({k})"),
            OrderClass::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order in `SL(2,Z)`: hyperbolic (`|tr| ≥ 3`) and parabolic
/// (`tr = ±2`, `M ≠ ±I`) elements have infinite order; the rest have
/// order dividing 4 or 6 and are found by iteration.
pub fn order_class(m: &Sl2) -> OrderClass {
    let tr = m.trace();
    let two = BigInt::from(2);
    if tr.abs() > two || (tr.abs() == two && !m.is_plus_minus_identity()) {
        return OrderClass::Infinite;
    }
    let mut p = m.clone();
    for k in 1..=12 {
        if p.is_identity() {
            return OrderClass::Finite(k);
        }
        p = p.mul(m);
    }
    unreachable!("elliptic elements of SL(2,Z) have order at most 6")
}

/// One factor of an amalgam normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    A,
    B,
    B2,
}

impl Syllable {
    fn matrix(self) -> Sl2 {
        match self {
            Syllable::A => Sl2::a(),
            Syllable::B => Sl2::b(),
            Syllable::B2 => Sl2::b().pow(2),
        }
    }

    fn b_power(self) -> Option<u8> {
        match self {
            Syllable::A => None,
            Syllable::B => Some(1),
            Syllable::B2 => Some(2),
        }
    }

    pub fn is_a(self) -> bool {
        self == Syllable::A
    }
}

/// `±` times an alternating product of `A` and `B^{1|2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmalgamWord {
    pub negative: bool,
    pub syllables: Vec<Syllable>,
}

impl AmalgamWord {
    pub fn identity() -> Self {
        AmalgamWord {
            negative: false,
            syllables: Vec::new(),
        }
    }

    pub fn from_syllable(s: Syllable) -> Self {
        AmalgamWord {
            negative: false,
            syllables: vec![s],
        }
    }

    /// Appends one syllable, merging with the tail: `A·A = −I`,
    /// `B^a·B^b = B^{a+b}` with `B³ = −I`.
    fn push(&mut self, s: Syllable) {
        let Some(&last) = self.syllables.last() else {
            self.syllables.push(s);
            return;
        };
        match (last.b_power(), s.b_power()) {
            (None, None) => {
                self.syllables.pop();
                self.negative = !self.negative;
            }
            (Some(x), Some(y)) => {
                self.syllables.pop();
                let e = x + y;
                if e >= 3 {
                    self.negative = !self.negative;
                }
                match e % 3 {
                    0 => {}
                    1 => self.push(Syllable::B),
                    _ => self.push(Syllable::B2),
                }
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn mul(&self, o: &AmalgamWord) -> AmalgamWord {
        let mut out = self.clone();
        out.negative ^= o.negative;
        for &s in &o.syllables {
            out.push(s);
        }
        out
    }

    /// Uses `A⁻¹ = −A`, `B⁻¹ = −B²`, `(B²)⁻¹ = −B`.
    pub fn inverse(&self) -> AmalgamWord {
        let mut negative = self.negative;
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| {
                negative = !negative;
                match s {
                    Syllable::A => Syllable::A,
                    Syllable::B => Syllable::B2,
                    Syllable::B2 => Syllable::B,
                }
            })
            .collect();
        AmalgamWord {
            negative,
            syllables,
        }
    }

    pub fn pow(&self, e: i64) -> AmalgamWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = AmalgamWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn eval(&self) -> Sl2 {
        let m = self
            .syllables
            .iter()
            .fold(Sl2::identity(), |acc, s| acc.mul(&s.matrix()));
        if self.negative {
            m.neg()
        } else {
            m
        }
    }

    /// Equality in `PSL(2,Z)`: same syllables, sign ignored.
    pub fn eq_projective(&self, o: &AmalgamWord) -> bool {
        self.syllables == o.syllables
    }

    pub fn first(&self) -> Option<Syllable> {
        self.syllables.first().copied()
    }

    pub fn last(&self) -> Option<Syllable> {
        self.syllables.last().copied()
    }

    /// Parses compact notation such as `ABAB^2A`, `-(AB)^6` or `B^-1 A`.
    /// Whitespace is ignored; the result is normalized.
    pub fn parse(s: &str) -> Result<AmalgamWord> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut pos = 0;
        let mut negative = false;
        if let Some(&(_, '-')) = chars.first() {
            negative = true;
            pos = 1;
        }
        let mut w = parse_seq(&chars, &mut pos, false)?;
        if pos != chars.len() {
            return Err(Sl2Error::Syntax {
                pos: chars[pos].0,
                msg: "unexpected character".into(),
            });
        }
        w.negative ^= negative;
        Ok(w)
    }
}

fn parse_seq(chars: &[(usize, char)], pos: &mut usize, nested: bool) -> Result<AmalgamWord> {
    let mut acc = AmalgamWord::identity();
    while *pos < chars.len() {
        let (at, c) = chars[*pos];
        let base = match c {
            'A' => {
                *pos += 1;
                AmalgamWord::from_syllable(Syllable::A)
            }
            'B' => {
                *pos += 1;
                AmalgamWord::from_syllable(Syllable::B)
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos, true)?;
                if *pos >= chars.len() || chars[*pos].1 != ')' {
                    return Err(Sl2Error::Syntax {
                        pos: at,
                        msg: "unclosed '('".into(),
                    });
                }
                *pos += 1;
                inner
            }
            ')' if nested => return Ok(acc),
            _ => {
                return Err(Sl2Error::Syntax {
                    pos: at,
                    msg: format!("unexpected {c:?}"),
                })
            }
        };
        let base = if *pos < chars.len() && chars[*pos].1 == '^' {
            *pos += 1;
            let start = *pos;
            while *pos < chars.len()
                && (chars[*pos].1.is_ascii_digit() || (*pos == start && chars[*pos].1 == '-'))
            {
                *pos += 1;
            }
            let text: String = chars[start..*pos].iter().map(|(_, c)| c).collect();
            let e: i64 = text.parse().map_err(|_| Sl2Error::Syntax {
                pos: chars.get(start).map_or(s_len(chars), |x| x.0),
                msg: "expected exponent".into(),
            })?;
            base.pow(e)
        } else {
            base
        };
        acc = acc.mul(&base);
    }
    if nested {
        return Err(Sl2Error::Syntax {
            pos: s_len(chars),
            msg: "unclosed '('".into(),
        });
    }
    Ok(acc)
}

fn s_len(chars: &[(usize, char)]) -> usize {
    chars.last().map_or(0, |x| x.0 + 1)
}

impl fmt::Display for AmalgamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.syllables.is_empty() {
            return f.write_str("I");
        }
        for s in &self.syllables {
            f.write_str(match s {
                Syllable::A => "A",
                Syllable::B => "B",
                Syllable::B2 => "B^2",
            })?;
        }
        Ok(())
    }
}

/// The unique amalgam normal form of `m`.
///
/// Euclid's algorithm writes `m = S^{q_1} A S^{q_2} A ⋯ (±S^{q_k})`; each
/// factor is then expanded with `S = AB`, `S⁻¹ = B²A` and merged.
pub fn amalgam_normal_form(m: &Sl2) -> AmalgamWord {
    let s_word = AmalgamWord {
        negative: false,
        syllables: vec![Syllable::A, Syllable::B],
    };
    let s_inv = AmalgamWord {
        negative: false,
        syllables: vec![Syllable::B2, Syllable::A],
    };
    let s_pow = |q: &BigInt, out: &mut AmalgamWord| {
        let unit = if q.is_negative() { &s_inv } else { &s_word };
        let n = q.abs().to_u64().expect("exponent fits in u64");
        for _ in 0..n {
            for &s in &unit.syllables {
                out.push(s);
            }
        }
    };
    let mut out = AmalgamWord::identity();
    let (mut a, mut b, mut c, mut d) = (m.a.clone(), m.b.clone(), m.c.clone(), m.d.clone());
    while !c.is_zero() {
        // nearest-integer quotient keeps the expansion short
        let two_c = &c * 2;
        let num: BigInt = &a * 2 + &c;
        let q = num.div_floor(&two_c);
        if !q.is_zero() {
            a -= &q * &c;
            b -= &q * &d;
            s_pow(&q, &mut out);
        }
        // m = A · (A⁻¹ m) with A⁻¹ [[a,b],[c,d]] = [[-c,-d],[a,b]]
        let (na, nb) = (-&c, -&d);
        c = std::mem::replace(&mut a, na);
        d = std::mem::replace(&mut b, nb);
        out.push(Syllable::A);
    }
    // now m = ±S^b with a = d = ±1
    if a.is_negative() {
        out.negative = !out.negative;
        b = -b;
    }
    s_pow(&b, &mut out);
    out
}

/// `(v, M)` with `v ∈ (Z/2)²` and `M ∈ SL(2,Z)`; the product is
/// `(v₁, M₁)(v₂, M₂) = (v₁ + M₁v₂, M₁M₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KleinSl2 {
    pub v: [u8; 2],
    pub m: Sl2,
}

pub const X: [u8; 2] = [1, 0];
pub const Y: [u8; 2] = [0, 1];
pub const ZERO: [u8; 2] = [0, 0];

pub fn vadd(u: [u8; 2], w: [u8; 2]) -> [u8; 2] {
    [u[0] ^ w[0], u[1] ^ w[1]]
}

pub fn format_vector(v: [u8; 2]) -> &'static str {
    match v {
        [0, 0] => "0",
        [1, 0] => "x",
        [0, 1] => "y",
        _ => "x+y",
    }
}

impl KleinSl2 {
    pub fn new(v: [u8; 2], m: Sl2) -> Self {
        KleinSl2 {
            v: [v[0] % 2, v[1] % 2],
            m,
        }
    }

    pub fn identity() -> Self {
        KleinSl2::new(ZERO, Sl2::identity())
    }

    pub fn mul(&self, o: &KleinSl2) -> KleinSl2 {
        KleinSl2 {
            v: vadd(self.v, self.m.act_mod2(o.v)),
            m: self.m.mul(&o.m),
        }
    }

    pub fn inverse(&self) -> KleinSl2 {
        let mi = self.m.inverse();
        KleinSl2 {
            v: mi.act_mod2(self.v),
            m: mi,
        }
    }

    pub fn pow(&self, e: i64) -> KleinSl2 {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = KleinSl2::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.v == ZERO && self.m.is_identity()
    }

    /// Whether this is `(0, ±I)`.
    pub fn is_central_sign(&self) -> bool {
        self.v == ZERO && self.m.is_plus_minus_identity()
    }
}

impl fmt::Display for KleinSl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_vector(self.v), self.m)
    }
}

pub fn commutes(p: &KleinSl2, q: &KleinSl2) -> bool {
    p.mul(q) == q.mul(p)
}

/// Images of `σ₁, σ₂, σ₃`: `(0, S)`, `(y, T)`, `(x, S)`.
pub fn klein_generators() -> [KleinSl2; 3] {
    [
        KleinSl2::new(ZERO, Sl2::s()),
        KleinSl2::new(Y, Sl2::t()),
        KleinSl2::new(X, Sl2::s()),
    ]
}

pub fn braid_to_klein(b: &BraidWord) -> Result<KleinSl2> {
    if b.strands() != 4 {
        return Err(Sl2Error::Strands(b.strands()));
    }
    let gens = klein_generators();
    let invs: Vec<KleinSl2> = gens.iter().map(KleinSl2::inverse).collect();
    Ok(b.letters().iter().fold(KleinSl2::identity(), |acc, l| {
        let g = if l.positive {
            &gens[l.index - 1]
        } else {
            &invs[l.index - 1]
        };
        acc.mul(g)
    }))
}

/// Bounded evidence that `g, h` generate a free group of rank 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePairReport {
    /// Each generator's normal form begins and ends with the same syllable
    /// type, and the two types differ.
    pub syllable_condition: bool,
    pub g_form: String,
    pub h_form: String,
    pub depth: usize,
    pub words_checked: u64,
    /// First nonempty reduced word found that evaluates to `(0, ±I)`.
    pub counterexample: Option<String>,
}

impl FreePairReport {
    pub fn passed(&self) -> bool {
        self.syllable_condition && self.counterexample.is_none()
    }
}

fn endpoints_type(w: &AmalgamWord) -> Option<bool> {
    match (w.first(), w.last()) {
        (Some(f), Some(l)) if f.is_a() == l.is_a() => Some(f.is_a()),
        _ => None,
    }
}

/// Checks the syllable-type condition and then searches every nonempty
/// freely reduced word of length at most `depth` in `g^±1, h^±1` for one
/// that evaluates to `(0, ±I)`. Passing is verification to that depth
/// only, not a proof of freeness.
pub fn free_pair_certificate(g: &KleinSl2, h: &KleinSl2, depth: usize) -> FreePairReport {
    let gf = amalgam_normal_form(&g.m);
    let hf = amalgam_normal_form(&h.m);
    let syllable_condition = match (endpoints_type(&gf), endpoints_type(&hf)) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    };
    // letters 0: g, 1: g⁻¹, 2: h, 3: h⁻¹
    let letters = [g.clone(), g.inverse(), h.clone(), h.inverse()];
    let names = ["g", "g^-1", "h", "h^-1"];
    let mut checked = 0u64;
    let mut path = Vec::new();
    // iterative deepening so that a witness, if any, is a shortest one
    let found = (1..=depth).any(|len| {
        search(
            &letters,
            &KleinSl2::identity(),
            &mut path,
            len,
            &mut checked,
        )
    });
    let counterexample =
        found.then(|| path.iter().map(|&k| names[k]).collect::<Vec<_>>().join(" "));
    FreePairReport {
        syllable_condition,
        g_form: gf.to_string(),
        h_form: hf.to_string(),
        depth,
        words_checked: checked,
        counterexample,
    }
}

/// Tests every reduced word of exactly `remaining` further letters; on
/// success `path` holds the witness.
fn search(
    letters: &[KleinSl2; 4],
    prefix: &KleinSl2,
    path: &mut Vec<usize>,
    remaining: usize,
    checked: &mut u64,
) -> bool {
    for next in 0..4 {
        if path.last().is_some_and(|&l| l ^ 1 == next) {
            continue;
        }
        let value = prefix.mul(&letters[next]);
        path.push(next);
        let hit = if remaining == 1 {
            *checked += 1;
            value.is_central_sign()
        } else {
            search(letters, &value, path, remaining - 1, checked)
        };
        if hit {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(s: &str) -> AmalgamWord {
        AmalgamWord::parse(s).unwrap()
    }

    #[test]
    fn fixed_relations() {
        let (a, b) = (Sl2::a(), Sl2::b());
        assert_eq!(a.pow(2), Sl2::neg_identity());
        assert_eq!(b.pow(3), Sl2::neg_identity());
        assert_eq!(a.mul(&b), Sl2::s());
        assert_eq!(a.mul(&b.pow(2)), Sl2::t());
        assert!(Sl2::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn normal_forms_of_small_elements() {
        assert_eq!(
            amalgam_normal_form(&Sl2::identity()),
            AmalgamWord::identity()
        );
        let m = amalgam_normal_form(&Sl2::neg_identity());
        assert!(m.negative && m.syllables.is_empty());
        assert_eq!(amalgam_normal_form(&Sl2::s()).to_string(), "AB");
        assert_eq!(amalgam_normal_form(&Sl2::t()).to_string(), "AB^2");
        assert_eq!(amalgam_normal_form(&Sl2::s().inverse()).to_string(), "B^2A");
    }

    #[test]
    fn merge_rules() {
        assert_eq!(aw("AA"), aw("-"));
        assert_eq!(aw("BBB").to_string(), "-I");
        assert_eq!(aw("B^2B^2").to_string(), "-B");
        assert_eq!(aw("A^-1").to_string(), "-A");
        assert_eq!(aw("B^-1").to_string(), "-B^2");
        assert_eq!(aw("(AB)^2"), aw("ABAB"));
        assert!(AmalgamWord::parse("AC").is_err());
        assert!(AmalgamWord::parse("(AB").is_err());
    }

    #[test]
    fn order_classes() {
        assert_eq!(order_class(&Sl2::identity()), OrderClass::Finite(1));
        assert_eq!(order_class(&Sl2::neg_identity()), OrderClass::Finite(2));
        assert_eq!(order_class(&Sl2::a()), OrderClass::Finite(4));
        assert_eq!(order_class(&Sl2::b()), OrderClass::Finite(6));
        assert_eq!(order_class(&Sl2::b().pow(2)), OrderClass::Finite(3));
        assert_eq!(order_class(&Sl2::s()), OrderClass::Infinite);
        assert_eq!(order_class(&Sl2::s().neg()), OrderClass::Infinite);
    }

    #[test]
    fn klein_product_and_inverse() {
        let [s1, s2, s3] = klein_generators();
        assert_eq!(KleinSl2::identity().mul(&s2), s2);
        for g in [&s1, &s2, &s3] {
            assert!(g.mul(&g.inverse()).is_identity());
            assert!(g.inverse().mul(g).is_identity());
        }
        assert!(!commutes(&s1, &s2));
        assert!(commutes(&s1, &s3));
    }

    #[test]
    fn klein_needs_four_strands() {
        assert!(braid_to_klein(&BraidWord::identity(3).unwrap()).is_err());
        assert!(braid_to_klein(&BraidWord::identity(4).unwrap())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn free_pair_degenerate_cases() {
        let g = KleinSl2::new(ZERO, Sl2::s().pow(2));
        let r = free_pair_certificate(&g, &g, 4);
        assert_eq!(r.counterexample.as_deref(), Some("g h^-1"));
        let s = KleinSl2::new(ZERO, Sl2::s());
        let r = free_pair_certificate(&s, &s.inverse(), 3);
        assert!(r.counterexample.is_some());
        let h = KleinSl2::new(ZERO, Sl2::t().pow(2));
        let r = free_pair_certificate(&g, &h, 6);
        assert!(r.counterexample.is_none());
        assert_eq!(r.words_checked, 2 * (3u64.pow(6) - 1));
    }
}
