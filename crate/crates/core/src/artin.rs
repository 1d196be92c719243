//! Finite-type Artin groups of types `A_n`, `D_n`, `E_6`, `E_7`, `E_8`.
//!
//! Coxeter group elements are permutations of the root system. Simple
//! elements of the Garside structure are positive lifts of Coxeter
//! elements, and the left-greedy normal form `Δ^k · s_1 ⋯ s_m` solves the
//! word problem.
//!
//! Diagram labels: `A_n` is the chain `a1 – a2 – ⋯ – an`; `D_n` is the
//! chain `a1 – ⋯ – a(n-2)` with `a(n-1)` and `an` both on `a(n-2)`; `E_n`
//! is the chain `a2 – a3 – ⋯ – an` with `a1` on `a4`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::freegroup::{Alphabet, FreeGroupError, FreeWord};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ArtinError {
    #[error("unsupported Coxeter type {0:?}")]
    InvalidType(String),
    #[error("generator a{index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error(transparent)]
    Word(#[from] FreeGroupError),
}

pub type Result<T, E = ArtinError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    D(usize),
    E(usize),
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ty = match family.to_ascii_uppercase() {
            'A' if rank >= 1 => CartanType::A(rank),
            'D' if rank >= 4 => CartanType::D(rank),
            'E' if (6..=8).contains(&rank) => CartanType::E(rank),
            _ => return Err(ArtinError::InvalidType(format!("{family}{rank}"))),
        };
        Ok(ty)
    }

    /// Parses `A3`, `D4`, `E6` and so on.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| ArtinError::InvalidType(s.into()))?;
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| ArtinError::InvalidType(s.into()))?;
        CartanType::new(family, rank)
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::D(n) | CartanType::E(n) => n,
        }
    }

    /// Diagram edges as 0-based pairs `(i, j)` with `i < j`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut e = Vec::new();
        match self {
            CartanType::A(_) => e.extend((1..n).map(|i| (i - 1, i))),
            CartanType::D(_) => {
                e.extend((1..n - 1).map(|i| (i - 1, i)));
                e.push((n - 3, n - 1));
            }
            CartanType::E(_) => {
                e.extend((2..n).map(|i| (i - 1, i)));
                e.push((0, 3));
            }
        }
        e.sort_unstable();
        e
    }

    pub fn adjacent(self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges().contains(&key)
    }

    pub fn positive_root_count(self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::D(n) => n * (n - 1),
            CartanType::E(6) => 36,
            CartanType::E(7) => 63,
            CartanType::E(_) => 120,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// A Coxeter group element as a permutation of root indices.
pub type Perm = Arc<[u16]>;

#[derive(Default)]
struct Interner {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

pub struct CoxeterSystem {
    ty: CartanType,
    /// Coefficients in the basis of simple roots.
    roots: Vec<Vec<i32>>,
    positive: Vec<bool>,
    simple_roots: Vec<u16>,
    reflections: Vec<Perm>,
    identity: Perm,
    longest: Perm,
    simples: RwLock<Interner>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("type", &self.ty)
            .field("roots", &self.roots.len())
            .finish()
    }
}

/// Left-greedy normal form `Δ^delta_power · s_1 ⋯ s_m`; simples are ids
/// into the owning system's intern table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub delta_power: i64,
    pub simples: Vec<u32>,
}

impl CoxeterSystem {
    pub fn new(ty: CartanType) -> Self {
        let n = ty.rank();
        let mut cartan = vec![vec![0i32; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in ty.edges() {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        let reflect = |beta: &[i32], i: usize| -> Vec<i32> {
            let pairing: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };
        // the Weyl orbit of the simple roots is the whole root system
        let mut roots: Vec<Vec<i32>> = Vec::new();
        let mut index: HashMap<Vec<i32>, u16> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            index.insert(e.clone(), roots.len() as u16);
            roots.push(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let r = reflect(&beta, i);
                if !index.contains_key(&r) {
                    index.insert(r.clone(), roots.len() as u16);
                    roots.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
        let positive: Vec<bool> = roots.iter().map(|r| r.iter().all(|&c| c >= 0)).collect();
        let reflections: Vec<Perm> = (0..n)
            .map(|i| roots.iter().map(|r| index[&reflect(r, i)]).collect())
            .collect();
        let identity: Perm = (0..roots.len() as u16).collect();
        let mut sys = CoxeterSystem {
            ty,
            roots,
            positive,
            simple_roots: (0..n as u16).collect(),
            reflections,
            identity: identity.clone(),
            longest: identity,
            simples: RwLock::new(Interner::default()),
        };
        sys.longest = sys.climb(sys.identity.clone());
        sys
    }

    /// Multiplies by simple reflections on the right while the length
    /// grows; ends at the longest element.
    fn climb(&self, mut w: Perm) -> Perm {
        while let Some(i) = (0..self.rank()).find(|&i| !self.right_descent(&w, i)) {
            w = self.mul_simple_right(&w, i);
        }
        w
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn reflection(&self, i: usize) -> &Perm {
        &self.reflections[i]
    }

    pub fn identity(&self) -> &Perm {
        &self.identity
    }

    pub fn longest_element(&self) -> &Perm {
        &self.longest
    }

    /// `(p ∘ q)(r) = p(q(r))`.
    pub fn compose(&self, p: &[u16], q: &[u16]) -> Perm {
        q.iter().map(|&r| p[r as usize]).collect()
    }

    pub fn invert(&self, p: &[u16]) -> Perm {
        let mut out = vec![0u16; p.len()];
        for (r, &img) in p.iter().enumerate() {
            out[img as usize] = r as u16;
        }
        out.into()
    }

    fn mul_simple_right(&self, w: &[u16], i: usize) -> Perm {
        self.compose(w, &self.reflections[i])
    }

    fn mul_simple_left(&self, w: &[u16], i: usize) -> Perm {
        self.compose(&self.reflections[i], w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &[u16]) -> usize {
        w.iter()
            .enumerate()
            .filter(|&(r, &img)| self.positive[r] && !self.positive[img as usize])
            .count()
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn right_descent(&self, w: &[u16], i: usize) -> bool {
        !self.positive[w[self.simple_roots[i] as usize] as usize]
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w⁻¹(α_i) < 0`.
    pub fn left_descent(&self, w: &[u16], i: usize) -> bool {
        let target = self.simple_roots[i];
        let r = w
            .iter()
            .position(|&img| img == target)
            .expect("permutation");
        !self.positive[r]
    }

    /// Lexicographically smallest reduced word, 0-based generators.
    pub fn reduced_word(&self, w: &[u16]) -> Vec<usize> {
        let mut w: Perm = w.into();
        let mut out = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.left_descent(&w, i)) {
            out.push(i);
            w = self.mul_simple_left(&w, i);
        }
        out
    }

    /// Element of the Coxeter group represented by a word; signs are
    /// irrelevant there.
    pub fn evaluate(&self, word: &[usize]) -> Perm {
        word.iter()
            .fold(self.identity.clone(), |w, &i| self.mul_simple_right(&w, i))
    }

    /// Breadth-first enumeration of the group, stopping after `limit`
    /// elements; `None` if the limit is reached first.
    pub fn enumerate_order(&self, limit: usize) -> Option<usize> {
        let mut seen: std::collections::HashSet<Perm> = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity.clone());
        queue.push_back(self.identity.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let x = self.mul_simple_right(&w, i);
                if !seen.contains(&x) {
                    if seen.len() == limit {
                        return None;
                    }
                    seen.insert(x.clone());
                    queue.push_back(x);
                }
            }
        }
        Some(seen.len())
    }

    fn check(&self, w: &FreeWord) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.rank() => Err(ArtinError::IndexOutOfRange {
                index: g + 1,
                rank: self.rank(),
            }),
            _ => Ok(()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::numbered("a", self.rank())
    }

    /// Parses `a1 a2^-1 (a1 a3)^2`, with a trailing ` ^k` raising the
    /// whole word.
    pub fn parse_word(&self, s: &str) -> Result<FreeWord> {
        Ok(self.alphabet().parse_word(s)?)
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        self.alphabet().format_word(w)
    }

    fn intern(&self, p: Perm) -> u32 {
        if let Some(&id) = self.simples.read().expect("intern lock").index.get(&p) {
            return id;
        }
        let mut table = self.simples.write().expect("intern lock");
        if let Some(&id) = table.index.get(&p) {
            return id;
        }
        let id = table.elements.len() as u32;
        table.elements.push(p.clone());
        table.index.insert(p, id);
        id
    }

    pub fn simple(&self, id: u32) -> Perm {
        self.simples.read().expect("intern lock").elements[id as usize].clone()
    }

    /// Number of distinct simples seen so far.
    pub fn interned_count(&self) -> usize {
        self.simples.read().expect("intern lock").elements.len()
    }

    /// Makes `(s, t)` left-weighted: moves letters from the front of `t`
    /// to the back of `s` until every left descent of `t` is a right
    /// descent of `s`. Returns whether anything moved.
    fn slide(&self, s: &mut Perm, t: &mut Perm) -> bool {
        let mut moved = false;
        while let Some(i) =
            (0..self.rank()).find(|&i| self.left_descent(t, i) && !self.right_descent(s, i))
        {
            *s = self.mul_simple_right(s, i);
            *t = self.mul_simple_left(t, i);
            moved = true;
        }
        moved
    }

    /// Conjugation by `Δ`: `w ↦ w₀ w w₀`.
    fn tau(&self, w: &[u16]) -> Perm {
        self.compose(&self.compose(&self.longest, w), &self.longest)
    }

    pub fn normal_form(&self, word: &FreeWord) -> Result<GarsideNormalForm> {
        self.check(word)?;
        let mut delta = 0i64;
        let mut factors: Vec<Perm> = Vec::new();
        for l in word.letters() {
            let x = if l.inverse {
                // a⁻¹ = Δ⁻¹ · (w₀ s_i)⁺, and P Δ⁻¹ = Δ⁻¹ τ(P)
                delta -= 1;
                for f in factors.iter_mut() {
                    *f = self.tau(f);
                }
                self.mul_simple_right(&self.longest, l.gen)
            } else {
                self.reflections[l.gen].clone()
            };
            factors.push(x);
            self.settle(&mut factors);
            while factors.first().is_some_and(|f| *f == self.longest) {
                factors.remove(0);
                delta += 1;
            }
            while factors.last().is_some_and(|f| *f == self.identity) {
                factors.pop();
            }
        }
        Ok(GarsideNormalForm {
            delta_power: delta,
            simples: factors.into_iter().map(|f| self.intern(f)).collect(),
        })
    }

    /// Right-to-left sliding passes until every adjacent pair is
    /// left-weighted.
    fn settle(&self, factors: &mut [Perm]) {
        loop {
            let mut changed = false;
            for j in (1..factors.len()).rev() {
                let (left, right) = factors.split_at_mut(j);
                changed |= self.slide(&mut left[j - 1], &mut right[0]);
            }
            if !changed {
                return;
            }
        }
    }

    /// Word for `Δ`.
    pub fn delta_word(&self) -> FreeWord {
        positive_word(&self.reduced_word(&self.longest))
    }

    /// A word representing the normal form.
    pub fn nf_word(&self, nf: &GarsideNormalForm) -> FreeWord {
        let mut w = self.delta_word().pow(nf.delta_power);
        for &id in &nf.simples {
            w = w.mul(&positive_word(&self.reduced_word(&self.simple(id))));
        }
        w
    }

    /// `Δ^k · [a1 a2] · [a3]`.
    pub fn format_nf(&self, nf: &GarsideNormalForm) -> String {
        let al = self.alphabet();
        let mut parts = vec![format!("Δ^{}", nf.delta_power)];
        for &id in &nf.simples {
            let names: Vec<&str> = self
                .reduced_word(&self.simple(id))
                .iter()
                .map(|&i| al.name(i))
                .collect();
            parts.push(format!("[{}]", names.join(" ")));
        }
        parts.join(" · ")
    }

    pub fn words_equal(&self, u: &FreeWord, v: &FreeWord) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    /// Whether `w` commutes with every generator.
    pub fn is_central(&self, w: &FreeWord) -> Result<bool> {
        self.check(w)?;
        for i in 0..self.rank() {
            let a = FreeWord::generator(i);
            if !self.words_equal(&w.mul(&a), &a.mul(w))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `j` with `Δ a_i Δ⁻¹ = a_j` for each `i`, found by normal forms;
    /// `None` if some conjugate is not a generator.
    pub fn delta_conjugation(&self) -> Option<Vec<usize>> {
        let d = self.delta_word();
        let gens: Vec<GarsideNormalForm> = (0..self.rank())
            .map(|j| self.normal_form(&FreeWord::generator(j)).expect("in range"))
            .collect();
        (0..self.rank())
            .map(|i| {
                let c = FreeWord::generator(i).conjugate(&d);
                let nf = self.normal_form(&c).expect("in range");
                gens.iter().position(|g| *g == nf)
            })
            .collect()
    }
}

fn positive_word(gens: &[usize]) -> FreeWord {
    FreeWord::from_signed(&gens.iter().map(|&g| (g, 1)).collect::<Vec<_>>())
}

/// Image under the map sending each generator to `1`.
pub fn abelianization(w: &FreeWord) -> i64 {
    w.total_exponent()
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0..rank, prop_oneof![Just(1i8), Just(-1i8)]), 0..=max_len)
            .prop_map(|v| FreeWord::from_signed(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip_is_idempotent_a4(w in word(4, 12)) {
            let s = CoxeterSystem::new(CartanType::A(4));
            let nf = s.normal_form(&w).unwrap();
            prop_assert_eq!(s.normal_form(&s.nf_word(&nf)).unwrap(), nf);
        }

        #[test]
        fn round_trip_is_idempotent_e6(w in word(6, 10)) {
            let s = CoxeterSystem::new(CartanType::E(6));
            let nf = s.normal_form(&w).unwrap();
            prop_assert_eq!(s.normal_form(&s.nf_word(&nf)).unwrap(), nf);
        }

        #[test]
        fn normal_form_is_a_homomorphism_image(u in word(4, 8), v in word(4, 8)) {
            let s = CoxeterSystem::new(CartanType::D(4));
            let lhs = s.normal_form(&u.mul(&v)).unwrap();
            let rhs = s.normal_form(&s.nf_word(&s.normal_form(&u).unwrap()).mul(&v)).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                abelianization(&u.mul(&v)),
                abelianization(&u) + abelianization(&v)
            );
        }
    }
}
