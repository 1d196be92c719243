//! Finite group presentations, Tietze elimination and Todd–Coxeter coset
//! enumeration.
//!
//! Text format: `< g1, g2 | w1, w2 >` with words in the shared syntax. A
//! relator may also be written as an equation `u = v`, which is stored as
//! `u v⁻¹`. Relators are kept freely and cyclically reduced; trivial
//! relators are dropped on construction.

mod abelian;
mod coset;
mod tietze;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::freegroup::{Alphabet, FreeGroupError, FreeWord, Letter};

pub use abelian::AbelianInvariants;
pub use coset::{
    equal_in_quotient, equal_modulo_central_cyclic, todd_coxeter, CosetTable, EnumerationStatus,
    Verdict, DEFAULT_COSET_LIMIT,
};
pub use tietze::{simplify, tietze_eliminate, tietze_eliminate_with_solution, SimplifyOutcome};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("presentation syntax: {0}")]
    Syntax(String),
    #[error(transparent)]
    Word(#[from] FreeGroupError),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("relator index {index} out of range ({count} relators)")]
    RelatorIndex { index: usize, count: usize },
    #[error("generator {gen} occurs {count} times in relator {relator}, expected exactly once")]
    NotSingleOccurrence {
        gen: String,
        relator: usize,
        count: usize,
    },
}

pub type Result<T, E = PresentationError> = std::result::Result<T, E>;

/// A relator with an optional human-readable label (typically the equation
/// it came from).
#[derive(Clone, Debug)]
pub struct Relator {
    pub word: FreeWord,
    pub label: Option<String>,
}

impl Relator {
    pub fn new(word: FreeWord) -> Self {
        Relator { word, label: None }
    }

    pub fn labelled(word: FreeWord, label: impl Into<String>) -> Self {
        Relator {
            word,
            label: Some(label.into()),
        }
    }
}

/// Generators and relators. Equality ignores labels.
#[derive(Clone, Debug)]
pub struct FinitePresentation {
    alphabet: Arc<Alphabet>,
    relators: Vec<Relator>,
}

impl PartialEq for FinitePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.relators.len() == other.relators.len()
            && self
                .relators
                .iter()
                .zip(&other.relators)
                .all(|(a, b)| a.word == b.word)
    }
}

impl Eq for FinitePresentation {}

impl FinitePresentation {
    pub fn new(alphabet: Arc<Alphabet>, relators: Vec<Relator>) -> Result<Self> {
        let rank = alphabet.rank();
        let mut kept = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(g) = r.word.max_generator() {
                if g >= rank {
                    return Err(FreeGroupError::GeneratorOutOfRange { gen: g, rank }.into());
                }
            }
            let word = r.word.cyclically_reduced();
            if !word.is_identity() {
                kept.push(Relator {
                    word,
                    label: r.label,
                });
            }
        }
        Ok(FinitePresentation {
            alphabet,
            relators: kept,
        })
    }

    pub fn from_words(alphabet: Arc<Alphabet>, words: Vec<FreeWord>) -> Result<Self> {
        Self::new(alphabet, words.into_iter().map(Relator::new).collect())
    }

    /// Parses the `< gens | rels >` text format.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| PresentationError::Syntax("expected '< ... >'".into()))?;
        let (gens, rels) = inner
            .split_once('|')
            .ok_or_else(|| PresentationError::Syntax("expected '|'".into()))?;
        let names: Vec<&str> = gens
            .split(',')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .collect();
        let alphabet = Arc::new(Alphabet::new(names)?);
        let mut relators = Vec::new();
        for item in rels.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let word = match item.split_once('=') {
                Some((u, v)) => {
                    let u = alphabet.parse_word(u)?;
                    let v = alphabet.parse_word(v)?;
                    u.mul(&v.inverse())
                }
                None => alphabet.parse_word(item)?,
            };
            relators.push(Relator::labelled(word, item));
        }
        Self::new(alphabet, relators)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relator_words(&self) -> impl Iterator<Item = &FreeWord> {
        self.relators.iter().map(|r| &r.word)
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.word.len()).sum()
    }

    pub fn generator(&self, name: &str) -> Result<usize> {
        self.alphabet
            .index_of(name)
            .ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))
    }

    pub fn word(&self, s: &str) -> Result<FreeWord> {
        Ok(self.alphabet.parse_word(s)?)
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        self.alphabet.format_word(w)
    }

    /// Adds relators (cyclically reduced, trivial ones dropped).
    pub fn with_relators(&self, extra: Vec<Relator>) -> Result<Self> {
        let mut all = self.relators.clone();
        all.extend(extra);
        Self::new(self.alphabet.clone(), all)
    }

    /// Sets the named generators to the identity and removes them.
    pub fn kill_generators(&self, names: &[&str]) -> Result<Self> {
        let mut dead = vec![false; self.rank()];
        for n in names {
            dead[self.generator(n)?] = true;
        }
        let mut remap = vec![None; self.rank()];
        let mut kept = Vec::new();
        for g in 0..self.rank() {
            if !dead[g] {
                remap[g] = Some(kept.len());
                kept.push(self.alphabet.name(g).to_string());
            }
        }
        let alphabet = Arc::new(Alphabet::new(kept)?);
        let relators = self
            .relators
            .iter()
            .map(|r| Relator {
                word: r.word.relabel(|g| remap[g]),
                label: r.label.clone(),
            })
            .collect();
        Self::new(alphabet, relators)
    }

    /// Re-expresses the presentation over a larger alphabet that contains
    /// every current generator name.
    pub fn embed_into(&self, alphabet: Arc<Alphabet>) -> Result<Self> {
        let mut remap = Vec::with_capacity(self.rank());
        for name in self.alphabet.names() {
            remap.push(
                alphabet
                    .index_of(name)
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?,
            );
        }
        let relators = self
            .relators
            .iter()
            .map(|r| Relator {
                word: r.word.relabel(|g| Some(remap[g])),
                label: r.label.clone(),
            })
            .collect();
        Self::new(alphabet, relators)
    }

    /// Removes relators that coincide with an earlier one up to cyclic
    /// rotation and inversion.
    pub fn dedup_relators(&self) -> Self {
        let mut seen = std::collections::HashSet::new();
        let relators = self
            .relators
            .iter()
            .filter(|r| seen.insert(r.word.cyclic_key()))
            .cloned()
            .collect();
        FinitePresentation {
            alphabet: self.alphabet.clone(),
            relators,
        }
    }

    /// Whether the relator sets agree up to order, cyclic rotation and
    /// inversion of individual relators (and duplicates).
    pub fn same_relators(&self, other: &FinitePresentation) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        self.relator_keys() == other.relator_keys()
    }

    pub fn relator_keys(&self) -> std::collections::BTreeSet<Vec<Letter>> {
        self.relators.iter().map(|r| r.word.cyclic_key()).collect()
    }

    /// Whether a relator cyclically equivalent to `w` (or its inverse) is
    /// present.
    pub fn has_relator(&self, w: &FreeWord) -> bool {
        let key = w.cyclic_key();
        self.relators.iter().any(|r| r.word.cyclic_key() == key)
    }

    /// Exponent-sum vector of a word over this alphabet.
    pub fn exponent_vector(&self, w: &FreeWord) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for l in w.letters() {
            v[l.gen] += l.sign();
        }
        v
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| self.exponent_vector(&r.word))
            .collect();
        AbelianInvariants::from_relation_matrix(&rows, self.rank())
    }

    /// Whether the image of `w` in the abelianization has finite order.
    pub fn abelian_image_is_torsion(&self, w: &FreeWord) -> bool {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| self.exponent_vector(&r.word))
            .collect();
        abelian::in_rational_span(&rows, &self.exponent_vector(w))
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.alphabet.names().join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| self.alphabet.format_word(&r.word))
            .collect();
        write!(f, "{} >", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let p = FinitePresentation::parse("< a, b | a^3, a b = b a, b^2 >").unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relators().len(), 3);
        let text = p.to_string();
        assert_eq!(text, "< a, b | a a a, a b a^-1 b^-1, b b >");
        let q = FinitePresentation::parse(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_string(), text);
    }

    #[test]
    fn empty_relators_and_generators() {
        let p = FinitePresentation::parse("< a, b | >").unwrap();
        assert_eq!(p.relators().len(), 0);
        assert_eq!(p.to_string(), "< a, b |  >");
        assert_eq!(FinitePresentation::parse(&p.to_string()).unwrap(), p);
        let triv = FinitePresentation::parse("< | >").unwrap();
        assert_eq!(triv.rank(), 0);
    }

    #[test]
    fn relators_are_cyclically_reduced() {
        let p = FinitePresentation::parse("< a, b | b a b^-1, a a^-1 >").unwrap();
        assert_eq!(p.to_string(), "< a, b | a >");
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            FinitePresentation::parse("a, b | a"),
            Err(PresentationError::Syntax(_))
        ));
        assert!(matches!(
            FinitePresentation::parse("< a, b  a >"),
            Err(PresentationError::Syntax(_))
        ));
        assert!(matches!(
            FinitePresentation::parse("< a | c >"),
            Err(PresentationError::Word(_))
        ));
    }

    #[test]
    fn kill_and_dedup() {
        let p = FinitePresentation::parse("< a, b, t | t a t^-1 a^-1, b a, a b >").unwrap();
        let q = p.kill_generators(&["t"]).unwrap();
        assert_eq!(q.to_string(), "< a, b | b a, a b >");
        assert_eq!(q.dedup_relators().to_string(), "< a, b | b a >");
        assert!(q.same_relators(&q.dedup_relators()));
    }

    #[test]
    fn abelianization_of_small_groups() {
        let p = FinitePresentation::parse("< a, b | a^2, b^3, a b a^-1 b^-1 >").unwrap();
        assert_eq!(p.abelianization().to_string(), "Z/6");
        let f = FinitePresentation::parse("< a, b | >").unwrap();
        assert_eq!(f.abelianization().to_string(), "Z^2");
        let z = FinitePresentation::parse("< a, b | a b^-1 >").unwrap();
        assert_eq!(z.abelianization().to_string(), "Z");
        let b = p.word("b").unwrap();
        assert!(p.abelian_image_is_torsion(&b));
        assert!(!z.abelian_image_is_torsion(&z.word("a").unwrap()));
    }
}
