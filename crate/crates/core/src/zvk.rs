//! Zariski–van Kampen presentations built from braid monodromy.
//!
//! For fiber generators `g_1..g_d` and base generators `t_1..t_n` with
//! monodromy braids `β_j`, the total space group has relators
//! `g_i^{t_j} = β_j(g_i)` where `h^g = g h g⁻¹` and `β_j` acts through
//! [`BraidWord::artin_action_on`]. Relators are listed with the fiber index
//! major and the base index minor; the closure relators `g_1⋯g_d` and
//! `t_1⋯t_n` come last.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::freegroup::{Alphabet, Automorphism, FreeGroupError, FreeWord};
use crate::presentation::{FinitePresentation, PresentationError, Relator};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ZvkError {
    #[error("monodromy JSON: {msg} at line {line}, column {column}")]
    Json {
        msg: String,
        line: usize,
        column: usize,
    },
    #[error("at least one base generator is required")]
    EmptyBase,
    #[error("braid for {base} has {strands} strands, expected {degree}")]
    StrandMismatch {
        base: String,
        strands: usize,
        degree: usize,
    },
    #[error("no braid given for base generator {0}")]
    MissingBraid(String),
    #[error("braid given for undeclared base generator {0}")]
    ExtraBraid(String),
    #[error("{got} fiber names given for degree {degree}")]
    FiberCount { got: usize, degree: usize },
    #[error("unknown base generator {0}")]
    UnknownBase(String),
    #[error("braid for {base}: {source}")]
    Braid { base: String, source: BraidError },
    #[error(transparent)]
    Names(#[from] FreeGroupError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

pub type Result<T, E = ZvkError> = std::result::Result<T, E>;

#[derive(Serialize, Deserialize)]
struct MonodromyFile {
    degree: usize,
    base: Vec<String>,
    braids: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fiber: Option<Vec<String>>,
}

/// Braid monodromy around the singular fibers of a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyData {
    degree: usize,
    base: Vec<String>,
    braids: Vec<BraidWord>,
    fiber: Vec<String>,
}

/// Which of the two product relators to append.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Closures {
    /// `g_1 ⋯ g_d = 1`
    pub fiber: bool,
    /// `t_1 ⋯ t_n = 1`
    pub base: bool,
}

impl Closures {
    pub const NONE: Closures = Closures {
        fiber: false,
        base: false,
    };
    pub const BOTH: Closures = Closures {
        fiber: true,
        base: true,
    };
}

impl MonodromyData {
    /// `fiber` defaults to `g1 .. gd` when `None`.
    pub fn new(
        degree: usize,
        base: Vec<String>,
        braids: Vec<BraidWord>,
        fiber: Option<Vec<String>>,
    ) -> Result<Self> {
        if base.is_empty() {
            return Err(ZvkError::EmptyBase);
        }
        if braids.len() != base.len() {
            return Err(ZvkError::MissingBraid(
                base.get(braids.len()).cloned().unwrap_or_default(),
            ));
        }
        for (name, b) in base.iter().zip(&braids) {
            if b.strands() != degree {
                return Err(ZvkError::StrandMismatch {
                    base: name.clone(),
                    strands: b.strands(),
                    degree,
                });
            }
        }
        let fiber = fiber.unwrap_or_else(|| (1..=degree).map(|i| format!("g{i}")).collect());
        if fiber.len() != degree {
            return Err(ZvkError::FiberCount {
                got: fiber.len(),
                degree,
            });
        }
        // names must be valid and jointly distinct
        Alphabet::new(fiber.iter().chain(&base).cloned())?;
        Ok(MonodromyData {
            degree,
            base,
            braids,
            fiber,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MonodromyFile = serde_json::from_str(text).map_err(|e| {
            // serde_json appends its own position; keep only the message
            let full = e.to_string();
            let msg = match full.rsplit_once(" at line ") {
                Some((m, _)) => m.to_string(),
                None => full,
            };
            ZvkError::Json {
                msg,
                line: e.line(),
                column: e.column(),
            }
        })?;
        if let Some(extra) = file.braids.keys().find(|k| !file.base.contains(k)) {
            return Err(ZvkError::ExtraBraid(extra.clone()));
        }
        let mut braids = Vec::with_capacity(file.base.len());
        for name in &file.base {
            let text = file
                .braids
                .get(name)
                .ok_or_else(|| ZvkError::MissingBraid(name.clone()))?;
            let b = BraidWord::parse(file.degree, text).map_err(|source| ZvkError::Braid {
                base: name.clone(),
                source,
            })?;
            braids.push(b);
        }
        Self::new(file.degree, file.base, braids, file.fiber)
    }

    pub fn to_json(&self) -> String {
        let file = MonodromyFile {
            degree: self.degree,
            base: self.base.clone(),
            braids: self
                .base
                .iter()
                .zip(&self.braids)
                .map(|(n, b)| (n.clone(), b.to_string()))
                .collect(),
            fiber: Some(self.fiber.clone()),
        };
        serde_json::to_string(&file).expect("plain data serializes")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn fiber(&self) -> &[String] {
        &self.fiber
    }

    pub fn braids(&self) -> &[BraidWord] {
        &self.braids
    }

    pub fn braid(&self, base: &str) -> Result<&BraidWord> {
        let j = self.base_index(base)?;
        Ok(&self.braids[j])
    }

    fn base_index(&self, name: &str) -> Result<usize> {
        self.base
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| ZvkError::UnknownBase(name.to_string()))
    }

    pub fn fiber_alphabet(&self) -> Arc<Alphabet> {
        Arc::new(Alphabet::new(self.fiber.iter().cloned()).expect("validated"))
    }

    /// Artin action of the braid over base generator `j` on the fiber
    /// free group.
    pub fn action(&self, j: usize) -> Automorphism {
        self.braids[j]
            .artin_action_on(self.fiber_alphabet())
            .expect("degree checked")
    }

    /// Replaces every braid by its conjugate `c β c⁻¹`.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<Self> {
        let braids = self
            .braids
            .iter()
            .map(|b| {
                c.mul(b)
                    .and_then(|cb| cb.mul(&c.inverse()))
                    .map_err(|source| ZvkError::Braid {
                        base: "conjugator".into(),
                        source,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromyData {
            braids,
            ..self.clone()
        })
    }
}

/// Shipped monodromy of the three-cuspidal quartic with respect to a
/// pencil through a general point: base loops `t1, t2, t3` around the two
/// cusp fibers and the tangency fiber. Strands are ordered `a1, a2, b2, b1`
/// so that the fiber boundary product is `a1 a2 b2 b1`.
pub fn quartic_monodromy() -> MonodromyData {
    MonodromyData::from_json(include_str!("../data/quartic_monodromy.json"))
        .expect("shipped data is valid")
}

fn label(alphabet: &Alphabet, lhs: String, rhs: &FreeWord) -> String {
    let r = alphabet.format_word(rhs);
    format!("{lhs} = {}", if r.is_empty() { "1" } else { &r })
}

/// Generators `g_i` then `t_j`; relators `g_i^{t_j} β_j(g_i)⁻¹`, then the
/// selected closures.
pub fn total_space_presentation(m: &MonodromyData, closures: Closures) -> FinitePresentation {
    let d = m.degree;
    let alphabet =
        Arc::new(Alphabet::new(m.fiber.iter().chain(&m.base).cloned()).expect("validated"));
    let actions: Vec<Automorphism> = (0..m.base.len()).map(|j| m.action(j)).collect();
    let mut relators = Vec::new();
    for i in 0..d {
        let g = FreeWord::generator(i);
        for (j, act) in actions.iter().enumerate() {
            let t = FreeWord::generator(d + j);
            let image = act.image(i);
            relators.push(Relator::labelled(
                g.conjugate(&t).mul(&image.inverse()),
                label(&alphabet, format!("{}^{}", m.fiber[i], m.base[j]), image),
            ));
        }
    }
    push_closures(&mut relators, &alphabet, d, m.base.len(), closures);
    FinitePresentation::new(alphabet, relators).expect("words within alphabet")
}

fn push_closures(
    relators: &mut Vec<Relator>,
    alphabet: &Alphabet,
    d: usize,
    n: usize,
    closures: Closures,
) {
    let product =
        |range: std::ops::Range<usize>| FreeWord::reduce(range.map(crate::freegroup::Letter::new));
    if closures.fiber {
        let w = product(0..d);
        relators.push(Relator::labelled(
            w.clone(),
            format!("{} = 1", alphabet.format_word(&w)),
        ));
    }
    if closures.base && n > 0 {
        let w = product(d..d + n);
        relators.push(Relator::labelled(
            w.clone(),
            format!("{} = 1", alphabet.format_word(&w)),
        ));
    }
}

fn fiber_only(m: &MonodromyData, with_product: bool) -> FinitePresentation {
    let alphabet = m.fiber_alphabet();
    let actions: Vec<Automorphism> = (0..m.base.len()).map(|j| m.action(j)).collect();
    let mut relators = Vec::new();
    for i in 0..m.degree {
        let g = FreeWord::generator(i);
        for act in &actions {
            let image = act.image(i);
            relators.push(Relator::labelled(
                g.mul(&image.inverse()),
                label(&alphabet, m.fiber[i].clone(), image),
            ));
        }
    }
    let closures = Closures {
        fiber: with_product,
        base: false,
    };
    push_closures(&mut relators, &alphabet, m.degree, 0, closures);
    FinitePresentation::new(alphabet, relators).expect("words within alphabet")
}

/// Complement in the projective plane: `g_i = β_j(g_i)` and `g_1⋯g_d = 1`.
pub fn projective_presentation(m: &MonodromyData) -> FinitePresentation {
    fiber_only(m, true)
}

/// Affine complement: `g_i = β_j(g_i)` only.
pub fn affine_presentation(m: &MonodromyData) -> FinitePresentation {
    fiber_only(m, false)
}

/// Total space presentation with `t_j = 1` imposed for each filled base
/// generator (those generators are removed), plus `extra` relators written
/// over the remaining generators.
pub fn fill_fibers(
    m: &MonodromyData,
    filled: &[&str],
    closures: Closures,
    extra: &[&str],
) -> Result<FinitePresentation> {
    for f in filled {
        m.base_index(f)?;
    }
    let p = total_space_presentation(m, closures).kill_generators(filled)?;
    let mut rels = Vec::with_capacity(extra.len());
    for e in extra {
        let w = match e.split_once('=') {
            Some((u, v)) => p.word(u)?.mul(&p.word(v)?.inverse()),
            None => p.word(e)?,
        };
        rels.push(Relator::labelled(w, *e));
    }
    Ok(p.with_relators(rels)?)
}
