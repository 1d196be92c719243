//! Tietze eliminations. Generators are only ever removed, never added.

use std::sync::Arc;

use crate::freegroup::{Alphabet, FreeWord};

use super::{FinitePresentation, PresentationError, Relator, Result};

/// Solves relator `r` for the generator `g` occurring once in it: from
/// `u g^ε v = 1` we get `g = (u⁻¹ v⁻¹)^ε`.
fn solve(word: &FreeWord, g: usize) -> FreeWord {
    let letters = word.letters();
    let k = letters
        .iter()
        .position(|l| l.gen == g)
        .expect("occurs once");
    let u = FreeWord::reduce(letters[..k].iter().copied());
    let v = FreeWord::reduce(letters[k + 1..].iter().copied());
    let s = u.inverse().mul(&v.inverse());
    if letters[k].inverse {
        s.inverse()
    } else {
        s
    }
}

/// Removes generator `gen` using relator `r`, in which it must occur
/// exactly once. Also returns the solved expression for `gen` in the old
/// alphabet.
pub fn tietze_eliminate_with_solution(
    p: &FinitePresentation,
    gen: &str,
    r: usize,
) -> Result<(FinitePresentation, FreeWord)> {
    let g = p.generator(gen)?;
    let rel = p.relators().get(r).ok_or(PresentationError::RelatorIndex {
        index: r,
        count: p.relators().len(),
    })?;
    let count = rel.word.occurrences(g);
    if count != 1 {
        return Err(PresentationError::NotSingleOccurrence {
            gen: gen.to_string(),
            relator: r,
            count,
        });
    }
    let solution = solve(&rel.word, g);
    let names: Vec<&str> = p
        .alphabet()
        .names()
        .iter()
        .filter(|n| n.as_str() != gen)
        .map(String::as_str)
        .collect();
    let alphabet = Arc::new(Alphabet::new(names)?);
    let remap = |k: usize| if k < g { k } else { k - 1 };
    let relators = p
        .relators()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != r)
        .map(|(_, rel)| {
            let w = rel
                .word
                .substitute(|k| {
                    if k == g {
                        solution.clone()
                    } else {
                        FreeWord::generator(k)
                    }
                })
                .relabel(|k| Some(remap(k)));
            Relator {
                word: w,
                label: rel.label.clone(),
            }
        })
        .collect();
    Ok((FinitePresentation::new(alphabet, relators)?, solution))
}

pub fn tietze_eliminate(p: &FinitePresentation, gen: &str, r: usize) -> Result<FinitePresentation> {
    tietze_eliminate_with_solution(p, gen, r).map(|(q, _)| q)
}

/// Result of [`simplify`].
#[derive(Clone, Debug)]
pub struct SimplifyOutcome {
    pub presentation: FinitePresentation,
    /// `(generator, expression)` in elimination order; each expression is
    /// written over the generators alive at that moment.
    pub eliminated: Vec<(String, String)>,
    pub steps: usize,
    /// Whether the step budget ran out before a fixpoint.
    pub budget_exhausted: bool,
}

/// Deduplicates relators and greedily eliminates generators that occur
/// exactly once in some relator, choosing at each step the elimination
/// with the smallest resulting total relator length (ties broken by
/// relator, then generator, index). Stops at a fixpoint or after `budget`
/// eliminations.
pub fn simplify(p: &FinitePresentation, budget: usize) -> SimplifyOutcome {
    let mut cur = p.dedup_relators();
    let mut eliminated = Vec::new();
    let mut steps = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, rel) in cur.relators().iter().enumerate() {
            for g in 0..cur.rank() {
                if rel.word.occurrences(g) != 1 {
                    continue;
                }
                let name = cur.alphabet().name(g).to_string();
                let (q, _) = tietze_eliminate_with_solution(&cur, &name, ri).expect("checked");
                let cost = q.dedup_relators().total_length();
                if best.is_none_or(|(c, _, _)| cost < c) {
                    best = Some((cost, ri, g));
                }
            }
        }
        let Some((_, ri, g)) = best else {
            return SimplifyOutcome {
                presentation: cur,
                eliminated,
                steps,
                budget_exhausted: false,
            };
        };
        if steps == budget {
            return SimplifyOutcome {
                presentation: cur,
                eliminated,
                steps,
                budget_exhausted: true,
            };
        }
        let name = cur.alphabet().name(g).to_string();
        let (q, sol) = tietze_eliminate_with_solution(&cur, &name, ri).expect("checked");
        eliminated.push((name, cur.format_word(&sol)));
        cur = q.dedup_relators();
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{todd_coxeter, DEFAULT_COSET_LIMIT};

    fn pres(s: &str) -> FinitePresentation {
        FinitePresentation::parse(s).unwrap()
    }

    fn order(p: &FinitePresentation) -> Option<usize> {
        todd_coxeter(p, &[], DEFAULT_COSET_LIMIT).index()
    }

    #[test]
    fn eliminate_identified_generator() {
        let p = pres("< a, b | b a^-1 >");
        let q = tietze_eliminate(&p, "b", 0).unwrap();
        assert_eq!(q.to_string(), "< a |  >");
    }

    #[test]
    fn solution_and_substitution() {
        let p = pres("< a, b, c | a b c, c^2 a >");
        let (q, sol) = tietze_eliminate_with_solution(&p, "b", 0).unwrap();
        assert_eq!(p.format_word(&sol), "a^-1 c^-1");
        assert_eq!(q.to_string(), "< a, c | c c a >");
        let (_, sol) =
            tietze_eliminate_with_solution(&pres("< a, b | a b^-1 a >"), "b", 0).unwrap();
        assert_eq!(sol, pres("< a, b | >").word("a a").unwrap());
    }

    #[test]
    fn eliminate_errors() {
        let p = pres("< a, b | a b a >");
        assert!(matches!(
            tietze_eliminate(&p, "a", 0),
            Err(PresentationError::NotSingleOccurrence { count: 2, .. })
        ));
        assert!(matches!(
            tietze_eliminate(&p, "z", 0),
            Err(PresentationError::UnknownGenerator(_))
        ));
        assert!(matches!(
            tietze_eliminate(&p, "b", 3),
            Err(PresentationError::RelatorIndex { .. })
        ));
    }

    #[test]
    fn simplify_fixpoint() {
        let p = pres("< a, b | a^2, b^3, (a b)^4 >");
        let out = simplify(&p, 100);
        assert_eq!(out.presentation, p);
        assert_eq!(out.steps, 0);
        assert!(!out.budget_exhausted);
    }

    #[test]
    fn simplify_inflated_cyclic_group() {
        // Z/6 dressed up with two redundant generators
        let p = pres("< a, b, c | a^6, b a^-2, c b^-1 a^-1, c^2 b^-2 a^-2 >");
        let out = simplify(&p, 100);
        assert_eq!(out.presentation.rank(), 1);
        assert_eq!(order(&out.presentation), Some(6));
        assert_eq!(order(&p), Some(6));
    }

    #[test]
    fn budget_is_respected() {
        let p = pres("< a, b, c | b a^-1, c b^-1, a^5 >");
        let out = simplify(&p, 1);
        assert!(out.budget_exhausted);
        assert_eq!(out.steps, 1);
        assert_eq!(out.presentation.rank(), 2);
    }
}
