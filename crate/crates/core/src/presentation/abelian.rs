//! Abelianization via Smith normal form over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Z^free_rank ⊕ Z/t_1 ⊕ ⋯ ⊕ Z/t_k` with `t_1 | t_2 | ⋯`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn from_relation_matrix(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let diag = smith_diagonal(&mut m, cols);
        let rank = diag.len();
        AbelianInvariants {
            free_rank: cols - rank,
            torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |a, b| a * b))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the
/// next. Destroys `m`.
fn smith_diagonal(m: &mut [Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        let p = m[t][t].clone();
        for i in t + 1..rows {
            if !m[i][t].is_zero() {
                let q = m[i][t].div_floor(&p);
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..cols {
            if !m[t][j].is_zero() {
                let q = m[t][j].div_floor(&p);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // enforce divisibility: fold an offending row into row t
        let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &p).is_zero()));
        if let Some(i) = offending {
            for j in t..cols {
                let v = m[i][j].clone();
                m[t][j] += v;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Whether `v` lies in the rational row space of `rows`.
pub(crate) fn in_rational_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let to_q = |r: &[i64]| -> Vec<BigRational> {
        r.iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect()
    };
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let reduce = |mut r: Vec<BigRational>, basis: &[Vec<BigRational>], pivots: &[usize]| {
        for (b, &p) in basis.iter().zip(pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone() / b[p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= f.clone() * y;
                }
            }
        }
        r
    };
    for row in rows {
        let r = reduce(to_q(row), &basis, &pivots);
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            basis.push(r);
            pivots.push(p);
        }
    }
    reduce(to_q(v), &basis, &pivots).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rows: &[&[i64]], cols: usize) -> String {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        AbelianInvariants::from_relation_matrix(&rows, cols).to_string()
    }

    #[test]
    fn smith_examples() {
        assert_eq!(inv(&[&[2, 0], &[0, 3]], 2), "Z/6");
        assert_eq!(inv(&[&[2, 0], &[0, 4]], 2), "Z/2 x Z/4");
        assert_eq!(inv(&[&[2, 4], &[6, 8]], 2), "Z/2 x Z/4");
        assert_eq!(inv(&[], 3), "Z^3");
        assert_eq!(inv(&[&[1, -1, 0]], 3), "Z^2");
        assert_eq!(inv(&[&[1]], 1), "1");
        assert_eq!(inv(&[&[0, 0]], 2), "Z^2");
    }

    #[test]
    fn span_membership() {
        let rows = vec![vec![1, 1, 0], vec![0, 2, 2]];
        assert!(in_rational_span(&rows, &[1, 3, 2]));
        assert!(!in_rational_span(&rows, &[1, 0, 0]));
        assert!(in_rational_span(&[], &[0, 0]));
    }
}
