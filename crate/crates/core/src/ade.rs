//! Simple plane curve singularities of types `A`, `D`, `E`: Milnor algebra
//! bases from a two-variable Gröbner engine, deformation polynomials,
//! `μ`, branch counts, and the homological monodromy generated by
//! symplectic transvections over the Dynkin diagram.
//!
//! Normal forms: `A_n = x1^2 + x2^(n+1)`, `D_n = x1^2 x2 + x2^(n-1)`,
//! `E6 = x1^3 + x2^4`, `E7 = x1^3 + x1 x2^3`, `E8 = x1^3 + x2^5`.
//! Node labels follow [`crate::artin`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::artin::CartanType;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AdeError {
    #[error("singularity is not isolated: no leading monomial is a pure power of {0}")]
    NotIsolated(&'static str),
    #[error("expected a binomial, got {0} terms")]
    NotBinomial(usize),
    #[error("weights are not determined by {0}")]
    Weights(String),
    #[error("milnor number by weights is {formula} but the basis has {basis} elements")]
    MilnorMismatch { formula: String, basis: usize },
}

pub type Result<T, E = AdeError> = std::result::Result<T, E>;

/// Exponents `(e1, e2)` of `x1^e1 x2^e2`.
pub type Monomial = (u32, u32);

/// Degree-lexicographic with `x1 > x2`.
pub fn deglex(a: &Monomial, b: &Monomial) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

pub fn format_monomial(m: &Monomial) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("x1", m.0), part("x2", m.1)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A polynomial in `x1, x2` over `Q`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial2 {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(BigRational::from_integer(c.into()), m);
        }
        p
    }

    fn add_term(&mut self, c: BigRational, m: Monomial) {
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| deglex(a.0, b.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn sub(&self, o: &Polynomial2) -> Polynomial2 {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }

    /// `c · x^m · self`
    pub fn scale(&self, c: &BigRational, m: Monomial) -> Polynomial2 {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert((k.0 + m.0, k.1 + m.1), v * c);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Polynomial2 {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let (e, m) = if var == 0 {
                (a, (a.wrapping_sub(1), b))
            } else {
                (b, (a, b.wrapping_sub(1)))
            };
            if e > 0 {
                out.add_term(c * BigRational::from_integer(e.into()), m);
            }
        }
        out
    }

    /// Scales so that the leading coefficient is 1.
    fn monic(&self) -> Polynomial2 {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip(), (0, 0)),
            None => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| deglex(b.0, a.0));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            let mono = format_monomial(m);
            match (a.is_one(), mono.as_str()) {
                (true, _) => f.write_str(&mono)?,
                (false, "1") => write!(f, "{a}")?,
                (false, _) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Fully reduces `p` modulo `basis`.
fn reduce(p: &Polynomial2, basis: &[Polynomial2]) -> Polynomial2 {
    let mut p = p.clone();
    let mut rem = Polynomial2::zero();
    while let Some((m, c)) = p.leading() {
        let c = c.clone();
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading()?;
            divides(&gm, &m).then(|| (g, gm, gc.clone()))
        });
        match divisor {
            Some((g, gm, gc)) => {
                p = p.sub(&g.scale(&(c / gc), (m.0 - gm.0, m.1 - gm.1)));
            }
            None => {
                p.terms.remove(&m);
                rem.add_term(c, m);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial2, g: &Polynomial2) -> Polynomial2 {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = (fm.0.max(gm.0), fm.1.max(gm.1));
    f.scale(&fc.recip(), (l.0 - fm.0, l.1 - fm.1))
        .sub(&g.scale(&gc.recip(), (l.0 - gm.0, l.1 - gm.1)))
}

/// Reduced Gröbner basis under [`deglex`], monic and sorted by leading
/// monomial.
pub fn groebner_basis(generators: &[Polynomial2]) -> Vec<Polynomial2> {
    let mut g: Vec<Polynomial2> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (im, _) = g[i].leading().expect("nonzero");
        let (jm, _) = g[j].leading().expect("nonzero");
        // coprime leading monomials give a zero remainder
        if im.0.min(jm.0) == 0 && im.1.min(jm.1) == 0 {
            continue;
        }
        let r = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalize, then interreduce
    let mut minimal: Vec<Polynomial2> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let pm = p.leading().expect("nonzero").0;
        let redundant = g.iter().enumerate().any(|(l, q)| {
            let qm = q.leading().expect("nonzero").0;
            l != k && divides(&qm, &pm) && (qm != pm || l < k)
        });
        if !redundant {
            minimal.push(p.monic());
        }
    }
    let mut reduced: Vec<Polynomial2> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial2> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, p)| p.clone())
                .collect();
            let (lm, lc) = minimal[k].leading().expect("nonzero");
            let mut tail = minimal[k].clone();
            tail.terms.remove(&lm);
            let mut out = reduce(&tail, &others);
            out.add_term(lc.clone(), lm);
            out
        })
        .collect();
    reduced.sort_by(|a, b| {
        deglex(
            &a.leading().expect("nonzero").0,
            &b.leading().expect("nonzero").0,
        )
    });
    reduced
}

/// Standard monomials of `⟨f, ∂f/∂x1, ∂f/∂x2⟩`, ascending in [`deglex`].
pub fn milnor_basis(f: &Polynomial2) -> Result<Vec<Monomial>> {
    let gb = groebner_basis(&[f.clone(), f.derivative(0), f.derivative(1)]);
    let leads: Vec<Monomial> = gb.iter().map(|p| p.leading().expect("nonzero").0).collect();
    let bound_x = leads
        .iter()
        .filter(|m| m.1 == 0)
        .map(|m| m.0)
        .min()
        .ok_or(AdeError::NotIsolated("x1"))?;
    let bound_y = leads
        .iter()
        .filter(|m| m.0 == 0)
        .map(|m| m.1)
        .min()
        .ok_or(AdeError::NotIsolated("x2"))?;
    let mut basis: Vec<Monomial> = (0..bound_x)
        .flat_map(|a| (0..bound_y).map(move |b| (a, b)))
        .filter(|m| !leads.iter().any(|l| divides(l, m)))
        .collect();
    basis.sort_by(deglex);
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Singularity {
    pub cartan: CartanType,
    pub polynomial: Polynomial2,
}

impl Singularity {
    pub fn new(cartan: CartanType) -> Self {
        let polynomial = match cartan {
            CartanType::A(n) => Polynomial2::from_terms([(1, (2, 0)), (1, (0, n as u32 + 1))]),
            CartanType::D(n) => Polynomial2::from_terms([(1, (2, 1)), (1, (0, n as u32 - 1))]),
            CartanType::E(6) => Polynomial2::from_terms([(1, (3, 0)), (1, (0, 4))]),
            CartanType::E(7) => Polynomial2::from_terms([(1, (3, 0)), (1, (1, 3))]),
            CartanType::E(_) => Polynomial2::from_terms([(1, (3, 0)), (1, (0, 5))]),
        };
        Singularity { cartan, polynomial }
    }

    fn binomial(&self) -> Result<[Monomial; 2]> {
        let ms: Vec<Monomial> = self.polynomial.terms().map(|(m, _)| *m).collect();
        <[Monomial; 2]>::try_from(ms.as_slice()).map_err(|_| AdeError::NotBinomial(ms.len()))
    }

    /// `(w1, w2)` with `f` weighted homogeneous of degree 1 when `x_i`
    /// has weight `1/w_i`.
    pub fn weights(&self) -> Result<(BigRational, BigRational)> {
        let [(a1, b1), (a2, b2)] = self.binomial()?;
        let det = a1 as i64 * b2 as i64 - a2 as i64 * b1 as i64;
        if det == 0 {
            return Err(AdeError::Weights(self.polynomial.to_string()));
        }
        // a q1 + b q2 = 1 for both monomials
        let q1 = BigRational::new((b2 as i64 - b1 as i64).into(), det.into());
        let q2 = BigRational::new((a1 as i64 - a2 as i64).into(), det.into());
        if !q1.is_positive() || !q2.is_positive() {
            return Err(AdeError::Weights(self.polynomial.to_string()));
        }
        Ok((q1.recip(), q2.recip()))
    }

    /// `(w1 − 1)(w2 − 1)`.
    pub fn milnor_by_weights(&self) -> Result<BigRational> {
        let (w1, w2) = self.weights()?;
        let one = BigRational::one();
        Ok((w1 - &one) * (w2 - one))
    }

    pub fn milnor_basis(&self) -> Result<Vec<Monomial>> {
        milnor_basis(&self.polynomial)
    }

    /// `μ` from the weights, checked against the basis size.
    pub fn milnor_number(&self) -> Result<usize> {
        let formula = self.milnor_by_weights()?;
        let basis = self.milnor_basis()?.len();
        if formula != BigRational::from_integer(BigInt::from(basis)) {
            return Err(AdeError::MilnorMismatch {
                formula: formula.to_string(),
                basis,
            });
        }
        Ok(basis)
    }

    /// Number of local branches. The normal form is `m · (x1^p + x2^q)`
    /// with `m` a monomial; each variable in `m` is one smooth branch and
    /// the binomial contributes `gcd(p, q)`.
    pub fn branches(&self) -> Result<usize> {
        let [m1, m2] = self.binomial()?;
        let common = (m1.0.min(m2.0), m1.1.min(m2.1));
        let (p, q) = (
            (m1.0 - common.0).max(m2.0 - common.0),
            (m1.1 - common.1).max(m2.1 - common.1),
        );
        let linear = (common.0 > 0) as usize + (common.1 > 0) as usize;
        Ok(linear + p.gcd(&q) as usize)
    }

    /// `μ + b − 1`, the rank of the free fundamental group of the Milnor
    /// fiber.
    pub fn fiber_rank(&self) -> Result<usize> {
        Ok(self.milnor_number()? + self.branches()? - 1)
    }

    pub fn deformation(&self) -> Result<Deformation> {
        Ok(Deformation {
            f: self.polynomial.clone(),
            parameters: self.milnor_basis()?,
        })
    }

    pub fn lattice(&self) -> IntersectionLattice {
        IntersectionLattice::new(self.cartan)
    }
}

/// `F(x, t) = f(x) + Σ t_j g_j(x)` with `g_j` the Milnor basis in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    pub f: Polynomial2,
    /// `parameters[j]` is the monomial multiplying `t_{j+1}`.
    pub parameters: Vec<Monomial>,
}

impl Deformation {
    /// `F(x, 0)`.
    pub fn at_zero(&self) -> Polynomial2 {
        self.f.clone()
    }

    /// `F(x, t)` at rational parameter values.
    pub fn specialize(&self, t: &[BigRational]) -> Polynomial2 {
        let mut p = self.f.clone();
        for (c, m) in t.iter().zip(&self.parameters) {
            p.add_term(c.clone(), *m);
        }
        p
    }
}

impl fmt::Display for Deformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)?;
        for (j, m) in self.parameters.iter().enumerate() {
            match format_monomial(m).as_str() {
                "1" => write!(f, " + t{}", j + 1)?,
                s => write!(f, " + t{}*{s}", j + 1)?,
            }
        }
        Ok(())
    }
}

pub type Matrix = Vec<Vec<i64>>;

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].checked_add(a[i][k].checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(out)
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Skew-symmetric form on the vanishing cycles `e_1..e_n`, with
/// `J[i][j] = +1` for each Dynkin edge `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    pub cartan: CartanType,
    pub form: Matrix,
}

impl IntersectionLattice {
    pub fn new(cartan: CartanType) -> Self {
        let n = cartan.rank();
        let mut form = vec![vec![0i64; n]; n];
        for (i, j) in cartan.edges() {
            form[i][j] = 1;
            form[j][i] = -1;
        }
        IntersectionLattice { cartan, form }
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    /// `τ_i(x) = x + ⟨x, e_i⟩ e_i`.
    pub fn transvection(&self, i: usize) -> Matrix {
        let mut m = identity_matrix(self.rank());
        for k in 0..self.rank() {
            m[i][k] += self.form[k][i];
        }
        m
    }

    pub fn transvections(&self) -> Vec<Matrix> {
        (0..self.rank()).map(|i| self.transvection(i)).collect()
    }

    /// `Mᵀ J M = J`.
    pub fn preserves_form(&self, m: &Matrix) -> bool {
        mat_mul(&transpose(m), &self.form)
            .and_then(|x| mat_mul(&x, m))
            .is_some_and(|x| x == self.form)
    }

    /// The two colour classes of the tree, the class avoiding `a1` first.
    pub fn bipartite_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut colour = vec![usize::MAX; n];
        colour[0] = 1;
        let edges = self.cartan.edges();
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &(a, b) in &edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if colour[w] == usize::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                }
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&i| colour[i] == 0).collect();
        order.extend((0..n).filter(|&i| colour[i] == 1));
        order
    }

    /// Product of all transvections in [`Self::bipartite_order`].
    pub fn monodromy(&self) -> Matrix {
        self.bipartite_order()
            .iter()
            .fold(identity_matrix(self.rank()), |acc, &i| {
                mat_mul(&acc, &self.transvection(i)).expect("small entries")
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonodromyOrder {
    Finite(u64),
    NotFiniteWithin(u64),
}

impl fmt::Display for MonodromyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonodromyOrder::Finite(k) => write!(f, "{k}"),
            MonodromyOrder::NotFiniteWithin(b) => write!(f, "not finite within {b}"),
        }
    }
}

pub const MONODROMY_ORDER_BOUND: u64 = 10_000;

pub fn matrix_order(m: &Matrix, bound: u64) -> MonodromyOrder {
    let id = identity_matrix(m.len());
    let mut p = m.clone();
    for k in 1..=bound {
        if p == id {
            return MonodromyOrder::Finite(k);
        }
        match mat_mul(&p, m) {
            Some(q) => p = q,
            None => return MonodromyOrder::NotFiniteWithin(k),
        }
    }
    MonodromyOrder::NotFiniteWithin(bound)
}

pub fn classical_monodromy_order(cartan: CartanType) -> MonodromyOrder {
    matrix_order(
        &IntersectionLattice::new(cartan).monodromy(),
        MONODROMY_ORDER_BOUND,
    )
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
