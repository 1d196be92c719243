//! Thin report wrappers over single library operations.

use std::collections::BTreeMap;

use curvegroups::ade::{
    classical_monodromy_order, format_monomial, mat_mul, MonodromyOrder, Singularity,
};
use curvegroups::artin::{abelianization, CartanType, CoxeterSystem};
use curvegroups::braid::{
    robb_commutator, robb_multiply, robb_relation_failures, robb_relator, BraidWord, RobbElement,
};
use curvegroups::plucker::{dual_invariants, duality_roundtrip};
use curvegroups::presentation::{simplify, todd_coxeter, FinitePresentation};
use curvegroups::zvk::{
    affine_presentation, projective_presentation, total_space_presentation, Closures, MonodromyData,
};
use serde_json::json;

use crate::report::{Basis, Report};
use crate::CliError;

/// Presentations built from a monodromy file. Generator orders above
/// `coset_limit` are reported as unknown.
pub fn cmd_zvk(text: &str, origin: &str, coset_limit: usize) -> Result<Report, CliError> {
    let m = MonodromyData::from_json(text)?;
    let mut r = Report::new(
        "zvk",
        json!({"file": origin, "degree": m.degree(), "base": m.base(), "coset_limit": coset_limit}),
    );
    let variants = [
        ("total_space", total_space_presentation(&m, Closures::NONE)),
        (
            "total_space_fiber_closed",
            total_space_presentation(
                &m,
                Closures {
                    fiber: true,
                    base: false,
                },
            ),
        ),
        (
            "total_space_base_closed",
            total_space_presentation(
                &m,
                Closures {
                    fiber: false,
                    base: true,
                },
            ),
        ),
        (
            "total_space_closed",
            total_space_presentation(&m, Closures::BOTH),
        ),
        ("affine", affine_presentation(&m)),
        ("projective", projective_presentation(&m)),
    ];
    let mut texts = BTreeMap::new();
    for (name, p) in &variants {
        let s = p.to_string();
        let back = FinitePresentation::parse(&s)
            .map(|q| q.same_relators(p) && q.alphabet().names() == p.alphabet().names());
        r.check(
            format!("{name} presentation round-trips through text"),
            back.unwrap_or(false),
            Basis::Elementary,
        );
        texts.insert(*name, s);
    }
    r.result("presentations", &texts);

    let al = m.fiber_alphabet();
    let boundary = al
        .parse_word(&m.fiber().join(" "))
        .expect("fiber names parse");
    let fixed =
        (0..m.base().len()).all(|j| m.action(j).apply(&boundary).ok() == Some(boundary.clone()));
    r.check(
        format!("every braid fixes {}", al.format_word(&boundary)),
        fixed,
        Basis::Elementary,
    );

    let mut summary = BTreeMap::new();
    for (name, p) in variants
        .iter()
        .filter(|(n, _)| matches!(*n, "affine" | "projective"))
    {
        let s = simplify(p, 100).presentation;
        let order = todd_coxeter(&s, &[], coset_limit).index();
        summary.insert(
            *name,
            json!({
                "simplified": s.to_string(),
                "abelianization": p.abelianization().to_string(),
                "order": order,
            }),
        );
    }
    r.result("groups", &summary);
    Ok(r)
}

pub fn cmd_artin_nf(ty: &str, word: &str) -> Result<Report, CliError> {
    let cartan = CartanType::parse(ty)?;
    let sys = CoxeterSystem::new(cartan);
    let w = sys.parse_word(word)?;
    let nf = sys.normal_form(&w)?;
    let mut r = Report::new(
        "artin nf",
        json!({"type": cartan.to_string(), "word": word}),
    );
    let simples: Vec<String> = nf
        .simples
        .iter()
        .map(|&id| {
            let red = sys.reduced_word(&sys.simple(id));
            red.iter()
                .map(|i| format!("a{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    r.result("length", w.len());
    r.result("normal_form", sys.format_nf(&nf));
    r.result("delta_power", nf.delta_power);
    r.result("simples", &simples);
    r.result("abelianization", abelianization(&w));
    let back = sys.nf_word(&nf);
    r.check(
        "normal form is preserved by renormalizing",
        sys.normal_form(&back)? == nf,
        Basis::Computed,
    );
    r.check(
        "normal form has the same abelianization",
        abelianization(&back) == abelianization(&w),
        Basis::Elementary,
    );
    Ok(r)
}

pub fn cmd_plucker(degree: i64, nodes: i64, cusps: i64) -> Result<Report, CliError> {
    let rep = dual_invariants(degree, nodes, cusps)?;
    let mut r = Report::new(
        "plucker",
        json!({"degree": degree, "nodes": nodes, "cusps": cusps}),
    );
    r.result("record", rep.invariants);
    r.result(
        "kappa_from_dual",
        json!({
            "classical": {"value": rep.classical_kappa, "holds": rep.classical_holds},
            "as_printed": {"value": rep.as_printed_kappa, "holds": rep.as_printed_holds},
        }),
    );
    r.check(
        "cusps are recovered from the dual with 3d*(d*-2) - 6t - 8i",
        rep.classical_holds,
        Basis::Elementary,
    );
    r.check(
        "dual data round-trips to (d, cusps, nodes)",
        duality_roundtrip(&rep.invariants).holds(),
        Basis::Computed,
    );
    Ok(r)
}

pub fn cmd_ade_info(ty: &str) -> Result<Report, CliError> {
    let cartan = CartanType::parse(ty)?;
    let s = Singularity::new(cartan);
    let basis = s.milnor_basis()?;
    let mu = s.milnor_number()?;
    let mut r = Report::new("ade info", json!({"type": cartan.to_string()}));
    r.result("polynomial", s.polynomial.to_string());
    r.result("mu", mu);
    r.result("branches", s.branches()?);
    r.result("fiber_rank", s.fiber_rank()?);
    r.result(
        "basis",
        basis.iter().map(format_monomial).collect::<Vec<_>>(),
    );
    r.result("deformation", s.deformation()?.to_string());
    r.result(
        "monodromy_order",
        match classical_monodromy_order(cartan) {
            MonodromyOrder::Finite(n) => json!(n),
            MonodromyOrder::NotFiniteWithin(b) => json!(format!("> {b}")),
        },
    );
    r.check(
        "Milnor number from weights equals the basis size",
        basis.len() == mu,
        Basis::Computed,
    );
    let lattice = s.lattice();
    let ts = lattice.transvections();
    r.check(
        "transvections preserve the intersection form",
        ts.iter().all(|m| lattice.preserves_form(m)),
        Basis::Elementary,
    );
    r.check(
        "transvections satisfy the diagram relations",
        diagram_relations_hold(cartan, &ts),
        Basis::Computed,
    );
    Ok(r)
}

/// Braid relation on every edge, commutation off the edges.
pub fn diagram_relations_hold(cartan: CartanType, ts: &[Vec<Vec<i64>>]) -> bool {
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| mat_mul(a, b);
    for i in 0..ts.len() {
        for j in i + 1..ts.len() {
            let (a, b) = (&ts[i], &ts[j]);
            let ok = if cartan.adjacent(i, j) {
                let lhs = mul(a, b).and_then(|ab| mul(&ab, a));
                let rhs = mul(b, a).and_then(|ba| mul(&ba, b));
                lhs.is_some() && lhs == rhs
            } else {
                let (ab, ba) = (mul(a, b), mul(b, a));
                ab.is_some() && ab == ba
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Number of left cosets of the even-exponent subgroup met by elements
/// with exponents in `0..=2` and either value of `μ`, found by testing
/// `x⁻¹y` for membership.
pub fn robb_even_index(d: usize) -> usize {
    let mut reps: Vec<RobbElement> = Vec::new();
    let n = d - 1;
    for code in 0..3usize.pow(n as u32) * 2 {
        let mut c = code;
        let mu = c % 2 == 1;
        c /= 2;
        let exponents = (0..n)
            .map(|_| {
                let k = (c % 3) as i64;
                c /= 3;
                k
            })
            .collect();
        let y = RobbElement { mu, exponents };
        let new = reps.iter().all(|x| {
            !robb_multiply(&x.inverse(), &y)
                .expect("same rank")
                .is_even()
        });
        if new {
            reps.push(y);
        }
    }
    reps.len()
}

/// Whether `μ` and the squares `v_i²` pairwise commute.
pub fn robb_even_is_abelian(d: usize) -> bool {
    let mut gens = vec![RobbElement::mu(d)];
    gens.extend((1..d).map(|i| RobbElement::v(d, i).pow(2)));
    gens.iter().all(|a| {
        gens.iter()
            .all(|b| robb_commutator(a, b).expect("same rank").is_identity())
    })
}

pub fn robb_checks(r: &mut Report, min: usize, max: usize) -> Result<(), CliError> {
    let mut rows = BTreeMap::new();
    for d in min..=max {
        let failures = robb_relation_failures(d)?;
        r.check_detail(
            format!("d = {d}: defining relations hold in normal-form arithmetic"),
            failures.is_empty(),
            Basis::Reference,
            failures.join(", "),
        );
        let abelian = robb_even_is_abelian(d);
        r.check(
            format!("d = {d}: even-exponent subgroup is abelian"),
            abelian,
            Basis::Computed,
        );
        let index = robb_even_index(d);
        let want = 1usize << (d - 1);
        r.check_detail(
            format!("d = {d}: even-exponent subgroup has index {want}"),
            index == want,
            Basis::Computed,
            format!("found {index} cosets"),
        );
        let rel = robb_relator(d)?;
        let braid = BraidWord::from_free_word(d, &rel)?;
        let trivial_perm = braid.permutation() == (0..d).collect::<Vec<_>>();
        r.check(
            format!("d = {d}: relator has exponent sum 0 and trivial permutation"),
            braid.exponent_sum() == 0 && trivial_perm,
            Basis::Elementary,
        );
        rows.insert(
            d.to_string(),
            json!({"relator": braid.to_string(), "even_index": index, "abelian": abelian}),
        );
    }
    r.result("degrees", &rows);
    Ok(())
}

pub fn cmd_robb(min: usize, max: usize) -> Result<Report, CliError> {
    if min < 4 || min > max {
        return Err(CliError::Input(format!(
            "degree range {min}..={max} must satisfy 4 <= min <= max"
        )));
    }
    let mut r = Report::new("robb", json!({"min_degree": min, "max_degree": max}));
    robb_checks(&mut r, min, max)?;
    Ok(r)
}
