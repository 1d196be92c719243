//! The three-cuspidal quartic, end to end: braid monodromy, Artin action,
//! presentations, the `(Z/2)² ⋊ SL(2,Z)` image and the partial filling.

use std::collections::BTreeMap;

use curvegroups::braid::BraidWord;
use curvegroups::presentation::{
    equal_modulo_central_cyclic, simplify, todd_coxeter, FinitePresentation, Verdict,
};
use curvegroups::sl2::{
    amalgam_normal_form, braid_to_klein, commutes, format_vector, free_pair_certificate,
    klein_generators, order_class, AmalgamWord, KleinSl2, OrderClass, Sl2, X, Y, ZERO,
};
use curvegroups::zvk::{
    affine_presentation, fill_fibers, projective_presentation, quartic_monodromy, Closures,
};
use serde_json::json;

use crate::golden::QuarticGolden;
use crate::report::{Basis, Report, Status};
use crate::CliError;

/// Tietze steps allowed when simplifying the projective presentation.
pub const SIMPLIFY_BUDGET: usize = 50;

#[derive(Clone, Debug)]
pub struct QuarticOptions {
    pub skip_enumeration: bool,
    pub coset_limit: usize,
    pub depth: usize,
}

pub fn cmd_quartic(
    golden: &QuarticGolden,
    golden_origin: &str,
    opts: &QuarticOptions,
) -> Result<Report, CliError> {
    let mut r = Report::new(
        "quartic",
        json!({
            "golden": golden_origin,
            "skip_enumeration": opts.skip_enumeration,
            "coset_limit": opts.coset_limit,
            "depth": opts.depth,
        }),
    );
    action_checks(&mut r, golden)?;
    if !opts.skip_enumeration {
        enumeration_checks(&mut r, golden, opts.coset_limit)?;
        filling_checks(&mut r, golden, opts.coset_limit)?;
    }
    klein_checks(&mut r, golden, opts.depth)?;
    Ok(r)
}

fn golden_err(msg: String) -> CliError {
    CliError::Golden {
        origin: "quartic".into(),
        msg,
    }
}

/// Artin action of the shipped monodromy against the relator table.
pub fn action_checks(r: &mut Report, golden: &QuarticGolden) -> Result<(), CliError> {
    let m = quartic_monodromy();
    let al = m.fiber_alphabet();
    let mut braids = BTreeMap::new();
    let mut images = BTreeMap::new();
    for (j, base) in m.base().iter().enumerate() {
        braids.insert(base.clone(), m.braids()[j].to_string());
        let act = m.action(j);
        for (i, g) in m.fiber().iter().enumerate() {
            images.insert(format!("{g}^{base}"), al.format_word(act.image(i)));
        }
    }
    r.result("fiber", m.fiber());
    r.result("braids", &braids);
    r.result("action", &images);

    for e in &golden.relator_table {
        let j = m
            .base()
            .iter()
            .position(|b| *b == e.base)
            .ok_or_else(|| golden_err(format!("unknown base loop {}", e.base)))?;
        let gi = al
            .index_of(&e.gen)
            .ok_or_else(|| golden_err(format!("unknown fiber generator {}", e.gen)))?;
        let parse = |s: &str| al.parse_word(s).map_err(|err| golden_err(err.to_string()));
        let want = parse(&e.target)?.conjugate(&parse(&e.conjugator)?);
        let act = m.action(j);
        let got = act.image(gi);
        r.check_detail(
            format!("relator table: {}^{}", e.gen, e.base),
            *got == want,
            Basis::Reference,
            format!(
                "computed {}, expected {}",
                al.format_word(got),
                al.format_word(&want)
            ),
        );
    }

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
    Ok(())
}

fn index_check(r: &mut Report, claim: String, index: Option<usize>, want: usize, basis: Basis) {
    match index {
        Some(n) => {
            r.check_detail(claim, n == want, basis, format!("index {n}"));
        }
        None => r.push(
            claim,
            Status::Unknown,
            basis,
            Some("coset limit reached".into()),
        ),
    }
}

/// Projective presentation, its simplification and the order-12 checks.
pub fn enumeration_checks(
    r: &mut Report,
    golden: &QuarticGolden,
    limit: usize,
) -> Result<(), CliError> {
    let m = quartic_monodromy();
    let proj = projective_presentation(&m);
    let simp = simplify(&proj, SIMPLIFY_BUDGET);
    let s = &simp.presentation;
    r.result("projective_presentation", proj.to_string());
    r.result("simplified_presentation", s.to_string());
    r.result("eliminated", &simp.eliminated);
    r.check_detail(
        "projective presentation simplifies to at most two generators",
        !simp.budget_exhausted && s.rank() <= 2,
        Basis::Computed,
        format!("{} generators left", s.rank()),
    );
    let order = todd_coxeter(s, &[], limit).index();
    r.result("order", order);
    index_check(
        r,
        format!("projective group has order {}", golden.group_order),
        order,
        golden.group_order,
        Basis::Reference,
    );
    let unsimplified = todd_coxeter(&proj, &[], limit).index();
    index_check(
        r,
        "simplification preserves the order".into(),
        unsimplified,
        golden.group_order,
        Basis::Computed,
    );
    let two = FinitePresentation::parse(&golden.two_generator_presentation)?;
    r.result("two_generator_presentation", two.to_string());
    index_check(
        r,
        format!(
            "two-generator presentation has order {}",
            golden.group_order
        ),
        todd_coxeter(&two, &[], limit).index(),
        golden.group_order,
        Basis::Reference,
    );
    let ab = affine_presentation(&m).abelianization().to_string();
    r.check_detail(
        "affine complement abelianizes to Z",
        ab == "Z",
        Basis::Elementary,
        format!("got {ab}"),
    );
    r.result("affine_abelianization", ab);
    Ok(())
}

/// Filling one fiber and enumerating over the remaining base loop.
pub fn filling_checks(
    r: &mut Report,
    golden: &QuarticGolden,
    limit: usize,
) -> Result<(), CliError> {
    let m = quartic_monodromy();
    let f = &golden.filling;
    let filled: Vec<&str> = f.filled.iter().map(String::as_str).collect();
    let p = fill_fibers(&m, &filled, Closures::BOTH, &[])?;
    let z = p.word(&f.subgroup)?;
    r.result("filled_presentation", p.to_string());
    let t = todd_coxeter(&p, std::slice::from_ref(&z), limit);
    index_check(
        r,
        format!(
            "filling {} gives index {} over <{}>",
            f.filled.join(", "),
            f.index,
            f.subgroup
        ),
        t.index(),
        f.index,
        Basis::Reference,
    );
    for (u, v) in &f.equalities {
        let verdict = equal_modulo_central_cyclic(&p, &z, &p.word(u)?, &p.word(v)?, limit);
        let claim = format!("{u} = {v} after filling");
        match verdict {
            Verdict::Equal => r.push(claim, Status::Pass, Basis::Reference, None),
            Verdict::Distinct => r.push(
                claim,
                Status::Fail,
                Basis::Reference,
                Some("distinct".into()),
            ),
            Verdict::Unknown => r.push(claim, Status::Unknown, Basis::Reference, None),
        }
    }
    Ok(())
}

fn parse_vector(s: &str) -> Result<[u8; 2], CliError> {
    match s {
        "0" => Ok(ZERO),
        "x" => Ok(X),
        "y" => Ok(Y),
        "x+y" => Ok([1, 1]),
        other => Err(golden_err(format!("bad vector {other}"))),
    }
}

fn form(s: &str) -> Result<AmalgamWord, CliError> {
    AmalgamWord::parse(s).map_err(|e| golden_err(e.to_string()))
}

fn describe(k: &KleinSl2) -> serde_json::Value {
    json!({
        "vector": format_vector(k.v),
        "matrix": k.m.to_string(),
        "amalgam_form": amalgam_normal_form(&k.m).to_string(),
    })
}

/// Checks `k` against a golden vector and projective amalgam form.
fn klein_value_check(
    r: &mut Report,
    name: &str,
    k: &KleinSl2,
    vector: &str,
    amalgam: &str,
) -> Result<(), CliError> {
    let nf = amalgam_normal_form(&k.m);
    let ok = k.v == parse_vector(vector)? && nf.eq_projective(&form(amalgam)?);
    r.check_detail(
        format!("{name} = ({vector}, {amalgam})"),
        ok,
        Basis::Reference,
        format!("computed ({}, {nf})", format_vector(k.v)),
    );
    Ok(())
}

/// The `(Z/2)² ⋊ SL(2,Z)` chain and the bounded free-pair certificate.
pub fn klein_checks(r: &mut Report, golden: &QuarticGolden, depth: usize) -> Result<(), CliError> {
    let kd = &golden.klein;
    let (s, t) = (Sl2::s(), Sl2::t());

    let sigma = klein_generators();
    let expected = [
        KleinSl2::new(ZERO, s.clone()),
        KleinSl2::new(Y, t.clone()),
        KleinSl2::new(X, s.clone()),
    ];
    let labels = ["(0, S)", "(y, T)", "(x, S)"];
    for (i, (g, want)) in sigma.iter().zip(&expected).enumerate() {
        r.check_detail(
            format!("s{} maps to {}", i + 1, labels[i]),
            g == want,
            Basis::Reference,
            format!("computed {g}"),
        );
    }

    let mut tau = Vec::new();
    for name in ["t1", "t2", "t3"] {
        let word = QuarticGolden::klein_field(&kd.braids, name)?;
        let b = BraidWord::parse(4, word).map_err(|e| golden_err(e.to_string()))?;
        tau.push(braid_to_klein(&b).map_err(|e| golden_err(e.to_string()))?);
    }
    let matrices = [
        ("t1", "S T^3 S^-1", s.mul(&t.pow(3)).mul(&s.inverse())),
        ("t2", "T S T^-1", t.mul(&s).mul(&t.inverse())),
        ("t3", "S^6", s.pow(6)),
    ];
    for ((name, label, m), k) in matrices.iter().zip(&tau) {
        r.check_detail(
            format!("{name} has matrix {label}"),
            k.m == *m,
            Basis::Reference,
            format!("computed {}", k.m),
        );
        klein_value_check(
            r,
            name,
            k,
            QuarticGolden::klein_field(&kd.vectors, name)?,
            QuarticGolden::klein_field(&kd.amalgam_forms, name)?,
        )?;
    }

    let (t1, t2, t3) = (&tau[0], &tau[1], &tau[2]);
    let g1 = t1.mul(&t2.pow(3));
    let g2 = t1.mul(&t2.pow(4));
    let g3 = t2.mul(&t3.clone());
    let g1_want = KleinSl2::new(parse_vector(&kd.g1_vector)?, Sl2::identity());
    r.check_detail(
        format!("t2^-3 = ({}, I) t1", kd.g1_vector),
        t2.pow(-3) == g1_want.mul(t1),
        Basis::Reference,
        format!("computed {}", t2.pow(-3)),
    );
    r.check_detail(
        format!("g1 = t1 t2^3 = ({}, I)", kd.g1_vector),
        g1 == g1_want,
        Basis::Reference,
        format!("computed {g1}"),
    );
    for (name, g) in [("g2", &g2), ("g3", &g3)] {
        klein_value_check(
            r,
            name,
            g,
            QuarticGolden::klein_field(&kd.g_vectors, name)?,
            QuarticGolden::klein_field(&kd.g_forms, name)?,
        )?;
    }
    r.check(
        "t1, t2, t3 are recovered from g1, g2, g3",
        g1.inverse().mul(&g2) == *t2 && g1.mul(&t2.pow(-3)) == *t1 && t2.inverse().mul(&g3) == *t3,
        Basis::Elementary,
    );

    let gs = [&g1, &g2, &g3];
    let table: Vec<Vec<bool>> = gs
        .iter()
        .map(|p| gs.iter().map(|q| commutes(p, q)).collect())
        .collect();
    r.check("g1 commutes with g2", table[0][1], Basis::Reference);
    r.check("g1 commutes with g3", table[0][2], Basis::Reference);
    for (name, g) in [("g2", &g2), ("g3", &g3)] {
        let oc = order_class(&g.m);
        r.check_detail(
            format!("{name} has infinite order"),
            oc == OrderClass::Infinite,
            Basis::Reference,
            format!("order {oc}"),
        );
    }

    let cert = free_pair_certificate(&g2, &g3, depth);
    r.check_detail(
        format!("g2, g3 generate a free group up to word length {depth}"),
        cert.passed(),
        Basis::Computed,
        match &cert.counterexample {
            Some(w) => format!("relation {w}"),
            None => "syllable condition fails".into(),
        },
    );

    let tau_json: BTreeMap<&str, _> = ["t1", "t2", "t3"]
        .into_iter()
        .zip(tau.iter().map(describe))
        .collect();
    r.result(
        "klein",
        json!({
            "sigma": sigma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "tau": tau_json,
            "g": {"g1": describe(&g1), "g2": describe(&g2), "g3": describe(&g3)},
            "commutation": table,
            "certificate": {
                "depth": cert.depth,
                "syllable_condition": cert.syllable_condition,
                "g_form": cert.g_form,
                "h_form": cert.h_form,
                "words_checked": cert.words_checked,
                "counterexample": cert.counterexample,
            },
        }),
    );
    Ok(())
}
