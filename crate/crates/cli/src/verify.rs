//! `verify-all`: every module's reproducible checks in one report.
//!
//! Sections run on separate threads and are merged in the fixed order of
//! [`SECTIONS`], so the output does not depend on scheduling.

use std::collections::BTreeMap;

use curvegroups::ade::{format_monomial, Singularity};
use curvegroups::artin::{abelianization, CartanType, CoxeterSystem};
use curvegroups::braid::BraidWord;
use curvegroups::freegroup::FreeWord;
use curvegroups::plucker::{dual_invariants, duality_roundtrip, rational_nodal_family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{diagram_relations_hold, robb_checks};
use crate::golden::QuarticGolden;
use crate::quartic::{action_checks, enumeration_checks, filling_checks, klein_checks};
use crate::report::{Basis, Report, Status};
use crate::CliError;

pub const SECTIONS: [&str; 7] = [
    "braid",
    "presentation",
    "sl2",
    "artin",
    "robb",
    "plucker",
    "ade",
];

/// Random pairs compared against the Artin action on `F_4`.
pub const A3_PAIRS: usize = 500;
pub const A3_MAX_LEN: usize = 8;
pub const A3_SEED: u64 = 0x5eed_a3a3;

/// Milnor basis of `x1^3 + x2^4` in the reference order.
pub const E6_BASIS: [&str; 6] = ["1", "x1", "x2", "x2^2", "x1*x2", "x1*x2^2"];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub only: Option<String>,
    pub coset_limit: usize,
    pub depth: usize,
}

pub fn cmd_verify_all(opts: &VerifyOptions) -> Result<Report, CliError> {
    let selected: Vec<&str> = match &opts.only {
        Some(m) => {
            let name = SECTIONS
                .iter()
                .find(|s| **s == m.as_str())
                .ok_or_else(|| CliError::UnknownModule(m.clone()))?;
            vec![*name]
        }
        None => SECTIONS.to_vec(),
    };
    let golden = QuarticGolden::builtin();
    let results: Vec<Result<Report, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|name| {
                let golden = &golden;
                scope.spawn(move || section(name, golden, opts))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("section thread panicked"))
            .collect()
    });

    let mut all = Report::new(
        "verify-all",
        json!({
            "only": opts.only,
            "coset_limit": opts.coset_limit,
            "depth": opts.depth,
        }),
    );
    let mut summary = BTreeMap::new();
    let mut details = BTreeMap::new();
    for (name, res) in selected.iter().zip(results) {
        let sub = res?;
        let pass = sub
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        summary.insert(
            *name,
            json!({"checks": sub.checks.len(), "passed": pass, "failed": sub.failure_count()}),
        );
        details.insert(*name, sub.results.clone());
        for mut c in sub.checks {
            c.claim = format!("{name}: {}", c.claim);
            all.checks.push(c);
        }
    }
    all.result("sections", &summary);
    all.result("results", &details);
    Ok(all)
}

fn section(name: &str, golden: &QuarticGolden, opts: &VerifyOptions) -> Result<Report, CliError> {
    let mut r = Report::new(name, json!({}));
    match name {
        "braid" => action_checks(&mut r, golden)?,
        "presentation" => {
            enumeration_checks(&mut r, golden, opts.coset_limit)?;
            filling_checks(&mut r, golden, opts.coset_limit)?;
        }
        "sl2" => klein_checks(&mut r, golden, opts.depth)?,
        "artin" => artin_checks(&mut r)?,
        "robb" => robb_checks(&mut r, 4, 8)?,
        "plucker" => plucker_checks(&mut r)?,
        "ade" => ade_checks(&mut r)?,
        other => return Err(CliError::UnknownModule(other.to_string())),
    }
    Ok(r)
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Vec<(usize, i8)> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            (
                rng.gen_range(0..rank),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect()
}

/// Far commutations and same-sign three-letter braid moves at random
/// positions; the result is equal to `w` in the braid group.
fn rewrite(w: &[(usize, i8)], rng: &mut ChaCha8Rng, moves: usize) -> Vec<(usize, i8)> {
    let mut w = w.to_vec();
    for _ in 0..moves {
        if w.len() < 2 {
            break;
        }
        let p = rng.gen_range(0..w.len() - 1);
        let (a, b) = (w[p], w[p + 1]);
        if a.0.abs_diff(b.0) >= 2 {
            w.swap(p, p + 1);
        } else if p + 2 < w.len() {
            let c = w[p + 2];
            if a.0 == c.0 && a.0.abs_diff(b.0) == 1 && a.1 == b.1 && b.1 == c.1 {
                w[p] = b;
                w[p + 1] = a;
                w[p + 2] = b;
            }
        }
    }
    w
}

fn artin_images(w: &FreeWord) -> Result<Vec<FreeWord>, CliError> {
    let act = BraidWord::from_free_word(4, w)?.artin_action();
    Ok((0..4).map(|i| act.image(i).clone()).collect())
}

fn artin_checks(r: &mut Report) -> Result<(), CliError> {
    let a3 = CoxeterSystem::new(CartanType::A(3));
    let mut rng = ChaCha8Rng::seed_from_u64(A3_SEED);
    let (mut equal, mut disagreements) = (0usize, 0usize);
    for k in 0..A3_PAIRS {
        let u = random_word(&mut rng, 3, A3_MAX_LEN);
        let v = if k % 2 == 0 {
            rewrite(&u, &mut rng, 12)
        } else {
            random_word(&mut rng, 3, A3_MAX_LEN)
        };
        let (u, v) = (FreeWord::from_signed(&u), FreeWord::from_signed(&v));
        let oracle = artin_images(&u)? == artin_images(&v)?;
        if a3.words_equal(&u, &v)? != oracle {
            disagreements += 1;
        }
        equal += usize::from(oracle);
    }
    r.check_detail(
        format!("A3 word problem agrees with the Artin action on {A3_PAIRS} pairs"),
        disagreements == 0,
        Basis::Computed,
        format!("{disagreements} disagreements"),
    );

    let e6 = CoxeterSystem::new(CartanType::E(6));
    let w = e6.parse_word("(a2 a4 a6 a1 a3 a5)^6")?;
    let nf = e6.normal_form(&w)?;
    r.check_detail(
        "E6: (a2 a4 a6 a1 a3 a5)^6 has normal form Δ^1",
        nf.delta_power == 1 && nf.simples.is_empty(),
        Basis::Reference,
        e6.format_nf(&nf),
    );
    let flip = e6.delta_conjugation();
    let is_symmetry = match &flip {
        Some(p) => {
            let involution = (0..p.len()).all(|i| p[p[i]] == i);
            let nontrivial = p.iter().enumerate().any(|(i, &j)| i != j);
            let edges = CartanType::E(6).edges();
            let preserves = edges
                .iter()
                .all(|&(i, j)| CartanType::E(6).adjacent(p[i], p[j]));
            involution && nontrivial && preserves
        }
        None => false,
    };
    r.check_detail(
        "E6: conjugation by Δ is the order-2 diagram symmetry",
        is_symmetry,
        Basis::Computed,
        format!("{flip:?}"),
    );
    let delta = e6.delta_word();
    r.check(
        "E6: Δ^2 is central",
        e6.is_central(&delta.pow(2))?,
        Basis::Elementary,
    );
    r.check(
        "E6: abelianization of Δ is 36",
        abelianization(&w) == 36 && abelianization(&delta) == 36,
        Basis::Elementary,
    );
    r.result(
        "a3_oracle",
        json!({"pairs": A3_PAIRS, "seed": A3_SEED, "equal": equal, "disagreements": disagreements}),
    );
    r.result("e6_delta_conjugation", flip);
    Ok(())
}

fn plucker_checks(r: &mut Report) -> Result<(), CliError> {
    let cubic = dual_invariants(3, 1, 0)?;
    let p = cubic.invariants;
    r.check_detail(
        "nodal cubic: d* = 4, flexes 3, bitangents 0",
        (p.d_dual, p.iota, p.tau) == (4, 3, 0),
        Basis::Reference,
        format!("({}, {}, {})", p.d_dual, p.iota, p.tau),
    );
    let mut all = true;
    for d in 3..=12 {
        let fam = rational_nodal_family(d)?;
        all &= fam.agrees && duality_roundtrip(&fam.primal).holds();
    }
    r.check(
        "rational nodal curves of degree 3..=12 round-trip through duality",
        all,
        Basis::Computed,
    );
    r.check(
        "nodal cubic: the (d*-1) cusp formula fails",
        !cubic.as_printed_holds,
        Basis::Computed,
    );
    r.check(
        "nodal cubic: the (d*-2) cusp formula holds",
        cubic.classical_holds,
        Basis::Elementary,
    );
    r.result("nodal_cubic", cubic);
    Ok(())
}

fn ade_checks(r: &mut Report) -> Result<(), CliError> {
    let e6 = Singularity::new(CartanType::E(6));
    let basis: Vec<String> = e6.milnor_basis()?.iter().map(format_monomial).collect();
    r.check_detail(
        "E6: Milnor basis in the reference order",
        basis == E6_BASIS,
        Basis::Reference,
        format!("computed {}", basis.join(", ")),
    );
    let mut types: Vec<CartanType> = (1..=10).map(CartanType::A).collect();
    types.extend((4..=10).map(CartanType::D));
    types.extend((6..=8).map(CartanType::E));
    let mut bad = Vec::new();
    for &t in &types {
        let s = Singularity::new(t);
        let by_basis = s.milnor_basis()?.len();
        let mu = s.milnor_number()?;
        if by_basis != t.rank() || mu != t.rank() {
            bad.push(format!("{t}: basis {by_basis}, formula {mu}"));
        }
    }
    r.check_detail(
        "Milnor number equals the rank for A1..A10, D4..D10, E6..E8",
        bad.is_empty(),
        Basis::Computed,
        bad.join("; "),
    );
    let fr = e6.fiber_rank()?;
    r.check_detail(
        "E6: fiber rank 6",
        fr == 6,
        Basis::Reference,
        format!("got {fr}"),
    );
    let mut failing = Vec::new();
    for &t in types.iter().filter(|t| t.rank() <= 8) {
        let l = Singularity::new(t).lattice();
        let ts = l.transvections();
        if !(ts.iter().all(|m| l.preserves_form(m)) && diagram_relations_hold(t, &ts)) {
            failing.push(t.to_string());
        }
    }
    r.check_detail(
        "transvections preserve the form and satisfy the diagram relations up to rank 8",
        failing.is_empty(),
        Basis::Computed,
        failing.join(", "),
    );
    r.result("e6_basis", &basis);
    Ok(())
}
