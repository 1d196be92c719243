//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so every line is printed even when an
//! earlier criterion fails. Each criterion has a wall-clock budget; both
//! the check and the budget must hold.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use curvegroups::ade::{format_monomial, mat_mul, IntersectionLattice, Matrix, Singularity};
use curvegroups::artin::{abelianization, CartanType, CoxeterSystem};
use curvegroups::braid::{
    robb_commutator, robb_multiply, robb_relation_failures, robb_relator, BraidWord, RobbElement,
};
use curvegroups::freegroup::FreeWord;
use curvegroups::plucker::{dual_invariants, duality_roundtrip, rational_nodal_family};
use curvegroups::presentation::{
    equal_modulo_central_cyclic, simplify, todd_coxeter, FinitePresentation, Verdict,
    DEFAULT_COSET_LIMIT,
};
use curvegroups::sl2::{
    amalgam_normal_form, braid_to_klein, commutes, free_pair_certificate, klein_generators,
    order_class, AmalgamWord, KleinSl2, OrderClass, Sl2, X, Y, ZERO,
};
use curvegroups::zvk::{fill_fibers, projective_presentation, quartic_monodromy, Closures};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN: &str = include_str!("../data/quartic_golden.json");

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(5);
const BUDGET_3: Duration = Duration::from_secs(10);
const BUDGET_4: Duration = Duration::from_secs(5);
const BUDGET_5: Duration = Duration::from_secs(120);
const BUDGET_6: Duration = Duration::from_secs(5);
const BUDGET_7: Duration = Duration::from_secs(1);
const BUDGET_8: Duration = Duration::from_secs(30);
const BUDGET_9: Duration = Duration::from_secs(300);

const GARSIDE_PAIRS: usize = 500;
const GARSIDE_MAX_LEN: usize = 8;
const GARSIDE_SEED: u64 = 0xacce_0005;
const FREE_PAIR_DEPTH: usize = 10;

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: &str) -> Outcome {
    if failures.is_empty() {
        Outcome {
            ok: true,
            detail: ok_detail.to_string(),
        }
    } else {
        Outcome {
            ok: false,
            detail: failures.join("; "),
        }
    }
}

/// Relator table entries straight from the golden JSON.
fn relator_table() -> Vec<[String; 4]> {
    let v: serde_json::Value = serde_json::from_str(GOLDEN).expect("golden parses");
    v["relator_table"]
        .as_array()
        .expect("relator_table array")
        .iter()
        .map(|e| {
            ["base", "gen", "target", "conjugator"].map(|k| e[k].as_str().expect(k).to_string())
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let m = quartic_monodromy();
    let al = m.fiber_alphabet();
    let table = relator_table();
    let mut bad = Vec::new();
    for [base, gen, target, conj] in &table {
        let j = m.base().iter().position(|b| b == base).expect("base loop");
        let gi = al.index_of(gen).expect("fiber generator");
        let want = al
            .parse_word(target)
            .unwrap()
            .conjugate(&al.parse_word(conj).unwrap());
        let act = m.action(j);
        let got = act.image(gi);
        if *got != want {
            bad.push(format!(
                "{gen}^{base}: computed {} expected {}",
                al.format_word(got),
                al.format_word(&want)
            ));
        }
    }
    if table.len() != 12 {
        bad.push(format!("{} table entries", table.len()));
    }
    outcome(bad, "12/12 images match")
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let p = projective_presentation(&quartic_monodromy());
    let s = simplify(&p, 50);
    if s.budget_exhausted || s.presentation.rank() > 2 {
        bad.push(format!("simplified to rank {}", s.presentation.rank()));
    }
    let n = todd_coxeter(&s.presentation, &[], DEFAULT_COSET_LIMIT).index();
    if n != Some(12) {
        bad.push(format!("projective order {n:?}"));
    }
    let two =
        FinitePresentation::parse("< a1, a2 | a1 a2 a1^-1 = a2 a1 a2^-1, a2 a1 a1 a2 >").unwrap();
    let n2 = todd_coxeter(&two, &[], DEFAULT_COSET_LIMIT).index();
    if n2 != Some(12) {
        bad.push(format!("two-generator order {n2:?}"));
    }
    outcome(bad, "both enumerate to 12 cosets")
}

fn klein(s: &str) -> KleinSl2 {
    braid_to_klein(&BraidWord::parse(4, s).unwrap()).unwrap()
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };
    let (s, t) = (Sl2::s(), Sl2::t());
    let proj = |k: &KleinSl2, f: &str| {
        amalgam_normal_form(&k.m).eq_projective(&AmalgamWord::parse(f).unwrap())
    };

    let [s1, s2, s3] = klein_generators();
    expect(s1 == KleinSl2::new(ZERO, s.clone()), "s1 = (0, S)");
    expect(s2 == KleinSl2::new(Y, t.clone()), "s2 = (y, T)");
    expect(s3 == KleinSl2::new(X, s.clone()), "s3 = (x, S)");

    let t1 = klein("s3 s2^3 s3^-1");
    let t2 = klein("s2 s1 s2^-1");
    let t3 = klein("s1^3 s3^3");
    expect(
        t1 == KleinSl2::new(ZERO, s.mul(&t.pow(3)).mul(&s.inverse())),
        "t1 = (0, S T^3 S^-1)",
    );
    expect(
        t2 == KleinSl2::new([1, 1], t.mul(&s).mul(&t.inverse())),
        "t2 = (x+y, T S T^-1)",
    );
    expect(t3 == KleinSl2::new(X, s.pow(6)), "t3 = (x, S^6)");
    expect(proj(&t1, "ABAB^2AB^2ABA"), "t1 form");
    expect(proj(&t2, "AB^2AB^2A"), "t2 form");
    expect(proj(&t3, "(AB)^6"), "t3 form");

    let g1_want = KleinSl2::new([1, 1], Sl2::identity());
    expect(t2.pow(-3) == g1_want.mul(&t1), "t2^-3 = (x+y, I) t1");
    let g1 = t1.mul(&t2.pow(3));
    let g2 = t1.mul(&t2.pow(4));
    let g3 = t2.mul(&t3);
    expect(g1 == g1_want, "g1 = (x+y, I)");
    expect(
        g2.v == ZERO && proj(&g2, "(AB^2)^2A"),
        "g2 = (0, (AB^2)^2A)",
    );
    expect(g3.v == X && proj(&g3, "(BA)^3B"), "g3 = (x, (BA)^3B)");
    expect(commutes(&g1, &g2) && commutes(&g1, &g3), "g1 central");
    expect(
        order_class(&g2.m) == OrderClass::Infinite && order_class(&g3.m) == OrderClass::Infinite,
        "g2, g3 infinite order",
    );
    let cert = free_pair_certificate(&g2, &g3, FREE_PAIR_DEPTH);
    expect(cert.passed(), "free pair certificate");
    outcome(
        bad,
        "all matrix and word values match; certificate passes to depth 10",
    )
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let m = quartic_monodromy();
    let p = fill_fibers(&m, &["t2"], Closures::BOTH, &[]).unwrap();
    let t1 = p.word("t1").unwrap();
    let n = todd_coxeter(&p, std::slice::from_ref(&t1), DEFAULT_COSET_LIMIT).index();
    if n != Some(12) {
        bad.push(format!("index {n:?}"));
    }
    for (u, v) in [("a1 a2 a1", "a2 a1 a2"), ("a2", "a1^-1 b2^-1 a1^-1")] {
        let verdict = equal_modulo_central_cyclic(
            &p,
            &t1,
            &p.word(u).unwrap(),
            &p.word(v).unwrap(),
            DEFAULT_COSET_LIMIT,
        );
        if verdict != Verdict::Equal {
            bad.push(format!("{u} = {v}: {verdict:?}"));
        }
    }
    outcome(bad, "index 12 over <t1>; both identities hold")
}

fn random_word(rng: &mut ChaCha8Rng) -> Vec<(usize, i8)> {
    let len = rng.gen_range(0..=GARSIDE_MAX_LEN);
    (0..len)
        .map(|_| (rng.gen_range(0..3), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect()
}

/// A word equal to `u` in `B_4` of the same length: far commutations
/// and same-sign three-letter braid moves at random positions.
fn equal_partner(u: &[(usize, i8)], rng: &mut ChaCha8Rng) -> Vec<(usize, i8)> {
    let mut w = u.to_vec();
    for _ in 0..12 {
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
                w[p..p + 3].copy_from_slice(&[b, a, b]);
            }
        }
    }
    w
}

fn artin_images(w: &FreeWord) -> Vec<FreeWord> {
    let act = BraidWord::from_free_word(4, w).unwrap().artin_action();
    (0..4).map(|i| act.image(i).clone()).collect()
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let a3 = CoxeterSystem::new(CartanType::A(3));
    let mut rng = ChaCha8Rng::seed_from_u64(GARSIDE_SEED);
    let (mut disagree, mut equal) = (0, 0);
    for k in 0..GARSIDE_PAIRS {
        let u = random_word(&mut rng);
        let v = if k % 2 == 0 {
            equal_partner(&u, &mut rng)
        } else {
            random_word(&mut rng)
        };
        let (u, v) = (FreeWord::from_signed(&u), FreeWord::from_signed(&v));
        let oracle = artin_images(&u) == artin_images(&v);
        if a3.words_equal(&u, &v).unwrap() != oracle {
            disagree += 1;
        }
        equal += usize::from(oracle);
    }
    if disagree > 0 {
        bad.push(format!("{disagree} disagreements in {GARSIDE_PAIRS} pairs"));
    }
    if equal < GARSIDE_PAIRS / 4 {
        bad.push(format!("only {equal} equal pairs"));
    }

    let e6 = CoxeterSystem::new(CartanType::E(6));
    let w = e6.parse_word("(a2 a4 a6 a1 a3 a5)^6").unwrap();
    let nf = e6.normal_form(&w).unwrap();
    if !(nf.delta_power == 1 && nf.simples.is_empty()) {
        bad.push(format!("E6 normal form {}", e6.format_nf(&nf)));
    }
    // Δ a_i Δ⁻¹ = a_{π(i)} with π the nontrivial diagram automorphism
    let pi = [0usize, 5, 4, 3, 2, 1];
    let delta = e6.delta_word();
    for (i, &j) in pi.iter().enumerate() {
        let lhs = delta.mul(&FreeWord::generator(i));
        let rhs = FreeWord::generator(j).mul(&delta);
        if !e6.words_equal(&lhs, &rhs).unwrap() {
            bad.push(format!("Δ a{} ≠ a{} Δ", i + 1, j + 1));
        }
    }
    if !e6.is_central(&delta.pow(2)).unwrap() {
        bad.push("Δ^2 not central".into());
    }
    if abelianization(&w) != 36 {
        bad.push(format!("abelianization {}", abelianization(&w)));
    }
    outcome(bad, "A3 oracle agrees on 500 pairs; E6 Δ checks hold")
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for d in 4..=8usize {
        let f = robb_relation_failures(d).unwrap();
        if !f.is_empty() {
            bad.push(format!("d={d}: {}", f.join(", ")));
        }
        // generators of the even subgroup pairwise commute
        let mut gens = vec![RobbElement::mu(d)];
        gens.extend((1..d).map(|i| RobbElement::v(d, i).pow(2)));
        let abelian = gens.iter().all(|a| {
            gens.iter()
                .all(|b| robb_commutator(a, b).unwrap().is_identity())
        });
        if !abelian {
            bad.push(format!("d={d}: even subgroup not abelian"));
        }
        // cosets of the even subgroup among the 0/1 exponent vectors
        // (μ switched on for an arbitrary subset), compared through x⁻¹y
        let mut reps: Vec<RobbElement> = Vec::new();
        for bits in 0..1u32 << (d - 1) {
            let e: Vec<i64> = (0..d - 1).map(|i| i64::from((bits >> i) & 1)).collect();
            let y = RobbElement {
                mu: bits % 3 == 0,
                exponents: e,
            };
            if reps
                .iter()
                .all(|x| !robb_multiply(&x.inverse(), &y).unwrap().is_even())
            {
                reps.push(y);
            }
        }
        // an element far from the box still lands in one of these cosets
        let probe = RobbElement {
            mu: true,
            exponents: (0..d as i64 - 1).map(|k| 3 * k - 5).collect(),
        };
        let covered = reps
            .iter()
            .any(|x| robb_multiply(&x.inverse(), &probe).unwrap().is_even());
        if reps.len() != 1 << (d - 1) || !covered {
            bad.push(format!(
                "d={d}: index {} (probe covered {covered})",
                reps.len()
            ));
        }
        let rel = BraidWord::from_free_word(d, &robb_relator(d).unwrap()).unwrap();
        if rel.exponent_sum() != 0 || rel.permutation() != (0..d).collect::<Vec<_>>() {
            bad.push(format!("d={d}: relator exponent sum or permutation"));
        }
    }
    outcome(
        bad,
        "relations, abelian even subgroup of index 2^(d-1), relator for d=4..8",
    )
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let r = dual_invariants(3, 1, 0).unwrap();
    let p = r.invariants;
    if (p.d_dual, p.iota, p.tau) != (4, 3, 0) {
        bad.push(format!("record ({}, {}, {})", p.d_dual, p.iota, p.tau));
    }
    for d in 3..=12 {
        let f = rational_nodal_family(d).unwrap();
        if !(f.agrees && duality_roundtrip(&f.primal).holds()) {
            bad.push(format!("round trip d={d}"));
        }
    }
    if r.as_printed_holds {
        bad.push("(d*-1) variant unexpectedly holds".into());
    }
    if !r.classical_holds {
        bad.push("(d*-2) variant fails".into());
    }
    outcome(
        bad,
        "record (4, 3, 0); round trips for d=3..12; only the (d*-2) variant holds",
    )
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    mat_mul(a, b).expect("no overflow")
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let e6 = Singularity::new(CartanType::E(6));
    let basis: Vec<String> = e6
        .milnor_basis()
        .unwrap()
        .iter()
        .map(format_monomial)
        .collect();
    let printed = ["1", "x1", "x2", "x2^2", "x1*x2", "x1*x2^2"];
    if basis != printed {
        bad.push(format!("E6 basis order [{}]", basis.join(", ")));
    }
    let mut types: Vec<CartanType> = (1..=10).map(CartanType::A).collect();
    types.extend((4..=10).map(CartanType::D));
    types.extend((6..=8).map(CartanType::E));
    for &t in &types {
        let s = Singularity::new(t);
        let want = match t {
            CartanType::A(n) | CartanType::D(n) | CartanType::E(n) => n,
        };
        let mu = s.milnor_number().unwrap();
        let size = s.milnor_basis().unwrap().len();
        if mu != want || size != want {
            bad.push(format!("{t}: mu {mu}, basis {size}"));
        }
    }
    if e6.fiber_rank().unwrap() != 6 {
        bad.push("E6 fiber rank".into());
    }
    for &t in types.iter().filter(|t| t.rank() <= 8) {
        let l = IntersectionLattice::new(t);
        let ts = l.transvections();
        for i in 0..t.rank() {
            if !l.preserves_form(&ts[i]) {
                bad.push(format!("{t}: T{} breaks the form", i + 1));
            }
            for j in i + 1..t.rank() {
                let (a, b) = (&ts[i], &ts[j]);
                let holds = if t.adjacent(i, j) {
                    mul(&mul(a, b), a) == mul(&mul(b, a), b)
                } else {
                    mul(a, b) == mul(b, a)
                };
                if !holds {
                    bad.push(format!("{t}: relation ({}, {})", i + 1, j + 1));
                }
            }
        }
    }
    outcome(
        bad,
        "basis, Milnor numbers, fiber rank and transvection relations hold",
    )
}

fn criterion_9() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_curvegroups"))
            .args(["verify-all", "--json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let mut bad = Vec::new();
    if a.stdout.is_empty() {
        bad.push("empty output".into());
    }
    if a.stdout != b.stdout {
        bad.push("outputs differ".into());
    }
    if a.status.code() != b.status.code() {
        bad.push("exit codes differ".into());
    }
    outcome(bad, &format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("quartic Artin action", BUDGET_1, criterion_1),
        ("quartic presentation chain", BUDGET_2, criterion_2),
        ("Klein x| SL2 chain", BUDGET_3, criterion_3),
        ("filling over t2", BUDGET_4, criterion_4),
        ("Garside normal forms", BUDGET_5, criterion_5),
        ("Robb structures", BUDGET_6, criterion_6),
        ("Plucker formulas", BUDGET_7, criterion_7),
        ("ADE data", BUDGET_8, criterion_8),
        ("determinism", BUDGET_9, criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let ok = o.ok && in_time;
        failed += usize::from(!ok);
        println!(
            "criterion {} ({name}): {} in {:.3}s (budget {}s): {}{}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            o.detail,
            if in_time { "" } else { "; over budget" },
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
