//! The `(Z/2)² ⋊ SL(2,Z)` computations for the three-cuspidal quartic.

use curvegroups::braid::{spherical_relator, BraidWord};
use curvegroups::sl2::{
    amalgam_normal_form, braid_to_klein, commutes, free_pair_certificate, klein_generators,
    order_class, AmalgamWord, KleinSl2, OrderClass, Sl2, X, Y, ZERO,
};

fn b4(s: &str) -> KleinSl2 {
    braid_to_klein(&BraidWord::parse(4, s).unwrap()).unwrap()
}

fn tau() -> [KleinSl2; 3] {
    [b4("s3 s2^3 s3^-1"), b4("s2 s1 s2^-1"), b4("s1^3 s3^3")]
}

fn form(s: &str) -> AmalgamWord {
    AmalgamWord::parse(s).unwrap()
}

#[test]
fn tau_images() {
    let (s, t) = (Sl2::s(), Sl2::t());
    let [t1, t2, t3] = tau();
    assert_eq!(t1, KleinSl2::new(ZERO, s.mul(&t.pow(3)).mul(&s.inverse())));
    assert_eq!(t2, KleinSl2::new([1, 1], t.mul(&s).mul(&t.inverse())));
    assert_eq!(t3, KleinSl2::new(X, s.pow(6)));
}

#[test]
fn tau_amalgam_forms() {
    let [t1, t2, t3] = tau();
    assert!(amalgam_normal_form(&t1.m).eq_projective(&form("ABAB^2AB^2ABA")));
    assert!(amalgam_normal_form(&t2.m).eq_projective(&form("AB^2AB^2A")));
    assert!(amalgam_normal_form(&t3.m).eq_projective(&form("(AB)^6")));
    // substituting S = AB, T = AB² directly gives the same form
    assert!(form("(AB)(AB^2)^3(AB)^-1").eq_projective(&form("ABAB^2AB^2ABA")));
    assert!(form("(AB^2)(AB)(AB^2)^-1").eq_projective(&form("AB^2AB^2A")));
}

#[test]
fn tau_identities() {
    let [t1, t2, t3] = tau();
    assert_eq!(t2.v, [X[0] ^ Y[0], X[1] ^ Y[1]]);
    let g1 = KleinSl2::new([1, 1], Sl2::identity());
    assert_eq!(t2.pow(-3), g1.mul(&t1));
    let t23 = t2.mul(&t3);
    assert_eq!(t23.v, X);
    assert!(amalgam_normal_form(&t23.m).eq_projective(&form("(BA)^3B")));
}

#[test]
fn g_generators() {
    let [t1, t2, t3] = tau();
    let g1 = t1.mul(&t2.pow(3));
    let g2 = t1.mul(&t2.pow(4));
    let g3 = t2.mul(&t3);
    assert_eq!(g1, KleinSl2::new([1, 1], Sl2::identity()));
    assert_eq!(g2, g1.mul(&t2));
    assert_eq!(g2.v, ZERO);
    assert!(amalgam_normal_form(&g2.m).eq_projective(&form("(AB^2)^2A")));
    assert!(amalgam_normal_form(&g3.m).eq_projective(&form("(BA)^3B")));
    // and back: τ₂ = g₁⁻¹g₂, τ₁ = g₁τ₂⁻³, τ₃ = τ₂⁻¹g₃
    let back2 = g1.inverse().mul(&g2);
    assert_eq!(back2, t2);
    assert_eq!(g1.mul(&back2.pow(-3)), t1);
    assert_eq!(back2.inverse().mul(&g3), t3);
    assert!(g1.mul(&g1).is_identity());
}

#[test]
fn g1_is_central_in_the_image() {
    let [t1, t2, t3] = tau();
    let g1 = t1.mul(&t2.pow(3));
    let g2 = t1.mul(&t2.pow(4));
    let g3 = t2.mul(&t3);
    assert!(commutes(&g1, &g2));
    assert!(commutes(&g1, &g3));
    assert!(commutes(&KleinSl2::identity(), &g3));
    assert_eq!(order_class(&g2.m), OrderClass::Infinite);
    assert_eq!(order_class(&g3.m), OrderClass::Infinite);
}

#[test]
fn g2_g3_free_to_depth_ten() {
    let [t1, t2, t3] = tau();
    let g2 = t1.mul(&t2.pow(4));
    let g3 = t2.mul(&t3);
    let r = free_pair_certificate(&g2, &g3, 10);
    assert!(r.syllable_condition);
    assert_eq!(r.counterexample, None);
    assert_eq!(r.words_checked, 2 * (3u64.pow(10) - 1));
    assert!(r.passed());
}

#[test]
fn far_generators_commute() {
    let [s1, _, s3] = klein_generators();
    assert!(commutes(&s1, &s3));
}

#[test]
fn braid_relations_hold_in_klein_model() {
    let [s1, s2, s3] = klein_generators();
    assert_eq!(
        s1.mul(&s2).mul(&s1),
        s2.mul(&s1).mul(&s2),
        "s1 s2 s1 = s2 s1 s2"
    );
    assert_eq!(
        s2.mul(&s3).mul(&s2),
        s3.mul(&s2).mul(&s3),
        "s2 s3 s2 = s3 s2 s3"
    );
}

#[test]
fn spherical_relator_is_central_sign() {
    let r = braid_to_klein(&spherical_relator(4).unwrap()).unwrap();
    assert!(r.is_central_sign(), "{r}");
}
