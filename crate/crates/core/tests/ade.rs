//! ADE singularity data across all families.

use curvegroups::ade::{
    classical_monodromy_order, mat_mul, IntersectionLattice, Matrix, MonodromyOrder, Singularity,
};
use curvegroups::artin::CartanType;
use num_integer::Integer;

fn all_types(max_rank: usize) -> Vec<CartanType> {
    let mut v: Vec<CartanType> = (1..=max_rank).map(CartanType::A).collect();
    v.extend((4..=max_rank).map(CartanType::D));
    v.extend((6..=max_rank.min(8)).map(CartanType::E));
    v
}

#[test]
fn milnor_number_matches_basis_size() {
    for t in all_types(10) {
        let s = Singularity::new(t);
        let basis = s.milnor_basis().unwrap();
        assert_eq!(basis.len(), t.rank(), "{t}");
        assert_eq!(s.milnor_number().unwrap(), t.rank(), "{t}");
        let def = s.deformation().unwrap();
        assert_eq!(def.parameters.len(), t.rank());
        assert_eq!(def.at_zero(), s.polynomial);
    }
}

#[test]
fn e6_basis_as_printed() {
    let basis = Singularity::new(CartanType::E(6)).milnor_basis().unwrap();
    assert_eq!(basis, [(0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (1, 2)]);
}

#[test]
fn e6_basis_as_a_set() {
    let mut basis = Singularity::new(CartanType::E(6)).milnor_basis().unwrap();
    basis.sort();
    assert_eq!(basis, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    mat_mul(a, b).unwrap()
}

#[test]
fn transvections_satisfy_diagram_relations() {
    for t in all_types(8) {
        let l = IntersectionLattice::new(t);
        let ts = l.transvections();
        for (i, m) in ts.iter().enumerate() {
            assert!(l.preserves_form(m), "{t}: τ{}", i + 1);
        }
        let mut pairs = (0, 0);
        for i in 0..t.rank() {
            for j in i + 1..t.rank() {
                let (a, b) = (&ts[i], &ts[j]);
                if t.adjacent(i, j) {
                    assert_eq!(mul(&mul(a, b), a), mul(&mul(b, a), b), "{t}: {i} {j}");
                    pairs.0 += 1;
                } else {
                    assert_eq!(mul(a, b), mul(b, a), "{t}: {i} {j}");
                    pairs.1 += 1;
                }
            }
        }
        if t == CartanType::E(6) {
            // a tree on six nodes has five edges
            assert_eq!(pairs, (5, 10));
        }
    }
}

#[test]
fn relations_do_not_depend_on_edge_signs() {
    // flip the orientation of every edge
    for t in all_types(8) {
        let mut l = IntersectionLattice::new(t);
        for row in l.form.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        let ts = l.transvections();
        for (i, j) in t.edges() {
            let (a, b) = (&ts[i], &ts[j]);
            assert_eq!(mul(&mul(a, b), a), mul(&mul(b, a), b), "{t}");
        }
    }
}

#[test]
fn monodromy_orders() {
    assert_eq!(
        classical_monodromy_order(CartanType::A(1)),
        MonodromyOrder::Finite(1)
    );
    assert_eq!(
        classical_monodromy_order(CartanType::A(2)),
        MonodromyOrder::Finite(6)
    );
    // for x1^a + x2^b the monodromy eigenvalues are products of a-th and
    // b-th roots of unity other than 1, so the order is lcm(a, b)
    for (t, a, b) in [
        (CartanType::E(6), 3u64, 4u64),
        (CartanType::E(8), 3, 5),
        (CartanType::A(4), 2, 5),
    ] {
        assert_eq!(
            classical_monodromy_order(t),
            MonodromyOrder::Finite(a.lcm(&b)),
            "{t}"
        );
    }
}

#[test]
fn e6_deformation_as_printed() {
    let def = Singularity::new(CartanType::E(6)).deformation().unwrap();
    // t1 + t2 x1 + t3 x2 + t4 x2^2 + t5 x1 x2 + t6 x1 x2^2
    assert_eq!(
        def.parameters,
        [(0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (1, 2)]
    );
}
