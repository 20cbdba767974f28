//! Property tests for the algebraic invariants the library relies on:
//! exact linear algebra laws, multilinearity, functoriality under
//! perturb-and-filter, morphism composition, and basis-permutation
//! invariance of cohomology dimensions.

use std::sync::Arc;

use proptest::prelude::*;

use ltsys::cohomology::{cohomology_dims, lts_complex, t_complex};
use ltsys::fixtures::{b2, leibniz_e1e2, leibniz_e2e2, rat, sl2_leibniz};
use ltsys::json::{format_rational, parse_rational};
use ltsys::linalg::{Matrix, Vector};
use ltsys::lts::{is_lts_morphism, lts_from_leibniz, LeibnizAlgebra};
use ltsys::op::{induced_lts_on_module, relative_rb_ok, compatibility_report, RbContext, RelRb};
use ltsys::rep::adjoint_representation;
use ltsys::scalar::from_int;
use ltsys::{Q, QMatrix, QVector};

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(rational(), rows * cols)
        .prop_map(move |data| Matrix::from_fn(rows, cols, |i, j| data[i * cols + j].clone()))
}

fn vector(len: usize) -> impl Strategy<Value = QVector> {
    proptest::collection::vec(rational(), len).prop_map(Vector::from_entries)
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_width(
        (rows, cols) in (1usize..=4, 1usize..=4),
        seed in proptest::collection::vec(rational(), 16),
    ) {
        let m = Matrix::from_fn(rows, cols, |i, j| seed[i * cols + j].clone());
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent(
        (rows, cols) in (1usize..=4, 1usize..=4),
        seed in proptest::collection::vec(rational(), 16),
    ) {
        let m = Matrix::from_fn(rows, cols, |i, j| seed[i * cols + j].clone());
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&twice.matrix, &once.matrix);
        prop_assert_eq!(twice.rank, once.rank);
        prop_assert_eq!(twice.pivots, once.pivots);
    }

    #[test]
    fn solve_returns_exact_solutions(
        a in matrix(3, 3),
        x0 in vector(3),
    ) {
        let b = a.mul_vec(&x0);
        let solved = a.solve(&b).unwrap();
        prop_assert!(solved.is_some(), "constructed system must be consistent");
        prop_assert_eq!(a.mul_vec(&solved.unwrap()), b);
    }

    #[test]
    fn rational_strings_round_trip(n in -999i64..=999, d in 1i64..=999) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn triple_product_is_multilinear(
        x in vector(2), x2 in vector(2),
        y in vector(2),
        z in vector(2),
        scale in rational(),
    ) {
        let l = b2::<Q>();
        // Additivity in slot 1 and scalar homogeneity in each slot.
        let sum = l.product(&x.add(&x2), &y, &z).unwrap();
        let split = l.product(&x, &y, &z).unwrap().add(&l.product(&x2, &y, &z).unwrap());
        prop_assert_eq!(sum, split);

        let scaled_x = l.product(&x.scale(&scale), &y, &z).unwrap();
        let scaled_y = l.product(&x, &y.scale(&scale), &z).unwrap();
        let scaled_z = l.product(&x, &y, &z.scale(&scale)).unwrap();
        let base = l.product(&x, &y, &z).unwrap().scale(&scale);
        prop_assert_eq!(scaled_x, base.clone());
        prop_assert_eq!(scaled_y, base.clone());
        prop_assert_eq!(scaled_z, base);
    }
}

/// Perturb-and-filter: every single-entry perturbation of the base algebras
/// that still satisfies the Leibniz identity maps to a valid triple system
/// under the functor.
#[test]
fn functor_preserves_validity_under_perturbation() {
    let bases: Vec<LeibnizAlgebra<Q>> = vec![
        LeibnizAlgebra::zero(2).unwrap(),
        leibniz_e1e2(),
        leibniz_e2e2(),
        LeibnizAlgebra::zero(3).unwrap(),
        sl2_leibniz(),
    ];
    let mut surviving = 0usize;
    for base in &bases {
        let n = base.dim();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for delta in [1i64, -1] {
                        let mut alg = base.clone();
                        alg.set_entry(i, j, l, alg.entry(i, j, l).clone() + from_int::<Q>(delta));
                        if !alg.verify().ok() {
                            continue;
                        }
                        surviving += 1;
                        let lts = lts_from_leibniz(&alg).unwrap();
                        assert!(
                            lts.verify().ok(),
                            "functor image of a valid perturbation must verify"
                        );
                    }
                }
            }
        }
    }
    assert!(surviving >= 10, "need a meaningful survivor count, got {surviving}");
}

/// Composites of verified morphisms are morphisms, both within one system
/// and across the operator-induced system.
#[test]
fn morphism_composition_closes() {
    let l = b2::<Q>();
    let endos: Vec<QMatrix> = vec![
        Matrix::identity(2),
        Matrix::zeros(2, 2),
        Matrix::from_fn(2, 2, |i, j| if (i, j) == (0, 1) { rat(1, 1) } else { rat(0, 1) }),
        Matrix::from_fn(2, 2, |i, j| if (i, j) == (0, 1) { rat(-2, 1) } else { rat(0, 1) }),
    ];
    for f in &endos {
        assert!(is_lts_morphism(f, &l, &l).unwrap());
    }
    for f in &endos {
        for g in &endos {
            assert!(is_lts_morphism(&g.mul(f), &l, &l).unwrap());
        }
    }

    // T: (V, induced) -> L is a morphism; postcomposing with an
    // endomorphism morphism stays one.
    let ctx = Arc::new(RbContext::new(l.clone(), adjoint_representation(&l)).unwrap());
    let op = RelRb::new(ctx, ltsys::fixtures::family1(1, 0)).unwrap();
    op.verify();
    let induced = induced_lts_on_module(&op).unwrap();
    assert!(is_lts_morphism(op.matrix(), &induced, &l).unwrap());
    for g in &endos {
        assert!(is_lts_morphism(&g.mul(op.matrix()), &induced, &l).unwrap());
    }
}

/// Cohomology dimensions do not change under basis permutations of the
/// algebra and the module, including the operator complex under conjugated
/// operators.
#[test]
fn cohomology_dims_are_permutation_invariant() {
    // 3-dimensional ambient system: b2 plus a trivial direction.
    let lts = ltsys::rep::semidirect_product(&b2::<Q>(), &ltsys::rep::Representation::zero(2, 1));
    let rep = adjoint_representation(&lts);
    let base_complex = lts_complex(&lts, &rep).unwrap();
    let base_dims = cohomology_dims(&base_complex).unwrap();

    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ];
    for perm in &perms {
        let lts_p = lts.permuted(perm);
        let rep_p = rep.permuted(perm, perm);
        let dims = cohomology_dims(&lts_complex(&lts_p, &rep_p).unwrap()).unwrap();
        assert_eq!(dims, base_dims, "permutation {perm:?}");
    }

    // Operator complex: conjugate T by the permutation matrix.
    let ctx = Arc::new(RbContext::new(lts.clone(), rep.clone()).unwrap());
    let mut t = Matrix::zeros(3, 3);
    t.set(0, 1, rat(1, 1));
    let op = RelRb::new(ctx, t.clone()).unwrap();
    if op.verify().ok() {
        let t_dims = cohomology_dims(&t_complex(&op).unwrap()).unwrap();
        for perm in &perms {
            let lts_p = lts.permuted(perm);
            let rep_p = rep.permuted(perm, perm);
            let t_p = Matrix::from_fn(3, 3, |i, j| t.at(perm[i], perm[j]).clone());
            let ctx_p = Arc::new(RbContext::new(lts_p, rep_p).unwrap());
            let op_p = RelRb::new(ctx_p, t_p).unwrap();
            assert!(op_p.verify().ok(), "conjugate of an operator is one");
            let dims = cohomology_dims(&t_complex(&op_p).unwrap()).unwrap();
            assert_eq!(dims, t_dims, "operator permutation {perm:?}");
        }
    } else {
        panic!("fixture operator should verify");
    }
}

/// Self-compatibility coincides with the defining identity across the whole
/// bound-1 grid.
#[test]
fn self_compatibility_matches_defining_identity_on_grid() {
    let l = b2::<Q>();
    let ctx = Arc::new(RbContext::new(l.clone(), adjoint_representation(&l)).unwrap());
    for idx in 0..81usize {
        let mut digits = [0i64; 4];
        let mut rest = idx;
        for d in digits.iter_mut() {
            *d = (rest % 3) as i64 - 1;
            rest /= 3;
        }
        let mat = Matrix::from_fn(2, 2, |i, j| from_int::<Q>(digits[i * 2 + j]));
        let op = RelRb::new(ctx.clone(), mat.clone()).unwrap();
        let compat = compatibility_report(&op, &op).unwrap().ok();
        assert_eq!(compat, relative_rb_ok(&ctx, &mat), "at {mat:?}");
    }
}
