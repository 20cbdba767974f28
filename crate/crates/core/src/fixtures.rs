//! Named builtin fixtures used by tests and exposed to the CLI as
//! `builtin:` inputs.

use num_bigint::BigInt;

use crate::linalg::Matrix;
use crate::lts::{LeibnizAlgebra, Lts};
use crate::op::{RbContext, RelRb};
use crate::rep::adjoint_representation;
use crate::scalar::{from_int, Scalar};
use crate::Q;

/// Exact rational from machine integers.
pub fn rat(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// The canonical 2-dimensional triple system with `{e1,e2,e2} = e1` and
/// `{e2,e2,e2} = e1`; every other basis product vanishes.
pub fn b2<S: Scalar>() -> Lts<S> {
    Lts::from_products(
        2,
        &[
            (0, 1, 1, vec![(0, S::one())]),
            (1, 1, 1, vec![(0, S::one())]),
        ],
    )
    .expect("b2 is well-formed")
    .with_labels(vec!["e1".into(), "e2".into()])
}

/// Two-dimensional right Leibniz algebra with `[e1,e2] = e1` only.
pub fn leibniz_e1e2<S: Scalar>() -> LeibnizAlgebra<S> {
    LeibnizAlgebra::from_products(2, &[(0, 1, vec![(0, S::one())])])
        .expect("well-formed")
        .with_labels(vec!["e1".into(), "e2".into()])
}

/// Two-dimensional right Leibniz algebra with `[e2,e2] = e1` only.
pub fn leibniz_e2e2<S: Scalar>() -> LeibnizAlgebra<S> {
    LeibnizAlgebra::from_products(2, &[(1, 1, vec![(0, S::one())])])
        .expect("well-formed")
        .with_labels(vec!["e1".into(), "e2".into()])
}

/// The split three-dimensional simple Lie algebra `(h, e, f)` with
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, as a right Leibniz algebra.
pub fn sl2_leibniz<S: Scalar>() -> LeibnizAlgebra<S> {
    LeibnizAlgebra::from_products(
        3,
        &[
            (0, 1, vec![(1, from_int(2))]),
            (1, 0, vec![(1, from_int(-2))]),
            (0, 2, vec![(2, from_int(-2))]),
            (2, 0, vec![(2, from_int(2))]),
            (1, 2, vec![(0, S::one())]),
            (2, 1, vec![(0, from_int(-1))]),
        ],
    )
    .expect("well-formed")
    .with_labels(vec!["h".into(), "e".into(), "f".into()])
}

/// Operator matrix `[[a, b], [0, 0]]`, the first family of square
/// Rota-Baxter operators on [`b2`].
pub fn family1<S: Scalar>(a: i64, b: i64) -> Matrix<S> {
    Matrix::from_rows(vec![
        vec![from_int(a), from_int(b)],
        vec![S::zero(), S::zero()],
    ])
    .expect("well-formed")
}

/// Operator matrix `[[0, b], [0, -b]]`, the second family of square
/// Rota-Baxter operators on [`b2`].
pub fn family2<S: Scalar>(b: i64) -> Matrix<S> {
    Matrix::from_rows(vec![
        vec![S::zero(), from_int(b)],
        vec![S::zero(), from_int(-b)],
    ])
    .expect("well-formed")
}

/// The `b2` triple system with its adjoint representation, the context every
/// worked example lives in.
pub fn b2_adjoint_context<S: Scalar>() -> RbContext<S> {
    let lts = b2();
    let rep = adjoint_representation(&lts);
    RbContext::new(lts, rep).expect("adjoint context is consistent")
}

/// A verified relative Rota-Baxter operator from the first family.
pub fn b2_family1_operator<S: Scalar>(a: i64, b: i64) -> RelRb<S> {
    let op = RelRb::new(b2_adjoint_context().into(), family1(a, b)).expect("shape ok");
    assert!(op.verify().ok(), "family-1 operator must verify");
    op
}
