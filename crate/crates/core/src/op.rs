//! Rota-Baxter, relative Rota-Baxter and Nijenhuis operators, their
//! characterizations through the semidirect product, and the structures a
//! relative operator induces on its module.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::lts::{LinearMap, Lts};
use crate::rep::{semidirect_product, Representation, Slot};
use crate::report::Report;
use crate::scalar::{from_int, Scalar};

/// Ambient data of a relative Rota-Baxter operator: a triple system together
/// with a representation on the module the operator starts from.
#[derive(Debug, Clone, PartialEq)]
pub struct RbContext<S> {
    lts: Lts<S>,
    rep: Representation<S>,
}

impl<S: Scalar> RbContext<S> {
    pub fn new(lts: Lts<S>, rep: Representation<S>) -> Result<Self> {
        if rep.algebra_dim() != lts.dim() {
            return Err(Error::DimensionMismatch {
                context: "context representation",
                expected: lts.dim(),
                found: rep.algebra_dim(),
            });
        }
        Ok(RbContext { lts, rep })
    }

    pub fn lts(&self) -> &Lts<S> {
        &self.lts
    }

    pub fn rep(&self) -> &Representation<S> {
        &self.rep
    }

    pub fn algebra_dim(&self) -> usize {
        self.lts.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim()
    }

    /// Verify both the triple system and the representation.
    pub fn verify(&self) -> Report<S> {
        let mut report = self.lts.verify();
        report.merge(crate::rep::verify_representation(&self.lts, &self.rep));
        report
    }

    /// The semidirect product triple system on `L (+) V`.
    pub fn semidirect(&self) -> Lts<S> {
        semidirect_product(&self.lts, &self.rep)
    }
}

/// A linear map `T: V -> L` against a fixed context. Construction never
/// verifies; [`RelRb::verify`] is explicit and its outcome is cached so the
/// induced-structure operations can insist on it.
#[derive(Debug, Clone)]
pub struct RelRb<S> {
    ctx: Arc<RbContext<S>>,
    matrix: Matrix<S>,
    verified: OnceLock<bool>,
}

impl<S: Scalar> RelRb<S> {
    pub fn new(ctx: Arc<RbContext<S>>, matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != ctx.algebra_dim() {
            return Err(Error::DimensionMismatch {
                context: "operator target",
                expected: ctx.algebra_dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != ctx.module_dim() {
            return Err(Error::DimensionMismatch {
                context: "operator source",
                expected: ctx.module_dim(),
                found: matrix.cols(),
            });
        }
        Ok(RelRb {
            ctx,
            matrix,
            verified: OnceLock::new(),
        })
    }

    pub fn context(&self) -> &Arc<RbContext<S>> {
        &self.ctx
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// `T v`.
    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        self.matrix.mul_vec(v)
    }

    /// Image of the module basis vector `u`.
    pub fn image_basis(&self, u: usize) -> Vector<S> {
        self.matrix.col(u)
    }

    /// Check the defining identity
    /// `{Tu,Tv,Tw} = T( l(Tu,Tv)w + m(Tu,Tw)v + r(Tv,Tw)u )`
    /// on every basis triple of the module, caching whether it holds.
    pub fn verify(&self) -> Report<S> {
        let report = relative_rb_report(&self.ctx, &self.matrix);
        let _ = self.verified.set(report.ok());
        report
    }

    /// `Some(ok)` once [`RelRb::verify`] has run, `None` before.
    pub fn verification_status(&self) -> Option<bool> {
        self.verified.get().copied()
    }

    pub fn require_verified(&self) -> Result<()> {
        match self.verified.get() {
            None => Err(Error::UnverifiedOperator),
            Some(false) => Err(Error::NotRotaBaxter),
            Some(true) => Ok(()),
        }
    }

    pub fn same_context(&self, other: &RelRb<S>) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }
}

/// Report for the plain Rota-Baxter identity of a square operator `R` on a
/// triple system:
/// `{Rx,Ry,Rz} = R({Rx,Ry,z} + {Rx,y,Rz} + {x,Ry,Rz})`.
pub fn rota_baxter_report<S: Scalar>(lts: &Lts<S>, r: &LinearMap<S>) -> Report<S> {
    assert!(r.is_square() && r.rows() == lts.dim(), "operator must be square of the algebra dimension");
    let n = lts.dim();
    let images: Vec<Vector<S>> = (0..n).map(|i| r.col(i)).collect();
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = Vector::basis(n, x);
                let ey = Vector::basis(n, y);
                let ez = Vector::basis(n, z);
                let lhs = lts.product(&images[x], &images[y], &images[z]).expect("shape");
                let inner = lts
                    .product(&images[x], &images[y], &ez)
                    .expect("shape")
                    .add(&lts.product(&images[x], &ey, &images[z]).expect("shape"))
                    .add(&lts.product(&ex, &images[y], &images[z]).expect("shape"));
                let rhs = r.mul_vec(&inner);
                report.check("rb", &[x, y, z], lhs.sub(&rhs).into_entries());
            }
        }
    }
    report
}

/// Report for the relative Rota-Baxter identity of a raw matrix against a
/// context. [`RelRb::verify`] wraps this with result caching.
pub fn relative_rb_report<S: Scalar>(ctx: &RbContext<S>, t: &Matrix<S>) -> Report<S> {
    let mut report = Report::new();
    relative_rb_scan(ctx, t, |args, residual| {
        report.record("relative-rb", args, residual);
        true
    });
    report
}

/// Fast pass/fail version used by the grid search.
pub fn relative_rb_ok<S: Scalar>(ctx: &RbContext<S>, t: &Matrix<S>) -> bool {
    let mut ok = true;
    relative_rb_scan(ctx, t, |_, _| {
        ok = false;
        false
    });
    ok
}

/// Shared enumeration: calls `on_violation` for every failing triple; the
/// callback returns whether to keep scanning.
fn relative_rb_scan<S: Scalar>(
    ctx: &RbContext<S>,
    t: &Matrix<S>,
    mut on_violation: impl FnMut(&[usize], Vec<S>) -> bool,
) {
    let m = ctx.module_dim();
    let images: Vec<Vector<S>> = (0..m).map(|u| t.col(u)).collect();
    // Precompute action matrices at image pairs.
    let pair = |slot: Slot, a: usize, b: usize| ctx.rep.eval(slot, &images[a], &images[b]);
    let mut l_tab = Vec::with_capacity(m * m);
    let mut m_tab = Vec::with_capacity(m * m);
    let mut r_tab = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            l_tab.push(pair(Slot::L, a, b));
            m_tab.push(pair(Slot::M, a, b));
            r_tab.push(pair(Slot::R, a, b));
        }
    }
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let lhs = ctx
                    .lts
                    .product(&images[u], &images[v], &images[w])
                    .expect("shape");
                let inner = l_tab[u * m + v]
                    .col(w)
                    .add(&m_tab[u * m + w].col(v))
                    .add(&r_tab[v * m + w].col(u));
                let rhs = t.mul_vec(&inner);
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() && !on_violation(&[u, v, w], residual.into_entries()) {
                    return;
                }
            }
        }
    }
}

/// Report for the Nijenhuis identity of a square operator `N`:
///
/// ```text
/// {Nx,Ny,Nz} = N{Nx,Ny,z} + N{x,Ny,Nz} + N{Nx,y,Nz}
///              - N^2{Nx,y,z} - N^2{x,Ny,z} - N^2{x,y,Nz} + N^3{x,y,z}
/// ```
pub fn nijenhuis_report<S: Scalar>(lts: &Lts<S>, n_op: &LinearMap<S>) -> Report<S> {
    assert!(
        n_op.is_square() && n_op.rows() == lts.dim(),
        "operator must be square of the algebra dimension"
    );
    let n = lts.dim();
    let n2 = n_op.mul(n_op);
    let n3 = n2.mul(n_op);
    let images: Vec<Vector<S>> = (0..n).map(|i| n_op.col(i)).collect();
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = Vector::basis(n, x);
                let ey = Vector::basis(n, y);
                let ez = Vector::basis(n, z);
                let lhs = lts.product(&images[x], &images[y], &images[z]).expect("shape");
                let single = lts
                    .product(&images[x], &images[y], &ez)
                    .expect("shape")
                    .add(&lts.product(&ex, &images[y], &images[z]).expect("shape"))
                    .add(&lts.product(&images[x], &ey, &images[z]).expect("shape"));
                let double = lts
                    .product(&images[x], &ey, &ez)
                    .expect("shape")
                    .add(&lts.product(&ex, &images[y], &ez).expect("shape"))
                    .add(&lts.product(&ex, &ey, &images[z]).expect("shape"));
                let cube = Vector::from_entries(lts.product_basis(x, y, z).to_vec());
                let rhs = n_op
                    .mul_vec(&single)
                    .sub(&n2.mul_vec(&double))
                    .add(&n3.mul_vec(&cube));
                report.check("nijenhuis", &[x, y, z], lhs.sub(&rhs).into_entries());
            }
        }
    }
    report
}

/// Lift `T: V -> L` to the endomorphism `x + u -> Tu` of `L (+) V`, the
/// block matrix `[[0, T], [0, 0]]`. It is Rota-Baxter on the semidirect
/// product exactly when `T` satisfies the relative identity.
pub fn hat_lift<S: Scalar>(op: &RelRb<S>) -> LinearMap<S> {
    let n = op.context().algebra_dim();
    let m = op.context().module_dim();
    let mut out = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..m {
            out.set(i, n + j, op.matrix().at(i, j).clone());
        }
    }
    out
}

/// Lift `T` to `[[id, T], [0, 0]]` on `L (+) V`; an idempotent that is
/// Nijenhuis on the semidirect product exactly when `T` satisfies the
/// relative identity.
pub fn tilde_lift<S: Scalar>(op: &RelRb<S>) -> LinearMap<S> {
    let n = op.context().algebra_dim();
    let mut out = hat_lift(op);
    for i in 0..n {
        out.set(i, i, S::one());
    }
    out
}

/// Whether the graph `{Tu + u}` is closed under the semidirect triple
/// product. Decided through the semidirect product itself: the product of
/// three graph vectors lies in the graph iff its algebra part is `T` of its
/// module part.
pub fn graph_is_subalgebra<S: Scalar>(op: &RelRb<S>) -> bool {
    let n = op.context().algebra_dim();
    let m = op.context().module_dim();
    let semi = op.context().semidirect();
    let graph_vec = |u: usize| {
        let mut v = Vector::zeros(n + m);
        let tu = op.image_basis(u);
        for i in 0..n {
            v.set(i, tu.at(i).clone());
        }
        v.set(n + u, S::one());
        v
    };
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let p = semi
                    .product(&graph_vec(u), &graph_vec(v), &graph_vec(w))
                    .expect("shape");
                let part_l = Vector::from_entries(p.entries()[..n].to_vec());
                let part_v = Vector::from_entries(p.entries()[n..].to_vec());
                if op.apply(&part_v) != part_l {
                    return false;
                }
            }
        }
    }
    true
}

/// Compatibility of two relative Rota-Baxter operators over one context:
/// the mixed identity
///
/// ```text
/// {T_i u, T_i v, T_j w} + {T_i u, T_j v, T_i w} + {T_j u, T_i v, T_i w}
///   = T_i( l(T_i u, T_j v)w + m(T_i u, T_j w)v + r(T_i v, T_j w)u )
///   + T_i( l(T_j u, T_i v)w + m(T_j u, T_i w)v + r(T_j v, T_i w)u )
///   + T_j( l(T_i u, T_i v)w + m(T_i u, T_i w)v + r(T_i v, T_i w)u )
/// ```
///
/// for `(i,j) = (1,2)` and `(2,1)`. Together with both operators being
/// relative Rota-Baxter this makes every combination `a T1 + b T2` one.
pub fn compatibility_report<S: Scalar>(op1: &RelRb<S>, op2: &RelRb<S>) -> Result<Report<S>> {
    if !op1.same_context(op2) {
        return Err(Error::ContextMismatch);
    }
    let ctx = op1.context();
    let m = ctx.module_dim();
    let mut report = Report::new();
    for (label, ti, tj) in [
        ("compat-12", op1, op2),
        ("compat-21", op2, op1),
    ] {
        let img_i: Vec<Vector<S>> = (0..m).map(|u| ti.image_basis(u)).collect();
        let img_j: Vec<Vector<S>> = (0..m).map(|u| tj.image_basis(u)).collect();
        for u in 0..m {
            for v in 0..m {
                for w in 0..m {
                    let lts = ctx.lts();
                    let rep = ctx.rep();
                    let lhs = lts
                        .product(&img_i[u], &img_i[v], &img_j[w])
                        .expect("shape")
                        .add(&lts.product(&img_i[u], &img_j[v], &img_i[w]).expect("shape"))
                        .add(&lts.product(&img_j[u], &img_i[v], &img_i[w]).expect("shape"));
                    let first = rep
                        .eval(Slot::L, &img_i[u], &img_j[v])
                        .col(w)
                        .add(&rep.eval(Slot::M, &img_i[u], &img_j[w]).col(v))
                        .add(&rep.eval(Slot::R, &img_i[v], &img_j[w]).col(u));
                    let second = rep
                        .eval(Slot::L, &img_j[u], &img_i[v])
                        .col(w)
                        .add(&rep.eval(Slot::M, &img_j[u], &img_i[w]).col(v))
                        .add(&rep.eval(Slot::R, &img_j[v], &img_i[w]).col(u));
                    let third = rep
                        .eval(Slot::L, &img_i[u], &img_i[v])
                        .col(w)
                        .add(&rep.eval(Slot::M, &img_i[u], &img_i[w]).col(v))
                        .add(&rep.eval(Slot::R, &img_i[v], &img_i[w]).col(u));
                    let rhs = ti
                        .apply(&first)
                        .add(&ti.apply(&second))
                        .add(&tj.apply(&third));
                    report.check(label, &[u, v, w], lhs.sub(&rhs).into_entries());
                }
            }
        }
    }
    Ok(report)
}

/// `N = T1 T2^{-1}` for a compatible pair with invertible `T2`; the result
/// is a Nijenhuis operator on the ambient triple system.
pub fn nijenhuis_from_pair<S: Scalar>(op1: &RelRb<S>, op2: &RelRb<S>) -> Result<LinearMap<S>> {
    op1.require_verified()?;
    op2.require_verified()?;
    if !compatibility_report(op1, op2)?.ok() {
        return Err(Error::IncompatiblePair);
    }
    let inv = op2.matrix().inverse()?;
    Ok(op1.matrix().mul(&inv))
}

/// The triple system on the module induced by a verified operator:
/// `{u,v,w}_T = l(Tu,Tv)w + m(Tu,Tw)v + r(Tv,Tw)u`. `T` becomes a morphism
/// from this system to the ambient one.
pub fn induced_lts_on_module<S: Scalar>(op: &RelRb<S>) -> Result<Lts<S>> {
    op.require_verified()?;
    let ctx = op.context();
    let m = ctx.module_dim();
    let images: Vec<Vector<S>> = (0..m).map(|u| op.image_basis(u)).collect();
    let mut out = Lts::zero(m)?;
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let col = ctx
                    .rep()
                    .eval(Slot::L, &images[u], &images[v])
                    .col(w)
                    .add(&ctx.rep().eval(Slot::M, &images[u], &images[w]).col(v))
                    .add(&ctx.rep().eval(Slot::R, &images[v], &images[w]).col(u));
                for l in 0..m {
                    out.set_entry(u, v, w, l, col.at(l).clone());
                }
            }
        }
    }
    Ok(out)
}

/// The representation of the induced system on the ambient algebra:
///
/// ```text
/// l_T(u,v)x = {Tu,Tv,x} - T( r(Tv,x)u + m(Tu,x)v )
/// m_T(u,v)x = {Tu,x,Tv} - T( l(Tu,x)v + r(x,Tv)u )
/// r_T(u,v)x = {x,Tu,Tv} - T( l(x,Tu)v + m(x,Tv)u )
/// ```
pub fn induced_rep_on_algebra<S: Scalar>(op: &RelRb<S>) -> Result<Representation<S>> {
    op.require_verified()?;
    let ctx = op.context();
    let n = ctx.algebra_dim();
    let m = ctx.module_dim();
    let images: Vec<Vector<S>> = (0..m).map(|u| op.image_basis(u)).collect();
    let lts = ctx.lts();
    let rep = ctx.rep();
    let mut out = Representation::zero(m, n);
    for u in 0..m {
        for v in 0..m {
            let mut l_mat = Matrix::zeros(n, n);
            let mut m_mat = Matrix::zeros(n, n);
            let mut r_mat = Matrix::zeros(n, n);
            for x in 0..n {
                let ex = Vector::basis(n, x);
                let eu = Vector::basis(m, u);
                let ev = Vector::basis(m, v);

                let l_col = lts
                    .product(&images[u], &images[v], &ex)
                    .expect("shape")
                    .sub(&op.apply(
                        &rep.eval(Slot::R, &images[v], &ex)
                            .mul_vec(&eu)
                            .add(&rep.eval(Slot::M, &images[u], &ex).mul_vec(&ev)),
                    ));
                let m_col = lts
                    .product(&images[u], &ex, &images[v])
                    .expect("shape")
                    .sub(&op.apply(
                        &rep.eval(Slot::L, &images[u], &ex)
                            .mul_vec(&ev)
                            .add(&rep.eval(Slot::R, &ex, &images[v]).mul_vec(&eu)),
                    ));
                let r_col = lts
                    .product(&ex, &images[u], &images[v])
                    .expect("shape")
                    .sub(&op.apply(
                        &rep.eval(Slot::L, &ex, &images[u])
                            .mul_vec(&ev)
                            .add(&rep.eval(Slot::M, &ex, &images[v]).mul_vec(&eu)),
                    ));
                for row in 0..n {
                    l_mat.set(row, x, l_col.at(row).clone());
                    m_mat.set(row, x, m_col.at(row).clone());
                    r_mat.set(row, x, r_col.at(row).clone());
                }
            }
            out.set_basis(Slot::L, u, v, l_mat);
            out.set_basis(Slot::M, u, v, m_mat);
            out.set_basis(Slot::R, u, v, r_mat);
        }
    }
    Ok(out)
}

/// The right-multiplication endomorphism `x -> {x, a, b}` of the algebra.
pub fn slot1_action<S: Scalar>(lts: &Lts<S>, a: &Vector<S>, b: &Vector<S>) -> Matrix<S> {
    let n = lts.dim();
    Matrix::from_columns(
        n,
        &(0..n)
            .map(|j| {
                lts.product(&Vector::basis(n, j), a, b)
                    .expect("shape checked by caller")
            })
            .collect::<Vec<_>>(),
    )
}

/// The map `delta(a,b): V -> L`,
/// `v -> T r(a,b)v - T r(b,a)v - {Tv,a,b} + {Tv,b,a}`,
/// which is always a 1-cocycle of the induced complex.
pub fn delta_cocycle<S: Scalar>(op: &RelRb<S>, a: &Vector<S>, b: &Vector<S>) -> Result<LinearMap<S>> {
    op.require_verified()?;
    let ctx = op.context();
    let n = ctx.algebra_dim();
    for v in [a, b] {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                context: "delta argument",
                expected: n,
                found: v.len(),
            });
        }
    }
    let r_ab = ctx.rep().eval(Slot::R, a, b);
    let r_ba = ctx.rep().eval(Slot::R, b, a);
    let act_ab = slot1_action(ctx.lts(), a, b);
    let act_ba = slot1_action(ctx.lts(), b, a);
    let first = op.matrix().mul(&r_ab.sub(&r_ba));
    let second = act_ab.sub(&act_ba).mul(op.matrix());
    Ok(first.sub(&second))
}

/// Result of a grid search over integer operator matrices.
#[derive(Debug, Clone)]
pub struct GridSearch<S> {
    /// Matrices passing the relative Rota-Baxter check, in the enumeration
    /// order (row-major entries, each counting `-k..=k`, last entry fastest).
    pub passing: Vec<Matrix<S>>,
    /// Number of candidate matrices examined.
    pub total: u128,
}

const GRID_LIMIT: u128 = 10_000_000;

/// Enumerate all `n x m` integer matrices with entries in `[-k, k]` and keep
/// those satisfying the relative Rota-Baxter identity in the given context.
pub fn classify_grid<S: Scalar>(ctx: &RbContext<S>, k: i64) -> Result<GridSearch<S>> {
    let n = ctx.algebra_dim();
    let m = ctx.module_dim();
    let cells = n * m;
    let base = 2 * (k as u128) + 1;
    let mut candidates: u128 = 1;
    for _ in 0..cells {
        candidates = candidates
            .checked_mul(base)
            .filter(|&c| c <= GRID_LIMIT)
            .ok_or(Error::GridTooLarge {
                candidates: u128::MAX,
                limit: GRID_LIMIT,
            })?;
    }
    let mut digits = vec![-k; cells];
    let mut passing = Vec::new();
    let mut total = 0u128;
    loop {
        total += 1;
        let mat = Matrix::from_fn(n, m, |i, j| from_int::<S>(digits[i * m + j]));
        if relative_rb_ok(ctx, &mat) {
            passing.push(mat);
        }
        // Odometer increment, last entry fastest.
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(GridSearch { passing, total });
            }
            pos -= 1;
            if digits[pos] < k {
                digits[pos] += 1;
                break;
            }
            digits[pos] = -k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b2, b2_adjoint_context, b2_family1_operator, family1, family2, rat};
    use num_traits::Zero;
    use crate::lts::is_lts_morphism;
    use crate::rep::{verify_representation, Representation};
    use crate::Q;

    fn op_from(mat: Matrix<Q>) -> RelRb<Q> {
        RelRb::new(Arc::new(b2_adjoint_context()), mat).unwrap()
    }

    #[test]
    fn family_operators_are_rota_baxter() {
        let l = b2::<Q>();
        assert!(rota_baxter_report(&l, &family1::<Q>(3, -1)).ok());
        assert!(rota_baxter_report(&l, &family2::<Q>(2)).ok());
    }

    #[test]
    fn identity_is_not_rota_baxter_on_b2() {
        let l = b2::<Q>();
        let report = rota_baxter_report(&l, &Matrix::identity(2));
        assert!(!report.ok());
        assert_eq!(report.violations[0].identity, "rb");
    }

    #[test]
    fn relative_check_agrees_with_square_check_over_adjoint() {
        let zero = op_from(Matrix::zeros(2, 2));
        assert!(zero.verify().ok());

        let fam = op_from(family1(3, -1));
        assert!(fam.verify().ok());

        let id = op_from(Matrix::identity(2));
        assert!(!id.verify().ok());
        assert_eq!(id.verification_status(), Some(false));
    }

    #[test]
    fn scalar_maps_are_nijenhuis() {
        let l = b2::<Q>();
        assert!(nijenhuis_report(&l, &Matrix::identity(2)).ok());
        assert!(nijenhuis_report(&l, &Matrix::zeros(2, 2)).ok());
        assert!(nijenhuis_report(&l, &Matrix::identity(2).scale(&rat(2, 1))).ok());
    }

    #[test]
    fn hat_lift_characterizes_relative_operators() {
        let semi = b2_adjoint_context::<Q>().semidirect();

        let zero = op_from(Matrix::zeros(2, 2));
        assert!(rota_baxter_report(&semi, &hat_lift(&zero)).ok());

        let fam = op_from(family1(1, 0));
        assert!(rota_baxter_report(&semi, &hat_lift(&fam)).ok());

        let id = op_from(Matrix::identity(2));
        assert!(!rota_baxter_report(&semi, &hat_lift(&id)).ok());
    }

    #[test]
    fn graph_characterizes_relative_operators() {
        assert!(graph_is_subalgebra(&op_from(Matrix::zeros(2, 2))));
        assert!(graph_is_subalgebra(&op_from(family1(2, 2))));
        assert!(!graph_is_subalgebra(&op_from(Matrix::identity(2))));
    }

    #[test]
    fn tilde_lift_is_idempotent_and_characterizes() {
        let semi = b2_adjoint_context::<Q>().semidirect();

        for mat in [Matrix::zeros(2, 2), family1(1, -2), Matrix::identity(2)] {
            let op = op_from(mat);
            let tilde = tilde_lift(&op);
            assert_eq!(tilde.mul(&tilde), tilde);
            let relative_ok = op.verify().ok();
            assert_eq!(nijenhuis_report(&semi, &tilde).ok(), relative_ok);
        }
    }

    #[test]
    fn compatibility_of_trivial_pairs() {
        let t = b2_family1_operator::<Q>(1, 0);
        let zero = op_from(Matrix::zeros(2, 2));
        zero.verify();
        assert!(compatibility_report(&t, &t).unwrap().ok());
        assert!(compatibility_report(&t, &zero).unwrap().ok());
    }

    #[test]
    fn compatibility_matches_linear_combinations() {
        // A compatible pair (both in the first family) and an incompatible
        // pair (one from each family); the sampled combinations must agree
        // with the mixed identity either way.
        let pairs = [
            (b2_family1_operator::<Q>(1, 0), b2_family1_operator::<Q>(0, 1), true),
            (b2_family1_operator::<Q>(1, 0), {
                let op = op_from(family2(1));
                assert!(op.verify().ok());
                op
            }, false),
        ];
        for (t1, t2, expected) in pairs {
            let compatible = compatibility_report(&t1, &t2).unwrap().ok();
            let ctx = t1.context();
            let mut combos_ok = true;
            for lambda in 1..=3i64 {
                for eta in 1..=3i64 {
                    let combo = t1
                        .matrix()
                        .scale(&rat(lambda, 1))
                        .add(&t2.matrix().scale(&rat(eta, 1)));
                    combos_ok &= relative_rb_ok(ctx, &combo);
                }
            }
            assert_eq!(compatible, combos_ok);
            assert_eq!(compatible, expected);
        }
    }

    #[test]
    fn self_compatibility_equals_the_defining_identity() {
        for mat in [family1::<Q>(2, -1), Matrix::identity(2)] {
            let op = op_from(mat);
            let compat = compatibility_report(&op, &op).unwrap().ok();
            assert_eq!(compat, op.verify().ok());
        }
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let t1 = b2_family1_operator::<Q>(1, 0);
        let other_ctx = RbContext::new(
            Lts::<Q>::zero(2).unwrap(),
            Representation::zero(2, 2),
        )
        .unwrap();
        let t2 = RelRb::new(Arc::new(other_ctx), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(
            compatibility_report(&t1, &t2).unwrap_err(),
            Error::ContextMismatch
        );
    }

    #[test]
    fn nijenhuis_from_pair_on_abelian_system() {
        // On an abelian system with the zero representation every map is a
        // relative operator and all pairs are compatible.
        let ctx = Arc::new(
            RbContext::new(Lts::<Q>::zero(2).unwrap(), Representation::zero(2, 2)).unwrap(),
        );
        let t2 = RelRb::new(
            ctx.clone(),
            Matrix::from_rows(vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]])
                .unwrap(),
        )
        .unwrap();
        t2.verify();

        let t1 = RelRb::new(ctx.clone(), t2.matrix().scale(&rat(2, 1))).unwrap();
        t1.verify();
        let n = nijenhuis_from_pair(&t1, &t2).unwrap();
        assert_eq!(n, Matrix::identity(2).scale(&rat(2, 1)));
        assert!(nijenhuis_report(ctx.lts(), &n).ok());

        // Same operator gives the identity.
        let n = nijenhuis_from_pair(&t2, &t2).unwrap();
        assert_eq!(n, Matrix::identity(2));
    }

    #[test]
    fn nijenhuis_from_pair_rejects_singular_and_unverified() {
        let t = b2_family1_operator::<Q>(1, 0);
        // family-1 matrices are singular
        assert_eq!(nijenhuis_from_pair(&t, &t).unwrap_err(), Error::Singular);

        let fresh = op_from(family1(1, 0));
        assert_eq!(
            nijenhuis_from_pair(&fresh, &fresh).unwrap_err(),
            Error::UnverifiedOperator
        );
    }

    #[test]
    fn induced_structures_for_zero_operator_vanish() {
        let zero = op_from(Matrix::zeros(2, 2));
        zero.verify();
        let lts = induced_lts_on_module(&zero).unwrap();
        assert!(lts.tensor().iter().all(|x| x.is_zero()));
        let rep = induced_rep_on_algebra(&zero).unwrap();
        for slot in [Slot::R, Slot::M, Slot::L] {
            for u in 0..2 {
                for v in 0..2 {
                    assert!(rep.basis(slot, u, v).is_zero());
                }
            }
        }
    }

    #[test]
    fn induced_structures_verify_and_t_is_a_morphism() {
        let t = b2_family1_operator::<Q>(1, 0);
        let induced = induced_lts_on_module(&t).unwrap();
        assert!(induced.verify().ok());
        assert!(is_lts_morphism(t.matrix(), &induced, t.context().lts()).unwrap());
        let rep = induced_rep_on_algebra(&t).unwrap();
        assert!(verify_representation(&induced, &rep).ok());
    }

    #[test]
    fn induced_system_is_pullback_for_invertible_operators() {
        // Abelian ambient with zero action: the induced bracket is zero,
        // which is exactly the pullback of the zero bracket.
        let ctx = Arc::new(
            RbContext::new(Lts::<Q>::zero(2).unwrap(), Representation::zero(2, 2)).unwrap(),
        );
        let t = RelRb::new(
            ctx,
            Matrix::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]])
                .unwrap(),
        )
        .unwrap();
        t.verify();
        let induced = induced_lts_on_module(&t).unwrap();
        assert!(induced.tensor().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn induced_operations_demand_verification() {
        let fresh = op_from(family1(1, 0));
        assert_eq!(
            induced_lts_on_module(&fresh).unwrap_err(),
            Error::UnverifiedOperator
        );
        let id = op_from(Matrix::identity(2));
        id.verify();
        assert_eq!(
            induced_rep_on_algebra(&id).unwrap_err(),
            Error::NotRotaBaxter
        );
    }

    #[test]
    fn delta_cocycle_degenerate_cases() {
        let t = b2_family1_operator::<Q>(1, 0);
        let a = Vector::from_entries(vec![rat(1, 1), rat(2, 1)]);
        assert!(delta_cocycle(&t, &a, &a).unwrap().is_zero());

        let zero = op_from(Matrix::zeros(2, 2));
        zero.verify();
        let b = Vector::basis(2, 1);
        assert!(delta_cocycle(&zero, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn grid_reproduces_both_families_at_bound_two() {
        let ctx = b2_adjoint_context::<Q>();
        let grid = classify_grid(&ctx, 2).unwrap();
        assert_eq!(grid.total, 625);
        assert_eq!(grid.passing.len(), 29);
        for mat in &grid.passing {
            let in_family1 = mat.at(1, 0).is_zero() && mat.at(1, 1).is_zero();
            let in_family2 = mat.at(0, 0).is_zero()
                && mat.at(1, 0).is_zero()
                && *mat.at(1, 1) == -mat.at(0, 1).clone();
            assert!(in_family1 || in_family2);
        }
    }

    #[test]
    fn grid_bound_zero_is_only_the_zero_matrix() {
        let ctx = b2_adjoint_context::<Q>();
        let grid = classify_grid(&ctx, 0).unwrap();
        assert_eq!(grid.total, 1);
        assert_eq!(grid.passing.len(), 1);
        assert!(grid.passing[0].is_zero());
    }

    #[test]
    fn grid_on_abelian_system_accepts_everything() {
        let ctx = RbContext::new(Lts::<Q>::zero(2).unwrap(), Representation::zero(2, 2)).unwrap();
        let grid = classify_grid(&ctx, 1).unwrap();
        assert_eq!(grid.total, 81);
        assert_eq!(grid.passing.len(), 81);
    }

    #[test]
    fn grid_guard_rejects_huge_enumerations() {
        let ctx = RbContext::new(Lts::<Q>::zero(4).unwrap(), Representation::zero(4, 4)).unwrap();
        assert!(matches!(
            classify_grid(&ctx, 3),
            Err(Error::GridTooLarge { .. })
        ));
    }
}
