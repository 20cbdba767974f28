//! Representations of triple systems and of right Leibniz algebras, their
//! verification, semidirect products, and the induced representation carried
//! along the Leibniz-to-triple-system functor.
//!
//! Slot semantics are anchored once and for all to the semidirect bracket
//!
//! ```text
//! {x+u, y+v, z+w} = {x,y,z} + l(x,y)w + m(x,z)v + r(y,z)u
//! ```
//!
//! so `r` acts on a module element in slot 1, `m` in slot 2 and `l` in
//! slot 3. Every other formula in the crate is transcribed against this
//! anchor.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::lts::{lts_from_leibniz, LeibnizAlgebra, Lts};
use crate::report::Report;
use crate::scalar::Scalar;

/// Representation `(r, m, l)` of a triple system on a module, stored as
/// basis-pair-indexed tables of `module_dim x module_dim` matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S> {
    algebra_dim: usize,
    module_dim: usize,
    rep_l: Vec<Matrix<S>>,
    rep_m: Vec<Matrix<S>>,
    rep_r: Vec<Matrix<S>>,
}

/// Which of the three action maps is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    R,
    M,
    L,
}

impl<S: Scalar> Representation<S> {
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let table = vec![Matrix::zeros(module_dim, module_dim); algebra_dim * algebra_dim];
        Representation {
            algebra_dim,
            module_dim,
            rep_l: table.clone(),
            rep_m: table.clone(),
            rep_r: table,
        }
    }

    pub fn from_tables(
        algebra_dim: usize,
        module_dim: usize,
        rep_l: Vec<Matrix<S>>,
        rep_m: Vec<Matrix<S>>,
        rep_r: Vec<Matrix<S>>,
    ) -> Result<Self> {
        for table in [&rep_l, &rep_m, &rep_r] {
            if table.len() != algebra_dim * algebra_dim {
                return Err(Error::DimensionMismatch {
                    context: "representation table",
                    expected: algebra_dim * algebra_dim,
                    found: table.len(),
                });
            }
            for mat in table {
                if mat.rows() != module_dim || mat.cols() != module_dim {
                    return Err(Error::DimensionMismatch {
                        context: "representation matrix",
                        expected: module_dim,
                        found: mat.rows(),
                    });
                }
            }
        }
        Ok(Representation {
            algebra_dim,
            module_dim,
            rep_l,
            rep_m,
            rep_r,
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    fn table(&self, slot: Slot) -> &[Matrix<S>] {
        match slot {
            Slot::L => &self.rep_l,
            Slot::M => &self.rep_m,
            Slot::R => &self.rep_r,
        }
    }

    fn table_mut(&mut self, slot: Slot) -> &mut Vec<Matrix<S>> {
        match slot {
            Slot::L => &mut self.rep_l,
            Slot::M => &mut self.rep_m,
            Slot::R => &mut self.rep_r,
        }
    }

    /// Action matrix at a basis pair.
    pub fn basis(&self, slot: Slot, a: usize, b: usize) -> &Matrix<S> {
        &self.table(slot)[a * self.algebra_dim + b]
    }

    pub fn set_basis(&mut self, slot: Slot, a: usize, b: usize, mat: Matrix<S>) {
        assert_eq!(mat.rows(), self.module_dim);
        assert_eq!(mat.cols(), self.module_dim);
        let n = self.algebra_dim;
        self.table_mut(slot)[a * n + b] = mat;
    }

    /// Bilinear evaluation at arbitrary algebra vectors.
    pub fn eval(&self, slot: Slot, x: &Vector<S>, y: &Vector<S>) -> Matrix<S> {
        assert_eq!(x.len(), self.algebra_dim, "representation argument 1");
        assert_eq!(y.len(), self.algebra_dim, "representation argument 2");
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for a in 0..self.algebra_dim {
            if x.at(a).is_zero() {
                continue;
            }
            for b in 0..self.algebra_dim {
                if y.at(b).is_zero() {
                    continue;
                }
                let coeff = x.at(a).clone() * y.at(b).clone();
                let mat = self.basis(slot, a, b);
                for i in 0..self.module_dim {
                    for j in 0..self.module_dim {
                        if !mat.at(i, j).is_zero() {
                            out.add_at(i, j, coeff.clone() * mat.at(i, j).clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// `sum_a x_a rho(e_a, e_b)` for a coefficient slice in the first slot.
    fn eval_vb(&self, slot: Slot, x: &[S], b: usize) -> Matrix<S> {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            let mat = self.basis(slot, a, b);
            for i in 0..self.module_dim {
                for j in 0..self.module_dim {
                    if !mat.at(i, j).is_zero() {
                        out.add_at(i, j, xa.clone() * mat.at(i, j).clone());
                    }
                }
            }
        }
        out
    }

    /// `sum_b y_b rho(e_a, e_b)` for a coefficient slice in the second slot.
    fn eval_bv(&self, slot: Slot, a: usize, y: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let mat = self.basis(slot, a, b);
            for i in 0..self.module_dim {
                for j in 0..self.module_dim {
                    if !mat.at(i, j).is_zero() {
                        out.add_at(i, j, yb.clone() * mat.at(i, j).clone());
                    }
                }
            }
        }
        out
    }

    /// Pull the tables along basis permutations of the algebra and module.
    pub fn permuted(&self, perm_algebra: &[usize], perm_module: &[usize]) -> Self {
        assert_eq!(perm_algebra.len(), self.algebra_dim);
        assert_eq!(perm_module.len(), self.module_dim);
        let mut out = Self::zero(self.algebra_dim, self.module_dim);
        for slot in [Slot::R, Slot::M, Slot::L] {
            for a in 0..self.algebra_dim {
                for b in 0..self.algebra_dim {
                    let src = self.basis(slot, perm_algebra[a], perm_algebra[b]);
                    let mat = Matrix::from_fn(self.module_dim, self.module_dim, |i, j| {
                        src.at(perm_module[i], perm_module[j]).clone()
                    });
                    out.set_basis(slot, a, b, mat);
                }
            }
        }
        out
    }
}

/// Check the ten defining identities of a triple-system representation on
/// every basis 4-tuple `(a,b,c,d)`. Violations are labeled `rep-1` through
/// `rep-10` in the order of the defining list, with the flattened matrix
/// residual.
pub fn verify_representation<S: Scalar>(lts: &Lts<S>, rep: &Representation<S>) -> Report<S> {
    assert_eq!(
        lts.dim(),
        rep.algebra_dim(),
        "representation is over a different algebra dimension"
    );
    let n = lts.dim();
    let mut report = Report::new();
    let prod = |i: usize, j: usize, k: usize| lts.product_basis(i, j, k);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    use Slot::{L, M, R};
                    let l = |x: usize, y: usize| rep.basis(L, x, y).clone();
                    let m = |x: usize, y: usize| rep.basis(M, x, y).clone();
                    let r = |x: usize, y: usize| rep.basis(R, x, y).clone();

                    // rep-1: l(a,{b,c,d}) = l({a,b,c},d) - l({a,c,b},d)
                    //        - l({a,d,b},c) + l({a,d,c},b)
                    let lhs = rep.eval_bv(L, a, prod(b, c, d));
                    let rhs = rep
                        .eval_vb(L, prod(a, b, c), d)
                        .sub(&rep.eval_vb(L, prod(a, c, b), d))
                        .sub(&rep.eval_vb(L, prod(a, d, b), c))
                        .add(&rep.eval_vb(L, prod(a, d, c), b));
                    report.check("rep-1", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-2: m(a,d) l(b,c) = m({a,b,c},d) - m({a,c,b},d)
                    //        - r(c,d) m(a,b) + r(b,d) m(a,c)
                    let lhs = m(a, d).mul(&l(b, c));
                    let rhs = rep
                        .eval_vb(M, prod(a, b, c), d)
                        .sub(&rep.eval_vb(M, prod(a, c, b), d))
                        .sub(&r(c, d).mul(&m(a, b)))
                        .add(&r(b, d).mul(&m(a, c)));
                    report.check("rep-2", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-3: m(a,d) m(b,c) = r(c,d) l(a,b) - r(c,d) m(a,b)
                    //        - m({a,c,b},d) + r(b,d) l(a,c)
                    let lhs = m(a, d).mul(&m(b, c));
                    let rhs = r(c, d)
                        .mul(&l(a, b))
                        .sub(&r(c, d).mul(&m(a, b)))
                        .sub(&rep.eval_vb(M, prod(a, c, b), d))
                        .add(&r(b, d).mul(&l(a, c)));
                    report.check("rep-3", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-4: m(a,d) r(b,c) = r(c,d) m(a,b) - r(c,d) l(a,b)
                    //        - r(b,d) l(a,c) + m({a,c,b},d)
                    let lhs = m(a, d).mul(&r(b, c));
                    let rhs = r(c, d)
                        .mul(&m(a, b))
                        .sub(&r(c, d).mul(&l(a, b)))
                        .sub(&r(b, d).mul(&l(a, c)))
                        .add(&rep.eval_vb(M, prod(a, c, b), d));
                    report.check("rep-4", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-5: r({a,b,c},d) = r(c,d) r(a,b) - r(c,d) r(b,a)
                    //        - r(b,d) r(c,a) + r(a,d) r(c,b)
                    let lhs = rep.eval_vb(R, prod(a, b, c), d);
                    let rhs = r(c, d)
                        .mul(&r(a, b))
                        .sub(&r(c, d).mul(&r(b, a)))
                        .sub(&r(b, d).mul(&r(c, a)))
                        .add(&r(a, d).mul(&r(c, b)));
                    report.check("rep-5", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-6: l(a,b) l(c,d) = l({a,b,c},d) - l({a,b,d},c)
                    //        - r(c,d) l(a,b) + r(d,c) l(a,b)
                    let lhs = l(a, b).mul(&l(c, d));
                    let rhs = rep
                        .eval_vb(L, prod(a, b, c), d)
                        .sub(&rep.eval_vb(L, prod(a, b, d), c))
                        .sub(&r(c, d).mul(&l(a, b)))
                        .add(&r(d, c).mul(&l(a, b)));
                    report.check("rep-6", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-7: l(a,b) m(c,d) = m({a,b,c},d) - r(c,d) l(a,b)
                    //        - l({a,b,d},c) + m({a,b,d},c)
                    let lhs = l(a, b).mul(&m(c, d));
                    let rhs = rep
                        .eval_vb(M, prod(a, b, c), d)
                        .sub(&r(c, d).mul(&l(a, b)))
                        .sub(&rep.eval_vb(L, prod(a, b, d), c))
                        .add(&rep.eval_vb(M, prod(a, b, d), c));
                    report.check("rep-7", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-8: l(a,b) r(c,d) = r(c,d) l(a,b) - m({a,b,c},d)
                    //        - m({a,b,d},c) + l({a,b,d},c)
                    let lhs = l(a, b).mul(&r(c, d));
                    let rhs = r(c, d)
                        .mul(&l(a, b))
                        .sub(&rep.eval_vb(M, prod(a, b, c), d))
                        .sub(&rep.eval_vb(M, prod(a, b, d), c))
                        .add(&rep.eval_vb(L, prod(a, b, d), c));
                    report.check("rep-8", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-9: m(a,{b,c,d}) = r(c,d) m(a,b) - r(b,d) m(a,c)
                    //        - r(b,c) m(a,d) + r(c,b) m(a,d)
                    let lhs = rep.eval_bv(M, a, prod(b, c, d));
                    let rhs = r(c, d)
                        .mul(&m(a, b))
                        .sub(&r(b, d).mul(&m(a, c)))
                        .sub(&r(b, c).mul(&m(a, d)))
                        .add(&r(c, b).mul(&m(a, d)));
                    report.check("rep-9", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());

                    // rep-10: r(a,{b,c,d}) = r(c,d) r(a,b) - r(b,d) r(a,c)
                    //         - r(b,c) r(a,d) + r(c,b) r(a,d)
                    let lhs = rep.eval_bv(R, a, prod(b, c, d));
                    let rhs = r(c, d)
                        .mul(&r(a, b))
                        .sub(&r(b, d).mul(&r(a, c)))
                        .sub(&r(b, c).mul(&r(a, d)))
                        .add(&r(c, b).mul(&r(a, d)));
                    report.check("rep-10", &[a, b, c, d], lhs.sub(&rhs).entries().to_vec());
                }
            }
        }
    }
    report
}

/// The adjoint representation of a triple system on itself:
/// `l(a,b)c = {a,b,c}`, `m(a,b)c = {a,c,b}`, `r(a,b)c = {c,a,b}`.
pub fn adjoint_representation<S: Scalar>(lts: &Lts<S>) -> Representation<S> {
    let n = lts.dim();
    let mut rep = Representation::zero(n, n);
    for a in 0..n {
        for b in 0..n {
            let l = Matrix::from_fn(n, n, |row, c| lts.entry(a, b, c, row).clone());
            let m = Matrix::from_fn(n, n, |row, c| lts.entry(a, c, b, row).clone());
            let r = Matrix::from_fn(n, n, |row, c| lts.entry(c, a, b, row).clone());
            rep.set_basis(Slot::L, a, b, l);
            rep.set_basis(Slot::M, a, b, m);
            rep.set_basis(Slot::R, a, b, r);
        }
    }
    rep
}

/// Semidirect product triple system on `L (+) V` with basis ordered as the
/// algebra basis followed by the module basis. Products with two or more
/// module arguments vanish. The construction is purely formal; the result
/// satisfies the triple-system identities exactly when the representation is
/// valid, which is what the perturbation tests exercise.
pub fn semidirect_product<S: Scalar>(lts: &Lts<S>, rep: &Representation<S>) -> Lts<S> {
    assert_eq!(lts.dim(), rep.algebra_dim(), "semidirect shape mismatch");
    let n = lts.dim();
    let m = rep.module_dim();
    let total = n + m;
    let mut out = Lts::zero(total).expect("semidirect dimension within guard");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.set_entry(i, j, k, l, lts.entry(i, j, k, l).clone());
                }
            }
            // {e_i, e_j, f_w} = l(e_i, e_j) f_w
            let mat = rep.basis(Slot::L, i, j);
            for w in 0..m {
                for p in 0..m {
                    out.set_entry(i, j, n + w, n + p, mat.at(p, w).clone());
                }
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            // {e_i, f_v, e_k} = m(e_i, e_k) f_v
            let mat = rep.basis(Slot::M, i, k);
            for v in 0..m {
                for p in 0..m {
                    out.set_entry(i, n + v, k, n + p, mat.at(p, v).clone());
                }
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            // {f_u, e_j, e_k} = r(e_j, e_k) f_u
            let mat = rep.basis(Slot::R, j, k);
            for u in 0..m {
                for p in 0..m {
                    out.set_entry(n + u, j, k, n + p, mat.at(p, u).clone());
                }
            }
        }
    }
    out
}

/// Representation `(rho^l, rho^r)` of a right Leibniz algebra on a module.
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizRepresentation<S> {
    algebra_dim: usize,
    module_dim: usize,
    rho_l: Vec<Matrix<S>>,
    rho_r: Vec<Matrix<S>>,
}

impl<S: Scalar> LeibnizRepresentation<S> {
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let table = vec![Matrix::zeros(module_dim, module_dim); algebra_dim];
        LeibnizRepresentation {
            algebra_dim,
            module_dim,
            rho_l: table.clone(),
            rho_r: table,
        }
    }

    pub fn from_tables(
        algebra_dim: usize,
        module_dim: usize,
        rho_l: Vec<Matrix<S>>,
        rho_r: Vec<Matrix<S>>,
    ) -> Result<Self> {
        for table in [&rho_l, &rho_r] {
            if table.len() != algebra_dim {
                return Err(Error::DimensionMismatch {
                    context: "Leibniz representation table",
                    expected: algebra_dim,
                    found: table.len(),
                });
            }
            for mat in table {
                if mat.rows() != module_dim || mat.cols() != module_dim {
                    return Err(Error::DimensionMismatch {
                        context: "Leibniz representation matrix",
                        expected: module_dim,
                        found: mat.rows(),
                    });
                }
            }
        }
        Ok(LeibnizRepresentation {
            algebra_dim,
            module_dim,
            rho_l,
            rho_r,
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho_l_basis(&self, i: usize) -> &Matrix<S> {
        &self.rho_l[i]
    }

    pub fn rho_r_basis(&self, i: usize) -> &Matrix<S> {
        &self.rho_r[i]
    }

    pub fn set_rho_l(&mut self, i: usize, mat: Matrix<S>) {
        self.rho_l[i] = mat;
    }

    pub fn set_rho_r(&mut self, i: usize, mat: Matrix<S>) {
        self.rho_r[i] = mat;
    }

    /// `rho^l(x)` for an arbitrary algebra vector.
    pub fn rho_l(&self, x: &Vector<S>) -> Matrix<S> {
        self.linear_combo(&self.rho_l, x.entries())
    }

    /// `rho^r(x)` for an arbitrary algebra vector.
    pub fn rho_r(&self, x: &Vector<S>) -> Matrix<S> {
        self.linear_combo(&self.rho_r, x.entries())
    }

    fn linear_combo(&self, table: &[Matrix<S>], x: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mat = &table[i];
            for r in 0..self.module_dim {
                for c in 0..self.module_dim {
                    if !mat.at(r, c).is_zero() {
                        out.add_at(r, c, xi.clone() * mat.at(r, c).clone());
                    }
                }
            }
        }
        out
    }
}

/// Check the three defining identities of a Leibniz-algebra representation
/// on every basis pair, labeled `lrep-1..3`:
///
/// ```text
/// rho^l([x,y]) = [rho^r(y), rho^l(x)]
/// rho^l([x,y]) = rho^l(x) rho^l(y) + rho^r(y) rho^l(x)
/// rho^r([x,y]) = rho^r(y) rho^r(x) - rho^r(x) rho^r(y)
/// ```
pub fn verify_leibniz_representation<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &LeibnizRepresentation<S>,
) -> Report<S> {
    assert_eq!(alg.dim(), rep.algebra_dim(), "representation algebra dim");
    let n = alg.dim();
    let mut report = Report::new();
    for x in 0..n {
        for y in 0..n {
            let bracket = alg.bracket_basis(x, y);
            let rho_l_xy = rep.linear_combo(&rep.rho_l, bracket);
            let rho_r_xy = rep.linear_combo(&rep.rho_r, bracket);
            let lx = rep.rho_l_basis(x);
            let ly = rep.rho_l_basis(y);
            let rx = rep.rho_r_basis(x);
            let ry = rep.rho_r_basis(y);

            let commutator = ry.mul(lx).sub(&lx.mul(ry));
            report.check("lrep-1", &[x, y], rho_l_xy.sub(&commutator).entries().to_vec());

            let second = lx.mul(ly).add(&ry.mul(lx));
            report.check("lrep-2", &[x, y], rho_l_xy.sub(&second).entries().to_vec());

            let third = ry.mul(rx).sub(&rx.mul(ry));
            report.check("lrep-3", &[x, y], rho_r_xy.sub(&third).entries().to_vec());
        }
    }
    report
}

/// Adjoint representation of a Leibniz algebra on itself:
/// `rho^l(x)y = [x,y]` and `rho^r(x)y = [y,x]`.
pub fn leibniz_adjoint<S: Scalar>(alg: &LeibnizAlgebra<S>) -> LeibnizRepresentation<S> {
    let n = alg.dim();
    let mut rep = LeibnizRepresentation::zero(n, n);
    for i in 0..n {
        rep.set_rho_l(i, Matrix::from_fn(n, n, |row, j| alg.entry(i, j, row).clone()));
        rep.set_rho_r(i, Matrix::from_fn(n, n, |row, j| alg.entry(j, i, row).clone()));
    }
    rep
}

/// Semidirect product Leibniz algebra on `L (+) V`:
/// `[x+u, y+v] = [x,y] + rho^l(x)v + rho^r(y)u`.
pub fn leibniz_semidirect<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &LeibnizRepresentation<S>,
) -> LeibnizAlgebra<S> {
    assert_eq!(alg.dim(), rep.algebra_dim(), "semidirect shape mismatch");
    let n = alg.dim();
    let m = rep.module_dim();
    let mut out = LeibnizAlgebra::zero(n + m).expect("semidirect dimension within guard");
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                out.set_entry(i, j, l, alg.entry(i, j, l).clone());
            }
        }
        // [e_i, f_q] = rho^l(e_i) f_q
        let mat = rep.rho_l_basis(i);
        for q in 0..m {
            for p in 0..m {
                out.set_entry(i, n + q, n + p, mat.at(p, q).clone());
            }
        }
        // [f_p, e_i] = rho^r(e_i) f_p
        let mat = rep.rho_r_basis(i);
        for p in 0..m {
            for q in 0..m {
                out.set_entry(n + p, i, n + q, mat.at(q, p).clone());
            }
        }
    }
    out
}

/// The representation `(R, M, L)` of the associated triple system
/// `{x,y,z} = [[x,y],z]` induced by a Leibniz representation:
///
/// ```text
/// R(x,y)u = rho^r(y) rho^r(x) u
/// M(x,y)u = rho^r(y) rho^l(x) u
/// L(x,y)u = rho^l([x,y]) u
/// ```
///
/// Both inputs must verify; the result is a representation of
/// [`lts_from_leibniz`] applied to `alg`.
pub fn induced_lts_representation<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &LeibnizRepresentation<S>,
) -> Result<Representation<S>> {
    if !alg.verify().ok() {
        return Err(Error::NotLeibniz);
    }
    if !verify_leibniz_representation(alg, rep).ok() {
        return Err(Error::InvalidRepresentation {
            detail: "Leibniz representation identities",
        });
    }
    let n = alg.dim();
    let mut out = Representation::zero(n, rep.module_dim());
    for x in 0..n {
        for y in 0..n {
            let r = rep.rho_r_basis(y).mul(rep.rho_r_basis(x));
            let m = rep.rho_r_basis(y).mul(rep.rho_l_basis(x));
            let l = rep.linear_combo(&rep.rho_l, alg.bracket_basis(x, y));
            out.set_basis(Slot::R, x, y, r);
            out.set_basis(Slot::M, x, y, m);
            out.set_basis(Slot::L, x, y, l);
        }
    }
    Ok(out)
}

/// Convenience: the associated triple system together with its induced
/// representation.
pub fn functor_image<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &LeibnizRepresentation<S>,
) -> Result<(Lts<S>, Representation<S>)> {
    let lts = lts_from_leibniz(alg)?;
    let induced = induced_lts_representation(alg, rep)?;
    Ok((lts, induced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b2, leibniz_e1e2, leibniz_e2e2, rat};
    use num_traits::Zero;
    use crate::Q;

    #[test]
    fn adjoint_of_b2_action_table() {
        let l = b2::<Q>();
        let rep = adjoint_representation(&l);
        // l(e1,e2) sends e2 to e1 because {e1,e2,e2} = e1.
        assert_eq!(rep.basis(Slot::L, 0, 1).col(1), Vector::basis(2, 0));
        // r(e2,e2) sends e1 to e1 and e2 to e1.
        assert_eq!(rep.basis(Slot::R, 1, 1).col(0), Vector::basis(2, 0));
        assert_eq!(rep.basis(Slot::R, 1, 1).col(1), Vector::basis(2, 0));
    }

    #[test]
    fn adjoint_of_zero_lts_is_zero() {
        let l = Lts::<Q>::zero(3).unwrap();
        let rep = adjoint_representation(&l);
        for a in 0..3 {
            for b in 0..3 {
                for slot in [Slot::R, Slot::M, Slot::L] {
                    assert!(rep.basis(slot, a, b).is_zero());
                }
            }
        }
    }

    #[test]
    fn adjoint_of_b2_verifies() {
        let l = b2::<Q>();
        assert!(verify_representation(&l, &adjoint_representation(&l)).ok());
    }

    #[test]
    fn zero_representation_verifies_on_any_lts() {
        let l = b2::<Q>();
        assert!(verify_representation(&l, &Representation::zero(2, 3)).ok());
    }

    #[test]
    fn perturbed_adjoint_fails_with_named_identity() {
        let l = b2::<Q>();
        let mut rep = adjoint_representation(&l);
        let mut mat = rep.basis(Slot::L, 0, 0).clone();
        mat.add_at(0, 0, rat(1, 1));
        rep.set_basis(Slot::L, 0, 0, mat);
        let report = verify_representation(&l, &rep);
        assert!(!report.ok());
        // Regression fixture: this particular perturbation breaks exactly
        // the identities naming l(e1,e1) compositions.
        let mut names: Vec<&str> = report.violations.iter().map(|v| v.identity).collect();
        names.sort_unstable();
        names.dedup();
        assert!(!names.is_empty());
        for v in &report.violations {
            assert_eq!(v.args.len(), 4);
            assert!(v.residual.iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn semidirect_of_b2_with_adjoint_is_a_triple_system() {
        let l = b2::<Q>();
        let s = semidirect_product(&l, &adjoint_representation(&l));
        assert_eq!(s.dim(), 4);
        assert!(s.verify().ok());
    }

    #[test]
    fn semidirect_with_zero_rep_is_a_direct_sum() {
        let l = b2::<Q>();
        let s = semidirect_product(&l, &Representation::zero(2, 2));
        assert!(s.verify().ok());
        // Products are supported on the algebra block only.
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for t in 0..4 {
                        if i >= 2 || j >= 2 || k >= 2 || t >= 2 {
                            assert!(s.entry(i, j, k, t).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn representation_validity_tracks_semidirect_validity() {
        let l = b2::<Q>();
        let rep = adjoint_representation(&l);
        let mut disagreements = 0usize;
        let mut checked = 0usize;
        // Single-entry perturbations across all three tables.
        for slot in [Slot::R, Slot::M, Slot::L] {
            for pair in 0..4 {
                for entry in 0..4 {
                    let mut perturbed = rep.clone();
                    let mut mat = perturbed.basis(slot, pair / 2, pair % 2).clone();
                    mat.add_at(entry / 2, entry % 2, rat(1, 1));
                    perturbed.set_basis(slot, pair / 2, pair % 2, mat);
                    let direct = verify_representation(&l, &perturbed).ok();
                    let via_semidirect = semidirect_product(&l, &perturbed).verify().ok();
                    checked += 1;
                    if direct != via_semidirect {
                        disagreements += 1;
                    }
                }
            }
        }
        assert!(checked >= 20);
        assert_eq!(disagreements, 0);
    }

    #[test]
    fn leibniz_adjoint_verifies_on_fixtures() {
        for alg in [leibniz_e1e2::<Q>(), leibniz_e2e2::<Q>()] {
            let rep = leibniz_adjoint(&alg);
            assert!(verify_leibniz_representation(&alg, &rep).ok());
        }
    }

    #[test]
    fn zero_leibniz_representation_verifies() {
        let alg = leibniz_e1e2::<Q>();
        assert!(verify_leibniz_representation(&alg, &LeibnizRepresentation::zero(2, 2)).ok());
    }

    #[test]
    fn perturbed_leibniz_representation_fails_with_witness() {
        let alg = leibniz_e1e2::<Q>();
        let mut rep = leibniz_adjoint(&alg);
        let mut mat = rep.rho_l_basis(0).clone();
        mat.add_at(1, 1, rat(1, 1));
        rep.set_rho_l(0, mat);
        let report = verify_leibniz_representation(&alg, &rep);
        assert!(!report.ok());
        assert_eq!(report.violations[0].args.len(), 2);
    }

    #[test]
    fn induced_representation_of_zero_rep_is_zero() {
        let alg = leibniz_e1e2::<Q>();
        let induced =
            induced_lts_representation(&alg, &LeibnizRepresentation::zero(2, 2)).unwrap();
        for slot in [Slot::R, Slot::M, Slot::L] {
            for a in 0..2 {
                for b in 0..2 {
                    assert!(induced.basis(slot, a, b).is_zero());
                }
            }
        }
    }

    #[test]
    fn induced_l_tensor_reads_off_the_bracket() {
        // [e1,e2] = e1, so L(e1,e2) = rho^l(e1).
        let alg = leibniz_e1e2::<Q>();
        let rep = leibniz_adjoint(&alg);
        let induced = induced_lts_representation(&alg, &rep).unwrap();
        assert_eq!(induced.basis(Slot::L, 0, 1), rep.rho_l_basis(0));
    }

    #[test]
    fn induced_representation_verifies_on_the_functor_image() {
        for alg in [leibniz_e1e2::<Q>(), leibniz_e2e2::<Q>()] {
            let rep = leibniz_adjoint(&alg);
            let (lts, induced) = functor_image(&alg, &rep).unwrap();
            assert!(verify_representation(&lts, &induced).ok());
        }
    }

    #[test]
    fn leibniz_semidirect_verifies_and_matches_functor_route() {
        let alg = leibniz_e1e2::<Q>();
        let rep = leibniz_adjoint(&alg);
        let semi = leibniz_semidirect(&alg, &rep);
        assert!(semi.verify().ok());

        // Functor of the semidirect equals semidirect of the functor image.
        let route_a = lts_from_leibniz(&semi).unwrap();
        let (lts, induced) = functor_image(&alg, &rep).unwrap();
        let route_b = semidirect_product(&lts, &induced);
        assert_eq!(route_a.tensor(), route_b.tensor());
    }

    #[test]
    fn leibniz_semidirect_with_zero_rep_is_direct_sum() {
        let alg = leibniz_e1e2::<Q>();
        let semi = leibniz_semidirect(&alg, &LeibnizRepresentation::zero(2, 2));
        assert!(semi.verify().ok());
        for i in 0..4 {
            for j in 0..4 {
                for l in 0..4 {
                    if i >= 2 || j >= 2 || l >= 2 {
                        assert!(semi.entry(i, j, l).is_zero());
                    }
                }
            }
        }
    }
}
