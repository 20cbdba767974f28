//! Core algebra carriers: Leibniz triple systems and right Leibniz algebras
//! as structure-constant tensors.
//!
//! Basis indexing is 1-based in documentation and file formats and 0-based in
//! every API here. A triple system of dimension `n` stores the 4-index tensor
//! `c` with `{e_i, e_j, e_k} = sum_l c[i][j][k][l] e_l`, flattened in
//! lexicographic order `(i, j, k, l)`. A right Leibniz algebra stores the
//! 3-index tensor `b` with `[e_i, e_j] = sum_l b[i][j][l] e_l`.
//!
//! Verifiers enumerate *all* basis tuples and report every violation;
//! multilinearity extends the verdict to arbitrary arguments.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

/// Hard cap on algebra dimension; the triple-system verifier enumerates
/// `n^5` tuples with `O(n^2)` work each.
pub const MAX_DIM: usize = 32;

/// A linear map is a matrix of shape `target_dim x source_dim`; columns are
/// images of source basis vectors.
pub type LinearMap<S> = Matrix<S>;

/// Sparse triple product `(i, j, k, [(l, coefficient)..])`: the expansion of
/// `{e_i, e_j, e_k}`.
pub type TripleProductEntry<S> = (usize, usize, usize, Vec<(usize, S)>);

/// Sparse bracket `(i, j, [(l, coefficient)..])`: the expansion of
/// `[e_i, e_j]`.
pub type BracketEntry<S> = (usize, usize, Vec<(usize, S)>);

fn guard_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
    }
    Ok(())
}

/// Finite-dimensional Leibniz triple system.
#[derive(Debug, Clone, PartialEq)]
pub struct Lts<S> {
    dim: usize,
    /// Flattened `n^4` tensor, index `((i*n + j)*n + k)*n + l`.
    c: Vec<S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> Lts<S> {
    pub fn zero(dim: usize) -> Result<Self> {
        guard_dim(dim)?;
        Ok(Lts {
            dim,
            c: vec![S::zero(); dim * dim * dim * dim],
            labels: None,
        })
    }

    pub fn from_tensor(dim: usize, c: Vec<S>) -> Result<Self> {
        guard_dim(dim)?;
        if c.len() != dim * dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "triple-system tensor",
                expected: dim * dim * dim * dim,
                found: c.len(),
            });
        }
        Ok(Lts {
            dim,
            c,
            labels: None,
        })
    }

    /// Build from a sparse product list: each entry gives `(i, j, k)` (0-based)
    /// and the expansion of `{e_i, e_j, e_k}` as `(l, coefficient)` pairs.
    /// Unlisted products are zero.
    pub fn from_products(dim: usize, products: &[TripleProductEntry<S>]) -> Result<Self> {
        let mut lts = Self::zero(dim)?;
        for (i, j, k, value) in products {
            for (l, coeff) in value {
                for idx in [*i, *j, *k, *l] {
                    if idx >= dim {
                        return Err(Error::DimensionMismatch {
                            context: "product index",
                            expected: dim,
                            found: idx,
                        });
                    }
                }
                lts.set_entry(*i, *j, *k, *l, coeff.clone());
            }
        }
        Ok(lts)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis vector");
        self.labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        &self.c[self.idx(i, j, k, l)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, l: usize, value: S) {
        let idx = self.idx(i, j, k, l);
        self.c[idx] = value;
    }

    pub fn tensor(&self) -> &[S] {
        &self.c
    }

    /// Nonzero basis products, for sparse serialization.
    pub fn sparse_products(&self) -> Vec<TripleProductEntry<S>> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let value: Vec<(usize, S)> = (0..n)
                        .filter(|&l| !self.entry(i, j, k, l).is_zero())
                        .map(|l| (l, self.entry(i, j, k, l).clone()))
                        .collect();
                    if !value.is_empty() {
                        out.push((i, j, k, value));
                    }
                }
            }
        }
        out
    }

    /// `{e_i, e_j, e_k}` as a coefficient slice (length `dim`).
    #[inline]
    pub fn product_basis(&self, i: usize, j: usize, k: usize) -> &[S] {
        let start = self.idx(i, j, k, 0);
        &self.c[start..start + self.dim]
    }

    /// `{x, e_j, e_k}` for a vector in slot 1.
    fn product_vbb(&self, x: &[S], j: usize, k: usize) -> Vector<S> {
        let mut out: Vector<S> = Vector::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let row = self.product_basis(i, j, k);
            for l in 0..self.dim {
                if !row[l].is_zero() {
                    let v = out.at(l).clone() + xi.clone() * row[l].clone();
                    out.set(l, v);
                }
            }
        }
        out
    }

    /// Trilinear product `{x, y, z}` of arbitrary vectors.
    pub fn product(&self, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Result<Vector<S>> {
        for v in [x, y, z] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    context: "triple product argument",
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let n = self.dim;
        let mut out: Vector<S> = Vector::zeros(n);
        for i in 0..n {
            if x.at(i).is_zero() {
                continue;
            }
            for j in 0..n {
                if y.at(j).is_zero() {
                    continue;
                }
                let xy = x.at(i).clone() * y.at(j).clone();
                for k in 0..n {
                    if z.at(k).is_zero() {
                        continue;
                    }
                    let coeff = xy.clone() * z.at(k).clone();
                    let row = self.product_basis(i, j, k);
                    for l in 0..n {
                        if !row[l].is_zero() {
                            let v = out.at(l).clone() + coeff.clone() * row[l].clone();
                            out.set(l, v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Check the two defining five-argument identities on every basis
    /// 5-tuple. Identity `lts-1` rewrites `{a,b,{c,d,e}}`, identity `lts-2`
    /// rewrites `{a,{b,c,d},e}`; violations carry the tuple and the exact
    /// residual.
    pub fn verify(&self) -> Report<S> {
        let n = self.dim;
        let mut report = Report::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for e in 0..n {
                            // lts-1: {a,b,{c,d,e}} = {{a,b,c},d,e} - {{a,b,d},c,e}
                            //        - {{a,b,e},c,d} + {{a,b,e},d,c}
                            let inner = self.product_basis(c, d, e);
                            let lhs = self.product_bbv(a, b, inner);
                            let mut rhs = self.product_vbb(self.product_basis(a, b, c), d, e);
                            rhs = rhs.sub(&self.product_vbb(self.product_basis(a, b, d), c, e));
                            rhs = rhs.sub(&self.product_vbb(self.product_basis(a, b, e), c, d));
                            rhs = rhs.add(&self.product_vbb(self.product_basis(a, b, e), d, c));
                            report.check(
                                "lts-1",
                                &[a, b, c, d, e],
                                lhs.sub(&rhs).into_entries(),
                            );

                            // lts-2: {a,{b,c,d},e} = {{a,b,c},d,e} - {{a,c,b},d,e}
                            //        - {{a,d,b},c,e} + {{a,d,c},b,e}
                            let inner = self.product_basis(b, c, d);
                            let lhs = self.product_bvb(a, inner, e);
                            let mut rhs = self.product_vbb(self.product_basis(a, b, c), d, e);
                            rhs = rhs.sub(&self.product_vbb(self.product_basis(a, c, b), d, e));
                            rhs = rhs.sub(&self.product_vbb(self.product_basis(a, d, b), c, e));
                            rhs = rhs.add(&self.product_vbb(self.product_basis(a, d, c), b, e));
                            report.check(
                                "lts-2",
                                &[a, b, c, d, e],
                                lhs.sub(&rhs).into_entries(),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    /// `{e_i, e_j, z}` for a vector in slot 3.
    fn product_bbv(&self, i: usize, j: usize, z: &[S]) -> Vector<S> {
        let mut out: Vector<S> = Vector::zeros(self.dim);
        for (k, zk) in z.iter().enumerate() {
            if zk.is_zero() {
                continue;
            }
            let row = self.product_basis(i, j, k);
            for l in 0..self.dim {
                if !row[l].is_zero() {
                    let v = out.at(l).clone() + zk.clone() * row[l].clone();
                    out.set(l, v);
                }
            }
        }
        out
    }

    /// `{e_i, y, e_k}` for a vector in slot 2.
    fn product_bvb(&self, i: usize, y: &[S], k: usize) -> Vector<S> {
        let mut out: Vector<S> = Vector::zeros(self.dim);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let row = self.product_basis(i, j, k);
            for l in 0..self.dim {
                if !row[l].is_zero() {
                    let v = out.at(l).clone() + yj.clone() * row[l].clone();
                    out.set(l, v);
                }
            }
        }
        out
    }

    /// Pull the structure along a basis permutation: the new basis vector
    /// `f_p` is `e_{perm[p]}`. Cohomology dimensions must be invariant under
    /// this.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        let n = self.dim;
        let mut out = Self::zero(n).expect("dim already guarded");
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        out.set_entry(p, q, r, s, self.entry(perm[p], perm[q], perm[r], perm[s]).clone());
                    }
                }
            }
        }
        out
    }
}

/// Finite-dimensional right Leibniz algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizAlgebra<S> {
    dim: usize,
    /// Flattened `n^3` tensor, index `(i*n + j)*n + l`.
    b: Vec<S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> LeibnizAlgebra<S> {
    pub fn zero(dim: usize) -> Result<Self> {
        guard_dim(dim)?;
        Ok(LeibnizAlgebra {
            dim,
            b: vec![S::zero(); dim * dim * dim],
            labels: None,
        })
    }

    pub fn from_products(dim: usize, products: &[BracketEntry<S>]) -> Result<Self> {
        let mut alg = Self::zero(dim)?;
        for (i, j, value) in products {
            for (l, coeff) in value {
                for idx in [*i, *j, *l] {
                    if idx >= dim {
                        return Err(Error::DimensionMismatch {
                            context: "bracket index",
                            expected: dim,
                            found: idx,
                        });
                    }
                }
                alg.set_entry(*i, *j, *l, coeff.clone());
            }
        }
        Ok(alg)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis vector");
        self.labels = Some(labels);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.dim + j) * self.dim + l
    }

    pub fn entry(&self, i: usize, j: usize, l: usize) -> &S {
        &self.b[self.idx(i, j, l)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, l: usize, value: S) {
        let idx = self.idx(i, j, l);
        self.b[idx] = value;
    }

    pub fn sparse_products(&self) -> Vec<BracketEntry<S>> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let value: Vec<(usize, S)> = (0..n)
                    .filter(|&l| !self.entry(i, j, l).is_zero())
                    .map(|l| (l, self.entry(i, j, l).clone()))
                    .collect();
                if !value.is_empty() {
                    out.push((i, j, value));
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` as a coefficient slice.
    #[inline]
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        let start = self.idx(i, j, 0);
        &self.b[start..start + self.dim]
    }

    /// Bilinear bracket `[x, y]` of arbitrary vectors.
    pub fn bracket(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    context: "bracket argument",
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let n = self.dim;
        let mut out: Vector<S> = Vector::zeros(n);
        for i in 0..n {
            if x.at(i).is_zero() {
                continue;
            }
            for j in 0..n {
                if y.at(j).is_zero() {
                    continue;
                }
                let coeff = x.at(i).clone() * y.at(j).clone();
                let row = self.bracket_basis(i, j);
                for l in 0..n {
                    if !row[l].is_zero() {
                        let v = out.at(l).clone() + coeff.clone() * row[l].clone();
                        out.set(l, v);
                    }
                }
            }
        }
        Ok(out)
    }

    fn bracket_vb(&self, x: &[S], j: usize) -> Vector<S> {
        let mut out: Vector<S> = Vector::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let row = self.bracket_basis(i, j);
            for l in 0..self.dim {
                if !row[l].is_zero() {
                    let v = out.at(l).clone() + xi.clone() * row[l].clone();
                    out.set(l, v);
                }
            }
        }
        out
    }

    fn bracket_bv(&self, i: usize, y: &[S]) -> Vector<S> {
        let mut out: Vector<S> = Vector::zeros(self.dim);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let row = self.bracket_basis(i, j);
            for l in 0..self.dim {
                if !row[l].is_zero() {
                    let v = out.at(l).clone() + yj.clone() * row[l].clone();
                    out.set(l, v);
                }
            }
        }
        out
    }

    /// Check the right Leibniz identity
    /// `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on all basis triples.
    pub fn verify(&self) -> Report<S> {
        let n = self.dim;
        let mut report = Report::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.bracket_bv(x, self.bracket_basis(y, z));
                    let rhs = self
                        .bracket_vb(self.bracket_basis(x, y), z)
                        .sub(&self.bracket_vb(self.bracket_basis(x, z), y));
                    report.check("leibniz", &[x, y, z], lhs.sub(&rhs).into_entries());
                }
            }
        }
        report
    }
}

/// The triple system `{x, y, z} := [[x, y], z]` attached to a right Leibniz
/// algebra. Fails when the input does not satisfy the Leibniz identity.
pub fn lts_from_leibniz<S: Scalar>(alg: &LeibnizAlgebra<S>) -> Result<Lts<S>> {
    if !alg.verify().ok() {
        return Err(Error::NotLeibniz);
    }
    let n = alg.dim();
    let mut lts = Lts::zero(n)?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // {e_i,e_j,e_k} = [[e_i,e_j],e_k] = sum_m b[i][j][m] [e_m,e_k]
                let v = alg.bracket_vb(alg.bracket_basis(i, j), k);
                for l in 0..n {
                    lts.set_entry(i, j, k, l, v.at(l).clone());
                }
            }
        }
    }
    if let Some(labels) = &alg.labels {
        lts = lts.with_labels(labels.clone());
    }
    Ok(lts)
}

/// Whether `f` is a morphism of triple systems: `f({x,y,z}) = {fx, fy, fz}'`
/// on all basis triples of the source.
pub fn is_lts_morphism<S: Scalar>(f: &LinearMap<S>, source: &Lts<S>, target: &Lts<S>) -> Result<bool> {
    if f.cols() != source.dim() {
        return Err(Error::DimensionMismatch {
            context: "morphism source",
            expected: source.dim(),
            found: f.cols(),
        });
    }
    if f.rows() != target.dim() {
        return Err(Error::DimensionMismatch {
            context: "morphism target",
            expected: target.dim(),
            found: f.rows(),
        });
    }
    let n = source.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = f.mul_vec(&Vector::from_entries(source.product_basis(i, j, k).to_vec()));
                let rhs = target.product(&f.col(i), &f.col(j), &f.col(k))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
