//! Linear and truncated formal deformations of a relative Rota-Baxter
//! operator, equivalence verification, and the obstruction to extending an
//! order-`n` deformation one order further.
//!
//! A deformation is kept as its finite coefficient list
//! `[T, T_1, ..., T_n]`; the defining identity is checked coefficient-wise
//! in the formal parameter, one equation per order `s`:
//!
//! ```text
//! sum_{i+j+k=s} {T_i u, T_j v, T_k w}
//!   = sum_{i+j+k=s} T_i( l(T_j u, T_k v)w + m(T_k u, T_j w)v + r(T_j v, T_k w)u )
//! ```

use crate::cohomology::{flatten_map, t_complex, unflatten_map, ComplexMatrices};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::lts::LinearMap;
use crate::op::{delta_cocycle, relative_rb_ok, RbContext, RelRb};
use crate::rep::Slot;
use crate::report::Report;
use crate::scalar::Scalar;

/// Truncated deformation `T_t = T + T_1 t + ... + T_n t^n` of a relative
/// Rota-Baxter operator.
#[derive(Debug, Clone)]
pub struct DeformationSeries<S> {
    op: RelRb<S>,
    higher: Vec<Matrix<S>>,
}

impl<S: Scalar> DeformationSeries<S> {
    /// Series with coefficients `[T, higher...]`; all coefficient matrices
    /// must share the operator's shape.
    pub fn new(op: RelRb<S>, higher: Vec<Matrix<S>>) -> Result<Self> {
        let n = op.context().algebra_dim();
        let m = op.context().module_dim();
        for mat in &higher {
            if mat.rows() != n || mat.cols() != m {
                return Err(Error::DimensionMismatch {
                    context: "deformation coefficient",
                    expected: n,
                    found: mat.rows(),
                });
            }
        }
        Ok(DeformationSeries { op, higher })
    }

    pub fn operator(&self) -> &RelRb<S> {
        &self.op
    }

    /// Truncation order `n` (the series has `n + 1` coefficients).
    pub fn order(&self) -> usize {
        self.higher.len()
    }

    pub fn coefficient(&self, i: usize) -> &Matrix<S> {
        if i == 0 {
            self.op.matrix()
        } else {
            &self.higher[i - 1]
        }
    }

    pub fn coefficients(&self) -> Vec<&Matrix<S>> {
        let mut out = vec![self.op.matrix()];
        out.extend(self.higher.iter());
        out
    }

    pub fn truncated(&self, order: usize) -> Self {
        DeformationSeries {
            op: self.op.clone(),
            higher: self.higher[..order.min(self.higher.len())].to_vec(),
        }
    }

    pub fn extended(&self, next: Matrix<S>) -> Result<Self> {
        let mut higher = self.higher.clone();
        higher.push(next);
        Self::new(self.op.clone(), higher)
    }
}

/// The order-`s` residual of the deformation identity at a module basis
/// triple; zero for all triples and all `s <= n` means the series is an
/// order-`n` deformation.
fn order_residual<S: Scalar>(
    ctx: &RbContext<S>,
    coeffs: &[&Matrix<S>],
    s: usize,
    u: usize,
    v: usize,
    w: usize,
) -> Vector<S> {
    let n = ctx.algebra_dim();
    let rep = ctx.rep();
    let lts = ctx.lts();
    let mut residual = Vector::zeros(n);
    let bound = coeffs.len();
    for i in 0..bound.min(s + 1) {
        for j in 0..bound.min(s + 1 - i) {
            let k = s - i - j;
            if k >= bound {
                continue;
            }
            let tu = coeffs[i].col(u);
            let tv = coeffs[j].col(v);
            let tw = coeffs[k].col(w);
            residual = residual.add(&lts.product(&tu, &tv, &tw).expect("shape"));
            // T_i( l(T_j u, T_k v)w + m(T_k u, T_j w)v + r(T_j v, T_k w)u )
            let inner = rep
                .eval(Slot::L, &coeffs[j].col(u), &coeffs[k].col(v))
                .col(w)
                .add(&rep.eval(Slot::M, &coeffs[k].col(u), &coeffs[j].col(w)).col(v))
                .add(&rep.eval(Slot::R, &coeffs[j].col(v), &coeffs[k].col(w)).col(u));
            residual = residual.sub(&coeffs[i].mul_vec(&inner));
        }
    }
    residual
}

/// Per-order verification outcome of a series.
#[derive(Debug, Clone)]
pub struct OrderReport<S> {
    /// One report per order `s = 0..=n`, in order.
    pub orders: Vec<Report<S>>,
}

impl<S: Scalar> OrderReport<S> {
    pub fn ok(&self) -> bool {
        self.orders.iter().all(Report::ok)
    }

    /// Lowest order whose identity fails.
    pub fn first_failure(&self) -> Option<usize> {
        self.orders.iter().position(|r| !r.ok())
    }
}

/// Check the deformation identity at every order `s <= n` on all basis
/// triples.
pub fn verify_order_n<S: Scalar>(series: &DeformationSeries<S>) -> OrderReport<S> {
    let ctx = series.op.context();
    let m = ctx.module_dim();
    let coeffs = series.coefficients();
    let mut orders = Vec::with_capacity(series.order() + 1);
    for s in 0..=series.order() {
        let mut report = Report::new();
        for u in 0..m {
            for v in 0..m {
                for w in 0..m {
                    let residual = order_residual(ctx, &coeffs, s, u, v, w);
                    report.check("deformation-order", &[s, u, v, w], residual.into_entries());
                }
            }
        }
        orders.push(report);
    }
    OrderReport { orders }
}

/// Flags of the three coefficient identities of a linear deformation
/// `T + t T_1`: the degree-1 identity (`T_1` is a 1-cocycle), the mixed
/// degree-2 identity, and `T_1` satisfying the operator identity alone.
/// All three together are equivalent to `T + t T_1` being a relative
/// Rota-Baxter operator for every `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearDeformationReport {
    pub cocycle: bool,
    pub mixed: bool,
    pub t1_is_rb: bool,
}

impl LinearDeformationReport {
    pub fn all_ok(&self) -> bool {
        self.cocycle && self.mixed && self.t1_is_rb
    }
}

/// Check whether `t1` generates a linear deformation of the verified
/// operator.
pub fn check_linear_deformation<S: Scalar>(
    op: &RelRb<S>,
    t1: &LinearMap<S>,
) -> Result<LinearDeformationReport> {
    op.require_verified()?;
    let ctx = op.context();
    let m = ctx.module_dim();
    let coeffs = vec![op.matrix(), t1];
    let mut order_ok = [true, true];
    for (slot, s) in [(0usize, 1usize), (1, 2)] {
        'outer: for u in 0..m {
            for v in 0..m {
                for w in 0..m {
                    if !order_residual(ctx, &coeffs, s, u, v, w).is_zero() {
                        order_ok[slot] = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(LinearDeformationReport {
        cocycle: order_ok[0],
        mixed: order_ok[1],
        t1_is_rb: relative_rb_ok(ctx, t1),
    })
}

/// A 3-cochain of the operator complex measuring the failure of an order-`n`
/// deformation to extend: the order-`n+1` residual of the truncated series.
/// For a valid series it is always a 3-cocycle, and the series extends
/// exactly when it is a coboundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Obstruction<S> {
    /// Flattened 3-cochain (argument triple lexicographic, then algebra
    /// coordinate).
    pub cochain: Vector<S>,
    pub module_dim: usize,
    pub algebra_dim: usize,
}

impl<S: Scalar> Obstruction<S> {
    pub fn is_zero(&self) -> bool {
        self.cochain.is_zero()
    }

    /// Whether the cochain is a cocycle of the given operator complex.
    pub fn is_cocycle(&self, complex: &ComplexMatrices<S>) -> bool {
        complex.is_cocycle3(&self.cochain)
    }
}

/// The obstruction cochain
///
/// ```text
/// Ob(u,v,w) = sum_{i+j+k=n+1, 0<=i,j,k<=n}
///   {T_i u, T_j v, T_k w}
///   - T_i( l(T_j u, T_k v)w + m(T_k u, T_j w)v + r(T_j v, T_k w)u )
/// ```
///
/// of a series that passes [`verify_order_n`].
pub fn obstruction<S: Scalar>(series: &DeformationSeries<S>) -> Result<Obstruction<S>> {
    let check = verify_order_n(series);
    if let Some(order) = check.first_failure() {
        return Err(Error::InvalidDeformation { order });
    }
    let ctx = series.op.context();
    let n = ctx.algebra_dim();
    let m = ctx.module_dim();
    let coeffs = series.coefficients();
    let mut cochain = Vector::zeros(m.pow(3) * n);
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                // Indices are capped at n by the coefficient list itself.
                let value = order_residual(ctx, &coeffs, series.order() + 1, u, v, w);
                for p in 0..n {
                    cochain.set((((u * m) + v) * m + w) * n + p, value.at(p).clone());
                }
            }
        }
    }
    Ok(Obstruction {
        cochain,
        module_dim: m,
        algebra_dim: n,
    })
}

/// Decide extendability: solve `d^1 x = -Ob` in the operator complex. The
/// returned coefficient (when one exists) extends the series to a valid
/// order-`n+1` deformation; the solver is deterministic, and the full
/// solution set is the particular solution plus the kernel of `d^1`.
pub fn is_extendable<S: Scalar>(series: &DeformationSeries<S>) -> Result<Option<LinearMap<S>>> {
    let ob = obstruction(series)?;
    let complex = t_complex(&series.op)?;
    let solution = complex.d1.solve(&ob.cochain.neg())?;
    Ok(solution.map(|x| {
        unflatten_map(
            &x,
            series.op.context().algebra_dim(),
            series.op.context().module_dim(),
        )
    }))
}

/// Greedily extend `[T, t1]` order by order up to `max_order`. Fails with
/// [`Error::Obstructed`] at the first order whose obstruction class is
/// nontrivial, and with [`Error::InvalidDeformation`] when `t1` is not a
/// 1-cocycle to begin with.
pub fn formal_deformation_from_cocycle<S: Scalar>(
    op: &RelRb<S>,
    t1: &LinearMap<S>,
    max_order: usize,
) -> Result<DeformationSeries<S>> {
    op.require_verified()?;
    let complex = t_complex(op)?;
    if !complex.d1.mul_vec(&flatten_map(t1)).is_zero() {
        return Err(Error::InvalidDeformation { order: 1 });
    }
    let mut series = DeformationSeries::new(op.clone(), vec![t1.clone()])?;
    while series.order() < max_order {
        match is_extendable(&series)? {
            Some(next) => series = series.extended(next)?,
            None => {
                return Err(Error::Obstructed {
                    order: series.order(),
                })
            }
        }
    }
    Ok(series)
}

/// Equivalence data between two linear deformations: the pair of algebra
/// elements generating the degree-1 parts of the comparison maps, plus
/// optional higher coefficients for truncated formal comparisons.
#[derive(Debug, Clone)]
pub struct EquivalenceData<S> {
    pub x: Vector<S>,
    pub y: Vector<S>,
    /// Coefficients of the algebra map beyond degree 1.
    pub phi_higher: Vec<Matrix<S>>,
    /// Coefficients of the module map beyond degree 1.
    pub psi_higher: Vec<Matrix<S>>,
}

impl<S: Scalar> EquivalenceData<S> {
    pub fn linear(x: Vector<S>, y: Vector<S>) -> Self {
        EquivalenceData {
            x,
            y,
            phi_higher: Vec::new(),
            psi_higher: Vec::new(),
        }
    }
}

/// Status of the coefficient-wise equivalence conditions. Unsupplied higher
/// coefficients are taken as zero, which turns every condition into a finite
/// polynomial identity; `checked_order` reports the largest coefficient
/// degree that was actually compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// The algebra map intertwines the triple product.
    pub algebra_map: bool,
    /// The module map intertwines each of the three actions.
    pub intertwines_actions: bool,
    /// Degree-wise operator intertwining `T_t o psi_t = phi_t o T'_t`.
    pub operator_intertwine: bool,
    /// `T_2 - T_1` equals the canonical 1-cocycle of `(x, y)` exactly.
    pub difference_is_delta: bool,
    pub checked_order: usize,
}

impl EquivalenceReport {
    pub fn ok(&self) -> bool {
        self.algebra_map
            && self.intertwines_actions
            && self.operator_intertwine
            && self.difference_is_delta
    }
}

/// Verify that the supplied data is an equivalence from the linear
/// deformation `T + t t2` to `T + t t1`.
pub fn check_linear_equivalence<S: Scalar>(
    op: &RelRb<S>,
    t1: &LinearMap<S>,
    t2: &LinearMap<S>,
    data: &EquivalenceData<S>,
) -> Result<EquivalenceReport> {
    for t in [t1, t2] {
        if !check_linear_deformation(op, t)?.all_ok() {
            return Err(Error::InvalidDeformation { order: 1 });
        }
    }
    let ctx = op.context();
    let lts = ctx.lts();
    let rep = ctx.rep();
    let n = ctx.algebra_dim();
    let m = ctx.module_dim();
    if data.x.len() != n || data.y.len() != n {
        return Err(Error::DimensionMismatch {
            context: "equivalence data",
            expected: n,
            found: data.x.len(),
        });
    }

    // phi_t = id + t(R_{(x,y)} - R_{(y,x)}) + ...,
    // psi_t = id + t(r(x,y) - r(y,x)) + ...
    let d_mat = crate::op::slot1_action(lts, &data.x, &data.y)
        .sub(&crate::op::slot1_action(lts, &data.y, &data.x));
    let s_mat = rep
        .eval(Slot::R, &data.x, &data.y)
        .sub(&rep.eval(Slot::R, &data.y, &data.x));
    let mut phi: Vec<Matrix<S>> = vec![Matrix::identity(n), d_mat];
    phi.extend(data.phi_higher.iter().cloned());
    let mut psi: Vec<Matrix<S>> = vec![Matrix::identity(m), s_mat];
    psi.extend(data.psi_higher.iter().cloned());
    let h_phi = phi.len() - 1;
    let h_psi = psi.len() - 1;

    // (1) {phi_t a, phi_t b, phi_t c} = phi_t {a,b,c}
    let max_s1 = 3 * h_phi;
    let mut algebra_map = true;
    'cond1: for s in 1..=max_s1 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut lhs = Vector::zeros(n);
                    for i in 0..=s.min(h_phi) {
                        for j in 0..=(s - i).min(h_phi) {
                            let k = s - i - j;
                            if k > h_phi {
                                continue;
                            }
                            lhs = lhs.add(
                                &lts.product(&phi[i].col(a), &phi[j].col(b), &phi[k].col(c))
                                    .expect("shape"),
                            );
                        }
                    }
                    let rhs = if s <= h_phi {
                        phi[s].mul_vec(&Vector::from_entries(lts.product_basis(a, b, c).to_vec()))
                    } else {
                        Vector::zeros(n)
                    };
                    if lhs != rhs {
                        algebra_map = false;
                        break 'cond1;
                    }
                }
            }
        }
    }

    // (2) psi_t rho(a,b) = rho(phi_t a, phi_t b) psi_t for rho = l, m, r
    let max_s2 = 2 * h_phi + h_psi;
    let mut intertwines_actions = true;
    'cond2: for slot in [Slot::L, Slot::M, Slot::R] {
        for s in 1..=max_s2 {
            for a in 0..n {
                for b in 0..n {
                    let lhs = if s <= h_psi {
                        psi[s].mul(rep.basis(slot, a, b))
                    } else {
                        Matrix::zeros(m, m)
                    };
                    let mut rhs = Matrix::zeros(m, m);
                    for i in 0..=s.min(h_phi) {
                        for j in 0..=(s - i).min(h_phi) {
                            let k = s - i - j;
                            if k > h_psi {
                                continue;
                            }
                            rhs = rhs
                                .add(&rep.eval(slot, &phi[i].col(a), &phi[j].col(b)).mul(&psi[k]));
                        }
                    }
                    if lhs != rhs {
                        intertwines_actions = false;
                        break 'cond2;
                    }
                }
            }
        }
    }

    // (3) (T + t t1) psi_t = phi_t (T + t t2), coefficient by coefficient
    let series1 = [op.matrix().clone(), t1.clone()];
    let series2 = [op.matrix().clone(), t2.clone()];
    let max_s3 = 1 + h_phi.max(h_psi);
    let mut operator_intertwine = true;
    for s in 1..=max_s3 {
        let mut residual = Matrix::zeros(n, m);
        for i in 0..=s.min(1) {
            let j = s - i;
            if j <= h_psi {
                residual = residual.add(&series1[i].mul(&psi[j]));
            }
        }
        for i in 0..=s.min(h_phi) {
            let j = s - i;
            if j <= 1 {
                residual = residual.sub(&phi[i].mul(&series2[j]));
            }
        }
        if !residual.is_zero() {
            operator_intertwine = false;
            break;
        }
    }

    let delta = delta_cocycle(op, &data.x, &data.y)?;
    let difference_is_delta = t2.sub(t1) == delta;

    Ok(EquivalenceReport {
        algebra_map,
        intertwines_actions,
        operator_intertwine,
        difference_is_delta,
        checked_order: max_s1.max(max_s2).max(max_s3),
    })
}
