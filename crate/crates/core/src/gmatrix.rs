//! Γ-graded vector spaces and block matrices over them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::MatrixError;
use crate::grading::{GradingContext, GroupElement};
use crate::linalg::{self, Mat};
use crate::CycScalar;

/// V = ⊕ V_γ with blocks laid out in the context's total order.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    ctx: Arc<GradingContext>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
    index_degree: Vec<GroupElement>,
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx)
            || (self.ctx.group() == other.ctx.group()
                && self.ctx.omega_factor() == other.ctx.omega_factor()
                && self.ctx.order() == other.ctx.order()
                && self.ctx.conductor() == other.ctx.conductor()))
            && self.dims == other.dims
    }
}

impl GradedSpace {
    /// Degrees not listed get dimension zero.
    pub fn new(ctx: Arc<GradingContext>, dims: &[(GroupElement, usize)]) -> Arc<Self> {
        let mut d = vec![0; ctx.group().size()];
        for &(g, n) in dims {
            d[g.0] = n;
        }
        let mut offsets = vec![0; d.len()];
        let mut index_degree = Vec::new();
        let mut at = 0;
        for &g in ctx.order() {
            offsets[g.0] = at;
            at += d[g.0];
            index_degree.extend(std::iter::repeat_n(g, d[g.0]));
        }
        Arc::new(GradedSpace {
            ctx,
            dims: d,
            offsets,
            total: at,
            index_degree,
        })
    }

    pub fn ctx(&self) -> &Arc<GradingContext> {
        &self.ctx
    }

    pub fn dim(&self, g: GroupElement) -> usize {
        self.dims[g.0]
    }

    pub fn offset(&self, g: GroupElement) -> usize {
        self.offsets[g.0]
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Degree of the i-th basis vector.
    pub fn degree_of(&self, i: usize) -> GroupElement {
        self.index_degree[i]
    }

    /// Degree of the matrix entry (r, c): deg r − deg c.
    pub fn entry_degree(&self, r: usize, c: usize) -> GroupElement {
        self.ctx
            .group()
            .sub(self.index_degree[r], self.index_degree[c])
    }

    /// (degree, dim) for the nonempty blocks, in block order.
    pub fn blocks(&self) -> Vec<(GroupElement, usize)> {
        self.ctx
            .order()
            .iter()
            .filter(|g| self.dims[g.0] > 0)
            .map(|&g| (g, self.dims[g.0]))
            .collect()
    }
}

/// A square matrix on a graded space. Homogeneous parts are derived from the
/// entry degrees on demand.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    space: Arc<GradedSpace>,
    data: Vec<CycScalar>,
}

impl PartialEq for GradedMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.data == other.data
    }
}

impl Eq for GradedMatrix {}

impl GradedMatrix {
    pub fn zeros(space: &Arc<GradedSpace>) -> Self {
        let n = space.total;
        GradedMatrix {
            space: space.clone(),
            data: vec![CycScalar::zero(space.ctx.conductor()); n * n],
        }
    }

    pub fn identity(space: &Arc<GradedSpace>) -> Self {
        let mut m = Self::zeros(space);
        for i in 0..space.total {
            m.data[i * space.total + i] = CycScalar::one(space.ctx.conductor());
        }
        m
    }

    pub fn from_rows(space: &Arc<GradedSpace>, rows: Vec<Vec<CycScalar>>) -> Result<Self, MatrixError> {
        let n = space.total;
        if rows.len() != n {
            return Err(MatrixError::Shape {
                expected: n,
                found: rows.len(),
            });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(GradedMatrix {
            space: space.clone(),
            data,
        })
    }

    /// E(α,β)_{ij} with 0-based i, j inside the blocks V_α, V_β.
    pub fn matrix_unit(
        space: &Arc<GradedSpace>,
        alpha: GroupElement,
        beta: GroupElement,
        i: usize,
        j: usize,
    ) -> Result<Self, MatrixError> {
        if i >= space.dim(alpha) || j >= space.dim(beta) {
            let ctx = &space.ctx;
            return Err(MatrixError::UnitIndex {
                row_degree: ctx.fmt_el(alpha),
                col_degree: ctx.fmt_el(beta),
                row: i,
                col: j,
            });
        }
        let mut m = Self::zeros(space);
        m.set(space.offset(alpha) + i, space.offset(beta) + j, CycScalar::one(space.ctx.conductor()));
        Ok(m)
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn ctx(&self) -> &Arc<GradingContext> {
        &self.space.ctx
    }

    pub fn dim(&self) -> usize {
        self.space.total
    }

    pub fn get(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.space.total + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        let n = self.space.total;
        self.data[r * n + c] = v;
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<CycScalar>> {
        self.data.chunks(self.space.total.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn to_mat(&self) -> Mat {
        Mat {
            rows: self.space.total,
            cols: self.space.total,
            data: self.data.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    fn check_space(&self, other: &Self) -> Result<(), MatrixError> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(MatrixError::SpaceMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_space(other)?;
        let n = self.space.total;
        let mut out = Self::zeros(&self.space);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        GradedMatrix {
            space: self.space.clone(),
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.space.total;
        let mut out = Self::zeros(&self.space);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    /// Nonzero homogeneous parts keyed by degree.
    pub fn parts(&self) -> BTreeMap<GroupElement, GradedMatrix> {
        let n = self.space.total;
        let mut parts: BTreeMap<GroupElement, GradedMatrix> = BTreeMap::new();
        for r in 0..n {
            for c in 0..n {
                let x = &self.data[r * n + c];
                if x.is_zero() {
                    continue;
                }
                let d = self.space.entry_degree(r, c);
                parts
                    .entry(d)
                    .or_insert_with(|| Self::zeros(&self.space))
                    .set(r, c, x.clone());
            }
        }
        parts
    }

    /// Degrees carrying a nonzero entry.
    pub fn support_degrees(&self) -> Vec<GroupElement> {
        let n = self.space.total;
        let mut out: Vec<GroupElement> = (0..n * n)
            .filter(|&k| !self.data[k].is_zero())
            .map(|k| self.space.entry_degree(k / n, k % n))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `Ok(None)` for the zero matrix, `Ok(Some(δ))` when homogeneous.
    pub fn homogeneous_degree(&self) -> Result<Option<GroupElement>, MatrixError> {
        let d = self.support_degrees();
        match d.len() {
            0 => Ok(None),
            1 => Ok(Some(d[0])),
            _ => Err(MatrixError::NotHomogeneous(
                d.iter().map(|&g| self.space.ctx.fmt_el(g)).collect(),
            )),
        }
    }

    /// True when every nonzero entry has degree `d` (the zero matrix qualifies).
    pub fn is_homogeneous_of(&self, d: GroupElement) -> bool {
        self.support_degrees().iter().all(|&g| g == d)
    }

    /// ctr X = Σ_α ω(α,α) tr X(α,α).
    pub fn color_trace(&self) -> CycScalar {
        let ctx = &self.space.ctx;
        let mut acc = ctx.scalar_zero();
        for i in 0..self.space.total {
            let x = self.get(i, i);
            if !x.is_zero() {
                let g = self.space.degree_of(i);
                acc += &(ctx.omega(g, g) * x);
            }
        }
        acc
    }

    /// ⟦X, Y⟧, extended bilinearly over homogeneous parts.
    pub fn color_bracket(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_space(other)?;
        let ctx = self.space.ctx.clone();
        let xs = self.parts();
        let ys = other.parts();
        let mut acc = Self::zeros(&self.space);
        for (&d, x) in &xs {
            for (&e, y) in &ys {
                let xy = x.checked_mul(y)?;
                let yx = y.checked_mul(x)?;
                acc = acc.checked_add(&xy)?.checked_sub(&yx.scale(ctx.omega(d, e)))?;
            }
        }
        Ok(acc)
    }

    /// ⟦X, Y⟧ for X, Y already known to be homogeneous of degrees d, e.
    pub(crate) fn bracket_homogeneous(&self, d: GroupElement, other: &Self, e: GroupElement) -> Self {
        let xy = self.checked_mul(other).expect("same space");
        let yx = other.checked_mul(self).expect("same space");
        xy.checked_sub(&yx.scale(self.space.ctx.omega(d, e)))
            .expect("same space")
    }
}

macro_rules! matrix_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&GradedMatrix> for &GradedMatrix {
            type Output = GradedMatrix;
            fn $method(self, rhs: &GradedMatrix) -> GradedMatrix {
                self.$checked(rhs).expect("matrices on different graded spaces")
            }
        }
    };
}

matrix_op!(Add, add, checked_add);
matrix_op!(Sub, sub, checked_sub);
matrix_op!(Mul, mul, checked_mul);

/// ctr(XY) = ω(δ,ε) ctr(YX) for homogeneous X, Y of degrees δ, ε.
pub fn ctr_permutation_check(x: &GradedMatrix, y: &GradedMatrix) -> Result<bool, MatrixError> {
    let zero = x.ctx().zero();
    let d = x.homogeneous_degree()?.unwrap_or(zero);
    let e = y.homogeneous_degree()?.unwrap_or(zero);
    let lhs = x.checked_mul(y)?.color_trace();
    let rhs = x.ctx().omega(d, e) * &y.checked_mul(x)?.color_trace();
    Ok(lhs == rhs)
}

/// Symmetry type of a bilinear form J on V.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JSymmetry {
    Symmetric,
    Skew,
    /// J(u,v) = ω(α,β) J(v,u) for u ∈ V_α, v ∈ V_β.
    GradedSymmetric,
    /// J(u,v) = −ω(α,β) J(v,u).
    GradedSkew,
}

impl JSymmetry {
    pub fn name(self) -> &'static str {
        match self {
            JSymmetry::Symmetric => "symmetric",
            JSymmetry::Skew => "skew-symmetric",
            JSymmetry::GradedSymmetric => "graded-symmetric",
            JSymmetry::GradedSkew => "graded-skew-symmetric",
        }
    }
}

/// A degree-zero nondegenerate bilinear form on V, J(u,v) = uᵀ J v.
#[derive(Clone, Debug)]
pub struct JForm {
    matrix: GradedMatrix,
    symmetry: JSymmetry,
}

impl JForm {
    pub fn new(matrix: GradedMatrix, symmetry: JSymmetry) -> Result<Self, MatrixError> {
        let space = matrix.space().clone();
        let ctx = space.ctx().clone();
        let n = space.total();
        for r in 0..n {
            for c in 0..n {
                let (a, b) = (space.degree_of(r), space.degree_of(c));
                if !matrix.get(r, c).is_zero() && ctx.add(a, b) != ctx.zero() {
                    return Err(MatrixError::JNotDegreeZero(ctx.fmt_el(a), ctx.fmt_el(b)));
                }
            }
        }
        let rank = linalg::rank(&matrix.to_mat());
        if rank < n {
            return Err(MatrixError::DegenerateJ { rank, dim: n });
        }
        for r in 0..n {
            for c in 0..n {
                let (a, b) = (space.degree_of(r), space.degree_of(c));
                let twist = match symmetry {
                    JSymmetry::Symmetric => ctx.one(),
                    JSymmetry::Skew => -ctx.one(),
                    JSymmetry::GradedSymmetric => ctx.omega(a, b).clone(),
                    JSymmetry::GradedSkew => -ctx.omega(a, b),
                };
                if *matrix.get(r, c) != &twist * matrix.get(c, r) {
                    return Err(MatrixError::JSymmetry(symmetry.name()));
                }
            }
        }
        Ok(JForm { matrix, symmetry })
    }

    pub fn matrix(&self) -> &GradedMatrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> JSymmetry {
        self.symmetry
    }
}

/// Outcome of the J-compatibility test for one homogeneous part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartMembership {
    pub degree: GroupElement,
    /// First failing pair of basis vectors (u, v), if any.
    pub witness: Option<(usize, usize)>,
}

/// Checks J(Xu,v) + ω(γ,α) J(u,Xv) = 0 for every homogeneous part X(γ) and
/// basis vectors u ∈ V_α, v.
pub fn j_membership(x: &GradedMatrix, j: &JForm) -> Result<Vec<PartMembership>, MatrixError> {
    let jm = j.matrix();
    x.check_space(jm)?;
    let space = x.space().clone();
    let ctx = space.ctx().clone();
    let n = space.total();
    let mut out = Vec::new();
    for (g, part) in x.parts() {
        // (XᵀJ)[p][q] = J(X e_p, e_q), (JX)[p][q] = J(e_p, X e_q)
        let xt_j = part.transpose().checked_mul(jm)?;
        let j_x = jm.checked_mul(&part)?;
        let mut witness = None;
        'scan: for p in 0..n {
            let w = ctx.omega(g, space.degree_of(p));
            for q in 0..n {
                let s = xt_j.get(p, q) + &(w * j_x.get(p, q));
                if !s.is_zero() {
                    witness = Some((p, q));
                    break 'scan;
                }
            }
        }
        out.push(PartMembership { degree: g, witness });
    }
    Ok(out)
}
