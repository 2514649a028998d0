//! Color Lie algebras given by a homogeneous basis of matrices.

mod quad;

pub use quad::{bracket_generator_quadratic, quad_to_matrix, QuadElement};

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::AlgebraError;
use crate::gmatrix::{GradedMatrix, GradedSpace};
use crate::grading::{GradingContext, GroupElement};
use crate::linalg::{self, Mat};
use crate::verdict::{LawTally, Verdict};
use crate::CycScalar;

/// Sparse structure-constant row: (c, f_{ab}^c) sorted by c.
pub type Coeffs = Vec<(usize, CycScalar)>;

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub name: String,
    pub degree: GroupElement,
}

/// A color Lie algebra with structure constants f_{a,b}^c.
#[derive(Clone, Debug)]
pub struct ColorAlgebra {
    ctx: Arc<GradingContext>,
    basis: Vec<BasisElement>,
    rep: Option<(Arc<GradedSpace>, Vec<GradedMatrix>)>,
    f: Vec<Vec<Coeffs>>,
}

/// Expresses degree-γ matrices in a fixed basis of that degree.
struct Coordinates {
    members: Vec<usize>,
    support: Vec<usize>,
    /// reduced echelon rows over `support`
    reduced: Mat,
    pivots: Vec<usize>,
    /// reduced = transform · original
    transform: Mat,
}

impl Coordinates {
    fn new(members: Vec<usize>, mats: &[GradedMatrix], n: u32) -> Option<Self> {
        let mut support: Vec<usize> = members
            .iter()
            .flat_map(|&a| {
                mats[a]
                    .entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, _)| k)
            })
            .collect();
        support.sort_unstable();
        support.dedup();
        let k = members.len();
        let l = support.len();
        let mut aug = Mat::zeros(k, l + k, n);
        for (r, &a) in members.iter().enumerate() {
            for (c, &pos) in support.iter().enumerate() {
                aug[(r, c)] = mats[a].entries()[pos].clone();
            }
            aug[(r, l + r)] = CycScalar::one(n);
        }
        let pivots = linalg::rref(&mut aug);
        if pivots.iter().filter(|&&p| p < l).count() < k {
            return None;
        }
        let mut reduced = Mat::zeros(k, l, n);
        let mut transform = Mat::zeros(k, k, n);
        for r in 0..k {
            for c in 0..l {
                reduced[(r, c)] = aug[(r, c)].clone();
            }
            for c in 0..k {
                transform[(r, c)] = aug[(r, l + c)].clone();
            }
        }
        Some(Coordinates {
            members,
            support,
            reduced,
            pivots,
            transform,
        })
    }

    /// Coordinates of `target` on `members`, or the number of residual entries.
    fn solve(&self, target: &GradedMatrix, n: u32) -> Result<Coeffs, usize> {
        let entries = target.entries();
        let outside = entries
            .iter()
            .enumerate()
            .filter(|(k, x)| !x.is_zero() && self.support.binary_search(k).is_err())
            .count();
        let y: Vec<CycScalar> = self
            .pivots
            .iter()
            .map(|&p| entries[self.support[p]].clone())
            .collect();
        let mut residual = outside;
        for (c, &pos) in self.support.iter().enumerate() {
            let mut v = entries[pos].clone();
            for (r, yr) in y.iter().enumerate() {
                if !yr.is_zero() && !self.reduced[(r, c)].is_zero() {
                    v -= &(yr * &self.reduced[(r, c)]);
                }
            }
            if !v.is_zero() {
                residual += 1;
            }
        }
        if residual > 0 {
            return Err(residual);
        }
        let mut out = Vec::new();
        for (j, &a) in self.members.iter().enumerate() {
            let mut x = CycScalar::zero(n);
            for (r, yr) in y.iter().enumerate() {
                if !yr.is_zero() && !self.transform[(r, j)].is_zero() {
                    x += &(yr * &self.transform[(r, j)]);
                }
            }
            if !x.is_zero() {
                out.push((a, x));
            }
        }
        Ok(out)
    }
}

impl ColorAlgebra {
    /// Derives the structure constants from a matrix realization.
    pub fn from_representation(
        space: Arc<GradedSpace>,
        generators: Vec<(String, GroupElement, GradedMatrix)>,
    ) -> Result<Self, AlgebraError> {
        if generators.is_empty() {
            return Err(AlgebraError::Empty);
        }
        let ctx = space.ctx().clone();
        let n = ctx.conductor();
        let mut seen = std::collections::HashSet::new();
        for (name, deg, m) in &generators {
            if !seen.insert(name.clone()) {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
            if **m.space() != *space {
                return Err(crate::error::MatrixError::SpaceMismatch.into());
            }
            if !m.is_homogeneous_of(*deg) {
                return Err(AlgebraError::Degree {
                    name: name.clone(),
                    degree: ctx.fmt_el(*deg),
                });
            }
        }
        let basis: Vec<BasisElement> = generators
            .iter()
            .map(|(name, degree, _)| BasisElement {
                name: name.clone(),
                degree: *degree,
            })
            .collect();
        let mats: Vec<GradedMatrix> = generators.into_iter().map(|(_, _, m)| m).collect();

        let mut by_degree: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (a, b) in basis.iter().enumerate() {
            by_degree.entry(b.degree).or_default().push(a);
        }
        let mut coords: BTreeMap<GroupElement, Coordinates> = BTreeMap::new();
        for (g, members) in by_degree {
            let c = Coordinates::new(members, &mats, n).ok_or_else(|| AlgebraError::DependentBasis {
                degree: ctx.fmt_el(g),
            })?;
            coords.insert(g, c);
        }

        let dim = basis.len();
        let rows: Vec<Result<Vec<Coeffs>, AlgebraError>> = (0..dim)
            .into_par_iter()
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let (da, db) = (basis[a].degree, basis[b].degree);
                        let br = mats[a].bracket_homogeneous(da, &mats[b], db);
                        if br.is_zero() {
                            return Ok(Vec::new());
                        }
                        let g = ctx.add(da, db);
                        let not_closed = |residual| AlgebraError::NotClosed {
                            a: basis[a].name.clone(),
                            b: basis[b].name.clone(),
                            residual,
                        };
                        match coords.get(&g) {
                            Some(c) => c.solve(&br, n).map_err(not_closed),
                            None => Err(not_closed(br.entries().iter().filter(|x| !x.is_zero()).count())),
                        }
                    })
                    .collect()
            })
            .collect();
        let mut f = Vec::with_capacity(dim);
        for r in rows {
            f.push(r?);
        }
        Ok(ColorAlgebra {
            ctx,
            basis,
            rep: Some((space, mats)),
            f,
        })
    }

    /// An algebra given directly by structure constants (no realization).
    /// `f` is indexed `[a][b]` and need not satisfy any law.
    pub fn from_structure_constants(
        ctx: Arc<GradingContext>,
        basis: Vec<BasisElement>,
        f: Vec<Vec<Coeffs>>,
    ) -> Self {
        assert_eq!(f.len(), basis.len());
        ColorAlgebra {
            ctx,
            basis,
            rep: None,
            f,
        }
    }

    /// Same algebra with some structure constants replaced.
    pub fn with_structure_constants(&self, f: Vec<Vec<Coeffs>>) -> Self {
        ColorAlgebra {
            f,
            ..self.clone()
        }
    }

    pub fn ctx(&self) -> &Arc<GradingContext> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn name(&self, a: usize) -> &str {
        &self.basis[a].name
    }

    pub fn degree(&self, a: usize) -> GroupElement {
        self.basis[a].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn space(&self) -> Option<&Arc<GradedSpace>> {
        self.rep.as_ref().map(|(s, _)| s)
    }

    /// ρ(X_a), when the algebra carries a realization.
    pub fn matrix(&self, a: usize) -> Option<&GradedMatrix> {
        self.rep.as_ref().map(|(_, m)| &m[a])
    }

    pub fn matrices(&self) -> Option<&[GradedMatrix]> {
        self.rep.as_ref().map(|(_, m)| m.as_slice())
    }

    /// Sparse f_{a,b}^c over c.
    pub fn f(&self, a: usize, b: usize) -> &Coeffs {
        &self.f[a][b]
    }

    pub fn structure_constants(&self) -> &[Vec<Coeffs>] {
        &self.f
    }

    pub fn f_coeff(&self, a: usize, b: usize, c: usize) -> CycScalar {
        self.f[a][b]
            .iter()
            .find(|(k, _)| *k == c)
            .map_or_else(|| self.ctx.scalar_zero(), |(_, x)| x.clone())
    }

    /// Basis indices of degree g.
    pub fn of_degree(&self, g: GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.basis[a].degree == g).collect()
    }

    /// Σ_b x_b ⟦X_a, X_b⟧ as a dense vector, for x given densely.
    fn ad_dense(&self, a: usize, x: &[CycScalar]) -> Vec<CycScalar> {
        let mut out = vec![self.ctx.scalar_zero(); self.dim()];
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            for (c, v) in &self.f[a][b] {
                out[*c] += &(xb * v);
            }
        }
        out
    }

    fn sparse_to_dense(&self, v: &Coeffs) -> Vec<CycScalar> {
        let mut out = vec![self.ctx.scalar_zero(); self.dim()];
        for (c, x) in v {
            out[*c] = x.clone();
        }
        out
    }

    fn fmt_vec(&self, v: &[CycScalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| format!("({x})*{}", self.name(c)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// f_{a,b}^c = 0 unless deg c = deg a + deg b.
pub fn check_support(alg: &ColorAlgebra) -> Verdict {
    let ctx = alg.ctx();
    let mut t = LawTally::new("f(a,b)^c = 0 unless deg c = deg a + deg b");
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let g = ctx.add(alg.degree(a), alg.degree(b));
            let bad = alg.f(a, b).iter().find(|(c, _)| alg.degree(*c) != g);
            t.record(bad.is_none(), || {
                format!("a={} b={} c={}", alg.name(a), alg.name(b), alg.name(bad.unwrap().0))
            });
        }
    }
    Verdict {
        checks: vec![t.finish()],
    }
}

/// f_{a,b}^c = −ω(deg a, deg b) f_{b,a}^c over all pairs.
pub fn check_antisymmetry(alg: &ColorAlgebra) -> Verdict {
    let ctx = alg.ctx();
    let mut t = LawTally::new("f(a,b)^c = -omega(a,b) f(b,a)^c");
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let w = ctx.omega(alg.degree(a), alg.degree(b));
            let lhs = alg.sparse_to_dense(alg.f(a, b));
            let rhs: Vec<CycScalar> = alg
                .sparse_to_dense(alg.f(b, a))
                .iter()
                .map(|x| -(w * x))
                .collect();
            let bad = (0..alg.dim()).find(|&c| lhs[c] != rhs[c]);
            t.record(bad.is_none(), || {
                let c = bad.unwrap();
                format!("a={} b={} c={}", alg.name(a), alg.name(b), alg.name(c))
            });
        }
    }
    Verdict {
        checks: vec![t.finish()],
    }
}

/// ⟦X,⟦Y,Z⟧⟧ = ⟦⟦X,Y⟧,Z⟧ + ω(α,β)⟦Y,⟦X,Z⟧⟧ on all basis triples.
pub fn check_jacobi(alg: &ColorAlgebra) -> Verdict {
    let ctx = alg.ctx();
    let d = alg.dim();
    let results: Vec<(u64, Option<String>)> = (0..d)
        .into_par_iter()
        .map(|a| {
            let mut count = 0u64;
            let mut witness = None;
            for b in 0..d {
                let w = ctx.omega(alg.degree(a), alg.degree(b));
                for c in 0..d {
                    count += 1;
                    if witness.is_some() {
                        continue;
                    }
                    let bc = alg.sparse_to_dense(alg.f(b, c));
                    let lhs = alg.ad_dense(a, &bc);
                    // ⟦⟦X_a,X_b⟧,X_c⟧ = Σ_e f_ab^e f_ec
                    let mut rhs = vec![ctx.scalar_zero(); d];
                    for (e, x) in alg.f(a, b) {
                        for (g, y) in alg.f(*e, c) {
                            rhs[*g] += &(x * y);
                        }
                    }
                    let ac = alg.sparse_to_dense(alg.f(a, c));
                    for (g, y) in alg.ad_dense(b, &ac).iter().enumerate() {
                        if !y.is_zero() {
                            rhs[g] += &(w * y);
                        }
                    }
                    if lhs != rhs {
                        let diff: Vec<CycScalar> = lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect();
                        witness = Some(format!(
                            "a={} b={} c={} lhs-rhs={}",
                            alg.name(a),
                            alg.name(b),
                            alg.name(c),
                            alg.fmt_vec(&diff)
                        ));
                    }
                }
            }
            (count, witness)
        })
        .collect();
    let instances = results.iter().map(|r| r.0).sum();
    let witness = results.into_iter().find_map(|r| r.1);
    Verdict {
        checks: vec![crate::verdict::LawCheck {
            law: "color Jacobi identity".into(),
            instances,
            witness,
        }],
    }
}

/// Basis of the graded center, one list of coordinate vectors per degree
/// (degrees in the context's block order, empty degrees omitted).
pub fn graded_center(alg: &ColorAlgebra) -> Vec<(GroupElement, Vec<Vec<CycScalar>>)> {
    let ctx = alg.ctx();
    let n = ctx.conductor();
    let d = alg.dim();
    let mut out = Vec::new();
    for &g in ctx.order() {
        let members = alg.of_degree(g);
        if members.is_empty() {
            continue;
        }
        // rows (b, c), columns: members
        let mut rows = Vec::new();
        for b in 0..d {
            let mut block = vec![vec![CycScalar::zero(n); members.len()]; d];
            let mut any = false;
            for (j, &a) in members.iter().enumerate() {
                for (c, x) in alg.f(a, b) {
                    block[*c][j] = x.clone();
                    any = true;
                }
            }
            if any {
                rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
        let kernel = if rows.is_empty() {
            (0..members.len())
                .map(|j| {
                    let mut v = vec![CycScalar::zero(n); members.len()];
                    v[j] = CycScalar::one(n);
                    v
                })
                .collect()
        } else {
            let m = Mat::from_rows(rows, n);
            linalg::nullspace(&m, n)
        };
        if kernel.is_empty() {
            continue;
        }
        let basis = linalg::row_reduce_basis(kernel, n)
            .into_iter()
            .map(|v| {
                let mut full = vec![CycScalar::zero(n); d];
                for (j, &a) in members.iter().enumerate() {
                    full[a] = v[j].clone();
                }
                full
            })
            .collect();
        out.push((g, basis));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmatrix::GradedSpace;

    /// gl(1|1) inside the ℤ₂²-graded space with V00 = V11 = ℂ.
    fn small() -> ColorAlgebra {
        let ctx = Arc::new(GradingContext::z2_squared());
        let g = |s| ctx.parse_el(s).unwrap();
        let sp = GradedSpace::new(ctx.clone(), &[(g("00"), 1), (g("11"), 1)]);
        let e = |a, b| GradedMatrix::matrix_unit(&sp, g(a), g(b), 0, 0).unwrap();
        ColorAlgebra::from_representation(
            sp.clone(),
            vec![
                ("h1".into(), g("00"), e("00", "00")),
                ("h2".into(), g("00"), e("11", "11")),
                ("x".into(), g("11"), e("00", "11")),
                ("y".into(), g("11"), e("11", "00")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn structure_constants_of_units() {
        let alg = small();
        // ⟦x, y⟧ = xy − ω(11,11) yx = h1 − h2 since ω(11,11) = 1
        let f = alg.f(2, 3);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], (0, CycScalar::one(12)));
        assert_eq!(f[1], (1, CycScalar::from_integer(-1, 12)));
        assert!(check_antisymmetry(&alg).passed());
        assert!(check_jacobi(&alg).passed());
        assert!(check_support(&alg).passed());
    }

    #[test]
    fn center_contains_identity() {
        let alg = small();
        let z = graded_center(&alg);
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].1.len(), 1);
        let v = &z[0].1[0];
        assert!(v[0].is_one() && v[1].is_one());
    }

    #[test]
    fn abelian_center_is_everything() {
        let alg = small();
        let zero_f = vec![vec![Vec::new(); 4]; 4];
        let ab = alg.with_structure_constants(zero_f);
        let total: usize = graded_center(&ab).iter().map(|(_, b)| b.len()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn corrupted_constants_are_caught() {
        let alg = small();
        let mut f = alg.structure_constants().to_vec();
        f[2][3][0].1 = CycScalar::from_integer(2, 12);
        let bad = alg.with_structure_constants(f);
        let v = check_antisymmetry(&bad);
        assert!(!v.passed());
        assert!(v.checks[0].witness.as_ref().unwrap().contains("a=x b=y"));
    }

    #[test]
    fn closure_failure_reports_pair() {
        let ctx = Arc::new(GradingContext::z2_squared());
        let g = |s| ctx.parse_el(s).unwrap();
        let sp = GradedSpace::new(ctx.clone(), &[(g("00"), 1), (g("11"), 1)]);
        let e = |a, b| GradedMatrix::matrix_unit(&sp, g(a), g(b), 0, 0).unwrap();
        let err = ColorAlgebra::from_representation(
            sp.clone(),
            vec![("x".into(), g("11"), e("00", "11")), ("y".into(), g("11"), e("11", "00"))],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::NotClosed { ref a, ref b, .. } if a == "x" && b == "y"));
    }

    #[test]
    fn dependent_and_inhomogeneous_bases() {
        let ctx = Arc::new(GradingContext::z2_squared());
        let g = |s| ctx.parse_el(s).unwrap();
        let sp = GradedSpace::new(ctx.clone(), &[(g("00"), 1), (g("11"), 1)]);
        let e = |a, b| GradedMatrix::matrix_unit(&sp, g(a), g(b), 0, 0).unwrap();
        let dep = ColorAlgebra::from_representation(
            sp.clone(),
            vec![("a".into(), g("00"), e("00", "00")), ("b".into(), g("00"), e("00", "00").scale(&CycScalar::from_integer(2, 12)))],
        );
        assert!(matches!(dep, Err(AlgebraError::DependentBasis { .. })));
        let inh = ColorAlgebra::from_representation(sp.clone(), vec![("a".into(), g("11"), e("00", "00"))]);
        assert!(matches!(inh, Err(AlgebraError::Degree { .. })));
    }
}
