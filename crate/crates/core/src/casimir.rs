//! Commutants, invariant forms η^μ and their inverses, and quadratic Casimirs.

use rayon::prelude::*;

use crate::algebra::{bracket_generator_quadratic, quad_to_matrix, ColorAlgebra, QuadElement};
use crate::error::FormError;
use crate::gmatrix::GradedMatrix;
use crate::grading::GroupElement;
use crate::linalg::{self, Mat};
use crate::verdict::{LawCheck, LawTally, Verdict};
use crate::CycScalar;

/// Kernel of M ↦ ⟦M, ρ(X_a)⟧ restricted to degree μ.
#[derive(Clone, Debug)]
pub struct Commutant {
    pub degree: GroupElement,
    /// First nonzero entry (row-major scan) of each element is 1.
    pub basis: Vec<GradedMatrix>,
}

impl Commutant {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// η^μ_{ab} = s · ctr(ρ(X_a) M ρ(X_b)) for a commutant M of degree −μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedForm {
    pub degree: GroupElement,
    pub matrix: Mat,
    pub commutant: GradedMatrix,
    pub normalization: CycScalar,
}

impl GradedForm {
    pub fn get(&self, a: usize, b: usize) -> &CycScalar {
        &self.matrix[(a, b)]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// Nonzero entries in lexicographic (a, b) order.
    pub fn entries(&self) -> Vec<(usize, usize, CycScalar)> {
        nonzero_entries(&self.matrix)
    }

    /// Same degree and commutant, explicit entries. Used for perturbation tests.
    pub fn with_matrix(&self, matrix: Mat) -> Self {
        GradedForm {
            matrix,
            ..self.clone()
        }
    }
}

/// η_μ^{ab}, the two-sided inverse of η^μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseForm {
    pub degree: GroupElement,
    pub matrix: Mat,
}

impl InverseForm {
    pub fn get(&self, a: usize, b: usize) -> &CycScalar {
        &self.matrix[(a, b)]
    }

    pub fn entries(&self) -> Vec<(usize, usize, CycScalar)> {
        nonzero_entries(&self.matrix)
    }
}

fn nonzero_entries(m: &Mat) -> Vec<(usize, usize, CycScalar)> {
    let mut out = Vec::new();
    for a in 0..m.rows {
        for b in 0..m.cols {
            if !m[(a, b)].is_zero() {
                out.push((a, b, m[(a, b)].clone()));
            }
        }
    }
    out
}

/// Positions (r, c) of a degree-μ matrix in row-major order.
fn degree_positions(alg: &ColorAlgebra, mu: GroupElement) -> Vec<(usize, usize)> {
    let Some(space) = alg.space() else {
        return Vec::new();
    };
    let t = space.total();
    (0..t)
        .flat_map(|r| (0..t).map(move |c| (r, c)))
        .filter(|&(r, c)| space.entry_degree(r, c) == mu)
        .collect()
}

/// All degree-μ matrices graded-commuting with every generator.
/// Empty when the algebra has no matrix realization.
pub fn solve_commutants(alg: &ColorAlgebra, mu: GroupElement) -> Commutant {
    let ctx = alg.ctx();
    let n = ctx.conductor();
    let (Some(space), Some(mats)) = (alg.space(), alg.matrices()) else {
        return Commutant {
            degree: mu,
            basis: Vec::new(),
        };
    };
    let positions = degree_positions(alg, mu);
    let k = positions.len();
    let t = space.total();
    if k == 0 {
        return Commutant {
            degree: mu,
            basis: Vec::new(),
        };
    }

    // Accumulate the system generator by generator, keeping it reduced.
    let mut system: Vec<Vec<CycScalar>> = Vec::new();
    for (a, rho) in mats.iter().enumerate() {
        let w = ctx.omega(mu, alg.degree(a));
        // (Mρ − wρM)[i][j] = Σ_p M[i][p]ρ[p][j] − w Σ_p ρ[i][p]M[p][j]
        let mut rows = vec![vec![CycScalar::zero(n); k]; t * t];
        let mut touched = vec![false; t * t];
        for (u, &(r, c)) in positions.iter().enumerate() {
            // M[r][c] contributes to (r, j) via ρ[c][j]
            for j in 0..t {
                let x = rho.get(c, j);
                if !x.is_zero() {
                    rows[r * t + j][u] += x;
                    touched[r * t + j] = true;
                }
            }
            // and to (i, c) via −w ρ[i][r]
            for i in 0..t {
                let x = rho.get(i, r);
                if !x.is_zero() {
                    rows[i * t + c][u] -= &(w * x);
                    touched[i * t + c] = true;
                }
            }
        }
        let new: Vec<Vec<CycScalar>> = rows
            .into_iter()
            .zip(touched)
            .filter(|(r, t)| *t && r.iter().any(|x| !x.is_zero()))
            .map(|(r, _)| r)
            .collect();
        if new.is_empty() {
            continue;
        }
        system.extend(new);
        system = linalg::row_reduce_basis(system, n);
        if system.len() == k {
            break;
        }
    }
    let kernel = if system.is_empty() {
        (0..k)
            .map(|u| {
                let mut v = vec![CycScalar::zero(n); k];
                v[u] = CycScalar::one(n);
                v
            })
            .collect()
    } else {
        linalg::nullspace(&Mat::from_rows(system, n), n)
    };
    let basis = if kernel.is_empty() {
        Vec::new()
    } else {
        linalg::row_reduce_basis(kernel, n)
    };
    let basis = basis
        .into_iter()
        .map(|v| {
            let mut m = GradedMatrix::zeros(space);
            for (u, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    let (r, c) = positions[u];
                    m.set(r, c, x);
                }
            }
            m
        })
        .collect();
    Commutant { degree: mu, basis }
}

/// First generator M fails to graded-commute with, if any.
pub fn commutant_failure(alg: &ColorAlgebra, m: &GradedMatrix, deg: GroupElement) -> Option<usize> {
    let mats = alg.matrices()?;
    (0..mats.len()).find(|&a| !m.bracket_homogeneous(deg, &mats[a], alg.degree(a)).is_zero())
}

/// Builds η^μ from a commutant M of degree −μ, scaled by `normalization`.
pub fn bilinear_form(alg: &ColorAlgebra, m: &GradedMatrix, normalization: &CycScalar) -> Result<GradedForm, FormError> {
    let ctx = alg.ctx();
    let mats = alg.matrices().ok_or(FormError::NoRealization)?;
    let deg = match m.homogeneous_degree()? {
        Some(d) => d,
        None => ctx.zero(),
    };
    if let Some(a) = commutant_failure(alg, m, deg) {
        return Err(FormError::NotCommutant {
            degree: ctx.fmt_el(deg),
            generator: alg.name(a).to_string(),
        });
    }
    let mu = ctx.neg(deg);
    let d = alg.dim();
    let space = m.space();
    let t = space.total();
    let signs: Vec<CycScalar> = (0..t)
        .map(|i| {
            let g = space.degree_of(i);
            ctx.omega(g, g).clone()
        })
        .collect();
    let rows: Vec<Vec<CycScalar>> = (0..d)
        .into_par_iter()
        .map(|a| {
            let am = &mats[a] * m;
            (0..d)
                .map(|b| {
                    let mut acc = CycScalar::zero(ctx.conductor());
                    for i in 0..t {
                        for p in 0..t {
                            let x = am.get(i, p);
                            if x.is_zero() {
                                continue;
                            }
                            let y = mats[b].get(p, i);
                            if !y.is_zero() {
                                acc += &(&(x * y) * &signs[i]);
                            }
                        }
                    }
                    &acc * normalization
                })
                .collect()
        })
        .collect();
    Ok(GradedForm {
        degree: mu,
        matrix: Mat::from_rows(rows, ctx.conductor()),
        commutant: m.clone(),
        normalization: normalization.clone(),
    })
}

/// One η^μ per basis vector of the degree −μ commutant space.
pub fn forms_of_degree(alg: &ColorAlgebra, mu: GroupElement, normalization: &CycScalar) -> Vec<GradedForm> {
    let com = solve_commutants(alg, alg.ctx().neg(mu));
    com.basis
        .iter()
        .map(|m| bilinear_form(alg, m, normalization).expect("solver output is a commutant"))
        .collect()
}

/// Exact inverse of η^μ, or the rank and a null vector when degenerate.
pub fn invert_form(alg: &ColorAlgebra, form: &GradedForm) -> Result<InverseForm, FormError> {
    let n = alg.ctx().conductor();
    match linalg::inverse(&form.matrix, n) {
        Some(matrix) => Ok(InverseForm {
            degree: form.degree,
            matrix,
        }),
        None => {
            let witness = linalg::nullspace(&form.matrix, n).into_iter().next().unwrap_or_default();
            Err(FormError::Degenerate {
                degree: alg.ctx().fmt_el(form.degree),
                rank: form.rank(),
                dim: form.matrix.rows,
                witness,
            })
        }
    }
}

/// Support, ω-symmetry and invariance of η^μ; inverse-side identities when given.
pub fn check_form_properties(alg: &ColorAlgebra, form: &GradedForm, inverse: Option<&InverseForm>) -> Verdict {
    let ctx = alg.ctx();
    let n = ctx.conductor();
    let d = alg.dim();
    let mu = form.degree;
    let eta = &form.matrix;
    let name = |a: usize| alg.name(a).to_string();
    let mut v = Verdict::default();

    let mut support = LawTally::new("eta(a,b) = 0 unless deg a + deg b = mu");
    let mut symmetry = LawTally::new("eta(b,a) = omega(mu,mu) omega(a,b) eta(a,b)");
    let wmm = ctx.omega(mu, mu);
    for a in 0..d {
        for b in 0..d {
            let (da, db) = (alg.degree(a), alg.degree(b));
            support.record(ctx.add(da, db) == mu || eta[(a, b)].is_zero(), || {
                format!("a={} b={}", name(a), name(b))
            });
            let rhs = &(wmm * ctx.omega(da, db)) * &eta[(a, b)];
            symmetry.record(eta[(b, a)] == rhs, || format!("a={} b={}", name(a), name(b)));
        }
    }
    v.push(support.finish());
    v.push(symmetry.finish());

    // Σ_v f_ab^v η_vc = ω(μ,β) Σ_v f_bc^v η_av
    v.push(triple_law(
        alg,
        "sum f(a,b)^v eta(v,c) = omega(mu,b) sum f(b,c)^v eta(a,v)",
        |a, b, c| {
            let mut lhs = CycScalar::zero(n);
            for (x, y) in alg.f(a, b) {
                lhs += &(y * &eta[(*x, c)]);
            }
            let mut rhs = CycScalar::zero(n);
            for (x, y) in alg.f(b, c) {
                rhs += &(y * &eta[(a, *x)]);
            }
            lhs == &rhs * ctx.omega(mu, alg.degree(b))
        },
    ));

    if let Some(inv) = inverse {
        let h = &inv.matrix;
        let mut isupport = LawTally::new("etainv(a,b) = 0 unless deg a + deg b = mu");
        for a in 0..d {
            for b in 0..d {
                isupport.record(ctx.add(alg.degree(a), alg.degree(b)) == mu || h[(a, b)].is_zero(), || {
                    format!("a={} b={}", name(a), name(b))
                });
            }
        }
        v.push(isupport.finish());
        let id = linalg::Mat::identity(d, n);
        v.push(matrix_law("sum etainv(a,c) eta(c,b) = delta(a,b)", &h.mul(eta), &id, alg));
        v.push(matrix_law("sum eta(b,c) etainv(c,a) = delta(a,b)", &eta.mul(h), &id, alg));
        v.push(triple_law(
            alg,
            "sum etainv(a,v) f(v,b)^c = omega(mu,b) sum etainv(v,c) f(b,v)^a",
            |a, b, c| {
                let mut lhs = CycScalar::zero(n);
                for x in 0..d {
                    let hx = &h[(a, x)];
                    if hx.is_zero() {
                        continue;
                    }
                    lhs += &(hx * &alg.f_coeff(x, b, c));
                }
                let mut rhs = CycScalar::zero(n);
                for x in 0..d {
                    let hx = &h[(x, c)];
                    if hx.is_zero() {
                        continue;
                    }
                    rhs += &(hx * &alg.f_coeff(b, x, a));
                }
                lhs == &rhs * ctx.omega(mu, alg.degree(b))
            },
        ));
    }
    v
}

fn matrix_law(law: &str, got: &Mat, want: &Mat, alg: &ColorAlgebra) -> LawCheck {
    let mut t = LawTally::new(law);
    for a in 0..got.rows {
        for b in 0..got.cols {
            t.record(got[(a, b)] == want[(a, b)], || format!("a={} b={}", alg.name(a), alg.name(b)));
        }
    }
    t.finish()
}

fn triple_law<F>(alg: &ColorAlgebra, law: &str, holds: F) -> LawCheck
where
    F: Fn(usize, usize, usize) -> bool + Sync,
{
    let d = alg.dim();
    let first_bad = (0..d * d * d).into_par_iter().find_first(|&i| !holds(i / (d * d), (i / d) % d, i % d));
    LawCheck {
        law: law.into(),
        instances: (d * d * d) as u64,
        witness: first_bad.map(|i| {
            format!(
                "a={} b={} c={}",
                alg.name(i / (d * d)),
                alg.name((i / d) % d),
                alg.name(i % d)
            )
        }),
    }
}

/// C_μ = Σ η_μ^{ab} X_a X_b, normal-ordered.
pub fn build_casimir(alg: &ColorAlgebra, inv: &InverseForm) -> QuadElement {
    let raw: Vec<(usize, usize, CycScalar)> = inv.entries();
    QuadElement::normal_order(alg, &raw)
}

/// Symbolic and matrix centrality of a quadratic element.
pub fn verify_centrality(alg: &ColorAlgebra, c: &QuadElement) -> Verdict {
    let d = alg.dim();
    let symbolic: Vec<bool> = (0..d)
        .into_par_iter()
        .map(|a| bracket_generator_quadratic(alg, a, c).is_zero())
        .collect();
    let mut t = LawTally::new("[X_a, C] = 0 in U(g)");
    for (a, ok) in symbolic.iter().enumerate() {
        t.record(*ok, || alg.name(a).to_string());
    }
    let mut v = Verdict {
        checks: vec![t.finish()],
    };
    if let Some(rc) = quad_to_matrix(alg, c) {
        let mats = alg.matrices().expect("realization present");
        let ok: Vec<bool> = (0..d)
            .into_par_iter()
            .map(|a| mats[a].color_bracket(&rc).expect("same space").is_zero())
            .collect();
        let mut t = LawTally::new("[rho(X_a), rho(C)] = 0");
        for (a, ok) in ok.iter().enumerate() {
            t.record(*ok, || alg.name(a).to_string());
        }
        v.push(t.finish());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmatrix::GradedSpace;
    use crate::grading::GradingContext;
    use std::sync::Arc;

    /// gl(1|1) in the ℤ₂² space V00 ⊕ V11, where the odd block has ω = +1.
    fn gl2() -> ColorAlgebra {
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
    fn identity_commutant_and_trace_form() {
        let alg = gl2();
        let ctx = alg.ctx().clone();
        let z = ctx.zero();
        let com = solve_commutants(&alg, z);
        assert_eq!(com.dim(), 1);
        let one = CycScalar::one(12);
        let form = bilinear_form(&alg, &com.basis[0], &one).unwrap();
        // ω(11,11) = 1 so ctr is the ordinary trace: gl(2) trace form
        assert_eq!(form.get(0, 0), &one);
        assert_eq!(form.get(2, 3), &one);
        let inv = invert_form(&alg, &form).unwrap();
        assert!(check_form_properties(&alg, &form, Some(&inv)).passed());
        let c = build_casimir(&alg, &inv);
        assert!(verify_centrality(&alg, &c).passed());
    }

    #[test]
    fn degree_11_commutant() {
        let alg = gl2();
        let g = alg.ctx().parse_el("11").unwrap();
        let com = solve_commutants(&alg, g);
        // off-diagonal degree-11 matrices cannot commute with h1
        assert_eq!(com.dim(), 0);
    }

    #[test]
    fn perturbed_form_fails_invariance() {
        let alg = gl2();
        let com = solve_commutants(&alg, alg.ctx().zero());
        let form = bilinear_form(&alg, &com.basis[0], &CycScalar::one(12)).unwrap();
        let mut m = form.matrix.clone();
        m[(0, 0)] = CycScalar::from_integer(2, 12);
        let bad = form.with_matrix(m);
        let v = check_form_properties(&alg, &bad, None);
        assert!(!v.passed());
    }

    #[test]
    fn not_a_commutant() {
        let alg = gl2();
        let m = alg.matrix(0).unwrap().clone();
        assert!(matches!(
            bilinear_form(&alg, &m, &CycScalar::one(12)),
            Err(FormError::NotCommutant { .. })
        ));
    }

    #[test]
    fn constant_is_central() {
        let alg = gl2();
        let c = QuadElement::constant(CycScalar::one(12));
        assert!(verify_centrality(&alg, &c).passed());
    }
}
