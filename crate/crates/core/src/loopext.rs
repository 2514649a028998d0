//! Loop algebras L(g) = g ⊗ C[λ, λ⁻¹] and their graded central extensions.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::algebra::ColorAlgebra;
use crate::casimir::GradedForm;
use crate::grading::GroupElement;
use crate::linalg::Mat;
use crate::verdict::{LawCheck, LawTally, Verdict};
use crate::CycScalar;

/// Σ coeff · X_a^{(m)} + Σ coeff · c_k.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LoopElement {
    pub modes: BTreeMap<(usize, i64), CycScalar>,
    /// Keyed by central charge index in the extension.
    pub central: BTreeMap<usize, CycScalar>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycScalar>, key: K, x: CycScalar) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(x);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &x;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LoopElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// X_a^{(m)}.
    pub fn mode(a: usize, m: i64, conductor: u32) -> Self {
        let mut x = Self::zero();
        x.modes.insert((a, m), CycScalar::one(conductor));
        x
    }

    /// c_k.
    pub fn charge(k: usize, conductor: u32) -> Self {
        let mut x = Self::zero();
        x.central.insert(k, CycScalar::one(conductor));
        x
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty() && self.central.is_empty()
    }

    pub fn add_scaled(&mut self, other: &LoopElement, s: &CycScalar) {
        for (k, x) in &other.modes {
            accumulate(&mut self.modes, *k, x * s);
        }
        for (k, x) in &other.central {
            accumulate(&mut self.central, *k, x * s);
        }
    }

    pub fn add_mode(&mut self, a: usize, m: i64, x: CycScalar) {
        accumulate(&mut self.modes, (a, m), x);
    }

    pub fn add_charge(&mut self, k: usize, x: CycScalar) {
        accumulate(&mut self.central, k, x);
    }

    pub fn display(&self, alg: &ColorAlgebra, ext: &ExtensionData) -> String {
        let mut terms: Vec<String> = self
            .modes
            .iter()
            .map(|((a, m), x)| format!("({x})*{}({m})", alg.name(*a)))
            .collect();
        for (k, x) in &self.central {
            terms.push(format!("({x})*{}", ext.charge_name(alg, *k)));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Central charges c_k with their degree and cocycle form η.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    charges: Vec<(GroupElement, Mat)>,
}

impl ExtensionData {
    /// Admits every nonzero form; zero forms contribute no charge.
    pub fn new(forms: &[GradedForm]) -> Self {
        ExtensionData {
            charges: forms
                .iter()
                .filter(|f| !f.is_zero())
                .map(|f| (f.degree, f.matrix.clone()))
                .collect(),
        }
    }

    /// Arbitrary cocycle data, invariant or not.
    pub fn from_matrices(charges: Vec<(GroupElement, Mat)>) -> Self {
        ExtensionData { charges }
    }

    /// L(g) with no central terms.
    pub fn trivial() -> Self {
        ExtensionData { charges: Vec::new() }
    }

    pub fn charges(&self) -> &[(GroupElement, Mat)] {
        &self.charges
    }

    pub fn active_degrees(&self) -> Vec<GroupElement> {
        let mut d: Vec<GroupElement> = self.charges.iter().map(|c| c.0).collect();
        d.dedup();
        d
    }

    /// "c11", or "c11#2" when a degree carries several charges.
    pub fn charge_name(&self, alg: &ColorAlgebra, k: usize) -> String {
        let g = self.charges[k].0;
        let same: Vec<usize> = (0..self.charges.len()).filter(|&j| self.charges[j].0 == g).collect();
        let base = format!("c{}", alg.ctx().fmt_el(g));
        if same.len() == 1 {
            base
        } else {
            let pos = same.iter().position(|&j| j == k).unwrap() + 1;
            format!("{base}#{pos}")
        }
    }
}

/// ⟦X_a^{(m)}, X_b^{(n)}⟧ = Σ f_ab^c X_c^{(m+n)} + m δ_{m+n,0} Σ_k ω(α,μ_k) η_k(a,b) c_k.
pub fn loop_bracket(alg: &ColorAlgebra, ext: &ExtensionData, x: &LoopElement, y: &LoopElement) -> LoopElement {
    let ctx = alg.ctx();
    let mut out = LoopElement::zero();
    for (&(a, m), xa) in &x.modes {
        for (&(b, n), yb) in &y.modes {
            let s = xa * yb;
            for (c, f) in alg.f(a, b) {
                out.add_mode(*c, m + n, &s * f);
            }
            if m + n == 0 && m != 0 {
                let mm = CycScalar::from_integer(m, ctx.conductor());
                for (k, (mu, eta)) in ext.charges.iter().enumerate() {
                    let e = &eta[(a, b)];
                    if !e.is_zero() {
                        out.add_charge(k, &(&(&s * &mm) * ctx.omega(alg.degree(a), *mu)) * e);
                    }
                }
            }
        }
    }
    out
}

/// Color Jacobi identity over all basis triples and mode triples in `window`.
pub fn verify_loop_jacobi(alg: &ColorAlgebra, ext: &ExtensionData, window: RangeInclusive<i64>) -> Verdict {
    let ctx = alg.ctx();
    let n = ctx.conductor();
    let d = alg.dim();
    let modes: Vec<i64> = window.collect();
    let k = modes.len();
    let gen: Vec<Vec<LoopElement>> = (0..d).map(|a| modes.iter().map(|&m| LoopElement::mode(a, m, n)).collect()).collect();
    // pairs[b][c][p * k + l] = [X_b(p), X_c(l)]
    let pairs: Vec<Vec<Vec<LoopElement>>> = (0..d)
        .into_par_iter()
        .map(|b| {
            (0..d)
                .map(|c| {
                    let mut v = Vec::with_capacity(k * k);
                    for y in &gen[b] {
                        for z in &gen[c] {
                            v.push(loop_bracket(alg, ext, y, z));
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    let results: Vec<(u64, Option<String>)> = (0..d)
        .into_par_iter()
        .map(|a| {
            let mut count = 0u64;
            let mut witness = None;
            for b in 0..d {
                let w = ctx.omega(alg.degree(a), alg.degree(b));
                for c in 0..d {
                    for (i, x) in gen[a].iter().enumerate() {
                        for (j, y) in gen[b].iter().enumerate() {
                            let xy = &pairs[a][b][i * k + j];
                            for (l, z) in gen[c].iter().enumerate() {
                                count += 1;
                                if witness.is_some() {
                                    continue;
                                }
                                let lhs = loop_bracket(alg, ext, x, &pairs[b][c][j * k + l]);
                                let mut rhs = loop_bracket(alg, ext, xy, z);
                                rhs.add_scaled(&loop_bracket(alg, ext, y, &pairs[a][c][i * k + l]), w);
                                if lhs != rhs {
                                    let mut diff = lhs.clone();
                                    diff.add_scaled(&rhs, &-CycScalar::one(n));
                                    witness = Some(format!(
                                        "{}({}) {}({}) {}({}) lhs-rhs={}",
                                        alg.name(a),
                                        modes[i],
                                        alg.name(b),
                                        modes[j],
                                        alg.name(c),
                                        modes[l],
                                        diff.display(alg, ext)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            (count, witness)
        })
        .collect();
    Verdict {
        checks: vec![LawCheck {
            law: "loop color Jacobi identity".into(),
            instances: results.iter().map(|r| r.0).sum(),
            witness: results.into_iter().find_map(|r| r.1),
        }],
    }
}

/// ⟦x,y⟧ = −ω(α,β)⟦y,x⟧ and ⟦c_k, x⟧ = 0 on basis modes in `window`.
pub fn check_loop_antisymmetry(alg: &ColorAlgebra, ext: &ExtensionData, window: RangeInclusive<i64>) -> Verdict {
    let ctx = alg.ctx();
    let n = ctx.conductor();
    let modes: Vec<i64> = window.collect();
    let mut t = LawTally::new("loop antisymmetry");
    let mut central = LawTally::new("central charges bracket to zero");
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let w = ctx.omega(alg.degree(a), alg.degree(b));
            for &m in &modes {
                let x = LoopElement::mode(a, m, n);
                for &p in &modes {
                    let y = LoopElement::mode(b, p, n);
                    let mut sum = loop_bracket(alg, ext, &x, &y);
                    sum.add_scaled(&loop_bracket(alg, ext, &y, &x), w);
                    t.record(sum.is_zero(), || format!("{}({m}) {}({p})", alg.name(a), alg.name(b)));
                }
            }
        }
        for k in 0..ext.charges.len() {
            let c = LoopElement::charge(k, n);
            for &m in &modes {
                let x = LoopElement::mode(a, m, n);
                let ok = loop_bracket(alg, ext, &c, &x).is_zero() && loop_bracket(alg, ext, &x, &c).is_zero();
                central.record(ok, || format!("{} {}({m})", ext.charge_name(alg, k), alg.name(a)));
            }
        }
    }
    Verdict {
        checks: vec![t.finish(), central.finish()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::forms_of_degree;
    use crate::gmatrix::{GradedMatrix, GradedSpace};
    use crate::grading::GradingContext;
    use std::sync::Arc;

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
    fn affine_gl2_passes() {
        let alg = gl2();
        let forms = forms_of_degree(&alg, alg.ctx().zero(), &CycScalar::one(12));
        let ext = ExtensionData::new(&forms);
        assert_eq!(ext.charges().len(), 1);
        let v = verify_loop_jacobi(&alg, &ext, -1..=1);
        assert!(v.passed(), "{v}");
        assert_eq!(v.checks[0].instances, 64 * 27);
        assert!(check_loop_antisymmetry(&alg, &ext, -2..=2).passed());
    }

    #[test]
    fn central_term_value() {
        let alg = gl2();
        let forms = forms_of_degree(&alg, alg.ctx().zero(), &CycScalar::one(12));
        let ext = ExtensionData::new(&forms);
        let r = loop_bracket(&alg, &ext, &LoopElement::mode(0, 2, 12), &LoopElement::mode(0, -2, 12));
        assert!(r.modes.is_empty());
        assert_eq!(r.central.get(&0), Some(&CycScalar::from_integer(2, 12)));
        let r0 = loop_bracket(&alg, &ext, &LoopElement::mode(0, 0, 12), &LoopElement::mode(0, 0, 12));
        assert!(r0.is_zero());
    }

    #[test]
    fn non_invariant_cocycle_fails() {
        let alg = gl2();
        let mut m = Mat::zeros(4, 4, 12);
        m[(0, 0)] = CycScalar::one(12);
        let ext = ExtensionData::from_matrices(vec![(alg.ctx().zero(), m)]);
        assert!(!verify_loop_jacobi(&alg, &ext, -1..=1).passed());
    }
}
