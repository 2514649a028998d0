//! Degree ≤ 2 elements of the enveloping algebra in normal order.

use std::collections::BTreeMap;

use super::ColorAlgebra;
use crate::gmatrix::GradedMatrix;
use crate::grading::GroupElement;
use crate::CycScalar;

/// constant + Σ c_a X_a + Σ_{a ≤ b} c_ab X_a X_b, normal-ordered by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElement {
    conductor: u32,
    pub constant: CycScalar,
    pub linear: BTreeMap<usize, CycScalar>,
    pub quadratic: BTreeMap<(usize, usize), CycScalar>,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, CycScalar>, key: K, x: &CycScalar) {
    if x.is_zero() {
        return;
    }
    let slot = map.entry(key);
    match slot {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(x.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += x;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl QuadElement {
    pub fn zero(conductor: u32) -> Self {
        QuadElement {
            conductor,
            constant: CycScalar::zero(conductor),
            linear: BTreeMap::new(),
            quadratic: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        let mut q = Self::zero(c.conductor());
        q.constant = c;
        q
    }

    pub fn generator(alg: &ColorAlgebra, a: usize) -> Self {
        let mut q = Self::zero(alg.ctx().conductor());
        q.add_linear(a, &CycScalar::one(q.conductor));
        q
    }

    /// Normal-orders a raw list of coefficient · X_a X_b products.
    pub fn normal_order(alg: &ColorAlgebra, raw: &[(usize, usize, CycScalar)]) -> Self {
        let mut q = Self::zero(alg.ctx().conductor());
        for (a, b, x) in raw {
            q.add_product(alg, *a, *b, x);
        }
        q
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn add_constant(&mut self, x: &CycScalar) {
        self.constant += x;
    }

    pub fn add_linear(&mut self, a: usize, x: &CycScalar) {
        add_into(&mut self.linear, a, x);
    }

    /// Adds x · X_a X_b, rewriting into normal order.
    pub fn add_product(&mut self, alg: &ColorAlgebra, a: usize, b: usize, x: &CycScalar) {
        if x.is_zero() {
            return;
        }
        let ctx = alg.ctx();
        if a < b {
            add_into(&mut self.quadratic, (a, b), x);
            return;
        }
        let (da, db) = (alg.degree(a), alg.degree(b));
        if a == b {
            if ctx.omega(da, da).is_one() {
                add_into(&mut self.quadratic, (a, a), x);
            } else {
                // 2 X_a² = ⟦X_a, X_a⟧
                let half = x.scale_rational(&num_rational::BigRational::new(1.into(), 2.into()));
                for (c, y) in alg.f(a, a) {
                    add_into(&mut self.linear, *c, &(&half * y));
                }
            }
            return;
        }
        // X_a X_b = ω(α,β) X_b X_a + ⟦X_a, X_b⟧ with b < a
        add_into(&mut self.quadratic, (b, a), &(x * ctx.omega(da, db)));
        for (c, y) in alg.f(a, b) {
            add_into(&mut self.linear, *c, &(x * y));
        }
    }

    pub fn add_assign(&mut self, other: &QuadElement) {
        self.constant += &other.constant;
        for (k, x) in &other.linear {
            add_into(&mut self.linear, *k, x);
        }
        for (k, x) in &other.quadratic {
            add_into(&mut self.quadratic, *k, x);
        }
    }

    pub fn scale(&self, s: &CycScalar) -> QuadElement {
        let mut out = Self::zero(self.conductor);
        out.constant = &self.constant * s;
        for (k, x) in &self.linear {
            add_into(&mut out.linear, *k, &(x * s));
        }
        for (k, x) in &self.quadratic {
            add_into(&mut out.quadratic, *k, &(x * s));
        }
        out
    }

    pub fn quadratic_coeff(&self, a: usize, b: usize) -> CycScalar {
        self.quadratic
            .get(&(a.min(b), a.max(b)))
            .cloned()
            .unwrap_or_else(|| CycScalar::zero(self.conductor))
    }

    /// Γ-degrees of the nonconstant monomials.
    pub fn monomial_degrees(&self, alg: &ColorAlgebra) -> Vec<GroupElement> {
        let ctx = alg.ctx();
        let mut out: Vec<GroupElement> = self
            .linear
            .keys()
            .map(|&a| alg.degree(a))
            .chain(self.quadratic.keys().map(|&(a, b)| ctx.add(alg.degree(a), alg.degree(b))))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Human-readable form using the algebra's basis names.
    pub fn display(&self, alg: &ColorAlgebra) -> String {
        let mut terms = Vec::new();
        if !self.constant.is_zero() {
            terms.push(format!("({})", self.constant));
        }
        for (a, x) in &self.linear {
            terms.push(format!("({x})*{}", alg.name(*a)));
        }
        for ((a, b), x) in &self.quadratic {
            terms.push(format!("({x})*{}*{}", alg.name(*a), alg.name(*b)));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// ⟦X_a, q⟧ by the color Leibniz rule, normal-ordered.
pub fn bracket_generator_quadratic(alg: &ColorAlgebra, a: usize, q: &QuadElement) -> QuadElement {
    let ctx = alg.ctx();
    let da = alg.degree(a);
    let mut out = QuadElement::zero(q.conductor);
    for (b, x) in &q.linear {
        for (c, y) in alg.f(a, *b) {
            out.add_linear(*c, &(x * y));
        }
    }
    for (&(b, c), x) in &q.quadratic {
        // ⟦X_a, X_b X_c⟧ = ⟦X_a,X_b⟧X_c + ω(α,β) X_b⟦X_a,X_c⟧
        for (d, y) in alg.f(a, b) {
            out.add_product(alg, *d, c, &(x * y));
        }
        let w = x * ctx.omega(da, alg.degree(b));
        for (d, y) in alg.f(a, c) {
            out.add_product(alg, b, *d, &(&w * y));
        }
    }
    out
}

/// ρ(q) as a matrix; `None` without a realization.
pub fn quad_to_matrix(alg: &ColorAlgebra, q: &QuadElement) -> Option<GradedMatrix> {
    let space = alg.space()?;
    let mut m = GradedMatrix::identity(space).scale(&q.constant);
    for (a, x) in &q.linear {
        m = &m + &alg.matrix(*a)?.scale(x);
    }
    for (&(a, b), x) in &q.quadratic {
        let p = alg.matrix(a)? * alg.matrix(b)?;
        m = &m + &p.scale(x);
    }
    Some(m)
}
