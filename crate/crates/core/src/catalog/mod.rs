//! Built-in example algebras with their published tables.

mod osp;
mod qn;
mod roots;
mod sl2;

pub use osp::{build_osp, osp_block_conditions, osp_block_j};
pub use qn::build_qn;
pub use roots::{extract_roots, RootReport, RootVector};
pub use sl2::build_z32_sl2;

use std::collections::BTreeMap;

use crate::algebra::{ColorAlgebra, QuadElement};
use crate::error::SpecError;
use crate::gmatrix::{GradedMatrix, JForm};
use crate::grading::GroupElement;
use crate::linalg::Mat;
use crate::verdict::{LawCheck, LawTally};
use crate::CycScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormKind {
    /// η^μ
    Form,
    /// η_μ
    Inverse,
}

impl FormKind {
    pub fn label(self) -> &'static str {
        match self {
            FormKind::Form => "eta^",
            FormKind::Inverse => "eta_",
        }
    }
}

/// Published nonzero entries of η^μ or η_μ. Unlisted entries implied by
/// the ω-symmetry are added before comparing; everything else must vanish.
#[derive(Clone, Debug)]
pub struct GoldenForm {
    pub kind: FormKind,
    pub degree: GroupElement,
    pub entries: Vec<(String, String, CycScalar)>,
}

/// A published Casimir as a raw (unordered) sum of products.
#[derive(Clone, Debug)]
pub struct GoldenCasimir {
    pub degree: GroupElement,
    pub products: Vec<(String, String, CycScalar)>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: ColorAlgebra,
    /// Degree-00 commuting basis elements, with dual-basis labels.
    pub cartan: Vec<usize>,
    pub cartan_labels: Vec<String>,
    /// Form used for the subalgebra membership test.
    pub j_form: Option<JForm>,
    pub normalization: CycScalar,
    /// Published commutant per degree; degrees absent here have none.
    pub expected_commutants: Vec<(GroupElement, GradedMatrix)>,
    pub golden_forms: Vec<GoldenForm>,
    pub golden_casimirs: Vec<GoldenCasimir>,
}

/// Catalog lookup by name: "qn", "z32-sl2", "osp".
pub fn build(name: &str, m: Option<usize>, n: Option<usize>) -> Result<CatalogEntry, SpecError> {
    match name {
        "qn" | "q" => {
            let n = n.unwrap_or(1);
            if n == 0 {
                return Err(SpecError::Invalid("q(n) needs n >= 1".into()));
            }
            Ok(build_qn(n))
        }
        "z32-sl2" | "sl2" => Ok(build_z32_sl2()),
        "osp" => {
            let (m, n) = (m.unwrap_or(1), n.unwrap_or(1));
            if m == 0 || n == 0 {
                return Err(SpecError::Invalid("osp(m|2n) needs m, n >= 1".into()));
            }
            Ok(build_osp(m, n))
        }
        other => Err(SpecError::UnknownCatalog(other.to_string())),
    }
}

fn index(alg: &ColorAlgebra, name: &str) -> usize {
    alg.index_of(name).unwrap_or_else(|| panic!("unknown basis element {name}"))
}

/// Listed entries plus those forced by η(b,a) = ω(μ,μ)ω(α,β)η(a,b).
pub fn complete_by_symmetry(
    alg: &ColorAlgebra,
    golden: &GoldenForm,
) -> Result<BTreeMap<(usize, usize), CycScalar>, String> {
    let ctx = alg.ctx();
    let mu = golden.degree;
    let mut out = BTreeMap::new();
    let mut listed = BTreeMap::new();
    for (a, b, x) in &golden.entries {
        let (a, b) = (index(alg, a), index(alg, b));
        if let Some(prev) = listed.insert((a, b), x.clone()) {
            if prev != *x {
                return Err(format!("{} listed twice with different values", pair(alg, a, b)));
            }
        }
    }
    for ((a, b), x) in &listed {
        out.insert((*a, *b), x.clone());
    }
    for ((a, b), x) in &listed {
        let w = ctx.omega(mu, mu) * ctx.omega(alg.degree(*a), alg.degree(*b));
        let y = &w * x;
        match listed.get(&(*b, *a)) {
            Some(z) if *z != y => {
                return Err(format!(
                    "listed {} = {z} contradicts symmetry partner value {y}",
                    pair(alg, *b, *a)
                ))
            }
            _ => {
                out.insert((*b, *a), y);
            }
        }
    }
    Ok(out)
}

fn pair(alg: &ColorAlgebra, a: usize, b: usize) -> String {
    format!("({},{})", alg.name(a), alg.name(b))
}

/// Entry-by-entry comparison of a computed matrix with a golden table.
pub fn compare_golden_form(alg: &ColorAlgebra, computed: &Mat, golden: &GoldenForm) -> LawCheck {
    let law = format!(
        "{}{} matches published table",
        golden.kind.label(),
        alg.ctx().fmt_el(golden.degree)
    );
    let expected = match complete_by_symmetry(alg, golden) {
        Ok(e) => e,
        Err(w) => {
            return LawCheck {
                law,
                instances: 0,
                witness: Some(w),
            }
        }
    };
    let zero = alg.ctx().scalar_zero();
    let mut t = LawTally::new(law);
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let want = expected.get(&(a, b)).unwrap_or(&zero);
            let got = &computed[(a, b)];
            t.record(got == want, || format!("{}: computed {got}, published {want}", pair(alg, a, b)));
        }
    }
    t.finish()
}

/// Normal-ordered form of a published Casimir.
pub fn golden_casimir_element(alg: &ColorAlgebra, golden: &GoldenCasimir) -> QuadElement {
    let raw: Vec<(usize, usize, CycScalar)> = golden
        .products
        .iter()
        .map(|(a, b, x)| (index(alg, a), index(alg, b), x.clone()))
        .collect();
    QuadElement::normal_order(alg, &raw)
}

/// Pushes x·(ab) for a product, and for {a,b} or [a,b] both orderings.
pub(crate) struct ProductList {
    pub items: Vec<(String, String, CycScalar)>,
    conductor: u32,
}

impl ProductList {
    pub fn new(conductor: u32) -> Self {
        ProductList {
            items: Vec::new(),
            conductor,
        }
    }

    pub fn int(&self, k: i64) -> CycScalar {
        CycScalar::from_integer(k, self.conductor)
    }

    pub fn product(&mut self, x: CycScalar, a: &str, b: &str) {
        self.items.push((a.to_string(), b.to_string(), x));
    }

    pub fn anticommutator(&mut self, x: CycScalar, a: &str, b: &str) {
        self.product(x.clone(), a, b);
        self.product(x, b, a);
    }

    pub fn commutator(&mut self, x: CycScalar, a: &str, b: &str) {
        self.product(x.clone(), a, b);
        self.product(-x, b, a);
    }
}
