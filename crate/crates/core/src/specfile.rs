//! JSON spec files: a grading, a graded space, generator matrices and
//! optional J form, Cartan designation and published tables.
//!
//! Scalars are always strings in the scalar grammar so nothing is lost to
//! floating point. A spec converts to and from a [`CatalogEntry`].

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::ColorAlgebra;
use crate::catalog::{CatalogEntry, FormKind, GoldenCasimir, GoldenForm};
use crate::error::{AlgebraError, SpecError};
use crate::gmatrix::{GradedMatrix, GradedSpace, JForm, JSymmetry};
use crate::grading::{Bicharacter, GradingContext, GroupElement};
use crate::{parse_scalar, CycScalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub grading: GradingSpec,
    pub space: Vec<BlockSpec>,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_form: Option<JSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cartan: Vec<CartanSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden: Option<GoldenSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingSpec {
    pub orders: Vec<u32>,
    pub omega: FactorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<FactorSpec>,
    /// Block order of group elements; lexicographic when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_order: Option<Vec<String>>,
    #[serde(default = "default_conductor")]
    pub conductor: u32,
}

fn default_conductor() -> u32 {
    crate::DEFAULT_CONDUCTOR
}

/// (α, β) ↦ ζ_root_order^{αᵀ matrix β}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub root_order: u32,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockSpec {
    pub degree: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JSpec {
    /// symmetric, skew, graded-symmetric or graded-skew.
    pub symmetry: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanSpec {
    pub element: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenSpec {
    #[serde(default)]
    pub commutants: Vec<CommutantSpec>,
    #[serde(default)]
    pub forms: Vec<FormSpec>,
    #[serde(default)]
    pub casimirs: Vec<CasimirSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutantSpec {
    pub degree: String,
    pub matrix: Vec<Vec<String>>,
}

/// `kind` is "form" (η^μ) or "inverse" (η_μ); entries are (a, b, value).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub kind: String,
    pub degree: String,
    pub entries: Vec<(String, String, String)>,
}

/// Σ value · a b over the listed triples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CasimirSpec {
    pub degree: String,
    pub products: Vec<(String, String, String)>,
}

/// A spec with every string resolved, before the algebra is assembled.
#[derive(Clone, Debug)]
pub struct ParsedSpec {
    pub name: String,
    pub space: Arc<GradedSpace>,
    pub generators: Vec<(String, GroupElement, GradedMatrix)>,
    pub normalization: CycScalar,
    pub j_form: Option<JForm>,
    pub cartan: Vec<(String, String)>,
    pub expected_commutants: Vec<(GroupElement, GradedMatrix)>,
    pub golden_forms: Vec<GoldenForm>,
    pub golden_casimirs: Vec<GoldenCasimir>,
}

impl ParsedSpec {
    pub fn ctx(&self) -> &Arc<GradingContext> {
        self.space.ctx()
    }

    /// Structure constants and closure; failures here are mathematical.
    pub fn assemble(&self) -> Result<CatalogEntry, AlgebraError> {
        let algebra = ColorAlgebra::from_representation(self.space.clone(), self.generators.clone())?;
        let cartan = self
            .cartan
            .iter()
            .map(|(e, _)| algebra.index_of(e).expect("checked while parsing"))
            .collect();
        Ok(CatalogEntry {
            name: self.name.clone(),
            algebra,
            cartan,
            cartan_labels: self.cartan.iter().map(|(_, l)| l.clone()).collect(),
            j_form: self.j_form.clone(),
            normalization: self.normalization.clone(),
            expected_commutants: self.expected_commutants.clone(),
            golden_forms: self.golden_forms.clone(),
            golden_casimirs: self.golden_casimirs.clone(),
        })
    }
}

fn scalar(text: &str, conductor: u32, context: impl FnOnce() -> String) -> Result<CycScalar, SpecError> {
    parse_scalar(text, conductor).map_err(|source| SpecError::Scalar {
        text: text.to_string(),
        context: context(),
        source,
    })
}

fn matrix(space: &Arc<GradedSpace>, rows: &[Vec<String>], what: &str) -> Result<GradedMatrix, SpecError> {
    let n = space.ctx().conductor();
    let d = space.total();
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(SpecError::Invalid(format!("{what}: matrix must be {d}x{d}")));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, x)| scalar(x, n, || format!("{what} entry ({r},{c})")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedMatrix::from_rows(space, parsed)?)
}

fn matrix_strings(m: &GradedMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn symmetry_name(s: JSymmetry) -> &'static str {
    match s {
        JSymmetry::Symmetric => "symmetric",
        JSymmetry::Skew => "skew",
        JSymmetry::GradedSymmetric => "graded-symmetric",
        JSymmetry::GradedSkew => "graded-skew",
    }
}

fn parse_symmetry(s: &str) -> Result<JSymmetry, SpecError> {
    Ok(match s {
        "symmetric" => JSymmetry::Symmetric,
        "skew" => JSymmetry::Skew,
        "graded-symmetric" => JSymmetry::GradedSymmetric,
        "graded-skew" => JSymmetry::GradedSkew,
        other => return Err(SpecError::Invalid(format!("unknown J symmetry {other:?}"))),
    })
}

fn factor(f: &FactorSpec) -> Bicharacter {
    Bicharacter::new(f.root_order, f.matrix.clone())
}

fn factor_spec(b: &Bicharacter) -> FactorSpec {
    FactorSpec {
        root_order: b.root_order,
        matrix: b.matrix.clone(),
    }
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    /// Resolves every string; errors here are input errors.
    pub fn parse(&self) -> Result<ParsedSpec, SpecError> {
        let g = &self.grading;
        let mut ctx = GradingContext::new(&g.orders, factor(&g.omega), g.sigma.as_ref().map(factor), g.conductor)?;
        if let Some(order) = &g.element_order {
            let els = order.iter().map(|t| ctx.parse_el(t)).collect::<Result<Vec<_>, _>>()?;
            ctx = ctx.with_order(els)?;
        }
        let ctx = Arc::new(ctx);
        let n = ctx.conductor();
        let el = |t: &str| ctx.parse_el(t).map_err(SpecError::from);

        let mut dims = Vec::new();
        for b in &self.space {
            let d = el(&b.degree)?;
            if dims.iter().any(|(e, _)| *e == d) {
                return Err(SpecError::Invalid(format!("degree {} listed twice in space", b.degree)));
            }
            dims.push((d, b.dim));
        }
        let space = GradedSpace::new(ctx.clone(), &dims);
        if space.total() == 0 {
            return Err(SpecError::Invalid("space has dimension 0".into()));
        }

        let generators = self
            .generators
            .iter()
            .map(|gs| Ok((gs.name.clone(), el(&gs.degree)?, matrix(&space, &gs.matrix, &gs.name)?)))
            .collect::<Result<Vec<_>, SpecError>>()?;
        let known = |name: &str| generators.iter().any(|(n, _, _)| n == name);

        let normalization = match &self.normalization {
            Some(t) => scalar(t, n, || "normalization".into())?,
            None => CycScalar::one(n),
        };
        let j_form = match &self.j_form {
            Some(j) => Some(JForm::new(matrix(&space, &j.matrix, "j_form")?, parse_symmetry(&j.symmetry)?)?),
            None => None,
        };
        let mut cartan = Vec::new();
        for c in &self.cartan {
            if !known(&c.element) {
                return Err(SpecError::Invalid(format!("cartan element {} is not a generator", c.element)));
            }
            cartan.push((c.element.clone(), c.label.clone()));
        }

        let golden = self.golden.clone().unwrap_or_default();
        let expected_commutants = golden
            .commutants
            .iter()
            .map(|c| Ok((el(&c.degree)?, matrix(&space, &c.matrix, "commutant")?)))
            .collect::<Result<Vec<_>, SpecError>>()?;
        let triples = |list: &[(String, String, String)], what: &str| {
            list.iter()
                .map(|(a, b, x)| {
                    for name in [a, b] {
                        if !known(name) {
                            return Err(SpecError::Invalid(format!("{what}: unknown basis element {name}")));
                        }
                    }
                    Ok((a.clone(), b.clone(), scalar(x, n, || format!("{what} ({a},{b})"))?))
                })
                .collect::<Result<Vec<_>, SpecError>>()
        };
        let golden_forms = golden
            .forms
            .iter()
            .map(|f| {
                let kind = match f.kind.as_str() {
                    "form" => FormKind::Form,
                    "inverse" => FormKind::Inverse,
                    other => return Err(SpecError::Invalid(format!("unknown form kind {other:?}"))),
                };
                Ok(GoldenForm {
                    kind,
                    degree: el(&f.degree)?,
                    entries: triples(&f.entries, "golden form")?,
                })
            })
            .collect::<Result<Vec<_>, SpecError>>()?;
        let golden_casimirs = golden
            .casimirs
            .iter()
            .map(|c| {
                Ok(GoldenCasimir {
                    degree: el(&c.degree)?,
                    products: triples(&c.products, "golden casimir")?,
                })
            })
            .collect::<Result<Vec<_>, SpecError>>()?;

        Ok(ParsedSpec {
            name: self.name.clone(),
            space,
            generators,
            normalization,
            j_form,
            cartan,
            expected_commutants,
            golden_forms,
            golden_casimirs,
        })
    }

    /// Standalone spec for an entry with a matrix realization.
    pub fn from_entry(e: &CatalogEntry) -> Result<Self, SpecError> {
        let alg = &e.algebra;
        let ctx = alg.ctx();
        let space = alg.space().ok_or_else(|| SpecError::Invalid("entry has no matrix realization".into()))?;
        let fmt = |g: GroupElement| ctx.fmt_el(g);
        let grading = GradingSpec {
            orders: ctx.group().orders().to_vec(),
            omega: factor_spec(ctx.omega_factor()),
            sigma: ctx.sigma_factor().map(factor_spec),
            element_order: Some(ctx.order().iter().map(|&g| fmt(g)).collect()),
            conductor: ctx.conductor(),
        };
        let space_spec = space
            .blocks()
            .into_iter()
            .map(|(g, d)| BlockSpec { degree: fmt(g), dim: d })
            .collect();
        let generators = (0..alg.dim())
            .map(|a| GeneratorSpec {
                name: alg.name(a).to_string(),
                degree: fmt(alg.degree(a)),
                matrix: matrix_strings(alg.matrix(a).expect("realized")),
            })
            .collect();
        let triples = |l: &[(String, String, CycScalar)]| l.iter().map(|(a, b, x)| (a.clone(), b.clone(), x.to_string())).collect();
        let golden = GoldenSpec {
            commutants: e
                .expected_commutants
                .iter()
                .map(|(g, m)| CommutantSpec {
                    degree: fmt(*g),
                    matrix: matrix_strings(m),
                })
                .collect(),
            forms: e
                .golden_forms
                .iter()
                .map(|f| FormSpec {
                    kind: match f.kind {
                        FormKind::Form => "form".into(),
                        FormKind::Inverse => "inverse".into(),
                    },
                    degree: fmt(f.degree),
                    entries: triples(&f.entries),
                })
                .collect(),
            casimirs: e
                .golden_casimirs
                .iter()
                .map(|c| CasimirSpec {
                    degree: fmt(c.degree),
                    products: triples(&c.products),
                })
                .collect(),
        };
        let has_golden = !(golden.commutants.is_empty() && golden.forms.is_empty() && golden.casimirs.is_empty());
        Ok(AlgebraSpec {
            name: e.name.clone(),
            grading,
            space: space_spec,
            generators,
            normalization: Some(e.normalization.to_string()),
            j_form: e.j_form.as_ref().map(|j| JSpec {
                symmetry: symmetry_name(j.symmetry()).into(),
                matrix: matrix_strings(j.matrix()),
            }),
            cartan: e
                .cartan
                .iter()
                .zip(&e.cartan_labels)
                .map(|(&a, l)| CartanSpec {
                    element: alg.name(a).to_string(),
                    label: l.clone(),
                })
                .collect(),
            golden: has_golden.then_some(golden),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_preserves_entry() {
        for e in [catalog::build_qn(2), catalog::build_z32_sl2(), catalog::build_osp(3, 1)] {
            let spec = AlgebraSpec::from_entry(&e).unwrap();
            let back = AlgebraSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
            let rebuilt = back.parse().unwrap().assemble().unwrap();
            assert_eq!(rebuilt.algebra.structure_constants(), e.algebra.structure_constants());
            assert_eq!(rebuilt.cartan, e.cartan);
            assert_eq!(rebuilt.normalization, e.normalization);
            assert_eq!(AlgebraSpec::from_entry(&rebuilt).unwrap(), spec);
        }
    }

    #[test]
    fn input_errors() {
        let spec = AlgebraSpec::from_entry(&catalog::build_qn(1)).unwrap();
        let mut bad = spec.clone();
        bad.generators[0].matrix[0][0] = "1/0".into();
        assert!(matches!(bad.parse(), Err(SpecError::Scalar { .. })));
        let mut bad = spec.clone();
        bad.generators[0].matrix.pop();
        assert!(matches!(bad.parse(), Err(SpecError::Invalid(_))));
        let mut bad = spec.clone();
        bad.generators[0].degree = "02".into();
        assert!(matches!(bad.parse(), Err(SpecError::Grading(_))));
        let text = spec.to_json();
        assert!(matches!(AlgebraSpec::from_json(&text[..text.len() / 2]), Err(SpecError::Json(_))));
    }

    #[test]
    fn wrong_degree_is_an_algebra_error() {
        let mut spec = AlgebraSpec::from_entry(&catalog::build_qn(1)).unwrap();
        spec.generators[1].degree = "10".into();
        let parsed = spec.parse().unwrap();
        assert!(matches!(parsed.assemble(), Err(AlgebraError::Degree { .. })));
    }
}
