//! Plain-text reports. Ordering follows basis order, block order and
//! lexicographic pairs, so output is byte-stable.

use std::ops::RangeInclusive;

use colorlie::catalog::{compare_golden_form, extract_roots, golden_casimir_element, FormKind};
use colorlie::linalg::Mat;
use colorlie::{
    bilinear_form, build_casimir, check_antisymmetry, check_form_properties, check_jacobi, check_loop_antisymmetry,
    check_support, ctr_permutation_check, invert_form, j_membership, solve_commutants, validate_factor,
    verify_centrality, verify_loop_jacobi, CatalogEntry, ColorAlgebra, Commutant, CycScalar, ExtensionData,
    FormError, GradedForm, GradedMatrix, GroupElement, InverseForm, LawCheck, LawTally, QuadElement, Verdict,
};

pub const DEFAULT_MODES: RangeInclusive<i64> = -2..=2;

/// Report text plus whether any law failed.
#[derive(Debug, Default)]
pub struct Report {
    pub text: String,
    pub failed: bool,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn blank(&mut self) {
        self.text.push('\n');
    }

    fn heading(&mut self, s: &str) {
        self.line(format!("== {s} =="));
    }

    fn verdict(&mut self, v: &Verdict) {
        for c in &v.checks {
            self.check(c);
        }
    }

    fn check(&mut self, c: &LawCheck) {
        self.failed |= !c.passed();
        self.line(format!("  {c}"));
    }

    pub fn append_report(&mut self, other: Report) {
        self.text.push_str(&other.text);
        self.failed |= other.failed;
    }

    pub fn push_line(&mut self, s: &str) {
        self.line(s);
    }

    /// Closing verdict line.
    pub fn finish(&mut self) {
        let v = if self.failed { "FAIL" } else { "PASS" };
        self.line(format!("result: {v}"));
    }
}

fn fmt_el(alg: &ColorAlgebra, g: GroupElement) -> String {
    alg.ctx().fmt_el(g)
}

fn matrix_lines(r: &mut Report, m: &GradedMatrix) {
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        r.line(format!("    [{}]", cells.join(", ")));
    }
}

fn pair_entries(alg: &ColorAlgebra, m: &Mat, label: &str) -> Vec<String> {
    let d = alg.dim();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let x = &m[(a, b)];
            if !x.is_zero() {
                out.push(format!("    {label}({}, {}) = {x}", alg.name(a), alg.name(b)));
            }
        }
    }
    out
}

pub fn header(e: &CatalogEntry) -> Report {
    let alg = &e.algebra;
    let ctx = alg.ctx();
    let mut r = Report::default();
    r.line(format!("# colorlie report: {}", e.name));
    let orders: Vec<String> = ctx.group().orders().iter().map(|o| format!("Z{o}")).collect();
    r.line(format!("group: {}", orders.join(" x ")));
    r.line(format!("conductor: {}", ctx.conductor()));
    let om = ctx.omega_factor();
    r.line(format!("omega: root order {}, matrix {:?}", om.root_order, om.matrix));
    if let Some(s) = ctx.sigma_factor() {
        r.line(format!("sigma: root order {}, matrix {:?}", s.root_order, s.matrix));
    }
    let order: Vec<String> = ctx.order().iter().map(|&g| ctx.fmt_el(g)).collect();
    r.line(format!("block order: {}", order.join(" ")));
    if let Some(sp) = alg.space() {
        let dims: Vec<String> = sp.blocks().iter().map(|(g, d)| format!("V{}={d}", ctx.fmt_el(*g))).collect();
        r.line(format!("representation: dim {} ({})", sp.total(), dims.join(", ")));
    }
    r.line(format!("dimension: {}", alg.dim()));
    r.line(format!("normalization: {}", e.normalization));
    r.line("normal order: basis order");
    r.line("basis:");
    for a in 0..alg.dim() {
        r.line(format!("  {a:>3} {} [{}]", alg.name(a), fmt_el(alg, alg.degree(a))));
    }
    r.blank();
    r
}

/// Factor laws, closure laws, color trace identity and J membership.
pub fn validation(e: &CatalogEntry) -> Report {
    let alg = &e.algebra;
    let mut r = Report::default();
    r.heading("validation");
    r.verdict(&validate_factor(alg.ctx()));
    r.verdict(&check_support(alg));
    r.verdict(&check_antisymmetry(alg));
    r.verdict(&check_jacobi(alg));
    if let Some(mats) = alg.matrices() {
        let mut t = LawTally::new("ctr(XY) = omega(a,b) ctr(YX)");
        for (a, x) in mats.iter().enumerate() {
            for (b, y) in mats.iter().enumerate() {
                let ok = ctr_permutation_check(x, y).unwrap_or(false);
                t.record(ok, || format!("{} {}", alg.name(a), alg.name(b)));
            }
        }
        r.check(&t.finish());
    }
    if let (Some(j), Some(mats)) = (&e.j_form, alg.matrices()) {
        let mut t = LawTally::new(format!("J-membership ({} J)", j.symmetry().name()));
        for (a, x) in mats.iter().enumerate() {
            match j_membership(x, j) {
                Ok(parts) => {
                    for p in parts {
                        t.record(p.witness.is_none(), || {
                            format!("{} part {} at {:?}", alg.name(a), fmt_el(alg, p.degree), p.witness.unwrap())
                        });
                    }
                }
                Err(err) => t.record(false, || format!("{}: {err}", alg.name(a))),
            }
        }
        r.check(&t.finish());
    }
    if !e.cartan.is_empty() {
        let mut t = LawTally::new("Cartan elements have degree 00 and commute");
        for &h in &e.cartan {
            for &k in &e.cartan {
                let ok = alg.degree(h) == alg.ctx().zero() && alg.f(h, k).is_empty();
                t.record(ok, || format!("{} {}", alg.name(h), alg.name(k)));
            }
        }
        r.check(&t.finish());
    }
    r.blank();
    r
}

pub fn commutants(e: &CatalogEntry, degrees: &[GroupElement]) -> (Report, Vec<Commutant>) {
    let alg = &e.algebra;
    let mut r = Report::default();
    r.heading("commutants");
    let mut out = Vec::new();
    for &g in degrees {
        let c = solve_commutants(alg, g);
        r.line(format!("degree {}: dim {}", fmt_el(alg, g), c.dim()));
        for (k, m) in c.basis.iter().enumerate() {
            r.line(format!("  M{}#{}:", fmt_el(alg, g), k + 1));
            matrix_lines(&mut r, m);
        }
        if !e.expected_commutants.is_empty() {
            let expected = e.expected_commutants.iter().find(|(d, _)| *d == g);
            let ok = match expected {
                None => c.dim() == 0,
                Some((_, m)) => c.dim() == 1 && c.basis[0] == *m,
            };
            r.check(&LawCheck {
                law: format!("commutant {} matches published", fmt_el(alg, g)),
                instances: 1,
                witness: (!ok).then(|| format!("dim {}", c.dim())),
            });
        }
        out.push(c);
    }
    r.blank();
    (r, out)
}

/// Everything derived from one commutant: η^μ, η_μ and C_μ.
pub struct FormOutcome {
    pub form: GradedForm,
    pub inverse: Option<InverseForm>,
    pub casimir: Option<QuadElement>,
}

pub fn form_section(e: &CatalogEntry, m: &GradedMatrix, label: &str, s: &CycScalar, golden: bool) -> (Report, FormOutcome) {
    let alg = &e.algebra;
    let mut r = Report::default();
    let form = bilinear_form(alg, m, s).expect("commutant from solver");
    let mu = fmt_el(alg, form.degree);
    r.line(format!("-- eta^{mu} from {label}, normalization {s} --"));
    r.line(format!("  rank {} of {}", form.rank(), alg.dim()));
    let inverse = match invert_form(alg, &form) {
        Ok(inv) => Some(inv),
        Err(FormError::Degenerate { .. }) => None,
        Err(err) => panic!("unexpected form error: {err}"),
    };
    r.line(format!("  eta^{mu} entries:"));
    let entries = pair_entries(alg, &form.matrix, &format!("eta^{mu}"));
    if entries.is_empty() {
        r.line("    (all zero)");
    }
    for l in entries {
        r.line(l);
    }
    r.verdict(&check_form_properties(alg, &form, inverse.as_ref()));
    let goldens: Vec<_> = if golden {
        e.golden_forms.iter().filter(|g| g.degree == form.degree).collect()
    } else {
        Vec::new()
    };
    for g in goldens.iter().filter(|g| g.kind == FormKind::Form) {
        r.check(&compare_golden_form(alg, &form.matrix, g));
    }
    let mut casimir = None;
    match &inverse {
        None => {
            r.line(format!("  degenerate: no Casimir at degree {mu}"));
            if goldens.iter().any(|g| g.kind == FormKind::Inverse) {
                r.check(&LawCheck {
                    law: format!("eta_{mu} matches published table"),
                    instances: 0,
                    witness: Some("form is degenerate".into()),
                });
            }
        }
        Some(inv) => {
            r.line(format!("  eta_{mu} entries:"));
            for l in pair_entries(alg, &inv.matrix, &format!("eta_{mu}")) {
                r.line(l);
            }
            for g in goldens.iter().filter(|g| g.kind == FormKind::Inverse) {
                r.check(&compare_golden_form(alg, &inv.matrix, g));
            }
            let c = build_casimir(alg, inv);
            r.line(format!("  C{mu} = {}", c.display(alg)));
            r.verdict(&verify_centrality(alg, &c));
            if golden {
                for gc in e.golden_casimirs.iter().filter(|gc| gc.degree == form.degree) {
                    let want = golden_casimir_element(alg, gc);
                    r.check(&LawCheck {
                        law: format!("C{mu} matches published expression"),
                        instances: 1,
                        witness: (want != c).then(|| format!("published {}", want.display(alg))),
                    });
                }
            }
            casimir = Some(c);
        }
    }
    r.blank();
    (
        r,
        FormOutcome {
            form,
            inverse,
            casimir,
        },
    )
}

pub fn forms(e: &CatalogEntry, comms: &[Commutant], s: &CycScalar) -> (Report, Vec<FormOutcome>) {
    let alg = &e.algebra;
    let mut r = Report::default();
    r.heading("forms and Casimirs");
    let mut out = Vec::new();
    for c in comms {
        for (k, m) in c.basis.iter().enumerate() {
            let label = format!("M{}#{}", fmt_el(alg, c.degree), k + 1);
            let published = e.expected_commutants.iter().any(|(d, pm)| *d == c.degree && pm == m);
            let (sec, o) = form_section(e, m, &label, s, published);
            r.append_report(sec);
            out.push(o);
        }
    }
    (r, out)
}

pub fn roots(e: &CatalogEntry) -> Report {
    let alg = &e.algebra;
    let mut r = Report::default();
    if e.cartan.is_empty() {
        return r;
    }
    r.heading("roots");
    let names: Vec<&str> = e.cartan.iter().map(|&h| alg.name(h)).collect();
    r.line(format!("cartan: {}", names.join(" ")));
    r.line(format!("dual basis: {}", e.cartan_labels.join(" ")));
    let rep = extract_roots(e);
    for (a, root) in &rep.roots {
        r.line(format!("  {} [{}]: {}", alg.name(*a), fmt_el(alg, alg.degree(*a)), root.format(&rep.labels)));
    }
    r.line("root spaces:");
    for (root, els) in rep.spaces() {
        let list: Vec<String> = els.iter().map(|&a| format!("{}[{}]", alg.name(a), fmt_el(alg, alg.degree(a)))).collect();
        r.line(format!("  {}: {}", root.format(&rep.labels), list.join(" ")));
    }
    let zero = rep.zero_root_elements();
    let non_cartan: Vec<String> = zero
        .iter()
        .filter(|a| !e.cartan.contains(a))
        .map(|&a| format!("{}[{}]", alg.name(a), fmt_el(alg, alg.degree(a))))
        .collect();
    r.line(format!("zero roots outside the Cartan set: {} ({})", non_cartan.len(), non_cartan.join(" ")));
    r.check(&LawCheck {
        law: "every basis element is an ad-eigenvector".into(),
        instances: alg.dim() as u64,
        witness: rep.failures.first().cloned(),
    });
    r.blank();
    r
}

pub fn loop_section(e: &CatalogEntry, outcomes: &[FormOutcome], modes: RangeInclusive<i64>) -> Report {
    let alg = &e.algebra;
    let mut r = Report::default();
    r.heading("loop extension");
    let forms: Vec<GradedForm> = outcomes.iter().map(|o| o.form.clone()).collect();
    let ext = ExtensionData::new(&forms);
    let names: Vec<String> = (0..ext.charges().len()).map(|k| ext.charge_name(alg, k)).collect();
    r.line(format!("active central charges: {}", if names.is_empty() { "none".into() } else { names.join(" ") }));
    r.line(format!("modes: {}..{}", modes.start(), modes.end()));
    r.verdict(&check_loop_antisymmetry(alg, &ext, modes.clone()));
    r.verdict(&verify_loop_jacobi(alg, &ext, modes));
    r.blank();
    r
}

/// The complete document: validation, commutants, forms, Casimirs, roots
/// and the loop extension.
pub fn full_report(e: &CatalogEntry, s: &CycScalar, modes: RangeInclusive<i64>) -> Report {
    let alg = &e.algebra;
    let mut r = header(e);
    let v = validation(e);
    let structural_ok = !v.failed;
    r.append_report(v);
    if structural_ok && alg.space().is_some() {
        let degrees: Vec<GroupElement> = alg.ctx().order().to_vec();
        let (c, comms) = commutants(e, &degrees);
        r.append_report(c);
        let (f, outcomes) = forms(e, &comms, s);
        r.append_report(f);
        r.append_report(roots(e));
        r.append_report(loop_section(e, &outcomes, modes));
    }
    r.finish();
    r
}
