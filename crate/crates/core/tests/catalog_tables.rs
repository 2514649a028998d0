use colorlie::catalog::{self, compare_golden_form, golden_casimir_element, CatalogEntry, FormKind};
use colorlie::{bilinear_form, build_casimir, check_form_properties, invert_form, solve_commutants, verify_centrality, LawCheck};

/// Every check for one entry: commutants, forms, inverses and Casimirs.
fn table_checks(e: &CatalogEntry) -> Vec<LawCheck> {
    let alg = &e.algebra;
    let ctx = alg.ctx();
    let mut out = Vec::new();
    for g in ctx.group().elements() {
        let comm = solve_commutants(alg, g);
        let expected = e.expected_commutants.iter().find(|(d, _)| *d == g);
        let law = format!("commutant of degree {}", ctx.fmt_el(g));
        let ok = match expected {
            None => comm.dim() == 0,
            Some((_, m)) => comm.dim() == 1 && comm.basis[0] == *m,
        };
        out.push(LawCheck {
            law,
            instances: 1,
            witness: (!ok).then(|| format!("dimension {}", comm.dim())),
        });
        let Some((_, m)) = expected else { continue };
        let form = bilinear_form(alg, m, &e.normalization).unwrap();
        let inv = invert_form(alg, &form).ok();
        out.extend(check_form_properties(alg, &form, inv.as_ref()).checks);
        for golden in e.golden_forms.iter().filter(|gf| gf.degree == form.degree) {
            let computed = match (golden.kind, &inv) {
                (FormKind::Form, _) => &form.matrix,
                (FormKind::Inverse, Some(inv)) => &inv.matrix,
                (FormKind::Inverse, None) => {
                    out.push(LawCheck {
                        law: format!("eta^{} invertible", ctx.fmt_el(g)),
                        instances: 1,
                        witness: Some(format!("rank {}", form.rank())),
                    });
                    continue;
                }
            };
            out.push(compare_golden_form(alg, computed, golden));
        }
        let Some(inv) = inv else { continue };
        let c = build_casimir(alg, &inv);
        out.extend(verify_centrality(alg, &c).checks);
        for gc in e.golden_casimirs.iter().filter(|gc| gc.degree == form.degree) {
            let want = golden_casimir_element(alg, gc);
            out.push(LawCheck {
                law: format!("C{} matches published expression", ctx.fmt_el(gc.degree)),
                instances: 1,
                witness: (want != c).then(|| format!("computed {} / published {}", c.display(alg), want.display(alg))),
            });
        }
    }
    // every published form must have been compared
    for gf in &e.golden_forms {
        assert!(
            e.expected_commutants.iter().any(|(d, _)| *d == gf.degree) || gf.entries.is_empty(),
            "{} {}{} has no commutant",
            e.name,
            gf.kind.label(),
            ctx.fmt_el(gf.degree)
        );
    }
    out
}

fn assert_all(e: &CatalogEntry) {
    let failures: Vec<String> = table_checks(e)
        .into_iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: {} ({})", e.name, c.law, c.witness.unwrap_or_default()))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn qn_tables() {
    for n in 1..=3 {
        assert_all(&catalog::build_qn(n));
    }
}

#[test]
fn z32_sl2_tables() {
    assert_all(&catalog::build_z32_sl2());
}

#[test]
fn osp_tables() {
    for (m, n) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        assert_all(&catalog::build_osp(m, n));
    }
}

#[test]
fn perturbed_table_entry_is_caught() {
    let mut e = catalog::build_osp(2, 1);
    let gf = e
        .golden_forms
        .iter_mut()
        .find(|gf| gf.kind == FormKind::Inverse && !gf.entries.is_empty())
        .unwrap();
    let x = &mut gf.entries[0].2;
    *x = &*x + &colorlie::CycScalar::one(12);
    let failed: Vec<String> = table_checks(&e).into_iter().filter(|c| !c.passed()).map(|c| c.law).collect();
    assert_eq!(failed, vec!["eta_00 matches published table".to_string()]);
}

#[test]
fn perturbed_casimir_is_caught() {
    let mut e = catalog::build_z32_sl2();
    e.golden_casimirs[1].products[0].2 = colorlie::CycScalar::from_integer(3, 12);
    let failed: Vec<String> = table_checks(&e).into_iter().filter(|c| !c.passed()).map(|c| c.law).collect();
    assert_eq!(failed, vec!["C11 matches published expression".to_string()]);
}
