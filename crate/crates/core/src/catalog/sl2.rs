//! The ℤ₃²-graded extension of sl(2) and its 6-dimensional representation.

use std::sync::Arc;

use super::{CatalogEntry, FormKind, GoldenCasimir, GoldenForm, ProductList};
use crate::algebra::ColorAlgebra;
use crate::gmatrix::{GradedMatrix, GradedSpace};
use crate::grading::{GradingContext, GroupElement};
use crate::{parse_scalar, CycScalar};

const N: u32 = crate::DEFAULT_CONDUCTOR;

/// Basis order of the algebra.
pub const BASIS: [&str; 9] = ["H00", "H11", "H22", "E+01", "E+12", "E+20", "E-02", "E-21", "E-10"];

const X: &str = "zeta3";
const X2: &str = "zeta3^2";

fn s(text: &str) -> CycScalar {
    parse_scalar(text, N).expect("literal scalar")
}

/// 3×3 blocks placed at (top-left, bottom-right) or off-diagonal corners.
fn blocks(space: &Arc<GradedSpace>, tl: Option<[[&str; 3]; 3]>, tr: Option<[[&str; 3]; 3]>, bl: Option<[[&str; 3]; 3]>, br: Option<[[&str; 3]; 3]>) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(space);
    for (blk, (r0, c0)) in [(tl, (0, 0)), (tr, (0, 3)), (bl, (3, 0)), (br, (3, 3))] {
        if let Some(b) = blk {
            for (r, row) in b.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    let v = s(x);
                    if !v.is_zero() {
                        m.set(r0 + r, c0 + c, v);
                    }
                }
            }
        }
    }
    m
}

fn context() -> Arc<GradingContext> {
    let ctx = GradingContext::z3_squared();
    let order: Vec<GroupElement> = ["00", "11", "22", "02", "21", "10", "01", "12", "20"]
        .iter()
        .map(|t| ctx.parse_el(t).unwrap())
        .collect();
    Arc::new(ctx.with_order(order).expect("complete order"))
}

pub fn build_z32_sl2() -> CatalogEntry {
    let ctx = context();
    let g = |t: &str| ctx.parse_el(t).unwrap();
    let space = GradedSpace::new(
        ctx.clone(),
        &["00", "11", "22", "02", "21", "10"].map(|t| (g(t), 1)),
    );
    let sp = &space;
    let mats: [GradedMatrix; 9] = [
        blocks(sp, Some([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]), None, None, Some([["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]])),
        blocks(sp, Some([["0", "0", X2], ["1", "0", "0"], ["0", X, "0"]]), None, None, Some([["0", "-zeta3", "0"], ["0", "0", "-1"], ["-zeta3^2", "0", "0"]])),
        blocks(sp, Some([["0", X2, "0"], ["0", "0", X], ["1", "0", "0"]]), None, None, Some([["0", "0", "-1"], ["-zeta3", "0", "0"], ["0", "-zeta3^2", "0"]])),
        blocks(sp, None, Some([["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]), None, None),
        blocks(sp, None, Some([["0", X, "0"], [X2, "0", "0"], ["0", "0", "1"]]), None, None),
        blocks(sp, None, Some([["0", "0", "1"], ["0", X2, "0"], [X, "0", "0"]]), None, None),
        blocks(sp, None, None, Some([["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]), None),
        blocks(sp, None, None, Some([["0", X2, "0"], ["1", "0", "0"], ["0", "0", X]]), None),
        blocks(sp, None, None, Some([["0", "0", X2], ["0", X, "0"], ["1", "0", "0"]]), None),
    ];
    let gens = BASIS
        .iter()
        .zip(mats)
        .map(|(name, m)| (name.to_string(), g(&name[name.len() - 2..]), m))
        .collect();
    let algebra = ColorAlgebra::from_representation(space.clone(), gens).expect("Z3^2-sl(2) closes");

    let m11 = blocks(sp, Some([["0", "0", "1"], [X, "0", "0"], ["0", X2, "0"]]), None, None, Some([["0", X2, "0"], ["0", "0", X], ["1", "0", "0"]]));
    let m22 = blocks(sp, Some([["0", "1", "0"], ["0", "0", X2], [X, "0", "0"]]), None, None, Some([["0", "0", X], [X2, "0", "0"], ["0", "1", "0"]]));
    let expected_commutants = vec![(g("00"), GradedMatrix::identity(sp)), (g("11"), m11), (g("22"), m22)];

    let e = |a: &str, b: &str, x: &str| (a.to_string(), b.to_string(), s(x));
    let form = |kind, deg: &str, entries: Vec<(String, String, CycScalar)>| GoldenForm {
        kind,
        degree: g(deg),
        entries,
    };
    let golden_forms = vec![
        form(FormKind::Form, "00", vec![
            e("H00", "H00", "1"),
            e("H11", "H22", X2), e("H22", "H11", X2),
            e("E+01", "E-02", "1/2"), e("E-02", "E+01", "1/2"),
            e("E+20", "E-10", "1/2"), e("E-10", "E+20", "1/2"),
            e("E+12", "E-21", "1/2*zeta3"), e("E-21", "E+12", "1/2*zeta3"),
        ]),
        form(FormKind::Form, "11", vec![
            e("H00", "H11", "1"), e("H11", "H00", "1"),
            e("H22", "H22", X),
            e("E+12", "E-02", "1/2"), e("E+20", "E-21", "1/2"),
            e("E+01", "E-10", "1/2*zeta3"),
            e("E-02", "E+12", "1/2*zeta3^2"), e("E-21", "E+20", "1/2*zeta3^2"),
            e("E-10", "E+01", "1/2"),
        ]),
        form(FormKind::Form, "22", vec![
            e("H00", "H22", "1"), e("H22", "H00", "1"),
            e("H11", "H11", X),
            e("E+01", "E-21", "1/2*zeta3^2"), e("E+12", "E-10", "1/2*zeta3^2"),
            e("E+20", "E-02", "1/2"),
            e("E-21", "E+01", "1/2"), e("E-10", "E+12", "1/2"),
            e("E-02", "E+20", "1/2*zeta3"),
        ]),
        form(FormKind::Inverse, "00", vec![
            e("H00", "H00", "1"),
            e("H11", "H22", X), e("H22", "H11", X),
            e("E+01", "E-02", "2"), e("E-02", "E+01", "2"),
            e("E+12", "E-21", "2*zeta3^2"),
            e("E+20", "E-10", "2"), e("E-10", "E+20", "2"),
            e("E-21", "E+12", "2*zeta3^2"),
        ]),
        form(FormKind::Inverse, "11", vec![
            e("H00", "H11", "1"), e("H11", "H00", "1"),
            e("H22", "H22", X2),
            e("E+12", "E-02", "2*zeta3"), e("E+20", "E-21", "2*zeta3"),
            e("E+01", "E-10", "2"),
            e("E-02", "E+12", "2"), e("E-21", "E+20", "2"),
            e("E-10", "E+01", "2*zeta3^2"),
        ]),
        form(FormKind::Inverse, "22", vec![
            e("H00", "H22", "1"), e("H22", "H00", "1"),
            e("H11", "H11", X2),
            e("E+01", "E-21", "2"), e("E+12", "E-10", "2"),
            e("E+20", "E-02", "2*zeta3^2"),
            e("E-21", "E+01", "2*zeta3"), e("E-10", "E+12", "2*zeta3"),
            e("E-02", "E+20", "2"),
        ]),
    ];

    let mut c00 = ProductList::new(N);
    c00.product(s("1"), "H00", "H00");
    c00.anticommutator(s(X), "H11", "H22");
    c00.anticommutator(s("2"), "E+01", "E-02");
    c00.anticommutator(s("2"), "E+20", "E-10");
    c00.anticommutator(s("2*zeta3^2"), "E+12", "E-21");

    let mut c11 = ProductList::new(N);
    c11.anticommutator(s("1"), "H00", "H11");
    c11.product(s(X2), "H22", "H22");
    c11.product(s("2*zeta3"), "E+12", "E-02");
    c11.product(s("2"), "E-02", "E+12");
    c11.product(s("2*zeta3"), "E+20", "E-21");
    c11.product(s("2"), "E-21", "E+20");
    c11.product(s("2"), "E+01", "E-10");
    c11.product(s("2*zeta3^2"), "E-10", "E+01");

    let mut c22 = ProductList::new(N);
    c22.anticommutator(s("1"), "H00", "H22");
    c22.product(s(X2), "H11", "H11");
    c22.product(s("2"), "E+01", "E-21");
    c22.product(s("2*zeta3"), "E-21", "E+01");
    c22.product(s("2"), "E+12", "E-10");
    c22.product(s("2*zeta3"), "E-10", "E+12");
    c22.product(s("2*zeta3^2"), "E+20", "E-02");
    c22.product(s("2"), "E-02", "E+20");

    CatalogEntry {
        name: "z32-sl2".into(),
        algebra,
        cartan: Vec::new(),
        cartan_labels: Vec::new(),
        j_form: None,
        normalization: CycScalar::from_ratio(1, 6, N),
        expected_commutants,
        golden_forms,
        golden_casimirs: vec![
            GoldenCasimir { degree: g("00"), products: c00.items },
            GoldenCasimir { degree: g("11"), products: c11.items },
            GoldenCasimir { degree: g("22"), products: c22.items },
        ],
    }
}
