//! The ℤ₂²-graded extension of q(n) on ℂ^{n,n|n,n}.

use std::sync::Arc;

use super::{CatalogEntry, FormKind, GoldenCasimir, GoldenForm, ProductList};
use crate::algebra::ColorAlgebra;
use crate::gmatrix::{GradedMatrix, GradedSpace};
use crate::grading::{GradingContext, GroupElement};
use crate::CycScalar;

const N: u32 = crate::DEFAULT_CONDUCTOR;

/// Θ^α as a permutation: row r has its 1 in column r ⊕ α (bitwise on 2-bit labels).
fn theta(alpha: usize) -> [[i64; 4]; 4] {
    let mut t = [[0; 4]; 4];
    for (r, row) in t.iter_mut().enumerate() {
        row[r ^ alpha] = 1;
    }
    t
}

fn t_matrix(alpha: usize) -> [[i64; 4]; 4] {
    match alpha {
        0 => [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        1 => [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
        2 => [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
        _ => [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
    }
}

/// A ⊗ B for a 4×4 integer A and an n×n integer B given by a closure.
fn kron(space: &Arc<GradedSpace>, a: &[[i64; 4]; 4], n: usize, b: impl Fn(usize, usize) -> i64) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(space);
    for (r, row) in a.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let y = b(i, j);
                    if y != 0 {
                        m.set(r * n + i, c * n + j, CycScalar::from_integer(x * y, N));
                    }
                }
            }
        }
    }
    m
}

pub(super) fn qn_name(ctx: &GradingContext, alpha: GroupElement, i: usize, j: usize) -> String {
    format!("E{}[{},{}]", ctx.fmt_el(alpha), i, j)
}

/// Basis E^α_ij = Θ^α ⊗ e_ij, ordered lexicographically in (α, i, j).
pub fn build_qn(n: usize) -> CatalogEntry {
    let ctx = Arc::new(GradingContext::z2_squared());
    let els: Vec<GroupElement> = ctx.group().elements().collect();
    let space = GradedSpace::new(ctx.clone(), &els.iter().map(|&g| (g, n)).collect::<Vec<_>>());
    let mut gens = Vec::new();
    for (k, &alpha) in els.iter().enumerate() {
        let th = theta(k);
        for i in 1..=n {
            for j in 1..=n {
                let m = kron(&space, &th, n, |p, q| i64::from(p + 1 == i && q + 1 == j));
                gens.push((qn_name(&ctx, alpha, i, j), alpha, m));
            }
        }
    }
    let algebra = ColorAlgebra::from_representation(space.clone(), gens).expect("q(n) closes");

    let expected_commutants = els
        .iter()
        .enumerate()
        .map(|(k, &alpha)| (alpha, kron(&space, &t_matrix(k), n, |p, q| i64::from(p == q))))
        .collect();

    // η^11 = η_11: δ_jk δ_il ω(α,11) on E^α_ij, E^{11-α}_kl
    let d11 = ctx.parse_el("11").unwrap();
    let mut eta11 = Vec::new();
    for &alpha in &els {
        let beta = ctx.add(alpha, d11);
        for i in 1..=n {
            for j in 1..=n {
                eta11.push((
                    qn_name(&ctx, alpha, i, j),
                    qn_name(&ctx, beta, j, i),
                    ctx.omega(alpha, d11).clone(),
                ));
            }
        }
    }
    let mut golden_forms: Vec<GoldenForm> = els
        .iter()
        .filter(|&&g| g != d11)
        .map(|&g| GoldenForm {
            kind: FormKind::Form,
            degree: g,
            entries: Vec::new(),
        })
        .collect();
    golden_forms.push(GoldenForm {
        kind: FormKind::Form,
        degree: d11,
        entries: eta11.clone(),
    });
    golden_forms.push(GoldenForm {
        kind: FormKind::Inverse,
        degree: d11,
        entries: eta11,
    });

    // C11 = Σ_ij (E00 E11 − E01 E10 − E10 E01 + E11 E00)
    let mut c11 = ProductList::new(N);
    let signs = [("00", "11", 1), ("01", "10", -1), ("10", "01", -1), ("11", "00", 1)];
    for i in 1..=n {
        for j in 1..=n {
            for (a, b, s) in signs {
                let (a, b) = (ctx.parse_el(a).unwrap(), ctx.parse_el(b).unwrap());
                c11.product(c11.int(s), &qn_name(&ctx, a, i, j), &qn_name(&ctx, b, j, i));
            }
        }
    }

    CatalogEntry {
        name: format!("q({n})"),
        algebra,
        cartan: Vec::new(),
        cartan_labels: Vec::new(),
        j_form: None,
        normalization: CycScalar::from_ratio(1, 4, N),
        expected_commutants,
        golden_forms,
        golden_casimirs: vec![GoldenCasimir {
            degree: d11,
            products: c11.items,
        }],
    }
}
