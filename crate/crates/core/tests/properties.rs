use std::sync::Arc;

use colorlie::catalog::{self, CatalogEntry};
use colorlie::{
    bilinear_form, bracket_generator_quadratic, build_casimir, check_loop_antisymmetry, invert_form, j_membership,
    loop_bracket, quad_to_matrix, validate_factor, Bicharacter, CycScalar, ExtensionData, GradedMatrix, GradedSpace,
    GradingContext, GroupElement, LoopElement, QuadElement,
};
use proptest::prelude::*;

const N: u32 = 12;

fn small_scalar() -> impl Strategy<Value = CycScalar> {
    proptest::collection::vec(-3i64..=3, 4).prop_map(|cs| {
        let mut acc = CycScalar::zero(N);
        for (k, c) in cs.into_iter().enumerate() {
            acc += &CycScalar::from_integer(c, N) * &CycScalar::root_of_unity(N, k as i64);
        }
        acc
    })
}

fn nonzero_scalar() -> impl Strategy<Value = CycScalar> {
    small_scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn entries() -> Vec<CatalogEntry> {
    vec![
        catalog::build_qn(1),
        catalog::build_qn(2),
        catalog::build_z32_sl2(),
        catalog::build_osp(1, 1),
        catalog::build_osp(2, 1),
    ]
}

fn pow(x: &CycScalar, k: u32) -> CycScalar {
    (0..k).fold(CycScalar::one(N), |acc, _| &acc * x)
}

#[test]
fn roots_of_unity_are_exact() {
    // Φ_3 = x²+x+1, Φ_4 = x²+1, Φ_6 = x²-x+1, Φ_12 = x⁴-x²+1
    let phis: [(u32, &[i64]); 4] = [(3, &[1, 1, 1]), (4, &[1, 0, 1]), (6, &[1, -1, 1]), (12, &[1, 0, -1, 0, 1])];
    for (order, phi) in phis {
        let z = CycScalar::root_of_unity(N, (N / order) as i64);
        assert!(pow(&z, order).is_one(), "zeta{order}^{order}");
        let mut acc = CycScalar::zero(N);
        for (k, &c) in phi.iter().enumerate() {
            acc += &CycScalar::from_integer(c, N) * &pow(&z, k as u32);
        }
        assert!(acc.is_zero(), "Phi_{order}(zeta{order})");
    }
}

proptest! {
    /// For a bicharacter ζ_k^{αᵀBβ} on ℤ_k², the axioms hold iff B + Bᵀ ≡ 0 mod k.
    #[test]
    fn factor_axioms_iff_skew(k in 2u32..=3, b in proptest::collection::vec(0i64..3, 4)) {
        let b: Vec<i64> = b.into_iter().map(|x| x % k as i64).collect();
        let matrix = vec![vec![b[0], b[1]], vec![b[2], b[3]]];
        let skew = (0..2).all(|i| (0..2).all(|j| (matrix[i][j] + matrix[j][i]) % k as i64 == 0));
        let ctx = GradingContext::new(&[k, k], Bicharacter::new(k, matrix), None, N).unwrap();
        prop_assert_eq!(validate_factor(&ctx).passed(), skew);
    }
}

fn sl2_space() -> Arc<GradedSpace> {
    catalog::build_z32_sl2().algebra.space().unwrap().clone()
}

fn osp_space() -> Arc<GradedSpace> {
    catalog::build_osp(3, 1).algebra.space().unwrap().clone()
}

/// Random matrix supported on the blocks of degree g.
fn homogeneous(space: &Arc<GradedSpace>, g: GroupElement, vals: &[CycScalar]) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(space);
    let d = space.total();
    let mut k = 0;
    for r in 0..d {
        for c in 0..d {
            if space.entry_degree(r, c) == g {
                m.set(r, c, vals[k % vals.len()].clone());
                k += 1;
            }
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_homogeneous(
        use_osp in any::<bool>(),
        a in 0usize..9,
        b in 0usize..9,
        xs in proptest::collection::vec(small_scalar(), 1..6),
        ys in proptest::collection::vec(small_scalar(), 1..6),
    ) {
        let space = if use_osp { osp_space() } else { sl2_space() };
        let ctx = space.ctx().clone();
        let n = ctx.group().size();
        let (da, db) = (GroupElement(a % n), GroupElement(b % n));
        let x = homogeneous(&space, da, &xs);
        let y = homogeneous(&space, db, &ys);
        let xy = &x * &y;
        prop_assert!(xy.is_zero() || xy.is_homogeneous_of(ctx.add(da, db)));
        prop_assert!(xy.support_degrees().iter().all(|&g| g == ctx.add(da, db)));
    }

    #[test]
    fn color_trace_is_linear_and_graded(
        a in 0usize..9,
        s in small_scalar(),
        xs in proptest::collection::vec(small_scalar(), 1..6),
        ys in proptest::collection::vec(small_scalar(), 1..6),
    ) {
        let space = sl2_space();
        let g = GroupElement(a);
        let x = homogeneous(&space, space.ctx().zero(), &xs);
        let y = homogeneous(&space, g, &ys);
        let lhs = (&x.scale(&s) + &y).color_trace();
        prop_assert_eq!(lhs, &(&s * &x.color_trace()) + &y.color_trace());
        if g != space.ctx().zero() {
            prop_assert!(y.color_trace().is_zero());
        }
    }
}

#[test]
fn j_membership_is_closed_under_brackets() {
    for (m, n) in [(1, 1), (2, 1), (3, 1)] {
        let e = catalog::build_osp(m, n);
        let j = e.j_form.as_ref().unwrap();
        let mats = e.algebra.matrices().unwrap();
        for x in mats {
            for y in mats {
                let b = x.color_bracket(y).unwrap();
                assert!(j_membership(&b, j).unwrap().iter().all(|p| p.witness.is_none()));
            }
        }
    }
}

/// Raw products of one fixed total degree, with indices into the basis.
fn raw_products(e: &CatalogEntry, picks: &[(usize, usize, CycScalar)], target: usize) -> Vec<(usize, usize, CycScalar)> {
    let alg = &e.algebra;
    let ctx = alg.ctx();
    let d = alg.dim();
    let target = ctx.order()[target % ctx.order().len()];
    picks
        .iter()
        .filter_map(|(a, b, x)| {
            let a = a % d;
            // first b' ≥ b (cyclically) with deg a + deg b' = target
            (0..d)
                .map(|k| (b + k) % d)
                .find(|&c| ctx.add(alg.degree(a), alg.degree(c)) == target)
                .map(|c| (a, c, x.clone()))
        })
        .collect()
}

fn raw_matrix(e: &CatalogEntry, raw: &[(usize, usize, CycScalar)]) -> GradedMatrix {
    let alg = &e.algebra;
    let mut m = GradedMatrix::zeros(alg.space().unwrap());
    for (a, b, x) in raw {
        m = &m + &(alg.matrix(*a).unwrap() * alg.matrix(*b).unwrap()).scale(x);
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_order_is_idempotent_and_degree_preserving(
        which in 0usize..5,
        target in 0usize..9,
        picks in proptest::collection::vec((0usize..40, 0usize..40, nonzero_scalar()), 1..8),
    ) {
        let e = &entries()[which];
        let alg = &e.algebra;
        let raw = raw_products(e, &picks, target);
        let q = QuadElement::normal_order(alg, &raw);
        // evaluation in the representation is unchanged by reordering
        prop_assert_eq!(quad_to_matrix(alg, &q).unwrap(), raw_matrix(e, &raw));
        let degrees: Vec<GroupElement> = raw.iter().map(|(a, b, _)| alg.ctx().add(alg.degree(*a), alg.degree(*b))).collect();
        prop_assert!(q.monomial_degrees(alg).iter().all(|g| degrees.contains(g)));
        let again: Vec<_> = q.quadratic.iter().map(|(&(a, b), x)| (a, b, x.clone())).collect();
        let mut q2 = QuadElement::normal_order(alg, &again);
        q2.add_constant(&q.constant);
        for (a, x) in &q.linear {
            q2.add_linear(*a, x);
        }
        prop_assert_eq!(q2, q);
    }

    #[test]
    fn generator_bracket_matches_matrices(
        which in 0usize..5,
        target in 0usize..9,
        gen in 0usize..40,
        picks in proptest::collection::vec((0usize..40, 0usize..40, nonzero_scalar()), 1..6),
    ) {
        let e = &entries()[which];
        let alg = &e.algebra;
        let raw = raw_products(e, &picks, target);
        let q = QuadElement::normal_order(alg, &raw);
        let a = gen % alg.dim();
        let symbolic = quad_to_matrix(alg, &bracket_generator_quadratic(alg, a, &q)).unwrap();
        let rho = quad_to_matrix(alg, &q).unwrap();
        prop_assert_eq!(symbolic, alg.matrix(a).unwrap().color_bracket(&rho).unwrap());
    }

    #[test]
    /// M ↦ sM scales η^μ by s, η_μ and hence C_μ by s⁻¹.
    fn casimir_scales_inversely(which in 0usize..5, s in nonzero_scalar()) {
        let e = &entries()[which];
        let alg = &e.algebra;
        for (_, m) in &e.expected_commutants {
            let f = bilinear_form(alg, m, &e.normalization).unwrap();
            let fs = bilinear_form(alg, &m.scale(&s), &e.normalization).unwrap();
            for (a, b, x) in f.entries() {
                prop_assert_eq!(fs.get(a, b), &(&s * &x));
            }
            let (Ok(inv), Ok(invs)) = (invert_form(alg, &f), invert_form(alg, &fs)) else {
                prop_assert!(f.is_zero() && fs.is_zero());
                continue;
            };
            let si = s.inv().unwrap();
            for (a, b, x) in inv.entries() {
                prop_assert_eq!(invs.get(a, b), &(&si * &x));
            }
            prop_assert_eq!(build_casimir(alg, &invs), build_casimir(alg, &inv).scale(&si));
        }
    }
}

#[test]
fn casimir_monomials_have_degree_mu() {
    for e in entries().iter().chain([&catalog::build_qn(3), &catalog::build_osp(3, 1)]) {
        let alg = &e.algebra;
        for (_, m) in &e.expected_commutants {
            let f = bilinear_form(alg, m, &e.normalization).unwrap();
            let Ok(inv) = invert_form(alg, &f) else { continue };
            let c = build_casimir(alg, &inv);
            assert_eq!(c.monomial_degrees(alg), vec![f.degree], "{}", e.name);
        }
    }
}

fn extension(e: &CatalogEntry) -> ExtensionData {
    let alg = &e.algebra;
    let forms: Vec<_> = e
        .expected_commutants
        .iter()
        .map(|(_, m)| bilinear_form(alg, m, &e.normalization).unwrap())
        .collect();
    ExtensionData::new(&forms)
}

#[test]
fn loop_antisymmetry_with_central_terms() {
    for e in entries() {
        let ext = extension(&e);
        assert!(check_loop_antisymmetry(&e.algebra, &ext, -2..=2).passed(), "{}", e.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charges_are_central_and_dropping_them_recovers_the_loop_algebra(
        which in 0usize..5,
        a in 0usize..40,
        b in 0usize..40,
        m in -3i64..=3,
        n in -3i64..=3,
    ) {
        let e = &entries()[which];
        let alg = &e.algebra;
        let ext = extension(e);
        let (a, b) = (a % alg.dim(), b % alg.dim());
        let x = LoopElement::mode(a, m, N);
        let y = LoopElement::mode(b, n, N);
        for k in 0..ext.charges().len() {
            let c = LoopElement::charge(k, N);
            prop_assert!(loop_bracket(alg, &ext, &c, &x).is_zero());
            prop_assert!(loop_bracket(alg, &ext, &x, &c).is_zero());
        }
        let full = loop_bracket(alg, &ext, &x, &y);
        let plain = loop_bracket(alg, &ExtensionData::trivial(), &x, &y);
        prop_assert!(plain.central.is_empty());
        prop_assert_eq!(&full.modes, &plain.modes);
        if m + n != 0 {
            prop_assert!(full.central.is_empty());
        }
    }
}
