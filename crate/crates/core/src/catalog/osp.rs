//! The ℤ₂²-graded extension of osp(m|2n) inside gl(m,m|2n,2n).
//!
//! Index conventions for basis names: Latin indices 1..ℓ (primed with '),
//! the extra odd-m index `m`, and symplectic indices written `s1`, `s1'`, …
//! Families: T (00), U (11), L (01), G (10).

use std::sync::Arc;

use super::{CatalogEntry, FormKind, GoldenCasimir, GoldenForm, ProductList};
use crate::algebra::ColorAlgebra;
use crate::gmatrix::{GradedMatrix, GradedSpace, JForm, JSymmetry};
use crate::grading::{GradingContext, GroupElement};
use crate::CycScalar;

const N: u32 = crate::DEFAULT_CONDUCTOR;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ix {
    Lat(usize),
    LatP(usize),
    M,
    Sp(usize),
    SpP(usize),
}

impl Ix {
    fn prime(self) -> Ix {
        match self {
            Ix::Lat(i) => Ix::LatP(i),
            Ix::LatP(i) => Ix::Lat(i),
            Ix::M => Ix::M,
            Ix::Sp(i) => Ix::SpP(i),
            Ix::SpP(i) => Ix::Sp(i),
        }
    }

    fn label(self) -> String {
        match self {
            Ix::Lat(i) => format!("{i}"),
            Ix::LatP(i) => format!("{i}'"),
            Ix::M => "m".into(),
            Ix::Sp(i) => format!("s{i}"),
            Ix::SpP(i) => format!("s{i}'"),
        }
    }
}

#[derive(Clone, Copy)]
struct Dims {
    m: usize,
    n: usize,
    l: usize,
}

impl Dims {
    fn new(m: usize, n: usize) -> Self {
        Dims { m, n, l: m / 2 }
    }

    fn odd(self) -> bool {
        self.m % 2 == 1
    }

    /// 0-based row/column of an index; `upper` selects the second copy.
    fn pos(self, ix: Ix, upper: bool) -> usize {
        let (m, n, l) = (self.m, self.n, self.l);
        match ix {
            Ix::Lat(i) => i - 1 + if upper { m } else { 0 },
            Ix::LatP(i) => l + i - 1 + if upper { m } else { 0 },
            Ix::M => 2 * l + if upper { m } else { 0 },
            Ix::Sp(i) => 2 * m + i - 1 + if upper { 2 * n } else { 0 },
            Ix::SpP(i) => 2 * m + n + i - 1 + if upper { 2 * n } else { 0 },
        }
    }

    /// 1..ℓ, then m when odd.
    fn latin_with_m(self) -> Vec<Ix> {
        let mut v: Vec<Ix> = (1..=self.l).map(Ix::Lat).collect();
        if self.odd() {
            v.push(Ix::M);
        }
        v
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    T,
    U,
    L,
    G,
}

impl Family {
    fn letter(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::U => "U",
            Family::L => "L",
            Family::G => "G",
        }
    }

    fn degree(self) -> &'static str {
        match self {
            Family::T => "00",
            Family::U => "11",
            Family::L => "01",
            Family::G => "10",
        }
    }

    /// T and L use lower-lower plus upper-upper units; U and G mix them.
    fn mixed(self) -> bool {
        matches!(self, Family::U | Family::G)
    }
}

fn name(f: Family, a: Ix, b: Ix) -> String {
    format!("{}[{},{}]", f.letter(), a.label(), b.label())
}

/// E_ab + s E_{b'a'} + E^{ab} + s E^{b'a'} (with the analogous mixed
/// positions for U and G); a coinciding second term is dropped.
fn generator(space: &Arc<GradedSpace>, d: Dims, f: Family, a: Ix, b: Ix, sign: i64) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(space);
    let mut put = |x: Ix, y: Ix, s: i64| {
        let mixed = f.mixed();
        for upper_row in [false, true] {
            let upper_col = if mixed { !upper_row } else { upper_row };
            let (r, c) = (d.pos(x, upper_row), d.pos(y, upper_col));
            m.set(r, c, CycScalar::from_integer(s, N));
        }
    };
    put(a, b, 1);
    if (b.prime(), a.prime()) != (a, b) {
        put(b.prime(), a.prime(), sign);
    }
    m
}

/// (family, a, b, sign) in listing order.
fn basis_spec(d: Dims) -> Vec<(Family, Ix, Ix, i64)> {
    let mut out = Vec::new();
    let (l, n) = (d.l, d.n);
    for f in [Family::T, Family::U] {
        for i in 1..=l {
            for j in d.latin_with_m() {
                out.push((f, Ix::Lat(i), j, -1));
            }
        }
        for i in 1..=l {
            for j in i + 1..=l {
                out.push((f, Ix::Lat(i), Ix::LatP(j), -1));
            }
        }
        for i in 1..=l {
            for j in i + 1..=l {
                out.push((f, Ix::LatP(i), Ix::Lat(j), -1));
            }
            if d.odd() {
                out.push((f, Ix::LatP(i), Ix::M, -1));
            }
        }
        for mu in 1..=n {
            for nu in 1..=n {
                out.push((f, Ix::Sp(mu), Ix::Sp(nu), -1));
            }
        }
        for mu in 1..=n {
            for nu in mu..=n {
                out.push((f, Ix::Sp(mu), Ix::SpP(nu), 1));
            }
        }
        for mu in 1..=n {
            for nu in mu..=n {
                out.push((f, Ix::SpP(mu), Ix::Sp(nu), 1));
            }
        }
    }
    // L: minus for unprimed symplectic index; G: the opposite
    for (f, s_unprimed) in [(Family::L, -1), (Family::G, 1)] {
        for (first, primed) in [(true, false), (true, true), (false, false), (false, true)] {
            let lat: Vec<Ix> = if first {
                d.latin_with_m()
            } else {
                (1..=l).map(Ix::LatP).collect()
            };
            for i in lat {
                for mu in 1..=n {
                    let (b, s) = if primed {
                        (Ix::SpP(mu), -s_unprimed)
                    } else {
                        (Ix::Sp(mu), s_unprimed)
                    };
                    out.push((f, i, b, s));
                }
            }
        }
    }
    out
}

/// Block order of V: V00(m), V11(m), V01(2n), V10(2n).
fn space(m: usize, n: usize) -> Arc<GradedSpace> {
    let ctx = GradingContext::z2_squared();
    let g = |t: &str| ctx.parse_el(t).unwrap();
    let order = vec![g("00"), g("11"), g("01"), g("10")];
    let ctx = Arc::new(ctx.with_order(order).expect("complete order"));
    let g = |t: &str| ctx.parse_el(t).unwrap();
    GradedSpace::new(ctx.clone(), &[(g("00"), m), (g("11"), m), (g("01"), 2 * n), (g("10"), 2 * n)])
}

fn b_block(d: Dims) -> Vec<(usize, usize, i64)> {
    let mut v = Vec::new();
    for i in 0..d.l {
        v.push((i, d.l + i, 1));
        v.push((d.l + i, i, 1));
    }
    if d.odd() {
        v.push((2 * d.l, 2 * d.l, 1));
    }
    v
}

fn g_block(d: Dims) -> Vec<(usize, usize, i64)> {
    let mut v = Vec::new();
    for i in 0..d.n {
        v.push((i, d.n + i, -1));
        v.push((d.n + i, i, 1));
    }
    v
}

fn block_diag(space: &Arc<GradedSpace>, d: Dims, scale: [CycScalar; 4]) -> GradedMatrix {
    let mut j = GradedMatrix::zeros(space);
    let offsets = [0, d.m, 2 * d.m, 2 * d.m + 2 * d.n];
    for (k, s) in scale.iter().enumerate() {
        let entries = if k < 2 { b_block(d) } else { g_block(d) };
        for (r, c, x) in entries {
            j.set(offsets[k] + r, offsets[k] + c, &CycScalar::from_integer(x, N) * s);
        }
    }
    j
}

/// diag(iB, iB, G, G) as published.
pub fn osp_block_j(m: usize, n: usize) -> GradedMatrix {
    let sp = space(m, n);
    let i = CycScalar::root_of_unity(N, 3);
    let one = CycScalar::one(N);
    block_diag(&sp, Dims::new(m, n), [i.clone(), i, one.clone(), one])
}

/// diag(B, B, G, −G): graded-symmetric and compatible with the ω-twisted
/// membership test.
fn membership_j(sp: &Arc<GradedSpace>, d: Dims) -> GradedMatrix {
    let one = CycScalar::one(N);
    block_diag(sp, d, [one.clone(), one.clone(), one.clone(), -one])
}

/// X^α J + c_α J (X^α)ᵀ = 0 with c = 1, 1, i, −i for α = 00, 11, 01, 10.
/// Returns each present part with whether it satisfies its condition.
pub fn osp_block_conditions(x: &GradedMatrix, j: &GradedMatrix) -> Vec<(GroupElement, bool)> {
    let ctx = x.ctx().clone();
    let i = CycScalar::root_of_unity(N, 3);
    x.parts()
        .into_iter()
        .map(|(g, part)| {
            let c = match ctx.fmt_el(g).as_str() {
                "01" => i.clone(),
                "10" => -&i,
                _ => CycScalar::one(N),
            };
            let lhs = &(&part * j) + &(j * &part.transpose()).scale(&c);
            (g, lhs.is_zero())
        })
        .collect()
}

pub fn build_osp(m: usize, n: usize) -> CatalogEntry {
    let d = Dims::new(m, n);
    let sp = space(m, n);
    let ctx = sp.ctx().clone();
    let gens: Vec<(String, GroupElement, GradedMatrix)> = basis_spec(d)
        .into_iter()
        .map(|(f, a, b, s)| (name(f, a, b), ctx.parse_el(f.degree()).unwrap(), generator(&sp, d, f, a, b, s)))
        .collect();
    let algebra = ColorAlgebra::from_representation(sp.clone(), gens).expect("osp closes");

    let mut cartan = Vec::new();
    let mut cartan_labels = Vec::new();
    for i in 1..=d.l {
        cartan.push(algebra.index_of(&name(Family::T, Ix::Lat(i), Ix::Lat(i))).unwrap());
        cartan_labels.push(format!("e{i}"));
    }
    for mu in 1..=n {
        cartan.push(algebra.index_of(&name(Family::T, Ix::Sp(mu), Ix::Sp(mu))).unwrap());
        cartan_labels.push(format!("d{mu}"));
    }

    let g = |t: &str| ctx.parse_el(t).unwrap();
    let mut m11 = GradedMatrix::zeros(&sp);
    for k in 0..m {
        m11.set(k, m + k, CycScalar::one(N));
        m11.set(m + k, k, CycScalar::one(N));
    }
    for k in 0..2 * n {
        m11.set(2 * m + k, 2 * m + 2 * n + k, -CycScalar::one(N));
        m11.set(2 * m + 2 * n + k, 2 * m + k, -CycScalar::one(N));
    }
    let expected_commutants = vec![(g("00"), GradedMatrix::identity(&sp)), (g("11"), m11)];

    let j_form = JForm::new(membership_j(&sp, d), JSymmetry::GradedSymmetric).expect("valid J");

    CatalogEntry {
        name: format!("osp({m}|{})", 2 * n),
        algebra,
        cartan,
        cartan_labels,
        j_form: Some(j_form),
        normalization: CycScalar::from_ratio(1, 4, N),
        expected_commutants,
        golden_forms: golden_forms(d, &ctx),
        golden_casimirs: golden_casimirs(d, &ctx),
    }
}

struct Table {
    entries: Vec<(String, String, CycScalar)>,
}

impl Table {
    fn new() -> Self {
        Table { entries: Vec::new() }
    }

    fn put(&mut self, x: (Family, Ix, Ix), y: (Family, Ix, Ix), v: CycScalar) {
        self.entries.push((name(x.0, x.1, x.2), name(y.0, y.1, y.2), v));
    }
}

fn golden_forms(d: Dims, ctx: &GradingContext) -> Vec<GoldenForm> {
    use Family::*;
    use Ix::*;
    let int = |k: i64| CycScalar::from_integer(k, N);
    let (l, n) = (d.l, d.n);
    let mut out = Vec::new();
    for kind in [FormKind::Form, FormKind::Inverse] {
        // diagonal symplectic coefficient: ∓1/2 in η, ∓2 in its inverse
        let half = match kind {
            FormKind::Form => CycScalar::from_ratio(1, 2, N),
            FormKind::Inverse => int(2),
        };
        // 01/10 entries of the degree-00 form flip sign in the inverse
        let odd_sign = match kind {
            FormKind::Form => int(1),
            FormKind::Inverse => int(-1),
        };
        let mut e00 = Table::new();
        let mut e11 = Table::new();
        for i in 1..=l {
            for j in 1..=l {
                e00.put((T, Lat(i), Lat(j)), (T, Lat(j), Lat(i)), int(1));
                e00.put((U, Lat(i), Lat(j)), (U, Lat(j), Lat(i)), int(1));
                e11.put((T, Lat(i), Lat(j)), (U, Lat(j), Lat(i)), int(1));
            }
        }
        for i in 1..=l {
            for j in i + 1..=l {
                e00.put((T, Lat(i), LatP(j)), (T, LatP(i), Lat(j)), int(-1));
                e00.put((U, Lat(i), LatP(j)), (U, LatP(i), Lat(j)), int(-1));
                e11.put((T, Lat(i), LatP(j)), (U, LatP(i), Lat(j)), int(-1));
                e11.put((T, LatP(i), Lat(j)), (U, Lat(i), LatP(j)), int(-1));
            }
        }
        if d.odd() {
            for i in 1..=l {
                e00.put((T, Lat(i), M), (T, LatP(i), M), int(-1));
                e00.put((U, Lat(i), M), (U, LatP(i), M), int(-1));
                e11.put((T, Lat(i), M), (U, LatP(i), M), int(-1));
                e11.put((T, LatP(i), M), (U, Lat(i), M), int(-1));
            }
        }
        for mu in 1..=n {
            for nu in 1..=n {
                e00.put((T, Sp(mu), Sp(nu)), (T, Sp(nu), Sp(mu)), int(-1));
                e00.put((U, Sp(mu), Sp(nu)), (U, Sp(nu), Sp(mu)), int(-1));
                e11.put((T, Sp(mu), Sp(nu)), (U, Sp(nu), Sp(mu)), int(1));
            }
        }
        for mu in 1..=n {
            for nu in mu..=n {
                let v = if mu == nu { -half.clone() } else { int(-1) };
                e00.put((T, Sp(mu), SpP(nu)), (T, SpP(mu), Sp(nu)), v.clone());
                e00.put((U, Sp(mu), SpP(nu)), (U, SpP(mu), Sp(nu)), v.clone());
                e11.put((T, Sp(mu), SpP(nu)), (U, SpP(mu), Sp(nu)), -v.clone());
                e11.put((T, SpP(mu), Sp(nu)), (U, Sp(mu), SpP(nu)), -v);
            }
        }
        for i in 1..=l {
            for mu in 1..=n {
                e00.put((L, Lat(i), Sp(mu)), (L, LatP(i), SpP(mu)), odd_sign.clone());
                e00.put((L, Lat(i), SpP(mu)), (L, LatP(i), Sp(mu)), -odd_sign.clone());
                e00.put((G, Lat(i), Sp(mu)), (G, LatP(i), SpP(mu)), -odd_sign.clone());
                e00.put((G, Lat(i), SpP(mu)), (G, LatP(i), Sp(mu)), odd_sign.clone());
                e11.put((L, Lat(i), Sp(mu)), (G, LatP(i), SpP(mu)), int(1));
                e11.put((L, Lat(i), SpP(mu)), (G, LatP(i), Sp(mu)), int(-1));
                e11.put((L, LatP(i), Sp(mu)), (G, Lat(i), SpP(mu)), int(1));
                e11.put((L, LatP(i), SpP(mu)), (G, Lat(i), Sp(mu)), int(-1));
            }
        }
        if d.odd() {
            for mu in 1..=n {
                e00.put((L, M, Sp(mu)), (L, M, SpP(mu)), odd_sign.clone());
                e00.put((G, M, Sp(mu)), (G, M, SpP(mu)), -odd_sign.clone());
                e11.put((L, M, Sp(mu)), (G, M, SpP(mu)), int(1));
                e11.put((L, M, SpP(mu)), (G, M, Sp(mu)), int(-1));
            }
        }
        for (deg, t) in [("00", e00), ("11", e11)] {
            out.push(GoldenForm {
                kind,
                degree: ctx.parse_el(deg).unwrap(),
                entries: t.entries,
            });
        }
    }
    out
}

fn golden_casimirs(d: Dims, ctx: &GradingContext) -> Vec<GoldenCasimir> {
    use Family::*;
    use Ix::*;
    let (l, n) = (d.l, d.n);
    let nm = |f, a, b| name(f, a, b);
    let mut c00 = ProductList::new(N);
    let mut c11 = ProductList::new(N);
    let (p1, m1, p2, m2) = (c00.int(1), c00.int(-1), c00.int(2), c00.int(-2));
    for i in 1..=l {
        for j in 1..=l {
            c00.product(p1.clone(), &nm(T, Lat(i), Lat(j)), &nm(T, Lat(j), Lat(i)));
            c00.product(p1.clone(), &nm(U, Lat(i), Lat(j)), &nm(U, Lat(j), Lat(i)));
            c11.anticommutator(p1.clone(), &nm(T, Lat(i), Lat(j)), &nm(U, Lat(j), Lat(i)));
        }
    }
    for i in 1..=l {
        for j in i + 1..=l {
            c00.anticommutator(m1.clone(), &nm(T, Lat(i), LatP(j)), &nm(T, LatP(i), Lat(j)));
            c00.anticommutator(m1.clone(), &nm(U, Lat(i), LatP(j)), &nm(U, LatP(i), Lat(j)));
            c11.anticommutator(m1.clone(), &nm(T, Lat(i), LatP(j)), &nm(U, LatP(i), Lat(j)));
            c11.anticommutator(m1.clone(), &nm(T, LatP(i), Lat(j)), &nm(U, Lat(i), LatP(j)));
        }
    }
    if d.odd() {
        for i in 1..=l {
            c00.anticommutator(m1.clone(), &nm(T, Lat(i), M), &nm(T, LatP(i), M));
            c00.anticommutator(m1.clone(), &nm(U, Lat(i), M), &nm(U, LatP(i), M));
            c11.anticommutator(m1.clone(), &nm(T, Lat(i), M), &nm(U, LatP(i), M));
            c11.anticommutator(m1.clone(), &nm(T, LatP(i), M), &nm(U, Lat(i), M));
        }
    }
    for mu in 1..=n {
        for nu in 1..=n {
            c00.product(m1.clone(), &nm(T, Sp(mu), Sp(nu)), &nm(T, Sp(nu), Sp(mu)));
            c00.product(m1.clone(), &nm(U, Sp(mu), Sp(nu)), &nm(U, Sp(nu), Sp(mu)));
            c11.anticommutator(p1.clone(), &nm(T, Sp(mu), Sp(nu)), &nm(U, Sp(nu), Sp(mu)));
        }
    }
    for mu in 1..=n {
        c00.anticommutator(m2.clone(), &nm(T, Sp(mu), SpP(mu)), &nm(T, SpP(mu), Sp(mu)));
        c00.anticommutator(m2.clone(), &nm(U, Sp(mu), SpP(mu)), &nm(U, SpP(mu), Sp(mu)));
        c11.anticommutator(p2.clone(), &nm(T, Sp(mu), SpP(mu)), &nm(U, SpP(mu), Sp(mu)));
        c11.anticommutator(p2.clone(), &nm(T, SpP(mu), Sp(mu)), &nm(U, Sp(mu), SpP(mu)));
    }
    for mu in 1..=n {
        for nu in mu + 1..=n {
            c00.anticommutator(m1.clone(), &nm(T, Sp(mu), SpP(nu)), &nm(T, SpP(mu), Sp(nu)));
            c00.anticommutator(m1.clone(), &nm(U, Sp(mu), SpP(nu)), &nm(U, SpP(mu), Sp(nu)));
            c11.anticommutator(p1.clone(), &nm(T, Sp(mu), SpP(nu)), &nm(U, SpP(mu), Sp(nu)));
            c11.anticommutator(p1.clone(), &nm(T, SpP(mu), Sp(nu)), &nm(U, Sp(mu), SpP(nu)));
        }
    }
    for i in 1..=l {
        for mu in 1..=n {
            c00.commutator(p1.clone(), &nm(L, LatP(i), SpP(mu)), &nm(L, Lat(i), Sp(mu)));
            c00.commutator(p1.clone(), &nm(L, Lat(i), SpP(mu)), &nm(L, LatP(i), Sp(mu)));
            c00.commutator(p1.clone(), &nm(G, Lat(i), Sp(mu)), &nm(G, LatP(i), SpP(mu)));
            c00.commutator(p1.clone(), &nm(G, LatP(i), Sp(mu)), &nm(G, Lat(i), SpP(mu)));
            c11.anticommutator(p1.clone(), &nm(L, Lat(i), Sp(mu)), &nm(G, LatP(i), SpP(mu)));
            c11.anticommutator(m1.clone(), &nm(L, Lat(i), SpP(mu)), &nm(G, LatP(i), Sp(mu)));
            c11.anticommutator(p1.clone(), &nm(L, LatP(i), Sp(mu)), &nm(G, Lat(i), SpP(mu)));
            c11.anticommutator(m1.clone(), &nm(L, LatP(i), SpP(mu)), &nm(G, Lat(i), Sp(mu)));
        }
    }
    if d.odd() {
        for mu in 1..=n {
            c00.commutator(p1.clone(), &nm(L, M, SpP(mu)), &nm(L, M, Sp(mu)));
            c00.commutator(p1.clone(), &nm(G, M, Sp(mu)), &nm(G, M, SpP(mu)));
            c11.anticommutator(p1.clone(), &nm(L, M, Sp(mu)), &nm(G, M, SpP(mu)));
            c11.anticommutator(m1.clone(), &nm(L, M, SpP(mu)), &nm(G, M, Sp(mu)));
        }
    }
    vec![
        GoldenCasimir {
            degree: ctx.parse_el("00").unwrap(),
            products: c00.items,
        },
        GoldenCasimir {
            degree: ctx.parse_el("11").unwrap(),
            products: c11.items,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (m, n) in [(1, 1), (2, 1), (3, 1), (2, 2), (4, 1)] {
            let e = build_osp(m, n);
            assert_eq!(e.algebra.dim(), (m + 2 * n).pow(2) - m + 2 * n, "m={m} n={n}");
        }
    }

    #[test]
    fn odd_m_extras_present() {
        let e = build_osp(3, 1);
        for nm in ["T[1,m]", "U[1,m]", "T[1',m]", "L[m,s1']", "G[m,s1']"] {
            assert!(e.algebra.index_of(nm).is_some(), "{nm}");
        }
        let e = build_osp(2, 1);
        assert!(e.algebra.index_of("T[1,m]").is_none());
    }

    #[test]
    fn block_conditions_hold() {
        let e = build_osp(3, 1);
        let j = osp_block_j(3, 1);
        for a in 0..e.algebra.dim() {
            for (g, ok) in osp_block_conditions(e.algebra.matrix(a).unwrap(), &j) {
                assert!(ok, "{} part {}", e.algebra.name(a), e.algebra.ctx().fmt_el(g));
            }
        }
    }
}
