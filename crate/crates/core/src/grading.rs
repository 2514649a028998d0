//! Finite Abelian grading groups, commutation factors and σ-factors.

use crate::error::GradingError;
use crate::verdict::{LawTally, Verdict};
use crate::CycScalar;

/// An element of Γ, identified by its position in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub usize);

/// Γ = ℤ_{k₁} × … × ℤ_{kₚ}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    orders: Vec<u32>,
    components: Vec<Vec<u32>>,
}

impl Group {
    pub fn new(orders: &[u32]) -> Result<Self, GradingError> {
        if orders.is_empty() {
            return Err(GradingError::EmptyGroup);
        }
        if let Some(index) = orders.iter().position(|&k| k == 0) {
            return Err(GradingError::ZeroOrder { index });
        }
        let mut components = vec![vec![]];
        for &k in orders {
            components = components
                .into_iter()
                .flat_map(|prefix| {
                    (0..k).map(move |r| {
                        let mut c = prefix.clone();
                        c.push(r);
                        c
                    })
                })
                .collect();
        }
        Ok(Group {
            orders: orders.to_vec(),
            components,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.components.len()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size()).map(GroupElement)
    }

    pub fn components(&self, g: GroupElement) -> &[u32] {
        &self.components[g.0]
    }

    pub fn element(&self, comps: &[u32]) -> Option<GroupElement> {
        if comps.len() != self.rank() || comps.iter().zip(&self.orders).any(|(c, k)| c >= k) {
            return None;
        }
        let idx = comps
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &k)| acc * k as usize + c as usize);
        Some(GroupElement(idx))
    }

    fn element_from_residues(&self, comps: impl Iterator<Item = i64>) -> GroupElement {
        let v: Vec<u32> = comps
            .zip(&self.orders)
            .map(|(c, &k)| c.rem_euclid(k as i64) as u32)
            .collect();
        self.element(&v).expect("residues are in range")
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(0)
    }

    pub fn add(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let (x, y) = (self.components(a), self.components(b));
        self.element_from_residues(x.iter().zip(y).map(|(&p, &q)| p as i64 + q as i64))
    }

    pub fn neg(&self, a: GroupElement) -> GroupElement {
        self.element_from_residues(self.components(a).iter().map(|&p| -(p as i64)))
    }

    pub fn sub(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.add(a, self.neg(b))
    }

    /// Concatenated digits ("01") when every order is at most 10, otherwise
    /// comma separated ("1,11").
    pub fn format(&self, g: GroupElement) -> String {
        let c = self.components(g);
        if self.rank() == 1 {
            c[0].to_string()
        } else if self.orders.iter().all(|&k| k <= 10) {
            c.iter().map(u32::to_string).collect()
        } else {
            c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
    }

    pub fn parse(&self, text: &str) -> Result<GroupElement, GradingError> {
        let bad = || GradingError::BadElement(text.to_string());
        let t = text.trim();
        let comps: Vec<u32> = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else if self.rank() == 1 {
            vec![t.parse().map_err(|_| bad())?]
        } else if t.len() == self.rank() && t.bytes().all(|b| b.is_ascii_digit()) {
            t.bytes().map(|b| (b - b'0') as u32).collect()
        } else {
            return Err(bad());
        };
        self.element(&comps).ok_or_else(bad)
    }
}

/// A bicharacter (α, β) ↦ ζ_M^{αᵀBβ}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    pub root_order: u32,
    pub matrix: Vec<Vec<i64>>,
}

impl Bicharacter {
    pub fn new(root_order: u32, matrix: Vec<Vec<i64>>) -> Self {
        Bicharacter { root_order, matrix }
    }

    /// Exponent of ζ_M, reduced mod M, evaluated on the residue representatives.
    pub fn exponent(&self, a: &[u32], b: &[u32]) -> i64 {
        let mut e = 0i64;
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, &bij) in row.iter().enumerate() {
                e += a[i] as i64 * bij * b[j] as i64;
            }
        }
        e.rem_euclid(self.root_order as i64)
    }

    fn check_shape(&self, what: &'static str, rank: usize) -> Result<(), GradingError> {
        if self.root_order == 0
            || self.matrix.len() != rank
            || self.matrix.iter().any(|r| r.len() != rank)
        {
            return Err(GradingError::MatrixShape { what, rank });
        }
        Ok(())
    }
}

/// Γ together with its block order, ω and optional σ, over ℚ(ζ_N).
#[derive(Clone, Debug)]
pub struct GradingContext {
    group: Group,
    omega: Bicharacter,
    sigma: Option<Bicharacter>,
    conductor: u32,
    order: Vec<GroupElement>,
    omega_table: Vec<CycScalar>,
    sigma_table: Option<Vec<CycScalar>>,
}

fn table(group: &Group, chi: &Bicharacter, conductor: u32) -> Vec<CycScalar> {
    let step = (conductor / chi.root_order) as i64;
    let mut t = Vec::with_capacity(group.size() * group.size());
    for a in group.elements() {
        for b in group.elements() {
            let e = chi.exponent(group.components(a), group.components(b));
            t.push(CycScalar::root_of_unity(conductor, e * step));
        }
    }
    t
}

impl GradingContext {
    pub fn new(
        orders: &[u32],
        omega: Bicharacter,
        sigma: Option<Bicharacter>,
        conductor: u32,
    ) -> Result<Self, GradingError> {
        let group = Group::new(orders)?;
        omega.check_shape("omega", group.rank())?;
        if let Some(s) = &sigma {
            s.check_shape("sigma", group.rank())?;
        }
        for chi in std::iter::once(&omega).chain(sigma.as_ref()) {
            if !conductor.is_multiple_of(chi.root_order) {
                return Err(GradingError::Conductor {
                    conductor,
                    root_order: chi.root_order,
                });
            }
        }
        let omega_table = table(&group, &omega, conductor);
        let sigma_table = sigma.as_ref().map(|s| table(&group, s, conductor));
        Ok(GradingContext {
            order: group.elements().collect(),
            group,
            omega,
            sigma,
            conductor,
            omega_table,
            sigma_table,
        })
    }

    /// Replaces the lexicographic block order.
    pub fn with_order(mut self, order: Vec<GroupElement>) -> Result<Self, GradingError> {
        let mut seen = vec![false; self.group.size()];
        if order.len() != seen.len() {
            return Err(GradingError::BadTotalOrder);
        }
        for g in &order {
            if g.0 >= seen.len() || std::mem::replace(&mut seen[g.0], true) {
                return Err(GradingError::BadTotalOrder);
            }
        }
        self.order = order;
        Ok(self)
    }

    /// ℤ₂² with ω(α,β) = (−1)^{α₁β₁+α₂β₂}.
    pub fn z2_squared() -> Self {
        Self::new(
            &[2, 2],
            Bicharacter::new(2, vec![vec![1, 0], vec![0, 1]]),
            None,
            crate::DEFAULT_CONDUCTOR,
        )
        .expect("valid built-in grading")
    }

    /// ℤ₃² with ω(α,β) = ξ^{α₁β₂−α₂β₁} and σ(α,β) = ξ^{α₁β₂}.
    pub fn z3_squared() -> Self {
        Self::new(
            &[3, 3],
            Bicharacter::new(3, vec![vec![0, 1], vec![-1, 0]]),
            Some(Bicharacter::new(3, vec![vec![0, 1], vec![0, 0]])),
            crate::DEFAULT_CONDUCTOR,
        )
        .expect("valid built-in grading")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn omega_factor(&self) -> &Bicharacter {
        &self.omega
    }

    pub fn sigma_factor(&self) -> Option<&Bicharacter> {
        self.sigma.as_ref()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Block order used for graded spaces.
    pub fn order(&self) -> &[GroupElement] {
        &self.order
    }

    pub fn omega(&self, a: GroupElement, b: GroupElement) -> &CycScalar {
        &self.omega_table[a.0 * self.group.size() + b.0]
    }

    pub fn sigma(&self, a: GroupElement, b: GroupElement) -> Result<&CycScalar, GradingError> {
        let t = self.sigma_table.as_ref().ok_or(GradingError::NoSigma)?;
        Ok(&t[a.0 * self.group.size() + b.0])
    }

    pub fn add(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.group.add(a, b)
    }

    pub fn neg(&self, a: GroupElement) -> GroupElement {
        self.group.neg(a)
    }

    pub fn zero(&self) -> GroupElement {
        self.group.zero()
    }

    pub fn fmt_el(&self, g: GroupElement) -> String {
        self.group.format(g)
    }

    pub fn parse_el(&self, text: &str) -> Result<GroupElement, GradingError> {
        self.group.parse(text)
    }

    pub fn one(&self) -> CycScalar {
        CycScalar::one(self.conductor)
    }

    pub fn scalar_zero(&self) -> CycScalar {
        CycScalar::zero(self.conductor)
    }
}

/// Exhaustively checks the commutation-factor laws and, when σ is present,
/// its factorization and biadditivity.
pub fn validate_factor(ctx: &GradingContext) -> Verdict {
    let g = ctx.group();
    let els: Vec<GroupElement> = g.elements().collect();
    let one = ctx.one();
    let minus_one = -&one;
    let f = |a| ctx.fmt_el(a);
    let mut v = Verdict::default();

    let mut t = LawTally::new("omega(a,b)*omega(b,a) = 1");
    for &a in &els {
        for &b in &els {
            t.record((ctx.omega(a, b) * ctx.omega(b, a)).is_one(), || {
                format!("a={} b={}", f(a), f(b))
            });
        }
    }
    v.push(t.finish());

    let mut right = LawTally::new("omega(a,b+c) = omega(a,b)*omega(a,c)");
    let mut left = LawTally::new("omega(a+b,c) = omega(a,c)*omega(b,c)");
    for &a in &els {
        for &b in &els {
            for &c in &els {
                right.record(
                    *ctx.omega(a, ctx.add(b, c)) == ctx.omega(a, b) * ctx.omega(a, c),
                    || format!("a={} b={} c={}", f(a), f(b), f(c)),
                );
                left.record(
                    *ctx.omega(ctx.add(a, b), c) == ctx.omega(a, c) * ctx.omega(b, c),
                    || format!("a={} b={} c={}", f(a), f(b), f(c)),
                );
            }
        }
    }
    v.push(right.finish());
    v.push(left.finish());

    let mut t = LawTally::new("omega(0,a) = omega(a,0) = 1");
    for &a in &els {
        let z = ctx.zero();
        t.record(ctx.omega(z, a).is_one() && ctx.omega(a, z).is_one(), || {
            format!("a={}", f(a))
        });
    }
    v.push(t.finish());

    let mut t = LawTally::new("omega(a,a) = +1 or -1");
    for &a in &els {
        let w = ctx.omega(a, a);
        t.record(*w == one || *w == minus_one, || {
            format!("a={} omega(a,a)={}", f(a), w)
        });
    }
    v.push(t.finish());

    let mut inv = LawTally::new("omega(a,-b) = omega(-a,b) = omega(b,a)");
    let mut both = LawTally::new("omega(-a,-b) = omega(a,b)");
    for &a in &els {
        for &b in &els {
            let (na, nb) = (ctx.neg(a), ctx.neg(b));
            inv.record(
                ctx.omega(a, nb) == ctx.omega(b, a) && ctx.omega(na, b) == ctx.omega(b, a),
                || format!("a={} b={}", f(a), f(b)),
            );
            both.record(ctx.omega(na, nb) == ctx.omega(a, b), || {
                format!("a={} b={}", f(a), f(b))
            });
        }
    }
    v.push(inv.finish());
    v.push(both.finish());

    if ctx.sigma_factor().is_some() {
        let s = |a, b| ctx.sigma(a, b).expect("sigma present");
        let mut fac = LawTally::new("sigma(a,b)/sigma(b,a) = omega(a,b)");
        for &a in &els {
            for &b in &els {
                let q = s(a, b).checked_div(s(b, a)).expect("roots of unity are invertible");
                fac.record(q == *ctx.omega(a, b), || format!("a={} b={}", f(a), f(b)));
            }
        }
        v.push(fac.finish());
        let mut right = LawTally::new("sigma(a,b+c) = sigma(a,b)*sigma(a,c)");
        let mut left = LawTally::new("sigma(a+b,c) = sigma(a,c)*sigma(b,c)");
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    right.record(*s(a, ctx.add(b, c)) == s(a, b) * s(a, c), || {
                        format!("a={} b={} c={}", f(a), f(b), f(c))
                    });
                    left.record(*s(ctx.add(a, b), c) == s(a, c) * s(b, c), || {
                        format!("a={} b={} c={}", f(a), f(b), f(c))
                    });
                }
            }
        }
        v.push(right.finish());
        v.push(left.finish());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_scalar;

    #[test]
    fn group_enumeration() {
        let g = Group::new(&[2, 2]).unwrap();
        let names: Vec<String> = g.elements().map(|e| g.format(e)).collect();
        assert_eq!(names, ["00", "01", "10", "11"]);
        let g = Group::new(&[3, 3]).unwrap();
        assert_eq!(g.size(), 9);
        assert_eq!(g.format(GroupElement(8)), "22");
        let g = Group::new(&[1]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.format(g.zero()), "0");
        assert_eq!(Group::new(&[]), Err(GradingError::EmptyGroup));
    }

    #[test]
    fn element_parsing() {
        let g = Group::new(&[3, 3]).unwrap();
        let a = g.parse("12").unwrap();
        assert_eq!(g.components(a), [1, 2]);
        assert_eq!(g.parse("1,2").unwrap(), a);
        assert!(g.parse("13").is_err());
        assert!(g.parse("1").is_err());
        let big = Group::new(&[12, 2]).unwrap();
        let e = big.element(&[11, 1]).unwrap();
        assert_eq!(big.format(e), "11,1");
        assert_eq!(big.parse("11,1").unwrap(), e);
    }

    #[test]
    fn group_arithmetic() {
        let g = Group::new(&[3, 3]).unwrap();
        for a in g.elements() {
            assert_eq!(g.add(a, g.neg(a)), g.zero());
            for b in g.elements() {
                assert_eq!(g.add(a, b), g.add(b, a));
            }
        }
    }

    #[test]
    fn omega_examples() {
        let z2 = GradingContext::z2_squared();
        let p = |s| z2.parse_el(s).unwrap();
        assert_eq!(*z2.omega(p("11"), p("01")), CycScalar::from_integer(-1, 12));
        let z3 = GradingContext::z3_squared();
        let q = |s| z3.parse_el(s).unwrap();
        assert_eq!(*z3.omega(q("01"), q("10")), parse_scalar("zeta3^2", 12).unwrap());
        for b in z3.group().elements() {
            assert!(z3.omega(z3.zero(), b).is_one());
        }
    }

    #[test]
    fn sigma_examples() {
        let z3 = GradingContext::z3_squared();
        let q = |s| z3.parse_el(s).unwrap();
        assert_eq!(*z3.sigma(q("11"), q("12")).unwrap(), parse_scalar("zeta3^2", 12).unwrap());
        for b in z3.group().elements() {
            assert!(z3.sigma(z3.zero(), b).unwrap().is_one());
        }
        let z2 = GradingContext::z2_squared();
        assert_eq!(z2.sigma(z2.zero(), z2.zero()), Err(GradingError::NoSigma));
    }

    #[test]
    fn validation_detects_bad_diagonal() {
        let ctx = GradingContext::new(&[3], Bicharacter::new(3, vec![vec![1]]), None, 12).unwrap();
        let v = validate_factor(&ctx);
        let diag = v.get("omega(a,a) = +1 or -1").unwrap();
        assert_eq!(diag.witness.as_deref(), Some("a=1 omega(a,a)=zeta3"));
        assert!(!v.passed());
    }

    #[test]
    fn validation_detects_non_biadditive() {
        // ζ₂ exponents are not well defined on ℤ₃
        let ctx = GradingContext::new(&[3], Bicharacter::new(2, vec![vec![1]]), None, 12).unwrap();
        let v = validate_factor(&ctx);
        assert!(!v.get("omega(a+b,c) = omega(a,c)*omega(b,c)").unwrap().passed());
    }

    #[test]
    fn constructor_errors() {
        let bad = GradingContext::new(&[2], Bicharacter::new(5, vec![vec![1]]), None, 12);
        assert!(matches!(bad, Err(GradingError::Conductor { .. })));
        let bad = GradingContext::new(&[2, 2], Bicharacter::new(2, vec![vec![1]]), None, 12);
        assert!(matches!(bad, Err(GradingError::MatrixShape { .. })));
        let ctx = GradingContext::z2_squared();
        assert!(ctx.clone().with_order(vec![GroupElement(0); 4]).is_err());
        assert!(ctx.with_order(vec![GroupElement(3), GroupElement(2), GroupElement(1), GroupElement(0)]).is_ok());
    }
}
