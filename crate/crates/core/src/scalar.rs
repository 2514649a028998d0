//! Exact arithmetic in a cyclotomic field ℚ(ζ_N).
//!
//! An element is stored as its residue modulo the N-th cyclotomic polynomial
//! Φ_N, i.e. as φ(N) rational coefficients in the power basis
//! 1, ζ_N, …, ζ_N^{φ(N)-1}. Every operation reduces back to this canonical
//! form, so structural equality is field equality.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ScalarError;

/// Conductor used when a spec file does not name one: ℚ(ζ₁₂) contains both
/// ζ₃ and i.
pub const DEFAULT_CONDUCTOR: u32 = 12;

struct FieldData {
    /// Coefficients of Φ_N, lowest degree first, monic.
    phi: Vec<i64>,
    degree: usize,
    /// Reduced residues of ζ_N^k for k in 0..N.
    powers: Vec<Vec<BigRational>>,
}

thread_local! {
    static FIELDS: RefCell<HashMap<u32, Rc<FieldData>>> = RefCell::new(HashMap::new());
}

fn field(n: u32) -> Rc<FieldData> {
    FIELDS.with(|cache| {
        if let Some(f) = cache.borrow().get(&n) {
            return f.clone();
        }
        let f = Rc::new(FieldData::new(n));
        cache.borrow_mut().insert(n, f.clone());
        f
    })
}

impl FieldData {
    fn new(n: u32) -> Self {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce
            let mut next = vec![BigRational::zero(); degree + 1];
            for (k, c) in cur.iter().enumerate() {
                next[k + 1] = c.clone();
            }
            reduce_in_place(&mut next, &phi);
            next.truncate(degree);
            cur = next;
        }
        FieldData { phi, degree, powers }
    }
}

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0, "conductor must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn reduce_in_place(p: &mut Vec<BigRational>, phi: &[i64]) {
    let d = phi.len() - 1;
    while p.len() > d {
        let top = p.pop().expect("non-empty");
        if top.is_zero() {
            continue;
        }
        let base = p.len() - d;
        for (j, &c) in phi[..d].iter().enumerate() {
            if c != 0 {
                p[base + j] -= &top * BigRational::from_integer(BigInt::from(c));
            }
        }
    }
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// An exact element of ℚ(ζ_N).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(conductor: u32) -> Self {
        let d = field(conductor).degree;
        CycScalar {
            conductor,
            coeffs: vec![BigRational::zero(); d],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(1, conductor)
    }

    pub fn from_integer(k: i64, conductor: u32) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)), conductor)
    }

    pub fn from_ratio(num: i64, den: i64, conductor: u32) -> Self {
        Self::from_rational(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            conductor,
        )
    }

    pub fn from_rational(q: BigRational, conductor: u32) -> Self {
        let mut s = Self::zero(conductor);
        s.coeffs[0] = q;
        s
    }

    /// ζ_N^k; the exponent is reduced modulo N.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let f = field(conductor);
        let idx = k.rem_euclid(conductor as i64) as usize;
        CycScalar {
            conductor,
            coeffs: f.powers[idx].clone(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients (length φ(N)).
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// `Some(k)` when the element is a rational integer fitting in i64.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "scalars from different cyclotomic fields"
        );
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.conductor);
        }
        if let Some(q) = self.as_rational() {
            return other.scale_rational(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale_rational(q);
        }
        let f = field(self.conductor);
        let d = f.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_in_place(&mut prod, &f.phi);
        prod.resize(d, BigRational::zero());
        CycScalar {
            conductor: self.conductor,
            coeffs: prod,
        }
    }

    /// Multiplicative inverse.
    ///
    /// Solved as the linear system "multiplication by self" acting on the
    /// power basis, which is invertible exactly when self ≠ 0.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip(), self.conductor));
        }
        let n = self.conductor;
        let d = self.coeffs.len();
        // column k = self * ζ^k
        let mut cols = Vec::with_capacity(d);
        for k in 0..d {
            cols.push(self.mul_ref(&Self::root_of_unity(n, k as i64)).coeffs);
        }
        // augmented system M x = e_0, M[r][k] = cols[k][r]
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|k| cols[k][r].clone()).collect();
                row.push(if r == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            m.swap(col, piv);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..=d {
                        let sub = &factor * &m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        Ok(CycScalar {
            conductor: n,
            coeffs: m.into_iter().map(|row| row[d].clone()).collect(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.conductor);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Finds `(q, order, power)` with self = q·ζ_order^power, trying roots of
    /// small order first.
    fn as_monomial(&self) -> Option<(BigRational, u32, u32)> {
        let n = self.conductor;
        if let Some(q) = self.as_rational() {
            return Some((q.clone(), 1, 0));
        }
        for order in (3..=n).filter(|m| n.is_multiple_of(*m)) {
            for j in (1..order).filter(|j| j.gcd(&order) == 1) {
                let k = j * (n / order);
                let c = self * &Self::root_of_unity(n, -(k as i64));
                if let Some(q) = c.as_rational() {
                    return Some((q.clone(), order, j));
                }
            }
        }
        None
    }
}

fn root_name(order: u32, power: u32) -> String {
    match (order, power) {
        (4, 1) => "i".to_string(),
        (_, 1) => format!("zeta{order}"),
        _ => format!("zeta{order}^{power}"),
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes `q*root`, collapsing unit coefficients. The sign is handled by the caller.
fn fmt_term(abs_q: &BigRational, root: Option<String>) -> String {
    match root {
        None => fmt_rational(abs_q),
        Some(r) if abs_q.is_one() => r,
        Some(r) => format!("{}*{}", fmt_rational(abs_q), r),
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((q, order, power)) = self.as_monomial() {
            let root = (order > 1).then(|| root_name(order, power));
            let sign = if q.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, fmt_term(&q.abs(), root));
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let root = (k > 0).then(|| {
                if n == 4 {
                    root_name(4, k as u32)
                } else if k == 1 {
                    format!("zeta{n}")
                } else {
                    format!("zeta{n}^{k}")
                }
            });
            let term = fmt_term(&c.abs(), root);
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the scalar grammar: a signed sum of terms, each term a product of
/// rationals (`3`, `-1/2`) and roots (`i`, `zeta3`, `zeta12^5`).
pub fn parse_scalar(text: &str, conductor: u32) -> Result<CycScalar, ScalarError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        conductor,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    conductor: u32,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Syntax {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CycScalar, ScalarError> {
        let mut acc = CycScalar::zero(self.conductor);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None if first => return Err(self.err("empty expression")),
                None => break,
                _ if first => 1,
                _ => return Err(self.err("expected '+' or '-'")),
            };
            let t = self.term()?;
            if sign < 0 {
                acc -= t;
            } else {
                acc += t;
            }
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CycScalar, ScalarError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
    }

    fn exponent(&mut self) -> Result<i64, ScalarError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let e = self
            .digits()
            .and_then(|d| d.to_i64())
            .ok_or_else(|| self.err("expected exponent"))?;
        Ok(if neg { -e } else { e })
    }

    fn root(&mut self, order: u32) -> Result<CycScalar, ScalarError> {
        if order == 0 || !self.conductor.is_multiple_of(order) {
            return Err(ScalarError::RootOrder {
                order,
                conductor: self.conductor,
            });
        }
        let e = self.exponent()?;
        let step = (self.conductor / order) as i64;
        Ok(CycScalar::root_of_unity(self.conductor, e * step))
    }

    fn factor(&mut self) -> Result<CycScalar, ScalarError> {
        match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                self.root(4)
            }
            Some(b'z') => {
                if !self.s[self.pos..].starts_with(b"zeta") {
                    return Err(self.err("expected 'zeta'"));
                }
                self.pos += 4;
                let order = self
                    .digits()
                    .and_then(|d| d.to_u32())
                    .ok_or_else(|| self.err("expected root order after 'zeta'"))?;
                self.root(order)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().expect("digit present");
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self
                        .digits()
                        .ok_or_else(|| self.err("expected denominator"))?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(CycScalar::from_rational(
                    BigRational::new(num, den),
                    self.conductor,
                ))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl Add<&CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(mut self, rhs: CycScalar) -> CycScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        self.check_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl AddAssign for CycScalar {
    fn add_assign(&mut self, rhs: CycScalar) {
        *self += &rhs;
    }
}

impl Sub<&CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(mut self, rhs: CycScalar) -> CycScalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        self.check_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl SubAssign for CycScalar {
    fn sub_assign(&mut self, rhs: CycScalar) {
        *self -= &rhs;
    }
}

impl Mul<&CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.mul_ref(rhs)
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        self.mul_ref(&rhs)
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(mut self) -> CycScalar {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const N: u32 = DEFAULT_CONDUCTOR;

    fn s(text: &str) -> CycScalar {
        parse_scalar(text, N).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn parse_examples() {
        assert!(s("zeta3^2 + zeta3 + 1").is_zero());
        let half = s("-1/2");
        assert_eq!(half, CycScalar::from_ratio(-1, 2, N));
        assert!(half.coefficients()[1..].iter().all(Zero::is_zero));
        assert_eq!(s("i*i"), CycScalar::from_integer(-1, N));
        assert_eq!(s("  2 * zeta3 -  zeta3^-1 "), s("2*zeta3 - zeta3^2"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_scalar("zeta5", N),
            Err(ScalarError::RootOrder { order: 5, .. })
        ));
        assert!(matches!(
            parse_scalar("i", 6),
            Err(ScalarError::RootOrder { order: 4, .. })
        ));
        for bad in ["", "1 +", "1/0", "3 4", "zet3", "1/-2", "*2"] {
            assert!(
                matches!(parse_scalar(bad, N), Err(ScalarError::Syntax { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn arithmetic_examples() {
        let xi = CycScalar::root_of_unity(N, 4);
        assert_eq!(xi.inv().unwrap(), &xi * &xi);
        assert_eq!(&s("1+i") * &s("1-i"), CycScalar::from_integer(2, N));
        assert_eq!(&xi + &(&xi * &xi), CycScalar::from_integer(-1, N));
        assert!(matches!(
            CycScalar::zero(N).inv(),
            Err(ScalarError::DivisionByZero)
        ));
        assert!(s("3").checked_div(&CycScalar::zero(N)).is_err());
    }

    #[test]
    fn roots_of_unity() {
        assert!(CycScalar::root_of_unity(N, 0).is_one());
        let xi = CycScalar::root_of_unity(N, 4);
        assert!(!xi.is_one());
        assert!(xi.pow(3).unwrap().is_one());
        let i = CycScalar::root_of_unity(N, 3);
        assert_eq!(i.pow(2).unwrap(), CycScalar::from_integer(-1, N));
        assert!(CycScalar::root_of_unity(N, N as i64).is_one());
        assert_eq!(CycScalar::root_of_unity(N, -1), CycScalar::root_of_unity(N, 11));
    }

    #[test]
    fn printing() {
        let cases = [
            ("0", "0"),
            ("-1/2", "-1/2"),
            ("zeta3", "zeta3"),
            ("1/2*zeta3", "1/2*zeta3"),
            ("2*zeta3^2", "2*zeta3^2"),
            ("-zeta3", "-zeta3"),
            ("i", "i"),
            ("-3*i", "-3*i"),
            ("zeta12", "zeta12"),
            ("1 + i", "zeta12^3 + 1"),
        ];
        for (input, want) in cases {
            assert_eq!(s(input).to_string(), want, "{input}");
        }
        assert_eq!(parse_scalar("1+i", 4).unwrap().to_string(), "i + 1");
    }

    fn arb_scalar() -> impl Strategy<Value = CycScalar> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 4).prop_map(|cs| {
            let mut acc = CycScalar::zero(N);
            for (k, (num, den)) in cs.into_iter().enumerate() {
                acc += &CycScalar::from_ratio(num, den, N) * &CycScalar::root_of_unity(N, k as i64);
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn print_parse_round_trip(a in arb_scalar()) {
            let printed = a.to_string();
            let back = parse_scalar(&printed, N).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
