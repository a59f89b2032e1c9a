//! Exact arithmetic in cyclotomic fields `Q(z_M)`.
//!
//! Elements are stored as polynomials in `z = z_M` of degree `< phi(M)`, reduced
//! modulo the cyclotomic polynomial `Phi_M`, with integer numerators over one
//! common positive denominator. Signed powers of `z` are kept in a compact
//! root form so that products of roots of unity never touch big integers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

struct FieldInner {
    order: u32,
    phi: usize,
    /// `Phi_M`, low degree first, monic, length `phi + 1`.
    min_poly: Vec<BigInt>,
    /// `z^k mod Phi_M` for `k in 0..order`.
    powers: Vec<Vec<BigInt>>,
}

/// The field `Q(z_M)` for a fixed order `M`.
///
/// Cheap to clone; instances for the same order share one cached table.
#[derive(Clone)]
pub struct CycloField {
    inner: Arc<FieldInner>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.order == other.inner.order
    }
}

impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})", self.inner.order)
    }
}

fn registry() -> &'static Mutex<HashMap<u32, CycloField>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u32, CycloField>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of integer polynomials (low degree first); `den` must be monic.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// The `m`-th cyclotomic polynomial, computed as `(x^m - 1) / prod_{d | m, d < m} Phi_d`.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    let mut cache: HashMap<u32, Vec<BigInt>> = HashMap::new();
    cyclotomic_rec(m, &mut cache)
}

fn cyclotomic_rec(m: u32, cache: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let mut xm1 = vec![BigInt::zero(); m as usize + 1];
    xm1[0] = BigInt::from(-1);
    xm1[m as usize] = BigInt::one();
    let mut prod = vec![BigInt::one()];
    for d in 1..m {
        if m.is_multiple_of(d) {
            let pd = cyclotomic_rec(d, cache);
            prod = poly_mul_int(&prod, &pd);
        }
    }
    let res = poly_div_exact(&xm1, &prod);
    cache.insert(m, res.clone());
    res
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Reduce an integer polynomial modulo the monic `min_poly`, in place, to length `phi`.
fn reduce_mod(poly: &mut Vec<BigInt>, min_poly: &[BigInt]) {
    let phi = min_poly.len() - 1;
    while poly.len() > phi {
        let top = poly.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = poly.len() - phi;
        for (j, c) in min_poly[..phi].iter().enumerate() {
            if !c.is_zero() {
                poly[shift + j] -= &top * c;
            }
        }
    }
    poly.resize(phi, BigInt::zero());
}

impl CycloField {
    /// Returns the (cached) field `Q(z_M)`.
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::UnsupportedOrder(order));
        }
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(f) = reg.get(&order) {
            return Ok(f.clone());
        }
        let min_poly = cyclotomic_poly(order);
        let phi = min_poly.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            let mut next = Vec::with_capacity(phi + 1);
            next.push(BigInt::zero());
            next.extend(cur.iter().cloned());
            reduce_mod(&mut next, &min_poly);
            cur = next;
        }
        let field = CycloField {
            inner: Arc::new(FieldInner {
                order,
                phi,
                min_poly,
                powers,
            }),
        };
        reg.insert(order, field.clone());
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// Degree of the field over `Q`, i.e. `phi(M)`.
    pub fn degree(&self) -> usize {
        self.inner.phi
    }

    /// Coefficients of `Phi_M`, constant term first.
    pub fn min_poly(&self) -> &[BigInt] {
        &self.inner.min_poly
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum {
            field: self.clone(),
            repr: Repr::Poly(Poly::zero(self.inner.phi)),
        }
    }

    pub fn one(&self) -> CycloNum {
        self.root(false, 0)
    }

    pub fn from_int(&self, v: i64) -> CycloNum {
        match v {
            1 => self.one(),
            -1 => self.root(true, 0),
            _ => {
                let mut p = Poly::zero(self.inner.phi);
                p.num[0] = BigInt::from(v);
                CycloNum::from_poly(self.clone(), p)
            }
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> CycloNum {
        let mut p = Poly::zero(self.inner.phi);
        p.num[0] = v.numer().clone();
        p.den = v.denom().clone();
        p.normalize();
        CycloNum::from_poly(self.clone(), p)
    }

    /// Builds an element from rational coefficients of `1, z, ..., z^(phi-1)`.
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Result<CycloNum> {
        if coeffs.len() != self.inner.phi {
            return Err(Error::CoefficientLength {
                expected: self.inner.phi,
                got: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut p = Poly { num, den };
        p.normalize();
        Ok(CycloNum::from_poly(self.clone(), p))
    }

    /// `z_M^k`, with `k` reduced modulo `M` (negative `k` allowed).
    pub fn root_power(&self, k: i64) -> CycloNum {
        let m = self.inner.order as i64;
        self.root(false, k.rem_euclid(m) as u32)
    }

    /// `(-1)^neg * z_M^exp` in canonical form.
    fn root(&self, neg: bool, exp: u32) -> CycloNum {
        let m = self.inner.order;
        let mut exp = exp % m;
        let mut neg = neg;
        if neg && m.is_multiple_of(2) {
            exp = (exp + m / 2) % m;
            neg = false;
        }
        CycloNum {
            field: self.clone(),
            repr: Repr::Root { neg, exp },
        }
    }

    pub fn from_root_expr(&self, r: &RootExpr) -> Result<CycloNum> {
        if r.order != self.inner.order {
            let src = CycloField::new(r.order)?;
            return src.from_root_expr(r)?.embed(self);
        }
        Ok(self.root(r.sign < 0, r.exp.rem_euclid(r.order as i64) as u32))
    }
}

/// `sign * z_M^exp`, the compact form of every braiding coefficient in the families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootExpr {
    pub order: u32,
    pub exp: i64,
    pub sign: i8,
}

impl RootExpr {
    pub fn new(order: u32, exp: i64, sign: i8) -> Self {
        RootExpr { order, exp, sign }
    }

    /// Canonical form: exponent in `0..order`, sign folded into the exponent for even order.
    pub fn canonical(&self) -> Self {
        let m = self.order as i64;
        let mut exp = self.exp.rem_euclid(m);
        let mut sign = if self.sign < 0 { -1 } else { 1 };
        if sign < 0 && m % 2 == 0 {
            exp = (exp + m / 2) % m;
            sign = 1;
        }
        RootExpr {
            order: self.order,
            exp,
            sign,
        }
    }

    /// Parses `1`, `-1`, `zM`, `zM^k`, `-zM^k` (and `z` with an explicit default order).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid root literal `{s}` (expected zM^k, 1 or -1)"));
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (-1i8, rest.trim()),
            None => (1i8, t.strip_prefix('+').unwrap_or(t).trim()),
        };
        if body == "1" {
            return Ok(RootExpr::new(1, 0, sign));
        }
        let body = body.strip_prefix('z').ok_or_else(bad)?;
        let (ord, exp) = match body.split_once('^') {
            Some((o, e)) => (o, e.trim().trim_start_matches('(').trim_end_matches(')')),
            None => (body, "1"),
        };
        let order: u32 = ord.trim().parse().map_err(|_| bad())?;
        let exp: i64 = exp.parse().map_err(|_| bad())?;
        if order == 0 {
            return Err(bad());
        }
        Ok(RootExpr::new(order, exp, sign))
    }
}

impl fmt::Display for RootExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let s = if c.sign < 0 { "-" } else { "" };
        match (c.order, c.exp) {
            (_, 0) => write!(f, "{s}1"),
            (m, 1) => write!(f, "{s}z{m}"),
            (m, e) => write!(f, "{s}z{m}^{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Poly {
    fn zero(phi: usize) -> Self {
        Poly {
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }
}

#[derive(Clone)]
enum Repr {
    Root { neg: bool, exp: u32 },
    Poly(Poly),
}

/// An element of `Q(z_M)`.
#[derive(Clone)]
pub struct CycloNum {
    field: CycloField,
    repr: Repr,
}

/// The four field operations, for the checked [`arith`] entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: mismatched fields and division by zero are errors.
pub fn arith(op: ArithOp, x: &CycloNum, y: &CycloNum) -> Result<CycloNum> {
    x.same_field(y)?;
    match op {
        ArithOp::Add => Ok(x.add_ref(y)),
        ArithOp::Sub => Ok(x.add_ref(&y.neg_ref())),
        ArithOp::Mul => Ok(x.mul_ref(y)),
        ArithOp::Div => Ok(x.mul_ref(&y.inv()?)),
    }
}

impl CycloNum {
    fn from_poly(field: CycloField, p: Poly) -> Self {
        CycloNum {
            field,
            repr: Repr::Poly(p),
        }
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    fn same_field(&self, other: &CycloNum) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.order(), other.field.order()));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Root { .. } => false,
            Repr::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Root { neg, exp } => !*neg && *exp == 0,
            Repr::Poly(p) => {
                p.den.is_one() && p.num[0].is_one() && p.num[1..].iter().all(|c| c.is_zero())
            }
        }
    }

    fn to_poly(&self) -> Poly {
        match &self.repr {
            Repr::Poly(p) => p.clone(),
            Repr::Root { neg, exp } => {
                let base = &self.field.inner.powers[*exp as usize];
                let num = if *neg {
                    base.iter().map(|c| -c).collect()
                } else {
                    base.clone()
                };
                Poly {
                    num,
                    den: BigInt::one(),
                }
            }
        }
    }

    /// Rational coefficients of `1, z, ..., z^(phi-1)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let p = self.to_poly();
        p.num
            .iter()
            .map(|c| BigRational::new(c.clone(), p.den.clone()))
            .collect()
    }

    /// `Some` when the element is `+-z^k`.
    pub fn as_root(&self) -> Option<RootExpr> {
        let m = self.field.order();
        match &self.repr {
            Repr::Root { neg, exp } => Some(RootExpr::new(m, *exp as i64, if *neg { -1 } else { 1 })),
            Repr::Poly(p) => {
                if !p.den.is_one() || p.is_zero() {
                    return None;
                }
                for (k, pw) in self.field.inner.powers.iter().enumerate() {
                    if *pw == p.num {
                        return Some(RootExpr::new(m, k as i64, 1));
                    }
                    if pw.iter().zip(&p.num).all(|(a, b)| *a == -b) {
                        return Some(RootExpr::new(m, k as i64, -1).canonical());
                    }
                }
                None
            }
        }
    }

    /// Collapses a polynomial form that happens to be a signed root into the compact form.
    pub fn compact(self) -> Self {
        if let Repr::Poly(_) = self.repr {
            if let Some(r) = self.as_root() {
                return self.field.root(r.sign < 0, r.exp as u32);
            }
        }
        self
    }

    /// Multiplicative order, when the element is a root of unity.
    pub fn root_order(&self) -> Option<u32> {
        let r = self.as_root()?.canonical();
        let m = r.order;
        let base = m / (r.exp as u32).gcd(&m);
        Some(if r.sign < 0 { base.lcm(&2) } else { base })
    }

    fn add_ref(&self, other: &CycloNum) -> CycloNum {
        debug_assert!(self.field == other.field);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a = self.to_poly();
        let b = other.to_poly();
        let mut out = if a.den == b.den {
            Poly {
                num: a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect(),
                den: a.den,
            }
        } else {
            Poly {
                num: a
                    .num
                    .iter()
                    .zip(&b.num)
                    .map(|(x, y)| x * &b.den + y * &a.den)
                    .collect(),
                den: a.den * b.den,
            }
        };
        out.normalize();
        CycloNum::from_poly(self.field.clone(), out)
    }

    fn neg_ref(&self) -> CycloNum {
        match &self.repr {
            Repr::Root { neg, exp } => self.field.root(!*neg, *exp),
            Repr::Poly(p) => CycloNum::from_poly(
                self.field.clone(),
                Poly {
                    num: p.num.iter().map(|c| -c).collect(),
                    den: p.den.clone(),
                },
            ),
        }
    }

    fn mul_poly_root(&self, p: &Poly, neg: bool, exp: u32) -> CycloNum {
        let phi = self.field.inner.phi;
        let mut buf = vec![BigInt::zero(); phi + exp as usize];
        for (i, c) in p.num.iter().enumerate() {
            if !c.is_zero() {
                buf[i + exp as usize] = if neg { -c } else { c.clone() };
            }
        }
        reduce_mod(&mut buf, &self.field.inner.min_poly);
        CycloNum::from_poly(
            self.field.clone(),
            Poly {
                num: buf,
                den: p.den.clone(),
            },
        )
    }

    fn mul_ref(&self, other: &CycloNum) -> CycloNum {
        debug_assert!(self.field == other.field);
        match (&self.repr, &other.repr) {
            (Repr::Root { neg: n1, exp: e1 }, Repr::Root { neg: n2, exp: e2 }) => {
                self.field.root(n1 ^ n2, e1 + e2)
            }
            (Repr::Root { neg, exp }, Repr::Poly(p)) | (Repr::Poly(p), Repr::Root { neg, exp }) => {
                if p.is_zero() {
                    return self.field.zero();
                }
                self.mul_poly_root(p, *neg, *exp)
            }
            (Repr::Poly(a), Repr::Poly(b)) => {
                if a.is_zero() || b.is_zero() {
                    return self.field.zero();
                }
                let mut prod = poly_mul_int(&a.num, &b.num);
                reduce_mod(&mut prod, &self.field.inner.min_poly);
                let mut out = Poly {
                    num: prod,
                    den: &a.den * &b.den,
                };
                out.normalize();
                CycloNum::from_poly(self.field.clone(), out)
            }
        }
    }

    /// Multiplicative inverse; the extended Euclidean algorithm against `Phi_M` for general elements.
    pub fn inv(&self) -> Result<CycloNum> {
        match &self.repr {
            Repr::Root { neg, exp } => {
                let m = self.field.order();
                Ok(self.field.root(*neg, (m - exp) % m))
            }
            Repr::Poly(p) => {
                if p.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let a: Vec<BigRational> = p
                    .num
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                let m: Vec<BigRational> = self
                    .field
                    .min_poly()
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                let mut u = qpoly::inverse_mod(&a, &m);
                // inverse of num/den is den * num^-1
                let den = BigRational::from_integer(p.den.clone());
                for c in &mut u {
                    *c = &*c * &den;
                }
                u.resize(self.field.degree(), BigRational::zero());
                self.field.from_coeffs(&u)
            }
        }
    }

    /// `self^k`; negative `k` inverts (the zero element raises an error then).
    pub fn pow(&self, k: i64) -> Result<CycloNum> {
        if let Repr::Root { neg, exp } = &self.repr {
            let m = self.field.order() as i64;
            let e = (*exp as i64 * k).rem_euclid(m) as u32;
            let n = *neg && k.rem_euclid(2) == 1;
            return Ok(self.field.root(n, e));
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }

    /// True iff `self^m = 1` and `self^d != 1` for every proper divisor `d` of `m`.
    pub fn is_primitive_root(&self, m: u32) -> bool {
        if m == 0 || self.is_zero() {
            return false;
        }
        let p = |d: u32| self.pow(d as i64).map(|v| v.is_one()).unwrap_or(false);
        p(m) && (1..m).filter(|d| m.is_multiple_of(*d)).all(|d| !p(d))
    }

    /// Image under `Q(z_M) -> Q(z_M')`, `z_M -> z_M'^(M'/M)`.
    pub fn embed(&self, target: &CycloField) -> Result<CycloNum> {
        let m = self.field.order();
        let mt = target.order();
        if !mt.is_multiple_of(m) {
            return Err(Error::EmbeddingOrder { from: m, to: mt });
        }
        let step = mt / m;
        match &self.repr {
            Repr::Root { neg, exp } => Ok(target.root(*neg, exp * step)),
            Repr::Poly(p) => {
                let mut acc = vec![BigInt::zero(); target.degree()];
                for (i, c) in p.num.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let pw = &target.inner.powers[((i as u32 * step) % mt) as usize];
                    for (a, b) in acc.iter_mut().zip(pw) {
                        *a += c * b;
                    }
                }
                let mut out = Poly {
                    num: acc,
                    den: p.den.clone(),
                };
                out.normalize();
                Ok(CycloNum::from_poly(target.clone(), out))
            }
        }
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Root { neg: a, exp: b }, Repr::Root { neg: c, exp: d }) => a == c && b == d,
            _ => self.to_poly() == other.to_poly(),
        }
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_root() {
            return write!(f, "{r}");
        }
        let p = self.to_poly();
        let m = self.field.order();
        let mut terms = Vec::new();
        for (i, c) in p.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{i}"),
            };
            let coef = BigRational::new(c.clone(), p.den.clone());
            let t = if mon.is_empty() {
                coef.to_string()
            } else if coef.is_one() {
                mon
            } else if coef == -BigRational::one() {
                format!("-{mon}")
            } else {
                format!("{coef}*{mon}")
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycloNum> for &'a CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &'a CycloNum) -> CycloNum {
                assert!(self.field == rhs.field, "cyclotomic field mismatch");
                $body(self, rhs)
            }
        }
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycloNum, b: &CycloNum| a.add_ref(b));
forward_binop!(Sub, sub, |a: &CycloNum, b: &CycloNum| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a: &CycloNum, b: &CycloNum| a.mul_ref(b));

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.neg_ref()
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.neg_ref()
    }
}

/// Dense polynomials over `Q`, only what the inverse needs.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<BigRational>) {
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        if r.len() - 1 < db {
            return (vec![BigRational::zero()], r);
        }
        let lead = b[db].clone();
        let mut q = vec![BigRational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = &r[i + j] - &c * bj;
            }
            q[i] = c;
        }
        r.truncate(db.max(1));
        trim(&mut r);
        (q, r)
    }

    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len().max(q.len() + b.len() - 1)];
        for (i, c) in a.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, x) in q.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] - x * y;
            }
        }
        trim(&mut out);
        out
    }

    fn is_zero_poly(p: &[BigRational]) -> bool {
        p.iter().all(|c| c.is_zero())
    }

    /// `u` with `u * a = 1 mod m`, for `a` coprime to `m`.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut t0, mut t1) = (vec![BigRational::zero()], vec![BigRational::from_integer(1.into())]);
        while !is_zero_poly(&r1) {
            let (q, r) = divmod(&r0, &r1);
            let t2 = sub_mul(&t0, &q, &t1);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant since Phi_M is irreducible
        let c = r0[0].clone();
        let (_, mut u) = divmod(&t0, m);
        for x in &mut u {
            *x = &*x / &c;
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic_poly(m).len() - 1, euler_phi(m), "deg Phi_{m}");
        }
    }

    #[test]
    fn min_poly_divides_x_m_minus_one() {
        for m in [5u32, 8, 15, 24, 30] {
            let phi = cyclotomic_poly(m);
            let mut xm1 = vec![BigInt::zero(); m as usize + 1];
            xm1[0] = BigInt::from(-1);
            xm1[m as usize] = BigInt::one();
            let q = poly_div_exact(&xm1, &phi);
            assert_eq!(poly_mul_int(&q, &phi), xm1);
        }
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(CycloField::new(0), Err(Error::UnsupportedOrder(0))));
    }

    #[test]
    fn spec_arith_examples() {
        let f4 = CycloField::new(4).unwrap();
        let z4 = f4.root_power(1);
        assert_eq!(&z4 * &z4, f4.from_int(-1));

        for m in [3u32, 5, 8, 9] {
            let f = CycloField::new(m).unwrap();
            let z = f.root_power(1);
            let q = arith(ArithOp::Div, &f.one(), &z).unwrap();
            assert_eq!(q, f.root_power(m as i64 - 1));
        }

        let f3 = CycloField::new(3).unwrap();
        let z3 = f3.root_power(1);
        let s = &f3.one() + &z3;
        assert_eq!(&s + &(-&z3), f3.one());
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f = CycloField::new(5).unwrap();
        let g = CycloField::new(7).unwrap();
        assert!(matches!(
            arith(ArithOp::Div, &f.one(), &f.zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            arith(ArithOp::Add, &f.one(), &g.one()),
            Err(Error::FieldMismatch(5, 7))
        ));
    }

    #[test]
    fn root_power_examples() {
        let f8 = CycloField::new(8).unwrap();
        assert!(f8.root_power(0).is_one());
        assert_eq!(f8.root_power(-1), f8.root_power(7));
        let f4 = CycloField::new(4).unwrap();
        assert_eq!(f4.root_power(2), f4.from_int(-1));
    }

    #[test]
    fn primitive_root_examples() {
        let f = CycloField::new(6).unwrap();
        assert!(f.from_int(-1).is_primitive_root(2));
        assert!(!f.one().is_primitive_root(3));
        assert!(f.root_power(2).is_primitive_root(3));
        // general (non-compact) representation takes the same path
        let z6sq = (&f.root_power(1) + &f.zero()) * (&f.root_power(1) + &f.zero());
        assert!(z6sq.is_primitive_root(3));
        assert_eq!(z6sq.root_order(), Some(3));
    }

    #[test]
    fn embedding_examples() {
        let f2 = CycloField::new(2).unwrap();
        let f8 = CycloField::new(8).unwrap();
        assert_eq!(f2.root_power(1).embed(&f8).unwrap(), f8.root_power(4));
        assert!(f2.one().embed(&f8).unwrap().is_one());
        let f5 = CycloField::new(5).unwrap();
        let f20 = CycloField::new(20).unwrap();
        for k in 0..5 {
            let fourth = f20.root_power(k);
            assert_eq!(fourth.pow(4).unwrap(), f5.root_power(k).embed(&f20).unwrap());
        }
        assert!(matches!(
            f8.one().embed(&f5),
            Err(Error::EmbeddingOrder { from: 8, to: 5 })
        ));
    }

    #[test]
    fn general_inverse() {
        let f = CycloField::new(12).unwrap();
        let x = &(&f.from_int(3) + &f.root_power(1)) - &f.root_power(5);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn root_literals() {
        assert_eq!(RootExpr::parse("z3^2").unwrap(), RootExpr::new(3, 2, 1));
        assert_eq!(RootExpr::parse("-1").unwrap(), RootExpr::new(1, 0, -1));
        assert_eq!(RootExpr::parse("z8").unwrap(), RootExpr::new(8, 1, 1));
        assert_eq!(RootExpr::parse("-z5^-1").unwrap(), RootExpr::new(5, -1, -1));
        assert!(RootExpr::parse("2").is_err());
        assert!(RootExpr::parse("z0^1").is_err());
        assert_eq!(RootExpr::new(8, 1, -1).to_string(), "z8^5");
    }

    #[test]
    fn compact_detects_roots() {
        let f = CycloField::new(10).unwrap();
        let x = &f.root_power(3) + &f.zero();
        let sum = &x + &f.zero();
        assert_eq!(sum.clone().compact().as_root(), Some(RootExpr::new(10, 3, 1)));
        assert_eq!(sum, f.root_power(3));
    }
}
