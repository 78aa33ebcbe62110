//! Exact arithmetic in GF(p^e) with a polynomial basis.
//!
//! A [`Field`] is a cheap, clonable handle to an immutable description of
//! `GF(p)[x] / (f)` for a monic irreducible `f` of degree `e`. Elements are
//! plain [`Element`] values holding the coefficient vector packed as the
//! integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`; every operation goes
//! through the owning field.
//!
//! Fields of order at most [`TABLE_LIMIT`] keep discrete log / exponent
//! tables built from their smallest primitive element. Larger fields (used
//! as splitting fields for roots of unity) fall back to schoolbook
//! multiplication modulo `f`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Fields up to this order get log/exp tables.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest supported field order.
const MAX_ORDER: u64 = 1 << 62;

/// Field element, interpreted relative to its owning [`Field`].
///
/// The wrapped integer is the coefficient vector read as base-`p` digits,
/// constant term least significant, so `0` and `1` are the field's zero and
/// one and ordering by encoding is the canonical "smallest element" order.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u64);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    pub fn encoding(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Galois duality parameter `k` with `0 <= k < e`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaloisParam(usize);

impl GaloisParam {
    pub fn new(field: &Field, k: usize) -> Result<Self> {
        if k >= field.degree() {
            return Err(Error::InvalidContext(format!(
                "Galois parameter k = {k} must satisfy k < e = {}",
                field.degree()
            )));
        }
        Ok(GaloisParam(k))
    }

    pub fn euclidean() -> Self {
        GaloisParam(0)
    }

    pub fn k(self) -> usize {
        self.0
    }

    /// The exponent `j = e - k` such that the Galois dual is the Euclidean
    /// dual of the `p^j`-th power code.
    pub fn conjugate_exponent(self, e: usize) -> usize {
        e - self.0
    }
}

/// JSON shape of a field: `{"p": .., "e": .., "modulus": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub e: usize,
    pub modulus: Vec<u64>,
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    e: usize,
    order: u64,
    modulus: Vec<u64>,
    tables: Option<LogTables>,
    group_factors: OnceLock<Vec<(u64, u32)>>,
    primitive: OnceLock<Element>,
}

/// A finite field GF(p^e) with an explicit modulus.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.p.hash(state);
        self.inner.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.inner.p, self.inner.e, self.inner.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.e)
        }
    }
}

impl Field {
    /// Build GF(p^e). Without an explicit modulus the monic irreducible
    /// polynomial of degree `e` with the smallest base-`p` encoding
    /// (leading coefficient most significant) is used.
    pub fn new(p: u64, e: usize, modulus: Option<&[u64]>) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = match arith::checked_pow(p, e) {
            Some(q) if q <= MAX_ORDER => q,
            _ => return Err(Error::FieldTooLarge { p, e }),
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {e}, got {}",
                        e + 1,
                        m.len()
                    )));
                }
                let m: Vec<u64> = m.iter().map(|c| c % p).collect();
                if m[e] != 1 {
                    return Err(Error::InvalidModulus("modulus is not monic".into()));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(Error::InvalidModulus("modulus is reducible".into()));
                }
                m
            }
            None => default_modulus(p, e),
        };
        let mut inner = Inner {
            p,
            e,
            order,
            modulus,
            tables: None,
            group_factors: OnceLock::new(),
            primitive: OnceLock::new(),
        };
        if order <= TABLE_LIMIT {
            let field = Field { inner: Arc::new(inner) };
            let g = field.primitive_element();
            let mut exp = Vec::with_capacity((order - 1) as usize);
            let mut log = vec![0u32; order as usize];
            let mut x = Element::ONE;
            for i in 0..order - 1 {
                exp.push(x.0);
                log[x.0 as usize] = i as u32;
                x = field.mul(x, g);
            }
            inner = Arc::try_unwrap(field.inner).ok().expect("field handle is unique");
            inner.tables = Some(LogTables { exp, log });
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p, spec.e, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.inner.p,
            e: self.inner.e,
            modulus: self.inner.modulus.clone(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.e
    }

    /// Number of elements `q = p^e`.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn galois(&self, k: usize) -> Result<GaloisParam> {
        GaloisParam::new(self, k)
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn one(&self) -> Element {
        Element::ONE
    }

    /// The class of `x` in `GF(p)[x]/(f)`. For prime fields this is the
    /// root of the modulus `x`, i.e. zero.
    pub fn generator(&self) -> Element {
        if self.inner.e == 1 {
            Element((self.inner.p - self.inner.modulus[0]) % self.inner.p)
        } else {
            Element(self.inner.p)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Element {
        Element(arith::reduce_signed(v, self.inner.p))
    }

    pub fn element(&self, encoding: u64) -> Result<Element> {
        if encoding >= self.inner.order {
            return Err(Error::InvalidElement(format!(
                "encoding {encoding} out of range for {self}"
            )));
        }
        Ok(Element(encoding))
    }

    /// Element with the given coefficients (constant term first). Missing
    /// high coefficients are zero; values are reduced modulo `p`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Element> {
        if coeffs.len() > self.inner.e {
            return Err(Error::InvalidElement(format!(
                "{} coefficients given for degree {}",
                coeffs.len(),
                self.inner.e
            )));
        }
        let p = self.inner.p;
        Ok(Element(
            coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c % p),
        ))
    }

    /// Coefficient vector of length `e`, constant term first.
    pub fn coeffs(&self, x: Element) -> Vec<u64> {
        let p = self.inner.p;
        let mut v = x.0;
        (0..self.inner.e)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.inner.order).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> {
        (1..self.inner.order).map(Element)
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        let p = self.inner.p;
        if p == 2 {
            return Element(a.0 ^ b.0);
        }
        if self.inner.e == 1 {
            let s = a.0 + b.0;
            return Element(if s >= p { s - p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while x != 0 || y != 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        Element(out)
    }

    pub fn neg(&self, a: Element) -> Element {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        if self.inner.e == 1 {
            return Element(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while x != 0 {
            let d = x % p;
            out += ((p - d) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        Element(out)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        if let Some(t) = &self.inner.tables {
            let n = t.exp.len();
            let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return Element(t.exp[if s >= n { s - n } else { s }]);
        }
        if self.inner.e == 1 {
            return Element(arith::mul_mod(a.0, b.0, self.inner.p));
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: Element, b: Element) -> Element {
        let p = self.inner.p;
        let e = self.inner.e;
        let mut ad = [0u64; 64];
        let mut bd = [0u64; 64];
        self.unpack(a, &mut ad);
        self.unpack(b, &mut bd);
        let mut prod = [0u64; 128];
        for i in 0..e {
            if ad[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = (prod[i + j] + ad[i] * bd[j]) % p;
            }
        }
        let m = &self.inner.modulus;
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            let c = p - c;
            for j in 0..e {
                prod[i - e + j] = (prod[i - e + j] + c * m[j]) % p;
            }
            prod[i] = 0;
        }
        self.pack(&prod[..e])
    }

    fn unpack(&self, x: Element, out: &mut [u64]) {
        let p = self.inner.p;
        let mut v = x.0;
        for d in out.iter_mut().take(self.inner.e) {
            *d = v % p;
            v /= p;
        }
    }

    fn pack(&self, digits: &[u64]) -> Element {
        let p = self.inner.p;
        Element(digits.iter().rev().fold(0u64, |acc, &c| acc * p + c))
    }

    pub fn square(&self, a: Element) -> Element {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Element, exp: u64) -> Element {
        if exp == 0 {
            return Element::ONE;
        }
        if a.0 == 0 {
            return Element::ZERO;
        }
        if let Some(t) = &self.inner.tables {
            let n = t.exp.len() as u64;
            let l = arith::mul_mod(t.log[a.0 as usize] as u64, exp % n, n);
            return Element(t.exp[l as usize]);
        }
        let mut base = a;
        let mut acc = Element::ONE;
        let mut k = exp;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^s` for a signed exponent; `a` must be nonzero when `s < 0`.
    pub fn pow_signed(&self, a: Element, s: i64) -> Result<Element> {
        let n = self.inner.order - 1;
        if s >= 0 {
            return Ok(self.pow(a, s as u64));
        }
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, arith::reduce_signed(s, n)))
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, self.inner.order - 2))
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^(p^j)`.
    pub fn frobenius_pow(&self, x: Element, j: usize) -> Element {
        let j = j % self.inner.e;
        if j == 0 || x.0 <= 1 {
            return x;
        }
        if let Some(t) = &self.inner.tables {
            let n = t.exp.len() as u64;
            let pj = arith::pow_mod(self.inner.p, j as u64, n);
            let l = arith::mul_mod(t.log[x.0 as usize] as u64, pj, n);
            return Element(t.exp[l as usize]);
        }
        (0..j).fold(x, |acc, _| self.pow(acc, self.inner.p))
    }

    fn group_factors(&self) -> &[(u64, u32)] {
        self.inner
            .group_factors
            .get_or_init(|| arith::factorize(self.inner.order - 1))
    }

    /// Smallest `r >= 1` with `x^r = 1`.
    pub fn mult_order(&self, x: Element) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.inner.order - 1;
        if let Some(t) = &self.inner.tables {
            let l = t.log[x.0 as usize] as u64;
            return Ok(n / arith::gcd(l, n));
        }
        let mut order = n;
        for &(l, _) in self.group_factors() {
            while order % l == 0 && self.pow(x, order / l) == Element::ONE {
                order /= l;
            }
        }
        Ok(order)
    }

    pub fn is_primitive(&self, x: Element) -> bool {
        if x.is_zero() {
            return false;
        }
        let n = self.inner.order - 1;
        self.group_factors()
            .iter()
            .all(|&(l, _)| self.pow(x, n / l) != Element::ONE)
    }

    /// The primitive element with the smallest encoding.
    pub fn primitive_element(&self) -> Element {
        *self.inner.primitive.get_or_init(|| {
            (1..self.inner.order)
                .map(Element)
                .find(|&g| self.is_primitive(g))
                .expect("the multiplicative group of a finite field is cyclic")
        })
    }

    /// An element `eta` with `eta^2 = -1`; of the (at most two) roots the one
    /// with the smaller encoding is returned.
    pub fn sqrt_minus_one(&self) -> Result<Element> {
        let p = self.inner.p;
        if p == 2 {
            return Ok(Element::ONE);
        }
        let n = self.inner.order - 1;
        if n % 4 != 0 {
            return Err(Error::NoSquareRootOfMinusOne { p, e: self.inner.e });
        }
        let eta = self.pow(self.primitive_element(), n / 4);
        Ok(eta.min(self.neg(eta)))
    }

    pub fn eval_prime_poly(&self, coeffs: &[u64], x: Element) -> Element {
        coeffs
            .iter()
            .rev()
            .fold(Element::ZERO, |acc, &c| self.add(self.mul(acc, x), self.from_int(c as i64)))
    }

    /// Human-readable form: an integer for prime fields, otherwise a
    /// polynomial in `a` (the class of `x`).
    pub fn display(&self, x: Element) -> String {
        if self.inner.e == 1 {
            return x.0.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(x)
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(i, c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    pub fn to_json(&self, x: Element) -> serde_json::Value {
        serde_json::Value::from(self.coeffs(x))
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<Element> {
        let coeffs: Vec<u64> = serde_json::from_value(v.clone())?;
        if coeffs.len() != self.inner.e {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                self.inner.e,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(Error::InvalidElement("coefficient out of range".into()));
        }
        self.from_coeffs(&coeffs)
    }
}

fn default_modulus(p: u64, e: usize) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let order = arith::checked_pow(p, e).expect("checked by caller");
    for t in 0..order {
        if t % p == 0 {
            continue;
        }
        let mut m = Vec::with_capacity(e + 1);
        let mut v = t;
        for _ in 0..e {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if fp_poly::is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Structure-preserving map GF(p^e) -> GF(p^{e m}).
///
/// The class of `x` in the source is sent to the root of the source modulus
/// in the destination with the smallest encoding.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: Field,
    dst: Field,
    /// Images of `1, x, ..., x^{e-1}`.
    basis: Vec<Element>,
}

impl Embedding {
    pub fn new(src: &Field, dst: &Field) -> Result<Embedding> {
        if src.characteristic() != dst.characteristic() {
            return Err(Error::IncompatibleFields(format!(
                "characteristics {} and {} differ",
                src.characteristic(),
                dst.characteristic()
            )));
        }
        if dst.degree() % src.degree() != 0 {
            return Err(Error::IncompatibleFields(format!(
                "degree {} does not divide {}",
                src.degree(),
                dst.degree()
            )));
        }
        let e = src.degree();
        let beta = if e == 1 {
            Element::ONE
        } else if src == dst {
            src.generator()
        } else {
            smallest_root_in(src.modulus(), src.order(), dst)
        };
        let mut basis = Vec::with_capacity(e);
        let mut acc = Element::ONE;
        for _ in 0..e {
            basis.push(acc);
            acc = dst.mul(acc, beta);
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            basis,
        })
    }

    pub fn source(&self) -> &Field {
        &self.src
    }

    pub fn target(&self) -> &Field {
        &self.dst
    }

    pub fn apply(&self, x: Element) -> Element {
        if self.src == self.dst {
            return x;
        }
        self.src
            .coeffs(x)
            .into_iter()
            .zip(&self.basis)
            .fold(Element::ZERO, |acc, (c, &b)| {
                self.dst.add(acc, self.dst.mul(self.dst.from_int(c as i64), b))
            })
    }

    /// Preimage of `y`, or `None` when `y` is not in the image.
    pub fn descend(&self, y: Element) -> Option<Element> {
        if self.src == self.dst {
            return Some(y);
        }
        if self.dst.pow(y, self.src.order()) != y {
            return None;
        }
        let p = self.dst.characteristic();
        let e = self.src.degree();
        let rows = self.dst.degree();
        // Solve sum_i c_i * basis_i = y over GF(p).
        let cols: Vec<Vec<u64>> = self.basis.iter().map(|&b| self.dst.coeffs(b)).collect();
        let target = self.dst.coeffs(y);
        let mut aug: Vec<Vec<u64>> = (0..rows)
            .map(|r| {
                let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
                row.push(target[r]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..e {
            let Some(pr) = (rank..rows).find(|&r| aug[r][c] != 0) else {
                continue;
            };
            aug.swap(rank, pr);
            let inv = arith::pow_mod(aug[rank][c], p - 2, p);
            for v in aug[rank].iter_mut() {
                *v = arith::mul_mod(*v, inv, p);
            }
            for r in 0..rows {
                if r != rank && aug[r][c] != 0 {
                    let f = aug[r][c];
                    for j in 0..=e {
                        let t = arith::mul_mod(f, aug[rank][j], p);
                        aug[r][j] = (aug[r][j] + p - t) % p;
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        if aug[rank..].iter().any(|row| row[e] != 0) {
            return None;
        }
        let mut coeffs = vec![0u64; e];
        for (r, &c) in pivots.iter().enumerate() {
            coeffs[c] = aug[r][e];
        }
        self.src.from_coeffs(&coeffs).ok()
    }
}

/// Smallest-encoded root in `dst` of a monic irreducible GF(p)-polynomial
/// whose splitting field has `sub_order` elements.
fn smallest_root_in(modulus: &[u64], sub_order: u64, dst: &Field) -> Element {
    let e = modulus.len() - 1;
    let h = dst.pow(dst.primitive_element(), (dst.order() - 1) / (sub_order - 1));
    let mut y = Element::ONE;
    for _ in 0..sub_order - 1 {
        if dst.eval_prime_poly(modulus, y).is_zero() {
            return (0..e)
                .map(|j| dst.frobenius_pow(y, j))
                .min()
                .expect("e >= 1");
        }
        y = dst.mul(y, h);
    }
    unreachable!("an irreducible polynomial splits in every extension of its degree")
}

/// The smallest-encoded primitive element `g` of `ext` yields candidates
/// `g^{u (|ext|-1)/rn}` for units `u` modulo `rn` in ascending order; the
/// first with `theta^n = lambda` is returned.
pub fn primitive_rn_root(ext: &Field, rn: u64, n: u64, lambda: Element) -> Result<Element> {
    let group = ext.order() - 1;
    if rn == 0 || n == 0 || rn % n != 0 || group % rn != 0 {
        return Err(Error::NoRootOfUnity { rn, n });
    }
    let base = ext.pow(ext.primitive_element(), group / rn);
    for u in 1..=rn {
        if arith::gcd(u, rn) != 1 {
            continue;
        }
        let theta = ext.pow(base, u % rn);
        if ext.pow(theta, n) == lambda {
            return Ok(theta);
        }
    }
    Err(Error::NoRootOfUnity { rn, n })
}

/// Dense polynomial helpers over GF(p) for irreducibility testing.
mod fp_poly {
    use crate::arith;

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let inv_lead = arith::pow_mod(f[df], p - 2, p);
        while r.len() > df {
            let top = r.len() - 1;
            let c = arith::mul_mod(r[top], inv_lead, p);
            for (j, &fj) in f.iter().enumerate() {
                let t = arith::mul_mod(c, fj, p);
                let idx = top - df + j;
                r[idx] = (r[idx] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + arith::mul_mod(x, y, p)) % p;
            }
        }
        rem(&out, f, p)
    }

    fn pow_mod(a: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, f, p);
        let mut acc = vec![1u64];
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            exp >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's test for a monic `f` over GF(p).
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let e = f.len() - 1;
        if e == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        // x^{p^j} mod f for j = 0..=e
        let mut frob = Vec::with_capacity(e + 1);
        let mut t = vec![0u64, 1];
        frob.push(t.clone());
        for _ in 0..e {
            t = pow_mod(&t, p, f, p);
            frob.push(t.clone());
        }
        let x = vec![0u64, 1];
        if rem(&frob[e], f, p) != rem(&x, f, p) {
            return false;
        }
        for (l, _) in arith::factorize(e as u64) {
            let mut h = frob[e / l as usize].clone();
            h.resize(h.len().max(2), 0);
            h[1] = (h[1] + p - 1) % p;
            let g = gcd(f, &h, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> Field {
        Field::new(2, 3, None).unwrap()
    }

    #[test]
    fn prime_field_has_modulus_x() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn gf8_default_modulus_matches_alpha_table() {
        let f = gf8();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        let a = f.generator();
        assert_eq!(f.coeffs(a), vec![0, 1, 0]);
        // a^3 = 1 + a, a^4 = a + a^2, a^5 = 1 + a + a^2, a^6 = 1 + a^2, a^7 = 1
        let expect = [[1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1], [1, 0, 0]];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(f.coeffs(f.pow(a, 3 + i as u64)), want.to_vec());
        }
    }

    #[test]
    fn gf1331_default_modulus_has_no_roots() {
        let f = Field::new(11, 3, None).unwrap();
        let m = f.modulus().to_vec();
        assert_eq!(m.len(), 4);
        assert_eq!(m[3], 1);
        for x in 0..11u64 {
            let v = m.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % 11);
            assert_ne!(v, 0, "root {x}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 1, 0])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(Field::new(2, 0, None), Err(Error::ZeroDegree)));
    }

    #[test]
    fn explicit_modulus_equality() {
        let a = Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(a, gf8());
        let b = Field::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn frobenius_examples() {
        let f = gf8();
        let a = f.generator();
        assert_eq!(f.frobenius_pow(a, 1), f.square(a));
        for x in f.elements() {
            assert_eq!(f.frobenius_pow(x, 0), x);
            assert_eq!(f.frobenius_pow(x, 3), x);
        }
    }

    #[test]
    fn orders() {
        let f = gf8();
        assert_eq!(f.mult_order(f.one()).unwrap(), 1);
        assert_eq!(f.mult_order(f.generator()).unwrap(), 7);
        assert_eq!(f.mult_order(f.zero()), Err(Error::ZeroElement));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.mult_order(f5.from_int(-1)).unwrap(), 2);
    }

    #[test]
    fn sqrt_minus_one_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.sqrt_minus_one().unwrap(), f5.from_int(2));
        let f13 = Field::prime(13).unwrap();
        assert_eq!(f13.sqrt_minus_one().unwrap(), f13.from_int(5));
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(
            f7.sqrt_minus_one(),
            Err(Error::NoSquareRootOfMinusOne { .. })
        ));
        let f49 = Field::new(7, 2, None).unwrap();
        let eta = f49.sqrt_minus_one().unwrap();
        assert_eq!(f49.square(eta), f49.from_int(-1));
    }

    #[test]
    fn slow_and_table_paths_agree() {
        // GF(3^13) has no tables; compare against GF(3^13) arithmetic laws.
        let big = Field::new(3, 13, None).unwrap();
        let g = big.primitive_element();
        let n = big.order() - 1;
        assert_eq!(big.pow(g, n), big.one());
        let x = big.pow(g, 12345);
        let y = big.pow(g, 6789);
        assert_eq!(big.mul(x, y), big.pow(g, 12345 + 6789));
        assert_eq!(big.mul(x, big.inv(x).unwrap()), big.one());
        assert_eq!(big.frobenius_pow(x, 13), x);
    }

    #[test]
    fn embedding_prime_subfield_and_units() {
        let src = Field::new(2, 3, None).unwrap();
        let dst = Field::new(2, 6, None).unwrap();
        let emb = Embedding::new(&src, &dst).unwrap();
        assert_eq!(emb.apply(src.zero()), dst.zero());
        assert_eq!(emb.apply(src.one()), dst.one());
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::new(3, 2, None).unwrap();
        let e39 = Embedding::new(&f3, &f9).unwrap();
        assert_eq!(e39.apply(f3.from_int(2)), f9.from_int(2));
        assert!(Embedding::new(&f9, &Field::new(3, 3, None).unwrap()).is_err());
        assert!(Embedding::new(&f9, &Field::new(2, 4, None).unwrap()).is_err());
    }

    #[test]
    fn embedding_descends() {
        let src = Field::new(5, 2, None).unwrap();
        let dst = Field::new(5, 4, None).unwrap();
        let emb = Embedding::new(&src, &dst).unwrap();
        for x in src.elements() {
            assert_eq!(emb.descend(emb.apply(x)), Some(x));
        }
        let outside = dst.primitive_element();
        assert_eq!(emb.descend(outside), None);
    }

    #[test]
    fn rn_root_examples() {
        let f3 = Field::prime(3).unwrap();
        let theta = primitive_rn_root(&f3, 2, 1, f3.from_int(-1)).unwrap();
        assert_eq!(theta, f3.from_int(-1));

        let f = Field::new(11, 3, None).unwrap();
        let minus_one = f.from_int(-1);
        let theta = primitive_rn_root(&f, 10, 5, minus_one).unwrap();
        assert_eq!(f.mult_order(theta).unwrap(), 10);
        assert_eq!(f.pow(theta, 5), minus_one);
        // Oracle: scan all order-10 elements.
        let candidates: Vec<Element> = f
            .nonzero_elements()
            .filter(|&x| f.mult_order(x).unwrap() == 10 && f.pow(x, 5) == minus_one)
            .collect();
        assert_eq!(candidates.len(), 4);
        assert!(candidates.contains(&theta));
    }

    #[test]
    fn json_round_trip() {
        let f = gf8();
        let a = f.generator();
        assert_eq!(f.to_json(a), serde_json::json!([0, 1, 0]));
        assert_eq!(f.from_json(&serde_json::json!([0, 1, 0])).unwrap(), a);
        assert!(f.from_json(&serde_json::json!([0, 2, 0])).is_err());
        let spec = f.spec();
        assert_eq!(
            serde_json::to_value(&spec).unwrap(),
            serde_json::json!({"p": 2, "e": 3, "modulus": [1, 1, 0, 1]})
        );
        assert_eq!(Field::from_spec(&spec).unwrap(), f);
    }
}
