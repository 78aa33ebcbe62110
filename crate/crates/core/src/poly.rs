//! Dense univariate polynomials over a [`Field`] and the splitting of
//! `x^n - lambda` into minimal polynomials of q-cyclotomic cosets.

use std::fmt;

use crate::cosets::{CosetContext, DefiningSet};
use crate::error::{Error, Result};
use crate::field::{primitive_rn_root, Element, Embedding, Field};

/// Polynomial with coefficients constant term first and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Element>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.display(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if c != Element::ONE {
                        write!(f, "{cs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<Element>) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Element::ONE)
    }

    pub fn constant(field: &Field, c: Element) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(field: &Field, c: Element, d: usize) -> Poly {
        let mut coeffs = vec![Element::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Element) -> Poly {
        Poly::new(field, vec![field.neg(a), Element::ONE])
    }

    /// `x^n - lambda`.
    pub fn xn_minus(field: &Field, n: usize, lambda: Element) -> Poly {
        let mut coeffs = vec![Element::ZERO; n + 1];
        coeffs[0] = field.neg(lambda);
        coeffs[n] = field.add(coeffs[n], Element::ONE);
        Poly::new(field, coeffs)
    }

    /// Coefficients given as prime-field integers (may be negative).
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(Element::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Element> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Element::ONE)
    }

    fn check_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over different fields: {} and {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn scale(&self, c: Element) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor);
        let f = &self.field;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv = f.inv(lead)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Element::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic scalar multiple; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: Element) -> Element {
        self.coeffs
            .iter()
            .rev()
            .fold(Element::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// `a_0^{-1} x^deg f(1/x)`: monic with the inverse roots.
    pub fn reciprocal(&self) -> Result<Poly> {
        let a0 = *self.coeffs.first().ok_or(Error::ZeroConstantTerm)?;
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(a0)?;
        let rev: Vec<Element> = self.coeffs.iter().rev().map(|&c| self.field.mul(c, inv)).collect();
        Ok(Poly::new(&self.field, rev))
    }

    /// Every coefficient raised to the `p^j`-th power.
    pub fn frobenius_poly(&self, j: usize) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs.iter().map(|&c| self.field.frobenius_pow(c, j)).collect(),
        )
    }

    /// Image under a field embedding.
    pub fn embed(&self, emb: &Embedding) -> Poly {
        assert!(emb.source() == &self.field, "embedding source mismatch");
        Poly::new(
            emb.target(),
            self.coeffs.iter().map(|&c| emb.apply(c)).collect(),
        )
    }

    /// Preimage under a field embedding; fails if a coefficient lies outside
    /// the subfield.
    pub fn descend(&self, emb: &Embedding) -> Result<Poly> {
        assert!(emb.target() == &self.field, "embedding target mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| emb.descend(c).ok_or(Error::Descent))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(emb.source(), coeffs))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|&c| self.field.to_json(c)).collect())
    }

    pub fn from_json(field: &Field, v: &serde_json::Value) -> Result<Poly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Serialization("polynomial must be a JSON array".into()))?;
        let coeffs = arr.iter().map(|c| field.from_json(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }
}

/// `M_Q(x) = prod_{i in Q} (x - theta^i)`, computed in the extension field
/// and descended to the base field through `emb`.
pub fn minimal_poly(coset: &[u64], theta: Element, emb: &Embedding) -> Result<Poly> {
    let ext = emb.target();
    let lifted = coset.iter().fold(Poly::one(ext), |acc, &i| {
        acc.mul(&Poly::linear(ext, ext.pow(theta, i)))
    });
    lifted.descend(emb)
}

/// Splitting data for `x^n - lambda` over GF(q): the coset context, the
/// extension GF(q^m) containing a primitive `rn`-th root of unity `theta`
/// with `theta^n = lambda`, and every minimal polynomial `M_Q`.
#[derive(Clone, Debug)]
pub struct Splitting {
    ctx: CosetContext,
    base: Field,
    lambda: Element,
    embedding: Embedding,
    theta: Element,
    theta_powers: Vec<Element>,
    factors: Vec<(Vec<u64>, Poly)>,
}

impl Splitting {
    /// `k` is the Galois parameter carried by the coset context; it does not
    /// affect the splitting itself.
    pub fn new(base: &Field, n: u64, lambda: Element, k: usize) -> Result<Splitting> {
        let r = base.mult_order(lambda)?;
        let ctx = CosetContext::new(base.characteristic(), base.degree(), k, n, r)?;
        let m = ctx.splitting_degree() as usize;
        let ext = if m == 1 {
            base.clone()
        } else {
            Field::new(base.characteristic(), base.degree() * m, None)?
        };
        let embedding = Embedding::new(base, &ext)?;
        let theta = primitive_rn_root(&ext, ctx.rn(), n, embedding.apply(lambda))?;
        let mut theta_powers = Vec::with_capacity(ctx.rn() as usize);
        let mut acc = Element::ONE;
        for _ in 0..ctx.rn() {
            theta_powers.push(acc);
            acc = ext.mul(acc, theta);
        }
        let factors = ctx
            .cyclotomic_cosets()
            .into_iter()
            .map(|q| {
                let m = product_of_linear(&ext, &theta_powers, &q).descend(&embedding)?;
                Ok((q, m))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Splitting {
            ctx,
            base: base.clone(),
            lambda,
            embedding,
            theta,
            theta_powers,
            factors,
        })
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        self.embedding.target()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn lambda(&self) -> Element {
        self.lambda
    }

    /// `theta`, an element of [`Splitting::ext`].
    pub fn theta(&self) -> Element {
        self.theta
    }

    pub fn theta_pow(&self, i: u64) -> Element {
        self.theta_powers[(i % self.ctx.rn()) as usize]
    }

    /// `(Q, M_Q)` for every coset, ordered by smallest member.
    pub fn factors(&self) -> &[(Vec<u64>, Poly)] {
        &self.factors
    }

    pub fn minimal_poly(&self, coset: &[u64]) -> Result<Poly> {
        minimal_poly(coset, self.theta, &self.embedding)
    }

    /// `prod_{i in P} (x - theta^i)`.
    pub fn generator_of(&self, set: &DefiningSet) -> Result<Poly> {
        if set.ctx().rn() != self.ctx.rn() || set.ctx().r() != self.ctx.r() {
            return Err(Error::InvalidContext(
                "defining set belongs to a different context".into(),
            ));
        }
        let mut g = Poly::one(&self.base);
        for (q, m) in &self.factors {
            if set.contains(q[0]) {
                g = g.mul(m);
            }
        }
        Ok(g)
    }

    /// Residues `i` in `1 + rZ_rn` with `g(theta^i) = 0`.
    pub fn roots_of(&self, g: &Poly) -> Result<DefiningSet> {
        let lifted = g.embed(&self.embedding);
        let roots = self
            .ctx
            .residues()
            .into_iter()
            .filter(|&i| lifted.eval(self.theta_pow(i)).is_zero());
        DefiningSet::new(self.ctx, roots)
    }
}

fn product_of_linear(ext: &Field, theta_powers: &[Element], coset: &[u64]) -> Poly {
    coset.iter().fold(Poly::one(ext), |acc, &i| {
        acc.mul(&Poly::linear(ext, theta_powers[i as usize]))
    })
}

/// Irreducible factorization `x^n - lambda = prod_Q M_Q(x)` over `base`.
pub fn factor_xn_minus_lambda(base: &Field, n: u64, lambda: Element) -> Result<Vec<(Vec<u64>, Poly)>> {
    Ok(Splitting::new(base, n, lambda, 0)?.factors.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, e: usize) -> Field {
        Field::new(p, e, None).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let f = gf(3, 1);
        let a = Poly::from_ints(&f, &[1, 2, 1]);
        let b = Poly::from_ints(&f, &[1, 1]);
        assert_eq!(b.mul(&b), a);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(Poly::from_ints(&f, &[0, 0, 0]).degree(), None);
        assert_eq!(a.gcd(&Poly::from_ints(&f, &[2, 2])), b);
        assert_eq!(a.divrem(&Poly::zero(&f)), Err(Error::DivisionByZero));
        assert_eq!(a.eval(f.from_int(2)), Element::ZERO);
    }

    #[test]
    fn reciprocal_examples() {
        let f = gf(3, 1);
        let x1 = Poly::from_ints(&f, &[1, 1]);
        assert_eq!(x1.reciprocal().unwrap(), x1);
        let sq = Poly::from_ints(&f, &[1, 2, 1]);
        assert_eq!(sq.reciprocal().unwrap(), sq);
        let x2 = Poly::from_ints(&f, &[2, 1]);
        assert_eq!(x2.reciprocal().unwrap(), x2);
        assert_eq!(Poly::from_ints(&f, &[0, 1]).reciprocal(), Err(Error::ZeroConstantTerm));
        assert_eq!(Poly::zero(&f).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn frobenius_poly_examples() {
        let f = gf(2, 3);
        let a = f.generator();
        let g = Poly::new(&f, vec![a, Element::ONE]);
        assert_eq!(
            g.frobenius_poly(1),
            Poly::new(&f, vec![f.mul(a, a), Element::ONE])
        );
        assert_eq!(g.frobenius_poly(3), g);
        assert!(Poly::zero(&f).frobenius_poly(2).is_zero());
    }

    #[test]
    fn minimal_poly_of_half_turn() {
        let base = gf(5, 3);
        let s = Splitting::new(&base, 13, base.from_int(-1), 1).unwrap();
        assert_eq!(s.minimal_poly(&[13]).unwrap(), Poly::from_ints(&base, &[1, 1]));
        let base = gf(13, 3);
        let s = Splitting::new(&base, 9, base.from_int(-1), 2).unwrap();
        assert_eq!(s.minimal_poly(&[9]).unwrap(), Poly::from_ints(&base, &[1, 1]));
    }

    #[test]
    fn minimal_poly_divides_and_vanishes() {
        let base = gf(5, 3);
        let s = Splitting::new(&base, 13, base.from_int(-1), 1).unwrap();
        assert_eq!(s.ext().degree(), 12);
        let m = s.minimal_poly(&[1, 5, 21, 25]).unwrap();
        assert_eq!(m.degree(), Some(4));
        assert!(m.divides(&Poly::xn_minus(&base, 13, base.from_int(-1))));
        let lifted = m.embed(s.embedding());
        for i in [1, 5, 21, 25] {
            assert!(lifted.eval(s.theta_pow(i)).is_zero());
        }
        // no root in the base field
        assert!(base.elements().all(|x| !m.eval(x).is_zero()));
    }

    #[test]
    fn factorization_examples() {
        let base = gf(11, 3);
        let fs = factor_xn_minus_lambda(&base, 5, base.from_int(-1)).unwrap();
        assert_eq!(fs.len(), 5);
        assert!(fs.iter().all(|(_, m)| m.degree() == Some(1)));

        let base = gf(5, 3);
        let fs = factor_xn_minus_lambda(&base, 13, base.from_int(-1)).unwrap();
        let mut degs: Vec<usize> = fs.iter().map(|(_, m)| m.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 4, 4, 4]);
        let prod = fs.iter().fold(Poly::one(&base), |acc, (_, m)| acc.mul(m));
        assert_eq!(prod, Poly::xn_minus(&base, 13, base.from_int(-1)));

        let base = gf(2, 1);
        let fs = factor_xn_minus_lambda(&base, 1, Element::ONE).unwrap();
        assert_eq!(fs, vec![(vec![0], Poly::from_ints(&base, &[-1, 1]))]);

        assert!(matches!(
            factor_xn_minus_lambda(&gf(5, 1), 10, Element::ONE),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn roots_recover_defining_set() {
        let base = gf(3, 2);
        let s = Splitting::new(&base, 8, base.from_int(-1), 1).unwrap();
        for (q, m) in s.factors() {
            assert_eq!(s.roots_of(m).unwrap().residues(), q.as_slice());
        }
    }

    #[test]
    fn json_round_trip() {
        let f = gf(2, 3);
        let g = Poly::new(&f, vec![f.generator(), Element::ZERO, Element::ONE]);
        let v = g.to_json();
        assert_eq!(v, serde_json::json!([[0, 1, 0], [0, 0, 0], [1, 0, 0]]));
        assert_eq!(Poly::from_json(&f, &v).unwrap(), g);
    }
}
