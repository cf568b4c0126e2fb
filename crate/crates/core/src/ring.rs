//! Arithmetic in monogenic quotient rings `Z[X]/(f)` in the power basis.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{cyclotomic_poly, poly_divmod, Polynomial};

/// `Z[X]/(f)` for a monic `f` of degree `d >= 1`, with `theta` the class of `X`.
#[derive(Debug)]
pub struct QuotientRing {
    modulus: Polynomial,
    degree: usize,
    // coordinates of theta^k for k = 0 ..= 2d - 2
    power_table: Vec<Vec<BigInt>>,
    cyclotomic_index: Option<u64>,
}

impl QuotientRing {
    pub fn new(modulus: Polynomial) -> Result<Arc<Self>> {
        Self::build(modulus, None)
    }

    /// `Z[zeta_n] = Z[X]/(Phi_n)`.
    pub fn cyclotomic(n: u64) -> Result<Arc<Self>> {
        Self::build(cyclotomic_poly(n)?, Some(n))
    }

    fn build(modulus: Polynomial, cyclotomic_index: Option<u64>) -> Result<Arc<Self>> {
        let degree = match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => d,
            _ => return Err(Error::InvalidModulus),
        };
        let mut power_table = Vec::with_capacity(2 * degree - 1);
        for k in 0..degree {
            let mut e = vec![BigInt::zero(); degree];
            e[k] = BigInt::one();
            power_table.push(e);
        }
        // theta^d = -sum_{i<d} a_i theta^i
        let tail: Vec<BigInt> = modulus.coeffs()[..degree].iter().map(|a| -a).collect();
        for _ in degree..2 * degree - 1 {
            let prev = power_table.last().expect("table is non-empty");
            let carry = prev[degree - 1].clone();
            let mut next = Vec::with_capacity(degree);
            next.push(&carry * &tail[0]);
            for i in 1..degree {
                next.push(&prev[i - 1] + &carry * &tail[i]);
            }
            power_table.push(next);
        }
        Ok(Arc::new(QuotientRing {
            modulus,
            degree,
            power_table,
            cyclotomic_index,
        }))
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `n` when this ring was built as `Z[zeta_n]`.
    pub fn cyclotomic_index(&self) -> Option<u64> {
        self.cyclotomic_index
    }

    /// Coordinates of `theta^k` for `k <= 2d - 2`.
    pub fn power_coords(&self, k: usize) -> &[BigInt] {
        &self.power_table[k]
    }

    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || self.modulus == other.modulus
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if self.same_ring(&x.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement {
            ring: Arc::clone(self),
            coords: vec![BigInt::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.theta_pow_small(0)
    }

    /// The generator `theta`.
    pub fn theta(self: &Arc<Self>) -> RingElement {
        self.reduce(&Polynomial::monomial(BigInt::one(), 1))
    }

    fn theta_pow_small(self: &Arc<Self>, k: usize) -> RingElement {
        RingElement {
            ring: Arc::clone(self),
            coords: self.power_table[k].clone(),
        }
    }

    /// Element with the given power-basis coordinates; length must equal the degree.
    pub fn element(self: &Arc<Self>, coords: Vec<BigInt>) -> Result<RingElement> {
        if coords.len() != self.degree {
            return Err(Error::CoordinateLength {
                expected: self.degree,
                found: coords.len(),
            });
        }
        Ok(RingElement {
            ring: Arc::clone(self),
            coords,
        })
    }

    pub fn element_i64(self: &Arc<Self>, coords: &[i64]) -> Result<RingElement> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coordinates of `p(theta)`.
    pub fn reduce(self: &Arc<Self>, p: &Polynomial) -> RingElement {
        let coords = match p.degree() {
            None => vec![BigInt::zero(); self.degree],
            Some(deg) if deg < 2 * self.degree - 1 => self.combine(p.coeffs()),
            Some(_) => {
                let (_, r) = poly_divmod(p, &self.modulus).expect("modulus is monic");
                let mut c = r.into_coeffs();
                c.resize(self.degree, BigInt::zero());
                c
            }
        };
        RingElement {
            ring: Arc::clone(self),
            coords,
        }
    }

    /// `sum_k raw[k] * theta^k` for `raw.len() <= 2d - 1`.
    fn combine(&self, raw: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree;
        let mut out: Vec<BigInt> = raw.iter().take(d).cloned().collect();
        out.resize(d, BigInt::zero());
        for (k, c) in raw.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.power_table[k]) {
                *o += c * t;
            }
        }
        out
    }

    pub(crate) fn mul_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree;
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        self.combine(&raw)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.zip_with(b, |x, y| x + y))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.zip_with(b, |x, y| x - y))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.mul_unchecked(b))
    }

    pub fn scale(&self, a: &RingElement, c: &BigInt) -> Result<RingElement> {
        self.check(a)?;
        Ok(a.scale_unchecked(c))
    }

    pub fn pow(&self, a: &RingElement, exp: u64) -> Result<RingElement> {
        self.check(a)?;
        Ok(a.pow_unchecked(exp))
    }

    /// Uniform coordinates in `[-9, 9]`.
    pub fn random_element<R: Rng + ?Sized>(self: &Arc<Self>, rng: &mut R) -> RingElement {
        let coords = (0..self.degree)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        RingElement {
            ring: Arc::clone(self),
            coords,
        }
    }
}

/// Element of a [`QuotientRing`] in power-basis coordinates.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<QuotientRing>,
    coords: Vec<BigInt>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coords == other.coords
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn same_ring(&self, other: &RingElement) -> bool {
        self.ring.same_ring(&other.ring)
    }

    fn zip_with(&self, other: &RingElement, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> RingElement {
        RingElement {
            ring: Arc::clone(&self.ring),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| f(x, y))
                .collect(),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &RingElement) -> RingElement {
        self.zip_with(other, |x, y| x + y)
    }

    pub(crate) fn sub_unchecked(&self, other: &RingElement) -> RingElement {
        self.zip_with(other, |x, y| x - y)
    }

    pub(crate) fn mul_unchecked(&self, other: &RingElement) -> RingElement {
        RingElement {
            ring: Arc::clone(&self.ring),
            coords: self.ring.mul_coords(&self.coords, &other.coords),
        }
    }

    pub(crate) fn scale_unchecked(&self, c: &BigInt) -> RingElement {
        RingElement {
            ring: Arc::clone(&self.ring),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub(crate) fn pow_unchecked(&self, mut exp: u64) -> RingElement {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            ring: Arc::clone(&self.ring),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    /// The coordinates read back as a polynomial of degree `< d`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coords.clone())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_pow(k: usize) -> Polynomial {
        Polynomial::monomial(BigInt::one(), k)
    }

    #[test]
    fn power_table_starts_with_unit_vectors() {
        let ring = QuotientRing::cyclotomic(12).unwrap();
        for k in 0..ring.degree() {
            let e = ring.power_coords(k);
            for (i, c) in e.iter().enumerate() {
                assert_eq!(c.is_one(), i == k);
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let ring = QuotientRing::cyclotomic(10).unwrap();
        assert_eq!(
            ring.reduce(&x_pow(4)),
            ring.element_i64(&[-1, 1, -1, 1]).unwrap()
        );
        assert_eq!(
            ring.reduce(&x_pow(5)),
            ring.element_i64(&[-1, 0, 0, 0]).unwrap()
        );
        assert!(ring.reduce(&Polynomial::one()).is_one());
        // beyond the table range goes through long division
        assert!(ring.reduce(&x_pow(20)).is_one());
        assert!(ring.reduce(ring.modulus()).is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        let ring = QuotientRing::cyclotomic(10).unwrap();
        let z = ring.theta();
        let z3 = ring.reduce(&x_pow(3));
        assert_eq!(
            ring.mul(&z, &z3).unwrap(),
            ring.element_i64(&[-1, 1, -1, 1]).unwrap()
        );
        assert!(ring.add(&z3, &z3.neg()).unwrap().is_zero());
        assert!(ring.pow(&z, 10).unwrap().is_one());
        assert!(ring.pow(&z3, 0).unwrap().is_one());
        assert_eq!(
            ring.scale(&z, &BigInt::from(3)).unwrap(),
            ring.element_i64(&[0, 3, 0, 0]).unwrap()
        );
        assert_eq!(ring.sub(&z, &z).unwrap(), ring.zero());
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = QuotientRing::cyclotomic(10).unwrap();
        let b = QuotientRing::cyclotomic(5).unwrap();
        assert!(matches!(
            a.add(&a.one(), &b.one()),
            Err(Error::RingMismatch)
        ));
        assert!(matches!(
            a.mul(&b.one(), &a.one()),
            Err(Error::RingMismatch)
        ));
        assert!(matches!(a.pow(&b.one(), 2), Err(Error::RingMismatch)));
        assert_ne!(a.one(), b.one());
    }

    #[test]
    fn element_length_checked() {
        let ring = QuotientRing::cyclotomic(9).unwrap();
        assert!(matches!(
            ring.element_i64(&[1, 2, 3]),
            Err(Error::CoordinateLength {
                expected: 6,
                found: 3
            })
        ));
    }

    #[test]
    fn invalid_moduli() {
        assert!(QuotientRing::new(Polynomial::from_i64(&[1])).is_err());
        assert!(QuotientRing::new(Polynomial::from_i64(&[1, 2])).is_err());
        assert!(QuotientRing::new(Polynomial::zero()).is_err());
        // degree-one ring is just Z
        let z = QuotientRing::new(Polynomial::from_i64(&[-1, 1])).unwrap();
        assert!(z.theta().is_one());
    }
}
