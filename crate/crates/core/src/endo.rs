//! Ring endomorphisms and twisted `(sigma, tau)`-derivations built from the
//! image of the generator.
//!
//! A derivation is determined by `D(theta)`: the image of `theta^k` is
//! `(sum_{s+t=k-1} sigma(theta)^s tau(theta)^t) * D(theta)` for `1 <= k < d`,
//! `D(1) = 0`, extended `Z`-linearly. [`TwistedDerivation::leibniz_check`]
//! tests the product rule on every pair of basis powers, which is equivalent
//! to the rule holding on the whole ring.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{QuotientRing, RingElement};

/// Unital ring endomorphism fixing `Z`, given by the image of `theta`.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    ring: Arc<QuotientRing>,
    theta_image: RingElement,
    exponent: Option<u64>,
}

/// `f(x)` evaluated at a ring element by Horner's rule.
fn eval_modulus(ring: &Arc<QuotientRing>, x: &RingElement) -> RingElement {
    ring.modulus()
        .coeffs()
        .iter()
        .rev()
        .fold(ring.zero(), |acc, c| {
            let mut next = acc.mul_unchecked(x);
            next = next.add_unchecked(&ring.one().scale_unchecked(c));
            next
        })
}

impl Endomorphism {
    /// `theta -> image`; the image must be a root of the modulus.
    pub fn new(ring: &Arc<QuotientRing>, theta_image: RingElement) -> Result<Self> {
        if !ring.same_ring(theta_image.ring()) {
            return Err(Error::RingMismatch);
        }
        let residue = eval_modulus(ring, &theta_image);
        if !residue.is_zero() {
            return Err(Error::NotARoot {
                residue: residue.to_string(),
            });
        }
        Ok(Endomorphism {
            ring: Arc::clone(ring),
            theta_image,
            exponent: None,
        })
    }

    /// `zeta -> zeta^u` on a cyclotomic ring, `gcd(u, n) = 1`.
    pub fn power(ring: &Arc<QuotientRing>, u: u64) -> Result<Self> {
        let n = ring.cyclotomic_index().ok_or(Error::NotCyclotomic)?;
        if u == 0 {
            return Err(Error::ZeroExponent);
        }
        if u.gcd(&n) != 1 {
            return Err(Error::ExponentNotCoprime { exponent: u, n });
        }
        let image = ring.reduce(&Polynomial::monomial(BigInt::one(), u as usize));
        let mut e = Self::new(ring, image)?;
        e.exponent = Some(u);
        Ok(e)
    }

    pub fn identity(ring: &Arc<QuotientRing>) -> Self {
        Endomorphism {
            ring: Arc::clone(ring),
            theta_image: ring.theta(),
            exponent: ring.cyclotomic_index().map(|_| 1),
        }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn theta_image(&self) -> &RingElement {
        &self.theta_image
    }

    pub fn exponent(&self) -> Option<u64> {
        self.exponent
    }

    /// `sum_i x_i * image^i`.
    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        if !self.ring.same_ring(x.ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &RingElement) -> RingElement {
        let one = self.ring.one();
        x.coords().iter().rev().fold(self.ring.zero(), |acc, c| {
            acc.mul_unchecked(&self.theta_image)
                .add_unchecked(&one.scale_unchecked(c))
        })
    }
}

/// Two different endomorphisms of the same ring.
#[derive(Clone, Debug)]
pub struct TwistedPair {
    sigma: Endomorphism,
    tau: Endomorphism,
}

impl TwistedPair {
    pub fn new(sigma: Endomorphism, tau: Endomorphism) -> Result<Self> {
        if !sigma.ring.same_ring(&tau.ring) {
            return Err(Error::RingMismatch);
        }
        if sigma.theta_image == tau.theta_image {
            return Err(Error::IdenticalEndomorphisms);
        }
        Ok(TwistedPair { sigma, tau })
    }

    /// `sigma: zeta -> zeta^u`, `tau: zeta -> zeta^v` on `Z[zeta_n]`.
    pub fn cyclotomic(ring: &Arc<QuotientRing>, u: u64, v: u64) -> Result<Self> {
        Self::new(Endomorphism::power(ring, u)?, Endomorphism::power(ring, v)?)
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub fn tau(&self) -> &Endomorphism {
        &self.tau
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.sigma.ring
    }

    /// `(tau, sigma)`.
    pub fn swapped(&self) -> TwistedPair {
        TwistedPair {
            sigma: self.tau.clone(),
            tau: self.sigma.clone(),
        }
    }

    /// `tau(theta) - sigma(theta)`.
    pub fn difference(&self) -> RingElement {
        self.tau.theta_image.sub_unchecked(&self.sigma.theta_image)
    }

    /// `sum_{s+t=k-1} sigma(theta)^s tau(theta)^t` for `k >= 1`.
    pub fn sum_powers(&self, k: usize) -> Result<RingElement> {
        if k == 0 {
            return Err(Error::ZeroPowerIndex);
        }
        let ring = self.ring();
        let s = &self.sigma.theta_image;
        let t = &self.tau.theta_image;
        let mut tau_powers = Vec::with_capacity(k);
        tau_powers.push(ring.one());
        for i in 1..k {
            let next = tau_powers[i - 1].mul_unchecked(t);
            tau_powers.push(next);
        }
        let mut sigma_pow = ring.one();
        let mut acc = ring.zero();
        for i in 0..k {
            acc = acc.add_unchecked(&sigma_pow.mul_unchecked(&tau_powers[k - 1 - i]));
            if i + 1 < k {
                sigma_pow = sigma_pow.mul_unchecked(s);
            }
        }
        Ok(acc)
    }

    /// Evaluates `sum_{i=k}^{d+k} a_{i-k} sum_{s+t=i-1} sigma(theta)^s tau(theta)^t`
    /// where `a_j` are the modulus coefficients (`a_d = 1`). The `i = 0` term
    /// is an empty sum.
    pub fn telescope_check(&self, k: usize) -> TelescopeVerdict {
        let ring = self.ring();
        let mut residue = ring.zero();
        for (j, a) in ring.modulus().coeffs().iter().enumerate() {
            let i = j + k;
            if i == 0 || a.is_zero() {
                continue;
            }
            let term = self.sum_powers(i).expect("i >= 1").scale_unchecked(a);
            residue = residue.add_unchecked(&term);
        }
        TelescopeVerdict {
            k,
            is_zero: residue.is_zero(),
            residue,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TelescopeVerdict {
    pub k: usize,
    pub residue: RingElement,
    pub is_zero: bool,
}

/// Outcome of checking the twisted product rule on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeibnizVerdict {
    Pass,
    /// First `(i, j)` in row-major order with
    /// `D(theta^i theta^j) != D(theta^i) tau(theta^j) + sigma(theta^i) D(theta^j)`.
    Fail {
        i: usize,
        j: usize,
        lhs: RingElement,
        rhs: RingElement,
    },
}

impl LeibnizVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LeibnizVerdict::Pass)
    }
}

/// The `Z`-linear map with `D(1) = 0` determined by `D(theta)`.
#[derive(Clone, Debug)]
pub struct TwistedDerivation {
    pair: TwistedPair,
    d_theta: RingElement,
    // D(theta^k) for k < d, from the recurrence
    // S_1 = 1, S_{k+1} = S_k * tau(theta) + sigma(theta)^k
    basis_images: Vec<RingElement>,
}

impl TwistedDerivation {
    pub fn new(pair: TwistedPair, d_theta: RingElement) -> Result<Self> {
        let ring = Arc::clone(pair.ring());
        if !ring.same_ring(d_theta.ring()) {
            return Err(Error::RingMismatch);
        }
        let d = ring.degree();
        let s = pair.sigma.theta_image.clone();
        let t = pair.tau.theta_image.clone();
        let mut basis_images = Vec::with_capacity(d);
        basis_images.push(ring.zero());
        let mut sums = ring.one();
        let mut sigma_pow = ring.one();
        for k in 1..d {
            basis_images.push(sums.mul_unchecked(&d_theta));
            if k + 1 < d {
                sigma_pow = sigma_pow.mul_unchecked(&s);
                sums = sums.mul_unchecked(&t).add_unchecked(&sigma_pow);
            }
        }
        Ok(TwistedDerivation {
            pair,
            d_theta,
            basis_images,
        })
    }

    pub fn pair(&self) -> &TwistedPair {
        &self.pair
    }

    pub fn d_theta(&self) -> &RingElement {
        &self.d_theta
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.pair.ring()
    }

    pub fn eval(&self, x: &RingElement) -> Result<RingElement> {
        if !self.ring().same_ring(x.ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: &RingElement) -> RingElement {
        let mut acc = self.ring().zero();
        for (c, img) in x.coords().iter().zip(&self.basis_images).skip(1) {
            if !c.is_zero() {
                acc = acc.add_unchecked(&img.scale_unchecked(c));
            }
        }
        acc
    }

    #[allow(clippy::needless_range_loop)]
    pub fn leibniz_check(&self) -> LeibnizVerdict {
        let ring = self.ring();
        let d = ring.degree();
        let mut sigma_pows = Vec::with_capacity(d);
        let mut tau_pows = Vec::with_capacity(d);
        sigma_pows.push(ring.one());
        tau_pows.push(ring.one());
        for k in 1..d {
            let s = sigma_pows[k - 1].mul_unchecked(self.pair.sigma.theta_image());
            let t = tau_pows[k - 1].mul_unchecked(self.pair.tau.theta_image());
            sigma_pows.push(s);
            tau_pows.push(t);
        }
        for i in 0..d {
            for j in 0..d {
                let product = ring
                    .element(ring.power_coords(i + j).to_vec())
                    .expect("table rows have ring length");
                let lhs = self.eval_unchecked(&product);
                let rhs = self.basis_images[i]
                    .mul_unchecked(&tau_pows[j])
                    .add_unchecked(&sigma_pows[i].mul_unchecked(&self.basis_images[j]));
                if lhs != rhs {
                    return LeibnizVerdict::Fail { i, j, lhs, rhs };
                }
            }
        }
        LeibnizVerdict::Pass
    }
}

/// Inner derivation `x -> beta * (tau - sigma)(x)`, written as its generator image.
pub fn inner_d_theta(pair: &TwistedPair, beta: &RingElement) -> Result<RingElement> {
    if !pair.ring().same_ring(beta.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(beta.mul_unchecked(&pair.difference()))
}
