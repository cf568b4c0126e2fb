//! Inner/outer classification through the multiplier matrix of
//! `beta -> beta * (tau - sigma)(theta)`, and the determinant predictions
//! for `n = 2^r p` and `n = p^k`.
//!
//! A derivation with generator image `C` is inner exactly when `A X = C`
//! has an integral solution. Since `A` is nonsingular over a domain, that is
//! decided by whether `Adj(A) C / det(A)` reduces to denominator one.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::endo::{TwistedDerivation, TwistedPair};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, RatMatrix, RatVector};
use crate::poly::{factorize, is_prime, totient};
use crate::ring::RingElement;

/// The two families of cyclotomic conductors with a determinant prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingForm {
    /// `n = 2^r p`, `r >= 1`, `p` an odd prime.
    TwoPowerTimesPrime { r: u32, p: u64 },
    /// `n = p^k`, `k >= 2`, `p` prime.
    PrimePower { p: u64, k: u32 },
}

impl RingForm {
    pub fn two_power_times_prime(r: u32, p: u64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidForm(format!("r = {r} must be at least 1")));
        }
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidForm(format!("p = {p} must be an odd prime")));
        }
        Self::checked(RingForm::TwoPowerTimesPrime { r, p })
    }

    pub fn prime_power(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidForm(format!("p = {p} must be prime")));
        }
        if k < 2 {
            return Err(Error::InvalidForm(format!("k = {k} must be at least 2")));
        }
        Self::checked(RingForm::PrimePower { p, k })
    }

    fn checked(form: RingForm) -> Result<Self> {
        let fits = match form {
            RingForm::TwoPowerTimesPrime { r, p } => {
                2u64.checked_pow(r).and_then(|t| t.checked_mul(p)).is_some()
            }
            RingForm::PrimePower { p, k } => p.checked_pow(k).is_some(),
        };
        if fits {
            Ok(form)
        } else {
            Err(Error::InvalidForm("n does not fit in 64 bits".into()))
        }
    }

    /// Recognises `n` as one of the two forms.
    pub fn from_n(n: u64) -> Option<Self> {
        match *factorize(n).as_slice() {
            [(2, r), (p, 1)] => Some(RingForm::TwoPowerTimesPrime { r, p }),
            [(p, k)] if k >= 2 => Some(RingForm::PrimePower { p, k }),
            _ => None,
        }
    }

    pub fn n(&self) -> u64 {
        match *self {
            RingForm::TwoPowerTimesPrime { r, p } => (1u64 << r) * p,
            RingForm::PrimePower { p, k } => p.pow(k),
        }
    }

    pub fn phi(&self) -> u64 {
        totient(self.n())
    }

    /// Short tag used on the command line and in reports.
    pub fn label(&self) -> &'static str {
        match self {
            RingForm::TwoPowerTimesPrime { .. } => "2rp",
            RingForm::PrimePower { .. } => "pk",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            RingForm::TwoPowerTimesPrime { r, p } => vec![("r", r as u64), ("p", p)],
            RingForm::PrimePower { p, k } => vec![("p", p), ("k", k as u64)],
        }
    }
}

impl fmt::Display for RingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingForm::TwoPowerTimesPrime { r, p } => write!(f, "2^{r}*{p}"),
            RingForm::PrimePower { p, k } => write!(f, "{p}^{k}"),
        }
    }
}

/// Multiplicities of 2 and `p` in `|v - u|`. `e2` is only present for the
/// `2^r p` form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Valuation {
    pub e1: u32,
    pub e2: Option<u32>,
    pub m: u64,
}

fn strip(mut x: u64, p: u64) -> (u32, u64) {
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    (e, x)
}

pub fn valuate(form: &RingForm, u: u64, v: u64) -> Result<Valuation> {
    let n = form.n();
    for x in [u, v] {
        if x == 0 {
            return Err(Error::ZeroExponent);
        }
        if x.gcd(&n) != 1 {
            return Err(Error::ExponentNotCoprime { exponent: x, n });
        }
    }
    if u % n == v % n {
        return Err(Error::EqualExponents);
    }
    let diff = u.abs_diff(v);
    Ok(match *form {
        RingForm::TwoPowerTimesPrime { p, .. } => {
            let (e1, rest) = strip(diff, 2);
            let (e2, m) = strip(rest, p);
            Valuation {
                e1,
                e2: Some(e2),
                m,
            }
        }
        RingForm::PrimePower { p, .. } => {
            let (e1, m) = strip(diff, p);
            Valuation { e1, e2: None, m }
        }
    })
}

/// Predicted `|det A|` for a pair with the given valuation.
pub fn predict_det(form: &RingForm, val: &Valuation) -> Result<BigInt> {
    match *form {
        RingForm::TwoPowerTimesPrime { r, p } => {
            let e2 = val.e2.ok_or_else(|| {
                Error::InvalidForm("valuation lacks the p-multiplicity e2".into())
            })?;
            let e1 = val.e1;
            if (1..r).contains(&e1) && e2 >= 1 {
                let exp = (p - 1) << e1;
                Ok(BigInt::one() << exp)
            } else if e1 >= r && e2 == 0 {
                Ok(BigInt::from(p).pow(1u32 << (r - 1)))
            } else {
                Ok(BigInt::one())
            }
        }
        RingForm::PrimePower { p, .. } => {
            let exp = p
                .checked_pow(val.e1)
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| Error::InvalidForm("predicted exponent overflows".into()))?;
            Ok(BigInt::from(p).pow(exp))
        }
    }
}

/// Matrix of `beta -> beta * (tau(theta) - sigma(theta))`; column `j` holds
/// the coordinates of `theta^j * (tau(theta) - sigma(theta))`.
#[derive(Clone, Debug)]
pub struct MultiplierMatrix {
    pair: TwistedPair,
    matrix: IntMatrix,
    determinant: BigInt,
    adjugate: OnceLock<IntMatrix>,
}

impl MultiplierMatrix {
    pub fn build(pair: &TwistedPair) -> Result<Self> {
        let ring = pair.ring();
        let diff = pair.difference();
        let columns: Vec<Vec<BigInt>> = (0..ring.degree())
            .map(|j| ring.mul_coords(ring.power_coords(j), diff.coords()))
            .collect();
        let matrix = IntMatrix::from_columns(&columns)?;
        let determinant = linalg::det(&matrix)?;
        Ok(MultiplierMatrix {
            pair: pair.clone(),
            matrix,
            determinant,
            adjugate: OnceLock::new(),
        })
    }

    pub fn pair(&self) -> &TwistedPair {
        &self.pair
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    pub fn det_abs(&self) -> BigInt {
        self.determinant.abs()
    }

    /// Computed once on first use.
    pub fn adjugate(&self) -> &IntMatrix {
        self.adjugate
            .get_or_init(|| linalg::adjugate(&self.matrix).expect("multiplier matrix is square"))
    }

    /// `A^{-1}` as `Adj(A) / det(A)` reduced by a common factor.
    pub fn solution_template(&self) -> Result<RatMatrix> {
        if self.determinant.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(RatMatrix::new(
            self.adjugate().clone(),
            self.determinant.clone(),
        ))
    }

    /// Unique rational `X` with `A X = C`.
    pub fn solve(&self, c: &[BigInt]) -> Result<RatVector> {
        if self.determinant.is_zero() {
            return Err(Error::SingularMatrix);
        }
        linalg::solve_with_adjugate(self.adjugate(), &self.determinant, c)
    }

    /// Classifies the derivation of this pair with generator image `d_theta`.
    pub fn classify(&self, d_theta: &RingElement) -> Result<Classification> {
        if !self.pair.ring().same_ring(d_theta.ring()) {
            return Err(Error::RingMismatch);
        }
        let witness = self.solve(d_theta.coords())?;
        Ok(Classification {
            kind: if witness.is_integral() {
                Kind::Inner
            } else {
                Kind::Outer
            },
            witness,
            det_abs: self.det_abs(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Inner,
    Outer,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Inner => "inner",
            Kind::Outer => "outer",
        })
    }
}

/// `witness` is the unique `beta` (as coordinates over a denominator) with
/// `D(theta) = beta * (tau - sigma)(theta)`; outer is exactly the case
/// where it is not integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub witness: RatVector,
    pub det_abs: BigInt,
}

pub fn classify(d: &TwistedDerivation) -> Result<Classification> {
    MultiplierMatrix::build(d.pair())?.classify(d.d_theta())
}

/// Cyclotomic pair helper: `Z[zeta_n]` with `zeta -> zeta^u`, `zeta -> zeta^v`.
pub fn cyclotomic_matrix(n: u64, u: u64, v: u64) -> Result<MultiplierMatrix> {
    let ring = crate::ring::QuotientRing::cyclotomic(n)?;
    MultiplierMatrix::build(&TwistedPair::cyclotomic(&ring, u, v)?)
}

/// The exponents `1 <= x < n` coprime to `n`.
pub fn unit_exponents(n: u64) -> Vec<u64> {
    (1..n).filter(|x| x.gcd(&n) == 1).collect()
}

/// Unordered pairs `u < v` of unit exponents.
pub fn unordered_pairs(n: u64) -> Vec<(u64, u64)> {
    let units = unit_exponents(n);
    let mut out = Vec::with_capacity(units.len() * units.len().saturating_sub(1) / 2);
    for (i, &u) in units.iter().enumerate() {
        for &v in &units[i + 1..] {
            out.push((u, v));
        }
    }
    out
}
