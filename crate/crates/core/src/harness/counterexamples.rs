//! Linear maps defined by the power-image formula that fail to be twisted
//! derivations because the ring is not an integral domain.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::endo::{Endomorphism, LeibnizVerdict, TwistedDerivation, TwistedPair};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CounterexampleCase {
    pub name: String,
    pub modulus: String,
    pub sigma: String,
    pub tau: String,
    pub d_theta: String,
    pub expect_derivation: bool,
    pub is_derivation: bool,
    /// First basis pair `(i, j)` violating the product rule.
    pub failing_pair: Option<[usize; 2]>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CounterexampleSummary {
    pub cases: Vec<CounterexampleCase>,
    pub all_ok: bool,
}

fn run_case(
    name: String,
    modulus: Polynomial,
    sigma: Polynomial,
    tau: Polynomial,
    d_theta: Polynomial,
    expect_derivation: bool,
) -> Result<CounterexampleCase> {
    let ring = QuotientRing::new(modulus.clone())?;
    let pair = TwistedPair::new(
        Endomorphism::new(&ring, ring.reduce(&sigma))?,
        Endomorphism::new(&ring, ring.reduce(&tau))?,
    )?;
    let d = TwistedDerivation::new(pair, ring.reduce(&d_theta))?;
    let verdict = d.leibniz_check();
    let failing_pair = match verdict {
        LeibnizVerdict::Pass => None,
        LeibnizVerdict::Fail { i, j, .. } => Some([i, j]),
    };
    let is_derivation = failing_pair.is_none();
    Ok(CounterexampleCase {
        name,
        modulus: modulus.to_string(),
        sigma: sigma.to_string(),
        tau: tau.to_string(),
        d_theta: d_theta.to_string(),
        expect_derivation,
        is_derivation,
        failing_pair,
        ok: is_derivation == expect_derivation,
    })
}

fn x() -> Polynomial {
    Polynomial::monomial(BigInt::one(), 1)
}

/// Cases:
/// * `Z[X]/(X^6 - 1)`, `x -> x`, `x -> x^2`, `D(x) = x`: not a derivation.
/// * `Z[X]/(X^r)` (the algebra spanned by powers of a nilpotent matrix of
///   index `r`), `x -> x`, `x -> m x`, `D(x) = 1`, for `r` in 2..=4 and `m`
///   in {2, 3}: not a derivation.
/// * The same two setups with `D(x) = 0`: the zero map is a derivation.
pub fn counterexample_suite() -> Result<CounterexampleSummary> {
    let mut cases = Vec::new();
    let sextic = Polynomial::x_pow_minus_one(6);
    let square = Polynomial::monomial(BigInt::one(), 2);
    cases.push(run_case(
        "X^6 - 1, tau(x) = x^2, D(x) = x".into(),
        sextic.clone(),
        x(),
        square.clone(),
        x(),
        false,
    )?);
    cases.push(run_case(
        "X^6 - 1, tau(x) = x^2, D(x) = 0".into(),
        sextic,
        x(),
        square,
        Polynomial::zero(),
        true,
    )?);
    for r in 2..=4usize {
        for m in [2i64, 3] {
            cases.push(run_case(
                format!("X^{r}, tau(x) = {m}x, D(x) = 1"),
                Polynomial::monomial(BigInt::one(), r),
                x(),
                Polynomial::monomial(BigInt::from(m), 1),
                Polynomial::one(),
                false,
            )?);
        }
    }
    cases.push(run_case(
        "X^3, tau(x) = 2x, D(x) = 0".into(),
        Polynomial::monomial(BigInt::one(), 3),
        x(),
        Polynomial::monomial(BigInt::from(2), 1),
        Polynomial::zero(),
        true,
    )?);
    let all_ok = cases.iter().all(|c| c.ok);
    Ok(CounterexampleSummary { cases, all_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_behaves_as_expected() {
        let s = counterexample_suite().unwrap();
        assert!(s.all_ok);
        assert_eq!(s.cases.len(), 9);
        let sextic = &s.cases[0];
        assert!(!sextic.is_derivation);
        let nil = s
            .cases
            .iter()
            .find(|c| c.name == "X^3, tau(x) = 2x, D(x) = 1")
            .unwrap();
        assert!(!nil.is_derivation);
        assert!(s
            .cases
            .iter()
            .filter(|c| c.expect_derivation)
            .all(|c| c.is_derivation));
    }
}
