use serde::Serialize;

use super::seeded_rng;
use crate::endo::{LeibnizVerdict, TwistedDerivation, TwistedPair};
use crate::error::{Error, Result};
use crate::par::par_map_range;
use crate::ring::QuotientRing;
use crate::serial::dec;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TrialFailure {
    #[serde(serialize_with = "dec")]
    pub trial: usize,
    pub d_theta: String,
    #[serde(serialize_with = "dec")]
    pub i: usize,
    #[serde(serialize_with = "dec")]
    pub j: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremSummary {
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "dec")]
    pub u: u64,
    #[serde(serialize_with = "dec")]
    pub v: u64,
    #[serde(serialize_with = "dec")]
    pub trials: usize,
    #[serde(serialize_with = "dec")]
    pub passed: usize,
    #[serde(serialize_with = "dec")]
    pub seed: u64,
    pub failures: Vec<TrialFailure>,
}

impl TheoremSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

/// Draws `trials` random generator images for the pair `zeta -> zeta^u`,
/// `zeta -> zeta^v` on `Z[zeta_n]`, extends each to a linear map and runs
/// the full basis-pair product-rule check.
pub fn verify_theorem(n: u64, u: u64, v: u64, trials: usize, seed: u64) -> Result<TheoremSummary> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let ring = QuotientRing::cyclotomic(n)?;
    let pair = TwistedPair::cyclotomic(&ring, u, v)?;
    let outcomes = par_map_range(trials, |t| {
        let mut rng = seeded_rng(seed, t as u64);
        let d_theta = ring.random_element(&mut rng);
        let d = TwistedDerivation::new(pair.clone(), d_theta.clone())
            .expect("element drawn from the pair's ring");
        match d.leibniz_check() {
            LeibnizVerdict::Pass => None,
            LeibnizVerdict::Fail { i, j, .. } => Some(TrialFailure {
                trial: t,
                d_theta: d_theta.to_string(),
                i,
                j,
            }),
        }
    });
    let failures: Vec<TrialFailure> = outcomes.into_iter().flatten().collect();
    Ok(TheoremSummary {
        n,
        u,
        v,
        trials,
        passed: trials - failures.len(),
        seed,
        failures,
    })
}
