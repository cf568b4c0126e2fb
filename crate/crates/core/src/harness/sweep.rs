use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use super::{pair_stream, seeded_rng};
use crate::endo::{inner_d_theta, TwistedPair};
use crate::error::{Error, Result};
use crate::innerness::{predict_det, unordered_pairs, valuate, Kind, MultiplierMatrix, RingForm};
use crate::par::par_map;
use crate::ring::QuotientRing;
use crate::serial::{dec, opt_dec};

/// Largest ring degree swept unless overridden.
pub const DEFAULT_CAP: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub seed: u64,
    pub cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RingDescriptor {
    #[serde(serialize_with = "dec")]
    pub n: u64,
    pub form: String,
    pub params: BTreeMap<String, String>,
}

impl RingDescriptor {
    pub fn new(form: &RingForm) -> Self {
        RingDescriptor {
            n: form.n(),
            form: form.label().to_string(),
            params: form
                .params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairRecord {
    #[serde(serialize_with = "dec")]
    pub u: u64,
    #[serde(serialize_with = "dec")]
    pub v: u64,
    #[serde(serialize_with = "dec")]
    pub e1: u32,
    #[serde(serialize_with = "opt_dec")]
    pub e2: Option<u32>,
    #[serde(serialize_with = "dec")]
    pub m: u64,
    #[serde(serialize_with = "dec")]
    pub det_abs: BigInt,
    #[serde(serialize_with = "opt_dec")]
    pub predicted: Option<BigInt>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(rename = "roundtrip")]
    pub inner_roundtrip_pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Summary {
    #[serde(serialize_with = "dec")]
    pub pairs: usize,
    #[serde(serialize_with = "dec")]
    pub matches: usize,
    #[serde(serialize_with = "dec")]
    pub seed: u64,
    pub version: String,
}

/// One record per unordered exponent pair, ordered by `(u, v)`.
///
/// `elapsed` is kept out of the serialized form so reports stay byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub ring: RingDescriptor,
    pub pairs: Vec<PairRecord>,
    pub summary: Summary,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn new(ring: RingDescriptor, pairs: Vec<PairRecord>, seed: u64) -> Self {
        let summary = Summary {
            pairs: pairs.len(),
            matches: pairs.iter().filter(|p| p.matches).count(),
            seed,
            version: crate::VERSION.to_string(),
        };
        SweepReport {
            ring,
            pairs,
            summary,
            elapsed: Duration::ZERO,
        }
    }

    pub fn all_match(&self) -> bool {
        self.summary.matches == self.summary.pairs
    }

    pub fn all_roundtrips_pass(&self) -> bool {
        self.pairs.iter().all(|p| p.inner_roundtrip_pass)
    }
}

/// Builds the inner derivation of a random integral `beta` and checks that
/// classification hands back exactly `beta` as the witness.
pub fn inner_roundtrip<R: Rng + ?Sized>(a: &MultiplierMatrix, rng: &mut R) -> Result<bool> {
    let ring = a.pair().ring();
    let beta = ring.random_element(rng);
    let d_theta = inner_d_theta(a.pair(), &beta)?;
    let c = a.classify(&d_theta)?;
    Ok(c.kind == Kind::Inner && c.witness.numerators() == beta.coords())
}

pub fn sweep(form: &RingForm, config: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let phi = form.phi() as usize;
    if phi < 2 {
        return Err(Error::DegenerateRing { phi });
    }
    if phi > config.cap {
        return Err(Error::CapExceeded {
            phi,
            cap: config.cap,
        });
    }
    let n = form.n();
    let ring = QuotientRing::cyclotomic(n)?;
    let pairs = unordered_pairs(n);
    let records = par_map(&pairs, |&(u, v)| -> Result<PairRecord> {
        let pair = TwistedPair::cyclotomic(&ring, u, v)?;
        let a = MultiplierMatrix::build(&pair)?;
        let val = valuate(form, u, v)?;
        let predicted = predict_det(form, &val)?;
        let det_abs = a.det_abs();
        let mut rng = seeded_rng(config.seed, pair_stream(u, v));
        let roundtrip = inner_roundtrip(&a, &mut rng)?;
        Ok(PairRecord {
            u,
            v,
            e1: val.e1,
            e2: val.e2,
            m: val.m,
            matches: det_abs == predicted,
            det_abs,
            predicted: Some(predicted),
            inner_roundtrip_pass: roundtrip,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut report = SweepReport::new(RingDescriptor::new(form), records, config.seed);
    report.elapsed = start.elapsed();
    Ok(report)
}
