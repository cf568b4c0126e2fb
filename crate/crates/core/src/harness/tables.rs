use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::published::{is_known_typo, published_blocks, PublishedBlock};
use crate::endo::TwistedPair;
use crate::error::{Error, Result};
use crate::innerness::{unordered_pairs, MultiplierMatrix};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::par::par_map;
use crate::poly::totient;
use crate::ring::QuotientRing;
use crate::serial::{dec, matrix, rat_matrix};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub computed: String,
    pub known_typo: bool,
}

/// How a block compares with the printed table, after applying the single
/// global sign that relates the two matrix conventions.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PublishedComparison {
    /// `printed = sign * computed`; `0` when no sign makes the matrices agree.
    pub sign: i8,
    pub matrix_match: bool,
    pub det_match: bool,
    pub solution_mismatches: Vec<CellMismatch>,
    /// Everything agrees except allowlisted typos.
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableBlock {
    #[serde(serialize_with = "dec")]
    pub u: u64,
    #[serde(serialize_with = "dec")]
    pub v: u64,
    #[serde(serialize_with = "matrix")]
    pub matrix: IntMatrix,
    #[serde(serialize_with = "dec")]
    pub det: BigInt,
    /// `A^{-1} = Adj(A) / det(A)`; `X = solution * C`.
    #[serde(serialize_with = "rat_matrix")]
    pub solution: RatMatrix,
    pub published: Option<PublishedComparison>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableArtifact {
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "dec")]
    pub phi: u64,
    pub modulus: String,
    pub blocks: Vec<TableBlock>,
}

impl TableArtifact {
    /// False only when a printed table exists and disagrees beyond known typos.
    pub fn consistent_with_published(&self) -> bool {
        self.blocks
            .iter()
            .filter_map(|b| b.published.as_ref())
            .all(|p| p.consistent)
    }
}

fn ratio_string(num: &BigInt, den: &BigInt) -> String {
    let g = num.gcd(den);
    let (mut n, mut d) = (num / &g, den / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if d == BigInt::from(1) {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn compare(
    n: u64,
    a: &MultiplierMatrix,
    inv: &RatMatrix,
    printed: &PublishedBlock,
) -> PublishedComparison {
    let printed_matrix = IntMatrix::from_rows_i64(printed.matrix);
    let sign: i8 = if &printed_matrix == a.matrix() {
        1
    } else if printed_matrix == a.matrix().neg() {
        -1
    } else {
        0
    };
    let det_match = a.det_abs() == BigInt::from(printed.det);
    // printed inverse = sign * computed inverse, compared by cross-multiplication
    let pden = BigInt::from(printed.solution_denominator);
    let signed = BigInt::from(if sign == 0 { 1 } else { sign });
    let mut mismatches = Vec::new();
    for (i, row) in printed.solution.iter().enumerate() {
        for (j, &p) in row.iter().enumerate() {
            let p = BigInt::from(p);
            let ours = inv.numerators().get(i, j) * &signed;
            if &p * inv.denominator() != &ours * &pden {
                mismatches.push(CellMismatch {
                    row: i,
                    col: j,
                    printed: ratio_string(&p, &pden),
                    computed: ratio_string(&ours, inv.denominator()),
                    known_typo: is_known_typo(n, a_u(a), a_v(a), i, j),
                });
            }
        }
    }
    let consistent = sign != 0 && det_match && mismatches.iter().all(|m| m.known_typo);
    PublishedComparison {
        sign,
        matrix_match: sign != 0,
        det_match,
        solution_mismatches: mismatches,
        consistent,
    }
}

fn a_u(a: &MultiplierMatrix) -> u64 {
    a.pair().sigma().exponent().unwrap_or(0)
}

fn a_v(a: &MultiplierMatrix) -> u64 {
    a.pair().tau().exponent().unwrap_or(0)
}

/// Multiplier matrix, determinant and inverse for every unordered pair of
/// `Z[zeta_n]`, compared with the printed tables where they exist.
pub fn reproduce_tables(n: u64, cap: usize) -> Result<TableArtifact> {
    if n < 3 {
        return Err(Error::UnsupportedTable(n));
    }
    let phi = totient(n);
    if phi as usize > cap {
        return Err(Error::CapExceeded {
            phi: phi as usize,
            cap,
        });
    }
    let ring = QuotientRing::cyclotomic(n)?;
    let printed = published_blocks(n);
    let pairs = unordered_pairs(n);
    let blocks = par_map(&pairs, |&(u, v)| -> Result<TableBlock> {
        let a = MultiplierMatrix::build(&TwistedPair::cyclotomic(&ring, u, v)?)?;
        if a.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let solution = a.solution_template()?;
        let published = printed
            .and_then(|blocks| blocks.iter().find(|b| b.u == u && b.v == v))
            .map(|b| compare(n, &a, &solution, b));
        Ok(TableBlock {
            u,
            v,
            matrix: a.matrix().clone(),
            det: a.determinant().clone(),
            solution,
            published,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(TableArtifact {
        n,
        phi,
        modulus: ring.modulus().to_string(),
        blocks,
    })
}
