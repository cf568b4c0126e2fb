//! Exact integer matrices: Bareiss determinant, cofactor adjugate and the
//! unique rational solution of a nonsingular system.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::par::par_map_range;

pub type IntVector = Vec<BigInt>;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Submatrix with row `skip_row` and column `skip_col` removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det(a: &IntMatrix) -> Result<BigInt> {
    let n = a.require_square()?;
    Ok(bareiss(a.entries.clone(), n))
}

fn bareiss(mut m: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let lead = m[i * n + k].clone();
            for j in k + 1..n {
                let v = &m[i * n + j] * &pivot - &lead * &m[k * n + j];
                // exact by Sylvester's identity
                m[i * n + j] = v / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = m[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Adjugate of a square matrix.
///
/// Nonsingular input goes through fraction-free elimination on `[A | I]`
/// followed by back substitution for `det(A) * A^{-1}`, which is `O(n^3)`.
/// Singular input falls back to cofactors, `adj[j][i] = (-1)^(i+j) det(minor(i, j))`,
/// evaluated in parallel with the `parallel` feature.
pub fn adjugate(a: &IntMatrix) -> Result<IntMatrix> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(IntMatrix::zeros(0, 0));
    }
    if n == 1 {
        return Ok(IntMatrix::identity(1));
    }
    Ok(match adjugate_by_elimination(a, n) {
        Some(adj) => adj,
        None => adjugate_by_cofactors(a, n),
    })
}

fn adjugate_by_elimination(a: &IntMatrix, n: usize) -> Option<IntMatrix> {
    let w = 2 * n;
    let mut m = vec![BigInt::zero(); n * w];
    for i in 0..n {
        for j in 0..n {
            m[i * w + j] = a.get(i, j).clone();
        }
        m[i * w + n + i] = BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * w + k].is_zero() {
            let p = (k + 1..n).find(|&r| !m[r * w + k].is_zero())?;
            for j in 0..w {
                m.swap(k * w + j, p * w + j);
            }
            negate = !negate;
        }
        let pivot = m[k * w + k].clone();
        for i in k + 1..n {
            let lead = m[i * w + k].clone();
            for j in k + 1..w {
                let v = &m[i * w + j] * &pivot - &lead * &m[k * w + j];
                m[i * w + j] = v / &prev;
            }
            m[i * w + k] = BigInt::zero();
        }
        prev = pivot;
    }
    // The last pivot is the determinant of the row-swapped matrix.
    let det = if negate { -&prev } else { prev };
    // Rows of the eliminated system are rational combinations of the original
    // rows, so U z = det * y holds for z = det * A^{-1} e_col, and z is integral.
    let columns = par_map_range(n, |col| {
        let mut z = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let mut acc = &det * &m[i * w + n + col];
            for j in i + 1..n {
                acc -= &m[i * w + j] * &z[j];
            }
            z[i] = acc / &m[i * w + i];
        }
        z
    });
    let mut adj = IntMatrix::zeros(n, n);
    for (col, z) in columns.into_iter().enumerate() {
        for (i, v) in z.into_iter().enumerate() {
            adj.set(i, col, v);
        }
    }
    Some(adj)
}

fn adjugate_by_cofactors(a: &IntMatrix, n: usize) -> IntMatrix {
    let cofactors = par_map_range(n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        let d = bareiss(a.minor(i, j).entries, n - 1);
        if (i + j) % 2 == 1 {
            -d
        } else {
            d
        }
    });
    let mut adj = IntMatrix::zeros(n, n);
    for (idx, c) in cofactors.into_iter().enumerate() {
        let (i, j) = (idx / n, idx % n);
        adj.set(j, i, c);
    }
    adj
}

pub fn mat_vec(a: &IntMatrix, x: &[BigInt]) -> Result<IntVector> {
    if a.cols != x.len() {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: x.len(),
        });
    }
    Ok((0..a.rows)
        .map(|i| a.row(i).iter().zip(x).map(|(p, q)| p * q).sum())
        .collect())
}

/// Integer vector over a common positive denominator, fully reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector {
    numerators: IntVector,
    denominator: BigInt,
}

impl RatVector {
    /// Reduces `numerators / denominator`; the denominator must be nonzero.
    pub fn new(numerators: IntVector, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let g = numerators.iter().fold(denominator.abs(), |g, x| g.gcd(x));
        let sign = if denominator.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let scale = g * sign;
        RatVector {
            numerators: numerators.iter().map(|x| x / &scale).collect(),
            denominator: denominator / scale,
        }
    }

    pub fn integral(numerators: IntVector) -> Self {
        RatVector {
            numerators,
            denominator: BigInt::one(),
        }
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.numerators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        if !self.is_integral() {
            write!(f, " / {}", self.denominator)?;
        }
        Ok(())
    }
}

/// Integer matrix over a common positive denominator, reduced by the gcd of
/// all entries and the denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    numerators: IntMatrix,
    denominator: BigInt,
}

impl RatMatrix {
    pub fn new(numerators: IntMatrix, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let g = numerators
            .entries
            .iter()
            .fold(denominator.abs(), |g, x| g.gcd(x));
        let scale = if denominator.is_negative() { -g } else { g };
        RatMatrix {
            numerators: IntMatrix {
                rows: numerators.rows,
                cols: numerators.cols,
                entries: numerators.entries.iter().map(|x| x / &scale).collect(),
            },
            denominator: denominator / scale,
        }
    }

    pub fn numerators(&self) -> &IntMatrix {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            numerators: self.numerators.neg(),
            denominator: self.denominator.clone(),
        }
    }
}

/// `A^{-1} = Adj(A) / det(A)`.
pub fn inverse(a: &IntMatrix) -> Result<RatMatrix> {
    let d = det(a)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(RatMatrix::new(adjugate(a)?, d))
}

/// Unique solution of `A X = C` as `Adj(A) C / det(A)`, reduced.
pub fn solve_unique(a: &IntMatrix, c: &[BigInt]) -> Result<RatVector> {
    let n = a.require_square()?;
    if c.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.len(),
        });
    }
    let d = det(a)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let adj = adjugate(a)?;
    solve_with_adjugate(&adj, &d, c)
}

/// Same result as [`solve_unique`] for a precomputed adjugate and determinant.
pub fn solve_with_adjugate(adj: &IntMatrix, det: &BigInt, c: &[BigInt]) -> Result<RatVector> {
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(RatVector::new(mat_vec(adj, c)?, det.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        let m = IntMatrix::from_rows_i64(&[&[3, 7], &[-2, 5]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(29));
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = IntMatrix::from_rows_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-1));
        let singular = IntMatrix::from_rows_i64(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert!(det(&singular).unwrap().is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let m = IntMatrix::zeros(2, 3);
        assert!(matches!(
            det(&m),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(adjugate(&m), Err(Error::NotSquare { .. })));
        assert!(matches!(
            solve_unique(&m, &big(&[1, 2])),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(
            adjugate(&IntMatrix::identity(5)).unwrap(),
            IntMatrix::identity(5)
        );
        let m = IntMatrix::from_rows_i64(&[&[3, 7], &[-2, 5]]);
        assert_eq!(
            adjugate(&m).unwrap(),
            IntMatrix::from_rows_i64(&[&[5, -7], &[2, 3]])
        );
        assert_eq!(
            adjugate(&IntMatrix::from_rows_i64(&[&[9]])).unwrap(),
            IntMatrix::identity(1)
        );
    }

    #[test]
    fn elimination_agrees_with_cofactors() {
        let cases = [
            IntMatrix::from_rows_i64(&[&[0, 2, 1], &[3, 0, -1], &[1, 1, 0]]),
            IntMatrix::from_rows_i64(&[&[0, 0, 1, 2], &[0, 1, 0, 0], &[4, 0, 0, 1], &[1, 1, 1, 1]]),
            IntMatrix::from_rows_i64(&[&[2, -3, 5], &[7, 1, -2], &[0, 4, 9]]),
        ];
        for m in &cases {
            let n = m.rows();
            assert_eq!(
                adjugate_by_elimination(m, n).unwrap(),
                adjugate_by_cofactors(m, n)
            );
        }
        let singular = IntMatrix::from_rows_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert!(adjugate_by_elimination(&singular, 3).is_none());
        assert_eq!(
            adjugate(&singular).unwrap(),
            adjugate_by_cofactors(&singular, 3)
        );
    }

    #[test]
    fn elimination_matches_cofactors_on_random_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut singular = 0;
        for t in 0..200 {
            let n = 2 + t % 7;
            let entries = (0..n * n)
                .map(|_| BigInt::from(rng.gen_range(-2i64..=2)))
                .collect();
            let m = IntMatrix::new(n, n, entries).unwrap();
            let by_cofactors = adjugate_by_cofactors(&m, n);
            match adjugate_by_elimination(&m, n) {
                Some(adj) => assert_eq!(adj, by_cofactors),
                None => singular += 1,
            }
            assert_eq!(adjugate(&m).unwrap(), by_cofactors);
        }
        assert!(singular > 0);
    }

    #[test]
    fn solve_examples() {
        let c = big(&[4, -2, 7]);
        let s = solve_unique(&IntMatrix::identity(3), &c).unwrap();
        assert!(s.is_integral());
        assert_eq!(s.numerators(), c.as_slice());

        let m = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 4]]);
        let s = solve_unique(&m, &big(&[1, 2])).unwrap();
        assert_eq!(s.numerators(), big(&[1, 1]).as_slice());
        assert_eq!(s.denominator(), &BigInt::from(2));
        assert_eq!(s.to_string(), "(1, 1) / 2");

        let singular = IntMatrix::from_rows_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            solve_unique(&singular, &big(&[1, 1])),
            Err(Error::SingularMatrix)
        ));
        assert!(matches!(
            solve_unique(&m, &big(&[1])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn rat_vector_normalises_sign_and_zero() {
        let r = RatVector::new(big(&[2, -4]), BigInt::from(-6));
        assert_eq!(r.numerators(), big(&[-1, 2]).as_slice());
        assert_eq!(r.denominator(), &BigInt::from(3));
        let z = RatVector::new(big(&[0, 0]), BigInt::from(-27));
        assert!(z.is_integral());
        assert_eq!(z.numerators(), big(&[0, 0]).as_slice());
    }

    #[test]
    fn inverse_reduces_globally() {
        let m = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(
            inv.numerators(),
            &IntMatrix::from_rows_i64(&[&[2, 0], &[0, 1]])
        );
        assert_eq!(inv.denominator(), &BigInt::from(4));
        let neg = inverse(&IntMatrix::from_rows_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(neg.denominator(), &BigInt::one());
        assert_eq!(
            neg.numerators(),
            &IntMatrix::from_rows_i64(&[&[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn mat_vec_examples() {
        let x = big(&[1, -2, 3]);
        assert_eq!(mat_vec(&IntMatrix::identity(3), &x).unwrap(), x);
        assert_eq!(mat_vec(&IntMatrix::zeros(2, 3), &x).unwrap(), big(&[0, 0]));
        assert!(mat_vec(&IntMatrix::zeros(2, 2), &x).is_err());
    }

    #[test]
    fn from_columns_places_columns() {
        let m = IntMatrix::from_columns(&[big(&[1, 2]), big(&[3, 4])]).unwrap();
        assert_eq!(m, IntMatrix::from_rows_i64(&[&[1, 3], &[2, 4]]));
        assert_eq!(m.column(1), big(&[3, 4]));
        assert_eq!(m.transpose(), IntMatrix::from_rows_i64(&[&[1, 2], &[3, 4]]));
    }
}
