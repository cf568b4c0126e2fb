//! Matrices, determinants and inverse coefficients as printed in the
//! published tables for `n = 10` and `n = 9`. The printed matrices were
//! formed with the opposite sign convention, so they equal the negation of
//! [`MultiplierMatrix`](crate::innerness::MultiplierMatrix).
//!
//! `solution` rows are the printed `C'` linear forms: row `i` gives the
//! coefficients of `c_0 .. c_{d-1}` in `x_i`, all over `solution_denominator`.

pub struct PublishedBlock {
    pub u: u64,
    pub v: u64,
    pub matrix: &'static [&'static [i64]],
    pub det: u64,
    pub solution_denominator: i64,
    pub solution: &'static [&'static [i64]],
}

/// Printed cells known to be wrong, as `(n, u, v, row, col)`. They are
/// reported but not counted against the reproduction.
///
/// `(10, 1, 3, 3, 1)`: the printed coefficient is `1/5`; inverting the
/// printed matrix gives `2/5`.
pub const KNOWN_TYPOS: &[(u64, u64, u64, usize, usize)] = &[(10, 1, 3, 3, 1)];

pub fn is_known_typo(n: u64, u: u64, v: u64, row: usize, col: usize) -> bool {
    KNOWN_TYPOS.contains(&(n, u, v, row, col))
}

pub fn published_blocks(n: u64) -> Option<&'static [PublishedBlock]> {
    match n {
        10 => Some(TEN),
        9 => Some(NINE),
        _ => None,
    }
}

const TEN: &[PublishedBlock] = &[
    PublishedBlock {
        u: 1,
        v: 3,
        matrix: &[
            &[0, 1, 1, -1],
            &[1, -1, 0, 2],
            &[0, 2, 0, -1],
            &[-1, -1, 1, 1],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[3, 2, -2, -3],
            &[-1, 1, 4, 1],
            &[4, 1, -1, 1],
            &[-2, 1, 3, 2],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 7,
        matrix: &[
            &[0, 0, -1, -2],
            &[1, 0, 1, 1],
            &[1, 1, -1, -1],
            &[0, 1, 2, 1],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[1, 4, 1, -1],
            &[-2, -3, 3, 2],
            &[3, 2, -2, 2],
            &[-4, -1, 1, -1],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 9,
        matrix: &[
            &[-1, -1, 0, -1],
            &[2, 0, -1, 1],
            &[-1, 1, 0, -2],
            &[1, 0, 1, 1],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[2, 3, 2, 3],
            &[-4, -1, 1, -1],
            &[1, -1, 1, 4],
            &[-3, -2, -3, -2],
        ],
    },
    PublishedBlock {
        u: 3,
        v: 7,
        matrix: &[
            &[0, -1, -2, -1],
            &[0, 1, 1, -1],
            &[1, -1, -1, 0],
            &[1, 2, 1, 0],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[-1, 1, 4, 1],
            &[2, -2, -3, 3],
            &[-3, 3, 2, -2],
            &[-1, -4, -1, 1],
        ],
    },
    PublishedBlock {
        u: 3,
        v: 9,
        matrix: &[
            &[-1, -2, -1, 0],
            &[1, 1, -1, -1],
            &[-1, -1, 0, -1],
            &[2, 1, 0, 0],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[1, -1, 1, 4],
            &[-2, 2, -2, -3],
            &[-2, -3, 3, 2],
            &[1, -1, -4, -1],
        ],
    },
    PublishedBlock {
        u: 7,
        v: 9,
        matrix: &[
            &[-1, -1, 1, 1],
            &[1, 0, -2, 0],
            &[-2, 0, 1, -1],
            &[1, -1, -1, 0],
        ],
        det: 5,
        solution_denominator: 5,
        solution: &[
            &[-2, -3, -2, 2],
            &[-1, 1, -1, -4],
            &[-1, -4, -1, 1],
            &[3, 2, -2, -3],
        ],
    },
];

const NINE: &[PublishedBlock] = &[
    PublishedBlock {
        u: 1,
        v: 2,
        matrix: &[
            &[0, 0, 0, 0, 1, -1],
            &[1, 0, 0, 0, 0, 1],
            &[-1, 1, 0, 0, 0, 0],
            &[0, -1, 1, 0, 1, -1],
            &[0, 0, -1, 1, 0, 1],
            &[0, 0, 0, -1, 1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[2, 2, -1, -1, -1, -1],
            &[2, 2, 2, -1, -1, -1],
            &[-1, 2, 2, 2, -1, -1],
            &[1, 1, 1, 1, 1, -2],
            &[1, 1, 1, 1, 1, 1],
            &[-2, 1, 1, 1, 1, 1],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 4,
        matrix: &[
            &[0, 0, 1, 0, 0, -2],
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 2, 0, 0, -1],
            &[-1, 0, 0, 2, 0, 0],
            &[0, -1, 0, 0, 2, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, 2, 0, 0, -1, 0],
            &[0, 0, 2, 0, 0, -1],
            &[-1, 0, 0, 2, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 1],
            &[-2, 0, 0, 1, 0, 0],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 5,
        matrix: &[
            &[0, 1, 0, 0, -1, -1],
            &[1, 0, 1, 0, 0, -1],
            &[0, 1, 0, 1, 0, 0],
            &[0, 1, 1, 0, 0, -1],
            &[0, 0, 1, 1, 0, 0],
            &[-1, 0, 0, 1, 1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[-1, 2, 2, -1, -1, -1],
            &[-1, -1, 2, 2, -1, -1],
            &[-1, -1, -1, 2, 2, -1],
            &[1, 1, 1, -2, 1, 1],
            &[-2, 1, 1, 1, -2, 1],
            &[-2, -2, 1, 1, 1, -2],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 7,
        matrix: &[
            &[0, 0, -1, 0, 0, -1],
            &[2, 0, 0, -1, 0, 0],
            &[0, 2, 0, 0, -1, 0],
            &[0, 0, 1, 0, 0, -2],
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 1],
            &[-2, 0, 0, 1, 0, 0],
            &[0, -1, 0, 0, 2, 0],
            &[0, 0, -1, 0, 0, 2],
            &[-1, 0, 0, -1, 0, 0],
        ],
    },
    PublishedBlock {
        u: 1,
        v: 8,
        matrix: &[
            &[0, -1, 0, 0, 0, -1],
            &[1, 0, -1, 0, 0, 0],
            &[1, 1, 0, -1, 0, 0],
            &[0, 0, 1, 0, -1, -1],
            &[0, 0, 0, 1, 0, -1],
            &[1, 0, 0, 0, 1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[-1, 2, -1, 2, -1, 2],
            &[-1, -1, 2, -1, 2, -1],
            &[-1, -1, -1, 2, -1, 2],
            &[-2, 1, -2, 1, 1, 1],
            &[1, -2, 1, -2, 1, 1],
            &[-2, 1, -2, 1, -2, 1],
        ],
    },
    PublishedBlock {
        u: 2,
        v: 4,
        matrix: &[
            &[0, 0, 1, 0, -1, -1],
            &[0, 0, 0, 1, 0, -1],
            &[1, 0, 0, 0, 1, 0],
            &[0, 1, 1, 0, -1, 0],
            &[-1, 0, 1, 1, 0, -1],
            &[0, -1, 0, 1, 1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[1, 1, 1, 1, -2, 1],
            &[-2, 1, 1, 1, 1, -2],
            &[1, -2, 1, 1, 1, 1],
            &[-1, 2, -1, 2, -1, 2],
            &[-1, -1, 2, -1, 2, -1],
            &[-1, -1, -1, 2, -1, 2],
        ],
    },
    PublishedBlock {
        u: 2,
        v: 5,
        matrix: &[
            &[0, 1, 0, 0, -2, 0],
            &[0, 0, 1, 0, 0, -2],
            &[1, 0, 0, 1, 0, 0],
            &[0, 2, 0, 0, -1, 0],
            &[0, 0, 2, 0, 0, -1],
            &[-1, 0, 0, 2, 0, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, 0, 2, 0, 0, -1],
            &[-1, 0, 0, 2, 0, 0],
            &[0, -1, 0, 0, 2, 0],
            &[0, 0, 1, 0, 0, 1],
            &[-2, 0, 0, 1, 0, 0],
            &[0, -2, 0, 0, 1, 0],
        ],
    },
    PublishedBlock {
        u: 2,
        v: 7,
        matrix: &[
            &[0, 0, -1, 0, -1, 0],
            &[1, 0, 0, -1, 0, -1],
            &[1, 1, 0, 0, -1, 0],
            &[0, 1, 0, 0, -1, -1],
            &[1, 0, 1, 0, 0, -1],
            &[0, 1, 0, 1, 0, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[1, 1, 1, -2, 1, 1],
            &[-2, 1, 1, 1, -2, 1],
            &[-2, -2, 1, 1, 1, -2],
            &[2, -1, -1, -1, 2, 2],
            &[-1, 2, -1, -1, -1, 2],
            &[-1, -1, 2, -1, -1, -1],
        ],
    },
    PublishedBlock {
        u: 2,
        v: 8,
        matrix: &[
            &[0, -1, 0, 0, -1, 0],
            &[0, 0, -1, 0, 0, -1],
            &[2, 0, 0, -1, 0, 0],
            &[0, 1, 0, 0, -2, 0],
            &[0, 0, 1, 0, 0, -2],
            &[1, 0, 0, 1, 0, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, 0, 1, 0, 0, 1],
            &[-2, 0, 0, 1, 0, 0],
            &[0, -2, 0, 0, 1, 0],
            &[0, 0, -1, 0, 0, 2],
            &[-1, 0, 0, -1, 0, 0],
            &[0, -1, 0, 0, -1, 0],
        ],
    },
    PublishedBlock {
        u: 4,
        v: 5,
        matrix: &[
            &[0, 1, -1, 0, -1, 1],
            &[0, 0, 1, -1, 0, -1],
            &[0, 0, 0, 1, -1, 0],
            &[0, 1, -1, 0, 0, 0],
            &[1, 0, 1, -1, 0, 0],
            &[-1, 1, 0, 1, -1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[-1, -1, 2, 2, 2, -1],
            &[-1, -1, -1, 2, 2, 2],
            &[-1, -1, -1, -1, 2, 2],
            &[-2, -2, 1, 1, 1, 1],
            &[-2, -2, -2, 1, 1, 1],
            &[1, -2, -2, -2, 1, 1],
        ],
    },
    PublishedBlock {
        u: 4,
        v: 7,
        matrix: &[
            &[0, 0, -2, 0, 0, 1],
            &[1, 0, 0, -2, 0, 0],
            &[0, 1, 0, 0, -2, 0],
            &[0, 0, -1, 0, 0, -1],
            &[2, 0, 0, -1, 0, 0],
            &[0, 2, 0, 0, -1, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, -1, 0, 0, 2, 0],
            &[0, 0, -1, 0, 0, 2],
            &[-1, 0, 0, -1, 0, 0],
            &[0, -2, 0, 0, 1, 0],
            &[0, 0, -2, 0, 0, 1],
            &[1, 0, 0, -2, 0, 0],
        ],
    },
    PublishedBlock {
        u: 4,
        v: 8,
        matrix: &[
            &[0, -1, -1, 0, 0, 1],
            &[0, 0, -1, -1, 0, 0],
            &[1, 0, 0, -1, -1, 0],
            &[0, 0, -1, 0, -1, 0],
            &[1, 0, 0, -1, 0, -1],
            &[1, 1, 0, 0, -1, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[2, -1, -1, -1, 2, 2],
            &[-1, 2, -1, -1, -1, 2],
            &[-1, -1, 2, -1, -1, -1],
            &[1, -2, -2, 1, 1, 1],
            &[1, 1, -2, -2, 1, 1],
            &[1, 1, 1, -2, -2, 1],
        ],
    },
    PublishedBlock {
        u: 5,
        v: 7,
        matrix: &[
            &[0, -1, -1, 0, 1, 0],
            &[1, 0, -1, -1, 0, 1],
            &[0, 1, 0, -1, -1, 0],
            &[0, -1, 0, 0, 0, -1],
            &[1, 0, -1, 0, 0, 0],
            &[1, 1, 0, -1, 0, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[-2, 1, -2, 1, 1, 1],
            &[1, -2, 1, -2, 1, 1],
            &[-2, 1, -2, 1, -2, 1],
            &[-1, -1, -1, -1, 2, -1],
            &[2, -1, -1, -1, -1, 2],
            &[-1, 2, -1, -1, -1, -1],
        ],
    },
    PublishedBlock {
        u: 5,
        v: 8,
        matrix: &[
            &[0, -2, 0, 0, 1, 0],
            &[0, 0, -2, 0, 0, 1],
            &[1, 0, 0, -2, 0, 0],
            &[0, -1, 0, 0, -1, 0],
            &[0, 0, -1, 0, 0, -1],
            &[2, 0, 0, -1, 0, 0],
        ],
        det: 27,
        solution_denominator: 3,
        solution: &[
            &[0, 0, -1, 0, 0, 2],
            &[-1, 0, 0, -1, 0, 0],
            &[0, -1, 0, 0, -1, 0],
            &[0, 0, -2, 0, 0, 1],
            &[1, 0, 0, -2, 0, 0],
            &[0, 1, 0, 0, -2, 0],
        ],
    },
    PublishedBlock {
        u: 7,
        v: 8,
        matrix: &[
            &[0, -1, 1, 0, 0, 0],
            &[-1, 0, -1, 1, 0, 0],
            &[1, -1, 0, -1, 1, 0],
            &[0, 0, 0, 0, -1, 1],
            &[-1, 0, 0, 0, 0, -1],
            &[1, -1, 0, 0, 0, 0],
        ],
        det: 3,
        solution_denominator: 3,
        solution: &[
            &[-1, -1, -1, -1, -1, 2],
            &[-1, -1, -1, -1, -1, -1],
            &[2, -1, -1, -1, -1, -1],
            &[1, 1, -2, -2, -2, 1],
            &[1, 1, 1, -2, -2, -2],
            &[1, 1, 1, 1, -2, -2],
        ],
    },
];
