//! Skew diagrams D^lambda, diagonal-labeled standard skew tableaux, the
//! walk <-> tableau bijection, diag functions, and counting oracles.
//!
//! Geometry convention: row j of D^lambda occupies absolute columns
//! start_j + 1 ..= start_j + k, where start_j = m_j (GL) or gamma_j (SL).
//! A box in row j, column c lies on diagonal c - j (GL) or
//! c - j - |lambda|/N (SL).

use crate::scalar::Rat;
use crate::walks::{DominantWeight, Flavor, LoopedWalk, WalkError};
use crate::weight::format_rat;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("shape base weight is not dominant")]
    ShapeNotDominant,
    #[error("filling is not a bijection onto 1..=n")]
    NotABijection,
    #[error("filling is not standard: row {row}, position {pos}")]
    RowNotIncreasing { row: usize, pos: usize },
    #[error("filling is not standard: column {col} between rows {row} and {}", row + 1)]
    ColumnNotIncreasing { row: usize, col: i64 },
    #[error("row {row} has {got} boxes, expected {expected}")]
    WrongRowLength {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// The skew shape D^lambda = (YD(lambda) + (k^N)) / YD(lambda), with its
/// diagonal labelling inherited from lambda.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    base: DominantWeight,
    k: usize,
}

impl SkewShape {
    pub fn new(base: DominantWeight, k: usize) -> Result<Self, TableauError> {
        if !base.is_dominant() {
            return Err(TableauError::ShapeNotDominant);
        }
        Ok(SkewShape { base, k })
    }

    pub fn base(&self) -> &DominantWeight {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.base.flavor()
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn boxes(&self) -> usize {
        self.rank() * self.k
    }

    /// start_j: row j (1-based) spans columns start_j + 1 ..= start_j + k.
    pub fn row_start(&self, j: usize) -> i64 {
        self.base.coords()[j - 1]
    }

    /// The additive offset turning column - row into the diagonal label.
    pub fn principal_offset(&self) -> Rat {
        match &self.base {
            DominantWeight::Gl(_) => Rat::zero(),
            DominantWeight::Sl(w) => Rat::new(-w.size(), w.rank() as i64),
        }
    }

    /// Diagonal label of the box in row j, absolute column c.
    pub fn diag_of_box(&self, j: usize, c: i64) -> Rat {
        Rat::from_integer(c - j as i64) + self.principal_offset()
    }
}

/// A standard filling of D^lambda; rows[j-1] lists entries left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Builds and fully validates a standard skew tableau.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let n_rank = shape.rank();
        let n = shape.boxes();
        if rows.len() != n_rank {
            return Err(TableauError::WrongRowLength {
                row: rows.len(),
                got: rows.len(),
                expected: n_rank,
            });
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != shape.k() {
                return Err(TableauError::WrongRowLength {
                    row: j + 1,
                    got: row.len(),
                    expected: shape.k(),
                });
            }
        }
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return Err(TableauError::NotABijection);
                }
                seen[e] = true;
            }
        }
        for (j, row) in rows.iter().enumerate() {
            for p in 1..row.len() {
                if row[p - 1] >= row[p] {
                    return Err(TableauError::RowNotIncreasing { row: j + 1, pos: p });
                }
            }
        }
        // Columns increase downwards wherever two rows share a column.
        for j in 1..n_rank {
            let (up, down) = (shape.row_start(j), shape.row_start(j + 1));
            for c in (down + 1)..=(down + shape.k() as i64) {
                if c > up && c <= up + shape.k() as i64 {
                    let upper = rows[j - 1][(c - up - 1) as usize];
                    let lower = rows[j][(c - down - 1) as usize];
                    if upper >= lower {
                        return Err(TableauError::ColumnNotIncreasing { row: j, col: c });
                    }
                }
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// (row, absolute column) of the box containing entry i.
    pub fn position_of(&self, i: usize) -> (usize, i64) {
        for (j, row) in self.rows.iter().enumerate() {
            if let Some(p) = row.iter().position(|&e| e == i) {
                return (j + 1, self.shape.row_start(j + 1) + 1 + p as i64);
            }
        }
        panic!("entry {i} not present");
    }

    /// Diagonal label of the box containing entry i.
    pub fn diag(&self, i: usize) -> Rat {
        let (j, c) = self.position_of(i);
        self.shape.diag_of_box(j, c)
    }

    pub fn diag_vector(&self) -> Vec<Rat> {
        (1..=self.shape.boxes()).map(|i| self.diag(i)).collect()
    }

    /// Module weight exponents: the tuple (2*diag(1), ..., 2*diag(n)),
    /// read as powers of t.
    pub fn weight_exponents(&self) -> Vec<Rat> {
        self.diag_vector()
            .into_iter()
            .map(|d| d * Rat::from_integer(2))
            .collect()
    }
}

/// The Tab bijection: fill the leftmost vacant box in row delta_i with i.
pub fn tab(u: &LoopedWalk) -> SkewTableau {
    let shape = SkewShape::new(u.base().clone(), u.k()).expect("walk base is dominant");
    let mut rows: Vec<Vec<usize>> = vec![Vec::with_capacity(u.k()); u.rank()];
    for (i, &d) in u.steps().iter().enumerate() {
        rows[d - 1].push(i + 1);
    }
    SkewTableau { shape, rows }
}

/// Inverse of Tab: read off delta_i as the row containing entry i.
/// Rejects non-standard fillings; a standard filling always yields a walk.
pub fn tab_inverse(t: &SkewTableau) -> Result<LoopedWalk, TableauError> {
    // Re-validate so externally constructed fillings are rejected cleanly.
    let t = SkewTableau::new(t.shape.clone(), t.rows.clone())?;
    let n = t.shape.boxes();
    let mut steps = vec![0usize; n];
    for (j, row) in t.rows.iter().enumerate() {
        for &e in row {
            steps[e - 1] = j + 1;
        }
    }
    Ok(LoopedWalk::new(t.shape.base().clone(), steps, t.shape.k())?)
}

/// Diagonal labels along a walk without materializing the tableau.
pub fn walk_diag_vector(u: &LoopedWalk) -> Vec<Rat> {
    let shape = SkewShape::new(u.base().clone(), u.k()).expect("walk base is dominant");
    let mut filled = vec![0usize; u.rank()];
    let mut out = Vec::with_capacity(u.len());
    for &d in u.steps() {
        filled[d - 1] += 1;
        let c = shape.row_start(d) + filled[d - 1] as i64;
        out.push(shape.diag_of_box(d, c));
    }
    out
}

/// Number of standard fillings of the skew shape outer/inner via the
/// determinant formula n! * det[ 1 / (outer_i - inner_j - i + j)! ],
/// with 1/m! = 0 for m < 0. Exact in big integers.
pub fn count_skew_syt_rows(outer: &[i64], inner: &[i64]) -> BigUint {
    assert_eq!(outer.len(), inner.len());
    let rows = outer.len();
    let n: i64 = outer.iter().zip(inner).map(|(o, i)| o - i).sum();
    assert!(n >= 0);
    let inv_factorial = |m: i64| -> BigRational {
        if m < 0 {
            return BigRational::zero();
        }
        let mut f = BigInt::one();
        for x in 2..=m {
            f *= x;
        }
        BigRational::new(BigInt::one(), f)
    };
    let mat: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| inv_factorial(outer[i] - inner[j] - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let det = determinant(mat);
    let mut nf = BigInt::one();
    for x in 2..=n {
        nf *= x;
    }
    let count = det * BigRational::from_integer(nf);
    assert!(count.is_integer(), "determinant count must be integral");
    let v = count.to_integer();
    assert!(!v.is_negative(), "count must be non-negative");
    v.to_biguint().unwrap()
}

/// Standard-filling count of D^lambda for the given shape.
pub fn count_skew_syt(shape: &SkewShape) -> BigUint {
    let coords = shape.base().coords();
    let last = *coords.last().unwrap();
    let inner: Vec<i64> = coords.iter().map(|m| m - last).collect();
    let outer: Vec<i64> = inner.iter().map(|r| r + shape.k() as i64).collect();
    count_skew_syt_rows(&outer, &inner)
}

#[allow(clippy::needless_range_loop)]
fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= pv.clone();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() / pv.clone();
            for c in col..n {
                let t = m[col][c].clone() * f.clone();
                m[r][c] -= t;
            }
        }
    }
    det
}

/// All standard Young tableaux of the N x k rectangle, in the
/// deterministic order induced by walk enumeration at lambda = 0.
pub fn enumerate_rect_syt(rank_n: usize, k: usize) -> Vec<SkewTableau> {
    use crate::walks::enumerate_walks;
    use crate::weight::GlWeight;
    let zero = DominantWeight::Gl(GlWeight::zero(rank_n));
    enumerate_walks(&zero, k).iter().map(tab).collect()
}

/// JSON export record for a tableau.
#[derive(Debug, Clone, Serialize)]
pub struct TableauRecord {
    pub flavor: Flavor,
    pub lambda: Vec<i64>,
    pub principal_label: String,
    pub rows: Vec<Vec<usize>>,
    pub diag: Vec<String>,
    pub weight_exponents: Vec<String>,
}

impl TableauRecord {
    pub fn from_tableau(t: &SkewTableau) -> Self {
        TableauRecord {
            flavor: t.shape().flavor(),
            lambda: t.shape().base().coords(),
            principal_label: format_rat(
                t.shape()
                    .diag_of_box(1, t.shape().row_start(t.shape().rank()) + 1),
            ),
            rows: t.rows().to_vec(),
            diag: t.diag_vector().iter().map(|d| format_rat(*d)).collect(),
            weight_exponents: t
                .weight_exponents()
                .iter()
                .map(|d| format_rat(*d))
                .collect(),
        }
    }
}
