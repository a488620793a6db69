//! GL_N and SL_N integral weights, the symmetric bilinear forms, rho,
//! Young diagrams with diagonal labels, and dual weights.
//!
//! SL weights are stored by their gamma_N = 0 representative; diagonal
//! labels are exact rationals with denominator dividing N.

use crate::scalar::Rat;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("coordinate vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
}

/// A gl_N integral weight in the epsilon-basis: m_1 eps_1 + ... + m_N eps_N.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GlWeight(pub Vec<i64>);

impl GlWeight {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn zero(n: usize) -> Self {
        GlWeight(vec![0; n])
    }

    /// The determinant weight (1, ..., 1).
    pub fn det_weight(n: usize) -> Self {
        GlWeight(vec![1; n])
    }

    /// eps_i, 1-based.
    pub fn eps(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        GlWeight(v)
    }

    /// 2*rho = (N-1, N-3, ..., 1-N); always integral.
    pub fn two_rho(n: usize) -> Self {
        GlWeight((0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn add(&self, other: &GlWeight) -> GlWeight {
        GlWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_eps(&self, i: usize) -> GlWeight {
        let mut v = self.0.clone();
        v[i - 1] += 1;
        GlWeight(v)
    }

    pub fn sub_eps(&self, i: usize) -> GlWeight {
        let mut v = self.0.clone();
        v[i - 1] -= 1;
        GlWeight(v)
    }

    pub fn scaled(&self, c: i64) -> GlWeight {
        GlWeight(self.0.iter().map(|a| a * c).collect())
    }

    /// Dual weight: (m_1,...,m_N)* = (-m_N,...,-m_1). Preserves dominance.
    pub fn dual(&self) -> GlWeight {
        GlWeight(self.0.iter().rev().map(|m| -m).collect())
    }
}

/// Orthonormal form on the epsilon-basis: <a, b> = sum a_i b_i.
pub fn form_gl(a: &GlWeight, b: &GlWeight) -> i64 {
    a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum()
}

/// An sl_N integral weight, stored by the representative with gamma_N = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SlWeight(Vec<i64>);

impl SlWeight {
    /// Normalizes any epsilon-coordinate representative to gamma_N = 0.
    pub fn new(coords: &[i64]) -> Self {
        let last = *coords.last().expect("nonempty coordinates");
        SlWeight(coords.iter().map(|c| c - last).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn gamma(&self) -> &[i64] {
        &self.0
    }

    pub fn zero(n: usize) -> Self {
        SlWeight(vec![0; n])
    }

    /// e_i, 1-based; e_N normalizes to (-1, ..., -1, 0).
    pub fn e(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        SlWeight::new(&v)
    }

    /// Fundamental weight omega_i = e_1 + ... + e_i, 1 <= i < N.
    pub fn omega(i: usize, n: usize) -> Self {
        let mut v = vec![0i64; n];
        for c in v.iter_mut().take(i) {
            *c = 1;
        }
        SlWeight(v)
    }

    /// 2*rho = (2N-2, 2N-4, ..., 2, 0) in the canonical representative.
    pub fn two_rho(n: usize) -> Self {
        SlWeight((0..n).map(|i| 2 * (n - 1 - i) as i64).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// |lambda| = sum of gamma_i; representative-independent.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add_e(&self, i: usize) -> SlWeight {
        let mut v = self.0.clone();
        v[i - 1] += 1;
        SlWeight::new(&v)
    }

    pub fn sub_e(&self, i: usize) -> SlWeight {
        let mut v = self.0.clone();
        v[i - 1] -= 1;
        SlWeight::new(&v)
    }
}

/// The A_{N-1} form extended bilinearly from <e_i, e_j> = delta_ij - 1/N,
/// computed on representatives via the sum-zero projection.
pub fn form_sl(a: &SlWeight, b: &SlWeight) -> Rat {
    let n = a.rank() as i64;
    let sa: i64 = a.gamma().iter().sum();
    let sb: i64 = b.gamma().iter().sum();
    let dot: i64 = a.gamma().iter().zip(b.gamma()).map(|(x, y)| x * y).sum();
    Rat::from_integer(dot) - Rat::new(sa * sb, n)
}

/// A diagonal label: an integer for GL shapes, an element of -|lambda|/N + Z
/// for SL shapes. Always exact, denominator divides N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagLabel(pub Rat);

impl DiagLabel {
    pub fn value(&self) -> Rat {
        self.0
    }
}

impl std::fmt::Display for DiagLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.to_integer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Formats a rational the same way diagonal labels are printed.
pub fn format_rat(r: Rat) -> String {
    DiagLabel(r).to_string()
}

/// A Young diagram read off a dominant weight: row lengths plus the
/// principal diagonal label (m_N for GL, -|lambda|/N for SL).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagram {
    pub rows: Vec<i64>,
    pub principal_label: DiagLabel,
}

/// YD(lambda) for a dominant GL weight: rows (m_1-m_N, ..., 0), label m_N.
pub fn young_diagram_gl(lambda: &GlWeight) -> Result<YoungDiagram, WeightError> {
    if !lambda.is_dominant() {
        return Err(WeightError::NotDominant(lambda.0.clone()));
    }
    let last = *lambda.0.last().unwrap();
    Ok(YoungDiagram {
        rows: lambda.0.iter().map(|m| m - last).collect(),
        principal_label: DiagLabel(Rat::from_integer(last)),
    })
}

/// YD(lambda) for a dominant SL weight: rows gamma, label -|lambda|/N.
pub fn young_diagram_sl(lambda: &SlWeight) -> Result<YoungDiagram, WeightError> {
    if !lambda.is_dominant() {
        return Err(WeightError::NotDominant(lambda.gamma().to_vec()));
    }
    Ok(YoungDiagram {
        rows: lambda.gamma().to_vec(),
        principal_label: DiagLabel(Rat::new(-lambda.size(), lambda.rank() as i64)),
    })
}
