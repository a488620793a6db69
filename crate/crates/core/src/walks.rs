//! Looped walks in the dominant chamber: validation, pruned enumeration,
//! the rotation that realizes pi on the weight basis, and the simple
//! step swaps that realize s_i.
//!
//! A looped walk is the canonical basis index for the whole crate;
//! tableaux and periodic classes are derived views of it.

use crate::weight::{GlWeight, SlWeight};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Gl,
    Sl,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flavor::Gl => write!(f, "gl"),
            Flavor::Sl => write!(f, "sl"),
        }
    }
}

/// A dominant base weight of either flavor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DominantWeight {
    Gl(GlWeight),
    Sl(SlWeight),
}

impl DominantWeight {
    pub fn flavor(&self) -> Flavor {
        match self {
            DominantWeight::Gl(_) => Flavor::Gl,
            DominantWeight::Sl(_) => Flavor::Sl,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            DominantWeight::Gl(w) => w.rank(),
            DominantWeight::Sl(w) => w.rank(),
        }
    }

    pub fn is_dominant(&self) -> bool {
        match self {
            DominantWeight::Gl(w) => w.is_dominant(),
            DominantWeight::Sl(w) => w.is_dominant(),
        }
    }

    pub fn coords(&self) -> Vec<i64> {
        match self {
            DominantWeight::Gl(w) => w.0.clone(),
            DominantWeight::Sl(w) => w.gamma().to_vec(),
        }
    }

    /// Add eps_i / e_i (1-based).
    pub fn step(&self, i: usize) -> DominantWeight {
        match self {
            DominantWeight::Gl(w) => DominantWeight::Gl(w.add_eps(i)),
            DominantWeight::Sl(w) => DominantWeight::Sl(w.add_e(i)),
        }
    }

    /// Subtract eps_i / e_i (1-based).
    pub fn unstep(&self, i: usize) -> DominantWeight {
        match self {
            DominantWeight::Gl(w) => DominantWeight::Gl(w.sub_eps(i)),
            DominantWeight::Sl(w) => DominantWeight::Sl(w.sub_e(i)),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("step sequence has length {got}, expected n = N*k = {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("walk leaves the dominant chamber at step {0}")]
    NotDominantAt(usize),
    #[error("walk does not end at lambda + k*det (GL) / lambda (SL)")]
    WrongEndpoint,
    #[error("base weight is not dominant")]
    BaseNotDominant,
    #[error("step index {0} out of range")]
    BadStepIndex(usize),
}

/// Outcome of checking a candidate walk; `Ok(())` means valid.
pub type WalkCheck = Result<(), WalkError>;

/// A looped walk: a dominant base weight and n = N*k steps, each a basis
/// weight index in 1..=N, with every partial sum dominant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopedWalk {
    base: DominantWeight,
    steps: Vec<usize>,
    k: usize,
}

impl LoopedWalk {
    pub fn new(base: DominantWeight, steps: Vec<usize>, k: usize) -> Result<Self, WalkError> {
        check_walk(&base, &steps, k)?;
        Ok(LoopedWalk { base, steps, k })
    }

    pub fn flavor(&self) -> Flavor {
        self.base.flavor()
    }

    pub fn base(&self) -> &DominantWeight {
        &self.base
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The partial sums u_0 = lambda, ..., u_n.
    pub fn weights(&self) -> Vec<DominantWeight> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.base.clone());
        for &d in &self.steps {
            out.push(out.last().unwrap().step(d));
        }
        out
    }

    /// u_i for 0 <= i <= n.
    pub fn weight_at(&self, i: usize) -> DominantWeight {
        let mut w = self.base.clone();
        for &d in &self.steps[..i] {
            w = w.step(d);
        }
        w
    }
}

/// Validates a candidate walk, reporting the first failing partial sum.
pub fn check_walk(base: &DominantWeight, steps: &[usize], k: usize) -> WalkCheck {
    let n_rank = base.rank();
    let n = n_rank * k;
    if steps.len() != n {
        return Err(WalkError::WrongLength {
            got: steps.len(),
            expected: n,
        });
    }
    if !base.is_dominant() {
        return Err(WalkError::BaseNotDominant);
    }
    if let Some(&bad) = steps.iter().find(|&&d| d == 0 || d > n_rank) {
        return Err(WalkError::BadStepIndex(bad));
    }
    let mut w = base.clone();
    for (i, &d) in steps.iter().enumerate() {
        w = w.step(d);
        if !w.is_dominant() {
            return Err(WalkError::NotDominantAt(i + 1));
        }
    }
    let expected = match base {
        DominantWeight::Gl(b) => {
            DominantWeight::Gl(b.add(&GlWeight::det_weight(n_rank).scaled(k as i64)))
        }
        DominantWeight::Sl(b) => DominantWeight::Sl(b.clone()),
    };
    if w != expected {
        return Err(WalkError::WrongEndpoint);
    }
    Ok(())
}

/// All looped walks at lambda, in lexicographic step order.
///
/// Depth-first with incremental dominance pruning and per-step multiset
/// budgets (each direction is used exactly k times), so the endpoint
/// condition holds automatically at full depth.
pub fn enumerate_walks(lambda: &DominantWeight, k: usize) -> Vec<LoopedWalk> {
    let n_rank = lambda.rank();
    assert!(
        lambda.is_dominant(),
        "enumerate_walks requires dominant lambda"
    );
    let n = n_rank * k;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    let mut budget = vec![k; n_rank];
    fn dfs(
        w: &DominantWeight,
        steps: &mut Vec<usize>,
        budget: &mut [usize],
        n: usize,
        lambda: &DominantWeight,
        k: usize,
        out: &mut Vec<LoopedWalk>,
    ) {
        if steps.len() == n {
            out.push(LoopedWalk {
                base: lambda.clone(),
                steps: steps.clone(),
                k,
            });
            return;
        }
        for d in 1..=budget.len() {
            if budget[d - 1] == 0 {
                continue;
            }
            let next = w.step(d);
            if !next.is_dominant() {
                continue;
            }
            budget[d - 1] -= 1;
            steps.push(d);
            dfs(&next, steps, budget, n, lambda, k, out);
            steps.pop();
            budget[d - 1] += 1;
        }
    }
    dfs(lambda, &mut steps, &mut budget, n, lambda, k, &mut out);
    out
}

/// All dominant base weights within the radius bound: GL weights with
/// every |m_i| <= radius, SL weights with gamma_1 <= radius (gamma_N = 0).
/// Deterministic lexicographic order.
pub fn lambda_ball(flavor: Flavor, rank_n: usize, radius: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut coords = Vec::with_capacity(rank_n);
    fn rec(
        coords: &mut Vec<i64>,
        rank_n: usize,
        lo: i64,
        hi: i64,
        flavor: Flavor,
        out: &mut Vec<DominantWeight>,
    ) {
        if coords.len() == rank_n {
            out.push(match flavor {
                Flavor::Gl => DominantWeight::Gl(GlWeight(coords.clone())),
                Flavor::Sl => DominantWeight::Sl(SlWeight::new(coords)),
            });
            return;
        }
        let mut upper = coords.last().copied().unwrap_or(hi);
        let mut lower = lo;
        if flavor == Flavor::Sl && coords.len() == rank_n - 1 {
            // canonical representative ends with gamma_N = 0
            lower = 0;
            upper = 0;
        }
        for v in (lower..=upper).rev() {
            coords.push(v);
            rec(coords, rank_n, lo, hi, flavor, out);
            coords.pop();
        }
    }
    let lo = match flavor {
        Flavor::Gl => -radius,
        Flavor::Sl => 0,
    };
    rec(&mut coords, rank_n, lo, radius, flavor, &mut out);
    out
}

/// The rotation realizing pi: the walk ending at u_{n-1} instead of u_n.
///
/// New steps (d_n, d_1, ..., d_{n-1}); new base lambda - eps_{d_n}.
/// The rotated base is always dominant for walks (the box of n has no box
/// below it), but this is revalidated and surfaced as an error if violated.
pub fn rotate_walk(u: &LoopedWalk) -> Result<LoopedWalk, WalkError> {
    let last = *u.steps.last().expect("nonempty walk");
    let mut steps = Vec::with_capacity(u.len());
    steps.push(last);
    steps.extend_from_slice(&u.steps[..u.len() - 1]);
    LoopedWalk::new(u.base.unstep(last), steps, u.k)
}

/// Inverse rotation: the walk ending at u_{n+1} = u_1 + k*det.
pub fn rotate_walk_inv(u: &LoopedWalk) -> Result<LoopedWalk, WalkError> {
    let first = u.steps[0];
    let mut steps = Vec::with_capacity(u.len());
    steps.extend_from_slice(&u.steps[1..]);
    steps.push(first);
    LoopedWalk::new(u.base.step(first), steps, u.k)
}

/// Outcome of exchanging steps i, i+1 (1-based i in 1..n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwapOutcome {
    /// d_i = d_{i+1}: boxes i, i+1 adjacent in one row (weight ratio t^-2).
    BlockedSameRow,
    /// Swap exits the chamber: boxes adjacent in one column (ratio t^2).
    BlockedSameColumn,
    /// The swapped walk, valid.
    Swapped(LoopedWalk),
}

/// Exchange steps i and i+1 of u, realizing s_i on the basis.
pub fn swap_step(u: &LoopedWalk, i: usize) -> SwapOutcome {
    assert!(i >= 1 && i < u.len(), "swap index {i} out of range");
    let (a, b) = (u.steps[i - 1], u.steps[i]);
    if a == b {
        return SwapOutcome::BlockedSameRow;
    }
    let mut steps = u.steps.clone();
    steps.swap(i - 1, i);
    // Only the i-th partial sum changes.
    let changed = u.weight_at(i - 1).step(b);
    if !changed.is_dominant() {
        return SwapOutcome::BlockedSameColumn;
    }
    SwapOutcome::Swapped(LoopedWalk {
        base: u.base.clone(),
        steps,
        k: u.k,
    })
}
