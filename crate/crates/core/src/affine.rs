//! The extended affine symmetric group: n-periodic permutations of Z in
//! window notation, and its two actions on weight-exponent vectors.
//!
//! Weights are stored as exponent vectors of t (exact rationals); at the
//! chosen specializations every support weight is a monomial in t, so
//! orbit computations stay in linear arithmetic over Q.

use crate::scalar::Rat;
use crate::walks::Flavor;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

/// An n-periodic permutation of Z in window notation: window[i] = sigma(i+1)
/// for i = 0..n-1, extended by sigma(i + n) = sigma(i) + n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn new(window: Vec<i64>) -> Self {
        let n = window.len() as i64;
        let mut residues: Vec<i64> = window.iter().map(|w| w.rem_euclid(n)).collect();
        residues.sort_unstable();
        assert!(
            residues == (0..n).collect::<Vec<_>>(),
            "window {window:?} is not a system of residues mod {n}"
        );
        AffinePerm { window }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn identity(n: usize) -> Self {
        AffinePerm::new((1..=n as i64).collect())
    }

    /// pi: i -> i + 1, window (2, 3, ..., n+1).
    pub fn pi(n: usize) -> Self {
        AffinePerm::new((2..=n as i64 + 1).collect())
    }

    /// s_i for 1 <= i <= n-1 swaps i and i+1; s_0 has window (0, 2, ..., n-1, n+1).
    pub fn s(i: usize, n: usize) -> Self {
        assert!(i < n);
        let mut w: Vec<i64> = (1..=n as i64).collect();
        if i == 0 {
            w[0] = 0;
            w[n - 1] = n as i64 + 1;
        } else {
            w.swap(i - 1, i);
        }
        AffinePerm::new(w)
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.window.len() as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1 - r) / n;
        self.window[r as usize] + q * n
    }

    /// self o other: apply other first.
    pub fn compose(&self, other: &AffinePerm) -> AffinePerm {
        assert_eq!(self.n(), other.n());
        AffinePerm::new(
            (1..=self.n() as i64)
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        )
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.window.len() as i64;
        let mut w = vec![0i64; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let q = (v - 1 - r) / n;
            w[r as usize] = (i as i64 + 1) - q * n;
        }
        AffinePerm::new(w)
    }
}

/// A Y/Z weight as a vector of t-exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightExponents {
    pub flavor: Flavor,
    pub exps: Vec<Rat>,
}

impl WeightExponents {
    pub fn new(flavor: Flavor, exps: Vec<Rat>) -> Self {
        WeightExponents { flavor, exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }
}

/// A generator of the extended affine symmetric group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S(usize),
    Pi,
    PiInv,
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::S(i) => write!(f, "s{i}"),
            Generator::Pi => write!(f, "pi"),
            Generator::PiInv => write!(f, "pi^-1"),
        }
    }
}

/// The GL action on t-exponent vectors (q = t^{-2k}):
/// s_0 sends (e_1,...,e_n) to (e_n - 2k, e_2, ..., e_{n-1}, e_1 + 2k),
/// pi sends it to (e_n - 2k, e_1, ..., e_{n-1}).
pub fn act_gl(g: Generator, w: &WeightExponents, k: usize) -> WeightExponents {
    assert_eq!(w.flavor, Flavor::Gl);
    let n = w.n();
    let two_k = Rat::from_integer(2 * k as i64);
    let mut e = w.exps.clone();
    match g {
        Generator::S(0) => {
            let first = e[0];
            e[0] = e[n - 1] - two_k;
            e[n - 1] = first + two_k;
        }
        Generator::S(i) => {
            assert!(i < n);
            e.swap(i - 1, i);
        }
        Generator::Pi => {
            let last = e[n - 1] - two_k;
            e.pop();
            e.insert(0, last);
        }
        Generator::PiInv => {
            let first = e[0] + two_k;
            e.remove(0);
            e.push(first);
        }
    }
    WeightExponents::new(Flavor::Gl, e)
}

/// The SL action on t-exponent vectors (s^2 = t^{2/N}):
/// s_0 sends (e_1,...,e_n) to (e_n - 2n/N, e_2, ..., e_{n-1}, e_1 + 2n/N),
/// pi sends it to (e_n - (2n-2)/N, e_1 + 2/N, ..., e_{n-1} + 2/N).
pub fn act_sl(g: Generator, w: &WeightExponents, rank_n: usize) -> WeightExponents {
    assert_eq!(w.flavor, Flavor::Sl);
    let n = w.n();
    let big_n = rank_n as i64;
    let mut e = w.exps.clone();
    match g {
        Generator::S(0) => {
            let first = e[0];
            e[0] = e[n - 1] - Rat::new(2 * n as i64, big_n);
            e[n - 1] = first + Rat::new(2 * n as i64, big_n);
        }
        Generator::S(i) => {
            assert!(i < n);
            e.swap(i - 1, i);
        }
        Generator::Pi => {
            let last = e[n - 1] - Rat::new(2 * n as i64 - 2, big_n);
            e.pop();
            for x in e.iter_mut() {
                *x += Rat::new(2, big_n);
            }
            e.insert(0, last);
        }
        Generator::PiInv => {
            let first = e[0] + Rat::new(2 * n as i64 - 2, big_n);
            e.remove(0);
            for x in e.iter_mut() {
                *x -= Rat::new(2, big_n);
            }
            e.push(first);
        }
    }
    WeightExponents::new(Flavor::Sl, e)
}

/// Dispatch on flavor; rank_n and k pin the parameter exponents.
pub fn act(g: Generator, w: &WeightExponents, rank_n: usize, k: usize) -> WeightExponents {
    match w.flavor {
        Flavor::Gl => act_gl(g, w, k),
        Flavor::Sl => act_sl(g, w, rank_n),
    }
}

/// BFS sample of the orbit of w together with the stabilizing words found
/// within the word-length bound. Immediate backtracking edges are skipped
/// so trivial cancellations (s_i s_i, pi pi^-1) are not reported.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub orbit_size: usize,
    pub stabilizer_words: Vec<Vec<Generator>>,
}

pub fn orbit_stabilizer(w: &WeightExponents, rank_n: usize, k: usize, bound: usize) -> OrbitReport {
    let n = w.n();
    let mut gens: Vec<Generator> = (0..n).map(Generator::S).collect();
    gens.push(Generator::Pi);
    gens.push(Generator::PiInv);

    let mut seen: HashMap<WeightExponents, Vec<Generator>> = HashMap::new();
    seen.insert(w.clone(), Vec::new());
    let mut queue = VecDeque::new();
    queue.push_back(w.clone());
    let mut stabilizers = Vec::new();
    while let Some(z) = queue.pop_front() {
        let path = seen[&z].clone();
        if path.len() >= bound {
            continue;
        }
        for &g in &gens {
            if let Some(&last) = path.last() {
                let undoes = matches!(
                    (last, g),
                    (Generator::S(a), Generator::S(b)) if a == b
                ) || matches!((last, g), (Generator::Pi, Generator::PiInv))
                    || matches!((last, g), (Generator::PiInv, Generator::Pi));
                if undoes {
                    continue;
                }
            }
            let next = act(g, &z, rank_n, k);
            let mut word = path.clone();
            word.push(g);
            if next == *w && !word.is_empty() {
                stabilizers.push(word.clone());
            }
            seen.entry(next.clone()).or_insert_with(|| {
                queue.push_back(next);
                word
            });
        }
    }
    OrbitReport {
        orbit_size: seen.len(),
        stabilizer_words: stabilizers,
    }
}
