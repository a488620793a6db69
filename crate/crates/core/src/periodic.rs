//! Periodic standard tableaux on the N x infinity strip, the Per and SPer
//! periodization bijections, filling-sum diagonal labels, and the
//! shift-canonical SL classes.
//!
//! GL periodic tableaux are anchored geometrically: the (1,1) cell is the
//! upper left corner of the fundamental rectangle mu[0]. SL classes are
//! anchored by diagonal labels only and are stored by their SPer-preimage
//! (gamma_N = 0 weight plus standard filling), the unique shift-free
//! canonical form.

use crate::scalar::Rat;
use crate::tableaux::{tab, tab_inverse, SkewShape, SkewTableau, TableauError};
use crate::walks::{rotate_walk, DominantWeight, WalkError};
use crate::weight::{GlWeight, SlWeight};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeriodicError {
    #[error("window is {got_rows}x{got_cols}, expected {rows}x{cols}")]
    WrongWindowShape {
        got_rows: usize,
        got_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("window entries are not distinct mod n")]
    EntriesCollideModN,
    #[error("periodization is not standard near row {row}, column {col}")]
    NotStandard { row: usize, col: i64 },
    #[error("boxes filled with 1..n do not form a skew diagram in row {0}")]
    WindowNotSkew(usize),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// An n-periodic standard tableau of shape (k^N), GL flavor: determined by
/// the integer fillings of mu[0] (rows 1..N, columns 1..k), extended by
/// box(j, m + k) = box(j, m) + n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicTableau {
    rank_n: usize,
    k: usize,
    window: Vec<Vec<i64>>,
}

impl PeriodicTableau {
    pub fn new(rank_n: usize, k: usize, window: Vec<Vec<i64>>) -> Result<Self, PeriodicError> {
        let n = (rank_n * k) as i64;
        if window.len() != rank_n || window.iter().any(|r| r.len() != k) {
            return Err(PeriodicError::WrongWindowShape {
                got_rows: window.len(),
                got_cols: window.first().map_or(0, |r| r.len()),
                rows: rank_n,
                cols: k,
            });
        }
        let mut residues: Vec<i64> = window.iter().flatten().map(|w| w.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != rank_n * k {
            return Err(PeriodicError::EntriesCollideModN);
        }
        let p = PeriodicTableau { rank_n, k, window };
        // Seam violations appear within one period of the boundary, so a
        // 3-window pad (columns -k+1 ..= 2k) suffices.
        for j in 1..=rank_n {
            for c in (1 - k as i64)..(2 * k as i64) {
                if p.entry(j, c) >= p.entry(j, c + 1) {
                    return Err(PeriodicError::NotStandard { row: j, col: c });
                }
            }
        }
        for j in 1..rank_n {
            for c in (1 - k as i64)..=(2 * k as i64) {
                if p.entry(j, c) >= p.entry(j + 1, c) {
                    return Err(PeriodicError::NotStandard { row: j, col: c });
                }
            }
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.rank_n * self.k
    }

    pub fn window(&self) -> &[Vec<i64>] {
        &self.window
    }

    /// Strip entry at row j (1-based), any column c in Z.
    pub fn entry(&self, j: usize, c: i64) -> i64 {
        let k = self.k as i64;
        let m = (c - 1).rem_euclid(k);
        let r = (c - 1 - m) / k;
        self.window[j - 1][m as usize] + r * self.n() as i64
    }

    /// Diagonal label of the box containing entry i (defined for all i in Z);
    /// satisfies diag(i + n) = diag(i) + k.
    pub fn diag(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        for (j, row) in self.window.iter().enumerate() {
            for (m, &w) in row.iter().enumerate() {
                if (i - w).rem_euclid(n) == 0 {
                    let r = (i - w) / n;
                    let col = (m as i64 + 1) + r * self.k as i64;
                    return col - (j as i64 + 1);
                }
            }
        }
        unreachable!("entries cover Z mod n")
    }

    /// Module weight exponents (2*diag(1), ..., 2*diag(n)) as powers of t.
    pub fn weight_exponents(&self) -> Vec<Rat> {
        (1..=self.n() as i64)
            .map(|i| Rat::from_integer(2 * self.diag(i)))
            .collect()
    }

    /// Relabel entries through an n-periodic bijection of Z. The result may
    /// fail standardness; errors report where.
    pub fn map_entries(&self, f: impl Fn(i64) -> i64) -> Result<PeriodicTableau, PeriodicError> {
        let window = self
            .window
            .iter()
            .map(|row| row.iter().map(|&w| f(w)).collect())
            .collect();
        PeriodicTableau::new(self.rank_n, self.k, window)
    }
}

/// Per: place the standard skew tableau T on D^lambda into the strip at its
/// matching diagonal labels and extend periodically.
pub fn per(t: &SkewTableau) -> Result<PeriodicTableau, PeriodicError> {
    let DominantWeight::Gl(_) = t.shape().base() else {
        panic!("per takes a GL-flavored tableau");
    };
    let rank_n = t.shape().rank();
    let k = t.shape().k() as i64;
    let n = t.shape().boxes() as i64;
    let mut window = vec![vec![0i64; k as usize]; rank_n];
    for (j0, row) in window.iter_mut().enumerate() {
        let start = t.shape().row_start(j0 + 1);
        for (m0, cell) in row.iter_mut().enumerate() {
            let m = m0 as i64 + 1;
            // unique shift r with m + r*k inside [start+1, start+k]
            let r = num::Integer::div_floor(&(start + k - m), &k);
            let c = m + r * k;
            debug_assert!(c > start && c <= start + k);
            let entry = t.rows()[j0][(c - start - 1) as usize] as i64;
            *cell = entry - r * n;
        }
    }
    PeriodicTableau::new(rank_n, k as usize, window)
}

/// Inverse of Per: the boxes filled with 1..n form D^lambda for a unique
/// dominant lambda; read lambda and the filling off the strip.
pub fn per_inverse(p: &PeriodicTableau) -> Result<(GlWeight, SkewTableau), PeriodicError> {
    let n = p.n() as i64;
    let k = p.k() as i64;
    let mut coords = Vec::with_capacity(p.rank());
    let mut rows = Vec::with_capacity(p.rank());
    for j in 1..=p.rank() {
        // Each window box holds exactly one representative with entry in 1..n.
        let mut cells: Vec<(i64, i64)> = (1..=k)
            .map(|m| {
                let w = p.window[j - 1][(m - 1) as usize];
                let r = num::Integer::div_floor(&(n - w), &n);
                (m + r * k, w + r * n)
            })
            .collect();
        cells.sort_unstable();
        let first = cells[0].0;
        for (idx, (c, _)) in cells.iter().enumerate() {
            if *c != first + idx as i64 {
                return Err(PeriodicError::WindowNotSkew(j));
            }
        }
        coords.push(first - 1);
        rows.push(
            cells
                .into_iter()
                .map(|(_, e)| e as usize)
                .collect::<Vec<_>>(),
        );
    }
    let lambda = GlWeight(coords);
    let shape = SkewShape::new(DominantWeight::Gl(lambda.clone()), p.k())?;
    let tableau = SkewTableau::new(shape, rows)?;
    Ok((lambda, tableau))
}

/// An N x k vertical window of an SL periodic class, with its filling-sum
/// data: sum = n(n+1)/2 + n*p and NW diagonal label p/N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassWindow {
    pub first_col: i64,
    pub entries: Vec<Vec<i64>>,
    pub filling_sum: i64,
    pub p: i64,
    pub nw_label: Rat,
}

/// A shift-canonical SL periodic class, stored by its SPer-preimage:
/// the gamma_N = 0 weight together with the standard filling of D^lambda.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicClass {
    tableau: SkewTableau,
}

impl PeriodicClass {
    pub fn lambda(&self) -> &SlWeight {
        match self.tableau.shape().base() {
            DominantWeight::Sl(w) => w,
            DominantWeight::Gl(_) => unreachable!("SL class holds an SL shape"),
        }
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn rank(&self) -> usize {
        self.tableau.shape().rank()
    }

    pub fn k(&self) -> usize {
        self.tableau.shape().k()
    }

    pub fn n(&self) -> usize {
        self.tableau.shape().boxes()
    }

    /// The distinguished class R_0: columns read (m-1)N + j at lambda = 0.
    pub fn r0(rank_n: usize, k: usize) -> PeriodicClass {
        let shape = SkewShape::new(DominantWeight::Sl(SlWeight::zero(rank_n)), k)
            .expect("zero weight is dominant");
        let rows = (1..=rank_n)
            .map(|j| (1..=k).map(|m| (m - 1) * rank_n + j).collect())
            .collect();
        let tableau = SkewTableau::new(shape, rows).expect("column reading is standard");
        PeriodicClass { tableau }
    }

    /// Filling-sum diagonal label of entry i, any i in Z;
    /// satisfies diag(i + n) = diag(i) + k.
    pub fn sl_diag(&self, i: i64) -> Rat {
        let n = self.n() as i64;
        let i0 = (i - 1).rem_euclid(n) + 1;
        let r = (i - i0) / n;
        self.tableau.diag(i0 as usize) + Rat::from_integer(r * self.k() as i64)
    }

    pub fn weight_exponents(&self) -> Vec<Rat> {
        self.tableau.weight_exponents()
    }

    /// The N x k window spanning strip columns first_col ..= first_col+k-1
    /// in the gamma geometry, with its filling sum and p-offset.
    pub fn window_at(&self, first_col: i64) -> ClassWindow {
        let n = self.n() as i64;
        let k = self.k() as i64;
        let entries: Vec<Vec<i64>> = (1..=self.rank())
            .map(|j| {
                let start = self.tableau.shape().row_start(j);
                (0..k)
                    .map(|m0| {
                        let c = first_col + m0;
                        let r = num::Integer::div_floor(&(start + k - c), &k);
                        let cc = c + r * k;
                        debug_assert!(cc > start && cc <= start + k);
                        self.tableau.rows()[j - 1][(cc - start - 1) as usize] as i64 - r * n
                    })
                    .collect()
            })
            .collect();
        let filling_sum: i64 = entries.iter().flatten().sum();
        let sigma0 = n * (n + 1) / 2;
        debug_assert_eq!((filling_sum - sigma0).rem_euclid(n), 0);
        let p = (filling_sum - sigma0) / n;
        ClassWindow {
            first_col,
            entries,
            filling_sum,
            p,
            nw_label: Rat::new(p, self.rank() as i64),
        }
    }

    /// The fundamental window at columns 1..k; its filling sum is
    /// n(n+1)/2 - |lambda| n and its NW label the principal -|lambda|/N.
    pub fn fundamental_window(&self) -> ClassWindow {
        self.window_at(1)
    }

    /// The class of pi . C, computed on the canonical representative via
    /// the rotation of the underlying walk.
    pub fn pi_shift(&self) -> Result<PeriodicClass, PeriodicError> {
        let u = tab_inverse(&self.tableau)?;
        let rotated = rotate_walk(&u)?;
        Ok(PeriodicClass {
            tableau: tab(&rotated),
        })
    }
}

/// SPer: package the standard tableau on D^lambda (principal label
/// -|lambda|/N) as the canonical representative of its periodic class.
pub fn sper(t: &SkewTableau) -> Result<PeriodicClass, PeriodicError> {
    let DominantWeight::Sl(_) = t.shape().base() else {
        panic!("sper takes an SL-flavored tableau");
    };
    // Revalidate the filling so arbitrary inputs are rejected cleanly.
    let tableau = SkewTableau::new(t.shape().clone(), t.rows().to_vec())?;
    Ok(PeriodicClass { tableau })
}

/// Inverse of SPer: the canonical (lambda, T) representative.
pub fn sper_inverse(c: &PeriodicClass) -> (SlWeight, SkewTableau) {
    (c.lambda().clone(), c.tableau().clone())
}

/// JSON export record for GL periodic tableaux and SL classes.
#[derive(Debug, Clone, Serialize)]
pub struct PeriodicRecord {
    pub flavor: crate::walks::Flavor,
    pub lambda: Vec<i64>,
    pub window: Vec<Vec<i64>>,
    pub diag: Vec<String>,
    pub weight_exponents: Vec<String>,
}

impl PeriodicRecord {
    pub fn from_gl(p: &PeriodicTableau) -> Result<Self, PeriodicError> {
        let (lambda, _) = per_inverse(p)?;
        Ok(PeriodicRecord {
            flavor: crate::walks::Flavor::Gl,
            lambda: lambda.0,
            window: p.window().to_vec(),
            diag: (1..=p.n() as i64)
                .map(|i| crate::weight::format_rat(Rat::from_integer(p.diag(i))))
                .collect(),
            weight_exponents: p
                .weight_exponents()
                .iter()
                .map(|r| crate::weight::format_rat(*r))
                .collect(),
        })
    }

    pub fn from_sl(c: &PeriodicClass) -> Self {
        PeriodicRecord {
            flavor: crate::walks::Flavor::Sl,
            lambda: c.lambda().gamma().to_vec(),
            window: c.fundamental_window().entries,
            diag: (1..=c.n() as i64)
                .map(|i| crate::weight::format_rat(c.sl_diag(i)))
                .collect(),
            weight_exponents: c
                .weight_exponents()
                .iter()
                .map(|r| crate::weight::format_rat(*r))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{act, AffinePerm, Generator, WeightExponents};
    use crate::walks::{enumerate_walks, Flavor, LoopedWalk};

    fn gl(coords: &[i64]) -> DominantWeight {
        DominantWeight::Gl(GlWeight(coords.to_vec()))
    }

    fn sl(coords: &[i64]) -> DominantWeight {
        DominantWeight::Sl(SlWeight::new(coords))
    }

    fn walk(base: DominantWeight, steps: &[usize], k: usize) -> LoopedWalk {
        LoopedWalk::new(base, steps.to_vec(), k).unwrap()
    }

    #[test]
    fn per_window_fixtures() {
        // lambda = (1,0), T = [[1,2],[3,4]]: window (-2,1 / 3,4)
        let t = tab(&walk(gl(&[1, 0]), &[1, 1, 2, 2], 2));
        let p = per(&t).unwrap();
        assert_eq!(p.window(), &[vec![-2, 1], vec![3, 4]]);
        // lambda = 0: the filling is its own window
        let t = tab(&walk(gl(&[0, 0]), &[1, 2, 1, 2], 2));
        let p = per(&t).unwrap();
        assert_eq!(p.window(), &[vec![1, 3], vec![2, 4]]);
        // lambda = (2,1): same filling shape, labels shifted +1
        let t = tab(&walk(gl(&[2, 1]), &[1, 1, 2, 2], 2));
        let p = per(&t).unwrap();
        assert_eq!(p.window(), &[vec![-3, -2], vec![0, 3]]);
        let w: Vec<i64> = p
            .weight_exponents()
            .iter()
            .map(|r| r.to_integer())
            .collect();
        assert_eq!(w, vec![4, 6, 0, 2]);
    }

    #[test]
    fn per_round_trip_bounded() {
        for m1 in -3..=3i64 {
            for m2 in -3..=m1 {
                let lambda = gl(&[m1, m2]);
                for u in enumerate_walks(&lambda, 2) {
                    let t = tab(&u);
                    let p = per(&t).unwrap();
                    let (l2, t2) = per_inverse(&p).unwrap();
                    assert_eq!(l2.0, vec![m1, m2]);
                    assert_eq!(t2, t);
                }
            }
        }
    }

    #[test]
    fn per_is_surjective_on_bounded_windows() {
        // every valid 2x2 window round-trips through per_inverse . per
        let (rank_n, k) = (2usize, 2usize);
        let n = (rank_n * k) as i64;
        let lo = -n;
        let hi = 2 * n;
        let mut count = 0;
        for a in lo..=hi {
            for b in lo..=hi {
                for c in lo..=hi {
                    for d in lo..=hi {
                        let window = vec![vec![a, b], vec![c, d]];
                        let Ok(p) = PeriodicTableau::new(rank_n, k, window) else {
                            continue;
                        };
                        count += 1;
                        let (_, t) = per_inverse(&p).unwrap();
                        assert_eq!(per(&t).unwrap(), p);
                    }
                }
            }
        }
        assert!(count > 50, "only {count} valid windows found");
    }

    #[test]
    fn sl2_windows_at_m_three() {
        // The six shift classes at lambda = 3*omega_1 (SL_2, k = 2), read in
        // the window spanning strip columns 3..4, in walk order.
        let expected: [(&[usize], [[i64; 2]; 2]); 6] = [
            (&[1, 1, 2, 2], [[-2, 1], [7, 8]]),
            (&[1, 2, 1, 2], [[-1, 1], [6, 8]]),
            (&[1, 2, 2, 1], [[0, 1], [6, 7]]),
            (&[2, 1, 1, 2], [[-1, 2], [5, 8]]),
            (&[2, 1, 2, 1], [[0, 2], [5, 7]]),
            (&[2, 2, 1, 1], [[0, 3], [5, 6]]),
        ];
        let walks = enumerate_walks(&sl(&[3, 0]), 2);
        assert_eq!(walks.len(), 6);
        for (u, (steps, window)) in walks.iter().zip(expected) {
            assert_eq!(u.steps(), steps);
            let c = sper(&tab(u)).unwrap();
            let got = c.window_at(3).entries;
            let want: Vec<Vec<i64>> = window.iter().map(|r| r.to_vec()).collect();
            assert_eq!(got, want, "steps {steps:?}");
        }
    }

    #[test]
    fn sl3_windows_at_omega_one() {
        // The three classes at omega_1 (SL_3, k = 1), each read in the
        // column containing its first-row entry: [1,5,6], [2,4,6], [3,4,5].
        let expected: [(&[usize], [i64; 3]); 3] = [
            (&[1, 2, 3], [1, 5, 6]),
            (&[2, 1, 3], [2, 4, 6]),
            (&[2, 3, 1], [3, 4, 5]),
        ];
        let walks = enumerate_walks(&sl(&[1, 0, 0]), 1);
        for (u, (steps, column)) in walks.iter().zip(expected) {
            assert_eq!(u.steps(), steps);
            let c = sper(&tab(u)).unwrap();
            let top = c.tableau().rows()[0][0];
            let (_, col) = c.tableau().position_of(top);
            let got: Vec<i64> = c.window_at(col).entries.iter().map(|r| r[0]).collect();
            assert_eq!(got, column.to_vec(), "steps {steps:?}");
        }
    }

    #[test]
    fn nonstandard_periodization_rejected() {
        // [[1,8],[3,10],[5,12]] is row/column increasing in the window but
        // its periodization is not standard.
        let err = PeriodicTableau::new(3, 2, vec![vec![1, 8], vec![3, 10], vec![5, 12]]);
        assert!(matches!(err, Err(PeriodicError::NotStandard { .. })));
        // the column-superstandard filling periodizes fine
        assert!(PeriodicTableau::new(3, 2, vec![vec![1, 4], vec![2, 5], vec![3, 6]]).is_ok());
    }

    #[test]
    fn gl_diag_compatibility_under_the_affine_action() {
        // diag_{sigma.R}(sigma(i)) = diag_R(i) for simple reflections and pi
        let mut pairs = 0;
        for m1 in -2..=2i64 {
            for m2 in -2..=m1 {
                for u in enumerate_walks(&gl(&[m1, m2]), 2) {
                    let p = per(&tab(&u)).unwrap();
                    let n = p.n();
                    let mut sigmas: Vec<AffinePerm> = (1..n).map(|i| AffinePerm::s(i, n)).collect();
                    sigmas.push(AffinePerm::pi(n));
                    sigmas.push(AffinePerm::s(0, n));
                    for sigma in sigmas {
                        if let Ok(moved) = p.map_entries(|w| sigma.apply(w)) {
                            for i in 1..=n as i64 {
                                assert_eq!(moved.diag(sigma.apply(i)), p.diag(i));
                            }
                            pairs += 1;
                        }
                    }
                }
            }
        }
        assert!(pairs >= 200, "only {pairs} standard pairs checked");
    }

    #[test]
    fn gl_weight_intertwines_the_affine_action() {
        // wt(sigma . R) = sigma . wt(R) for sigma in {s_0..s_{n-1}, pi}
        let (rank_n, k) = (2usize, 2usize);
        for m1 in -2..=2i64 {
            for m2 in -2..=m1 {
                for u in enumerate_walks(&gl(&[m1, m2]), k) {
                    let p = per(&tab(&u)).unwrap();
                    let n = p.n();
                    let w = WeightExponents::new(Flavor::Gl, p.weight_exponents());
                    let mut gens: Vec<(Generator, AffinePerm)> = (0..n)
                        .map(|i| (Generator::S(i), AffinePerm::s(i, n)))
                        .collect();
                    gens.push((Generator::Pi, AffinePerm::pi(n)));
                    for (g, sigma) in gens {
                        if let Ok(moved) = p.map_entries(|x| sigma.apply(x)) {
                            let lhs = WeightExponents::new(Flavor::Gl, moved.weight_exponents());
                            let rhs = act(g, &w, rank_n, k);
                            assert_eq!(lhs, rhs, "sigma={g} window={:?}", p.window());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sper_orbit_fixtures_sl3() {
        // The pi-orbit of the three SL3 skew tableaux: windows anchored at
        // entry 1, 2, 3's column read [1,5,6], [2,6,7], [3,7,8].
        let u = walk(sl(&[1, 0, 0]), &[1, 2, 3], 1);
        let c = sper(&tab(&u)).unwrap();
        let (_, col_of_1) = c.tableau().position_of(1);
        let w = c.window_at(col_of_1);
        assert_eq!(w.entries, vec![vec![1], vec![5], vec![6]]);
        assert_eq!(w.filling_sum, 12);
        assert_eq!(w.p, 2);
        assert_eq!(w.nw_label, Rat::new(2, 3));
        assert_eq!(
            c.weight_exponents(),
            vec![Rat::new(4, 3), Rat::new(-8, 3), Rat::new(-14, 3)]
        );

        let c2 = c.pi_shift().unwrap();
        assert_eq!(c2.lambda().gamma(), &[2, 1, 0]);
        let (_, col_of_2) = c2.tableau().position_of(2);
        let w2 = c2.window_at(col_of_2);
        assert_eq!(w2.entries, vec![vec![2], vec![6], vec![7]]);
        assert_eq!(w2.filling_sum, 15);
        assert_eq!(w2.nw_label, Rat::from_integer(1));
        assert_eq!(
            c2.weight_exponents(),
            vec![
                Rat::from_integer(-6),
                Rat::from_integer(2),
                Rat::from_integer(-2)
            ]
        );

        let c3 = c2.pi_shift().unwrap();
        assert_eq!(c3.lambda().gamma(), &[2, 0, 0]);
        assert_eq!(
            c3.weight_exponents(),
            vec![Rat::new(-10, 3), Rat::new(-16, 3), Rat::new(8, 3)]
        );

        // pi^3 returns to the start: the three classes form a pi-orbit
        assert_eq!(c3.pi_shift().unwrap(), c);
    }

    #[test]
    fn fundamental_window_filling_sum_rule() {
        // filling sum of the principal-anchored window is n(n+1)/2 - |lambda| n
        for coords in [[0i64, 0, 0], [1, 0, 0], [2, 1, 0], [2, 0, 0], [3, 1, 0]] {
            let lambda = sl(&coords);
            for u in enumerate_walks(&lambda, 1) {
                let c = sper(&tab(&u)).unwrap();
                let n = c.n() as i64;
                let size = c.lambda().size();
                let w = c.fundamental_window();
                assert_eq!(w.filling_sum, n * (n + 1) / 2 - size * n);
                assert_eq!(w.nw_label, Rat::new(-size, 3));
            }
        }
    }

    #[test]
    fn window_diag_rule_eq_sl() {
        // For any window, the entry at window row j, column m has
        // sl_diag = m - j + p/N.
        for coords in [[1i64, 0, 0], [2, 1, 0]] {
            for u in enumerate_walks(&sl(&coords), 1) {
                let c = sper(&tab(&u)).unwrap();
                for first in -2..=3i64 {
                    let w = c.window_at(first);
                    for (j0, row) in w.entries.iter().enumerate() {
                        for (m0, &e) in row.iter().enumerate() {
                            let expect = Rat::from_integer(m0 as i64 - j0 as i64) + w.nw_label;
                            assert_eq!(c.sl_diag(e), expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn r0_fixture_and_periodicity() {
        let c = PeriodicClass::r0(2, 2);
        assert_eq!(c.fundamental_window().entries, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(c.fundamental_window().filling_sum, 10);
        assert_eq!(c.fundamental_window().p, 0);
        let d: Vec<Rat> = (1..=4).map(|i| c.sl_diag(i)).collect();
        assert_eq!(
            d,
            vec![
                Rat::from_integer(0),
                Rat::from_integer(-1),
                Rat::from_integer(1),
                Rat::from_integer(0)
            ]
        );
        // diag(i+n) = diag(i) + k over a spread of indices
        for i in -7..=9i64 {
            assert_eq!(c.sl_diag(i + 4), c.sl_diag(i) + Rat::from_integer(2));
        }
    }

    #[test]
    fn pi_orbit_closure_on_classes() {
        // pi^N fixes the R_0 class; pi^n fixes every class.
        for (rank_n, k) in [(2usize, 2usize), (3, 1), (2, 3)] {
            let r0 = PeriodicClass::r0(rank_n, k);
            let mut c = r0.clone();
            for _ in 0..rank_n {
                c = c.pi_shift().unwrap();
            }
            assert_eq!(c, r0, "pi^N fixes R_0");
        }
        for coords in [[1i64, 0], [2, 0], [0, 0]] {
            for u in enumerate_walks(&sl(&coords), 2) {
                let c = sper(&tab(&u)).unwrap();
                let mut z = c.clone();
                for _ in 0..c.n() {
                    z = z.pi_shift().unwrap();
                }
                assert_eq!(z, c, "pi^n = id on classes");
            }
        }
    }

    #[test]
    fn sl_diag_shifts_by_one_over_n_under_pi() {
        // diag_{pi.C}(i+1) = diag_C(i) + 1/N
        for coords in [[1i64, 0, 0], [2, 1, 0], [0, 0, 0]] {
            for u in enumerate_walks(&sl(&coords), 1) {
                let c = sper(&tab(&u)).unwrap();
                let shifted = c.pi_shift().unwrap();
                for i in 1..=c.n() as i64 {
                    assert_eq!(
                        shifted.sl_diag(i + 1),
                        c.sl_diag(i) + Rat::new(1, c.rank() as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn sl_weight_intertwines_pi() {
        // wt(pi . C) = pi . wt(C) under the SL action
        for (coords, k) in [(vec![1i64, 0], 2), (vec![2, 0], 2), (vec![1, 0, 0], 1)] {
            let rank_n = coords.len();
            for u in enumerate_walks(&sl(&coords), k) {
                let c = sper(&tab(&u)).unwrap();
                let w = WeightExponents::new(Flavor::Sl, c.weight_exponents());
                let lhs = c.pi_shift().unwrap().weight_exponents();
                let rhs = act(Generator::Pi, &w, rank_n, k).exps;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn sper_round_trip_bounded() {
        for coords in [[0i64, 0], [1, 0], [2, 0], [3, 0]] {
            for u in enumerate_walks(&sl(&coords), 2) {
                let t = tab(&u);
                let c = sper(&t).unwrap();
                let (lam, t2) = sper_inverse(&c);
                assert_eq!(lam.gamma(), SlWeight::new(&coords).gamma());
                assert_eq!(t2, t);
            }
        }
    }
}
