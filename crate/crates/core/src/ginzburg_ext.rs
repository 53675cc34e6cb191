//! Graded Ext dimensions between vertex projectives of relative Ginzburg algebras in the
//! adapted regular case, and the invariants built from them.
//!
//! Degrees follow the module header of [`crate::dynkin_ar`]: the contribution of
//! `τ^{−q}P = Σᵐ N` lands in degree `−m`, so every table lives in degrees `≤ 0`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compatible_pair::{build_pair, IntMatrix, PairError, VertexOrder};
use crate::coxeter::{height_for_word, HeightFunction, RootSystem};
use crate::dynkin_ar::ArWindow;
use crate::green_seq::{duality_sequence, GreenError};
use crate::interval_quiver::{build_interval, ExtendedWord, IntervalError, IntervalIQP};
use crate::seed_engine::{LambdaSeed, SeedError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    #[error("the word is not adapted")]
    NotAdapted,
    #[error("vertex {0} lies outside the model")]
    VertexOutsideModel(i64),
    #[error("window [{0}, {1}] is not a union of full periods of length 2·l(w₀)")]
    NotRegular(i64, i64),
    #[error("matrix mismatch at ({row}, {col}): expected {expected}, found {found}")]
    MatrixMismatch { row: usize, col: usize, expected: i64, found: i64 },
    #[error("series tail does not vanish beyond N = {0}")]
    TailNotVanished(u32),
    #[error("no window with {0} vertices on every row ends at {1}")]
    WindowTooSmall(usize, i64),
    #[error("𝔡 mismatch for ({v}, {w}, n = {n}): homological {route_a}, tropical {route_b}")]
    Mismatch { v: i64, w: i64, n: u32, route_a: u64, route_b: u64 },
    #[error("tropical table still moving at r = {0}")]
    Unstable(usize),
    #[error("Euler matrix is not unimodular")]
    NotUnimodular,
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Green(#[from] GreenError),
}

/// `dim Ext^n(e_sΓ, e_tΓ)` keyed by `n`, zero entries omitted.
pub type ExtTable = BTreeMap<i64, u64>;

/// Row and column data of a window whose rows all have `ℓ` vertices.
#[derive(Clone, Debug)]
pub struct RegularModel {
    pub rs: RootSystem,
    pub word: ExtendedWord,
    pub a: i64,
    pub b: i64,
    pub ell: usize,
    /// Height function to which `i_a … i_{a+l(w₀)−1}` is adapted, equivalently the
    /// letters right after `b`.
    pub xi: HeightFunction,
    ar: ArWindow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelVertex {
    pub row: u32,
    pub from_left: usize,
    pub from_right: usize,
}

impl RegularModel {
    /// The model on `[a,b]`, which must have length divisible by `2·l(w₀)`.
    pub fn new(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<Self, ExtError> {
        let period = w.period();
        if a > b || (b - a + 1) % (2 * period) != 0 {
            return Err(ExtError::NotRegular(a, b));
        }
        if w.is_patched() {
            return Err(ExtError::NotAdapted);
        }
        let xi = height_for_word(&rs.diagram, &w.window(a, a + period - 1)).ok_or(ExtError::NotAdapted)?;
        Ok(Self::with_height(rs, w, a, b, xi))
    }

    /// Same model with the module window of `kQ_ξ` chosen by hand.
    pub fn with_height(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64, xi: HeightFunction) -> Self {
        let period = w.period();
        let ell = ((b - a + 1) / (2 * period)) as usize * rs.coxeter_number() as usize;
        let ar = ArWindow::new(rs, &xi);
        RegularModel { rs: rs.clone(), word: w.clone(), a, b, ell, xi, ar }
    }

    pub fn contains(&self, s: i64) -> bool {
        (self.a..=self.b).contains(&s)
    }

    pub fn vertex(&self, s: i64) -> Result<ModelVertex, ExtError> {
        if !self.contains(s) {
            return Err(ExtError::VertexOutsideModel(s));
        }
        let row = self.word.letter(s);
        let from_right = (s..=self.b).filter(|&t| self.word.letter(t) == row).count();
        Ok(ModelVertex { row, from_left: self.ell + 1 - from_right, from_right })
    }

    /// `Σ_q [q+1 ≤ d_s ≤ d_t+q] · dim(τ^{−q}P_{i_t})_{i_s}` in degree `−m_q`.
    pub fn ext_dims(&self, s: i64, t: i64) -> Result<ExtTable, ExtError> {
        let vs = self.vertex(s)?;
        let vt = self.vertex(t)?;
        let mut table = ExtTable::new();
        for q in 0..self.ell {
            let c = vs.from_left;
            let lo = (self.ell + 1).saturating_sub(vt.from_right + q).max(1);
            if c < lo || c + q > self.ell {
                continue;
            }
            let x = self.ar.tau_inv_derived(vt.row, q as u32);
            let dim = x.dimvec[vs.row as usize - 1];
            if dim > 0 {
                *table.entry(-(x.shift as i64)).or_insert(0) += dim;
            }
        }
        Ok(table)
    }

    /// `Σ_{p≥0} (−1)^p (dim Ext^{−p}(s,t) − dim Ext^{−p}(t,s))`.
    pub fn bracket(&self, s: i64, t: i64) -> Result<i64, ExtError> {
        let st = self.ext_dims(s, t)?;
        let ts = self.ext_dims(t, s)?;
        Ok(alternating(&st) - alternating(&ts))
    }

    /// `χ(s,t) = Σ_n (−1)ⁿ dim Extⁿ(e_sΓ, e_tΓ)`.
    pub fn euler_char(&self, s: i64, t: i64) -> Result<i64, ExtError> {
        Ok(alternating(&self.ext_dims(s, t)?))
    }

    /// `Λ(V_s, V_t)` as the alternating series of `𝔡(V, 𝒟⁻ⁿW) − 𝔡(W, 𝒟⁻ⁿV)`, with the
    /// terms supplied by `d` and the tail beyond `n_max` required to vanish up to `ℓ + 1`.
    pub fn lambda_series(
        &self,
        s: i64,
        t: i64,
        n_max: u32,
        d: impl Fn(i64, i64, u32) -> Result<u64, ExtError>,
    ) -> Result<i64, ExtError> {
        let mut total = 0;
        for n in 1..=n_max {
            let term = d(s, t, n)? as i64 - d(t, s, n)? as i64;
            total += if n % 2 == 1 { term } else { -term };
        }
        for n in n_max + 1..=self.ell as u32 + 1 {
            if d(s, t, n)? != 0 || d(t, s, n)? != 0 {
                return Err(ExtError::TailNotVanished(n_max));
            }
        }
        Ok(total)
    }

    /// `𝔡(V_s, 𝒟⁻ⁿ V_t) = dim Ext^{1−n}(e_sΓ, e_tΓ)` for `n ≥ 1`.
    pub fn d_route_a(&self, s: i64, t: i64, n: u32) -> Result<u64, ExtError> {
        Ok(self.ext_dims(s, t)?.get(&(1 - n as i64)).copied().unwrap_or(0))
    }
}

fn alternating(t: &ExtTable) -> i64 {
    t.iter().map(|(&n, &d)| if n.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}

/// The model on `[a′,b]` for the smallest `a′ ≤ a` with `2·l(w₀) | b − a′ + 1`.
pub fn regular_embed(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<(RegularModel, i64), ExtError> {
    if a > b {
        return Err(ExtError::NotRegular(a, b));
    }
    let block = 2 * w.period();
    let blocks = (b - a + 1 + block - 1) / block;
    let a_prime = b + 1 - blocks * block;
    Ok((RegularModel::new(rs, w, a_prime, b)?, a_prime))
}

/// The χ-matrix of `[a,b]` and `B̂⁻ᵀ`, both in the canonical vertex order.
#[derive(Clone, Debug)]
pub struct EulerComparison {
    pub order: Vec<i64>,
    pub chi: IntMatrix,
    pub bhat_inv_t: IntMatrix,
}

/// The bracket matrix of `[a,b]` and `|det B̂|(B̂⁻ᵀ − B̂⁻¹)` from the compatible pair.
#[derive(Clone, Debug)]
pub struct LambdaComparison {
    pub order: Vec<i64>,
    pub homological: IntMatrix,
    pub formula: IntMatrix,
}

fn positions(iqp: &IntervalIQP, order: &VertexOrder) -> Vec<i64> {
    order.order.iter().map(|&v| iqp.position(v)).collect()
}

fn first_difference(a: &IntMatrix, b: &IntMatrix) -> Result<(), ExtError> {
    for row in 0..a.rows() {
        for col in 0..a.cols() {
            if a.get(row, col) != b.get(row, col) {
                return Err(ExtError::MatrixMismatch { row, col, expected: b.get(row, col), found: a.get(row, col) });
            }
        }
    }
    Ok(())
}

pub fn euler_comparison(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<EulerComparison, ExtError> {
    let (model, _) = regular_embed(rs, w, a, b)?;
    let iqp = build_interval(&rs.diagram, w, a, b)?;
    let (_, bhat, order) = build_pair(iqp.quiver())?;
    let pos = positions(&iqp, &order);
    let m = pos.len();
    let mut chi = IntMatrix::zeros(m, m);
    for (i, &s) in pos.iter().enumerate() {
        for (j, &t) in pos.iter().enumerate() {
            chi.set(i, j, model.euler_char(s, t)?);
        }
    }
    let inv = bhat.inverse()?.to_integer().ok_or(ExtError::NotUnimodular)?;
    Ok(EulerComparison { order: pos, chi, bhat_inv_t: inv.transpose() })
}

/// Checks `χ = B̂⁻ᵀ` entry by entry.
pub fn euler_matrix_check(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<(), ExtError> {
    let c = euler_comparison(rs, w, a, b)?;
    first_difference(&c.chi, &c.bhat_inv_t)
}

pub fn lambda_comparison(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<LambdaComparison, ExtError> {
    let (model, _) = regular_embed(rs, w, a, b)?;
    let iqp = build_interval(&rs.diagram, w, a, b)?;
    let (pair, _, order) = build_pair(iqp.quiver())?;
    let pos = positions(&iqp, &order);
    let m = pos.len();
    let mut br = IntMatrix::zeros(m, m);
    for (i, &s) in pos.iter().enumerate() {
        for (j, &t) in pos.iter().enumerate() {
            br.set(i, j, model.bracket(s, t)?);
        }
    }
    Ok(LambdaComparison { order: pos, homological: br, formula: pair.lambda })
}

pub fn lambda_matrix_check(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<(), ExtError> {
    let c = lambda_comparison(rs, w, a, b)?;
    first_difference(&c.homological, &c.formula)
}

/// Left end of the window ending at `b` whose rows all have `k` vertices.
pub fn uniform_window_start(w: &ExtendedWord, rank: u32, b: i64, k: usize) -> Result<i64, ExtError> {
    let mut counts = vec![0usize; rank as usize];
    let mut s = b;
    loop {
        let i = w.letter(s) as usize - 1;
        counts[i] += 1;
        if counts[i] > k {
            return Err(ExtError::WindowTooSmall(k, b));
        }
        if counts.iter().all(|&c| c == k) {
            return Ok(s);
        }
        s -= 1;
    }
}

/// Tropical side of `𝔡(V, 𝒟⁻ⁿW)` for all `V, W ∈ [a,b]` and `1 ≤ n ≤ n_max`.
///
/// The seed of the window ending at `b` with `r + 1` vertices per row is mutated along
/// `v^{≤r}_{𝒟⁻ⁿ}`; the variable at the row of `W` (starred for odd `n`) with the same
/// column from the right is compared with the initial variable of `V` through the
/// F-invariant, halved.
pub fn d_route_b(
    rs: &RootSystem,
    w: &ExtendedWord,
    a: i64,
    b: i64,
    n_max: u32,
    r: usize,
) -> Result<BTreeMap<(i64, i64, u32), u64>, ExtError> {
    let rank = rs.rank();
    let big_a = uniform_window_start(w, rank, b, r + 1)?;
    if big_a >= a {
        return Err(ExtError::WindowTooSmall(r + 1, b));
    }
    let big = build_interval(&rs.diagram, w, big_a, b)?;
    let (root, order) = LambdaSeed::from_quiver(big.quiver())?;
    let seq = duality_sequence(&big, rank, n_max, r)?;
    let block = seq.len() / n_max as usize;
    let pos = |s: i64| -> Result<usize, ExtError> {
        let idx = big.index(s)?;
        Ok(order.position(idx).expect("every vertex has a position"))
    };
    let mut out = BTreeMap::new();
    let mut seed = root.clone();
    for n in 1..=n_max {
        for &s in &seq[(n as usize - 1) * block..n as usize * block] {
            seed = seed.mutate(pos(s)?)?;
        }
        for t in a..=b {
            let row = w.letter(t);
            let target_row = if n % 2 == 1 { w.star(row) } else { row };
            let d = big.column_from_right(t);
            let target = *big
                .row(target_row)
                .iter()
                .rev()
                .nth(d - 1)
                .ok_or(ExtError::WindowTooSmall(r + 1, b))?;
            let dec = root.decompose(&seed.cluster[pos(target)?])?;
            for s in a..=b {
                let v = pos(s)?;
                let max_deg = dec.f.terms().keys().map(|e| e[v] as i64).max().unwrap_or(0);
                let f = root.pair.d * max_deg;
                out.insert((s, t, n), (f / 2) as u64);
            }
        }
    }
    Ok(out)
}

/// Route B table at the first truncation `r ≥ ℓ + 1` that agrees with the one at `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableTable {
    pub r: usize,
    pub table: BTreeMap<(i64, i64, u32), u64>,
}

/// Raises `r` until two consecutive truncations give the same tropical table.
pub fn stable_route_b(
    rs: &RootSystem,
    w: &ExtendedWord,
    a: i64,
    b: i64,
    n_max: u32,
    r_max: usize,
) -> Result<StableTable, ExtError> {
    let (model, _) = regular_embed(rs, w, a, b)?;
    let mut r = model.ell + 1;
    let mut prev = d_route_b(rs, w, a, b, n_max, r)?;
    while r < r_max {
        let next = d_route_b(rs, w, a, b, n_max, r + 1)?;
        if next == prev {
            return Ok(StableTable { r, table: prev });
        }
        prev = next;
        r += 1;
    }
    Err(ExtError::Unstable(r_max))
}

/// Both routes for every pair of `[a,b]` and `1 ≤ n ≤ n_max`; the tropical route is taken
/// at its first stable truncation below `r_max`.
pub fn d_invariant_dual(
    rs: &RootSystem,
    w: &ExtendedWord,
    a: i64,
    b: i64,
    n_max: u32,
    r_max: usize,
) -> Result<StableTable, ExtError> {
    let (model, _) = regular_embed(rs, w, a, b)?;
    let stable = stable_route_b(rs, w, a, b, n_max, r_max)?;
    for (&(v, wv, n), &route_b) in &stable.table {
        let route_a = model.d_route_a(v, wv, n)?;
        if route_a != route_b {
            return Err(ExtError::Mismatch { v, w: wv, n, route_a, route_b });
        }
    }
    Ok(stable)
}
