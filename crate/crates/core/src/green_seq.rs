//! Green sequences on framed quivers, box products of sequences and the truncated
//! duality sequences on interval quivers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ice_quiver::{IceQuiver, QuiverError, VertexId};
use crate::interval_quiver::IntervalIQP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreenError {
    #[error("vertex at step {0} is not green")]
    NotGreenAtStep(usize),
    #[error("mutation at step {0} is illegal: {1}")]
    MutationIllegal(usize, QuiverError),
    #[error("the quiver already has frozen vertices")]
    AlreadyFrozen,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("window too small: row {0} has {1} vertices, {2} needed")]
    WindowTooSmall(u32, usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Red,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenState {
    pub base: IceQuiver,
    /// Framed quiver after the mutations so far; base vertices keep their indices.
    pub current: IceQuiver,
}

impl GreenState {
    pub fn new(base: &IceQuiver) -> Result<Self, GreenError> {
        if base.frozen().next().is_some() {
            return Err(GreenError::AlreadyFrozen);
        }
        Ok(GreenState { base: base.clone(), current: base.frame(false) })
    }

    /// Green iff no arrow comes from a frozen vertex.
    pub fn color(&self, v: usize) -> Color {
        let q = &self.current;
        if q.arrows().iter().any(|a| a.dst == v && q.is_frozen(a.src)) {
            Color::Red
        } else {
            Color::Green
        }
    }

    pub fn colors(&self) -> Vec<Color> {
        (0..self.base.num_vertices()).map(|v| self.color(v)).collect()
    }

    pub fn all_red(&self) -> bool {
        self.colors().iter().all(|&c| c == Color::Red)
    }

    fn step(&mut self, k: usize, v: usize) -> Result<(), GreenError> {
        if self.color(v) != Color::Green {
            return Err(GreenError::NotGreenAtStep(k));
        }
        self.mutate(v).map_err(|e| GreenError::MutationIllegal(k, e))
    }

    /// Mutation at `v` whatever its colour.
    pub fn mutate(&mut self, v: usize) -> Result<(), QuiverError> {
        let q = self.current.mutate_fz(v)?;
        self.current = without_frozen_arrows(&q);
        Ok(())
    }
}

fn without_frozen_arrows(q: &IceQuiver) -> IceQuiver {
    let mut out = IceQuiver::empty();
    for v in q.vertices() {
        out.add_vertex(v.id.clone(), v.frozen);
    }
    for a in q.arrows() {
        if !(q.is_frozen(a.src) && q.is_frozen(a.dst)) {
            out.add_arrow(a.label.clone(), a.src, a.dst, false);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenRun {
    pub sequence: Vec<VertexId>,
    /// Colours of the base vertices before each step and after the last one.
    pub colors: Vec<Vec<Color>>,
    pub last: GreenState,
    /// `σ` on base vertex indices, present iff the run is maximal.
    pub sigma: Option<Vec<usize>>,
}

impl GreenRun {
    pub fn is_maximal(&self) -> bool {
        self.sigma.is_some()
    }

    pub fn sigma_ids(&self) -> Option<Vec<(VertexId, VertexId)>> {
        let b = &self.last.base;
        self.sigma
            .as_ref()
            .map(|s| s.iter().enumerate().map(|(i, &j)| (b.id(i).clone(), b.id(j).clone())).collect())
    }
}

/// Mutates the framed quiver along `seq`, requiring each vertex to be green.
pub fn run_green(q: &IceQuiver, seq: &[VertexId]) -> Result<GreenRun, GreenError> {
    let mut state = GreenState::new(q)?;
    let mut colors = Vec::with_capacity(seq.len() + 1);
    for (k, id) in seq.iter().enumerate() {
        let v = q.index_of(id).ok_or_else(|| GreenError::UnknownVertex(id.clone()))?;
        colors.push(state.colors());
        state.step(k + 1, v)?;
    }
    colors.push(state.colors());
    let sigma = if state.all_red() { sigma_of(&state) } else { None };
    Ok(GreenRun { sequence: seq.to_vec(), colors, last: state, sigma })
}

/// The permutation read off from the isomorphism onto the coframed quiver that fixes
/// every frozen vertex.
fn sigma_of(state: &GreenState) -> Option<Vec<usize>> {
    let n = state.base.num_vertices();
    let coframed = state.base.frame(true);
    let fixed: Vec<(usize, usize)> = (n..2 * n).map(|v| (v, v)).collect();
    let iso = state.current.iso_fixing(&coframed, &fixed)?;
    Some(iso[..n].to_vec())
}

/// `v ⊠ w = ((v₁,w₁),…,(v₁,w_s),(v₂,w₁),…)`.
pub fn boxtimes_sequence(v: &[VertexId], w: &[VertexId]) -> Vec<VertexId> {
    v.iter()
        .flat_map(|x| w.iter().map(move |y| VertexId::pair(x.clone(), y.clone())))
        .collect()
}

/// Truncated duality sequence `v^{≤r}_{𝒟⁻ⁿ}` as interval positions.
///
/// Each block reads the rows in the order `i_b, i_{b−1}, …, i_{b−l(w₀)+1}` (with `*`
/// applied to every row on odd blocks) and each row from right to left over its first
/// `r` vertices.
pub fn duality_sequence(iqp: &IntervalIQP, rank: u32, n: u32, r: usize) -> Result<Vec<i64>, GreenError> {
    let w = &iqp.word;
    for i in 1..=rank {
        let len = iqp.row(i).len();
        if len < r + 1 {
            return Err(GreenError::WindowTooSmall(i, len, r + 1));
        }
    }
    let rows: Vec<u32> = (0..w.period()).map(|k| w.letter(iqp.b - k)).collect();
    let mut out = Vec::new();
    for block in 0..n {
        for &j in &rows {
            let row = if block % 2 == 1 { w.star(j) } else { j };
            let positions = iqp.row(row);
            out.extend(positions.iter().rev().take(r));
        }
    }
    Ok(out)
}
