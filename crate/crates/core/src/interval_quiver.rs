//! Ice quivers with potential `Q^{[a,b]}` attached to windows of an index sequence,
//! together with lattice coordinates `(i,p)`, KR labels, residues and moves.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{is_source_sequence, CoxeterError, DynkinDiagram, HeightFunction, MoveKind, RootSystem, WeylElement};
pub use crate::coxeter::ExtendedWord;
use crate::ice_quiver::{IceQuiver, ProductKind, VertexId};
use crate::qp_mutation::{equivalent_along, IceQP, Potential, QpError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error("empty interval [{0}, {1}]")]
    EmptyInterval(i64, i64),
    #[error("the word is not adapted to the given height function")]
    NotAdapted,
    #[error("vertex {0} is not in the interval")]
    OutsideInterval(i64),
    #[error("no isomorphism found for the {0:?} move at {1}")]
    NoIsoFound(MoveKind, i64),
    #[error("position {1} is not legal for a {0:?} move on this interval")]
    IllegalPosition(MoveKind, i64),
    #[error("broken cycle through {0} -> {1}")]
    BrokenCycle(i64, i64),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Qp(#[from] QpError),
}

/// `(Q^{[a,b]}, F^{[a,b]}, W^{[a,b]})`, with vertex `s` stored at index `s − a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalIQP {
    pub word: ExtendedWord,
    pub a: i64,
    pub b: i64,
    pub qp: IceQP,
}

fn arrow_label(s: i64, t: i64) -> String {
    format!("{s}>{t}")
}

pub fn build_interval(d: &DynkinDiagram, w: &ExtendedWord, a: i64, b: i64) -> Result<IntervalIQP, IntervalError> {
    if a > b {
        return Err(IntervalError::EmptyInterval(a, b));
    }
    let idx = |s: i64| (s - a) as usize;
    let mut q = IceQuiver::empty();
    for s in a..=b {
        q.add_vertex(s, w.s_minus(s) < a);
    }
    let mut diagonal = Vec::new();
    for s in a..=b {
        let sm = w.s_minus(s);
        if sm >= a {
            q.add_arrow(arrow_label(s, sm), idx(s), idx(sm), false);
        }
        for t in a..=b {
            if s == t || !d.adjacent(w.letter(s), w.letter(t)) {
                continue;
            }
            let tm = w.s_minus(t);
            let cond2 = sm < tm && tm < s && s < t;
            let cond3 = s < t && sm < a && tm < a;
            if cond2 || cond3 {
                q.add_arrow(arrow_label(s, t), idx(s), idx(t), cond3);
                if cond2 && tm >= a {
                    diagonal.push((s, t));
                }
            }
        }
    }
    let mut pot = Potential::zero();
    for (s, t) in diagonal {
        let floor = w.s_minus(s).max(a);
        let mut cycle = vec![arrow_label(s, t)];
        let mut cur = t;
        while w.s_minus(cur) >= floor {
            let next = w.s_minus(cur);
            cycle.push(arrow_label(cur, next));
            cur = next;
        }
        let closing = arrow_label(cur, s);
        if q.arrow_by_label(&closing).is_none() {
            return Err(IntervalError::BrokenCycle(s, t));
        }
        cycle.push(closing);
        pot.add(cycle, 1);
    }
    let qp = IceQP::new(q, pot)?;
    Ok(IntervalIQP { word: w.clone(), a, b, qp })
}

impl IntervalIQP {
    pub fn index(&self, s: i64) -> Result<usize, IntervalError> {
        if (self.a..=self.b).contains(&s) {
            Ok((s - self.a) as usize)
        } else {
            Err(IntervalError::OutsideInterval(s))
        }
    }

    pub fn position(&self, idx: usize) -> i64 {
        self.a + idx as i64
    }

    pub fn quiver(&self) -> &IceQuiver {
        &self.qp.quiver
    }

    pub fn frozen_positions(&self) -> Vec<i64> {
        (self.a..=self.b).filter(|&s| self.word.s_minus(s) < self.a).collect()
    }

    /// Positions in `[a,b]` on row `i`, left to right.
    pub fn row(&self, i: u32) -> Vec<i64> {
        (self.a..=self.b).filter(|&s| self.word.letter(s) == i).collect()
    }

    pub fn row_sizes(&self, rank: u32) -> Vec<usize> {
        (1..=rank).map(|i| self.row(i).len()).collect()
    }

    /// Minimum row size.
    pub fn regular_width(&self, rank: u32) -> usize {
        self.row_sizes(rank).into_iter().min().unwrap_or(0)
    }

    /// `#{t ∈ [s,b] : i_t = i_s}`.
    pub fn column_from_right(&self, s: i64) -> usize {
        let i = self.word.letter(s);
        (s..=self.b).filter(|&t| self.word.letter(t) == i).count()
    }

    /// `#{t ∈ [a,s] : i_t = i_s}`.
    pub fn column_from_left(&self, s: i64) -> usize {
        let i = self.word.letter(s);
        (self.a..=s).filter(|&t| self.word.letter(t) == i).count()
    }
}

/// Coordinates `(i, p)` in `ℤΔ`; horizontal neighbours differ by 2 and the first
/// occurrence of `i` at a positive position has `p = ξ_i`.
pub fn hl_point(w: &ExtendedWord, xi: &HeightFunction, s: i64) -> (u32, i64) {
    let i = w.letter(s);
    let p = if s >= 1 {
        xi.get(i) + 2 * (1..s).filter(|&t| w.letter(t) == i).count() as i64
    } else {
        xi.get(i) - 2 * (s..=0).filter(|&t| w.letter(t) == i).count() as i64
    };
    (i, p)
}

/// Lattice coordinates of every vertex, checked against the arrows of `Q_HL`: `(i,p) → (j,p+1)`
/// for `i ∼ j` and `(i,p) → (i,p−2)`. Arrows between two frozen vertices are ignored.
pub fn hl_coordinates(
    d: &DynkinDiagram,
    iqp: &IntervalIQP,
    xi: &HeightFunction,
) -> Result<BTreeMap<i64, (u32, i64)>, IntervalError> {
    let w = &iqp.word;
    if w.is_patched() || !is_source_sequence(d, xi, w.base()) {
        return Err(IntervalError::NotAdapted);
    }
    let coords: BTreeMap<i64, (u32, i64)> = (iqp.a..=iqp.b).map(|s| (s, hl_point(w, xi, s))).collect();
    let q = iqp.quiver();
    let hl_arrow = |x: (u32, i64), y: (u32, i64)| {
        (d.adjacent(x.0, y.0) && y.1 == x.1 + 1) || (x.0 == y.0 && y.1 == x.1 - 2)
    };
    for s in iqp.a..=iqp.b {
        for t in iqp.a..=iqp.b {
            let (u, v) = (iqp.index(s)?, iqp.index(t)?);
            if q.is_frozen(u) && q.is_frozen(v) {
                continue;
            }
            let present = q.count(u, v, false) > 0;
            if present != hl_arrow(coords[&s], coords[&t]) || q.count(u, v, false) > 1 {
                return Err(IntervalError::NotAdapted);
            }
        }
    }
    Ok(coords)
}

/// The KR module `W^{(i)}_{r, q^p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KRLabel {
    pub i: u32,
    pub r: u32,
    pub p: i64,
}

/// KR label of the initial-seed module at `s`: it starts at `(i_s, p_s)` and runs along
/// the row to the right end of the interval.
pub fn kr_label(iqp: &IntervalIQP, coords: &BTreeMap<i64, (u32, i64)>, s: i64) -> Result<KRLabel, IntervalError> {
    let &(i, p) = coords.get(&s).ok_or(IntervalError::OutsideInterval(s))?;
    Ok(KRLabel { i, r: iqp.column_from_right(s) as u32, p })
}

/// `𝒟⁻ⁿ`: `(i, r, p) ↦ (i*, r, p − h)` applied `n` times.
pub fn dual_label(rs: &RootSystem, l: KRLabel, n: u32) -> KRLabel {
    let i = if n % 2 == 1 { rs.star(l.i) } else { l.i };
    KRLabel { i, r: l.r, p: l.p - n as i64 * rs.coxeter_number() }
}

#[derive(Clone, Debug)]
pub struct Residue {
    pub a_prime: i64,
    pub word: Vec<u32>,
    pub element: WeylElement,
    pub reduced: bool,
    /// A height function and an adapted reduced expression of the element, when one exists.
    pub adapted: Option<(HeightFunction, Vec<u32>)>,
}

/// `w = s_{i_{a′}} ⋯ s_{i_b}` with `a′ = a + r·l(w₀)` maximal with `a′ ≤ b`.
pub fn residue(rs: &RootSystem, w: &ExtendedWord, a: i64, b: i64) -> Result<Residue, IntervalError> {
    if a > b {
        return Err(IntervalError::EmptyInterval(a, b));
    }
    let l = w.period();
    let a_prime = a + (b - a).div_euclid(l) * l;
    let word = w.window(a_prime, b);
    let element = rs.from_word(&word)?;
    let reduced = rs.length(&element) == word.len();
    let adapted = rs.find_adapted(&element);
    Ok(Residue { a_prime, word, element, reduced, adapted })
}

/// Whether a move at `s` is legal for the interval.
pub fn move_is_legal(d: &DynkinDiagram, w: &ExtendedWord, kind: MoveKind, s: i64, a: i64, b: i64) -> bool {
    let in_range = match kind {
        MoveKind::Commutation => a <= s && s < b,
        MoveKind::Braid => a < s && s < b,
    };
    in_range && w.apply_move(d, kind, s).is_ok()
}

/// Finds the isomorphism relating the interval QPs of `w` and of the moved word:
/// directly for a commutation move, after mutating at `s + 1` for a braid move.
pub fn verify_move(
    d: &DynkinDiagram,
    w: &ExtendedWord,
    kind: MoveKind,
    s: i64,
    a: i64,
    b: i64,
) -> Result<Vec<usize>, IntervalError> {
    if !move_is_legal(d, w, kind, s, a, b) {
        return Err(IntervalError::IllegalPosition(kind, s));
    }
    let w2 = w.apply_move(d, kind, s)?;
    let before = build_interval(d, w, a, b)?;
    let after = build_interval(d, &w2, a, b)?;
    let n = (b - a + 1) as usize;
    let mut map: Vec<usize> = (0..n).collect();
    let (source, x, y) = match kind {
        MoveKind::Commutation => (before.qp.clone(), s, s + 1),
        MoveKind::Braid => (before.qp.mutate(before.index(s + 1)?)?, s - 1, s),
    };
    map.swap((x - a) as usize, (y - a) as usize);
    if equivalent_along(&source, &after.qp, &map) {
        Ok(map)
    } else {
        Err(IntervalError::NoIsoFound(kind, s))
    }
}

/// The linear ice quiver `Q°_ℓ`: vertices `1..=ℓ`, arrows `c+1 → c`, vertex 1 frozen.
pub fn linear_frozen(l: usize) -> IceQuiver {
    let mut q = IceQuiver::empty();
    for c in 1..=l {
        q.add_vertex(c as i64, c == 1);
    }
    for c in 1..l {
        q.add_arrow(format!("c{}", c + 1), c, c - 1, false);
    }
    q
}

/// `Q_ξ` with vertices `1..=rank`.
pub fn orientation_quiver(d: &DynkinDiagram, xi: &HeightFunction) -> IceQuiver {
    let mut q = IceQuiver::empty();
    for i in d.vertices() {
        q.add_vertex(i as i64, false);
    }
    for (a, b) in xi.arrows(d) {
        q.add_arrow(format!("e{a}{b}"), a as usize - 1, b as usize - 1, false);
    }
    q
}

/// For a window whose rows all have `ℓ` vertices, the map from the interval quiver onto
/// `Q_ξ ⊠ Q°_ℓ` sending `s` to `(i_s, column from the left)`, if it is an isomorphism.
pub fn triangle_product_iso(d: &DynkinDiagram, iqp: &IntervalIQP, xi: &HeightFunction) -> Option<(IceQuiver, Vec<usize>)> {
    let sizes = iqp.row_sizes(d.rank());
    let l = sizes[0];
    if sizes.iter().any(|&x| x != l) {
        return None;
    }
    let prod = orientation_quiver(d, xi).product(&linear_frozen(l), ProductKind::Triangle);
    let map: Vec<usize> = (iqp.a..=iqp.b)
        .map(|s| (iqp.word.letter(s) as usize - 1) * l + iqp.column_from_left(s) - 1)
        .collect();
    if iqp.quiver().is_iso_map(&prod, &map) {
        Some((prod, map))
    } else {
        None
    }
}

/// Vertex id of position `s`.
pub fn vertex_id(s: i64) -> VertexId {
    VertexId::Int(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::height_for_word;

    fn setup(t: &str, word: &[u32]) -> (RootSystem, ExtendedWord) {
        let rs = RootSystem::of_type(t).unwrap();
        let w = ExtendedWord::new(&rs, word).unwrap();
        (rs, w)
    }

    #[test]
    fn a3_example_window() {
        let (rs, w) = setup("A3", &[1, 2, 3, 2, 1, 2]);
        let iqp = build_interval(&rs.diagram, &w, -2, 6).unwrap();
        assert_eq!(iqp.quiver().num_vertices(), 9);
        assert_eq!(iqp.frozen_positions(), vec![-2, -1, 1]);
        assert_eq!(iqp.quiver().arrows().len(), 14);
        assert_eq!(iqp.qp.potential.len(), 6);
        let frozen_arrows: Vec<_> = iqp.quiver().arrows().iter().filter(|a| a.frozen).map(|a| a.label.clone()).collect();
        assert_eq!(frozen_arrows, vec!["-2>-1", "-2>1"]);
        assert!(iqp.qp.potential.terms().keys().all(|c| c.len() == 3 || c.len() == 4));
    }

    #[test]
    fn a3_adapted_window() {
        let (rs, w) = setup("A3", &[3, 1, 2, 3, 1, 2]);
        let iqp = build_interval(&rs.diagram, &w, -1, 6).unwrap();
        assert_eq!(iqp.frozen_positions(), vec![-1, 0, 2]);
        assert_eq!(iqp.regular_width(3), 2);
        assert!(iqp.qp.potential.terms().keys().all(|c| c.len() == 3));
    }

    #[test]
    fn a1_is_linear() {
        let (rs, w) = setup("A1", &[1]);
        let iqp = build_interval(&rs.diagram, &w, 3, 7).unwrap();
        assert_eq!(iqp.frozen_positions(), vec![3]);
        assert!(iqp.quiver().iso(&linear_frozen(5)).is_some());
        assert!(iqp.qp.potential.is_empty());
        assert_eq!(build_interval(&rs.diagram, &w, 2, 1), Err(IntervalError::EmptyInterval(2, 1)));
    }

    #[test]
    fn hl_coordinates_a1_and_a2() {
        let (rs, w) = setup("A1", &[1]);
        let iqp = build_interval(&rs.diagram, &w, -3, 0).unwrap();
        let xi = HeightFunction(vec![0]);
        let c = hl_coordinates(&rs.diagram, &iqp, &xi).unwrap();
        for s in -3..=0 {
            assert_eq!(c[&s], (1, -2 * (1 - s)));
        }
        let (rs, w) = setup("A2", &[1, 2, 1]);
        let xi = HeightFunction(vec![0, 1]);
        let iqp = build_interval(&rs.diagram, &w, -5, 0).unwrap();
        let c = hl_coordinates(&rs.diagram, &iqp, &xi).unwrap();
        assert_eq!(c[&0], (2, -1));
        assert_eq!(c[&-1], (1, -2));
        assert_eq!(c[&-2], (2, -3));
        let wrong = HeightFunction(vec![1, 0]);
        assert_eq!(hl_coordinates(&rs.diagram, &iqp, &wrong), Err(IntervalError::NotAdapted));
    }

    #[test]
    fn kr_and_dual_labels() {
        let (rs, w) = setup("A2", &[1, 2, 1]);
        let xi = HeightFunction(vec![0, 1]);
        let iqp = build_interval(&rs.diagram, &w, -5, 0).unwrap();
        let c = hl_coordinates(&rs.diagram, &iqp, &xi).unwrap();
        let l = kr_label(&iqp, &c, 0).unwrap();
        assert_eq!(l, KRLabel { i: 2, r: 1, p: -1 });
        assert_eq!(xi.get(2) - l.p, 2);
        let far = kr_label(&iqp, &c, -5).unwrap();
        assert_eq!(far.p + 2 * (far.r as i64 - 1), xi.get(far.i) - 2);
        assert_eq!(dual_label(&rs, l, 0), l);
        assert_eq!(dual_label(&rs, l, 1), KRLabel { i: 1, r: 1, p: -4 });
        assert_eq!(dual_label(&rs, l, 2), KRLabel { i: 2, r: 1, p: -7 });
    }

    #[test]
    fn residues() {
        let (rs, w) = setup("A2", &[1, 2, 1]);
        let r = residue(&rs, &w, 1, 4).unwrap();
        assert_eq!((r.a_prime, r.word.clone()), (4, vec![2]));
        let r = residue(&rs, &w, -2, 3).unwrap();
        assert!(rs.is_longest(&r.element));
        let r = residue(&rs, &w, 1, 2).unwrap();
        assert_eq!(r.word, vec![1, 2]);
        assert!(r.reduced && r.adapted.is_some());
    }

    #[test]
    fn triangle_product_for_regular_window() {
        let (rs, w) = setup("A3", &[3, 1, 2, 3, 1, 2]);
        let xi = height_for_word(&rs.diagram, w.base()).unwrap();
        let iqp = build_interval(&rs.diagram, &w, -5, 6).unwrap();
        assert!(triangle_product_iso(&rs.diagram, &iqp, &xi).is_some());
        hl_coordinates(&rs.diagram, &iqp, &xi).unwrap();
    }

    #[test]
    fn moves_on_example_words() {
        let (rs, w) = setup("A3", &[1, 2, 3, 2, 1, 2]);
        let d = &rs.diagram;
        let c = verify_move(d, &w, MoveKind::Braid, 5, -2, 6).unwrap();
        assert_eq!((c[6], c[7]), (7, 6));
        assert!(matches!(verify_move(d, &w, MoveKind::Commutation, 2, -2, 6), Err(IntervalError::IllegalPosition(..))));
    }
}
