//! Repetition quiver `ℤΔ` combinatorics for the module category of `kQ_ξ`.
//!
//! Points are `(i, p)`; `τ⁻¹` is `p ↦ p + 2` and the module window for `ξ` is
//! `0 ≤ p − ξ_i < ξ_{i*} − ξ_i + h`. Objects outside the window are written `Σᵐ N` with
//! `N` a module, which sits in cohomological degree `−m`. One step of `Σ` is
//! `(i, p) ↦ (i*, p + h)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{HeightFunction, RootSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArError {
    #[error("point ({0}, {1}) lies outside the module window")]
    OutsideWindow(u32, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZDeltaPoint {
    pub i: u32,
    pub p: i64,
}

/// `Σᵐ N` with `N` the indecomposable module at `point`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedIndec {
    pub shift: u32,
    pub point: ZDeltaPoint,
    pub dimvec: Vec<u64>,
}

/// The knitted Auslander–Reiten quiver of `kQ_ξ` inside `ℤΔ`.
#[derive(Clone, Debug)]
pub struct ArWindow {
    rank: u32,
    xi: HeightFunction,
    h: i64,
    star: Vec<u32>,
    edges: Vec<(u32, u32)>,
    dims: BTreeMap<ZDeltaPoint, Vec<u64>>,
}

/// `#paths j → i` in `Q_ξ`, indexed `[i][j]`.
fn paths_into(rs: &RootSystem, xi: &HeightFunction) -> Vec<Vec<u64>> {
    let n = rs.rank() as usize;
    let arrows = xi.arrows(&rs.diagram);
    let mut order: Vec<u32> = rs.diagram.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(xi.get(v)));
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        // arrows raise ξ, so sources of paths into i are handled from the top down
        let mut count = vec![0u64; n];
        count[i] = 1;
        for &j in &order {
            let extra: u64 = arrows.iter().filter(|&&(a, _)| a == j).map(|&(_, b)| count[b as usize - 1]).sum();
            count[j as usize - 1] += extra;
        }
        out[i] = count;
    }
    out
}

impl ArWindow {
    pub fn new(rs: &RootSystem, xi: &HeightFunction) -> Self {
        let n = rs.rank();
        let h = rs.coxeter_number();
        let star: Vec<u32> = rs.diagram.vertices().map(|i| rs.star(i)).collect();
        let mut w = ArWindow {
            rank: n,
            xi: xi.clone(),
            h,
            star,
            edges: rs.diagram.edges().to_vec(),
            dims: BTreeMap::new(),
        };
        let proj = paths_into(rs, xi);
        let mut pts: Vec<ZDeltaPoint> = rs
            .diagram
            .vertices()
            .flat_map(|i| (0..).map(move |r| ZDeltaPoint { i, p: xi.get(i) + 2 * r }).take_while(|pt| w_contains(xi, h, &w.star, pt)))
            .collect();
        pts.sort_by_key(|pt| (pt.p, pt.i));
        for pt in pts {
            let d = if pt.p == xi.get(pt.i) {
                proj[pt.i as usize - 1].clone()
            } else {
                let prev = ZDeltaPoint { i: pt.i, p: pt.p - 2 };
                let mut acc: Vec<i64> = vec![0; n as usize];
                for j in rs.diagram.neighbours(pt.i) {
                    if let Some(dj) = w.dims.get(&ZDeltaPoint { i: j, p: pt.p - 1 }) {
                        acc.iter_mut().zip(dj).for_each(|(a, &b)| *a += b as i64);
                    }
                }
                acc.iter_mut().zip(&w.dims[&prev]).for_each(|(a, &b)| *a -= b as i64);
                acc.into_iter().map(|x| u64::try_from(x).expect("knitting stays non-negative")).collect()
            };
            w.dims.insert(pt, d);
        }
        w
    }

    pub fn xi(&self) -> &HeightFunction {
        &self.xi
    }

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    pub fn contains(&self, pt: &ZDeltaPoint) -> bool {
        w_contains(&self.xi, self.h, &self.star, pt)
    }

    pub fn points(&self) -> impl Iterator<Item = &ZDeltaPoint> {
        self.dims.keys()
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim_vector(&self, pt: &ZDeltaPoint) -> Result<&[u64], ArError> {
        self.dims.get(pt).map(Vec::as_slice).ok_or(ArError::OutsideWindow(pt.i, pt.p))
    }

    /// `τ^{−q} P_i = Σᵐ N`.
    pub fn tau_inv_derived(&self, i: u32, q: u32) -> DerivedIndec {
        let mut pt = ZDeltaPoint { i, p: self.xi.get(i) + 2 * q as i64 };
        let mut shift = 0;
        while !self.contains(&pt) {
            pt = ZDeltaPoint { i: self.star[pt.i as usize - 1], p: pt.p - self.h };
            shift += 1;
        }
        DerivedIndec { shift, point: pt, dimvec: self.dims[&pt].clone() }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n");
        for (pt, d) in &self.dims {
            let dv: Vec<String> = d.iter().map(u64::to_string).collect();
            let _ = writeln!(s, "  \"{},{}\" [label=\"({},{}) {}\"];", pt.i, pt.p, pt.i, pt.p, dv.join(""));
        }
        for pt in self.dims.keys() {
            for &(a, b) in &self.edges {
                let j = if a == pt.i { b } else if b == pt.i { a } else { continue };
                let next = ZDeltaPoint { i: j, p: pt.p + 1 };
                if self.dims.contains_key(&next) {
                    let _ = writeln!(s, "  \"{},{}\" -> \"{},{}\";", pt.i, pt.p, next.i, next.p);
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

fn w_contains(xi: &HeightFunction, h: i64, star: &[u32], pt: &ZDeltaPoint) -> bool {
    let two_r = pt.p - xi.get(pt.i);
    two_r >= 0 && two_r % 2 == 0 && two_r < xi.get(star[pt.i as usize - 1]) - xi.get(pt.i) + h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn window(t: &str, xi: Vec<i64>) -> (RootSystem, ArWindow) {
        let rs = RootSystem::of_type(t).unwrap();
        let xi = HeightFunction::new(&rs.diagram, xi).unwrap();
        let w = ArWindow::new(&rs, &xi);
        (rs, w)
    }

    #[test]
    fn a2_window() {
        let (_, w) = window("A2", vec![0, 1]);
        let pts: Vec<_> = w.points().map(|p| (p.i, p.p)).collect();
        assert_eq!(pts, vec![(1, 0), (1, 2), (2, 1)]);
        assert_eq!(w.dim_vector(&ZDeltaPoint { i: 1, p: 0 }).unwrap(), &[1, 0]);
        assert_eq!(w.dim_vector(&ZDeltaPoint { i: 2, p: 1 }).unwrap(), &[1, 1]);
        assert_eq!(w.dim_vector(&ZDeltaPoint { i: 1, p: 2 }).unwrap(), &[0, 1]);
        assert_eq!(w.dim_vector(&ZDeltaPoint { i: 2, p: 3 }), Err(ArError::OutsideWindow(2, 3)));
    }

    #[test]
    fn a1_wraps_every_step() {
        let (_, w) = window("A1", vec![0]);
        assert_eq!(w.len(), 1);
        for q in 0..5 {
            let d = w.tau_inv_derived(1, q);
            assert_eq!(d.shift, q);
            assert_eq!(d.point, ZDeltaPoint { i: 1, p: 0 });
        }
    }

    #[test]
    fn a2_translates() {
        let (_, w) = window("A2", vec![0, 1]);
        assert_eq!(w.tau_inv_derived(2, 0).shift, 0);
        let t1 = w.tau_inv_derived(2, 1);
        assert_eq!((t1.shift, t1.point), (1, ZDeltaPoint { i: 1, p: 0 }));
        let (_, w) = window("A2", vec![1, 0]);
        let t1 = w.tau_inv_derived(2, 1);
        assert_eq!((t1.shift, t1.point), (0, ZDeltaPoint { i: 2, p: 2 }));
        let t2 = w.tau_inv_derived(2, 2);
        assert_eq!((t2.shift, t2.point), (1, ZDeltaPoint { i: 1, p: 1 }));
    }

    #[test]
    fn windows_biject_onto_positive_roots() {
        for t in ["A1", "A2", "A3", "A4", "D4", "D5", "E6"] {
            let rs = RootSystem::of_type(t).unwrap();
            for xi in HeightFunction::all_orientations(&rs.diagram) {
                let w = ArWindow::new(&rs, &xi);
                let mut dims: Vec<Vec<i32>> =
                    w.points().map(|p| w.dim_vector(p).unwrap().iter().map(|&x| x as i32).collect()).collect();
                dims.sort();
                let mut roots = rs.positive_roots().to_vec();
                roots.sort();
                assert_eq!(dims, roots, "{t} {xi:?}");
            }
        }
    }

    #[test]
    fn injectives_wrap_to_projectives() {
        let (rs, w) = window("A3", vec![0, 1, 0]);
        for i in 1..=3 {
            let inj = ZDeltaPoint { i: rs.star(i), p: w.xi().get(i) + w.coxeter_number() - 2 };
            assert!(w.contains(&inj));
            let next = ZDeltaPoint { i: inj.i, p: inj.p + 2 };
            assert!(!w.contains(&next));
        }
        let q = (w.coxeter_number() as u32 + w.xi().get(3) as u32 - w.xi().get(1) as u32) / 2;
        let d = w.tau_inv_derived(1, q);
        assert_eq!((d.shift, d.point), (1, ZDeltaPoint { i: 3, p: 0 }));
    }

    #[test]
    fn dot_lists_points() {
        let (_, w) = window("A2", vec![0, 1]);
        let dot = w.to_dot();
        assert_eq!(dot.matches("label").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
    }
}
