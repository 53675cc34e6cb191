//! Potentials on ice quivers and mutation of ice quivers with potential.
//!
//! Paths and cycles are written in traversal order: `[a, b]` means `a` then `b`,
//! so `dst(a) = src(b)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ice_quiver::{IceQuiver, QuiverError};

pub type Path = Vec<String>;

/// Linear combination of paths.
pub type PathSum = BTreeMap<Path, i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QpError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("term {0:?} is not a cycle of the quiver")]
    NotACycle(Path),
    #[error("term {0:?} lies in the frozen subquiver")]
    RedundantPotentialTerm(Path),
    #[error("2-cycle term {0:?} has coefficient {1}")]
    NonUnitTwoCycleCoefficient(Path, i64),
    #[error("substitution did not stabilize below length {0}")]
    SubstitutionNotStabilized(usize),
}

/// A cycle stored in its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Path);

impl CyclicWord {
    pub fn new(arrows: Path) -> Self {
        assert!(!arrows.is_empty(), "empty cycle");
        let n = arrows.len();
        let best = (0..n)
            .min_by(|&i, &j| {
                let a = arrows[i..].iter().chain(&arrows[..i]);
                let b = arrows[j..].iter().chain(&arrows[..j]);
                a.cmp(b)
            })
            .unwrap_or(0);
        let mut w = arrows;
        w.rotate_left(best);
        CyclicWord(w)
    }

    pub fn arrows(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.0.iter().any(|a| a == label)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Potential {
    terms: BTreeMap<CyclicWord, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: i64,
    pub cycle: Path,
}

impl Potential {
    pub fn zero() -> Self {
        Potential::default()
    }

    pub fn add(&mut self, cycle: Path, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let w = CyclicWord::new(cycle);
        let c = self.terms.entry(w.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<CyclicWord, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cycle: Path) -> i64 {
        self.terms.get(&CyclicWord::new(cycle)).copied().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(CyclicWord::len).max().unwrap_or(0)
    }

    pub fn mentions(&self, label: &str) -> bool {
        self.terms.keys().any(|w| w.contains(label))
    }

    /// Checks every term is a closed path of `q` of admissible length.
    pub fn check(&self, q: &IceQuiver) -> Result<(), QpError> {
        for w in self.terms.keys() {
            let arrows: Option<Vec<_>> = w.0.iter().map(|l| q.arrow_by_label(l)).collect();
            let arrows = arrows.ok_or_else(|| QpError::NotACycle(w.0.clone()))?;
            let closed = (0..arrows.len()).all(|k| arrows[k].dst == arrows[(k + 1) % arrows.len()].src);
            let has_loop = arrows.iter().any(|a| a.src == a.dst);
            if !closed || w.len() < 2 || (has_loop && w.len() < 3) {
                return Err(QpError::NotACycle(w.0.clone()));
            }
        }
        Ok(())
    }

    pub fn to_doc(&self) -> Vec<TermDoc> {
        self.terms
            .iter()
            .map(|(w, &c)| TermDoc { coeff: c, cycle: w.0.clone() })
            .collect()
    }

    pub fn from_doc(doc: &[TermDoc]) -> Self {
        let mut p = Potential::zero();
        for t in doc {
            p.add(t.cycle.clone(), t.coeff);
        }
        p
    }

    /// Applies an arrow substitution `label -> linear combination of paths`.
    pub fn substitute(&self, subs: &HashMap<String, PathSum>) -> Potential {
        let mut out = Potential::zero();
        for (w, &c) in &self.terms {
            let mut partial: Vec<(Path, i64)> = vec![(Vec::new(), c)];
            for l in &w.0 {
                let next: Vec<(Path, i64)> = match subs.get(l) {
                    Some(sum) => partial
                        .iter()
                        .flat_map(|(p, k)| {
                            sum.iter().map(move |(q, m)| {
                                let mut r = p.clone();
                                r.extend(q.iter().cloned());
                                (r, k * m)
                            })
                        })
                        .collect(),
                    None => partial
                        .into_iter()
                        .map(|(mut p, k)| {
                            p.push(l.clone());
                            (p, k)
                        })
                        .collect(),
                };
                partial = next;
            }
            for (p, k) in partial {
                out.add(p, k);
            }
        }
        out
    }

    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Potential {
        let mut out = Potential::zero();
        for (w, &c) in &self.terms {
            out.add(w.0.iter().map(|l| f(l)).collect(), c);
        }
        out
    }
}

/// `∂_alpha` of a single cycle, summed over the occurrences of `alpha`.
pub fn derivative_of_cycle(cycle: &[String], alpha: &str) -> PathSum {
    let mut out = PathSum::new();
    let n = cycle.len();
    for i in (0..n).filter(|&i| cycle[i] == alpha) {
        let rest: Path = (1..n).map(|k| cycle[(i + k) % n].clone()).collect();
        *out.entry(rest).or_insert(0) += 1;
    }
    out
}

fn derivative(w: &Potential, alpha: &str) -> PathSum {
    let mut out = PathSum::new();
    for (c, &k) in &w.terms {
        for (p, m) in derivative_of_cycle(&c.0, alpha) {
            *out.entry(p).or_insert(0) += k * m;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IceQP {
    pub quiver: IceQuiver,
    pub potential: Potential,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Maximal term length during substitution; `None` means three times the longest input cycle.
    pub cap: Option<usize>,
}

impl IceQP {
    pub fn new(quiver: IceQuiver, potential: Potential) -> Result<Self, QpError> {
        potential.check(&quiver)?;
        Ok(IceQP { quiver, potential })
    }

    pub fn cyclic_derivative(&self, alpha: &str) -> Result<PathSum, QpError> {
        if self.quiver.arrow_by_label(alpha).is_none() {
            return Err(QpError::UnknownArrow(alpha.to_string()));
        }
        Ok(derivative(&self.potential, alpha))
    }

    fn check_irredundant(&self) -> Result<(), QpError> {
        for w in self.potential.terms.keys() {
            let all_frozen = w
                .0
                .iter()
                .all(|l| self.quiver.arrow_by_label(l).is_some_and(|a| a.frozen));
            if all_frozen {
                return Err(QpError::RedundantPotentialTerm(w.0.clone()));
            }
        }
        Ok(())
    }

    /// Premutation at `v`: composite arrows, reversed arrows and the substituted potential
    /// plus the new triangles.
    pub fn premutate(&self, v: usize) -> Result<IceQP, QpError> {
        self.check_irredundant()?;
        let pre = self.quiver.premutation(v)?;
        let into_v: BTreeSet<&str> = self
            .quiver
            .arrows()
            .iter()
            .filter(|a| a.dst == v)
            .map(|a| a.label.as_str())
            .collect();
        let mut w = Potential::zero();
        for (c, &k) in &self.potential.terms {
            let mut word = c.0.clone();
            // rotate so that the word does not start in the middle of a pass through v
            if let Some(start) = (0..word.len()).find(|&i| {
                let prev = &word[(i + word.len() - 1) % word.len()];
                !into_v.contains(prev.as_str())
            }) {
                word.rotate_left(start);
            }
            let mut out = Vec::with_capacity(word.len());
            let mut i = 0;
            while i < word.len() {
                if into_v.contains(word[i].as_str()) && i + 1 < word.len() {
                    let key = (word[i].clone(), word[i + 1].clone());
                    out.push(pre.composite[&key].clone());
                    i += 2;
                } else {
                    out.push(word[i].clone());
                    i += 1;
                }
            }
            w.add(out, k);
        }
        for ((alpha, beta), ba) in &pre.composite {
            w.add(vec![ba.clone(), pre.reversed[beta].clone(), pre.reversed[alpha].clone()], 1);
        }
        Ok(IceQP { quiver: pre.quiver, potential: w })
    }

    /// Removes reducible 2-cycle terms until none is left.
    pub fn reduce(&self, opts: ReduceOptions) -> Result<IceQP, QpError> {
        let cap = opts.cap.unwrap_or(3 * self.potential.max_len().max(1));
        let mut q = self.quiver.clone();
        let mut w = self.potential.clone();
        loop {
            let candidate = w.terms.iter().find_map(|(t, &c)| {
                if t.len() != 2 {
                    return None;
                }
                let x = q.arrow_by_label(&t.0[0])?;
                let y = q.arrow_by_label(&t.0[1])?;
                if x.frozen && y.frozen {
                    None
                } else {
                    Some((t.0.clone(), c, x.frozen, y.frozen))
                }
            });
            let Some((pair, c, fx, fy)) = candidate else {
                break;
            };
            if c.abs() != 1 {
                return Err(QpError::NonUnitTwoCycleCoefficient(pair, c));
            }
            let (x, y) = (pair[0].clone(), pair[1].clone());
            if !fx && !fy {
                w = eliminate_unfrozen(&w, &x, &y, c, cap)?;
                q.remove_arrow(&x);
                q.remove_arrow(&y);
            } else {
                let (keep, drop) = if fx { (y, x) } else { (x, y) };
                w = eliminate_half_frozen(&w, &keep, &drop, c, cap)?;
                q.remove_arrow(&drop);
                q.freeze_arrow(&keep);
            }
        }
        Ok(IceQP { quiver: q, potential: w })
    }

    pub fn mutate(&self, v: usize) -> Result<IceQP, QpError> {
        self.premutate(v)?.reduce(ReduceOptions::default())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "quiver": self.quiver.to_doc(),
            "potential": self.potential.to_doc(),
        })
    }
}

fn without(w: &Potential, cycle: &[String]) -> Potential {
    let mut rest = w.clone();
    rest.terms.remove(&CyclicWord::new(cycle.to_vec()));
    rest
}

fn check_cap(w: &Potential, cap: usize) -> Result<(), QpError> {
    if w.max_len() > cap {
        Err(QpError::SubstitutionNotStabilized(cap))
    } else {
        Ok(())
    }
}

fn shifted(label: &str, sum: &PathSum, scale: i64) -> PathSum {
    let mut s = PathSum::new();
    s.insert(vec![label.to_string()], 1);
    for (p, &k) in sum {
        *s.entry(p.clone()).or_insert(0) += scale * k;
    }
    s.retain(|_, k| *k != 0);
    s
}

/// Term `c·xy` with both arrows unfrozen: substitute `x -> x - c∂_yW'`, `y -> y - c∂_xW'`
/// until neither arrow occurs outside the 2-cycle, then drop it.
fn eliminate_unfrozen(w: &Potential, x: &str, y: &str, c: i64, cap: usize) -> Result<Potential, QpError> {
    let cycle = vec![x.to_string(), y.to_string()];
    let mut cur = w.clone();
    for _ in 0..=cap {
        let rest = without(&cur, &cycle);
        if !rest.mentions(x) && !rest.mentions(y) {
            return Ok(rest);
        }
        let u = derivative(&rest, x);
        let v = derivative(&rest, y);
        let mut subs = HashMap::new();
        subs.insert(x.to_string(), shifted(x, &v, -c));
        subs.insert(y.to_string(), shifted(y, &u, -c));
        cur = cur.substitute(&subs);
        check_cap(&cur, cap)?;
        if cur.coeff(cycle.clone()) != c {
            return Err(QpError::SubstitutionNotStabilized(cap));
        }
    }
    Err(QpError::SubstitutionNotStabilized(cap))
}

/// Term `c·x·d` with `x` unfrozen and `d` frozen: clear the other occurrences of `d`
/// through `x -> x - c∂_dW'`, then drop the 2-cycle and the arrow `d`.
fn eliminate_half_frozen(
    w: &Potential,
    x: &str,
    d: &str,
    c: i64,
    cap: usize,
) -> Result<Potential, QpError> {
    let cycle = vec![x.to_string(), d.to_string()];
    let mut cur = w.clone();
    for _ in 0..=cap {
        let rest = without(&cur, &cycle);
        if !rest.mentions(d) {
            return Ok(rest);
        }
        let u = derivative(&rest, d);
        let mut subs = HashMap::new();
        subs.insert(x.to_string(), shifted(x, &u, -c));
        cur = cur.substitute(&subs);
        check_cap(&cur, cap)?;
    }
    Err(QpError::SubstitutionNotStabilized(cap))
}

/// Compares two ice quivers with potential along the vertex bijection `vmap`.
///
/// Potentials are compared up to rotation, relabelling of arrows compatible with `vmap`,
/// and rescaling of arrows by signs (which covers a global sign on cycles of odd length).
pub fn equivalent_along(a: &IceQP, b: &IceQP, vmap: &[usize]) -> bool {
    if !a.quiver.is_iso_map(&b.quiver, vmap) {
        return false;
    }
    let mut classes_a: BTreeMap<(usize, usize, bool), Vec<String>> = BTreeMap::new();
    for arr in a.quiver.arrows() {
        classes_a
            .entry((vmap[arr.src], vmap[arr.dst], arr.frozen))
            .or_default()
            .push(arr.label.clone());
    }
    let mut classes_b: BTreeMap<(usize, usize, bool), Vec<String>> = BTreeMap::new();
    for arr in b.quiver.arrows() {
        classes_b.entry((arr.src, arr.dst, arr.frozen)).or_default().push(arr.label.clone());
    }
    let keys: Vec<_> = classes_a.keys().cloned().collect();
    let mut choice = HashMap::new();
    assign_classes(&keys, 0, &classes_a, &classes_b, &mut choice, &|m| {
        let mapped = a.potential.relabel(|l| m[l].clone());
        same_up_to_signs(&mapped, &b.potential)
    })
}

fn assign_classes(
    keys: &[(usize, usize, bool)],
    k: usize,
    ca: &BTreeMap<(usize, usize, bool), Vec<String>>,
    cb: &BTreeMap<(usize, usize, bool), Vec<String>>,
    choice: &mut HashMap<String, String>,
    test: &dyn Fn(&HashMap<String, String>) -> bool,
) -> bool {
    if k == keys.len() {
        return test(choice);
    }
    let la = &ca[&keys[k]];
    let lb = &cb[&keys[k]];
    let mut perm: Vec<usize> = (0..lb.len()).collect();
    loop {
        for (i, l) in la.iter().enumerate() {
            choice.insert(l.clone(), lb[perm[i]].clone());
        }
        if assign_classes(keys, k + 1, ca, cb, choice, test) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// True when `b` is obtained from `a` by sending some arrows to their negatives and
/// possibly negating the whole potential.
pub fn same_up_to_signs(a: &Potential, b: &Potential) -> bool {
    if a.terms.len() != b.terms.len() {
        return false;
    }
    let labels: BTreeSet<&String> = a.terms.keys().flat_map(|w| w.0.iter()).collect();
    let index: HashMap<&String, usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let nvars = labels.len() + 1;
    let mut rows: Vec<(Vec<bool>, bool)> = Vec::new();
    for (w, &c) in &a.terms {
        let Some(&d) = b.terms.get(w) else {
            return false;
        };
        if c.abs() != d.abs() {
            return false;
        }
        let mut row = vec![false; nvars];
        for l in &w.0 {
            row[index[l]] ^= true;
        }
        row[nvars - 1] = true;
        rows.push((row, c != d));
    }
    gf2_solvable(rows, nvars)
}

fn gf2_solvable(mut rows: Vec<(Vec<bool>, bool)>, nvars: usize) -> bool {
    let mut pivot_row = 0;
    for col in 0..nvars {
        let Some(p) = (pivot_row..rows.len()).find(|&r| rows[r].0[col]) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let (prow, prhs) = rows[pivot_row].clone();
        for r in 0..rows.len() {
            if r != pivot_row && rows[r].0[col] {
                for k in 0..nvars {
                    rows[r].0[k] ^= prow[k];
                }
                rows[r].1 ^= prhs;
            }
        }
        pivot_row += 1;
    }
    rows.iter().all(|(r, rhs)| r.iter().any(|&b| b) || !rhs)
}
