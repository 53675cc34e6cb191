//! Simply-laced root systems, Weyl group words, height functions and moves on
//! bi-infinite index sequences.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unknown Dynkin type {0:?}")]
    UnknownType(String),
    #[error("letter {0} is not a vertex of the diagram")]
    BadLetter(u32),
    #[error("invalid height function: {0}")]
    BadHeight(String),
    #[error("move precondition failed at position {0}: {1}")]
    MovePreconditionFailed(i64, String),
    #[error("word is not a reduced expression of the longest element")]
    NotLongestWord,
}

/// ADE types with Bourbaki vertex labels `1..=rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(u32),
    D(u32),
    E(u32),
}

impl FromStr for DynkinType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CoxeterError::UnknownType(s.to_string());
        let t = s.trim();
        let (head, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
        let n: u32 = rest.parse().map_err(|_| err())?;
        match head.to_ascii_uppercase().as_str() {
            "A" if n >= 1 => Ok(DynkinType::A(n)),
            "D" if n >= 4 => Ok(DynkinType::D(n)),
            "E" if (6..=8).contains(&n) => Ok(DynkinType::E(n)),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub kind: DynkinType,
    edges: Vec<(u32, u32)>,
}

impl DynkinDiagram {
    pub fn new(kind: DynkinType) -> Self {
        let edges = match kind {
            DynkinType::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinType::E(n) => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        };
        DynkinDiagram { kind, edges }
    }

    pub fn parse(s: &str) -> Result<Self, CoxeterError> {
        Ok(DynkinDiagram::new(s.parse()?))
    }

    pub fn rank(&self) -> u32 {
        match self.kind {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.rank()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn adjacent(&self, i: u32, j: u32) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    pub fn neighbours(&self, i: u32) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| match () {
            _ if a == i => Some(b),
            _ if b == i => Some(a),
            _ => None,
        })
    }

    pub fn check_letter(&self, i: u32) -> Result<(), CoxeterError> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(CoxeterError::BadLetter(i))
        }
    }
}

/// Root system with Weyl group elements realised as permutations of the roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub diagram: DynkinDiagram,
    /// Positive roots first, then their negatives in the same order.
    roots: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    reflections: Vec<Vec<usize>>,
    longest_word: Vec<u32>,
    star: Vec<u32>,
}

/// Weyl group element acting on root indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement(Vec<usize>);

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let n = diagram.rank() as usize;
        let reflect = |beta: &[i32], i: usize| -> Vec<i32> {
            let v = i as u32 + 1;
            let pairing = 2 * beta[i] - diagram.neighbours(v).map(|j| beta[j as usize - 1]).sum::<i32>();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };
        let mut positive: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut k = 0;
        while k < positive.len() {
            for i in 0..n {
                let r = reflect(&positive[k], i);
                if r.iter().all(|&c| c >= 0) && !positive.contains(&r) {
                    positive.push(r);
                }
            }
            k += 1;
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i32>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let reflections: Vec<Vec<usize>> = (0..n)
            .map(|i| roots.iter().map(|r| index[&reflect(r, i)]).collect())
            .collect();
        let mut rs = RootSystem { diagram, roots, index, reflections, longest_word: Vec::new(), star: Vec::new() };
        let mut w = rs.identity();
        let mut word = Vec::new();
        'grow: loop {
            for i in 1..=n as u32 {
                if rs.is_positive(w.0[rs.simple(i)]) {
                    w = rs.mul(&w, &rs.reflection(i));
                    word.push(i);
                    continue 'grow;
                }
            }
            break;
        }
        rs.star = (1..=n as u32)
            .map(|i| {
                let img = w.0[rs.simple(i)];
                let neg = rs.negate(img);
                (1..=n as u32).find(|&j| rs.simple(j) == neg).expect("w0 maps simple roots to negative simple roots")
            })
            .collect();
        rs.longest_word = word;
        rs
    }

    pub fn of_type(s: &str) -> Result<Self, CoxeterError> {
        Ok(RootSystem::new(DynkinDiagram::parse(s)?))
    }

    pub fn rank(&self) -> u32 {
        self.diagram.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.roots[..self.num_positive()]
    }

    pub fn root(&self, k: usize) -> &[i32] {
        &self.roots[k]
    }

    pub fn root_index(&self, r: &[i32]) -> Option<usize> {
        self.index.get(r).copied()
    }

    fn simple(&self, i: u32) -> usize {
        i as usize - 1
    }

    fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    fn negate(&self, k: usize) -> usize {
        let p = self.num_positive();
        if k < p {
            k + p
        } else {
            k - p
        }
    }

    /// `l(w₀)`.
    pub fn longest_length(&self) -> usize {
        self.num_positive()
    }

    pub fn longest_word(&self) -> &[u32] {
        &self.longest_word
    }

    /// The involution with `w₀(α_i) = −α_{i*}`.
    pub fn star(&self, i: u32) -> u32 {
        self.star[i as usize - 1]
    }

    pub fn coxeter_number(&self) -> i64 {
        (2 * self.num_positive() / self.rank() as usize) as i64
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement((0..self.roots.len()).collect())
    }

    pub fn reflection(&self, i: u32) -> WeylElement {
        WeylElement(self.reflections[i as usize - 1].clone())
    }

    /// `a ∘ b`.
    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        WeylElement(b.0.iter().map(|&k| a.0[k]).collect())
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut out = vec![0; w.0.len()];
        for (k, &img) in w.0.iter().enumerate() {
            out[img] = k;
        }
        WeylElement(out)
    }

    pub fn from_word(&self, word: &[u32]) -> Result<WeylElement, CoxeterError> {
        let mut w = self.identity();
        for &i in word {
            self.diagram.check_letter(i)?;
            w = self.mul(&w, &self.reflection(i));
        }
        Ok(w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        (0..self.num_positive()).filter(|&k| !self.is_positive(w.0[k])).count()
    }

    pub fn is_reduced(&self, word: &[u32]) -> Result<bool, CoxeterError> {
        Ok(self.length(&self.from_word(word)?) == word.len())
    }

    pub fn is_longest(&self, w: &WeylElement) -> bool {
        self.length(w) == self.num_positive()
    }

    /// `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, w: &WeylElement, i: u32) -> bool {
        let inv = self.inverse(w);
        !self.is_positive(inv.0[self.simple(i)])
    }

    /// A reduced expression of `w` that is a source sequence for `Q_ξ`, if one exists.
    pub fn adapted_expression(&self, w: &WeylElement, xi: &HeightFunction) -> Option<Vec<u32>> {
        let mut w = w.clone();
        let mut xi = xi.clone();
        let mut word = Vec::new();
        while self.length(&w) > 0 {
            let i = self
                .diagram
                .vertices()
                .find(|&i| xi.is_source(&self.diagram, i) && self.is_left_descent(&w, i))?;
            w = self.mul(&self.reflection(i), &w);
            xi.reflect(i);
            word.push(i);
        }
        Some(word)
    }

    /// Some height function for which `w` has an adapted reduced expression.
    pub fn find_adapted(&self, w: &WeylElement) -> Option<(HeightFunction, Vec<u32>)> {
        HeightFunction::all_orientations(&self.diagram)
            .into_iter()
            .find_map(|xi| self.adapted_expression(w, &xi).map(|word| (xi, word)))
    }
}

/// `ξ : Δ₀ → ℤ` with `|ξ_i − ξ_j| = 1` along edges; `Q_ξ` has the arrow `i → j`
/// when `ξ_j = ξ_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightFunction(pub Vec<i64>);

impl HeightFunction {
    pub fn new(d: &DynkinDiagram, xi: Vec<i64>) -> Result<Self, CoxeterError> {
        if xi.len() != d.rank() as usize {
            return Err(CoxeterError::BadHeight(format!("expected {} values", d.rank())));
        }
        for &(a, b) in d.edges() {
            if (xi[a as usize - 1] - xi[b as usize - 1]).abs() != 1 {
                return Err(CoxeterError::BadHeight(format!("|ξ_{a} − ξ_{b}| ≠ 1")));
            }
        }
        Ok(HeightFunction(xi))
    }

    pub fn get(&self, i: u32) -> i64 {
        self.0[i as usize - 1]
    }

    pub fn arrows(&self, d: &DynkinDiagram) -> Vec<(u32, u32)> {
        d.edges()
            .iter()
            .map(|&(a, b)| if self.get(b) == self.get(a) + 1 { (a, b) } else { (b, a) })
            .collect()
    }

    pub fn is_source(&self, d: &DynkinDiagram, i: u32) -> bool {
        d.neighbours(i).all(|j| self.get(j) == self.get(i) + 1)
    }

    /// Turns a source into a sink.
    pub fn reflect(&mut self, i: u32) {
        self.0[i as usize - 1] += 2;
    }

    /// One height function per orientation of the diagram, normalised to minimum 0.
    pub fn all_orientations(d: &DynkinDiagram) -> Vec<HeightFunction> {
        let n = d.rank() as usize;
        let e = d.edges().len();
        (0..1u64 << e)
            .map(|mask| {
                let mut xi: Vec<Option<i64>> = vec![None; n];
                xi[0] = Some(0);
                while xi.iter().any(Option::is_none) {
                    for (k, &(a, b)) in d.edges().iter().enumerate() {
                        let up = if mask >> k & 1 == 1 { 1 } else { -1 };
                        let (a, b) = (a as usize - 1, b as usize - 1);
                        match (xi[a], xi[b]) {
                            (Some(x), None) => xi[b] = Some(x + up),
                            (None, Some(y)) => xi[a] = Some(y - up),
                            _ => {}
                        }
                    }
                }
                let xi: Vec<i64> = xi.into_iter().map(|x| x.expect("connected")).collect();
                let lo = *xi.iter().min().expect("nonempty");
                HeightFunction(xi.into_iter().map(|x| x - lo).collect())
            })
            .collect()
    }
}

/// The `w₀` reduced word adapted to `ξ`: the points `(i, ξ_i + 2k)` with
/// `0 ≤ 2k < ξ_{i*} − ξ_i + h`, read by increasing `p` and then `i`.
pub fn adapted_word(rs: &RootSystem, xi: &HeightFunction) -> Vec<u32> {
    let h = rs.coxeter_number();
    let mut points: Vec<(i64, u32)> = rs
        .diagram
        .vertices()
        .flat_map(|i| {
            let span = xi.get(rs.star(i)) - xi.get(i) + h;
            (0..).map(move |k| 2 * k).take_while(move |&t| t < span).map(move |t| (xi.get(i) + t, i))
        })
        .collect();
    points.sort_unstable();
    points.into_iter().map(|(_, i)| i).collect()
}

/// Whether each letter is a source when it is reached.
pub fn is_source_sequence(d: &DynkinDiagram, xi: &HeightFunction, word: &[u32]) -> bool {
    let mut xi = xi.clone();
    word.iter().all(|&i| {
        let ok = xi.is_source(d, i);
        xi.reflect(i);
        ok
    })
}

/// A height function to which the word is adapted.
pub fn height_for_word(d: &DynkinDiagram, word: &[u32]) -> Option<HeightFunction> {
    HeightFunction::all_orientations(d)
        .into_iter()
        .find(|xi| is_source_sequence(d, xi, word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Commutation,
    Braid,
}

impl FromStr for MoveKind {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "commutation" => Ok(MoveKind::Commutation),
            "braid" => Ok(MoveKind::Braid),
            other => Err(CoxeterError::UnknownType(other.to_string())),
        }
    }
}

/// The bi-infinite sequence `ŵ₀` with `i_{s+l(w₀)} = i_s*`, possibly modified at
/// finitely many positions by moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedWord {
    base: Vec<u32>,
    star: Vec<u32>,
    patch: BTreeMap<i64, u32>,
}

impl ExtendedWord {
    pub fn new(rs: &RootSystem, word: &[u32]) -> Result<Self, CoxeterError> {
        if word.len() != rs.num_positive() || !rs.is_longest(&rs.from_word(word)?) {
            return Err(CoxeterError::NotLongestWord);
        }
        let star = rs.diagram.vertices().map(|i| rs.star(i)).collect();
        Ok(ExtendedWord { base: word.to_vec(), star, patch: BTreeMap::new() })
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn period(&self) -> i64 {
        self.base.len() as i64
    }

    pub fn star(&self, i: u32) -> u32 {
        self.star[i as usize - 1]
    }

    /// `i_s`, with `i_1..i_{l(w₀)}` the base word.
    pub fn letter(&self, s: i64) -> u32 {
        if let Some(&i) = self.patch.get(&s) {
            return i;
        }
        let l = self.period();
        let k = (s - 1).div_euclid(l);
        let i = self.base[(s - 1).rem_euclid(l) as usize];
        if k.rem_euclid(2) == 1 {
            self.star(i)
        } else {
            i
        }
    }

    pub fn is_patched(&self) -> bool {
        !self.patch.is_empty()
    }

    /// `s⁻ = max{t < s : i_t = i_s}`.
    pub fn s_minus(&self, s: i64) -> i64 {
        let i = self.letter(s);
        (1..).map(|k| s - k).find(|&t| self.letter(t) == i).expect("letters recur")
    }

    /// `s⁺ = min{t > s : i_t = i_s}`.
    pub fn s_plus(&self, s: i64) -> i64 {
        let i = self.letter(s);
        (1..).map(|k| s + k).find(|&t| self.letter(t) == i).expect("letters recur")
    }

    pub fn window(&self, a: i64, b: i64) -> Vec<u32> {
        (a..=b).map(|s| self.letter(s)).collect()
    }

    fn set(&mut self, s: i64, i: u32) {
        self.patch.insert(s, i);
    }

    /// Applies a commutation or braid move at position `s`.
    pub fn apply_move(&self, d: &DynkinDiagram, kind: MoveKind, s: i64) -> Result<ExtendedWord, CoxeterError> {
        let fail = |why: &str| CoxeterError::MovePreconditionFailed(s, why.to_string());
        let (x, y) = (self.letter(s), self.letter(s + 1));
        let mut out = self.clone();
        match kind {
            MoveKind::Commutation => {
                if x == y || d.adjacent(x, y) {
                    return Err(fail("letters must be distinct and non-adjacent"));
                }
                out.set(s, y);
                out.set(s + 1, x);
            }
            MoveKind::Braid => {
                let z = self.letter(s - 1);
                if !d.adjacent(x, y) || z != y {
                    return Err(fail("expected a pattern j,i,j with i ∼ j"));
                }
                out.set(s - 1, x);
                out.set(s, z);
                out.set(s + 1, x);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_data_small() {
        let a1 = RootSystem::of_type("A1").unwrap();
        assert_eq!((a1.longest_length(), a1.star(1), a1.coxeter_number()), (1, 1, 2));
        let a2 = RootSystem::of_type("A2").unwrap();
        assert_eq!((a2.longest_length(), a2.star(1), a2.star(2), a2.coxeter_number()), (3, 2, 1, 3));
        let a3 = RootSystem::of_type("A3").unwrap();
        assert_eq!(a3.longest_length(), 6);
        assert_eq!((a3.star(1), a3.star(2), a3.star(3)), (3, 2, 1));
        assert_eq!(a3.coxeter_number(), 4);
    }

    #[test]
    fn root_counts() {
        for (t, p, h) in [("A4", 10, 5), ("D4", 12, 6), ("D5", 20, 8), ("E6", 36, 12), ("E7", 63, 18), ("E8", 120, 30)] {
            let rs = RootSystem::of_type(t).unwrap();
            assert_eq!(rs.num_positive(), p, "{t}");
            assert_eq!(rs.coxeter_number(), h, "{t}");
            assert!(rs.is_reduced(rs.longest_word()).unwrap());
        }
        let d4 = RootSystem::of_type("D4").unwrap();
        assert!((1..=4).all(|i| d4.star(i) == i));
        let e6 = RootSystem::of_type("E6").unwrap();
        assert_eq!((e6.star(1), e6.star(2), e6.star(3), e6.star(4)), (6, 2, 5, 4));
        let d5 = RootSystem::of_type("D5").unwrap();
        assert_eq!((d5.star(4), d5.star(5)), (5, 4));
    }

    #[test]
    fn reducedness() {
        let a2 = RootSystem::of_type("A2").unwrap();
        assert!(a2.is_reduced(&[1, 2, 1]).unwrap());
        assert!(!a2.is_reduced(&[1, 1]).unwrap());
        assert!(a2.is_reduced(&[]).unwrap());
        assert_eq!(a2.is_reduced(&[3]), Err(CoxeterError::BadLetter(3)));
    }

    #[test]
    fn parse_types() {
        assert_eq!("A3".parse::<DynkinType>().unwrap(), DynkinType::A(3));
        assert_eq!("e8".parse::<DynkinType>().unwrap(), DynkinType::E(8));
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("F4".parse::<DynkinType>().is_err());
        assert!("A".parse::<DynkinType>().is_err());
    }

    #[test]
    fn adapted_words() {
        let a2 = RootSystem::of_type("A2").unwrap();
        let xi = HeightFunction::new(&a2.diagram, vec![0, 1]).unwrap();
        assert_eq!(xi.arrows(&a2.diagram), vec![(1, 2)]);
        assert_eq!(adapted_word(&a2, &xi), vec![1, 2, 1]);
        let a1 = RootSystem::of_type("A1").unwrap();
        assert_eq!(adapted_word(&a1, &HeightFunction(vec![0])), vec![1]);
        let a3 = RootSystem::of_type("A3").unwrap();
        let lin = HeightFunction::new(&a3.diagram, vec![0, 1, 2]).unwrap();
        let w = adapted_word(&a3, &lin);
        assert_eq!(w.len(), 6);
        assert!(a3.is_reduced(&w).unwrap());
        assert!(is_source_sequence(&a3.diagram, &lin, &w));
        assert!(HeightFunction::new(&a3.diagram, vec![0, 2, 1]).is_err());
    }

    #[test]
    fn adapted_words_are_longest_for_every_orientation() {
        for t in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"] {
            let rs = RootSystem::of_type(t).unwrap();
            for xi in HeightFunction::all_orientations(&rs.diagram) {
                let w = adapted_word(&rs, &xi);
                assert!(rs.is_longest(&rs.from_word(&w).unwrap()), "{t} {xi:?}");
                assert!(is_source_sequence(&rs.diagram, &xi, &w), "{t} {xi:?}");
            }
        }
    }

    #[test]
    fn adaptedness_of_example_words() {
        let a3 = RootSystem::of_type("A3").unwrap();
        assert_eq!(height_for_word(&a3.diagram, &[3, 1, 2, 3, 1, 2]), Some(HeightFunction(vec![0, 1, 0])));
        assert_eq!(height_for_word(&a3.diagram, &[1, 2, 3, 2, 1, 2]), None);
    }

    #[test]
    fn extended_word_letters() {
        let a3 = RootSystem::of_type("A3").unwrap();
        let w = ExtendedWord::new(&a3, &[1, 2, 3, 2, 1, 2]).unwrap();
        assert_eq!(w.window(-2, 6), vec![2, 3, 2, 1, 2, 3, 2, 1, 2]);
        assert_eq!(w.s_minus(5), 1);
        for s in -10..10 {
            assert_eq!(w.s_plus(w.s_minus(s)), s);
        }
        let a1 = RootSystem::of_type("A1").unwrap();
        let w1 = ExtendedWord::new(&a1, &[1]).unwrap();
        assert!((-5..5).all(|s| w1.s_minus(s) == s - 1));
        assert_eq!(ExtendedWord::new(&a3, &[1, 2, 3]), Err(CoxeterError::NotLongestWord));
    }

    #[test]
    fn moves() {
        let a3 = RootSystem::of_type("A3").unwrap();
        let d = &a3.diagram;
        let w = ExtendedWord::new(&a3, &[1, 3, 2, 1, 3, 2]).unwrap();
        let c = w.apply_move(d, MoveKind::Commutation, 1).unwrap();
        assert_eq!(c.window(1, 6), vec![3, 1, 2, 1, 3, 2]);
        assert!(matches!(
            w.apply_move(d, MoveKind::Commutation, 2),
            Err(CoxeterError::MovePreconditionFailed(2, _))
        ));
        let a2 = RootSystem::of_type("A2").unwrap();
        let w2 = ExtendedWord::new(&a2, &[1, 2, 1]).unwrap();
        let b = w2.apply_move(&a2.diagram, MoveKind::Braid, 2).unwrap();
        assert_eq!(b.window(0, 4), vec![2, 2, 1, 2, 2]);
        assert_eq!(b.window(1, 3), vec![2, 1, 2]);
        assert!(w2.apply_move(&a2.diagram, MoveKind::Braid, 1).is_ok());
        assert!(w2.apply_move(&a2.diagram, MoveKind::Commutation, 1).is_err());
    }

    #[test]
    fn adapted_expressions_of_elements() {
        let a2 = RootSystem::of_type("A2").unwrap();
        let s2 = a2.from_word(&[2]).unwrap();
        let (_, word) = a2.find_adapted(&s2).unwrap();
        assert_eq!(word, vec![2]);
        let w0 = a2.from_word(&[1, 2, 1]).unwrap();
        assert!(a2.find_adapted(&w0).is_some());
    }
}
