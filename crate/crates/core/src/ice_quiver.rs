//! Ice quivers: vertices with frozen flags and labelled arrows with frozen flags.
//!
//! Vertices are addressed by position (`usize`) inside a quiver; [`VertexId`] is the
//! external name used in JSON and DOT documents.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Int(i64),
    Pair(Box<VertexId>, Box<VertexId>),
    Prime { prime: Box<VertexId> },
}

impl VertexId {
    pub fn pair(a: VertexId, b: VertexId) -> Self {
        VertexId::Pair(Box::new(a), Box::new(b))
    }

    pub fn prime(v: VertexId) -> Self {
        VertexId::Prime { prime: Box::new(v) }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            VertexId::Int(i) => Some(*i),
            _ => None,
        }
    }

    /// Parses `5`, `(1,2)` and `5'`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_suffix('\'') {
            return VertexId::parse(inner).map(VertexId::prime);
        }
        if let Some(body) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let mut depth = 0;
            for (k, ch) in body.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        let a = VertexId::parse(&body[..k])?;
                        let b = VertexId::parse(&body[k + 1..])?;
                        return Some(VertexId::pair(a, b));
                    }
                    _ => {}
                }
            }
            return None;
        }
        s.parse().ok().map(VertexId::Int)
    }
}

impl From<i64> for VertexId {
    fn from(i: i64) -> Self {
        VertexId::Int(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Int(i) => write!(f, "{i}"),
            VertexId::Pair(a, b) => write!(f, "({a},{b})"),
            VertexId::Prime { prime } => write!(f, "{prime}'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub frozen: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub src: usize,
    pub dst: usize,
    pub frozen: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arrow {0} has an endpoint that is not a vertex")]
    DanglingArrow(String),
    #[error("frozen arrow {0} has an unfrozen endpoint")]
    FrozenArrowUnfrozenEndpoint(String),
    #[error("arrow label {0} is used twice")]
    DuplicateLabel(String),
    #[error("vertex id {0} is used twice")]
    DuplicateVertex(VertexId),
    #[error("vertex {0} is frozen")]
    VertexFrozen(VertexId),
    #[error("vertex {0} lies on a loop or a 2-cycle")]
    LoopOrTwoCycleAtVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("malformed quiver document: {0}")]
    Malformed(String),
}

pub(crate) struct Premutation {
    pub quiver: IceQuiver,
    /// `(alpha, beta)` to the label of `[beta∘alpha]`.
    pub composite: BTreeMap<(String, String), String>,
    /// Old label to the label of the reversed arrow.
    pub reversed: HashMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Tensor,
    Triangle,
}

/// Loops and 2-cycles through one vertex, as reported by [`IceQuiver::cycles_at`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalCycles {
    pub loops: usize,
    pub two_cycles: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IceQuiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    index: HashMap<VertexId, usize>,
}

impl IceQuiver {
    pub fn new(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let q = IceQuiver::from_parts(vertices, arrows)?;
        q.validate()?;
        Ok(q)
    }

    fn from_parts(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), k).is_some() {
                return Err(QuiverError::DuplicateVertex(v.id.clone()));
            }
        }
        Ok(IceQuiver { vertices, arrows, index })
    }

    pub fn empty() -> Self {
        IceQuiver::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<VertexId>, frozen: bool) -> usize {
        let id = id.into();
        let k = self.vertices.len();
        assert!(self.index.insert(id.clone(), k).is_none(), "duplicate vertex {id}");
        self.vertices.push(Vertex { id, frozen });
        k
    }

    /// Appends an arrow. Invariants are checked by [`IceQuiver::validate`].
    pub fn add_arrow(&mut self, label: impl Into<String>, src: usize, dst: usize, frozen: bool) {
        self.arrows.push(Arrow { label: label.into(), src, dst, frozen });
    }

    /// Linear quiver `1 -> 2 -> ... -> n` with arrow labels `a1, a2, ...`.
    pub fn linear(n: usize) -> Self {
        let mut q = IceQuiver::empty();
        for i in 1..=n {
            q.add_vertex(i as i64, false);
        }
        for i in 1..n {
            q.add_arrow(format!("a{i}"), i - 1, i, false);
        }
        q
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &VertexId) -> Result<usize, QuiverError> {
        self.index_of(id).ok_or_else(|| QuiverError::UnknownVertex(id.clone()))
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.vertices[v].id
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.vertices[v].frozen
    }

    pub fn set_frozen(&mut self, v: usize, frozen: bool) {
        self.vertices[v].frozen = frozen;
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.label == label)
    }

    pub fn unfrozen(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| !self.vertices[v].frozen)
    }

    pub fn frozen(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].frozen)
    }

    /// Number of arrows `i -> j`, optionally restricted to unfrozen arrows.
    pub fn count(&self, i: usize, j: usize, unfrozen_only: bool) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.src == i && a.dst == j && !(unfrozen_only && a.frozen))
            .count()
    }

    pub fn validate(&self) -> Result<(), QuiverError> {
        let n = self.vertices.len();
        let mut labels = HashSet::with_capacity(self.arrows.len());
        for a in &self.arrows {
            if a.src >= n || a.dst >= n {
                return Err(QuiverError::DanglingArrow(a.label.clone()));
            }
            if a.frozen && !(self.vertices[a.src].frozen && self.vertices[a.dst].frozen) {
                return Err(QuiverError::FrozenArrowUnfrozenEndpoint(a.label.clone()));
            }
            if !labels.insert(a.label.as_str()) {
                return Err(QuiverError::DuplicateLabel(a.label.clone()));
            }
        }
        Ok(())
    }

    pub fn cycles_at(&self, v: usize) -> LocalCycles {
        let loops = self.arrows.iter().filter(|a| a.src == v && a.dst == v).count();
        let mut two_cycles = 0;
        for a in self.arrows.iter().filter(|a| a.src == v && a.dst != v) {
            two_cycles += self.count(a.dst, v, false);
        }
        LocalCycles { loops, two_cycles }
    }

    fn check_mutable(&self, v: usize) -> Result<(), QuiverError> {
        if self.vertices[v].frozen {
            return Err(QuiverError::VertexFrozen(self.id(v).clone()));
        }
        if self.cycles_at(v) != LocalCycles::default() {
            return Err(QuiverError::LoopOrTwoCycleAtVertex(self.id(v).clone()));
        }
        Ok(())
    }

    /// Composable pairs `(alpha, beta)` through `v`, sorted by their labels.
    pub(crate) fn paths_through(&self, v: usize) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (ai, _) in self.arrows.iter().enumerate().filter(|(_, a)| a.dst == v) {
            for (bi, _) in self.arrows.iter().enumerate().filter(|(_, b)| b.src == v) {
                pairs.push((ai, bi));
            }
        }
        pairs.sort_by(|x, y| {
            (&self.arrows[x.0].label, &self.arrows[x.1].label)
                .cmp(&(&self.arrows[y.0].label, &self.arrows[y.1].label))
        });
        pairs
    }

    /// Extended Fomin–Zelevinsky mutation at the unfrozen vertex `v`.
    pub fn mutate_fz(&self, v: usize) -> Result<IceQuiver, QuiverError> {
        let mut q = self.premutation(v)?.quiver;
        q.cancel_two_cycles();
        Ok(q)
    }

    /// Steps (1) and (2) of extended mutation, keeping track of the new labels.
    pub(crate) fn premutation(&self, v: usize) -> Result<Premutation, QuiverError> {
        self.check_mutable(v)?;
        let mut used: HashSet<String> = self.arrows.iter().map(|a| a.label.clone()).collect();
        let mut composites = Vec::new();
        let mut composite = BTreeMap::new();
        for (ai, bi) in self.paths_through(v) {
            let (a, b) = (&self.arrows[ai], &self.arrows[bi]);
            let label = fresh_label(&mut used, composite_label(&b.label, &a.label));
            composite.insert((a.label.clone(), b.label.clone()), label.clone());
            composites.push(Arrow { label, src: a.src, dst: b.dst, frozen: false });
        }
        let mut reversed = HashMap::new();
        let mut arrows: Vec<Arrow> = Vec::with_capacity(self.arrows.len() + composites.len());
        for a in &self.arrows {
            if a.src == v || a.dst == v {
                used.remove(&a.label);
                let label = fresh_label(&mut used, star_label(&a.label));
                reversed.insert(a.label.clone(), label.clone());
                arrows.push(Arrow { label, src: a.dst, dst: a.src, frozen: a.frozen });
            } else {
                arrows.push(a.clone());
            }
        }
        arrows.extend(composites);
        let quiver = IceQuiver { vertices: self.vertices.clone(), arrows, index: self.index.clone() };
        Ok(Premutation { quiver, composite, reversed })
    }

    pub(crate) fn remove_arrow(&mut self, label: &str) {
        self.arrows.retain(|a| a.label != label);
    }

    pub(crate) fn freeze_arrow(&mut self, label: &str) {
        for a in self.arrows.iter_mut().filter(|a| a.label == label) {
            a.frozen = true;
        }
    }

    /// Steps (3) and (4) of extended mutation: drop unfrozen 2-cycles, then replace
    /// half-frozen 2-cycles by a frozen arrow along the unfrozen one.
    fn cancel_two_cycles(&mut self) {
        let mut order: Vec<usize> = (0..self.arrows.len()).collect();
        order.sort_by(|&x, &y| self.arrows[x].label.cmp(&self.arrows[y].label));
        let mut dead = vec![false; self.arrows.len()];
        for &x in &order {
            if dead[x] || self.arrows[x].frozen || self.arrows[x].src == self.arrows[x].dst {
                continue;
            }
            let (s, t) = (self.arrows[x].src, self.arrows[x].dst);
            let partner = order.iter().copied().find(|&y| {
                !dead[y] && !self.arrows[y].frozen && self.arrows[y].src == t && self.arrows[y].dst == s
            });
            if let Some(y) = partner {
                dead[x] = true;
                dead[y] = true;
            }
        }
        let mut freeze = Vec::new();
        for &x in &order {
            if dead[x] || self.arrows[x].frozen {
                continue;
            }
            let (s, t) = (self.arrows[x].src, self.arrows[x].dst);
            let partner = order.iter().copied().find(|&y| {
                !dead[y] && self.arrows[y].frozen && self.arrows[y].src == t && self.arrows[y].dst == s
            });
            if let Some(y) = partner {
                log::info!(
                    "half-frozen 2-cycle {} / {} between frozen vertices {} and {}",
                    self.arrows[x].label,
                    self.arrows[y].label,
                    self.vertices[s].id,
                    self.vertices[t].id
                );
                dead[y] = true;
                freeze.push(x);
            }
        }
        for x in freeze {
            self.arrows[x].frozen = true;
        }
        let mut k = 0;
        self.arrows.retain(|_| {
            k += 1;
            !dead[k - 1]
        });
    }

    /// Framed (`co = false`, arrows `v -> v'`) or coframed (`co = true`, arrows `v' -> v`) quiver.
    pub fn frame(&self, co: bool) -> IceQuiver {
        let mut q = self.clone();
        for v in 0..self.vertices.len() {
            let w = q.add_vertex(VertexId::prime(self.id(v).clone()), true);
            let mut used: HashSet<String> = q.arrows.iter().map(|a| a.label.clone()).collect();
            let label = fresh_label(&mut used, format!("f{}", self.id(v)));
            if co {
                q.add_arrow(label, w, v, false);
            } else {
                q.add_arrow(label, v, w, false);
            }
        }
        q
    }

    /// Full subquiver on the unfrozen vertices.
    pub fn forget_frozen(&self) -> IceQuiver {
        let keep: Vec<usize> = self.unfrozen().collect();
        self.full_subquiver(&keep)
    }

    pub fn full_subquiver(&self, keep: &[usize]) -> IceQuiver {
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut q = IceQuiver::empty();
        for &v in keep {
            map[v] = q.add_vertex(self.id(v).clone(), self.is_frozen(v));
        }
        for a in &self.arrows {
            if map[a.src] != usize::MAX && map[a.dst] != usize::MAX {
                q.add_arrow(a.label.clone(), map[a.src], map[a.dst], a.frozen);
            }
        }
        q
    }

    /// Tensor or triangle product; vertex `(i, i2)` sits at index `i * |Q2| + i2`.
    pub fn product(&self, other: &IceQuiver, kind: ProductKind) -> IceQuiver {
        let n2 = other.num_vertices();
        let flat = |i: usize, j: usize| i * n2 + j;
        let mut q = IceQuiver::empty();
        for v in &self.vertices {
            for w in &other.vertices {
                q.add_vertex(VertexId::pair(v.id.clone(), w.id.clone()), v.frozen || w.frozen);
            }
        }
        for a in &self.arrows {
            for (j, w) in other.vertices.iter().enumerate() {
                q.add_arrow(
                    format!("({},{})", a.label, w.id),
                    flat(a.src, j),
                    flat(a.dst, j),
                    a.frozen || w.frozen,
                );
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            for b in &other.arrows {
                q.add_arrow(
                    format!("({},{})", v.id, b.label),
                    flat(i, b.src),
                    flat(i, b.dst),
                    b.frozen || v.frozen,
                );
            }
        }
        if kind == ProductKind::Triangle {
            for a in &self.arrows {
                for b in &other.arrows {
                    q.add_arrow(
                        format!("({},{})op", a.label, b.label),
                        flat(a.dst, b.dst),
                        flat(a.src, b.src),
                        a.frozen || b.frozen,
                    );
                }
            }
        }
        q
    }

    fn multiplicities(&self) -> HashMap<(usize, usize, bool), usize> {
        let mut m = HashMap::new();
        for a in &self.arrows {
            *m.entry((a.src, a.dst, a.frozen)).or_insert(0) += 1;
        }
        m
    }

    /// Checks that `map` (indices of `self` to indices of `other`) is an isomorphism.
    pub fn is_iso_map(&self, other: &IceQuiver, map: &[usize]) -> bool {
        if self.num_vertices() != other.num_vertices() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let mut seen = vec![false; other.num_vertices()];
        for (v, &w) in map.iter().enumerate() {
            if w >= seen.len() || seen[w] || self.is_frozen(v) != other.is_frozen(w) {
                return false;
            }
            seen[w] = true;
        }
        let mine = self.multiplicities();
        let theirs = other.multiplicities();
        mine.len() == theirs.len()
            && mine
                .iter()
                .all(|(&(s, t, f), &c)| theirs.get(&(map[s], map[t], f)) == Some(&c))
    }

    /// An isomorphism `self -> other` preserving frozen flags and arrow multiplicities.
    pub fn iso(&self, other: &IceQuiver) -> Option<Vec<usize>> {
        self.iso_fixing(other, &[])
    }

    /// As [`IceQuiver::iso`], with some images prescribed.
    pub fn iso_fixing(&self, other: &IceQuiver, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        if n != other.num_vertices() || self.arrows.len() != other.arrows.len() {
            return None;
        }
        let sig_a = signatures(self);
        let sig_b = signatures(other);
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return None;
        }
        let ma = self.multiplicities();
        let mb = other.multiplicities();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for &(v, w) in fixed {
            if sig_a[v] != sig_b[w] || used[w] {
                return None;
            }
            map[v] = w;
            used[w] = true;
        }
        let order = search_order(self, &map);
        let ctx = IsoSearch { a: self, ma: &ma, mb: &mb, sig_a: &sig_a, sig_b: &sig_b, order: &order };
        for &(v, _) in fixed {
            if !ctx.consistent(&map, v) {
                return None;
            }
        }
        if ctx.extend(&mut map, &mut used, 0) {
            Some(map)
        } else {
            None
        }
    }

    pub fn to_doc(&self) -> QuiverDoc {
        QuiverDoc {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDoc { id: v.id.clone(), frozen: v.frozen })
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    label: a.label.clone(),
                    src: self.id(a.src).clone(),
                    dst: self.id(a.dst).clone(),
                    frozen: a.frozen,
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &QuiverDoc) -> Result<Self, QuiverError> {
        let vertices = doc
            .vertices
            .iter()
            .map(|v| Vertex { id: v.id.clone(), frozen: v.frozen })
            .collect();
        let mut q = IceQuiver::from_parts(vertices, Vec::new())?;
        for a in &doc.arrows {
            let (Some(s), Some(t)) = (q.index_of(&a.src), q.index_of(&a.dst)) else {
                return Err(QuiverError::DanglingArrow(a.label.clone()));
            };
            q.add_arrow(a.label.clone(), s, t, a.frozen);
        }
        q.validate()?;
        Ok(q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("quiver serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, QuiverError> {
        let doc: QuiverDoc =
            serde_json::from_str(s).map_err(|e| QuiverError::Malformed(e.to_string()))?;
        IceQuiver::from_doc(&doc)
    }

    /// Graphviz rendering; frozen vertices are blue boxes and frozen arrows are blue.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Q {\n");
        for v in &self.vertices {
            if v.frozen {
                out.push_str(&format!("  \"{}\" [shape=box, color=blue];\n", v.id));
            } else {
                out.push_str(&format!("  \"{}\";\n", v.id));
            }
        }
        for a in &self.arrows {
            let style = if a.frozen { ", color=blue" } else { "" };
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
                self.id(a.src),
                self.id(a.dst),
                a.label,
                style
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: VertexId,
    pub frozen: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub label: String,
    pub src: VertexId,
    pub dst: VertexId,
    pub frozen: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
}

pub(crate) fn composite_label(beta: &str, alpha: &str) -> String {
    format!("[{beta}∘{alpha}]")
}

pub(crate) fn star_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

pub(crate) fn fresh_label(used: &mut HashSet<String>, mut label: String) -> String {
    while used.contains(&label) {
        label.push('\'');
    }
    used.insert(label.clone());
    label
}

type Signature = (bool, BTreeMap<(bool, usize), usize>, BTreeMap<(bool, usize), usize>, usize);

/// Per-vertex invariant: frozen flag, out/in multiplicity profiles and loop count.
fn signatures(q: &IceQuiver) -> Vec<Signature> {
    let n = q.num_vertices();
    let m = q.multiplicities();
    let mut out = vec![BTreeMap::new(); n];
    let mut inc = vec![BTreeMap::new(); n];
    let mut loops = vec![0; n];
    for (&(s, t, f), &c) in &m {
        if s == t {
            loops[s] += c;
        } else {
            *out[s].entry((f, c)).or_insert(0) += 1;
            *inc[t].entry((f, c)).or_insert(0) += 1;
        }
    }
    (0..n)
        .map(|v| (q.is_frozen(v), out[v].clone(), inc[v].clone(), loops[v]))
        .collect()
}

fn search_order(q: &IceQuiver, map: &[usize]) -> Vec<usize> {
    let n = q.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for a in &q.arrows {
        adj[a.src].push(a.dst);
        adj[a.dst].push(a.src);
    }
    let mut placed: Vec<bool> = map.iter().map(|&w| w != usize::MAX).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(next) = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| {
        let linked = adj[v].iter().filter(|&&w| placed[w]).count();
        (linked, adj[v].len(), std::cmp::Reverse(v))
    }) {
        placed[next] = true;
        order.push(next);
    }
    order
}

struct IsoSearch<'a> {
    a: &'a IceQuiver,
    ma: &'a HashMap<(usize, usize, bool), usize>,
    mb: &'a HashMap<(usize, usize, bool), usize>,
    sig_a: &'a [Signature],
    sig_b: &'a [Signature],
    order: &'a [usize],
}

impl IsoSearch<'_> {
    fn consistent(&self, map: &[usize], v: usize) -> bool {
        let w = map[v];
        for u in 0..map.len() {
            if map[u] == usize::MAX {
                continue;
            }
            let x = map[u];
            for f in [false, true] {
                let ab = self.ma.get(&(v, u, f)).copied().unwrap_or(0);
                let ba = self.mb.get(&(w, x, f)).copied().unwrap_or(0);
                let ab2 = self.ma.get(&(u, v, f)).copied().unwrap_or(0);
                let ba2 = self.mb.get(&(x, w, f)).copied().unwrap_or(0);
                if ab != ba || ab2 != ba2 {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, map: &mut [usize], used: &mut [bool], k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for w in 0..self.a.num_vertices() {
            if used[w] || self.sig_a[v] != self.sig_b[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.consistent(map, v) && self.extend(map, used, k + 1) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
}
