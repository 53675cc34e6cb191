//! Λ-seeds over exact Laurent polynomials: mutation, pointed decompositions, tropical
//! evaluation and the tropical and F-invariants.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compatible_pair::{mutate_pair, CompatiblePair, IntMatrix, PairError, VertexOrder};
use crate::ice_quiver::IceQuiver;

pub type Exponent = Vec<i32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no pointed decomposition exists")]
    NotPointed,
    #[error("tropical evaluation of the zero polynomial")]
    ZeroPolynomial,
    #[error("mutation produced a negative exponent of frozen variable {0}")]
    FrozenInverted(usize),
    #[error("extended exchange matrix does not have full column rank")]
    RankDeficient,
    #[error("F-invariant check failed: {0}")]
    InvariantMismatch(String),
    #[error(transparent)]
    Pair(#[from] PairError),
}

/// Sparse Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, i128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coeff: i128,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::monomial(vec![0; nvars], 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::monomial(e, 1)
    }

    pub fn monomial(exp: Exponent, coeff: i128) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, i128)>) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, i128> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponent, c: i128) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut acc: HashMap<Exponent, i128> = HashMap::with_capacity(self.len() * other.len());
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert(0) += c1 * c2;
            }
        }
        LaurentPoly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `q` with `self = other · q`.
    pub fn exact_divide(&self, other: &LaurentPoly) -> Result<LaurentPoly, SeedError> {
        exact_divide(self, other)
    }

    /// Substitutes the monomials `images[i]` for the variables.
    pub fn substitute_monomials(&self, images: &[Vec<i32>]) -> LaurentPoly {
        let nvars = images.first().map_or(0, Vec::len);
        let mut out = LaurentPoly::zero(nvars);
        for (e, &c) in &self.terms {
            let mut x = vec![0; nvars];
            for (k, &ek) in e.iter().enumerate() {
                for (xi, &im) in x.iter_mut().zip(&images[k]) {
                    *xi += ek * im;
                }
            }
            out.add_term(x, c);
        }
        out
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms.iter().map(|(e, &c)| TermJson { exp: e.clone(), coeff: c }).collect()
    }
}

/// Exact division in the Laurent polynomial ring by lexicographic long division.
///
/// Every candidate quotient exponent must lie in the box spanned by coordinate-wise
/// minima and maxima, which bounds the loop when the division is not exact.
pub fn exact_divide(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, SeedError> {
    if b.is_zero() {
        return Err(SeedError::DivisionByZero);
    }
    let n = a.nvars;
    if a.is_zero() {
        return Ok(LaurentPoly::zero(n));
    }
    let bounds = |p: &LaurentPoly| {
        let mut lo = vec![i32::MAX; n];
        let mut hi = vec![i32::MIN; n];
        for e in p.terms.keys() {
            for k in 0..n {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        (lo, hi)
    };
    let (alo, ahi) = bounds(a);
    let (blo, bhi) = bounds(b);
    let qlo: Vec<i32> = (0..n).map(|k| alo[k] - blo[k]).collect();
    let qhi: Vec<i32> = (0..n).map(|k| ahi[k] - bhi[k]).collect();
    if (0..n).any(|k| qlo[k] > qhi[k]) {
        return Err(SeedError::InexactDivision);
    }
    let (lead_e, &lead_c) = b.terms.iter().next_back().expect("nonzero divisor");
    let mut r = a.terms.clone();
    let mut q = BTreeMap::new();
    while let Some((e, &c)) = r.iter().next_back() {
        if c % lead_c != 0 {
            return Err(SeedError::InexactDivision);
        }
        let t: Exponent = e.iter().zip(lead_e).map(|(x, y)| x - y).collect();
        if (0..n).any(|k| t[k] < qlo[k] || t[k] > qhi[k]) {
            return Err(SeedError::InexactDivision);
        }
        let tc = c / lead_c;
        for (be, &bc) in &b.terms {
            let key: Exponent = t.iter().zip(be).map(|(x, y)| x + y).collect();
            let entry = r.entry(key.clone()).or_insert(0);
            *entry -= tc * bc;
            if *entry == 0 {
                r.remove(&key);
            }
        }
        q.insert(t, tc);
    }
    Ok(LaurentPoly { nvars: n, terms: q })
}

/// `u = x^g · F(ŷ)` with `ŷ_j = ∏_i x_i^{b_ij}` and `F(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedDecomposition {
    pub g: Vec<i64>,
    /// Polynomial in `y_1..y_n`.
    pub f: LaurentPoly,
}

impl PointedDecomposition {
    pub fn reconstruct(&self, btilde: &IntMatrix) -> LaurentPoly {
        let m = self.g.len();
        let images: Vec<Vec<i32>> = (0..btilde.cols())
            .map(|j| (0..m).map(|i| btilde.get(i, j) as i32).collect())
            .collect();
        let g: Exponent = self.g.iter().map(|&x| x as i32).collect();
        self.f.substitute_monomials(&images).mul(&LaurentPoly::monomial(g, 1))
    }
}

/// Left inverse data for a full column rank `B̃`: `(B̃ᵀB̃)⁻¹B̃ᵀ = num / den`.
struct LeftInverse {
    num: Vec<Vec<i128>>,
    den: i128,
}

fn left_inverse(btilde: &IntMatrix) -> Result<LeftInverse, SeedError> {
    let bt = btilde.transpose();
    let gram = bt.mul(btilde);
    let inv = gram.inverse().map_err(|_| SeedError::RankDeficient)?;
    let den = inv.denominator.to_i128().ok_or(SeedError::RankDeficient)?;
    let n = gram.rows();
    let m = btilde.rows();
    let ginv: Vec<Vec<i128>> = inv
        .numerator
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128().expect("small inverse")).collect())
        .collect();
    let num = (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..n).map(|k| ginv[i][k] * bt.get(k, j) as i128).sum())
                .collect()
        })
        .collect();
    Ok(LeftInverse { num, den })
}

/// Extracts `(g, F)`: the exponents of `u` all have the form `g + B̃v` with `v ∈ ℕⁿ`,
/// and `g` is the one whose coordinates `v` are all minimal.
pub fn decompose(u: &LaurentPoly, btilde: &IntMatrix) -> Result<PointedDecomposition, SeedError> {
    if u.is_zero() {
        return Err(SeedError::NotPointed);
    }
    let n = btilde.cols();
    let m = btilde.rows();
    let li = left_inverse(btilde)?;
    let coords = |h: &Exponent| -> Vec<i128> {
        (0..n)
            .map(|i| (0..m).map(|j| li.num[i][j] * h[j] as i128).sum())
            .collect()
    };
    let all: Vec<(Vec<i128>, &Exponent)> = u.terms.keys().map(|h| (coords(h), h)).collect();
    let lo: Vec<i128> = (0..n)
        .map(|i| all.iter().map(|(c, _)| c[i]).min().expect("nonempty"))
        .collect();
    let (_, g) = all.iter().find(|(c, _)| *c == lo).ok_or(SeedError::NotPointed)?;
    if u.terms[*g] != 1 {
        return Err(SeedError::NotPointed);
    }
    let mut f = LaurentPoly::zero(n);
    for (c, h) in &all {
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let diff = c[i] - lo[i];
            if diff % li.den != 0 {
                return Err(SeedError::NotPointed);
            }
            v.push((diff / li.den) as i32);
        }
        for j in 0..m {
            let img: i64 = (0..n).map(|i| btilde.get(j, i) * v[i] as i64).sum();
            if img != (h[j] - g[j]) as i64 {
                return Err(SeedError::NotPointed);
            }
        }
        f.add_term(v, u.terms[*h]);
    }
    Ok(PointedDecomposition { g: g.iter().map(|&x| x as i64).collect(), f })
}

/// `F[r] = max vᵀr` over the support of `F`.
pub fn tropical_eval(f: &LaurentPoly, r: &[i64]) -> Result<i64, SeedError> {
    f.terms
        .keys()
        .map(|v| v.iter().zip(r).map(|(&a, &b)| a as i64 * b).sum())
        .max()
        .ok_or(SeedError::ZeroPolynomial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeed {
    /// Cluster variables written in the initial variables of the pattern.
    pub cluster: Vec<LaurentPoly>,
    pub pair: CompatiblePair,
    pub bhat: IntMatrix,
    /// Mutated indices, starting from the root.
    pub trail: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub cluster: Vec<Vec<TermJson>>,
    pub trail: Vec<usize>,
}

impl LambdaSeed {
    pub fn initial(pair: CompatiblePair, bhat: IntMatrix) -> Self {
        let m = pair.m();
        let cluster = (0..m).map(|i| LaurentPoly::var(m, i)).collect();
        LambdaSeed { cluster, pair, bhat, trail: Vec::new() }
    }

    pub fn from_quiver(q: &IceQuiver) -> Result<(Self, VertexOrder), SeedError> {
        let (pair, bhat, order) = crate::compatible_pair::build_pair(q)?;
        Ok((LambdaSeed::initial(pair, bhat), order))
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn m(&self) -> usize {
        self.pair.m()
    }

    /// A fresh root carrying this seed's pair, with its own variables as cluster.
    pub fn rerooted(&self) -> Self {
        LambdaSeed::initial(self.pair.clone(), self.bhat.clone())
    }

    pub fn mutate(&self, v: usize) -> Result<LambdaSeed, SeedError> {
        let (pair, bhat) = mutate_pair(&self.pair, &self.bhat, v)?;
        let m = self.m();
        let nv = self.cluster[v].nvars();
        let mut plus = LaurentPoly::one(nv);
        let mut minus = LaurentPoly::one(nv);
        for j in 0..m {
            let b = self.pair.btilde.get(j, v);
            if b > 0 {
                plus = plus.mul(&self.cluster[j].pow(b as u32));
            } else if b < 0 {
                minus = minus.mul(&self.cluster[j].pow((-b) as u32));
            }
        }
        let fresh = exact_divide(&plus.add(&minus), &self.cluster[v])?;
        let n = self.n();
        for e in fresh.terms.keys() {
            if let Some(k) = (n..m).find(|&k| k < e.len() && e[k] < 0) {
                return Err(SeedError::FrozenInverted(k));
            }
        }
        let mut cluster = self.cluster.clone();
        cluster[v] = fresh;
        let mut trail = self.trail.clone();
        trail.push(v);
        Ok(LambdaSeed { cluster, pair, bhat, trail })
    }

    pub fn mutate_along(&self, seq: &[usize]) -> Result<LambdaSeed, SeedError> {
        seq.iter().try_fold(self.clone(), |s, &v| s.mutate(v))
    }

    /// Pointed decomposition of `u`, written in the cluster variables of this seed.
    pub fn decompose(&self, u: &LaurentPoly) -> Result<PointedDecomposition, SeedError> {
        decompose(u, &self.pair.btilde)
    }

    fn s_times(&self, g: &[i64]) -> Vec<i64> {
        g[..self.n()].iter().map(|&x| self.pair.d * x).collect()
    }

    /// `⟨u,u′⟩ = gᵀΛg′ + F_u[(S|0)g′]`, both arguments written in this seed's variables.
    pub fn tropical_invariant(&self, u: &LaurentPoly, u2: &LaurentPoly) -> Result<i64, SeedError> {
        let a = self.decompose(u)?;
        let b = self.decompose(u2)?;
        self.tropical_from(&a, &b)
    }

    fn tropical_from(&self, a: &PointedDecomposition, b: &PointedDecomposition) -> Result<i64, SeedError> {
        let m = self.m();
        let l = &self.pair.lambda;
        let quad: i64 = (0..m)
            .map(|i| (0..m).map(|j| a.g[i] * l.get(i, j) * b.g[j]).sum::<i64>())
            .sum();
        Ok(quad + tropical_eval(&a.f, &self.s_times(&b.g))?)
    }

    /// `(u‖u′)_F`, checked against the sum of the two tropical invariants.
    pub fn f_invariant(&self, u: &LaurentPoly, u2: &LaurentPoly) -> Result<i64, SeedError> {
        let a = self.decompose(u)?;
        let b = self.decompose(u2)?;
        let direct = tropical_eval(&a.f, &self.s_times(&b.g))? + tropical_eval(&b.f, &self.s_times(&a.g))?;
        let summed = self.tropical_from(&a, &b)? + self.tropical_from(&b, &a)?;
        if direct != summed {
            return Err(SeedError::InvariantMismatch(format!("{direct} != {summed}")));
        }
        if direct < 0 {
            return Err(SeedError::InvariantMismatch(format!("negative value {direct}")));
        }
        Ok(direct)
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson { cluster: self.cluster.iter().map(LaurentPoly::to_json).collect(), trail: self.trail.clone() }
    }
}

/// One seed reached by [`explore`].
#[derive(Clone, Debug)]
pub struct ExploredSeed {
    pub seed: LambdaSeed,
    pub parent: Option<usize>,
    pub depth: usize,
    /// Interned ids of the cluster variables, position by position.
    pub vars: Vec<usize>,
}

/// Breadth-first search of the exchange graph, with seeds identified by their
/// unordered clusters.
#[derive(Clone, Debug)]
pub struct Exploration {
    pub variables: Vec<LaurentPoly>,
    /// Depth at which each variable first appeared.
    pub first_depth: Vec<usize>,
    pub seeds: Vec<ExploredSeed>,
    /// True when the search stopped because of the seed limit.
    pub truncated: bool,
}

pub fn explore(root: &LambdaSeed, max_depth: usize, max_seeds: usize) -> Result<Exploration, SeedError> {
    let mut variables = Vec::new();
    let mut first_depth = Vec::new();
    let mut ids: HashMap<LaurentPoly, usize> = HashMap::new();
    let mut intern = |p: &LaurentPoly, depth: usize, variables: &mut Vec<LaurentPoly>| -> usize {
        *ids.entry(p.clone()).or_insert_with(|| {
            variables.push(p.clone());
            first_depth.push(depth);
            variables.len() - 1
        })
    };
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let vars: Vec<usize> = root.cluster.iter().map(|p| intern(p, 0, &mut variables)).collect();
    let mut key = vars.clone();
    key.sort_unstable();
    seen.insert(key, 0);
    let mut seeds = vec![ExploredSeed { seed: root.clone(), parent: None, depth: 0, vars }];
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(k) = queue.pop_front() {
        if seeds[k].depth >= max_depth {
            continue;
        }
        for v in 0..root.n() {
            let next = seeds[k].seed.mutate(v)?;
            let depth = seeds[k].depth + 1;
            let vars: Vec<usize> = next.cluster.iter().map(|p| intern(p, depth, &mut variables)).collect();
            let mut key = vars.clone();
            key.sort_unstable();
            if seen.contains_key(&key) {
                continue;
            }
            if seeds.len() >= max_seeds {
                truncated = true;
                continue;
            }
            seen.insert(key, seeds.len());
            queue.push_back(seeds.len());
            seeds.push(ExploredSeed { seed: next, parent: Some(k), depth, vars });
        }
    }
    let first_depth = first_depth_fix(first_depth, &seeds, variables.len());
    Ok(Exploration { variables, first_depth, seeds, truncated })
}

fn first_depth_fix(raw: Vec<usize>, seeds: &[ExploredSeed], nvars: usize) -> Vec<usize> {
    let mut best = raw;
    best.resize(nvars, usize::MAX);
    for s in seeds {
        for &v in &s.vars {
            best[v] = best[v].min(s.depth);
        }
    }
    best
}

impl Exploration {
    /// Whether some explored seed contains both variables.
    pub fn share_seed(&self, a: usize, b: usize) -> bool {
        self.seeds.iter().any(|s| s.vars.contains(&a) && s.vars.contains(&b))
    }

    /// Every variable rewritten in the cluster variables of seed `t`.
    pub fn express_in(&self, t: usize) -> Result<Vec<LaurentPoly>, SeedError> {
        let mut path = Vec::new();
        let mut k = t;
        while let Some(p) = self.seeds[k].parent {
            path.push(self.seeds[k].seed.trail.last().copied().expect("child has a step"));
            k = p;
        }
        // path holds the steps from t back to the root, in that order
        let root_view = self.seeds[t].seed.rerooted().mutate_along(&path)?;
        let mut views: Vec<Option<LambdaSeed>> = vec![None; self.seeds.len()];
        views[0] = Some(root_view);
        let mut out: Vec<Option<LaurentPoly>> = vec![None; self.variables.len()];
        for (k, s) in self.seeds.iter().enumerate() {
            if let Some(p) = s.parent {
                let step = *s.seed.trail.last().expect("child has a step");
                let view = views[p].as_ref().expect("parents come first").mutate(step)?;
                views[k] = Some(view);
            }
            let view = views[k].as_ref().expect("view computed");
            for (pos, &var) in s.vars.iter().enumerate() {
                if out[var].is_none() {
                    out[var] = Some(view.cluster[pos].clone());
                }
            }
        }
        Ok(out.into_iter().map(|p| p.expect("every variable sits in a seed")).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compatible_pair::build_pair;

    fn uf_seed() -> LambdaSeed {
        let mut q = IceQuiver::empty();
        q.add_vertex(1, false);
        q.add_vertex(2, true);
        q.add_arrow("a", 0, 1, false);
        let (pair, bhat, _) = build_pair(&q).unwrap();
        LambdaSeed::initial(pair, bhat)
    }

    fn lp(n: usize, terms: &[(&[i32], i128)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn division_examples() {
        let a = lp(2, &[(&[1, 1], 1), (&[1, 0], 1)]);
        let x1 = LaurentPoly::var(2, 0);
        assert_eq!(a.exact_divide(&x1).unwrap(), lp(2, &[(&[0, 1], 1), (&[0, 0], 1)]));
        assert_eq!(a.exact_divide(&a).unwrap(), LaurentPoly::one(2));
        let b = lp(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        assert_eq!(b.mul(&b).exact_divide(&b).unwrap(), b);
        let c = lp(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        assert_eq!(b.exact_divide(&c), Err(SeedError::InexactDivision));
        assert_eq!(b.exact_divide(&LaurentPoly::zero(2)), Err(SeedError::DivisionByZero));
    }

    #[test]
    fn uf_exchange() {
        let s = uf_seed().mutate(0).unwrap();
        assert_eq!(s.cluster[0], lp(2, &[(&[-1, 0], 1), (&[-1, 1], 1)]));
        assert_eq!(s.trail, vec![0]);
        let back = s.mutate(0).unwrap();
        assert_eq!(back.cluster, uf_seed().cluster);
        assert_eq!(back.pair, uf_seed().pair);
    }

    #[test]
    fn uf_decomposition_and_invariants() {
        let root = uf_seed();
        let xu2 = root.mutate(0).unwrap().cluster[0].clone();
        let d = root.decompose(&xu2).unwrap();
        assert_eq!(d.g, vec![-1, 1]);
        assert_eq!(d.f, lp(1, &[(&[0], 1), (&[1], 1)]));
        assert_eq!(d.reconstruct(&root.pair.btilde), xu2);
        let xf = root.cluster[1].clone();
        let xu = root.cluster[0].clone();
        assert_eq!(root.tropical_invariant(&xu2, &xf).unwrap(), -2);
        assert_eq!(root.tropical_invariant(&xf, &xu2).unwrap(), 2);
        assert_eq!(root.tropical_invariant(&xu2, &xu).unwrap(), 0);
        assert_eq!(root.tropical_invariant(&xu, &xu2).unwrap(), 2);
        assert_eq!(root.f_invariant(&xu2, &xu).unwrap(), 2);
        assert_eq!(root.f_invariant(&xu, &xf).unwrap(), 0);
    }

    #[test]
    fn initial_variable_is_pointed_at_itself() {
        let root = uf_seed();
        let d = root.decompose(&root.cluster[1]).unwrap();
        assert_eq!(d.g, vec![0, 1]);
        assert_eq!(d.f, LaurentPoly::one(1));
    }

    #[test]
    fn tropical_eval_examples() {
        assert_eq!(tropical_eval(&lp(1, &[(&[0], 1), (&[1], 1)]), &[3]), Ok(3));
        assert_eq!(tropical_eval(&LaurentPoly::one(2), &[5, -4]), Ok(0));
        let f = lp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1)]);
        assert_eq!(tropical_eval(&f, &[1, -2]), Ok(1));
        assert_eq!(tropical_eval(&LaurentPoly::zero(1), &[1]), Err(SeedError::ZeroPolynomial));
    }

    #[test]
    fn pentagon() {
        let q = IceQuiver::linear(2);
        let (pair, bhat, _) = build_pair(&q).unwrap();
        let root = LambdaSeed::initial(pair, bhat);
        let s = root.mutate_along(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(s.cluster[0], root.cluster[1]);
        assert_eq!(s.cluster[1], root.cluster[0]);
    }
}
