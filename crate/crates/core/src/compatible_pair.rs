//! Exact integer matrices, Euler matrices of ice quivers and compatible pairs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ice_quiver::IceQuiver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("matrix is singular")]
    Singular,
    #[error("Euler matrix is singular")]
    EulerSingular,
    #[error("vertex ordering must list every unfrozen vertex before every frozen one")]
    BadOrdering,
    #[error("index {0} is frozen")]
    IndexFrozen(usize),
    #[error("entry does not fit in 64 bits")]
    Overflow,
    #[error("compatibility identity fails at ({0},{1})")]
    NotCompatible(usize, usize),
    #[error("component formula for {0} disagrees at ({1},{2})")]
    FormulaMismatch(&'static str, usize, usize),
    #[error("matrix document has {0} entries, expected {1}")]
    Malformed(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixDoc", into = "MatrixDoc")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

#[derive(Clone, Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl TryFrom<MatrixDoc> for IntMatrix {
    type Error = PairError;
    fn try_from(d: MatrixDoc) -> Result<Self, PairError> {
        if d.data.len() != d.rows * d.cols {
            return Err(PairError::Malformed(d.data.len(), d.rows * d.cols));
        }
        Ok(IntMatrix { rows: d.rows, cols: d.cols, data: d.data })
    }
}

impl From<IntMatrix> for MatrixDoc {
    fn from(m: IntMatrix) -> Self {
        MatrixDoc { rows: m.rows, cols: m.cols, data: m.data }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        write!(f, "{rows:?}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut m = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    m.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        m
    }

    pub fn sub(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| k * x).collect() }
    }

    /// The first `n` columns.
    pub fn left_columns(&self, n: usize) -> Self {
        let mut m = IntMatrix::zeros(self.rows, n);
        for i in 0..self.rows {
            for j in 0..n {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// Exact determinant and, when it is nonzero, the inverse.
    pub fn det_inv(&self) -> (BigInt, Option<Inverse>) {
        assert_eq!(self.rows, self.cols, "square matrix expected");
        bareiss(self)
    }

    pub fn det(&self) -> BigInt {
        self.det_inv().0
    }

    pub fn inverse(&self) -> Result<Inverse, PairError> {
        self.det_inv().1.ok_or(PairError::Singular)
    }
}

/// `numerator / denominator` with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inverse {
    pub numerator: Vec<Vec<BigInt>>,
    pub denominator: BigInt,
}

impl Inverse {
    /// The inverse as an integer matrix, when it is one.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let n = self.numerator.len();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let (q, r) = self.numerator[i][j].div_rem(&self.denominator);
                if !r.is_zero() {
                    return None;
                }
                m.set(i, j, q.to_i64()?);
            }
        }
        Some(m)
    }
}

/// Fraction-free Gauss–Jordan elimination on `[A | I]`; ends at `[D·I | D·A⁻¹]`.
fn bareiss(a: &IntMatrix) -> (BigInt, Option<Inverse>) {
    let n = a.rows;
    if n == 0 {
        return (BigInt::one(), Some(Inverse { numerator: Vec::new(), denominator: BigInt::one() }));
    }
    let w = 2 * n;
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..w)
                .map(|j| {
                    if j < n {
                        BigInt::from(a.get(i, j))
                    } else if j - n == i {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return (BigInt::zero(), None);
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = num / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = prev;
    let det = if sign < 0 { -d.clone() } else { d.clone() };
    let flip = d.is_negative();
    let numerator = m
        .into_iter()
        .map(|row| row[n..].iter().map(|x| if flip { -x } else { x.clone() }).collect())
        .collect();
    (det, Some(Inverse { numerator, denominator: d.abs() }))
}

/// Positions of quiver vertices in matrix order: unfrozen first, then frozen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOrder {
    /// `order[k]` is the quiver index of the vertex in row/column `k`.
    pub order: Vec<usize>,
    pub n_unfrozen: usize,
}

impl VertexOrder {
    /// Unfrozen vertices by ascending id, then frozen vertices by ascending id.
    pub fn canonical(q: &IceQuiver) -> Self {
        let mut unfrozen: Vec<usize> = q.unfrozen().collect();
        let mut frozen: Vec<usize> = q.frozen().collect();
        unfrozen.sort_by(|&a, &b| q.id(a).cmp(q.id(b)));
        frozen.sort_by(|&a, &b| q.id(a).cmp(q.id(b)));
        let n_unfrozen = unfrozen.len();
        unfrozen.extend(frozen);
        VertexOrder { order: unfrozen, n_unfrozen }
    }

    pub fn check(&self, q: &IceQuiver) -> Result<(), PairError> {
        let m = q.num_vertices();
        let mut seen = vec![false; m];
        if self.order.len() != m {
            return Err(PairError::BadOrdering);
        }
        for (k, &v) in self.order.iter().enumerate() {
            if v >= m || seen[v] || q.is_frozen(v) != (k >= self.n_unfrozen) {
                return Err(PairError::BadOrdering);
            }
            seen[v] = true;
        }
        Ok(())
    }

    /// Matrix position of a quiver index.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.order.iter().position(|&x| x == v)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// `B̂`: `b_ii` is 0 or 1 as `i` is unfrozen or frozen, and for `i ≠ j`
/// `b_ij = #{unfrozen i -> j} - #{j -> i}`.
pub fn euler_matrix(q: &IceQuiver, order: &VertexOrder) -> Result<IntMatrix, PairError> {
    order.check(q)?;
    let m = order.len();
    let mut pos = vec![0; m];
    for (k, &v) in order.order.iter().enumerate() {
        pos[v] = k;
    }
    let mut b = IntMatrix::zeros(m, m);
    for k in order.n_unfrozen..m {
        b.set(k, k, 1);
    }
    for a in q.arrows() {
        if a.src == a.dst {
            continue;
        }
        let (i, j) = (pos[a.src], pos[a.dst]);
        if !a.frozen {
            b.set(i, j, b.get(i, j) + 1);
        }
        b.set(j, i, b.get(j, i) - 1);
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatiblePair {
    pub btilde: IntMatrix,
    pub lambda: IntMatrix,
    /// `S = d·I_n`.
    pub d: i64,
}

impl CompatiblePair {
    pub fn n(&self) -> usize {
        self.btilde.cols()
    }

    pub fn m(&self) -> usize {
        self.btilde.rows()
    }

    /// Skew-symmetry of Λ and `B̃ᵀΛ = (d·I_n | 0)`.
    pub fn check(&self) -> Result<(), PairError> {
        let l = &self.lambda;
        for i in 0..l.rows() {
            for j in 0..l.cols() {
                if l.get(i, j) != -l.get(j, i) {
                    return Err(PairError::NotCompatible(i, j));
                }
            }
        }
        let p = self.btilde.transpose().mul(l);
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                let want = if i == j { self.d } else { 0 };
                if p.get(i, j) != want {
                    return Err(PairError::NotCompatible(i, j));
                }
            }
        }
        Ok(())
    }
}

/// `Λ = |det B̂|(B̂⁻ᵀ − B̂⁻¹)` with `d = 2|det B̂|`.
pub fn pair_from_euler(bhat: &IntMatrix, n: usize) -> Result<CompatiblePair, PairError> {
    let (det, inv) = bhat.det_inv();
    let inv = inv.ok_or(PairError::EulerSingular)?;
    let m = bhat.rows();
    let mut lambda = IntMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let x = &inv.numerator[j][i] - &inv.numerator[i][j];
            lambda.set(i, j, x.to_i64().ok_or(PairError::Overflow)?);
        }
    }
    let d = (det.abs() * 2u32).to_i64().ok_or(PairError::Overflow)?;
    let pair = CompatiblePair { btilde: bhat.left_columns(n), lambda, d };
    pair.check()?;
    Ok(pair)
}

/// Compatible pair, Euler matrix and vertex order of an ice quiver.
pub fn build_pair(q: &IceQuiver) -> Result<(CompatiblePair, IntMatrix, VertexOrder), PairError> {
    let order = VertexOrder::canonical(q);
    let bhat = euler_matrix(q, &order)?;
    let pair = pair_from_euler(&bhat, order.n_unfrozen)?;
    Ok((pair, bhat, order))
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

/// `E_v`: identity except column `v`, which holds `[b_iv]₊` off the diagonal and `-1` on it.
pub fn e_matrix(bhat: &IntMatrix, v: usize) -> IntMatrix {
    let m = bhat.rows();
    let mut e = IntMatrix::identity(m);
    for i in 0..m {
        e.set(i, v, if i == v { -1 } else { pos(bhat.get(i, v)) });
    }
    e
}

/// Mutation in direction `v` through `E_v`-conjugation, checked against the
/// component-wise rules for Λ and B̃.
pub fn mutate_pair(
    p: &CompatiblePair,
    bhat: &IntMatrix,
    v: usize,
) -> Result<(CompatiblePair, IntMatrix), PairError> {
    let n = p.n();
    if v >= n {
        return Err(PairError::IndexFrozen(v));
    }
    let e = e_matrix(bhat, v);
    let lambda = e.transpose().mul(&p.lambda).mul(&e);
    let bhat2 = e.mul(bhat).mul(&e.transpose());
    let btilde = bhat2.left_columns(n);

    let m = p.m();
    let b = &p.btilde;
    for i in 0..m {
        for j in 0..m {
            let expected = if j == v && i != v {
                -p.lambda.get(i, v) + (0..m).map(|l| pos(b.get(l, v)) * p.lambda.get(i, l)).sum::<i64>()
            } else if i == v && j != v {
                -p.lambda.get(v, j) + (0..m).map(|l| pos(b.get(l, v)) * p.lambda.get(l, j)).sum::<i64>()
            } else {
                p.lambda.get(i, j)
            };
            if lambda.get(i, j) != expected {
                return Err(PairError::FormulaMismatch("lambda", i, j));
            }
        }
        for j in 0..n {
            let expected = if i == v || j == v {
                -b.get(i, j)
            } else {
                b.get(i, j) + pos(b.get(i, v)) * pos(b.get(v, j)) - pos(-b.get(i, v)) * pos(-b.get(v, j))
            };
            if btilde.get(i, j) != expected {
                return Err(PairError::FormulaMismatch("btilde", i, j));
            }
        }
    }
    let out = CompatiblePair { btilde, lambda, d: p.d };
    out.check()?;
    Ok((out, bhat2))
}
