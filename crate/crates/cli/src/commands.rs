//! Subcommand bodies; each returns the text to print.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use lambda_lab::compatible_pair::{build_pair, PairError};
use lambda_lab::coxeter::{CoxeterError, HeightFunction, RootSystem};
use lambda_lab::dynkin_ar::ArWindow;
use lambda_lab::ginzburg_ext::{euler_comparison, lambda_comparison, regular_embed, ExtError};
use lambda_lab::green_seq::{run_green, GreenError};
use lambda_lab::ice_quiver::{IceQuiver, QuiverError, VertexId};
use lambda_lab::interval_quiver::{build_interval, ExtendedWord, IntervalError};
use lambda_lab::seed_engine::{LambdaSeed, SeedError};

use crate::fixture::{Fixture, FixtureError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("cannot parse vertex list `{0}`")]
    BadVertices(String),
    #[error("cannot parse pair list `{0}`")]
    BadPairs(String),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Green(#[from] GreenError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Ext(#[from] ExtError),
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

/// A quiver from a JSON file, or from a fixture descriptor when no such file exists.
pub fn load_quiver(arg: &str) -> Result<IceQuiver, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(arg.into(), e))?;
        return Ok(IceQuiver::from_json(&text)?);
    }
    Ok(arg.parse::<Fixture>()?.build()?.quiver)
}

/// Comma-separated vertex ids; pair ids such as `(1,2)` may contain commas.
pub fn parse_vertices(s: &str) -> Result<Vec<VertexId>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(VertexId::parse(&s[start..k]).ok_or_else(|| CliError::BadVertices(s.into()))?);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(VertexId::parse(&s[start..]).ok_or_else(|| CliError::BadVertices(s.into()))?);
    Ok(out)
}

fn require(q: &IceQuiver, v: &VertexId) -> Result<usize, CliError> {
    Ok(q.require(v)?)
}

pub fn mutate(q: &IceQuiver, at: &[VertexId]) -> Result<IceQuiver, CliError> {
    at.iter().try_fold(q.clone(), |q, v| Ok(q.mutate_fz(require(&q, v)?)?))
}

pub fn pair(q: &IceQuiver) -> Result<String, CliError> {
    let (p, bhat, order) = build_pair(q)?;
    let ids: Vec<&VertexId> = order.order.iter().map(|&v| q.id(v)).collect();
    Ok(pretty(&json!({
        "order": ids,
        "bhat": bhat,
        "det": bhat.det().to_string(),
        "btilde": p.btilde,
        "lambda": p.lambda,
        "d": p.d,
    })))
}

pub fn seed_mutate(q: &IceQuiver, at: &[VertexId]) -> Result<String, CliError> {
    let (root, order) = LambdaSeed::from_quiver(q)?;
    let mut seed = root.clone();
    for v in at {
        let idx = require(q, v)?;
        if q.is_frozen(idx) {
            return Err(QuiverError::VertexFrozen(v.clone()).into());
        }
        seed = seed.mutate(order.position(idx).expect("placed"))?;
    }
    let mut vars = Vec::new();
    for (pos, &v) in order.order.iter().enumerate() {
        let x = &seed.cluster[pos];
        let dec = root.decompose(x)?;
        vars.push(json!({"vertex": q.id(v), "g": dec.g, "f": dec.f.to_json(), "variable": x.to_json()}));
    }
    Ok(pretty(&json!({
        "trail": at,
        "cluster": vars,
        "btilde": seed.pair.btilde,
        "lambda": seed.pair.lambda,
        "d": seed.pair.d,
    })))
}

pub fn green(q: &IceQuiver, seq: &[VertexId]) -> Result<String, CliError> {
    let run = run_green(q, seq)?;
    let ids: Vec<&VertexId> = q.vertices().iter().map(|v| &v.id).collect();
    let steps: Vec<Value> = run
        .colors
        .iter()
        .enumerate()
        .map(|(k, c)| json!({"before": seq.get(k), "colors": c}))
        .collect();
    Ok(pretty(&json!({
        "vertices": ids,
        "steps": steps,
        "maximal": run.is_maximal(),
        "sigma": run.sigma_ids(),
    })))
}

fn word_fixture(dynkin: &str, word: &[u32]) -> Result<(RootSystem, ExtendedWord), CliError> {
    let rs = RootSystem::of_type(dynkin)?;
    let w = ExtendedWord::new(&rs, word)?;
    Ok((rs, w))
}

pub struct IntervalOutput {
    pub summary: String,
    pub json: String,
    pub dot: String,
}

pub fn interval(dynkin: &str, word: &[u32], a: i64, b: i64) -> Result<IntervalOutput, CliError> {
    let (rs, w) = word_fixture(dynkin, word)?;
    let iqp = build_interval(&rs.diagram, &w, a, b)?;
    let summary = json!({
        "vertices": iqp.quiver().num_vertices(),
        "frozen": iqp.frozen_positions(),
        "arrows": iqp.quiver().arrows().len(),
        "potential_terms": iqp.qp.potential.len(),
        "row_sizes": iqp.row_sizes(rs.rank()),
        "regular_width": iqp.regular_width(rs.rank()),
    });
    Ok(IntervalOutput { summary: pretty(&summary), json: pretty(&iqp.qp.to_json()), dot: iqp.quiver().to_dot() })
}

/// `all`, or `s:t` entries separated by commas.
pub fn parse_pairs(list: &str, a: i64, b: i64) -> Result<Vec<(i64, i64)>, CliError> {
    if list == "all" {
        return Ok((a..=b).flat_map(|s| (a..=b).map(move |t| (s, t))).collect());
    }
    list.split(',')
        .map(|p| {
            let (s, t) = p.split_once(':').ok_or_else(|| CliError::BadPairs(list.into()))?;
            let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| CliError::BadPairs(list.into()));
            Ok((parse(s)?, parse(t)?))
        })
        .collect()
}

pub fn ext(dynkin: &str, word: &[u32], a: i64, b: i64, pairs: &[(i64, i64)]) -> Result<String, CliError> {
    let (rs, w) = word_fixture(dynkin, word)?;
    let (model, a_prime) = regular_embed(&rs, &w, a, b)?;
    let mut entries = Vec::new();
    for &(s, t) in pairs {
        let table = model.ext_dims(s, t)?;
        entries.push(json!({"s": s, "t": t, "ext": table, "bracket": model.bracket(s, t)?}));
    }
    Ok(pretty(&json!({
        "a_prime": a_prime,
        "ell": model.ell,
        "xi": model.xi.0,
        "entries": entries,
    })))
}

pub fn lambda_matrix(dynkin: &str, word: &[u32], a: i64, b: i64) -> Result<(String, bool), CliError> {
    let (rs, w) = word_fixture(dynkin, word)?;
    let lam = lambda_comparison(&rs, &w, a, b)?;
    let eul = euler_comparison(&rs, &w, a, b)?;
    let mut diff = Vec::new();
    for i in 0..lam.order.len() {
        for j in 0..lam.order.len() {
            let (x, y) = (lam.homological.get(i, j), lam.formula.get(i, j));
            if x != y {
                diff.push(json!({"row": lam.order[i], "col": lam.order[j], "homological": x, "formula": y}));
            }
        }
    }
    let equal = diff.is_empty() && eul.chi == eul.bhat_inv_t;
    let out = json!({
        "order": lam.order,
        "homological": lam.homological.to_rows(),
        "formula": lam.formula.to_rows(),
        "diff": diff,
        "euler_equals_inverse_transpose": eul.chi == eul.bhat_inv_t,
    });
    Ok((pretty(&out), equal))
}

pub fn ar_dot(dynkin: &str, xi: &[i64]) -> Result<String, CliError> {
    let rs = RootSystem::of_type(dynkin)?;
    let xi = HeightFunction::new(&rs.diagram, xi.to_vec())?;
    Ok(ArWindow::new(&rs, &xi).to_dot())
}
