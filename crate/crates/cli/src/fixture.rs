//! Fixture descriptors shared by the command line and the HTTP service.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use lambda_lab::coxeter::{CoxeterError, HeightFunction, RootSystem};
use lambda_lab::ice_quiver::{IceQuiver, QuiverDoc, QuiverError};
use lambda_lab::interval_quiver::{build_interval, linear_frozen, orientation_quiver, ExtendedWord, IntervalError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot parse fixture `{0}`")]
    Syntax(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Fixture {
    /// One unfrozen vertex `u` with an arrow to one frozen vertex `f`.
    Uf,
    /// `Q°_ℓ` with the first vertex frozen.
    Linear { length: usize },
    /// `Q_ξ`, no frozen vertices.
    Dynkin {
        #[serde(rename = "type")]
        dynkin: String,
        xi: Vec<i64>,
    },
    Interval {
        #[serde(rename = "type")]
        dynkin: String,
        word: Vec<u32>,
        a: i64,
        b: i64,
    },
    Quiver { quiver: QuiverDoc },
}

/// Where the explorer should draw a vertex: rows are Dynkin vertices for interval and
/// orientation fixtures, columns run left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Place {
    pub row: i64,
    pub column: i64,
}

pub struct Built {
    pub quiver: IceQuiver,
    pub places: Vec<Place>,
}

pub fn uf_quiver() -> IceQuiver {
    let mut q = IceQuiver::empty();
    q.add_vertex(1, false);
    q.add_vertex(2, true);
    q.add_arrow("a", 0, 1, false);
    q
}

impl Fixture {
    pub fn build(&self) -> Result<Built, FixtureError> {
        let in_line = |q: IceQuiver| {
            let places = (0..q.num_vertices() as i64).map(|c| Place { row: 0, column: c }).collect();
            Built { quiver: q, places }
        };
        Ok(match self {
            Fixture::Uf => in_line(uf_quiver()),
            Fixture::Linear { length } => in_line(linear_frozen(*length)),
            Fixture::Dynkin { dynkin, xi } => {
                let rs = RootSystem::of_type(dynkin)?;
                let xi = HeightFunction::new(&rs.diagram, xi.clone())?;
                let quiver = orientation_quiver(&rs.diagram, &xi);
                let places = rs.diagram.vertices().map(|i| Place { row: i as i64, column: xi.get(i) }).collect();
                Built { quiver, places }
            }
            Fixture::Interval { dynkin, word, a, b } => {
                let rs = RootSystem::of_type(dynkin)?;
                let w = ExtendedWord::new(&rs, word)?;
                let iqp = build_interval(&rs.diagram, &w, *a, *b)?;
                let places = (*a..=*b).map(|s| Place { row: w.letter(s) as i64, column: s }).collect();
                Built { quiver: iqp.qp.quiver, places }
            }
            Fixture::Quiver { quiver } => in_line(IceQuiver::from_doc(quiver)?),
        })
    }
}

fn list<T: FromStr>(s: &str) -> Option<Vec<T>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// `uf`, `linear:4`, `dynkin:A3:0,1,2`, `interval:A3:1,2,3,2,1,2:-2:6`.
impl FromStr for Fixture {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FixtureError::Syntax(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["uf"] => Ok(Fixture::Uf),
            ["linear", n] => Ok(Fixture::Linear { length: n.parse().map_err(|_| bad())? }),
            ["dynkin", t, xi] => Ok(Fixture::Dynkin { dynkin: t.to_string(), xi: list(xi).ok_or_else(bad)? }),
            ["interval", t, word, a, b] => Ok(Fixture::Interval {
                dynkin: t.to_string(),
                word: list(word).ok_or_else(bad)?,
                a: a.parse().map_err(|_| bad())?,
                b: b.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Fixture::Uf => write!(f, "uf"),
            Fixture::Linear { length } => write!(f, "linear:{length}"),
            Fixture::Dynkin { dynkin, xi } => write!(f, "dynkin:{dynkin}:{}", join(xi)),
            Fixture::Interval { dynkin, word, a, b } => {
                let w: Vec<i64> = word.iter().map(|&x| x as i64).collect();
                write!(f, "interval:{dynkin}:{}:{a}:{b}", join(&w))
            }
            Fixture::Quiver { quiver } => write!(f, "quiver:{}v", quiver.vertices.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for s in ["uf", "linear:4", "dynkin:A3:0,1,2", "interval:A3:1,2,3,2,1,2:-2:6"] {
            let f: Fixture = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
        assert!("interval:A3:1,2".parse::<Fixture>().is_err());
        assert!("interval:A3:1,2,3:0:2".parse::<Fixture>().unwrap().build().is_err());
    }

    #[test]
    fn json_form() {
        let f: Fixture = serde_json::from_str(r#"{"kind":"interval","type":"A1","word":[1],"a":-1,"b":0}"#).unwrap();
        assert_eq!(f.to_string(), "interval:A1:1:-1:0");
        let built = f.build().unwrap();
        assert_eq!(built.places, vec![Place { row: 1, column: -1 }, Place { row: 1, column: 0 }]);
    }
}
