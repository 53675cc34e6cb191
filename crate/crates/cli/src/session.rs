//! A stateful mutation session: a stack of seeds over one fixture, with undo.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use lambda_lab::compatible_pair::{IntMatrix, VertexOrder};
use lambda_lab::green_seq::{Color, GreenState};
use lambda_lab::ice_quiver::{IceQuiver, QuiverDoc, VertexId};
use lambda_lab::seed_engine::{LambdaSeed, SeedError, TermJson};

use crate::fixture::{Fixture, FixtureError, Place};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("vertex {0} cannot be mutated: {1}")]
    IllegalVertex(VertexId, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("nothing to undo")]
    EmptyUndoStack,
    #[error("no state at depth {0}")]
    UnknownDepth(usize),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Seed(#[from] SeedError),
}

impl SessionError {
    pub fn code(&self) -> &'static str {
        match self {
            SessionError::IllegalVertex(..) => "IllegalVertex",
            SessionError::UnknownVertex(_) => "UnknownVertex",
            SessionError::EmptyUndoStack => "EmptyUndoStack",
            SessionError::UnknownDepth(_) => "UnknownDepth",
            SessionError::Fixture(_) => "BadFixture",
            SessionError::Seed(_) => "SeedError",
        }
    }

    pub fn is_not_found(&self) -> bool {
        matches!(self, SessionError::UnknownVertex(_) | SessionError::UnknownDepth(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "lowercase")]
pub enum Action {
    Build { fixture: Fixture },
    Mutate { vertex: VertexId },
    Undo,
    Reset,
}

#[derive(Clone, Debug)]
struct Frame {
    quiver: IceQuiver,
    seed: LambdaSeed,
    framed: GreenState,
    trail: Vec<VertexId>,
}

#[derive(Clone, Debug)]
pub struct Session {
    pub id: String,
    fixture: Fixture,
    places: Vec<Place>,
    order: VertexOrder,
    /// Index of each unfrozen vertex inside the principal part.
    principal: Vec<Option<usize>>,
    stack: Vec<Frame>,
    version: u64,
    log: Vec<Action>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexState {
    pub id: VertexId,
    pub frozen: bool,
    pub place: Place,
    pub color: Option<Color>,
    /// g-vector with respect to the initial seed, in matrix order.
    pub g: Vec<i64>,
    pub variable: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrices {
    /// Vertex ids labelling rows and columns.
    pub order: Vec<VertexId>,
    pub bhat: IntMatrix,
    pub btilde: IntMatrix,
    pub lambda: IntMatrix,
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDoc {
    pub id: String,
    pub version: u64,
    pub depth: usize,
    pub fixture: Fixture,
    pub quiver: QuiverDoc,
    pub vertices: Vec<VertexState>,
    pub matrices: Matrices,
    pub trail: Vec<VertexId>,
    pub all_red: bool,
    /// Hash of everything above except `id` and `version`.
    pub hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub u: VertexId,
    pub v: VertexId,
    pub u_depth: usize,
    pub v_depth: usize,
    pub tropical_uv: i64,
    pub tropical_vu: i64,
    pub f_invariant: i64,
    /// Half the F-invariant.
    pub d_invariant: i64,
    /// `λ_{uv}` of the current seed, present when both variables belong to it.
    pub lambda: Option<i64>,
}

fn fresh_id() -> String {
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(0);
    format!("{:x}", nanos as u64)
}

impl Session {
    pub fn new(fixture: Fixture) -> Result<Self, SessionError> {
        let mut s = Session::from_fixture(fixture.clone())?;
        s.log.push(Action::Build { fixture });
        Ok(s)
    }

    fn from_fixture(fixture: Fixture) -> Result<Self, SessionError> {
        let built = fixture.build()?;
        let q = built.quiver;
        let (seed, order) = LambdaSeed::from_quiver(&q)?;
        let principal_q = q.forget_frozen();
        let principal = (0..q.num_vertices())
            .map(|v| if q.is_frozen(v) { None } else { principal_q.index_of(q.id(v)) })
            .collect();
        let framed = GreenState::new(&principal_q).expect("principal part has no frozen vertices");
        let frame = Frame { quiver: q, seed, framed, trail: Vec::new() };
        Ok(Session {
            id: fresh_id(),
            fixture,
            places: built.places,
            order,
            principal,
            stack: vec![frame],
            version: 0,
            log: Vec::new(),
        })
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn depth(&self) -> usize {
        self.stack.len() - 1
    }

    pub fn log(&self) -> &[Action] {
        &self.log
    }

    pub fn quiver(&self) -> &IceQuiver {
        &self.top().quiver
    }

    pub fn seed(&self) -> &LambdaSeed {
        &self.top().seed
    }

    fn top(&self) -> &Frame {
        self.stack.last().expect("stack never empty")
    }

    fn vertex(&self, id: &VertexId) -> Result<usize, SessionError> {
        self.quiver().index_of(id).ok_or_else(|| SessionError::UnknownVertex(id.clone()))
    }

    pub fn apply(&mut self, action: Action) -> Result<StateDoc, SessionError> {
        match &action {
            Action::Build { fixture } => {
                let fresh = Session::from_fixture(fixture.clone())?;
                let (id, version) = (self.id.clone(), self.version);
                *self = fresh;
                self.id = id;
                self.version = version + 1;
                self.log.clear();
            }
            Action::Mutate { vertex } => {
                let v = self.vertex(vertex)?;
                let top = self.top();
                if top.quiver.is_frozen(v) {
                    return Err(SessionError::IllegalVertex(vertex.clone(), "frozen".into()));
                }
                let illegal = |e: &dyn std::fmt::Display| SessionError::IllegalVertex(vertex.clone(), e.to_string());
                let quiver = top.quiver.mutate_fz(v).map_err(|e| illegal(&e))?;
                let pos = self.order.position(v).expect("every vertex has a position");
                let seed = top.seed.mutate(pos)?;
                let mut framed = top.framed.clone();
                framed.mutate(self.principal[v].expect("unfrozen")).map_err(|e| illegal(&e))?;
                let mut trail = top.trail.clone();
                trail.push(vertex.clone());
                self.stack.push(Frame { quiver, seed, framed, trail });
                self.version += 1;
            }
            Action::Undo => {
                if self.stack.len() == 1 {
                    return Err(SessionError::EmptyUndoStack);
                }
                self.stack.pop();
                self.version += 1;
            }
            Action::Reset => {
                self.stack.truncate(1);
                self.version += 1;
            }
        }
        self.log.push(action);
        Ok(self.state())
    }

    pub fn matrices(&self) -> Matrices {
        let seed = self.seed();
        let q = self.quiver();
        Matrices {
            order: self.order.order.iter().map(|&v| q.id(v).clone()).collect(),
            bhat: seed.bhat.clone(),
            btilde: seed.pair.btilde.clone(),
            lambda: seed.pair.lambda.clone(),
            d: seed.pair.d,
        }
    }

    pub fn state(&self) -> StateDoc {
        let top = self.top();
        let root = &self.stack[0].seed;
        let q = &top.quiver;
        let vertices = (0..q.num_vertices())
            .map(|v| {
                let pos = self.order.position(v).expect("every vertex has a position");
                let x = &top.seed.cluster[pos];
                let g = root.decompose(x).map(|d| d.g).unwrap_or_default();
                VertexState {
                    id: q.id(v).clone(),
                    frozen: q.is_frozen(v),
                    place: self.places[v],
                    color: self.principal[v].map(|p| top.framed.color(p)),
                    g,
                    variable: x.to_json(),
                }
            })
            .collect();
        let mut doc = StateDoc {
            id: self.id.clone(),
            version: self.version,
            depth: self.depth(),
            fixture: self.fixture.clone(),
            quiver: q.to_doc(),
            vertices,
            matrices: self.matrices(),
            trail: top.trail.clone(),
            all_red: top.framed.all_red(),
            hash: String::new(),
        };
        doc.hash = state_hash(&doc);
        doc
    }

    /// Tropical and F-invariants of the variable at `u` in the seed at depth `du` and the
    /// variable at `v` in the seed at depth `dv`, both read in the initial seed.
    pub fn invariants(&self, u: &VertexId, v: &VertexId, du: Option<usize>, dv: Option<usize>) -> Result<Invariants, SessionError> {
        let (du, dv) = (du.unwrap_or(self.depth()), dv.unwrap_or(self.depth()));
        let frame = |d: usize| self.stack.get(d).ok_or(SessionError::UnknownDepth(d));
        let (fu, fv) = (frame(du)?, frame(dv)?);
        let iu = fu.quiver.index_of(u).ok_or_else(|| SessionError::UnknownVertex(u.clone()))?;
        let iv = fv.quiver.index_of(v).ok_or_else(|| SessionError::UnknownVertex(v.clone()))?;
        let (pu, pv) = (self.order.position(iu).expect("placed"), self.order.position(iv).expect("placed"));
        let (x, y) = (&fu.seed.cluster[pu], &fv.seed.cluster[pv]);
        let root = &self.stack[0].seed;
        let tropical_uv = root.tropical_invariant(x, y)?;
        let tropical_vu = root.tropical_invariant(y, x)?;
        let f_invariant = root.f_invariant(x, y)?;
        let lambda = (du == self.depth() && dv == self.depth()).then(|| self.seed().pair.lambda.get(pu, pv));
        Ok(Invariants {
            u: u.clone(),
            v: v.clone(),
            u_depth: du,
            v_depth: dv,
            tropical_uv,
            tropical_vu,
            f_invariant,
            d_invariant: f_invariant / 2,
            lambda,
        })
    }
}

/// Hash of the board alone; depth and trail are history, so two clicks on one vertex restore it.
fn state_hash(doc: &StateDoc) -> String {
    let mut h = DefaultHasher::new();
    let body = (&doc.fixture, &doc.quiver, &doc.vertices, &doc.matrices);
    serde_json::to_string(&body).expect("state serializes").hash(&mut h);
    format!("{:016x}", h.finish())
}

/// Replays an action log from scratch.
pub fn replay(log: &[Action]) -> Result<Session, SessionError> {
    let Some(Action::Build { fixture }) = log.first() else {
        return Err(SessionError::Fixture(FixtureError::Syntax("log must start with build".into())));
    };
    let mut s = Session::new(fixture.clone())?;
    for a in &log[1..] {
        s.apply(a.clone())?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uf() -> Session {
        Session::new(Fixture::Uf).unwrap()
    }

    #[test]
    fn mutate_then_undo_is_byte_identical() {
        let mut s = uf();
        let before = serde_json::to_string(&s.state().vertices).unwrap();
        let h0 = s.state().hash;
        s.apply(Action::Mutate { vertex: 1.into() }).unwrap();
        assert_ne!(s.state().hash, h0);
        s.apply(Action::Undo).unwrap();
        assert_eq!(serde_json::to_string(&s.state().vertices).unwrap(), before);
        assert_eq!(s.state().hash, h0);
        assert_eq!(s.version(), 2);
    }

    #[test]
    fn frozen_and_empty_stack_errors() {
        let mut s = uf();
        assert!(matches!(s.apply(Action::Mutate { vertex: 2.into() }), Err(SessionError::IllegalVertex(..))));
        assert!(matches!(s.apply(Action::Mutate { vertex: 7.into() }), Err(SessionError::UnknownVertex(_))));
        assert!(matches!(s.apply(Action::Undo), Err(SessionError::EmptyUndoStack)));
        assert_eq!(s.version(), 0);
    }

    #[test]
    fn exchange_pair_invariants() {
        let mut s = uf();
        let st = s.apply(Action::Mutate { vertex: 1.into() }).unwrap();
        assert_eq!(st.vertices[0].g, vec![-1, 1]);
        assert_eq!(st.vertices[0].color, Some(Color::Red));
        let inv = s.invariants(&1.into(), &1.into(), None, Some(0)).unwrap();
        assert_eq!(inv.f_invariant, 2);
        assert_eq!(inv.lambda, None);
        let inv = s.invariants(&1.into(), &2.into(), None, None).unwrap();
        assert_eq!((inv.tropical_uv, inv.f_invariant, inv.lambda), (-2, 0, Some(-2)));
    }

    #[test]
    fn reset_and_replay() {
        let mut s = Session::new("interval:A3:1,2,3,2,1,2:-2:6".parse().unwrap()).unwrap();
        for v in [2i64, 3, 2, 6] {
            s.apply(Action::Mutate { vertex: v.into() }).unwrap();
        }
        s.apply(Action::Undo).unwrap();
        let again = replay(s.log()).unwrap();
        assert_eq!(again.state().hash, s.state().hash);
        let h = s.state().hash;
        let st = s.apply(Action::Reset).unwrap();
        assert_eq!(st.depth, 0);
        assert_ne!(st.hash, h);
        assert_eq!(st.hash, Session::new(s.fixture.clone()).unwrap().state().hash);
    }
}
