//! Exact computations for Λ-cluster algebras attached to ice quivers with potential.

pub mod compatible_pair;
pub mod ice_quiver;
pub mod qp_mutation;
pub mod seed_engine;
pub mod coxeter;
pub mod dynkin_ar;
pub mod interval_quiver;
pub mod green_seq;
pub mod ginzburg_ext;
