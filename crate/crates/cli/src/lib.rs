//! Command-line and HTTP front ends for the Λ-cluster laboratory.

pub mod api;
pub mod commands;
pub mod fixture;
pub mod session;
pub mod verify;
