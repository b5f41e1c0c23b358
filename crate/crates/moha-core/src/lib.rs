//! Core library for learning and verifying hybrid-automaton cruise controllers.
//!
//! The pipeline goes: car-following trajectories are discretized into timed
//! strings over k-means symbols ([`discretize`]), a deterministic timed
//! automaton is learned by evidence-driven state merging ([`learn`]), automaton
//! states are grouped into control modes with per-mode linear car-following
//! parameters calibrated by differential evolution ([`modes`]), and the
//! nearest-centroid symbol map is replaced exactly by bounded Voronoi cells
//! ([`voronoi`]). The resulting controller is composed with a nondeterministic
//! leader and an optional autobrake state into a hybrid-automaton network
//! ([`network`]), which can be rendered as SpaceEx-compatible model/config text
//! ([`spaceex`]), checked for collision-freedom by a template-polyhedron
//! reachability engine ([`reach`]), and exercised by a deterministic
//! closed-loop simulator with human-likeness scoring ([`sim`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); file IO and the CLI
//! live in the companion `moha-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod discretize;
pub mod error;
pub mod learn;
pub mod lp;
pub mod math;
pub mod model;
pub mod modes;
pub mod network;
pub mod reach;
pub mod rng;
pub mod sim;
pub mod spaceex;
pub mod voronoi;

pub use error::Error;
