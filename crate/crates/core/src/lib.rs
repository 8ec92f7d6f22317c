//! Rigged configurations and highest weight paths for the 27-element
//! Kirillov-Reshetikhin crystal `B^{1,1}` of type `E6^(1)`.
//!
//! The crate provides the crystal graph and its tensor powers, the energy
//! statistic and one-dimensional sums `X`, rigged configurations and the
//! fermionic formula `M`, and the statistic-preserving bijection `Phi`
//! between the two sides, together with a harness that checks `X = M`.

pub mod bijection;
pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod energy;
pub mod error;
pub mod exec;
pub mod fermionic;
pub mod graph_lemma;
pub mod poly;
pub mod rigged;
pub mod tensor;
pub mod vacancy_table;
pub mod verify;

pub use bijection::{delta, delta_inv, gamma, phi, phi_inv, DeltaOutcome, DeltaRecord};
pub use cartan::{Node, Weight};
pub use crystal::{graph, CrystalGraph, Vertex};
pub use energy::{energy_d, local_h, one_dim_sum};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use fermionic::{enumerate_rcs, fermionic_m};
pub use poly::{qbinom, LaurentPolynomial};
pub use rigged::{cc, RiggedConfiguration};
pub use tensor::{enumerate_paths, Path};
