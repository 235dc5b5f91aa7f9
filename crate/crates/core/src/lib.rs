//! A finite-poset workbench for Z-Scott topologies, the Z-way-below and
//! Z-beneath relations, and the adjunction between posets and
//! δ_Z-prealgebraic lattices.

pub mod claims;
pub mod cli;
pub mod continuity;
pub mod diagnostics;
pub mod dot;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod finp;
pub mod fixtures;
pub mod galois;
pub mod io;
pub mod lattice;
pub mod lemmas;
pub mod map;
pub mod monad;
pub mod poset;
pub mod report;
pub mod system;
pub mod topology;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use family::SetFamily;
pub use map::MonotoneMap;
pub use poset::FinitePoset;
pub use system::SubsetSystem;
