//! Outer automorphism actions on mod-p cohomology of finite p-groups.
//!
//! The library resolves the trivial module over F_p[P], computes the action of
//! Out(P) on cohomology, splits it along the Quillen category of elementary
//! abelian subgroups containing a fixed central subgroup, and decomposes each
//! stratum into Out(P)-composition factors with a MeatAxe.

pub mod autom;
pub mod cohres;
pub mod conjcheck;
pub mod dickson;
pub mod error;
pub mod fplin;
pub mod grpcore;
pub mod modrep;
pub mod shell;
pub mod stratify;

pub use error::{Error, Result};
pub use fplin::FpMatrix;
