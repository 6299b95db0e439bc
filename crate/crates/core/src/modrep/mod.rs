//! Modular representations: modules as generator matrices, the MeatAxe,
//! and catalogs of simple modules.

pub mod catalog;
pub mod meataxe;
pub mod rep;

pub use catalog::{hom_dim, hom_space, irreducibles_isomorphic, IrrCatalog};
pub use meataxe::{MeatAxe, Split};
pub use rep::*;
