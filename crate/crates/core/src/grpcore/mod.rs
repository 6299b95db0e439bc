//! Finite groups as Cayley tables, subgroups, homomorphisms and the Quillen
//! category of elementary abelian subgroups.

pub mod constructors;
pub mod group;
pub mod grpfile;
pub mod ops;
pub mod quillen;
pub mod subgroup;

pub use group::{gcd, lcm, log_p, p_prime_part, FiniteGroup, GroupRef, ELEMENT_CAP, INTERNAL_CAP};
pub use ops::*;
pub use quillen::{is_p_central, maximal_central_elementary, QuillenData};
pub use subgroup::{small_generating_set, GroupHom, Subgroup};
