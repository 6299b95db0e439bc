//! Minimal resolutions, induced maps on cohomology, Künneth assembly and
//! comodule primitives.

pub mod cache;
pub mod chainmap;
pub mod kunneth;
pub mod resolution;

pub use cache::{group_hash, ResolutionCache};
pub use chainmap::{
    aut_action_on_hd, induced_map, induced_maps, induced_maps_perturbed, lift_chain_map,
    out_module, CohMap, PushedResolution, SourceComplex,
};
pub use kunneth::{
    coaction, kunneth_resolution, primitives, primitives_for_subgroup, Primitives, TensorSource,
};
pub use resolution::{Resolution, DEFAULT_DIM_BUDGET};
