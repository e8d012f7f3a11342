//! Subsets of `[1, n]` as single-word bitmasks, uniform families in colex
//! canonical form, and the text format for families.

mod colex;
mod family;
mod subset;
mod text;

pub use colex::{binomial, colex_rank, colex_unrank};
pub(crate) use colex::k_subset_masks;
pub use family::{all_k_subsets, k_subsets_of, make_family, UniformFamily};
pub use subset::{complement_within, intersection_size, Elements, Subset, MAX_GROUND};
pub use text::{format_family, parse_family};
