//! Integer lattices, partial characters and lattice ideals.

pub mod character;
pub mod intmat;
mod subgroup;
pub mod toric;

pub use character::{
    character_of, extend_character, lattice_ideal, lattice_primary_decomposition, PartialCharacter,
};
pub use intmat::{hermite, kernel, smith_normal_form, Hermite, IntMatrix, SmithForm};
pub use subgroup::{Lattice, Saturations};
pub use toric::{fibers, is_positive, toric_ideal};

/// `L₁ ∩ L₂`.
pub fn lattice_intersect(a: &Lattice, b: &Lattice) -> crate::Result<Lattice> {
    a.intersect(b)
}
