//! Symmetric-group machinery: permutations, cycle types, class sizes,
//! irreducible characters and Littlewood-Richardson coefficients.

mod characters;
mod lr;
mod permutation;

pub use characters::{character, character_table, class_sign, class_size, CharacterTable};
pub use lr::{lr_coefficient, pieri_coefficient, StripKind};
pub use permutation::{permutations, Permutation, Permutations};

pub(crate) use permutation::cycle_type_of;
