//! Meander permutations and the cell complexes they encode: signed zero
//! numbers, bipolar cell complexes with 3-cell template decorations, the
//! Hamiltonian path pairs that turn templates into permutations, and the
//! octahedron enumeration.

pub mod analysis;
pub mod complex;
pub mod enumeration;
pub mod error;
pub mod meander;
pub mod pairs;
pub mod perm;

pub use analysis::{HemisphereTemplate, Sign, SignedZero, ZeroMatrix};
pub use complex::{CellId, Complex, Decoration, FaceCorners, Template};
pub use error::{Error, Result};
pub use meander::{Meander, Pole, Report, Serpent};
pub use pairs::{
    pair_report, scoop, sigma_from_pair, sz_pair, szs_pair, zs_pair, PathPair, Side, Style,
};
pub use perm::{orbit_key, trivial_equivalence_orbit, Permutation};
