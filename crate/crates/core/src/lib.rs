//! Exact representation theory for the imprimitive reflection groups
//! `G(de,e,n)`: polynomial realizations of their irreducible representations,
//! isotypic projectors, the canonical filtration of the symmetric-group
//! direct image, and residue data of rank-one logarithmic forms.
//!
//! Everything is computed in exact arithmetic over cyclotomic fields.

pub mod error;
pub mod exactalg;
pub mod filtration;
pub mod groups;
pub mod linalg;
pub mod partitions;
pub mod repr;
pub mod residues;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{CycNum, Monomial, Poly, Rat, UPoly};
pub use groups::{GroupElement, GroupSpec, Subgroup};
pub use partitions::{Partition, SetPartition};
