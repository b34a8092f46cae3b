//! Combinatorics of partitions: strips, the type C Pieri relation,
//! k-horizontal strips and (bi)tableaux.

pub mod kstrip;
pub mod strips;
pub mod tableaux;

pub use kstrip::{is_k_horizontal_strip, n_strip, n_strip_oracle, n_strip_oracle_with, pieri_relation, pieri_targets, strip_threshold};
pub use strips::{components, rim, strip_type, Adjacency, StripType};
pub use tableaux::{count_standard_k_tableaux, enumerate_k_bitableaux, enumerate_k_tableaux, KBitableau, KTableau, StripLattice};
