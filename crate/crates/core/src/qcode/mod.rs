//! Quaternary linear and cyclic codes: generator matrices, exhaustive
//! distance and weight enumeration, MacWilliams transforms, Plotkin sums.

mod engine;
mod enumerator;
mod linear;
mod packed;

pub use engine::{
    default_partitions, min_distance, weight_enumerator, Engine, DEFAULT_DISTANCE_EXP, DEFAULT_ENUMERATOR_EXP,
    PARTITIONS_ENV,
};
pub use enumerator::{is_formally_self_dual, krawtchouk_table, macwilliams_transform, WeightEnumerator};
pub use linear::{plotkin_sum, repeated_root_double, LinearCodeQ, QCyclicCode};
pub use packed::{PackedWord, MAX_LENGTH};
