pub mod artin;
pub mod braid;
pub mod codec;
pub mod error;
pub mod invariants;
pub mod limits;
pub mod moves;
pub mod poly;
pub mod pure;
pub mod tables;
pub mod weave;
