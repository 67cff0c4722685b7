pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod semigroup;
pub mod verify;
