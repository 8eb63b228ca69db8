pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod fock;
pub mod grading;
pub mod ops;
pub mod scalar;
pub mod verify;
