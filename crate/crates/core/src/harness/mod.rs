pub mod census;
pub mod random;
pub mod verify;
