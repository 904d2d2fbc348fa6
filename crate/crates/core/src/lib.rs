pub mod characters;
pub mod cli;
pub mod family;
pub mod group_algebra;
pub mod hurwitz;
pub mod linalg;
pub mod partition;
pub mod scalar;
pub mod symfun;
pub mod table;
pub mod tau;
pub mod verify;
