pub mod arrays;
pub mod error;
pub mod ffpoly;
pub mod genfunc;
pub mod laurent;
pub mod numbers;
pub mod partitions;
pub mod phi;
pub mod series;
pub mod verify;
pub mod export;
pub mod fixtures;
