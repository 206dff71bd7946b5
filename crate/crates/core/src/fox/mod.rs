pub mod group_ring;
pub mod push;
pub mod torus;
pub mod word;
