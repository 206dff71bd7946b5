pub mod chain;
pub mod duality;
pub mod representation;
