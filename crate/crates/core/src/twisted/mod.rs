pub mod module;
pub mod pairing;
pub mod setting;
pub mod sweep;
pub mod report;
