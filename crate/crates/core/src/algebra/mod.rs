pub mod cyclotomic;
pub mod laurent;
pub mod rational;
pub mod ring;
pub mod germ;
pub mod ratfunc;
pub mod matrix;
pub mod snf;
pub mod text;
