pub mod algebra;
pub mod check;
pub mod classical;
pub mod complex;
pub mod error;
pub mod fox;
pub mod twisted;

pub use algebra::cyclotomic::CycNumber;
pub use algebra::germ::{Center, Jet, Valuation};
pub use algebra::laurent::{CPoly, LaurentPoly, QPoly, ZPoly};
pub use algebra::matrix::Matrix;
pub use algebra::ratfunc::RatFunc;
pub use algebra::rational::Rat;
pub use check::Check;
pub use error::{Error, Result};
pub use fox::torus::TorusParams;
