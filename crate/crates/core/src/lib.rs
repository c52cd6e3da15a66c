pub mod error;
pub mod fixedfield;
pub mod gf;
pub mod lincode;
pub mod linalg;
pub mod pgl2;
pub mod rfield;
pub mod selftest;
pub mod sigma;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use pgl2::{MobiusMap, ProjPoint};
pub use rfield::{Divisor, Place, Poly, RatFn};
pub use lincode::{monomial_equivalence, Budget, Equivalence, LinearCode, MonomialMap};
