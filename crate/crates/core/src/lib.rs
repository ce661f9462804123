//! Exact computations in affine q-Schur algebras: multiplication by Chevalley generators, the
//! bilinear forms on each level and their stable limit, a finite-field lattice counting oracle,
//! and a Gram–Schmidt construction of canonical basis elements.

pub mod canon;
pub mod coeffring;
pub mod error;
pub mod fqoracle;
pub mod periodic;
pub mod schur;
pub mod stab;
pub mod udot;

pub use coeffring::{LaurentPoly, QSqrt, RationalFunc, Series, UPoly, Q};
pub use error::{Error, Result};
pub use periodic::{PeriodicMatrix, PeriodicVec, Tableau};
pub use schur::{AlgebraElem, GenSym, GenWord};
pub use stab::StableElem;
pub use udot::{FWord, UdotElem, Weight};
