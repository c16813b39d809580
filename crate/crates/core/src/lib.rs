//! Exact computations over the Weyl algebra `A_n(Q)`: non-commutative
//! Groebner bases, annihilators of `f^s`, Bernstein-Sato polynomials,
//! holonomic localization and algebraic local cohomology.

pub mod bfunction;
pub mod cohomology;
pub mod error;
pub mod fs;
pub mod groebner;
pub mod module;
pub mod int;
pub mod localize;
pub mod order;
pub mod poly;
pub mod ring;
pub mod weyl;

pub use error::{Error, Result};
pub use fs::{apply_to_fs, FsExpr};
pub use groebner::{GbOptions, GroebnerBasis, Vector};
pub use int::Int;
pub use order::{Order, OrderKind};
pub use poly::{Coef, Poly, Rat, Term};
pub use ring::{Mono, Ring};
pub use weyl::Operator;
