//! Exact construction of finite-dimensional irreducible representations of
//! finite W-algebras (quotients of shifted Yangians for `gl_n`) in a basis
//! of Gelfand–Tsetlin type, together with machine checks of the algebraic
//! identities those representations satisfy.
//!
//! The pipeline is:
//!
//! 1. [`pyramid`]: a pyramid shape and a validated highest weight,
//! 2. [`patterns`]: the Gelfand–Tsetlin patterns indexing the basis,
//! 3. [`repbuild`]: the operator polynomials `A_r(u)`, `B_r(u)`, `C_r(u)`,
//!    the Drinfeld generator matrices and the branching vectors,
//! 4. [`verify`]: exact identity suites over the constructed matrices.
//!
//! All arithmetic is over arbitrary-precision rationals ([`exactalg`]).

pub mod error;
pub mod exactalg;
pub mod exec;
pub mod io;
pub mod patterns;
pub mod pyramid;
pub mod repbuild;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::Rational;
pub use exec::Execution;
pub use patterns::{BasisIndex, GTPattern};
pub use pyramid::{HighestWeightSpec, Pyramid};
pub use repbuild::{Direction, GeneratorTable, Representation};
pub use verify::{Suite, VerificationReport};
