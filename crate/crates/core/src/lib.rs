//! Braided vector spaces of set-theoretical type, racks and the graded
//! dimensions of their Nichols algebras, all in exact cyclotomic arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclo`]: the fields `Q(z_M)` every braiding coefficient lives in.
//! * [`exactla`]: monomial operators, sparse matrices and exact rank.
//! * [`braided`]: set-theoretic Yang-Baxter solutions, racks, monomial
//!   braidings and twist conjugation.
//! * [`nichols`]: quantum symmetrizers and graded dimensions.
//! * [`suzuki`]: the explicit braiding families (`V_abe`, `K`, `N`, `L`, `I`),
//!   their closed-form conjugated tables and the dimension verdicts.
//! * [`json`]: the JSON exchange formats.

pub mod braided;
pub mod cyclo;
pub mod error;
pub mod exactla;
pub mod json;
pub mod nichols;
pub mod suzuki;

pub use cyclo::{CycloField, CycloNum, RootExpr};
pub use error::{Error, Result};
