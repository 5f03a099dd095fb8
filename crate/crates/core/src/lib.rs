//! Hamiltonian paths of complete graphs with prescribed edge lengths, for
//! lists built from the lengths 1, 2 and an even `t`.

pub mod conditions;
pub mod construct;
pub mod error;
pub mod list;
pub mod oracle;
pub mod pathexpr;
pub mod realization;
pub mod transforms;

pub use conditions::{condition_b, linear_feasibility, ConditionB, Witness};
pub use error::{Error, Result};
pub use list::LengthList;
pub use realization::{
    measure, special_flags, verify, Branch, Extendability, Kind, Realization, SpecialFlags,
    VerificationReport, Vertex,
};
