//! Finite fields: `F_q` over `F_p`, and `k` over `F_q`.

pub mod fq;
pub mod fqpoly;
pub mod linalg;
pub mod tower;

pub use fq::{Fq, FqField};
pub use tower::{FieldTower, KElem};
