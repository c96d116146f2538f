//! Exact symbolic computation on the Manin quantum plane `xy = q^-1 yx`.
//!
//! Coefficients live in the rational function field `Q(q)` ([`coeff`]),
//! q-combinatorial building blocks are in [`qcomb`], the normal-ordered
//! algebra with truncated products and the q-exponential is in [`plane`],
//! and [`identities`] checks the direct and reversed q-exponential
//! functional relations together with their supporting identities.
//! [`expr`] parses a small expression language for plane elements and
//! [`cli`] drives everything from the command line.

pub mod cli;
pub mod coeff;
mod error;
pub mod expr;
pub mod identities;
pub mod plane;
pub mod qcomb;

pub use coeff::{LaurentPoly, RatFun, RationalScalar};
pub use error::{Error, Result};
pub use identities::{run_suite, Check, Discrepancy, IdentityId, IdentityReport};
pub use plane::{normal_order_word, pe_mul, pe_pow, q_exp, PlaneElement, TruncationOrder};
