//! Exact classification of singly generated selfadjoint matrix semigroups.
//!
//! Given a square matrix `T` over the Gaussian rationals, the semigroup
//! `S(T, T*)` consists of every finite product of `T` and its adjoint. This
//! crate decides whether every ideal of that semigroup is closed under
//! adjoints (the semigroup is *selfadjoint-ideal*, SI) and whether it is
//! simple, and checks those verdicts against two independent routes:
//!
//! * [`oracle`] enumerates the semigroup by brute force and inspects its
//!   principal ideals directly;
//! * [`word`] rewrites words in `T, T*` into scaled normal forms for rank-one
//!   generators and is validated against exact evaluation.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod rankone;
pub mod scalar;
pub mod transforms;
pub mod word;

pub use arith::{ratio, ExactMatrix, GaussianRational, Rational};
pub use error::{Error, Result};
