//! Panelled-web 4-manifolds: symbolic handle decompositions with exact
//! homology, and the Kleinian groups behind them with limit-set sampling
//! and dimension estimates.

// `!(x > 0.0)` is used on purpose so NaN lands in the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod families;
pub mod handlebody;
pub mod intlinalg;
pub mod kleinian;
pub mod moebius;
pub mod word;
