#![cfg_attr(not(feature = "std"), no_std)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

pub mod cp3;
pub mod error;
pub mod family;
pub mod halgebra;
pub mod hyper;
pub mod sampling;

pub use error::{GeoError, Result};
