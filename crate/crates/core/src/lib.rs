//! Perfect crystals of the classical affine families, their path
//! realizations of highest-weight crystals, and Demazure crystals built by
//! `f`-closure with condition checks and brute-force oracles.
//!
//! The concrete crystals are [`coord::CoordinateCrystal`] (types `B_n^(1)`,
//! `C_n^(1)`, `D_n^(1)`, `A_{2n-1}^(2)`, `A_{2n}^(2)`, `D_{n+1}^(2)`) and
//! [`tableau::TableauCrystal`] (type `A_n^(1)`). Everything else is generic
//! over the [`crystal::Crystal`] trait.

pub mod cartan;
pub mod coord;
pub mod crystal;
pub mod demazure;
pub mod error;
pub mod exec;
pub mod graph;
pub mod path;
pub mod perfect;
pub mod schedule;
pub mod tableau;

pub use cartan::{AffineType, ClassicalWeight, Sigma};
pub use coord::{CoordElement, CoordinateCrystal, Slot};
pub use crystal::{Crystal, Op};
pub use error::{CrystalError, Result};
pub use exec::{Budget, Exec};
pub use path::{Path, PathSpace};
pub use schedule::Schedule;
pub use tableau::{RectTableau, TableauCrystal};
