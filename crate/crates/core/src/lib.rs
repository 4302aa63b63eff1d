//! Bound states of a Dirac electron in a finite cylindrical quantum well.

pub mod cli;
pub mod error;
pub mod field;
pub mod limits;
pub mod output;
pub mod quad;
pub mod root;
pub mod solver;
pub mod special;
pub mod table1;
pub mod units;

pub use error::{Error, Result};
pub use field::{DiracField, FieldSample, Normalization, Region, SpinorSample};
pub use solver::{find_eigenstates, EigenState, WaveNumbers};
pub use units::{PhysicalConstants, Well, WellConfig};
