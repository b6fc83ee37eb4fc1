pub mod braid;
pub mod classifier;
pub mod cli;
pub mod diagram;
pub mod dsl;
pub mod error;
pub mod free;
pub mod functor;
pub mod garside;
pub mod perm;
pub mod ualg;

pub use braid::{block_braid, braid_equal, normalize_braid, BraidWord, Letter};
pub use error::{Error, Result};
pub use free::{Content, Flavor, FreeMor, FreeMor2, GenSet, Tuple, Tuple2};
pub use garside::BraidNormalForm;
pub use perm::Permutation;
