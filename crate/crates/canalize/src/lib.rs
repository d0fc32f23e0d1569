//! Detection, generation and classification of canalizing Boolean
//! functions.
//!
//! A function is canalizing when fixing one variable to one value forces
//! the output; it is nested canalizing when that structure recurses through
//! all variables, and partially nested canalizing when the recursion stops
//! early at a constant or non-canalizing remainder. This crate carries the
//! machinery for all three classes:
//!
//! - [`bf`]: truth tables, encodings, and the structural operations
//!   (cofactor, complement, concatenation, merger, Hamming metrics);
//! - [`kmap`]: Gray-code Karnaugh maps and the structural canalization
//!   detector built on half / reflected-half decomposition;
//! - [`canalizing`]: the definitional detector, exhaustive censuses,
//!   concatenation closure rules and family generation one arity up;
//! - [`ncf`]: nested canalizing chains, merger enumeration, and the
//!   per-start-variable Hamming-distance count matrix;
//! - [`pncf`]: canalizing-depth classification and the four-variable
//!   census by depth and remainder class;
//! - [`verify`]: the self-contained verification suite the CLI and the
//!   acceptance tests run.
//!
//! The two canalization detectors are deliberately independent code paths
//! over different representations and must always agree; the sweeping
//! operations partition their ranges so results do not depend on the
//! worker count.

pub mod bf;
pub mod canalizing;
pub mod error;
pub mod kmap;
pub mod ncf;
pub mod pncf;
pub mod verify;

mod par;

pub use bf::{Assignment, Format, TruthTable};
pub use canalizing::{CanalizingTriple, GenerationStats};
pub use error::{Error, Result};
pub use kmap::KMap;
pub use ncf::{HdMatrix, NestedChain};
pub use pncf::{DepthCensus, DepthReport, RemainderClass};
