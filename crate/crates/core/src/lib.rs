//! Exact arithmetic for Thompson's groups F, T, V and the quasi-automorphism
//! groups QF, QT, QV, tQT, tQV acting on the infinite binary tree.

pub mod actions;
pub mod error;
pub mod presentations;
pub mod quasi;
pub mod thompson;
pub mod trees;
pub mod words;

pub use actions::{Flavor, VertexTuple};
pub use error::{Error, Result};
pub use presentations::{GroupWord, Presentation};
pub use quasi::{FinitePermutation, GroupName, Parity, QElement, RawQuasiMap};
pub use thompson::{Family, Generator, TreePairDiagram, VElement};
pub use trees::Tree;
pub use words::{Vertex, Word};
