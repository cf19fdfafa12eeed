//! Exact-arithmetic toolkit for the combinatorics of symmetric-variety
//! embeddings (restricted roots, colored fans, homogeneity tests) and the
//! octonion / Jordan-algebra geometry behind the exceptional cases.

pub mod scalar;
pub mod mat;
pub mod sample;
pub mod comp_alg;
pub mod jordan;
pub mod root_data;
pub mod restricted;
pub mod colored_fan;
pub mod g2_geom;
pub mod spinor;
pub mod classification;
pub mod report;

pub use mat::Mat;
pub use scalar::Scalar;
