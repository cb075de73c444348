//! Pair sources: named graphs, CSL, CFI, regular families, catalogs,
//! collision search and category assembly.

pub mod named;
pub mod regular;
pub mod cfi;
pub mod csl;
pub mod collision;
pub mod catalog;
pub mod assemble;
