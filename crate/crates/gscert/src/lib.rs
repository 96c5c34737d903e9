//! File formats, the embedded catalog and the `gscert` command line on top
//! of `gscert-core`.

pub mod cache;
pub mod catalog;
pub mod cli;
pub mod render;
pub mod spec_file;

pub use cache::{TableCache, CACHE_ENV};
pub use catalog::{catalog, reproduce_all, CatalogEntry, CatalogReport, EntryReport};
