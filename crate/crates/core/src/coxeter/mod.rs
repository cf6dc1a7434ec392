//! Reflection groups: degree catalog, exact matrix enumeration, rotation
//! angles, Molien series and an on-disk element cache.

pub mod angles;
pub mod cache;
pub mod catalog;
pub mod matrix;
pub mod molien;

pub use angles::{class_table, element_angles, AngleClass, AngleResolver, ElementAngles};
pub use cache::{cache_dir, cache_load, cache_store, load_or_enumerate};
pub use catalog::{catalog_lookup, lookup_str, GroupDescriptor, GroupName};
pub use matrix::{enumerate_group, GroupElement};
pub use molien::{molien_series, Character};
