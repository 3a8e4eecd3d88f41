//! Exact integer representations of Penrose rhombus tilings.
//!
//! Tiling vertices live on the integer lattice Z⁴ ([`lattice`]); lower
//! dimensional images ([`projections`]) give 3D models and a flat 2D lattice
//! whose vertex bits are enough to rebuild the tiling ([`codec`]). All
//! geometric decisions ([`contact`]) are made by sign tests in Z[√5]
//! ([`quad`]), never by floating point.

pub mod codec;
pub mod contact;
pub mod format;
pub mod generator;
pub mod lattice;
pub mod projections;
pub mod quad;
pub mod render;
pub mod tiles;

pub use codec::{decode_bits, encode_bits, infer_edges, lift_to_lattice4, BitGrid, CodecError, FlatGraph};
pub use contact::{
    classify_contact, classify_contact_canonical, classify_flat, validate_tiling, ContactClass, ContactError,
    ValidationReport,
};
pub use generator::{generate_greedy, GenerateError};
pub use lattice::{LatticeVertex, PlanePoint, PrimedVertex};
pub use projections::{FlatPoint, MuPoint};
pub use quad::{cmp_quad, eval_float, sign_quad, QuadVal};
pub use tiles::{Edge, Tile, TileKind, TilingDocument};
