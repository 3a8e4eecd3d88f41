//! Fixtures shared by the benchmarks.

use penrose_core::generator::default_seed;
use penrose_core::{generate_greedy, TileKind, TilingDocument};

/// Greedy tiling of `n` tiles grown from the wide seed.
pub fn greedy(n: usize) -> TilingDocument {
    generate_greedy(n, default_seed(TileKind::Wide)).expect("greedy growth from the default seed")
}
