use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::DEFAULT_CELL_CAP;
use crate::lattice::{Vertex, WeightParams, Window};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub params: WeightParams,
    pub seed: u64,
    /// Enumeration cap per pair.
    pub cap: u64,
    /// Pairs within `[-r, r]^2` are taken exhaustively.
    pub exhaustive_radius: i64,
    /// Seeded pairs drawn beyond the exhaustive set.
    pub random_pairs: usize,
    /// Largest `Z^2` separation of seeded pairs.
    pub max_separation: u64,
    /// Cap on window cells for a single distance field.
    pub cell_cap: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            params: WeightParams::new(3, 1, 2).expect("valid default parameters"),
            seed: 0x6765_6f73,
            cap: 100_000,
            exhaustive_radius: 27,
            random_pairs: 500,
            max_separation: 200,
            cell_cap: DEFAULT_CELL_CAP,
        }
    }
}

impl CheckConfig {
    /// Small instances for smoke tests and interactive use.
    pub fn quick() -> Self {
        CheckConfig { cap: 10_000, exhaustive_radius: 6, random_pairs: 40, max_separation: 40, ..Self::default() }
    }

    /// A generator for one named check; distinct checks draw independent streams.
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in stream.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

/// Unordered pairs `u <= v` of the given vertices.
pub fn all_pairs(vertices: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::with_capacity(vertices.len() * (vertices.len() + 1) / 2);
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i..] {
            out.push((u, v));
        }
    }
    out
}

/// `count` pairs with both coordinates of each endpoint uniform in `[-r, r]`.
pub fn random_pairs_in_box<R: Rng>(rng: &mut R, r: i64, count: usize) -> Vec<(Vertex, Vertex)> {
    (0..count)
        .map(|_| {
            let u = Vertex::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
            let v = Vertex::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
            (u, v)
        })
        .collect()
}

/// A pair at `Z^2`-separation exactly `sep`, with `u` uniform in `region`.
pub fn random_pair_at_separation<R: Rng>(rng: &mut R, region: &Window, sep: u64) -> (Vertex, Vertex) {
    let u = Vertex::new(rng.gen_range(region.x_min..=region.x_max), rng.gen_range(region.y_min..=region.y_max));
    let sep = sep as i64;
    let dx = rng.gen_range(0..=sep);
    let dy = sep - dx;
    let sx = if rng.gen_bool(0.5) { 1 } else { -1 };
    let sy = if rng.gen_bool(0.5) { 1 } else { -1 };
    (u, Vertex::new(u.x + sx * dx, u.y + sy * dy))
}
