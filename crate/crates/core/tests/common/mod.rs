#![allow(dead_code)]

use sssp_core::{Arc, Graph, SplitMix64};

/// Random instance with `n` in `[2, max_n]`, `m` in `[n, 4n]` and lengths
/// uniform in `[lo, hi]`. Self-loops and parallel arcs are allowed.
pub fn random_graph(seed: u64, max_n: i64, lo: i64, hi: i64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = rng.uniform_int(2, max_n).unwrap() as usize;
    let m = rng.uniform_int(n as i64, 4 * n as i64).unwrap() as usize;
    let arcs = (0..m)
        .map(|_| {
            let u = rng.uniform_int(0, n as i64 - 1).unwrap() as usize;
            let v = rng.uniform_int(0, n as i64 - 1).unwrap() as usize;
            Arc::new(u, v, rng.uniform_int(lo, hi).unwrap())
        })
        .collect();
    Graph::new(n, arcs, 0).unwrap()
}

/// Random potential in `[0, p]` per vertex.
pub fn random_potential(seed: u64, n: usize, p: i64) -> Vec<i64> {
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    (0..n).map(|_| rng.uniform_int(0, p).unwrap()).collect()
}
