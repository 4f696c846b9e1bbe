//! Instances shared by the criterion benches.

use sssp_core::generators::{gen_bad_gor, gen_spgrid, gen_sprand, gen_star, RandOpts};
use sssp_core::Graph;

/// Named benchmark instances, small enough for criterion's repeated runs.
pub fn instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("star-1e3", gen_star(1_000).unwrap()),
        ("bad-gor-1e3", gen_bad_gor(1_000).unwrap()),
        ("s-grid-64", gen_spgrid(64, 64, 0).unwrap()),
        ("s-rand-2^12", gen_sprand(1 << 12, 1 << 14, 0, RandOpts::default()).unwrap()),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn instances_build() {
        for (name, g) in super::instances() {
            assert!(g.m() > 0, "{name}");
        }
    }
}
