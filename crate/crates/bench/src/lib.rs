//! Benchmark fixtures.

use colorlie::catalog::{self, CatalogEntry};
use colorlie::{bilinear_form, build_casimir, invert_form, QuadElement};

/// The catalog entries the benchmarks run on, smallest first.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        catalog::build_qn(2),
        catalog::build_z32_sl2(),
        catalog::build_osp(2, 1),
        catalog::build_osp(3, 1),
    ]
}

/// Casimirs from every invertible expected commutant.
pub fn casimirs(e: &CatalogEntry) -> Vec<QuadElement> {
    e.expected_commutants
        .iter()
        .filter_map(|(_, m)| {
            let f = bilinear_form(&e.algebra, m, &e.normalization).ok()?;
            let inv = invert_form(&e.algebra, &f).ok()?;
            Some(build_casimir(&e.algebra, &inv))
        })
        .collect()
}
