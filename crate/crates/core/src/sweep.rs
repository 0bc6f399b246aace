//! Batch drivers for the symbolic identity sweeps. Grid cells are
//! independent pure computations; with the `parallel` feature they fan
//! out over rayon, and results are always assembled in grid order so
//! output is deterministic either way.

use num_bigint::BigInt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::chern::{
    verify_multiplicity_factorization, verify_power_sum_vanishing, verify_segre_closed_form,
    verify_splitting_identity, verify_vandermonde_sum,
};
use crate::degeneration::{report, DegenError, DegenerationReport};

/// One grid cell of an identity sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCell<P, R> {
    pub params: P,
    pub result: R,
}

pub(crate) fn map_cells<I, T, F>(cells: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        cells.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cells.into_iter().map(f).collect()
    }
}

fn map_cells_seq<I, T, F>(cells: Vec<I>, f: F) -> Vec<T>
where
    F: Fn(I) -> T,
{
    cells.into_iter().map(f).collect()
}

pub fn splitting_identity_cells(max_sum: u32) -> Vec<(u32, u32)> {
    let mut cells = Vec::new();
    for k in 1..max_sum {
        for l in 1..=(max_sum - k) {
            cells.push((k, l));
        }
    }
    cells
}

/// Sweeps the top-class splitting identity over all `k, l >= 1` with
/// `k + l <= max_sum`.
pub fn splitting_identity_sweep(max_sum: u32) -> Vec<SweepCell<(u32, u32), bool>> {
    map_cells(splitting_identity_cells(max_sum), |(k, l)| SweepCell {
        params: (k, l),
        result: verify_splitting_identity(k, l),
    })
}

/// Single-threaded variant, kept callable for benchmark comparison.
pub fn splitting_identity_sweep_seq(max_sum: u32) -> Vec<SweepCell<(u32, u32), bool>> {
    map_cells_seq(splitting_identity_cells(max_sum), |(k, l)| SweepCell {
        params: (k, l),
        result: verify_splitting_identity(k, l),
    })
}

/// Sweeps the degeneracy-locus multiplicity factorization over the
/// rectangle `1 <= k <= max_k`, `1 <= l <= max_l`. Each result carries
/// the multiplier recovered by exact division.
pub fn multiplicity_sweep(
    max_k: u32,
    max_l: u32,
) -> Vec<SweepCell<(u32, u32), (bool, BigInt)>> {
    let mut cells = Vec::new();
    for k in 1..=max_k {
        for l in 1..=max_l {
            cells.push((k, l));
        }
    }
    map_cells(cells, |(k, l)| SweepCell {
        params: (k, l),
        result: verify_multiplicity_factorization(k, l),
    })
}

/// Sweeps the Segre-coefficient closed form for `1 <= l <= max_l`,
/// checking orders up to `l + 4` in cleared form.
pub fn segre_closed_form_sweep(max_l: u32) -> Vec<SweepCell<u32, bool>> {
    map_cells((1..=max_l).collect(), |l| SweepCell {
        params: l,
        result: verify_segre_closed_form(l, l + 4),
    })
}

pub fn vandermonde_sum_sweep(max_l: u32) -> Vec<SweepCell<u32, bool>> {
    map_cells((1..=max_l).collect(), |l| SweepCell {
        params: l,
        result: verify_vandermonde_sum(l),
    })
}

pub fn power_sum_sweep(max_l: u32) -> Vec<SweepCell<u32, bool>> {
    map_cells((1..=max_l).collect(), |l| SweepCell {
        params: l,
        result: verify_power_sum_vanishing(l),
    })
}

/// All degeneration reports for `2 <= n <= max_n`, `d <= 2n - 3`,
/// `1 <= k < d`.
pub fn report_grid(max_n: u32) -> Result<Vec<DegenerationReport>, DegenError> {
    let mut cells = Vec::new();
    for n in 2..=max_n {
        for d in 2..=(2 * n - 3) {
            for k in 1..d {
                cells.push((n, d, k));
            }
        }
    }
    map_cells(cells, |(n, d, k)| report(n, d, k))
        .into_iter()
        .collect()
}
