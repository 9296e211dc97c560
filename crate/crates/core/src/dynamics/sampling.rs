//! Initial conditions from the invariant boundary measure.
//!
//! The billiard map preserves `ds . cos(phi) dphi` on boundary-arclength x
//! reflection-angle coordinates. Positions are drawn uniformly in
//! arclength, angles with density proportional to `cos(phi)` via inverse
//! CDF: `phi = asin(2u - 1)`.
//!
//! Sampling is keyed by `(seed, index)`: every trajectory owns one RNG
//! stream, so ensembles are reproducible at any degree of parallelism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::collision::{DynamicsError, PhaseState};
use crate::table::erosion::EquivalentTable;

/// Where initial conditions are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplingMode {
    /// Whole boundary, invariant measure.
    FullMeasure,
    /// Dispersing arcs only.
    ArcStart,
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn state_at_arclength(table: &EquivalentTable, ids: &[usize], s: f64, phi: f64) -> PhaseState {
    let mut remaining = s;
    for &id in ids {
        let comp = &table.components()[id];
        let len = comp.length();
        if remaining < len {
            let point = comp.point_at_arclength(remaining);
            return PhaseState::new(table, id, point, phi)
                .expect("sampled point lies on its component");
        }
        remaining -= len;
    }
    // rounding pushed us past the end: land on the last component
    let id = *ids.last().expect("at least one component");
    let comp = &table.components()[id];
    let point = comp.point_at_arclength(comp.length() * 0.5);
    PhaseState::new(table, id, point, phi).expect("midpoint lies on its component")
}

fn sample(table: &EquivalentTable, ids: &[usize], seed: u64, index: u64) -> PhaseState {
    let total: f64 = ids
        .iter()
        .map(|&id| table.components()[id].length())
        .sum();
    let mut rng = rng_for(seed, index);
    let s = total * rng.random::<f64>();
    let phi = (2.0 * rng.random::<f64>() - 1.0).asin();
    state_at_arclength(table, ids, s, phi)
}

/// Draws a boundary state from the invariant measure; deterministic for
/// fixed `(seed, index)`.
pub fn sample_initial(table: &EquivalentTable, seed: u64, index: u64) -> PhaseState {
    let ids: Vec<usize> = (0..table.components().len()).collect();
    sample(table, &ids, seed, index)
}

/// Like [`sample_initial`], restricted to dispersing arcs.
pub fn sample_on_arcs(
    table: &EquivalentTable,
    seed: u64,
    index: u64,
) -> Result<PhaseState, DynamicsError> {
    let ids: Vec<usize> = table
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_arc())
        .map(|(i, _)| i)
        .collect();
    if ids.is_empty() {
        return Err(DynamicsError::NoArcs);
    }
    Ok(sample(table, &ids, seed, index))
}

/// Draws per `mode`; `ArcStart` fails on tables without arcs.
pub fn sample_by_mode(
    table: &EquivalentTable,
    mode: SamplingMode,
    seed: u64,
    index: u64,
) -> Result<PhaseState, DynamicsError> {
    match mode {
        SamplingMode::FullMeasure => Ok(sample_initial(table, seed, index)),
        SamplingMode::ArcStart => sample_on_arcs(table, seed, index),
    }
}
