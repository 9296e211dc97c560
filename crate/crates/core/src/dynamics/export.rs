//! Event-stream export.
//!
//! One CSV row per collision, ordered by `(traj_id, i)`. Trajectories are
//! re-simulated sequentially from their `(seed, index)` streams, so the
//! output is byte-identical regardless of how any aggregate pass was
//! parallelized, and nothing is buffered beyond one row.

use std::io::{self, Write};

use super::sampling::{sample_by_mode, SamplingMode};
use super::simulate::drive;
use crate::table::erosion::EquivalentTable;

pub const EVENTS_CSV_HEADER: &str = "traj_id,i,t,x,y,component_id,kappa,phi,grazing";

/// Writes the event stream of an ensemble as CSV.
pub fn write_events_csv<W: Write>(
    w: &mut W,
    table: &EquivalentTable,
    n_trajectories: usize,
    max_bounces: usize,
    max_time: f64,
    seed: u64,
    mode: SamplingMode,
) -> io::Result<()> {
    writeln!(w, "{EVENTS_CSV_HEADER}")?;
    for traj in 0..n_trajectories {
        let s0 = sample_by_mode(table, mode, seed, traj as u64)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
        let mut row_err = None;
        drive(table, &s0, max_bounces, max_time, |ev| {
            if row_err.is_some() {
                return;
            }
            if let Err(e) = writeln!(
                w,
                "{},{},{},{},{},{},{},{},{}",
                traj,
                ev.index,
                ev.t,
                ev.point.x,
                ev.point.y,
                ev.component_id,
                ev.kappa,
                ev.phi,
                u8::from(ev.grazing)
            ) {
                row_err = Some(e);
            }
        });
        if let Some(e) = row_err {
            return Err(e);
        }
    }
    Ok(())
}
