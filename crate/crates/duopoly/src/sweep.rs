//! Parameter sweeps over r or theta with deterministic CSV emission.

use std::f64::consts::FRAC_PI_4;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::equilibrium::{
    backward_induction, closed_form_payoffs_maximal, closed_form_payoffs_unentangled,
    EquilibriumOutcome,
};
use crate::error::{Error, Result};
use crate::fmt::f64_shortest;
use crate::game::{GameParameters, PayoffPair};
use crate::state::{AccelerationParameter, EntanglementAngle};

/// Which game coordinate the sweep walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    R,
    Theta,
}

/// An inclusive uniform grid over one coordinate, with the remaining
/// coordinates fixed.
#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    axis: SweepAxis,
    lo: f64,
    hi: f64,
    steps: usize,
    fixed: GameParameters,
}

impl SweepSpec {
    pub fn new(
        axis: SweepAxis,
        lo: f64,
        hi: f64,
        steps: usize,
        fixed: GameParameters,
    ) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::Domain(format!(
                "sweep bounds must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        if steps < 2 {
            return Err(Error::Domain(format!(
                "sweep needs at least 2 steps, got {steps}"
            )));
        }
        Ok(Self {
            axis,
            lo,
            hi,
            steps,
            fixed,
        })
    }

    pub fn axis(&self) -> SweepAxis {
        self.axis
    }

    /// Grid values `lo + i (hi - lo) / (steps - 1)`, endpoints included.
    pub fn grid(&self) -> Vec<f64> {
        let span = self.hi - self.lo;
        let denom = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| self.lo + span * i as f64 / denom)
            .collect()
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub theta: f64,
    pub r: f64,
    pub k: f64,
    pub outcome: EquilibriumOutcome,
    /// Reference payoffs from the explicit k = 1 payoff formulas, present
    /// only for the unentangled and maximally entangled curves.
    pub closed: Option<PayoffPair>,
}

fn evaluate(spec: &SweepSpec, value: f64) -> Result<SweepRow> {
    let (theta, r) = match spec.axis {
        SweepAxis::R => (spec.fixed.theta().radians(), value),
        SweepAxis::Theta => (value, spec.fixed.r().radians()),
    };
    let params = GameParameters::new(
        EntanglementAngle::new(theta)?,
        AccelerationParameter::new(r)?,
        spec.fixed.k(),
    )?;
    let outcome = backward_induction(&params)?;
    let closed = if params.k() == 1.0 {
        if theta == 0.0 {
            Some(closed_form_payoffs_unentangled(params.r()))
        } else if theta == FRAC_PI_4 {
            Some(closed_form_payoffs_maximal(params.r()))
        } else {
            None
        }
    } else {
        None
    };
    Ok(SweepRow {
        theta,
        r,
        k: params.k(),
        outcome,
        closed,
    })
}

/// Evaluates every grid point, in axis order.
///
/// `jobs > 1` fans the evaluation out over that many worker threads; every
/// computation is a pure function of the grid value, so the row values (and
/// any CSV serialized from them) are identical regardless of `jobs`.
pub fn sweep_rows(spec: &SweepSpec, jobs: usize) -> Result<Vec<SweepRow>> {
    let values = spec.grid();
    if jobs <= 1 {
        values.iter().map(|&v| evaluate(spec, v)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Solver(format!("worker pool: {e}")))?;
        pool.install(|| values.par_iter().map(|&v| evaluate(spec, v)).collect())
    }
}

pub const SWEEP_HEADER: &str =
    "theta,r,k,q1_star,q2_star,payoff_A,payoff_B,closed_payoff_A,closed_payoff_B,valid,reason";

/// Serializes rows as CSV: header, then one row per grid point.
///
/// Invalid rows keep their diagnostic q1/q2 values but leave the numeric
/// payoff columns empty; the closed-form reference columns are plain formula
/// evaluations and are always emitted when applicable.
pub fn write_sweep_csv<W: Write>(mut w: W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for row in rows {
        let o = &row.outcome;
        let (pa, pb) = if o.valid {
            (f64_shortest(o.p_a), f64_shortest(o.p_b))
        } else {
            (String::new(), String::new())
        };
        let (ca, cb) = match &row.closed {
            Some(pay) => (f64_shortest(pay.p_a), f64_shortest(pay.p_b)),
            None => (String::new(), String::new()),
        };
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            f64_shortest(row.theta),
            f64_shortest(row.r),
            f64_shortest(row.k),
            f64_shortest(o.q1_star),
            f64_shortest(o.q2_star),
            pa,
            pb,
            ca,
            cb,
            o.valid,
            o.reason,
        )?;
    }
    Ok(())
}

/// Convenience wrapper returning the CSV as a string.
pub fn sweep_csv(spec: &SweepSpec, jobs: usize) -> Result<String> {
    let rows = sweep_rows(spec, jobs)?;
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows).expect("writing to a Vec cannot fail");
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn fixed(theta: f64, r: f64, k: f64) -> GameParameters {
        GameParameters::from_radians(theta, r, k).unwrap()
    }

    #[test]
    fn grid_is_inclusive_and_uniform() {
        let spec = SweepSpec::new(SweepAxis::R, 0.0, 0.5, 6, fixed(0.0, 0.0, 1.0)).unwrap();
        let grid = spec.grid();
        assert_eq!(grid.len(), 6);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[5], 0.5);
        assert!((grid[1] - 0.1).abs() < 1e-15);
    }

    #[test]
    fn spec_validation() {
        let f = fixed(0.0, 0.0, 1.0);
        assert!(SweepSpec::new(SweepAxis::R, 0.5, 0.5, 5, f).is_err());
        assert!(SweepSpec::new(SweepAxis::R, 0.7, 0.2, 5, f).is_err());
        assert!(SweepSpec::new(SweepAxis::R, 0.0, 0.5, 1, f).is_err());
        assert!(SweepSpec::new(SweepAxis::R, 0.0, f64::INFINITY, 5, f).is_err());
    }

    #[test]
    fn out_of_domain_grid_points_are_reported() {
        let spec = SweepSpec::new(SweepAxis::R, 0.0, FRAC_PI_2, 4, fixed(0.0, 0.0, 1.0)).unwrap();
        assert!(sweep_rows(&spec, 1).is_err());
    }

    #[test]
    fn parallel_and_serial_sweeps_serialize_identically() {
        let spec = SweepSpec::new(SweepAxis::R, 0.0, 0.9, 41, fixed(0.0, 0.0, 1.0)).unwrap();
        let serial = sweep_csv(&spec, 1).unwrap();
        let parallel = sweep_csv(&spec, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn invalid_rows_have_empty_payoff_columns_and_diagnostics() {
        let spec = SweepSpec::new(SweepAxis::R, 0.78, 0.8, 3, fixed(0.0, 0.0, 1.0)).unwrap();
        let csv = sweep_csv(&spec, 1).unwrap();
        let last = csv.lines().last().unwrap();
        let cols: Vec<&str> = last.split(',').collect();
        assert_eq!(cols.len(), 11);
        assert!(
            cols[3].parse::<f64>().unwrap() < 0.0,
            "diagnostic q1: {}",
            cols[3]
        );
        assert!(cols[5].is_empty() && cols[6].is_empty(), "{last}");
        assert!(!cols[7].is_empty() && !cols[8].is_empty(), "{last}");
        assert_eq!(cols[9], "false");
        assert_eq!(cols[10], "LEADER_QUANTITY_NEGATIVE");
    }

    #[test]
    fn closed_form_columns_appear_only_on_reference_curves() {
        // A theta grid hitting 0, pi/4, and two generic angles.
        let spec =
            SweepSpec::new(SweepAxis::Theta, 0.0, FRAC_PI_2, 5, fixed(0.0, 0.3, 1.0)).unwrap();
        let rows = sweep_rows(&spec, 1).unwrap();
        assert!(rows[0].closed.is_some());
        assert!(rows[1].closed.is_none());
        assert!(
            rows[2].closed.is_some(),
            "theta = pi/4 carries the reference curve"
        );
        assert!(rows[3].closed.is_none());
        assert!(rows[4].closed.is_none());

        let spec = SweepSpec::new(SweepAxis::R, 0.0, 0.5, 3, fixed(0.0, 0.0, 2.0)).unwrap();
        let rows = sweep_rows(&spec, 1).unwrap();
        assert!(rows.iter().all(|row| row.closed.is_none()));
    }

    #[test]
    fn rows_agree_with_the_reference_curves() {
        let spec = SweepSpec::new(SweepAxis::R, 0.0, 0.7, 15, fixed(FRAC_PI_4, 0.0, 1.0)).unwrap();
        for row in sweep_rows(&spec, 1).unwrap() {
            let closed = row.closed.expect("maximally entangled reference curve");
            assert!((row.outcome.p_a - closed.p_a).abs() < 1e-8);
            assert!((row.outcome.p_b - closed.p_b).abs() < 1e-8);
        }
    }
}
