//! Construction of the two-firm quantum state when firm B's frame is
//! uniformly accelerated.
//!
//! The firms share the entangled two-qubit state
//! `cos(theta)|00> + sin(theta)|11>`. Re-expressing firm B's mode in Rindler
//! coordinates splits it across the two causally disconnected wedges; the
//! inertial vacuum becomes the two-mode squeezed state
//! `cos(r)|0>_I|0>_II + sin(r)|1>_I|1>_II` and the excited state maps to
//! `|1>_I|0>_II`. Tracing out the unobservable wedge-II mode leaves the 4x4
//! density matrix consumed by the game and equilibrium layers.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fmt::complex_entry;
use crate::linalg::{self, Matrix4};

/// Elementwise Hermiticity tolerance for [`DensityMatrix4`].
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Unit-trace tolerance for [`DensityMatrix4`].
pub const UNIT_TRACE_TOL: f64 = 1e-12;
/// Smallest admissible eigenvalue of a [`DensityMatrix4`].
pub const PSD_EIGENVALUE_FLOOR: f64 = -1e-10;
/// Unit-norm tolerance for [`TripartiteAmplitudes`] at construction.
pub const AMPLITUDE_NORM_TOL: f64 = 1e-12;
/// Norm tolerance enforced on entry to [`trace_out_region_ii`].
pub const PARTIAL_TRACE_NORM_TOL: f64 = 1e-9;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Entanglement angle of the shared initial state, in radians.
///
/// `theta = 0` encodes the unentangled product state and `theta = pi/4` the
/// maximally entangled one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementAngle(f64);

impl EntanglementAngle {
    pub fn new(theta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::Domain(format!(
                "entanglement angle must lie in [0, pi/2] radians, got {theta}"
            )));
        }
        Ok(Self(theta))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Acceleration parameter r of firm B's frame, in radians.
///
/// r is the squeezing angle with `cos r = (e^(-2 pi omega c / a) + 1)^(-1/2)`,
/// so physical accelerations map into `[0, pi/4)`: r = 0 is the inertial
/// frame and r -> pi/4 the infinite-acceleration limit. Values up to (but
/// excluding) pi/2 are accepted so the solvers can chart the equilibrium
/// breakdown region beyond pi/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationParameter(f64);

impl AccelerationParameter {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&r) {
            return Err(Error::Domain(format!(
                "acceleration parameter must lie in [0, pi/2) radians, got {r}"
            )));
        }
        Ok(Self(r))
    }

    /// Converts a proper acceleration to the squeezing angle
    /// `r = arccos((e^(-2 pi omega c / a) + 1)^(-1/2))`.
    ///
    /// All three inputs are dimensionless consistent units; only the single
    /// combination `2 pi omega c / a` enters. The result lies in `[0, pi/4)`.
    pub fn from_acceleration(a: f64, omega: f64, light_speed: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("omega", omega), ("c", light_speed)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        let exponent = -2.0 * PI * omega * light_speed / a;
        let cos_r = 1.0 / (exponent.exp() + 1.0).sqrt();
        Ok(Self(cos_r.min(1.0).acos()))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Amplitudes of the shared initial state on the basis |00>, |01>, |10>, |11>.
pub fn initial_state(theta: EntanglementAngle) -> [Complex64; 4] {
    let t = theta.radians();
    [c(t.cos()), c(0.0), c(0.0), c(t.sin())]
}

/// Pure-state amplitudes over the modes (firm A, Rindler I, Rindler II).
///
/// Indexed by occupation numbers `(n_a, n_i, n_ii)` in {0,1}^3. States built
/// by [`unruh_expand`] populate exactly (0,0,0), (0,1,1), and (1,1,0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartiteAmplitudes {
    amp: [Complex64; 8],
}

impl TripartiteAmplitudes {
    /// Wraps raw amplitudes, enforcing unit norm within [`AMPLITUDE_NORM_TOL`].
    pub fn new(amp: [Complex64; 8]) -> Result<Self> {
        if amp.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Contract("amplitudes must be finite".into()));
        }
        let state = Self { amp };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > AMPLITUDE_NORM_TOL {
            return Err(Error::Contract(format!(
                "squared amplitude norm {norm} deviates from 1 beyond {AMPLITUDE_NORM_TOL}"
            )));
        }
        Ok(state)
    }

    /// Amplitude of the basis state with the given occupation numbers.
    ///
    /// Panics if any occupation number exceeds 1.
    pub fn amplitude(&self, n_a: usize, n_i: usize, n_ii: usize) -> Complex64 {
        assert!(
            n_a <= 1 && n_i <= 1 && n_ii <= 1,
            "occupation numbers are 0 or 1"
        );
        self.amp[(n_a << 2) | (n_i << 1) | n_ii]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(Complex64::norm_sqr).sum()
    }
}

/// Rewrites the shared initial state in Minkowski modes for firm A and
/// Rindler modes for firm B.
///
/// The nonzero amplitudes are `cos(theta) cos(r)` on (0,0,0),
/// `cos(theta) sin(r)` on (0,1,1), and `sin(theta)` on (1,1,0); the map is
/// norm-preserving.
pub fn unruh_expand(theta: EntanglementAngle, r: AccelerationParameter) -> TripartiteAmplitudes {
    let (ct, st) = (theta.radians().cos(), theta.radians().sin());
    let (cr, sr) = (r.radians().cos(), r.radians().sin());
    let mut amp = [c(0.0); 8];
    amp[0b000] = c(ct * cr);
    amp[0b011] = c(ct * sr);
    amp[0b110] = c(st);
    TripartiteAmplitudes { amp }
}

/// Traces out the causally disconnected Rindler-II mode, leaving the density
/// matrix shared by firm A and firm B's observable wedge.
///
/// `rho[(a,i),(a',i')] = sum_j amp(a,i,j) conj(amp(a',i',j))` on the basis
/// order |00>, |01>, |10>, |11>.
pub fn trace_out_region_ii(psi: &TripartiteAmplitudes) -> Result<DensityMatrix4> {
    let norm = psi.norm_sqr();
    if (norm - 1.0).abs() > PARTIAL_TRACE_NORM_TOL {
        return Err(Error::Contract(format!(
            "tripartite norm {norm} deviates from 1 beyond {PARTIAL_TRACE_NORM_TOL}"
        )));
    }
    let mut m = [[c(0.0); 4]; 4];
    for a in 0..2 {
        for i in 0..2 {
            for ap in 0..2 {
                for ip in 0..2 {
                    let mut sum = c(0.0);
                    for j in 0..2 {
                        sum += psi.amplitude(a, i, j) * psi.amplitude(ap, ip, j).conj();
                    }
                    m[(a << 1) | i][(ap << 1) | ip] = sum;
                }
            }
        }
    }
    DensityMatrix4::new(m)
}

/// The traced density matrix written out in closed form:
/// `diag(cos^2 r cos^2 theta, cos^2 theta sin^2 r, 0, sin^2 theta)` with the
/// corner entries `rho14 = rho41 = cos r cos theta sin theta`.
///
/// Row and column 3 (the |10> state) are stored as exact zeros so downstream
/// payoff expressions never pick up spurious round-off from that entry.
pub fn closed_form_rho(theta: EntanglementAngle, r: AccelerationParameter) -> DensityMatrix4 {
    let (ct, st) = (theta.radians().cos(), theta.radians().sin());
    let (cr, sr) = (r.radians().cos(), r.radians().sin());
    let mut m = [[c(0.0); 4]; 4];
    m[0][0] = c(cr * cr * ct * ct);
    m[1][1] = c(ct * ct * sr * sr);
    m[3][3] = c(st * st);
    let corner = c(cr * ct * st);
    m[0][3] = corner;
    m[3][0] = corner;
    DensityMatrix4::new(m).expect("closed-form density matrix satisfies its invariants")
}

/// 4x4 complex density matrix on the basis order |00>, |01>, |10>, |11>.
///
/// Construction enforces Hermiticity ([`HERMITICITY_TOL`]), unit trace
/// ([`UNIT_TRACE_TOL`]), and positive semidefiniteness
/// ([`PSD_EIGENVALUE_FLOOR`]).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    m: Matrix4,
}

impl DensityMatrix4 {
    pub fn new(m: Matrix4) -> Result<Self> {
        if m.iter()
            .flatten()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Contract(
                "density matrix entries must be finite".into(),
            ));
        }
        for i in 0..4 {
            for j in i..4 {
                let gap = (m[i][j] - m[j][i].conj()).norm();
                if gap > HERMITICITY_TOL {
                    return Err(Error::Contract(format!(
                        "entry ({i},{j}) breaks Hermiticity by {gap}"
                    )));
                }
            }
        }
        let trace: f64 = (0..4).map(|i| m[i][i].re).sum();
        if (trace - 1.0).abs() > UNIT_TRACE_TOL {
            return Err(Error::Contract(format!(
                "trace {trace} deviates from 1 beyond {UNIT_TRACE_TOL}"
            )));
        }
        let eig = linalg::hermitian_eigenvalues(&m);
        if eig[0] < PSD_EIGENVALUE_FLOOR {
            return Err(Error::Contract(format!(
                "smallest eigenvalue {} is below {PSD_EIGENVALUE_FLOOR}",
                eig[0]
            )));
        }
        Ok(Self { m })
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    /// Diagonal entries (real parts) in basis order.
    pub fn diagonal(&self) -> [f64; 4] {
        [
            self.m[0][0].re,
            self.m[1][1].re,
            self.m[2][2].re,
            self.m[3][3].re,
        ]
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> [f64; 4] {
        linalg::hermitian_eigenvalues(&self.m)
    }

    /// Debug dump: 4 lines of 4 comma-separated `re+imj` entries, row-major.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in &self.m {
            let line: Vec<String> = row.iter().map(|z| complex_entry(*z)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}
