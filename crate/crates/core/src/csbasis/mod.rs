//! Coherent-state primitives: phase-space labels, overlaps, and the midpoint
//! vector entering every Coulomb-type matrix element.
//!
//! A basis state is a 3D Gaussian wave packet of fixed width `gamma`, labeled
//! by the complex vector `z` with `z_j = sqrt(gamma/2) q_j + i p_j / sqrt(2 gamma)`.
//! In position space,
//! `<r|Z> = (gamma/pi)^(3/4) exp(-gamma/2 (r-q)^2 + i p.(r - q/2))`.

pub mod special;

pub use special::{boys1, cerf, erf_over_sqrt};

use crate::error::{Result, ScsError};
use num_complex::Complex64;

/// One basis element: complex phase-space label plus the common width
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentState {
    /// Dimensionless phase-space label, one component per Cartesian axis.
    pub z: [Complex64; 3],
    /// Width parameter; the position-space density has variance 1/(2 gamma).
    pub gamma: f64,
}

impl CoherentState {
    pub fn new(z: [Complex64; 3], gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(ScsError::Parameter(format!(
                "coherent state width must be positive and finite, got {gamma}"
            )));
        }
        if z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(ScsError::Parameter("non-finite coherent state label".into()));
        }
        Ok(Self { z, gamma })
    }

    /// Center position q_j = Re(z_j) sqrt(2/gamma), in a.u.
    pub fn position(&self) -> [f64; 3] {
        let s = (2.0 / self.gamma).sqrt();
        [self.z[0].re * s, self.z[1].re * s, self.z[2].re * s]
    }

    /// Center momentum p_j = Im(z_j) sqrt(2 gamma), in a.u.
    pub fn momentum(&self) -> [f64; 3] {
        let s = (2.0 * self.gamma).sqrt();
        [self.z[0].im * s, self.z[1].im * s, self.z[2].im * s]
    }
}

/// Build a coherent state from real phase-space coordinates.
pub fn cs_from_phase_space(q: [f64; 3], p: [f64; 3], gamma: f64) -> Result<CoherentState> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(ScsError::Parameter(format!(
            "coherent state width must be positive and finite, got {gamma}"
        )));
    }
    if q.iter().chain(p.iter()).any(|v| !v.is_finite()) {
        return Err(ScsError::Parameter("non-finite phase-space coordinate".into()));
    }
    let cq = (0.5 * gamma).sqrt();
    let cp = 1.0 / (2.0 * gamma).sqrt();
    let z = [
        Complex64::new(cq * q[0], cp * p[0]),
        Complex64::new(cq * q[1], cp * p[1]),
        Complex64::new(cq * q[2], cp * p[2]),
    ];
    Ok(CoherentState { z, gamma })
}

/// Fixed nuclear frame of the one-electron diatomic: two unit point charges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NucleusGeometry {
    pub r1: [f64; 3],
    pub r2: [f64; 3],
}

impl NucleusGeometry {
    pub fn new(r1: [f64; 3], r2: [f64; 3]) -> Result<Self> {
        let d = separation(r1, r2);
        if !(d > 0.0) {
            return Err(ScsError::Parameter(
                "nuclei must sit at distinct positions".into(),
            ));
        }
        Ok(Self { r1, r2 })
    }

    /// Internuclear distance, a.u.
    pub fn internuclear_distance(&self) -> f64 {
        separation(self.r1, self.r2)
    }

    /// Constant nuclear repulsion energy 1/R12.
    pub fn repulsion(&self) -> f64 {
        1.0 / self.internuclear_distance()
    }

    /// Two nuclei on the given axis, symmetric about the origin.
    pub fn along_axis(axis: usize, r12: f64) -> Result<Self> {
        if axis > 2 {
            return Err(ScsError::Parameter(format!("axis index {axis} out of range")));
        }
        if !(r12 > 0.0) {
            return Err(ScsError::Parameter(format!(
                "internuclear distance must be positive, got {r12}"
            )));
        }
        let mut r1 = [0.0; 3];
        let mut r2 = [0.0; 3];
        r1[axis] = 0.5 * r12;
        r2[axis] = -0.5 * r12;
        Self::new(r1, r2)
    }
}

fn separation(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Overlap <Z_a|Z_b>: product over the three axes of
/// exp(-|z_a|^2/2 - |z_b|^2/2 + conj(z_a) z_b).
pub fn overlap(a: &CoherentState, b: &CoherentState) -> Result<Complex64> {
    check_same_width(a, b)?;
    Ok(overlap_unchecked(a, b))
}

pub(crate) fn overlap_unchecked(a: &CoherentState, b: &CoherentState) -> Complex64 {
    let mut ex = Complex64::new(0.0, 0.0);
    for j in 0..3 {
        ex += a.z[j].conj() * b.z[j]
            - 0.5 * Complex64::new(a.z[j].norm_sqr() + b.z[j].norm_sqr(), 0.0);
    }
    ex.exp()
}

/// Midpoint vector rho = (conj(z_a) + z_b)/sqrt(2 gamma) - R.
///
/// Complex off the diagonal; satisfies rho(b, a, R) = conj(rho(a, b, R)).
pub fn midpoint_rho(
    a: &CoherentState,
    b: &CoherentState,
    r: [f64; 3],
) -> Result<[Complex64; 3]> {
    check_same_width(a, b)?;
    Ok(midpoint_rho_unchecked(a, b, r))
}

pub(crate) fn midpoint_rho_unchecked(
    a: &CoherentState,
    b: &CoherentState,
    r: [f64; 3],
) -> [Complex64; 3] {
    let s = 1.0 / (2.0 * a.gamma).sqrt();
    [
        (a.z[0].conj() + b.z[0]) * s - r[0],
        (a.z[1].conj() + b.z[1]) * s - r[1],
        (a.z[2].conj() + b.z[2]) * s - r[2],
    ]
}

/// Complex bilinear square rho . rho (not the Hermitian norm).
pub fn rho_dot_rho(rho: &[Complex64; 3]) -> Complex64 {
    rho[0] * rho[0] + rho[1] * rho[1] + rho[2] * rho[2]
}

fn check_same_width(a: &CoherentState, b: &CoherentState) -> Result<()> {
    if a.gamma != b.gamma {
        return Err(ScsError::Parameter(format!(
            "mismatched widths: {} vs {}",
            a.gamma, b.gamma
        )));
    }
    Ok(())
}
