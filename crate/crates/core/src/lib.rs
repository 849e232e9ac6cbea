//! Static coherent-state (SCS) solver for the 3D time-dependent Schrödinger
//! equation of a one-electron diatomic in a strong laser field.
//!
//! The wave function is expanded over a fixed random grid of 3D Gaussian
//! coherent states; every Hamiltonian matrix element is analytic, with the
//! nuclear Coulomb terms regularized through the complex error function. The
//! crate covers the full pipeline: grid construction, operator assembly,
//! imaginary- and real-time propagation, dipole-acceleration observables
//! (harmonic spectra, attosecond-pulse profiles, wavelet spectrograms),
//! ensemble averaging over random grids, and a reduced-scale split-operator
//! grid solver used as an independent cross-check.

pub mod csbasis;
pub mod error;
pub mod units;

pub use csbasis::{
    boys1, cerf, cs_from_phase_space, erf_over_sqrt, midpoint_rho, overlap, CoherentState,
    NucleusGeometry,
};
pub use error::{Result, ScsError};
