//! Atomic-unit conversion constants (e = m_e = hbar = 1).

/// One atomic unit of intensity, W/cm^2: E0[a.u.] = sqrt(I / this).
pub const INTENSITY_AU_WCM2: f64 = 3.50945e16;

/// Attoseconds per atomic unit of time.
pub const AU_TIME_AS: f64 = 24.18884;

/// omega[a.u.] = this / lambda[nm].
pub const WAVELENGTH_NM_OMEGA_AU: f64 = 45.5633525;

/// Carrier angular frequency in a.u. for a vacuum wavelength in nm.
pub fn omega_from_wavelength_nm(lambda_nm: f64) -> f64 {
    WAVELENGTH_NM_OMEGA_AU / lambda_nm
}
