//! Collective damping and dipole-dipole interaction between two atoms with
//! parallel transition dipoles.
//!
//! Both rates depend on the geometry only through the dimensionless
//! separation `x = k0·r12` and the cosine `μ̂·r̂12` between the dipole
//! direction and the interatomic axis. Results are in units of the
//! single-atom decay rate.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Below this separation the pair is treated as the small-sample limit:
/// the collective damping returns its limiting value and the dipole-dipole
/// shift is reported as a domain error.
pub const X_MIN: f64 = 1e-6;

/// Switch-over to the Taylor series of `cos x/x² − sin x/x³`, which
/// cancels catastrophically for small `x`.
const SERIES_BELOW: f64 = 0.05;

/// Value of the collective damping as `x → 0⁺`, for every dipole orientation.
pub const SMALL_SAMPLE_DAMPING: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    x: f64,
    mu_dot_r: f64,
}

impl Geometry {
    /// `x = k0·r12` must be positive and finite, `|mu_dot_r| ≤ 1`.
    pub fn new(x: f64, mu_dot_r: f64) -> Result<Self> {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(format!(
                "separation k0*r12 must be positive and finite, got {x}"
            )));
        }
        if !(mu_dot_r.is_finite() && mu_dot_r.abs() <= 1.0) {
            return Err(Error::Domain(format!(
                "mu_dot_r is a cosine and must lie in [-1, 1], got {mu_dot_r}"
            )));
        }
        Ok(Self { x, mu_dot_r })
    }

    /// Dipoles perpendicular to the interatomic axis.
    pub fn perpendicular(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    /// Geometry from the separation expressed in resonant wavelengths,
    /// `x = 2π·r12/λ`.
    pub fn from_wavelengths(r_over_lambda: f64, mu_dot_r: f64) -> Result<Self> {
        Self::new(2.0 * PI * r_over_lambda, mu_dot_r)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn mu_dot_r(&self) -> f64 {
        self.mu_dot_r
    }

    /// `1 − (μ̂·r̂)²`, weight of the far-field terms.
    fn transverse(&self) -> f64 {
        1.0 - self.mu_dot_r * self.mu_dot_r
    }

    /// `1 − 3(μ̂·r̂)²`, weight of the near-field terms.
    fn near_field(&self) -> f64 {
        1.0 - 3.0 * self.mu_dot_r * self.mu_dot_r
    }
}

/// Rates for one atom pair, all in the same unit as `gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingRates {
    pub gamma: f64,
    pub gamma12: f64,
    pub omega12: f64,
}

impl CouplingRates {
    /// Independent atoms: no collective damping, no dipole-dipole shift.
    pub fn independent(gamma: f64) -> Self {
        Self {
            gamma,
            gamma12: 0.0,
            omega12: 0.0,
        }
    }
}

/// `cos x/x² − sin x/x³`
fn near_field_damping_kernel(x: f64) -> f64 {
    if x < SERIES_BELOW {
        let x2 = x * x;
        -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0 + x2 * x2 * x2 / 45360.0
    } else {
        x.cos() / (x * x) - x.sin() / (x * x * x)
    }
}

/// Collective damping `Γ12/Γ`.
///
/// `(3/2)·{[1−(μ̂·r̂)²]·sin x/x + [1−3(μ̂·r̂)²]·[cos x/x² − sin x/x³]}`.
/// For `x < X_MIN` the small-sample limit `1` is returned.
pub fn collective_damping(g: &Geometry) -> f64 {
    let x = g.x;
    if x < X_MIN {
        return SMALL_SAMPLE_DAMPING;
    }
    let sinc = if x < SERIES_BELOW {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
    } else {
        x.sin() / x
    };
    1.5 * (g.transverse() * sinc + g.near_field() * near_field_damping_kernel(x))
}

/// Dipole-dipole shift `Ω12/Γ`.
///
/// `(3/4)·{−[1−(μ̂·r̂)²]·cos x/x + [1−3(μ̂·r̂)²]·[sin x/x² + cos x/x³]}`.
/// The shift diverges like `1/x³`; separations below [`X_MIN`] are rejected.
pub fn dipole_dipole_shift(g: &Geometry) -> Result<f64> {
    let x = g.x;
    if x < X_MIN {
        return Err(Error::Domain(format!(
            "dipole-dipole shift diverges as k0*r12 -> 0 (got {x}, minimum {X_MIN})"
        )));
    }
    let (s, c) = x.sin_cos();
    Ok(0.75 * (-g.transverse() * c / x + g.near_field() * (s / (x * x) + c / (x * x * x))))
}

pub fn rates_from_geometry(g: &Geometry, gamma: f64) -> Result<CouplingRates> {
    if !(gamma.is_finite() && gamma > 0.0) {
        return Err(Error::Domain(format!(
            "single-atom decay rate must be positive, got {gamma}"
        )));
    }
    Ok(CouplingRates {
        gamma,
        gamma12: gamma * collective_damping(g),
        omega12: gamma * dipole_dipole_shift(g)?,
    })
}
