//! Analytical solution of the artificial-satellite main problem (J2-only
//! geopotential) by reverse normalization: the argument of perigee is made
//! cyclic first, the mean anomaly second, both through order 3 in J2.
//!
//! The crate provides the orbital-element machinery ([`elements`]), the
//! hard-coded series of both normalization stages ([`theory`]), a numeric
//! Lie-transform engine for the periodic corrections ([`lie`]), closed-form
//! secular propagation ([`secular`]), the end-to-end analytical ephemeris
//! ([`propagator`]), and a high-precision numerical reference integrator
//! ([`oracle`]). Units are km, km/s, rad, s throughout.

pub mod cases;
pub mod dual;
pub mod elements;
pub mod lie;
pub mod oracle;
pub mod propagator;
pub mod secular;
pub mod theory;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("Kepler solver did not converge after {iters} iterations (ell={ell}, e={e})")]
    KeplerNonConvergence { ell: f64, e: f64, iters: usize },

    #[error("input outside domain: {0}")]
    Domain(String),

    #[error("singular chart: {0}")]
    SingularChart(String),

    #[error("partials degenerate for anomaly rows: e = {e} below 1e-9")]
    DegeneratePartials { e: f64 },

    #[error("critical-inclination resonance guard: |5s^2-4| = {margin} below {guard}")]
    Resonance { margin: f64, guard: f64 },

    #[error("fixed-point inversion did not converge after {iters} iterations")]
    Inversion { iters: usize },

    #[error("integration failure: {0}")]
    Integration(String),

    #[error("integration accuracy: {quantity} drift {drift:.3e} exceeds {limit:.3e}")]
    Accuracy {
        quantity: &'static str,
        drift: f64,
        limit: f64,
    },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
