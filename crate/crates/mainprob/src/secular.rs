//! Secular frequencies and closed-form secular propagation.
//!
//! In the fully reduced (double-prime) chart the flow is linear: the momenta
//! are constant and the angles advance at fixed rates obtained from the
//! inclination-polynomial tables. Propagation is carried out in
//! semi-equinoctial variables (F, C, S), which stay regular for circular
//! orbits: (C, S) rotates rigidly at the perigee rate.

use crate::elements::{DelaunayState, GravityField, SemiEquinoctial};
use crate::theory::{self, Rate};
use crate::{Error, Result};

/// The three secular rates (rad/s) of the reduced problem.
#[derive(Clone, Copy, Debug)]
pub struct Frequencies {
    /// Rate of the mean argument of latitude F = ℓ + g.
    pub n_f: f64,
    /// Perigee rate (rotation rate of the eccentricity vector).
    pub n_g: f64,
    /// Node rate.
    pub n_h: f64,
    /// True when |5s²-4| falls inside the warning band around the critical
    /// inclination; rates are still returned.
    pub near_resonance: bool,
}

/// Evaluate one row with its critical-inclination divisor resolved: explicit
/// (5s²-4) factors of the numerator cancel against the ε^m/(5s²-4)^m
/// prefactor, so only the order-3 rows that genuinely keep a divisor ever
/// divide by it (and those sit behind the guard).
fn row_value(row: &Rate, d: f64, s2: f64) -> f64 {
    let mut cancel = row.m as i32;
    let mut acc = row.poly.num as f64 / row.poly.den as f64;
    for f in row.poly.factors {
        if cancel > 0 && *f == [5, -4] {
            cancel -= 1;
            continue;
        }
        acc *= f.iter().fold(0.0, |a, &c| a * s2 + c as f64);
    }
    acc / d.powi(cancel)
}

fn rate_sum(table: &[Rate], order: u8, eps: f64, d: f64, eta: f64, s2: f64) -> f64 {
    let mut acc = 0.0;
    for row in table {
        if row.m <= order {
            acc += eps.powi(row.m as i32) * eta.powi(row.i as i32) * row_value(row, d, s2);
        }
    }
    acc
}

/// Secular rates from the double-prime momenta.
///
/// The critical-inclination divisor survives only in the order-3 terms, so
/// the hard guard applies at `order == 3`; lower orders only set the warning
/// flag.
pub fn frequencies(
    big_l: f64,
    big_g: f64,
    big_h: f64,
    order: u8,
    fld: &GravityField,
    guard: f64,
) -> Result<Frequencies> {
    if !(order >= 1 && order <= 3) {
        return Err(Error::Usage(format!("secular order {order} not available")));
    }
    if !(big_l > 0.0 && big_g > 0.0 && big_g <= big_l && big_h.abs() <= big_g) {
        return Err(Error::Domain(format!(
            "invalid momenta L={big_l}, G={big_g}, H={big_h}"
        )));
    }
    let n = fld.mu * fld.mu / (big_l * big_l * big_l);
    let eta = big_g / big_l;
    let c = big_h / big_g;
    let s2 = (1.0 - c) * (1.0 + c);
    if order == 3 {
        theory::check_resonance(s2, guard)?;
    }
    let near_resonance = theory::resonance_margin(s2) < guard + theory::WARN_MARGIN;
    let eps = theory::epsilon(big_g, fld);
    let d = 5.0 * s2 - 4.0;
    Ok(Frequencies {
        n_f: n * (1.0 + rate_sum(&theory::PSI_F, order, eps, d, eta, s2)),
        n_g: n * rate_sum(&theory::OMEGA_G, order, eps, d, eta, s2),
        n_h: n * c * rate_sum(&theory::OMEGA_H, order, eps, d, eta, s2),
        near_resonance,
    })
}

/// Frozen secular initial conditions in the double-prime chart.
#[derive(Clone, Copy, Debug)]
pub struct SecularState {
    /// Epoch (s).
    pub t0: f64,
    /// Mean argument of latitude at epoch.
    pub f0: f64,
    /// Eccentricity vector at epoch: C₀ = e cos g₀, S₀ = e sin g₀.
    pub c0: f64,
    pub s0: f64,
    /// Node at epoch.
    pub h0: f64,
    /// Constant Delaunay action.
    pub big_l: f64,
    /// Constant polar component of the angular momentum.
    pub big_h: f64,
    /// Rates, frozen at initialization.
    pub rates: Frequencies,
    /// Truncation order the rates were computed at.
    pub order: u8,
}

impl SecularState {
    /// Initialize from a double-prime Delaunay state.
    pub fn from_mean(
        t0: f64,
        mean: &DelaunayState,
        order: u8,
        fld: &GravityField,
        guard: f64,
    ) -> Result<Self> {
        mean.validate()?;
        let rates = frequencies(mean.big_l, mean.big_g, mean.big_h, order, fld, guard)?;
        let e = mean.eccentricity();
        Ok(SecularState {
            t0,
            f0: mean.ell + mean.g,
            c0: e * mean.g.cos(),
            s0: e * mean.g.sin(),
            h0: mean.h,
            big_l: mean.big_l,
            big_h: mean.big_h,
            rates,
            order,
        })
    }

    /// Closed-form secular point at time `t` (semi-equinoctial, double-prime).
    pub fn at(&self, t: f64) -> SemiEquinoctial {
        let dt = t - self.t0;
        let (sg, cg) = (self.rates.n_g * dt).sin_cos();
        SemiEquinoctial {
            f: self.f0 + self.rates.n_f * dt,
            c: self.c0 * cg - self.s0 * sg,
            s: self.s0 * cg + self.c0 * sg,
            big_l: self.big_l,
            h: self.h0 + self.rates.n_h * dt,
            big_h: self.big_h,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::{seed, Scalar};
    use crate::elements::Stage;
    use crate::theory::DEFAULT_GUARD;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const FLD: GravityField = GravityField::STANDARD;

    fn random_momenta(rng: &mut impl Rng) -> (f64, f64, f64) {
        let a = rng.gen_range(6800.0..30000.0);
        let e = rng.gen_range(0.0..0.7);
        let inc: f64 = loop {
            let i = rng.gen_range(0.1..3.0);
            if theory::resonance_margin(i.sin().powi(2)) > 0.3 {
                break i;
            }
        };
        let big_l = (FLD.mu * a).sqrt();
        let big_g = big_l * (1.0 - e * e).sqrt();
        (big_l, big_g, big_g * inc.cos())
    }

    #[test]
    fn keplerian_limit() {
        let fld = GravityField::new(FLD.mu, FLD.re, 0.0).unwrap();
        let (l, g, h) = (1.0e5, 9.0e4, 5.0e4);
        for order in 1..=3 {
            let fr = frequencies(l, g, h, order, &fld, DEFAULT_GUARD).unwrap();
            let n = fld.mu * fld.mu / l.powi(3);
            assert_eq!(fr.n_f, n);
            assert_eq!(fr.n_g, 0.0);
            assert_eq!(fr.n_h, 0.0);
        }
    }

    #[test]
    fn order_one_matches_classical_rates() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let (l, g, h) = random_momenta(&mut rng);
            let fr = frequencies(l, g, h, 1, &FLD, DEFAULT_GUARD).unwrap();
            let n = FLD.mu * FLD.mu / l.powi(3);
            let p = g * g / FLD.mu;
            let eta = g / l;
            let cosi = h / g;
            let k = FLD.j2 * (FLD.re / p).powi(2);
            let node = -1.5 * n * k * cosi;
            let perigee = 0.75 * n * k * (5.0 * cosi * cosi - 1.0);
            let mean = n * (1.0 + 0.75 * k * eta * (3.0 * cosi * cosi - 1.0));
            assert!((fr.n_h - node).abs() <= 1e-12 * node.abs());
            assert!((fr.n_g - perigee).abs() <= 1e-12 * perigee.abs().max(n * k));
            let n_ell = fr.n_f - fr.n_g;
            assert!((n_ell - mean).abs() <= 1e-12 * mean.abs());
        }
    }

    #[test]
    fn perigee_frozen_at_critical_inclination_order_one() {
        // s² = 4/5 zeroes the first-order perigee rate.
        let l = 1.0e5;
        let g = 0.95e5;
        let h = g * (1.0f64 - 0.8).sqrt();
        let fr = frequencies(l, g, h, 1, &FLD, DEFAULT_GUARD).unwrap();
        let n = FLD.mu * FLD.mu / l.powi(3);
        assert!(fr.n_g.abs() < 1e-18 * n);
        assert!(fr.near_resonance);
        // At order 3 the guard takes over.
        assert!(matches!(
            frequencies(l, g, h, 3, &FLD, DEFAULT_GUARD),
            Err(Error::Resonance { .. })
        ));
    }

    #[test]
    fn rates_are_hamilton_equations_of_reduced_hamiltonian() {
        // Exact-derivative cross-check of the rate tables against the
        // reduced-Hamiltonian tables: n_l = dK/dL, n_g = dK/dG, n_h = dK/dH.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let (l, g, h) = random_momenta(&mut rng);
            for order in 1..=3u8 {
                let fr = frequencies(l, g, h, order, &FLD, DEFAULT_GUARD).unwrap();
                let xd = seed(&[0.0, 0.0, 0.0, l, g, h]);
                let k = theory::k_secular(order, &xd, &FLD);
                let (dl, dg, dh) = (k.d[3], k.d[4], k.d[5]);
                let n = FLD.mu * FLD.mu / l.powi(3);
                assert!((fr.n_f - (dl + dg)).abs() <= 1e-10 * n, "order {order} n_f");
                assert!((fr.n_g - dg).abs() <= 1e-10 * n, "order {order} n_g");
                assert!((fr.n_h - dh).abs() <= 1e-10 * n, "order {order} n_h");
            }
        }
    }

    #[test]
    fn secular_flow_is_rigid_rotation() {
        let d = DelaunayState {
            stage: Stage::DoublePrime,
            ell: 0.4,
            g: 1.1,
            h: 2.0,
            big_l: 52000.0,
            big_g: 51900.0,
            big_h: 30000.0,
        };
        let sec = SecularState::from_mean(0.0, &d, 3, &FLD, DEFAULT_GUARD).unwrap();

        // t = t0 is the identity.
        let p0 = sec.at(0.0);
        assert_eq!(p0.f, sec.f0);
        assert_eq!((p0.c, p0.s), (sec.c0, sec.s0));

        // A quarter turn of the eccentricity vector.
        let tq = std::f64::consts::FRAC_PI_2 / sec.rates.n_g;
        let pq = sec.at(tq);
        assert!((pq.c + sec.s0).abs() < 1e-12 * (sec.c0.abs() + sec.s0.abs()));
        assert!((pq.s - sec.c0).abs() < 1e-12 * (sec.c0.abs() + sec.s0.abs()));

        // The eccentricity implied by (C, S) is conserved over 30 days.
        let e0 = (sec.c0 * sec.c0 + sec.s0 * sec.s0).sqrt();
        for k in 1..=30 {
            let p = sec.at(k as f64 * 86400.0);
            let e = (p.c * p.c + p.s * p.s).sqrt();
            assert!((e - e0).abs() < 1e-14);
        }
    }
}
