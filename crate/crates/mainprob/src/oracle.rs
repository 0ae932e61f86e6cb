//! High-precision numerical reference for the main problem.
//!
//! Adaptive embedded Runge–Kutta 7(8) in Cartesian coordinates with
//! compensated accumulation, sample times hit exactly by step clamping, and
//! conserved-quantity rejection: a trajectory whose energy or polar
//! angular-momentum drift exceeds 1e-12 relative is refused rather than
//! returned.

use crate::elements::{CartesianState, GravityField};
use crate::{Error, Result};
use std::io::{BufRead, Write};

/// Maximum admissible relative drift of the conserved quantities.
pub const DRIFT_LIMIT: f64 = 1e-12;

/// Default local tolerance.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Internal margin between the requested tolerance and the local error the
/// controller actually accepts (costs ~SAFETY^(1/8) in step count).
const SAFETY: f64 = 100.0;

/// Numerically integrated reference trajectory with per-sample diagnostics.
#[derive(Clone, Debug)]
pub struct ReferenceTrajectory {
    pub times: Vec<f64>,
    pub samples: Vec<CartesianState>,
    /// Specific orbital energy at each sample.
    pub energy: Vec<f64>,
    /// Polar angular-momentum component at each sample.
    pub big_n: Vec<f64>,
    pub tol: f64,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
}

impl ReferenceTrajectory {
    /// Measured relative drifts (energy, N) over the arc.
    pub fn drift(&self) -> (f64, f64) {
        let e0 = self.energy[0];
        let n0 = self.big_n[0];
        let (theta0, _) = theta_n(&self.samples[0]);
        let n_scale = n0.abs().max(theta0);
        let mut de = 0.0f64;
        let mut dn = 0.0f64;
        for (e, n) in self.energy.iter().zip(&self.big_n) {
            de = de.max((e - e0).abs() / e0.abs());
            dn = dn.max((n - n0).abs() / n_scale);
        }
        (de, dn)
    }
}

/// Main-problem acceleration (Kepler plus J2).
pub fn accel(r: &[f64; 3], fld: &GravityField) -> [f64; 3] {
    let r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    let rn = r2.sqrt();
    let r5 = r2 * r2 * rn;
    let kep = -fld.mu / (r2 * rn);
    let c = 0.5 * fld.mu * fld.j2 * fld.re * fld.re / r5;
    let z2r2 = r[2] * r[2] / r2;
    let radial = c * (-3.0 + 15.0 * z2r2);
    [
        kep * r[0] + radial * r[0],
        kep * r[1] + radial * r[1],
        kep * r[2] + radial * r[2] - c * 6.0 * r[2],
    ]
}

fn theta_n(s: &CartesianState) -> (f64, f64) {
    let (r, v) = (s.position, s.velocity);
    let h = [
        r[1] * v[2] - r[2] * v[1],
        r[2] * v[0] - r[0] * v[2],
        r[0] * v[1] - r[1] * v[0],
    ];
    (
        (h[0] * h[0] + h[1] * h[1] + h[2] * h[2]).sqrt(),
        h[2],
    )
}

/// Conserved diagnostics: specific energy, total angular momentum Θ, and its
/// polar component N. Only energy and N are integrals of the main problem.
pub fn conserved(s: &CartesianState, fld: &GravityField) -> (f64, f64, f64) {
    let r2: f64 = s.position.iter().map(|x| x * x).sum();
    let rn = r2.sqrt();
    let v2: f64 = s.velocity.iter().map(|x| x * x).sum();
    let sin_phi2 = s.position[2] * s.position[2] / r2;
    let pert = -0.5 * fld.mu / rn * (fld.re * fld.re / r2) * fld.j2 * (1.0 - 3.0 * sin_phi2);
    let (theta, n) = theta_n(s);
    (0.5 * v2 - fld.mu / rn + pert, theta, n)
}

// Fehlberg 7(8) coefficients (13 stages; the order-8 weights propagate, the
// difference against the order-7 weights gives the error estimate).
const STAGES: usize = 13;
const C: [f64; STAGES] = [
    0.0,
    2.0 / 27.0,
    1.0 / 9.0,
    1.0 / 6.0,
    5.0 / 12.0,
    0.5,
    5.0 / 6.0,
    1.0 / 6.0,
    2.0 / 3.0,
    1.0 / 3.0,
    1.0,
    0.0,
    1.0,
];
const A: [&[f64]; STAGES] = [
    &[],
    &[2.0 / 27.0],
    &[1.0 / 36.0, 1.0 / 12.0],
    &[1.0 / 24.0, 0.0, 1.0 / 8.0],
    &[5.0 / 12.0, 0.0, -25.0 / 16.0, 25.0 / 16.0],
    &[1.0 / 20.0, 0.0, 0.0, 0.25, 0.2],
    &[-25.0 / 108.0, 0.0, 0.0, 125.0 / 108.0, -65.0 / 27.0, 125.0 / 54.0],
    &[31.0 / 300.0, 0.0, 0.0, 0.0, 61.0 / 225.0, -2.0 / 9.0, 13.0 / 900.0],
    &[2.0, 0.0, 0.0, -53.0 / 6.0, 704.0 / 45.0, -107.0 / 9.0, 67.0 / 90.0, 3.0],
    &[
        -91.0 / 108.0,
        0.0,
        0.0,
        23.0 / 108.0,
        -976.0 / 135.0,
        311.0 / 54.0,
        -19.0 / 60.0,
        17.0 / 6.0,
        -1.0 / 12.0,
    ],
    &[
        2383.0 / 4100.0,
        0.0,
        0.0,
        -341.0 / 164.0,
        4496.0 / 1025.0,
        -301.0 / 82.0,
        2133.0 / 4100.0,
        45.0 / 82.0,
        45.0 / 164.0,
        18.0 / 41.0,
    ],
    &[
        3.0 / 205.0,
        0.0,
        0.0,
        0.0,
        0.0,
        -6.0 / 41.0,
        -3.0 / 205.0,
        -3.0 / 41.0,
        3.0 / 41.0,
        6.0 / 41.0,
        0.0,
    ],
    &[
        -1777.0 / 4100.0,
        0.0,
        0.0,
        -341.0 / 164.0,
        4496.0 / 1025.0,
        -289.0 / 82.0,
        2193.0 / 4100.0,
        51.0 / 82.0,
        33.0 / 164.0,
        12.0 / 41.0,
        0.0,
        1.0,
    ],
];
const B8: [f64; STAGES] = [
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    34.0 / 105.0,
    9.0 / 35.0,
    9.0 / 35.0,
    9.0 / 280.0,
    9.0 / 280.0,
    0.0,
    41.0 / 840.0,
    41.0 / 840.0,
];

type Y = [f64; 6];

fn deriv(y: &Y, fld: &GravityField) -> Y {
    let a = accel(&[y[0], y[1], y[2]], fld);
    [y[3], y[4], y[5], a[0], a[1], a[2]]
}

/// One RK step from `y` with size `h`; returns (increment, error estimate).
fn rk_step(y: &Y, h: f64, fld: &GravityField) -> (Y, Y) {
    let mut k = [[0.0; 6]; STAGES];
    k[0] = deriv(y, fld);
    for s in 1..STAGES {
        let mut ys = *y;
        for (j, &a) in A[s].iter().enumerate() {
            if a != 0.0 {
                for i in 0..6 {
                    ys[i] += h * a * k[j][i];
                }
            }
        }
        let _ = C[s]; // autonomous field: stage times unused
        k[s] = deriv(&ys, fld);
    }
    let mut dy = [0.0; 6];
    for s in 0..STAGES {
        if B8[s] != 0.0 {
            for i in 0..6 {
                dy[i] += h * B8[s] * k[s][i];
            }
        }
    }
    let mut err = [0.0; 6];
    for i in 0..6 {
        err[i] = h * 41.0 / 840.0 * (k[0][i] + k[10][i] - k[11][i] - k[12][i]);
    }
    (dy, err)
}

/// Integrate the main problem, producing samples at exactly `times` (the
/// first entry is the epoch of `initial`; the sequence must be strictly
/// monotonic, either direction).
pub fn integrate(
    initial: &CartesianState,
    times: &[f64],
    fld: &GravityField,
    tol: f64,
) -> Result<ReferenceTrajectory> {
    if !(1e-14..=1e-10).contains(&tol) {
        return Err(Error::Usage(format!("oracle tolerance {tol:e} outside [1e-14, 1e-10]")));
    }
    if times.is_empty() {
        return Err(Error::Usage("no sample times".into()));
    }
    let dir = if times.len() > 1 {
        (times[times.len() - 1] - times[0]).signum()
    } else {
        1.0
    };
    if times.windows(2).any(|w| (w[1] - w[0]) * dir <= 0.0) {
        return Err(Error::Usage("sample times not strictly monotonic".into()));
    }
    let r2: f64 = initial.position.iter().map(|x| x * x).sum();
    if !(r2 > 0.0) {
        return Err(Error::Domain("degenerate initial position".into()));
    }

    let mut traj = ReferenceTrajectory {
        times: times.to_vec(),
        samples: Vec::with_capacity(times.len()),
        energy: Vec::with_capacity(times.len()),
        big_n: Vec::with_capacity(times.len()),
        tol,
        steps_accepted: 0,
        steps_rejected: 0,
    };

    let mut y: Y = [
        initial.position[0],
        initial.position[1],
        initial.position[2],
        initial.velocity[0],
        initial.velocity[1],
        initial.velocity[2],
    ];
    let mut comp: Y = [0.0; 6]; // compensated-summation carry
    let mut t = times[0];

    let push = |traj: &mut ReferenceTrajectory, y: &Y| {
        let s = CartesianState {
            position: [y[0], y[1], y[2]],
            velocity: [y[3], y[4], y[5]],
        };
        let (e, _, n) = conserved(&s, fld);
        traj.samples.push(s);
        traj.energy.push(e);
        traj.big_n.push(n);
    };
    push(&mut traj, &y);

    // Initial step: a small fraction of the osculating period.
    let period = std::f64::consts::TAU * (r2.sqrt().powi(3) / fld.mu).sqrt();
    let mut h = dir * period * 0.01;
    let h_min = period * 1e-10;

    for &target in &times[1..] {
        while (target - t) * dir > 0.0 {
            let remaining = target - t;
            let clamped = h.abs() >= remaining.abs();
            let h_try = if clamped { remaining } else { h };
            let (dy, err) = rk_step(&y, h_try, fld);
            // Deliver well under the requested tolerance: the per-step margin
            // keeps the accumulated drift of the conserved quantities inside
            // DRIFT_LIMIT over month-long arcs.
            // Norm-based error scales per block: round-off in any position
            // component is set by the magnitude of the radius, not of that
            // component, so per-component scales would demand the impossible
            // whenever a coordinate passes near zero.
            let rn = (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]).sqrt();
            let vn = (y[3] * y[3] + y[4] * y[4] + y[5] * y[5]).sqrt();
            let scale_p = rn + (h_try * vn).abs();
            let scale_v = vn + (h_try * fld.mu / (rn * rn)).abs();
            let mut ratio = 0.0f64;
            for i in 0..6 {
                let scale = if i < 3 { scale_p } else { scale_v };
                ratio = ratio.max(err[i].abs() * SAFETY / (tol * scale));
            }
            if ratio <= 1.0 {
                traj.steps_accepted += 1;
                for i in 0..6 {
                    // Kahan accumulation of the increment.
                    let d = dy[i] - comp[i];
                    let s = y[i] + d;
                    comp[i] = (s - y[i]) - d;
                    y[i] = s;
                }
                t = if clamped { target } else { t + h_try };
            } else {
                traj.steps_rejected += 1;
            }
            let factor = (0.9 * ratio.max(1e-12).powf(-1.0 / 8.0)).clamp(0.1, 5.0);
            let mut next = (h_try * factor).abs();
            if clamped && ratio <= 1.0 {
                // An accepted clamped step says nothing about shrinking the
                // free step size.
                next = next.max(h.abs());
            }
            h = dir * next;
            if h.abs() < h_min {
                return Err(Error::Integration(format!(
                    "step size underflow at t = {t} (h = {:e})",
                    h.abs()
                )));
            }
        }
        push(&mut traj, &y);
    }

    let (de, dn) = traj.drift();
    if de > DRIFT_LIMIT {
        return Err(Error::Accuracy { quantity: "energy", drift: de, limit: DRIFT_LIMIT });
    }
    if dn > DRIFT_LIMIT {
        return Err(Error::Accuracy { quantity: "N", drift: dn, limit: DRIFT_LIMIT });
    }
    Ok(traj)
}

/// Write the trajectory as CSV (t, x, y, z, vx, vy, vz, energy, N), 17
/// significant digits.
pub fn dump_csv<W: Write>(traj: &ReferenceTrajectory, mut out: W) -> Result<()> {
    writeln!(out, "t,x,y,z,vx,vy,vz,energy,N")?;
    for (i, s) in traj.samples.iter().enumerate() {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            traj.times[i],
            s.position[0],
            s.position[1],
            s.position[2],
            s.velocity[0],
            s.velocity[1],
            s.velocity[2],
            traj.energy[i],
            traj.big_n[i],
        )?;
    }
    Ok(())
}

/// Read a trajectory back from [`dump_csv`] output.
pub fn load_csv<R: BufRead>(input: R) -> Result<ReferenceTrajectory> {
    let mut traj = ReferenceTrajectory {
        times: vec![],
        samples: vec![],
        energy: vec![],
        big_n: vec![],
        tol: f64::NAN,
        steps_accepted: 0,
        steps_rejected: 0,
    };
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        if lineno == 0 {
            if line.trim() != "t,x,y,z,vx,vy,vz,energy,N" {
                return Err(Error::Usage("unrecognized trajectory CSV header".into()));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Usage(format!("line {}: {e}", lineno + 1)))?;
        if fields.len() != 9 {
            return Err(Error::Usage(format!("line {}: expected 9 columns", lineno + 1)));
        }
        traj.times.push(fields[0]);
        traj.samples.push(CartesianState {
            position: [fields[1], fields[2], fields[3]],
            velocity: [fields[4], fields[5], fields[6]],
        });
        traj.energy.push(fields[7]);
        traj.big_n.push(fields[8]);
    }
    if traj.times.is_empty() {
        return Err(Error::Usage("empty trajectory CSV".into()));
    }
    Ok(traj)
}
