//! Orbital-element charts and conversions.
//!
//! The working chart is Delaunay (ℓ, g, h, L, G, H); Keplerian, polar-nodal,
//! semi-equinoctial and Cartesian states convert through it. All basis
//! functions (a, e, η, p, s, c, r, f, E, φ, β, n) are evaluated generically
//! over [`Scalar`], so the same code yields values and exact partials at any
//! differentiation depth.

use crate::dual::{seed, Dual, Scalar, NVARS};
use crate::{Error, Result};

pub const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Eccentricity below which anomaly partials and the Keplerian argument of
/// perigee are treated as undefined.
pub const ECC_SINGULAR: f64 = 1e-9;
/// sin(I) below which node-dependent charts are treated as undefined.
pub const SIN_I_SINGULAR: f64 = 1e-9;

/// Wrap an angle to (-pi, pi].
pub fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > std::f64::consts::PI {
        y - TAU
    } else {
        y
    }
}

/// Central gravity field, J2 only.
#[derive(Clone, Copy, Debug, serde::Serialize, serde::Deserialize)]
pub struct GravityField {
    /// Gravitational parameter (km^3/s^2).
    pub mu: f64,
    /// Equatorial radius (km).
    pub re: f64,
    /// Second zonal harmonic coefficient (dimensionless).
    pub j2: f64,
}

impl GravityField {
    /// Standard constants (the paper does not state its own values).
    pub const STANDARD: GravityField = GravityField {
        mu: 398600.4415,
        re: 6378.1363,
        j2: 1.08262617e-3,
    };

    pub fn new(mu: f64, re: f64, j2: f64) -> Result<Self> {
        if !(mu > 0.0) || !(re > 0.0) || !(j2 >= 0.0 && j2 < 0.1) {
            return Err(Error::Domain(format!(
                "gravity field out of range: mu={mu}, re={re}, j2={j2}"
            )));
        }
        Ok(GravityField { mu, re, j2 })
    }
}

impl Default for GravityField {
    fn default() -> Self {
        Self::STANDARD
    }
}

/// Transformation stage a Delaunay state lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Stage {
    Original,
    Prime,
    DoublePrime,
}

/// Delaunay canonical variables (ℓ, g, h, L, G, H).
///
/// Angles are not forcibly wrapped: time-series pipelines carry winding.
#[derive(Clone, Copy, Debug)]
pub struct DelaunayState {
    pub stage: Stage,
    pub ell: f64,
    pub g: f64,
    pub h: f64,
    pub big_l: f64,
    pub big_g: f64,
    pub big_h: f64,
}

impl DelaunayState {
    pub fn from_coords(stage: Stage, x: [f64; 6]) -> Self {
        DelaunayState {
            stage,
            ell: x[0],
            g: x[1],
            h: x[2],
            big_l: x[3],
            big_g: x[4],
            big_h: x[5],
        }
    }

    pub fn coords(&self) -> [f64; 6] {
        [self.ell, self.g, self.h, self.big_l, self.big_g, self.big_h]
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.big_g > 0.0 && self.big_g <= self.big_l) || self.big_h.abs() > self.big_g {
            return Err(Error::Domain(format!(
                "Delaunay actions out of range: L={}, G={}, H={}",
                self.big_l, self.big_g, self.big_h
            )));
        }
        Ok(())
    }

    pub fn eccentricity(&self) -> f64 {
        let eta = self.big_g / self.big_l;
        ((1.0 - eta) * (1.0 + eta)).max(0.0).sqrt()
    }

    pub fn sin_inc(&self) -> f64 {
        let c = self.big_h / self.big_g;
        ((1.0 - c) * (1.0 + c)).max(0.0).sqrt()
    }
}

/// Anomaly flavor carried by a Keplerian element set.
#[derive(Clone, Copy, Debug)]
pub enum Anomaly {
    Mean(f64),
    Eccentric(f64),
    True(f64),
}

#[derive(Clone, Copy, Debug)]
pub struct KeplerianElements {
    pub a: f64,
    pub e: f64,
    pub inc: f64,
    pub raan: f64,
    pub argp: f64,
    pub anomaly: Anomaly,
}

impl KeplerianElements {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0) || !(self.e >= 0.0 && self.e < 1.0) || !(self.inc >= 0.0 && self.inc <= std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "Keplerian elements out of range: a={}, e={}, inc={}",
                self.a, self.e, self.inc
            )));
        }
        Ok(())
    }

    pub fn mean_anomaly(&self) -> Result<f64> {
        match self.anomaly {
            Anomaly::Mean(l) => Ok(l),
            Anomaly::Eccentric(ea) => Ok(ea - self.e * ea.sin()),
            Anomaly::True(f) => {
                let ea = ecc_from_true(f, self.e);
                Ok(ea - self.e * ea.sin())
            }
        }
    }
}

/// Polar-nodal variables (r, θ, ν, R, Θ, N).
#[derive(Clone, Copy, Debug)]
pub struct PolarNodalState {
    /// Radius (km).
    pub r: f64,
    /// Argument of latitude (rad).
    pub theta: f64,
    /// Node angle (rad).
    pub nu: f64,
    /// Radial velocity R (km/s).
    pub rdot: f64,
    /// Total angular momentum Θ (km^2/s).
    pub ang_mom: f64,
    /// Polar component N (km^2/s).
    pub polar_mom: f64,
}

impl PolarNodalState {
    pub fn coords(&self) -> [f64; 6] {
        [self.r, self.theta, self.nu, self.rdot, self.ang_mom, self.polar_mom]
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r > 0.0 && self.ang_mom > 0.0) || self.polar_mom.abs() > self.ang_mom {
            return Err(Error::Domain(format!(
                "polar-nodal state out of range: r={}, Theta={}, N={}",
                self.r, self.ang_mom, self.polar_mom
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, serde::Serialize, serde::Deserialize)]
pub struct CartesianState {
    pub position: [f64; 3],
    pub velocity: [f64; 3],
}

/// Semi-equinoctial variables (F, C, S, L, h, H): mean argument of latitude
/// and the eccentricity-vector components in the nodal frame.
#[derive(Clone, Copy, Debug)]
pub struct SemiEquinoctial {
    /// F = ℓ + g (rad).
    pub f: f64,
    /// C = e cos g.
    pub c: f64,
    /// S = e sin g.
    pub s: f64,
    pub big_l: f64,
    pub h: f64,
    pub big_h: f64,
}

// ---------------------------------------------------------------------------
// Kepler equation
// ---------------------------------------------------------------------------

/// Solve E - e sin E = ell for the eccentric anomaly, f64 path.
///
/// Newton from E0 = ell + e sin ell with a bisection safeguard on the bracket
/// [ell-e, ell+e]; the returned E lies in the same revolution as `ell`.
pub fn solve_kepler(ell: f64, e: f64) -> Result<f64> {
    if !(e >= 0.0 && e < 1.0) || !ell.is_finite() {
        return Err(Error::Domain(format!("solve_kepler: ell={ell}, e={e}")));
    }
    let lw = wrap_angle(ell);
    let ew = kepler_wrapped(lw, e).ok_or(Error::KeplerNonConvergence { ell, e, iters: 50 })?;
    Ok(ew + (ell - lw))
}

fn kepler_wrapped(l: f64, e: f64) -> Option<f64> {
    let (mut lo, mut hi) = (l - e, l + e);
    let mut ea = l + e * l.sin();
    for _ in 0..50 {
        let f = ea - e * ea.sin() - l;
        if f.abs() <= 1e-15 {
            return Some(ea);
        }
        if f > 0.0 {
            hi = ea.min(hi);
        } else {
            lo = ea.max(lo);
        }
        let step = f / (1.0 - e * ea.cos());
        let next = ea - step;
        ea = if next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
    }
    // Accept the looser spec tolerance before reporting failure.
    if (ea - e * ea.sin() - l).abs() <= 1e-14 {
        Some(ea)
    } else {
        None
    }
}

/// Eccentric anomaly over any scalar type: the value is solved in f64, then a
/// few Newton sweeps in the dual algebra propagate the derivatives through
/// the implicit equation.
pub fn ecc_anomaly<S: Scalar>(ell: S, e: S) -> S {
    let lv = ell.value();
    let ev = e.value();
    let lw = wrap_angle(lv);
    let ew = kepler_wrapped(lw, ev).expect("Kepler solve for e in [0,1)");
    let mut ea = S::from_f64(ew + (lv - lw));
    for _ in 0..4 {
        let (s, c) = ea.sin_cos();
        ea = ea - (ea - e * s - ell) / (S::one() - e * c);
    }
    ea
}

/// True anomaly from the eccentric anomaly through a branch-free formula:
/// f = E + atan2(sin E (e + (η-1) cos E), (cos E - e) cos E + η sin²E).
pub fn true_from_ecc_generic<S: Scalar>(ea: S, e: S, eta: S) -> S {
    let (s, c) = ea.sin_cos();
    let y = s * (e + (eta - S::one()) * c);
    let x = (c - e) * c + eta * s * s;
    ea + y.atan2(x)
}

/// Eccentric anomaly from the true anomaly (same structure, e -> -e).
pub fn ecc_from_true(f: f64, e: f64) -> f64 {
    let eta = ((1.0 - e) * (1.0 + e)).sqrt();
    let (s, c) = f.sin_cos();
    let y = s * (-e + (eta - 1.0) * c);
    let x = (c + e) * c + eta * s * s;
    f + y.atan2(x)
}

/// True anomaly, radius and equation of the center from the eccentric
/// anomaly. `phi` is f - ℓ, continuous in E.
pub fn true_from_eccentric(ea: f64, e: f64, a: f64) -> (f64, f64, f64) {
    let eta = ((1.0 - e) * (1.0 + e)).sqrt();
    let f = true_from_ecc_generic(ea, e, eta);
    let r = a * (1.0 - e * ea.cos());
    let phi = e * ea.sin() + (f - ea);
    (f, r, phi)
}

// ---------------------------------------------------------------------------
// Basis functions over the Delaunay chart
// ---------------------------------------------------------------------------

/// Values of every basis function at a chart point, any scalar depth.
#[derive(Clone, Copy, Debug)]
pub struct Basis<S> {
    pub a: S,
    pub n: S,
    pub e: S,
    pub eta: S,
    pub p: S,
    pub s2: S,
    pub s: S,
    pub c: S,
    pub beta: S,
    pub ea: S,
    pub f: S,
    pub r: S,
    pub phi: S,
}

/// Evaluate the basis at x = [ℓ, g, h, L, G, H].
pub fn basis<S: Scalar>(x: &[S; 6], mu: f64) -> Basis<S> {
    let mu_s = S::from_f64(mu);
    let (big_l, big_g, big_h) = (x[3], x[4], x[5]);
    let a = big_l * big_l / mu_s;
    let n = mu_s * mu_s / (big_l * big_l * big_l);
    let eta = big_g / big_l;
    let e = ((S::one() - eta) * (S::one() + eta)).sqrt();
    let p = big_g * big_g / mu_s;
    let c = big_h / big_g;
    let s2 = (S::one() - c) * (S::one() + c);
    let s = s2.sqrt();
    let beta = S::one() / (S::one() + eta);
    let ea = ecc_anomaly(x[0], e);
    let f = true_from_ecc_generic(ea, e, eta);
    let r = a * (S::one() - e * ea.cos());
    let phi = e * ea.sin() + (f - ea);
    Basis {
        a,
        n,
        e,
        eta,
        p,
        s2,
        s,
        c,
        beta,
        ea,
        f,
        r,
        phi,
    }
}

/// The six polar-nodal coordinates (r, θ, ν, R, Θ, N) as functions over the
/// Delaunay chart. This is the function set the periodic corrections are
/// evaluated on.
pub fn pn_coords<S: Scalar>(x: &[S; 6], mu: f64) -> [S; 6] {
    let b = basis(x, mu);
    let rdot = S::from_f64(mu) / x[4] * b.e * b.f.sin();
    [b.r, b.f + x[1], x[2], rdot, x[4], x[5]]
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

pub fn kepler_to_delaunay(k: &KeplerianElements, fld: &GravityField) -> Result<DelaunayState> {
    k.validate()?;
    let big_l = (fld.mu * k.a).sqrt();
    let eta = ((1.0 - k.e) * (1.0 + k.e)).sqrt();
    let big_g = big_l * eta;
    let big_h = big_g * k.inc.cos();
    Ok(DelaunayState {
        stage: Stage::Original,
        ell: k.mean_anomaly()?,
        g: k.argp,
        h: k.raan,
        big_l,
        big_g,
        big_h,
    })
}

pub fn delaunay_to_kepler(d: &DelaunayState, fld: &GravityField) -> Result<KeplerianElements> {
    d.validate()?;
    let e = d.eccentricity();
    if e < ECC_SINGULAR {
        return Err(Error::SingularChart(format!(
            "argument of perigee undefined for e = {e}"
        )));
    }
    if d.sin_inc() < SIN_I_SINGULAR {
        return Err(Error::SingularChart("equatorial orbit: node undefined".into()));
    }
    Ok(KeplerianElements {
        a: d.big_l * d.big_l / fld.mu,
        e,
        inc: (d.big_h / d.big_g).acos(),
        raan: d.h,
        argp: d.g,
        anomaly: Anomaly::Mean(d.ell),
    })
}

pub fn delaunay_to_polar_nodal(d: &DelaunayState, fld: &GravityField) -> Result<PolarNodalState> {
    d.validate()?;
    let x = pn_coords(&d.coords(), fld.mu);
    Ok(PolarNodalState {
        r: x[0],
        theta: x[1],
        nu: x[2],
        rdot: x[3],
        ang_mom: x[4],
        polar_mom: x[5],
    })
}

/// Polar-nodal to Delaunay. `f_hint`, when given, pins the revolution of the
/// reconstructed true anomaly so time series keep their winding.
pub fn polar_nodal_to_delaunay_hint(
    pn: &PolarNodalState,
    fld: &GravityField,
    stage: Stage,
    f_hint: Option<f64>,
) -> Result<DelaunayState> {
    pn.validate()?;
    let mu = fld.mu;
    let big_g = pn.ang_mom;
    let p = big_g * big_g / mu;
    let v2 = pn.rdot * pn.rdot + (big_g / pn.r) * (big_g / pn.r);
    let inv_a = 2.0 / pn.r - v2 / mu;
    if inv_a <= 0.0 {
        return Err(Error::Domain("non-elliptic polar-nodal state".into()));
    }
    let big_l = (mu / inv_a).sqrt();
    let e_cos_f = p / pn.r - 1.0;
    let e_sin_f = pn.rdot * big_g / mu;
    let mut f = e_sin_f.atan2(e_cos_f);
    if let Some(hint) = f_hint {
        f += TAU * ((hint - f) / TAU).round();
    }
    let e = (e_cos_f * e_cos_f + e_sin_f * e_sin_f).sqrt();
    let ea = ecc_from_true(f, e);
    Ok(DelaunayState {
        stage,
        ell: ea - e * ea.sin(),
        g: pn.theta - f,
        h: pn.nu,
        big_l,
        big_g,
        big_h: pn.polar_mom,
    })
}

pub fn polar_nodal_to_delaunay(pn: &PolarNodalState, fld: &GravityField) -> Result<DelaunayState> {
    polar_nodal_to_delaunay_hint(pn, fld, Stage::Original, None)
}

pub fn delaunay_to_cartesian(d: &DelaunayState, fld: &GravityField) -> Result<CartesianState> {
    d.validate()?;
    let b = basis(&d.coords(), fld.mu);
    let (sf, cf) = b.f.sin_cos();
    let rp = [b.r * cf, b.r * sf, 0.0];
    let k = (fld.mu / b.p).sqrt();
    let vp = [-k * sf, k * (b.e + cf), 0.0];
    let rot = perifocal_rotation(d.h, (b.c).acos(), d.g);
    Ok(CartesianState {
        position: mat_vec(&rot, &rp),
        velocity: mat_vec(&rot, &vp),
    })
}

fn perifocal_rotation(raan: f64, inc: f64, argp: f64) -> [[f64; 3]; 3] {
    let (so, co) = raan.sin_cos();
    let (si, ci) = inc.sin_cos();
    let (sw, cw) = argp.sin_cos();
    [
        [
            co * cw - so * sw * ci,
            -co * sw - so * cw * ci,
            so * si,
        ],
        [
            so * cw + co * sw * ci,
            -so * sw + co * cw * ci,
            -co * si,
        ],
        [sw * si, cw * si, ci],
    ]
}

fn mat_vec(m: &[[f64; 3]; 3], v: &[f64; 3]) -> [f64; 3] {
    std::array::from_fn(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

pub fn cartesian_to_delaunay(cs: &CartesianState, fld: &GravityField) -> Result<DelaunayState> {
    let r_vec = cs.position;
    let v_vec = cs.velocity;
    let r = (r_vec[0] * r_vec[0] + r_vec[1] * r_vec[1] + r_vec[2] * r_vec[2]).sqrt();
    if !(r > 0.0) {
        return Err(Error::Domain("zero position vector".into()));
    }
    let h_vec = [
        r_vec[1] * v_vec[2] - r_vec[2] * v_vec[1],
        r_vec[2] * v_vec[0] - r_vec[0] * v_vec[2],
        r_vec[0] * v_vec[1] - r_vec[1] * v_vec[0],
    ];
    let h_xy = (h_vec[0] * h_vec[0] + h_vec[1] * h_vec[1]).sqrt();
    let big_g = (h_xy * h_xy + h_vec[2] * h_vec[2]).sqrt();
    if h_xy / big_g < SIN_I_SINGULAR {
        return Err(Error::SingularChart("equatorial orbit: node undefined".into()));
    }
    let nu = h_vec[0].atan2(-h_vec[1]);
    let (sn, cn) = nu.sin_cos();
    // In-plane position: x' along the node, y' 90 deg ahead in the orbit plane.
    let xp = r_vec[0] * cn + r_vec[1] * sn;
    let yp = r_vec[2] * big_g / h_xy;
    let theta = yp.atan2(xp);
    let rdot = (r_vec[0] * v_vec[0] + r_vec[1] * v_vec[1] + r_vec[2] * v_vec[2]) / r;
    polar_nodal_to_delaunay(
        &PolarNodalState {
            r,
            theta,
            nu,
            rdot,
            ang_mom: big_g,
            polar_mom: h_vec[2],
        },
        fld,
    )
}

pub fn delaunay_to_semi_equinoctial(d: &DelaunayState) -> SemiEquinoctial {
    let e = d.eccentricity();
    SemiEquinoctial {
        f: d.ell + d.g,
        c: e * d.g.cos(),
        s: e * d.g.sin(),
        big_l: d.big_l,
        h: d.h,
        big_h: d.big_h,
    }
}

/// Back to Delaunay. Near-circular states take the g := 0 branch.
pub fn semi_equinoctial_to_delaunay(se: &SemiEquinoctial, stage: Stage) -> Result<DelaunayState> {
    let e2 = se.c * se.c + se.s * se.s;
    if !(e2 < 1.0) || !(se.big_l > 0.0) {
        return Err(Error::Domain("semi-equinoctial state out of range".into()));
    }
    let e = e2.sqrt();
    let g = if e < ECC_SINGULAR { 0.0 } else { se.s.atan2(se.c) };
    Ok(DelaunayState {
        stage,
        ell: se.f - g,
        g,
        h: se.h,
        big_l: se.big_l,
        big_g: se.big_l * (1.0 - e2).sqrt(),
        big_h: se.big_h,
    })
}

// ---------------------------------------------------------------------------
// convert() umbrella
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    Delaunay,
    Keplerian,
    PolarNodal,
    Cartesian,
    SemiEquinoctial,
}

#[derive(Clone, Copy, Debug)]
pub enum State {
    Delaunay(DelaunayState),
    Keplerian(KeplerianElements),
    PolarNodal(PolarNodalState),
    Cartesian(CartesianState),
    SemiEquinoctial(SemiEquinoctial),
}

impl State {
    pub fn chart(&self) -> Chart {
        match self {
            State::Delaunay(_) => Chart::Delaunay,
            State::Keplerian(_) => Chart::Keplerian,
            State::PolarNodal(_) => Chart::PolarNodal,
            State::Cartesian(_) => Chart::Cartesian,
            State::SemiEquinoctial(_) => Chart::SemiEquinoctial,
        }
    }
}

/// Convert any chart to any chart through the Delaunay hub.
pub fn convert(state: &State, target: Chart, fld: &GravityField) -> Result<State> {
    let d = match state {
        State::Delaunay(d) => *d,
        State::Keplerian(k) => kepler_to_delaunay(k, fld)?,
        State::PolarNodal(pn) => polar_nodal_to_delaunay(pn, fld)?,
        State::Cartesian(c) => cartesian_to_delaunay(c, fld)?,
        State::SemiEquinoctial(se) => semi_equinoctial_to_delaunay(se, Stage::Original)?,
    };
    Ok(match target {
        Chart::Delaunay => State::Delaunay(d),
        Chart::Keplerian => State::Keplerian(delaunay_to_kepler(&d, fld)?),
        Chart::PolarNodal => State::PolarNodal(delaunay_to_polar_nodal(&d, fld)?),
        Chart::Cartesian => State::Cartesian(delaunay_to_cartesian(&d, fld)?),
        Chart::SemiEquinoctial => State::SemiEquinoctial(delaunay_to_semi_equinoctial(&d)),
    })
}

// ---------------------------------------------------------------------------
// Partials
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct PartialRow {
    pub value: f64,
    /// Partials with respect to (ℓ, g, h, L, G, H).
    pub d: [f64; NVARS],
}

fn row(x: Dual<f64>) -> PartialRow {
    PartialRow { value: x.v, d: x.d }
}

/// Anomaly-dependent rows; their partials carry 1/e factors and are only
/// defined away from circular orbits.
#[derive(Clone, Copy, Debug)]
pub struct AnomalyRows {
    pub f: PartialRow,
    pub ea: PartialRow,
    pub phi: PartialRow,
    pub r: PartialRow,
}

#[derive(Clone, Debug)]
pub struct PartialsTable {
    pub a: PartialRow,
    pub e: PartialRow,
    pub eta: PartialRow,
    pub p: PartialRow,
    pub s: PartialRow,
    pub c: PartialRow,
    pub beta: PartialRow,
    pub n: PartialRow,
    anomaly: Option<AnomalyRows>,
    ecc: f64,
}

impl PartialsTable {
    pub fn anomaly(&self) -> Result<&AnomalyRows> {
        self.anomaly
            .as_ref()
            .ok_or(Error::DegeneratePartials { e: self.ecc })
    }

    /// All available rows, labeled.
    pub fn rows(&self) -> Vec<(&'static str, PartialRow)> {
        let mut v = vec![
            ("a", self.a),
            ("e", self.e),
            ("eta", self.eta),
            ("p", self.p),
            ("s", self.s),
            ("c", self.c),
            ("beta", self.beta),
            ("n", self.n),
        ];
        if let Some(an) = &self.anomaly {
            v.extend([("f", an.f), ("E", an.ea), ("phi", an.phi), ("r", an.r)]);
        }
        v
    }
}

/// Analytic partials of every basis function, computed by forward-mode
/// differentiation through the Kepler equation.
pub fn partials_at(state: &DelaunayState, fld: &GravityField) -> Result<PartialsTable> {
    state.validate()?;
    let x = state.coords();
    let ecc = state.eccentricity();
    let xd = seed(&x);
    let b = basis(&xd, fld.mu);
    let anomaly = if ecc < ECC_SINGULAR {
        None
    } else {
        Some(AnomalyRows {
            f: row(b.f),
            ea: row(b.ea),
            phi: row(b.phi),
            r: row(b.r),
        })
    };
    Ok(PartialsTable {
        a: row(b.a),
        e: row(b.e),
        eta: row(b.eta),
        p: row(b.p),
        s: row(b.s),
        c: row(b.c),
        beta: row(b.beta),
        n: row(b.n),
        anomaly,
        ecc,
    })
}
