//! Built-in test orbits.

use crate::elements::{kepler_to_delaunay, Anomaly, DelaunayState, GravityField, KeplerianElements};
use crate::{Error, Result};

/// Initial Keplerian elements of a named test case (angles in degrees).
#[derive(Clone, Copy, Debug)]
pub struct TestCase {
    pub name: &'static str,
    pub sma: f64,
    pub ecc: f64,
    pub inc_deg: f64,
    pub raan_deg: f64,
    pub argp_deg: f64,
    pub mean_anomaly_deg: f64,
}

/// Sun-synchronous low orbit.
pub const PRISMA: TestCase = TestCase {
    name: "prisma",
    sma: 6878.137,
    ecc: 0.001,
    inc_deg: 97.42,
    raan_deg: 168.162,
    argp_deg: 20.0,
    mean_anomaly_deg: 30.0,
};

/// Almost-circular orbit close to the critical inclination.
pub const TOPEX: TestCase = TestCase {
    name: "topex",
    sma: 7707.270,
    ecc: 0.0001,
    inc_deg: 66.04,
    raan_deg: 180.001,
    argp_deg: 270.0,
    mean_anomaly_deg: 180.0,
};

/// High-eccentricity transfer orbit.
pub const GTO: TestCase = TestCase {
    name: "gto",
    sma: 24460.0,
    ecc: 0.73,
    inc_deg: 30.0,
    raan_deg: 170.1,
    argp_deg: 280.0,
    mean_anomaly_deg: 0.0,
};

pub const ALL: [TestCase; 3] = [PRISMA, TOPEX, GTO];

pub fn by_name(name: &str) -> Result<TestCase> {
    ALL.iter()
        .find(|c| c.name.eq_ignore_ascii_case(name))
        .copied()
        .ok_or_else(|| Error::Usage(format!("unknown test case `{name}`")))
}

impl TestCase {
    pub fn keplerian(&self) -> KeplerianElements {
        KeplerianElements {
            a: self.sma,
            e: self.ecc,
            inc: self.inc_deg.to_radians(),
            raan: self.raan_deg.to_radians(),
            argp: self.argp_deg.to_radians(),
            anomaly: Anomaly::Mean(self.mean_anomaly_deg.to_radians()),
        }
    }

    pub fn delaunay(&self, fld: &GravityField) -> Result<DelaunayState> {
        kepler_to_delaunay(&self.keplerian(), fld)
    }
}
