//! Forward-mode differentiation over the Delaunay chart.
//!
//! A [`Dual<S>`] carries a value and its six partials with respect to
//! (ℓ, g, h, L, G, H). Nesting (`Dual<Dual<f64>>`, ...) yields higher
//! derivatives; the Lie-transform engine needs depth 3.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of chart variables differentiation runs over.
pub const NVARS: usize = 6;

/// Arithmetic shared by `f64` and nested duals, enough to evaluate every
/// series and chart function in the crate generically.
pub trait Scalar:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    /// Innermost value part.
    fn value(&self) -> f64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sin_cos(self) -> (Self, Self) {
        (self.sin(), self.cos())
    }
    fn sqrt(self) -> Self;
    fn atan2(self, other: Self) -> Self;
    fn powi(self, n: i32) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn one() -> Self {
        Self::from_f64(1.0)
    }
    fn scale(self, k: f64) -> Self {
        self * Self::from_f64(k)
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn value(&self) -> f64 {
        *self
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn atan2(self, other: Self) -> Self {
        f64::atan2(self, other)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

/// Value plus gradient with respect to the six Delaunay variables.
#[derive(Clone, Copy, Debug)]
pub struct Dual<S> {
    pub v: S,
    pub d: [S; NVARS],
}

impl<S: Scalar> Dual<S> {
    pub fn constant(v: S) -> Self {
        Dual {
            v,
            d: [S::zero(); NVARS],
        }
    }

    /// Variable seeded in direction `i`.
    pub fn variable(v: S, i: usize) -> Self {
        let mut d = [S::zero(); NVARS];
        d[i] = S::one();
        Dual { v, d }
    }
}

/// Lift a chart point one dual level, seeding each coordinate.
pub fn seed<S: Scalar>(x: &[S; NVARS]) -> [Dual<S>; NVARS] {
    std::array::from_fn(|i| Dual::variable(x[i], i))
}

impl<S: Scalar> Add for Dual<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual {
            v: self.v + rhs.v,
            d: std::array::from_fn(|i| self.d[i] + rhs.d[i]),
        }
    }
}

impl<S: Scalar> Sub for Dual<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual {
            v: self.v - rhs.v,
            d: std::array::from_fn(|i| self.d[i] - rhs.d[i]),
        }
    }
}

impl<S: Scalar> Mul for Dual<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Dual {
            v: self.v * rhs.v,
            d: std::array::from_fn(|i| self.v * rhs.d[i] + self.d[i] * rhs.v),
        }
    }
}

impl<S: Scalar> Div for Dual<S> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q = self.v / rhs.v;
        Dual {
            v: q,
            d: std::array::from_fn(|i| (self.d[i] - q * rhs.d[i]) / rhs.v),
        }
    }
}

impl<S: Scalar> Neg for Dual<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual {
            v: -self.v,
            d: std::array::from_fn(|i| -self.d[i]),
        }
    }
}

impl<S: Scalar> Scalar for Dual<S> {
    fn from_f64(x: f64) -> Self {
        Dual::constant(S::from_f64(x))
    }
    fn value(&self) -> f64 {
        self.v.value()
    }
    fn sin(self) -> Self {
        let (s, c) = self.v.sin_cos();
        Dual {
            v: s,
            d: std::array::from_fn(|i| c * self.d[i]),
        }
    }
    fn cos(self) -> Self {
        let (s, c) = self.v.sin_cos();
        Dual {
            v: c,
            d: std::array::from_fn(|i| -(s * self.d[i])),
        }
    }
    fn sin_cos(self) -> (Self, Self) {
        let (s, c) = self.v.sin_cos();
        (
            Dual {
                v: s,
                d: std::array::from_fn(|i| c * self.d[i]),
            },
            Dual {
                v: c,
                d: std::array::from_fn(|i| -(s * self.d[i])),
            },
        )
    }
    fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        let half = S::from_f64(0.5);
        Dual {
            v: r,
            d: std::array::from_fn(|i| half * self.d[i] / r),
        }
    }
    fn atan2(self, other: Self) -> Self {
        // d atan2(y, x) = (x dy - y dx) / (x² + y²)
        let (y, x) = (self, other);
        let denom = x.v * x.v + y.v * y.v;
        Dual {
            v: y.v.atan2(x.v),
            d: std::array::from_fn(|i| (x.v * y.d[i] - y.v * x.d[i]) / denom),
        }
    }
    fn powi(self, n: i32) -> Self {
        match n {
            0 => Self::one(),
            1 => self,
            _ => {
                let w = self.v.powi(n - 1);
                let k = S::from_f64(n as f64);
                Dual {
                    v: w * self.v,
                    d: std::array::from_fn(|i| k * w * self.d[i]),
                }
            }
        }
    }
}
