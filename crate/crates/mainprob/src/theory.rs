//! Hard-coded series of the two normalization stages and the secular rates.
//!
//! Stage one makes the argument of perigee cyclic (the total angular momentum
//! becomes a formal integral); stage two is a Delaunay normalization removing
//! the mean anomaly. Every coefficient is an inclination polynomial in
//! s² = sin²I, stored exactly as an integer-factored [`Poly`] so transcription
//! can be checked by exact arithmetic.
//!
//! Conventions used throughout:
//! * the small parameter is ε = (J2/4)(R⊕/p)², p = G²/μ;
//! * series assemble as F = Σ_m (1/m!) F_m;
//! * first-stage terms [`w_perigee`]/[`k_perigee`] include the ε(G)^m factor,
//!   with ε a *function* of G, so canonical brackets differentiate it;
//! * second-stage terms [`w_delaunay`]/[`k_delaunay`] are ε-free: there ε is a
//!   physical constant and the caller scales by ε^m.

use crate::dual::Scalar;
use crate::elements::{basis, GravityField};
use crate::{Error, Result};

/// Default critical-inclination guard on |5s²-4|.
pub const DEFAULT_GUARD: f64 = 0.02;
/// Margin below which results should be treated as degraded.
pub const WARN_MARGIN: f64 = 0.1;

/// Exact factored polynomial in s²: (num/den) · Π_f Horner(f, s²),
/// factor coefficients in descending powers of s².
#[derive(Clone, Copy, Debug)]
pub struct Poly {
    pub num: i64,
    pub den: i64,
    pub factors: &'static [&'static [i64]],
}

impl Poly {
    pub fn eval<S: Scalar>(&self, s2: S) -> S {
        let mut acc = S::from_f64(self.num as f64);
        for f in self.factors {
            let mut h = S::from_f64(f[0] as f64);
            for &c in &f[1..] {
                h = h * s2 + S::from_f64(c as f64);
            }
            acc = acc * h;
        }
        if self.den != 1 {
            acc / S::from_f64(self.den as f64)
        } else {
            acc
        }
    }

    /// Exact integer evaluation of num · Π factors at an integer s²; the
    /// denominator is returned untouched.
    pub fn eval_exact(&self, s2: i128) -> (i128, i64) {
        let mut acc = self.num as i128;
        for f in self.factors {
            let mut h = f[0] as i128;
            for &c in &f[1..] {
                h = h * s2 + c as i128;
            }
            acc *= h;
        }
        (acc, self.den)
    }

    /// Expanded coefficients of num · Π factors, ascending powers of s².
    pub fn coeffs(&self) -> Vec<i128> {
        let mut out = vec![self.num as i128];
        for f in self.factors {
            let mut next = vec![0i128; out.len() + f.len() - 1];
            for (i, &a) in out.iter().enumerate() {
                for (j, &b) in f.iter().rev().enumerate() {
                    next[i + j] += a * b as i128;
                }
            }
            out = next;
        }
        out
    }
}

macro_rules! poly {
    ($num:expr ; $($f:expr),+ $(,)?) => {
        Poly { num: $num, den: 1, factors: &[$(&$f),+] }
    };
    ($num:expr, $den:expr ; $($f:expr),+ $(,)?) => {
        Poly { num: $num, den: $den, factors: &[$(&$f),+] }
    };
}

/// Coefficient of the averaged-Hamiltonian sums: index pair (j, k) on
/// (p/r)^j e^{2k}.
#[derive(Clone, Copy, Debug)]
pub struct Gamma {
    pub j: u8,
    pub k: u8,
    pub poly: Poly,
}

/// Coefficient of the first-stage generating function: e^{2j+(k mod 2)}
/// s^{2l} sin(k f + 2 l g); k = 0 rows belong to the integration constant.
#[derive(Clone, Copy, Debug)]
pub struct GammaW {
    pub j: u8,
    pub k: i8,
    pub l: u8,
    pub poly: Poly,
}

/// Second-stage coefficient indexed by (j, k) on e^j (or e^{2j}) and η^k.
#[derive(Clone, Copy, Debug)]
pub struct Coef {
    pub j: u8,
    pub k: u8,
    pub poly: Poly,
}

/// Secular-rate coefficient: order m, power i of η.
#[derive(Clone, Copy, Debug)]
pub struct Rate {
    pub m: u8,
    pub i: u8,
    pub poly: Poly,
}

// ---------------------------------------------------------------------------
// Stage one: elimination of the argument of perigee
// ---------------------------------------------------------------------------

/// Order-2 averaged-term polynomials γ₂ (prefactor 3s²/(8(5s²-4)²)).
pub static GAMMA_K2: [Gamma; 4] = [
    Gamma { j: 0, k: 0, poly: poly!(-8; [200, -455, 345, -88]) },
    Gamma { j: 0, k: 1, poly: poly!(1; [375, -930, 780, -224]) },
    Gamma { j: 1, k: 0, poly: poly!(5; [805, -1878, 1464, -384]) },
    Gamma { j: 2, k: 0, poly: poly!(-1; [825, -1990, 1616, -448]) },
];

/// Order-3 averaged-term polynomials γ₃ (prefactor 3s²/(32(5s²-4)³)).
pub static GAMMA_K3: [Gamma; 9] = [
    Gamma { j: 0, k: 0, poly: poly!(-8; [5, -4], [313525, -899030, 933656, -409296, 61824]) },
    Gamma { j: 0, k: 1, poly: poly!(4; [1551625, -5675700, 8148960, -5706408, 1930272, -248064]) },
    Gamma { j: 0, k: 2, poly: poly!(-2; [40500, -99525, 64840, 18788, -33936, 9408]) },
    Gamma { j: 1, k: 0, poly: poly!(2; [5, -4], [2631475, -7558270, 7872692, -3470616, 530304]) },
    Gamma { j: 1, k: 1, poly: poly!(-1; [3457125, -12282750, 17085020, -11554040, 3756000, -459648]) },
    Gamma { j: 2, k: 0, poly: poly!(-2; [5, -4], [1584375, -4536150, 4716436, -2082712, 321408]) },
    Gamma { j: 2, k: 1, poly: poly!(1; [138375, -128250, -351900, 612440, -326368, 56448]) },
    Gamma { j: 3, k: 0, poly: poly!(8; [5, -4], [93300, -259915, 264982, -116928, 18816]) },
    Gamma { j: 4, k: 0, poly: poly!(-20; [1, 0], [5, -4], [15, -14], [45, 36, -56]) },
];

/// Periodic rows Γ₂ of the order-2 generating term, prefactor ε²G/(32(5s²-4)²).
pub static GAMMA_W2: [GammaW; 17] = [
    GammaW { j: 1, k: -1, l: 1, poly: poly!(-12; [5, -4], [7, -6], [15, -14]) },
    GammaW { j: 0, k: 1, l: 1, poly: poly!(-48; [5, -4], [195, -340, 148]) },
    GammaW { j: 1, k: 1, l: 1, poly: poly!(24; [5, -4], [5, -4], [15, -14]) },
    GammaW { j: 1, k: 1, l: 2, poly: poly!(-3; [225, -430, 208]) },
    GammaW { j: 0, k: 2, l: 1, poly: poly!(-96; [5, -4], [5, -4], [9, -8]) },
    GammaW { j: 1, k: 2, l: 1, poly: poly!(-24; [5, -4], [65, -116, 52]) },
    GammaW { j: 1, k: 2, l: 2, poly: poly!(-60; [50, -87, 38]) },
    GammaW { j: 0, k: 3, l: 1, poly: poly!(-64; [5, -4], [5, -4], [8, -7]) },
    GammaW { j: 1, k: 3, l: 1, poly: poly!(4; [3, -2], [5, -4], [15, -14]) },
    GammaW { j: 0, k: 3, l: 2, poly: poly!(-4; [5, -4], [135, -122]) },
    GammaW { j: 1, k: 3, l: 2, poly: poly!(-8; [75, -135, 61]) },
    GammaW { j: 1, k: 4, l: 1, poly: poly!(-12; [5, -4], [5, -4], [7, -6]) },
    GammaW { j: 0, k: 4, l: 2, poly: poly!(24; [5, -4], [5, -4]) },
    GammaW { j: 1, k: 4, l: 2, poly: poly!(-12; [5, -4], [25, -23]) },
    GammaW { j: 0, k: 5, l: 2, poly: poly!(24; [5, -4], [5, -4]) },
    GammaW { j: 1, k: 5, l: 2, poly: poly!(-3; [5, -4], [15, -14]) },
    GammaW { j: 1, k: 6, l: 2, poly: poly!(6; [5, -4], [5, -4]) },
];

/// Integration-constant rows (k = 0) of the order-2 generating term,
/// prefactor ε²G/(64(5s²-4)³) on e^{2(j+l)} s^{2l} sin 2lg.
pub static GAMMA_W2_CONST: [GammaW; 3] = [
    GammaW { j: 0, k: 0, l: 1, poly: poly!(8; [5, -4], [5, -4], [1215, -1997, 824]) },
    GammaW { j: 1, k: 0, l: 1, poly: poly!(-2; [5, -4], [15, -14], [45, 36, -56]) },
    GammaW { j: 0, k: 0, l: 2, poly: poly!(1; [15, -14], [15, -14], [15, -13]) },
];

/// Periodic rows Γ₃ of the order-3 generating term, prefactor
/// ε³G/(8960(5s²-4)⁴).
pub static GAMMA_W3: [GammaW; 54] = [
    GammaW { j: 2, k: -3, l: 1, poly: poly!(35; [15, -14], [87375, -335550, 505080, -371184, 132096, -17920]) },
    GammaW { j: 2, k: -2, l: 1, poly: poly!(105; [15, -14], [399375, -1863400, 3389440, -3023632, 1328128, -230400]) },
    GammaW { j: 1, k: -1, l: 1, poly: poly!(-840; [5, -4], [228125, -549325, 255940, 324664, -352992, 93824]) },
    GammaW { j: 2, k: -1, l: 1, poly: poly!(210; [15, -14], [100875, -275600, 228220, -6408, -70272, 23296]) },
    GammaW { j: 2, k: -1, l: 2, poly: poly!(-105; [5, -4], [15, -14], [13725, -37680, 34228, -10304]) },
    GammaW { j: 0, k: 1, l: 1, poly: poly!(-1680; [5, -4], [5, -4], [486525, -1594290, 1955772, -1064576, 216960]) },
    GammaW { j: 1, k: 1, l: 1, poly: poly!(840; [5, -4], [1531125, -6503075, 10982780, -9224760, 3855648, -641920]) },
    GammaW { j: 2, k: 1, l: 1, poly: poly!(-420; [15, -14], [61875, -138825, 51640, 92200, -89088, 22400]) },
    GammaW { j: 1, k: 1, l: 2, poly: poly!(1680; [5, -4], [240750, -775475, 932445, -495822, 98320]) },
    GammaW { j: 2, k: 1, l: 2, poly: poly!(105; [5, -4], [226125, -787950, 1015020, -572056, 118944]) },
    GammaW { j: 2, k: 1, l: 3, poly: poly!(-840; [15, -14], [1125, -3300, 3235, -1058]) },
    GammaW { j: 0, k: 2, l: 1, poly: poly!(-1680; [5, -4], [5, -4], [5, -4], [41615, -97838, 76016, -19488]) },
    GammaW { j: 1, k: 2, l: 1, poly: poly!(-1680; [5, -4], [666875, -2586600, 4014940, -3117320, 1210368, -187904]) },
    GammaW { j: 2, k: 2, l: 1, poly: poly!(210; [5398125, -27480750, 57999400, -64973520, 40757888, -13579264, 1878016]) },
    GammaW { j: 1, k: 2, l: 2, poly: poly!(-3360; [5, -4], [5, -4], [42850, -108830, 92099, -25958]) },
    GammaW { j: 2, k: 2, l: 2, poly: poly!(840; [5, -4], [123750, -359475, 378010, -167724, 25624]) },
    GammaW { j: 2, k: 2, l: 3, poly: poly!(-105; [639375, -2259750, 2991200, -1757840, 387104]) },
    GammaW { j: 0, k: 3, l: 1, poly: poly!(-1120; [5, -4], [5, -4], [270650, -828285, 945816, -477232, 89664]) },
    GammaW { j: 1, k: 3, l: 1, poly: poly!(280; [5, -4], [634500, -2623725, 4300340, -3496152, 1412352, -227584]) },
    GammaW { j: 2, k: 3, l: 1, poly: poly!(-70; [15, -14], [76875, -202950, 167700, -16544, -37376, 12544]) },
    GammaW { j: 0, k: 3, l: 2, poly: poly!(-560; [5, -4], [5, -4], [605775, -1524950, 1277728, -356256]) },
    GammaW { j: 1, k: 3, l: 2, poly: poly!(560; [5, -4], [5, -4], [9150, -6435, -9741, 7154]) },
    GammaW { j: 2, k: 3, l: 2, poly: poly!(35; [5, -4], [104625, -68850, -286620, 378936, -127232]) },
    GammaW { j: 1, k: 3, l: 3, poly: poly!(-280; [5, -4], [52875, -129225, 102900, -26456]) },
    GammaW { j: 2, k: 3, l: 3, poly: poly!(-140; [15, -14], [7875, -21225, 19120, -5756]) },
    GammaW { j: 1, k: 4, l: 1, poly: poly!(-840; [5, -4], [516875, -1956050, 2950940, -2217472, 829440, -123392]) },
    GammaW { j: 2, k: 4, l: 1, poly: poly!(420; [5, -4], [173625, -668250, 1023720, -780120, 295872, -44800]) },
    GammaW { j: 0, k: 4, l: 2, poly: poly!(-6720; [5, -4], [5, -4], [5, -4], [730, -1153, 444]) },
    GammaW { j: 1, k: 4, l: 2, poly: poly!(-3360; [5, -4], [5, -4], [66050, -166215, 139230, -38808]) },
    GammaW { j: 2, k: 4, l: 2, poly: poly!(420; [5, -4], [5, -4], [20925, -38700, 19984, -1976]) },
    GammaW { j: 1, k: 4, l: 3, poly: poly!(840; [5, -4], [10125, -32150, 33500, -11456]) },
    GammaW { j: 2, k: 4, l: 3, poly: poly!(-2100; [5, -4], [3525, -9240, 7996, -2280]) },
    GammaW { j: 1, k: 5, l: 1, poly: poly!(-168; [5, -4], [115000, -434875, 663700, -512080, 199936, -31488]) },
    GammaW { j: 2, k: 5, l: 1, poly: poly!(-105; [1, 0], [5, -4], [15, -14], [825, -1990, 1616, -448]) },
    GammaW { j: 0, k: 5, l: 2, poly: poly!(-336; [5, -4], [5, -4], [5, -4], [15425, -24050, 9112]) },
    GammaW { j: 1, k: 5, l: 2, poly: poly!(-84; [5, -4], [5, -4], [551625, -1390850, 1167040, -325728]) },
    GammaW { j: 2, k: 5, l: 2, poly: poly!(105; [5, -4], [5, -4], [15, -14], [225, 288, -364]) },
    GammaW { j: 0, k: 5, l: 3, poly: poly!(3360; [5, -4], [5, -4], [1575, -2795, 1256]) },
    GammaW { j: 1, k: 5, l: 3, poly: poly!(840; [5, -4], [8250, -24975, 25080, -8336]) },
    GammaW { j: 2, k: 5, l: 3, poly: poly!(-420; [5, -4], [15, -14], [15, -14], [15, -13]) },
    GammaW { j: 2, k: 6, l: 1, poly: poly!(35; [5, -4], [171375, -616950, 871680, -600128, 199168, -25088]) },
    GammaW { j: 1, k: 6, l: 2, poly: poly!(-280; [5, -4], [5, -4], [5, -4], [8265, -12874, 4872]) },
    GammaW { j: 2, k: 6, l: 2, poly: poly!(-280; [5, -4], [5, -4], [11475, -29280, 24828, -6992]) },
    GammaW { j: 0, k: 6, l: 3, poly: poly!(560; [5, -4], [5, -4], [5, -4], [1335, -1166]) },
    GammaW { j: 1, k: 6, l: 3, poly: poly!(560; [5, -4], [5, -4], [8325, -14910, 6764]) },
    GammaW { j: 2, k: 6, l: 3, poly: poly!(70; [5, -4], [21375, -61950, 59960, -19328]) },
    GammaW { j: 1, k: 7, l: 2, poly: poly!(-60; [5, -4], [5, -4], [5, -4], [8385, -13226, 5080]) },
    GammaW { j: 0, k: 7, l: 3, poly: poly!(10080; [5, -4], [5, -4], [5, -4], [90, -79]) },
    GammaW { j: 1, k: 7, l: 3, poly: poly!(12600; [5, -4], [5, -4], [105, -191, 88]) },
    GammaW { j: 2, k: 8, l: 2, poly: poly!(-840; [3, -2], [5, -4], [5, -4], [5, -4], [15, -14]) },
    GammaW { j: 1, k: 8, l: 3, poly: poly!(4200; [5, -4], [5, -4], [5, -4], [96, -85]) },
    GammaW { j: 2, k: 8, l: 3, poly: poly!(210; [5, -4], [5, -4], [525, -990, 472]) },
    GammaW { j: 1, k: 9, l: 3, poly: poly!(7560; [5, -4], [5, -4], [5, -4], [10, -9]) },
    GammaW { j: 2, k: 10, l: 3, poly: poly!(315; [5, -4], [5, -4], [5, -4], [15, -14]) },
];

/// Integration-constant rows of the order-3 generating term, prefactor
/// ε³G/(1536(5s²-4)⁵) on e^{2(j+l)} s^{2l} sin 2lg.
pub static GAMMA_W3_CONST: [GammaW; 6] = [
    GammaW { j: 0, k: 0, l: 1, poly: poly!(48; [5, -4], [5, -4], [9060750, -34431275, 51858720, -38675200, 14258176, -2072064]) },
    GammaW { j: 1, k: 0, l: 1, poly: poly!(-12; [5, -4], [93223125, -421210500, 784654200, -771469840, 422629664, -122600960, 14780416]) },
    GammaW { j: 2, k: 0, l: 1, poly: poly!(6; [15, -14], [2328750, -8703375, 13317150, -10848180, 5157560, -1450624, 200704]) },
    GammaW { j: 0, k: 0, l: 2, poly: poly!(-6; [5, -4], [5, -4], [2171250, -7719525, 10225470, -5983260, 1305248]) },
    GammaW { j: 1, k: 0, l: 2, poly: poly!(-3; [5, -4], [15, -14], [15, -14], [1800, 2655, -8208, 3928]) },
    GammaW { j: 0, k: 0, l: 3, poly: poly!(2; [15, -14], [15, -14], [15, -14], [825, -1445, 634]) },
];

// ---------------------------------------------------------------------------
// Stage two: Delaunay normalization
// ---------------------------------------------------------------------------

/// λ₂ polynomials of the order-2 averaged term, index = power of η.
pub static LAMBDA_K2: [Poly; 3] = [
    poly!(5; [7, -16, 8]),
    poly!(4; [3, -2], [3, -2]),
    poly!(1; [5, 8, -8]),
];

/// λ₃ polynomials of the order-3 averaged term, index = power of η.
pub static LAMBDA_K3: [Poly; 5] = [
    poly!(5; [28700, -107205, 158960, -118492, 45152, -7168]),
    poly!(60; [3, -2], [5, -4], [5, -4], [7, -16, 8]),
    poly!(-2; [28675, -98005, 130852, -87164, 30176, -4608]),
    poly!(20; [3, -2], [5, -4], [5, -4], [5, 8, -8]),
    poly!(-1; [1, 0], [15, -14], [450, -925, 590, -112]),
];

/// Λ₂ rows of the order-2 generating term on η^k e^j sin jf, prefactor
/// -G'β/(32(5s²-4)²).
pub static LAMBDA_W2: [Coef; 8] = [
    Coef { j: 1, k: 0, poly: poly!(15; [3, -2], [805, -2448, 2400, -768]) },
    Coef { j: 1, k: 1, poly: poly!(3; [3, -2], [2225, -8160, 8928, -3072]) },
    Coef { j: 1, k: 2, poly: poly!(3; [825, -3030, 4064, -2368, 512]) },
    Coef { j: 1, k: 3, poly: poly!(-3; [1, 0], [975, -2250, 1728, -448]) },
    Coef { j: 2, k: 0, poly: poly!(6; [1925, -6210, 7452, -3936, 768]) },
    Coef { j: 2, k: 1, poly: poly!(6; [125, -930, 1660, -1120, 256]) },
    Coef { j: 3, k: 0, poly: poly!(1; [2625, -7270, 7408, -3264, 512]) },
    Coef { j: 3, k: 1, poly: poly!(1; [1, 0], [825, -1990, 1616, -448]) },
];

/// Equation-of-the-center rows Φ₂ of the order-2 generating term on e^{2j},
/// prefactor -(3/4)G'φ; index = j.
pub static PHI_W2: [Poly; 2] = [
    poly!(8; [1, -1], [5, -4]),
    poly!(-1; [5, 8, -8]),
];

/// Λ₃ rows of the order-3 generating term on η^{k-1} e^j sin jf, prefactor
/// G'β²/(128(5s²-4)³).
pub static LAMBDA_W3: [Coef; 29] = [
    Coef { j: 1, k: 0, poly: poly!(-864; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
    Coef { j: 1, k: 1, poly: poly!(3; [22218875, -104346550, 202703740, -209869352, 123038240, -39033472, 5275648]) },
    Coef { j: 1, k: 2, poly: poly!(12; [10925500, -50711075, 97386820, -99715748, 57863024, -18199872, 2445312]) },
    Coef { j: 1, k: 3, poly: poly!(3; [27560125, -119080550, 212650740, -202245448, 109190304, -32208768, 4128768]) },
    Coef { j: 1, k: 4, poly: poly!(12; [3155125, -10820800, 13899620, -7620256, 944256, 613248, -167936]) },
    Coef { j: 1, k: 5, poly: poly!(3; [5410625, -17331450, 19448180, -6842968, -2742560, 2556544, -491520]) },
    Coef { j: 1, k: 6, poly: poly!(-12; [59625, -415275, 942920, -994980, 529776, -134592, 12288]) },
    Coef { j: 1, k: 7, poly: poly!(-3; [1, 0], [77625, -568950, 1256420, -1222216, 550816, -94080]) },
    Coef { j: 2, k: 0, poly: poly!(-1044; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
    Coef { j: 2, k: 1, poly: poly!(24; [131000, -1121875, 3061340, -3989664, 2758768, -983648, 143360]) },
    Coef { j: 2, k: 2, poly: poly!(96; [51625, -437800, 1183290, -1528682, 1049344, -372240, 54144]) },
    Coef { j: 2, k: 3, poly: poly!(-12; [5, -4], [16375, 64070, -257508, 297320, -145792, 26624]) },
    Coef { j: 2, k: 4, poly: poly!(-12; [263625, -1000750, 1526820, -1206712, 539616, -142592, 19968]) },
    Coef { j: 2, k: 5, poly: poly!(-12; [1, 0], [162375, -576100, 787020, -506248, 145984, -12992]) },
    Coef { j: 3, k: 0, poly: poly!(-656; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
    Coef { j: 3, k: 1, poly: poly!(1; [-934875, 605000, 4973120, -10412952, 8554272, -3281280, 491520]) },
    Coef { j: 3, k: 2, poly: poly!(1; [-2080125, 3562000, 2881300, -11103360, 10155456, -4038912, 614400]) },
    Coef { j: 3, k: 3, poly: poly!(-1; [5, -4], [254925, -526480, 318084, -10672, -40064, 8192]) },
    Coef { j: 3, k: 4, poly: poly!(3; [28875, -147800, 254260, -160992, -11968, 54016, -16384]) },
    Coef { j: 3, k: 5, poly: poly!(-12; [1, 0], [4500, -4125, -16075, 31670, -20664, 4704]) },
    Coef { j: 4, k: 0, poly: poly!(-240; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
    Coef { j: 4, k: 1, poly: poly!(6; [5, -4], [50325, -157660, 180520, -90312, 18112, -1024]) },
    Coef { j: 4, k: 2, poly: poly!(12; [5, -4], [47475, -147000, 164852, -79056, 14208, -512]) },
    Coef { j: 4, k: 3, poly: poly!(6; [1, 0], [5, -4], [44625, -136340, 149184, -67800, 10304]) },
    Coef { j: 5, k: 0, poly: poly!(-48; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
    Coef { j: 5, k: 1, poly: poly!(6; [1, 0], [5, -4], [5, -4], [180, -609, 530, -112]) },
    Coef { j: 5, k: 2, poly: poly!(3; [1, 0], [5, -4], [1125, -7440, 11516, -6144, 896]) },
    Coef { j: 5, k: 3, poly: poly!(-3; [1, 0], [1, 0], [5, -4], [15, -14], [45, 36, -56]) },
    Coef { j: 6, k: 0, poly: poly!(-4; [3, -2], [3, -2], [3, -2], [5, -4], [5, -4], [5, -4]) },
];

/// Equation-of-the-center rows Φ₃ of the order-3 generating term on
/// η^k e^j cos jf, prefactor (3/16)G'φ/(5s²-4)². The last four rows are
/// fixed multiples of the (j, k) = (0, 3) row.
pub static PHI_W3: [Coef; 8] = [
    Coef { j: 0, k: 0, poly: poly!(5; [89100, -323615, 466320, -337684, 125216, -19456]) },
    Coef { j: 0, k: 2, poly: poly!(-2; [112125, -374775, 488460, -314932, 103840, -14848]) },
    Coef { j: 0, k: 3, poly: poly!(8; [3, -2], [5, -4], [5, -4], [5, 8, -8]) },
    Coef { j: 0, k: 4, poly: poly!(-3; [1, 0], [15, -14], [450, -925, 590, -112]) },
    Coef { j: 1, k: 0, poly: poly!(60; [3, -2], [5, -4], [5, -4], [5, 8, -8]) },
    Coef { j: 1, k: 2, poly: poly!(-12; [3, -2], [5, -4], [5, -4], [5, 8, -8]) },
    Coef { j: 2, k: 0, poly: poly!(24; [3, -2], [5, -4], [5, -4], [5, 8, -8]) },
    Coef { j: 3, k: 0, poly: poly!(4; [3, -2], [5, -4], [5, -4], [5, 8, -8]) },
];

// ---------------------------------------------------------------------------
// Secular rates
// ---------------------------------------------------------------------------

/// Ψ coefficients of the mean-argument-of-latitude rate:
/// n_F = n(1 + Σ_m ε^m/(5s²-4)^m Σ_i Ψ_{m,i} η^i).
pub static PSI_F: [Rate; 12] = [
    Rate { m: 1, i: 0, poly: poly!(-3; [5, -4], [5, -4]) },
    Rate { m: 1, i: 1, poly: poly!(-3; [3, -2], [5, -4]) },
    Rate { m: 2, i: 0, poly: poly!(15, 8; [5, -4], [5, -4], [77, -172, 88]) },
    Rate { m: 2, i: 1, poly: poly!(9, 8; [5, -4], [5, -4], [155, -256, 104]) },
    Rate { m: 2, i: 2, poly: poly!(3, 8; [5, -4], [5, -4], [189, -156, 8]) },
    Rate { m: 2, i: 3, poly: poly!(15, 8; [5, -4], [5, -4], [5, 8, -8]) },
    Rate { m: 3, i: 0, poly: poly!(-15, 32; [2439500, -11312175, 21772080, -22346500, 12956400, -4043136, 533248]) },
    Rate { m: 3, i: 1, poly: poly!(-45, 32; [5, -4], [62300, -260365, 431504, -356508, 147552, -24576]) },
    Rate { m: 3, i: 2, poly: poly!(3, 16; [1835625, -7723875, 13291500, -12015300, 6064176, -1644928, 192256]) },
    Rate { m: 3, i: 3, poly: poly!(15, 16; [5, -4], [18175, -85105, 153172, -136540, 61408, -11264]) },
    Rate { m: 3, i: 4, poly: poly!(3, 32; [213750, -1441125, 3537000, -4313100, 2835280, -967808, 135424]) },
    Rate { m: 3, i: 5, poly: poly!(21, 32; [1, 0], [5, -4], [15, -14], [450, -925, 590, -112]) },
];

/// ω coefficients of the perigee rate:
/// n_g = n Σ_m ε^m/(5s²-4)^m Σ_i ω_{m,i} η^i.
pub static OMEGA_G: [Rate; 9] = [
    Rate { m: 1, i: 0, poly: poly!(-3; [5, -4], [5, -4]) },
    Rate { m: 2, i: 0, poly: poly!(15, 8; [5, -4], [5, -4], [77, -172, 88]) },
    Rate { m: 2, i: 1, poly: poly!(9; [3, -2], [5, -4], [5, -4], [5, -4]) },
    Rate { m: 2, i: 2, poly: poly!(3, 8; [5, -4], [5, -4], [45, 36, -56]) },
    Rate { m: 3, i: 0, poly: poly!(-15, 32; [2439500, -11312175, 21772080, -22346500, 12956400, -4043136, 533248]) },
    Rate { m: 3, i: 1, poly: poly!(-45, 4; [5, -4], [5, -4], [5, -4], [168, -497, 460, -136]) },
    Rate { m: 3, i: 2, poly: poly!(3, 16; [2150625, -9409875, 16968300, -16218180, 8729136, -2535808, 315136]) },
    Rate { m: 3, i: 3, poly: poly!(-15, 4; [5, -4], [5, -4], [5, -4], [105, 39, -228, 104]) },
    Rate { m: 3, i: 4, poly: poly!(3, 32; [438750, -1771125, 2865000, -2345100, 999760, -199808, 12544]) },
];

/// Ω coefficients of the node rate:
/// n_h = n c Σ_m ε^m/(5s²-4)^m Σ_i Ω_{m,i} η^i.
pub static OMEGA_H: [Rate; 9] = [
    Rate { m: 1, i: 0, poly: poly!(-6; [5, -4]) },
    Rate { m: 2, i: 0, poly: poly!(15, 2; [5, -4], [5, -4], [7, -8]) },
    Rate { m: 2, i: 1, poly: poly!(18; [3, -2], [5, -4], [5, -4]) },
    Rate { m: 2, i: 2, poly: poly!(3, 2; [5, -4], [5, -4], [5, 4]) },
    Rate { m: 3, i: 0, poly: poly!(-15, 8; [215250, -823025, 1255040, -953760, 361088, -54464]) },
    Rate { m: 3, i: 1, poly: poly!(-45, 4; [5, -4], [5, -4], [5, -4], [63, -124, 56]) },
    Rate { m: 3, i: 2, poly: poly!(3, 8; [430125, -1553550, 2222340, -1570224, 546432, -74624]) },
    Rate { m: 3, i: 3, poly: poly!(-15, 4; [5, -4], [5, -4], [5, -4], [45, 28, -40]) },
    Rate { m: 3, i: 4, poly: poly!(3, 8; [50625, -168375, 215900, -130800, 35840, -3136]) },
];

// ---------------------------------------------------------------------------
// Series evaluation
// ---------------------------------------------------------------------------

/// Small parameter ε = (J2/4)(R⊕/p)² with p = G²/μ.
pub fn epsilon<S: Scalar>(big_g: S, fld: &GravityField) -> S {
    let p = big_g * big_g / S::from_f64(fld.mu);
    let q = S::from_f64(fld.re) / p;
    q * q * S::from_f64(0.25 * fld.j2)
}

/// Critical-inclination margin |5s²-4|.
pub fn resonance_margin(s2: f64) -> f64 {
    (5.0 * s2 - 4.0).abs()
}

pub fn check_resonance(s2: f64, guard: f64) -> Result<()> {
    let margin = resonance_margin(s2);
    if margin < guard {
        Err(Error::Resonance { margin, guard })
    } else {
        Ok(())
    }
}

/// The full J2 perturbation in the original chart (the order-1 term of the
/// untransformed Hamiltonian), ε(G) included.
pub fn k_main<S: Scalar>(x: &[S; 6], fld: &GravityField) -> S {
    let b = basis(x, fld.mu);
    let eps = epsilon(x[4], fld);
    let pr = b.p / b.r;
    let lead = S::from_f64(fld.mu) / b.r * pr * pr;
    let two_g = x[1] + x[1];
    let per = b.s2.scale(3.0) * (b.f + b.f + two_g).cos();
    -eps * lead * (S::from_f64(2.0) - b.s2.scale(3.0) + per)
}

/// Full main-problem Hamiltonian in the original chart: Kepler term plus the
/// J2 perturbation.
pub fn hamiltonian<S: Scalar>(x: &[S; 6], fld: &GravityField) -> S {
    k_perigee(0, x, fld) + k_main(x, fld)
}

/// Averaged Hamiltonian term of the first stage (the argument of perigee
/// eliminated), m = 0..=3, ε(G)^m included. Short-period r, f dependence is
/// retained by construction.
pub fn k_perigee<S: Scalar>(m: u8, x: &[S; 6], fld: &GravityField) -> S {
    let mu = S::from_f64(fld.mu);
    if m == 0 {
        let l = x[3];
        return -(mu * mu) / (l * l).scale(2.0);
    }
    let b = basis(x, fld.mu);
    let eps = epsilon(x[4], fld);
    let pr = b.p / b.r;
    let lead = mu / b.r * pr * pr;
    let d = b.s2.scale(5.0) - S::from_f64(4.0);
    match m {
        1 => -eps * lead * (S::from_f64(2.0) - b.s2.scale(3.0)),
        2 => {
            let mut sum = S::zero();
            for t in &GAMMA_K2 {
                sum = sum + pr.powi(t.j as i32) * b.e.powi(2 * t.k as i32) * t.poly.eval(b.s2);
            }
            eps * eps * lead * b.s2.scale(3.0 / 8.0) / (d * d) * sum
        }
        3 => {
            let mut sum = S::zero();
            for t in &GAMMA_K3 {
                sum = sum + pr.powi(t.j as i32) * b.e.powi(2 * t.k as i32) * t.poly.eval(b.s2);
            }
            eps.powi(3) * lead * b.s2.scale(3.0 / 32.0) / d.powi(3) * sum
        }
        _ => panic!("first-stage Hamiltonian term order {m} not available"),
    }
}

/// Generating-function term of the first stage, m = 1..=3, ε(G)^m and the
/// integration constant included. The perturbation is understood in the full
/// canonical chart: the corrections it generates act on all six variables.
pub fn w_perigee<S: Scalar>(m: u8, x: &[S; 6], fld: &GravityField) -> S {
    let b = basis(x, fld.mu);
    let eps = epsilon(x[4], fld);
    let big_g = x[4];
    let g = x[1];
    let d = b.s2.scale(5.0) - S::from_f64(4.0);
    let two_g = g + g;
    match m {
        1 => {
            let per = (b.e * (b.f + two_g).sin() + (b.f + b.f + two_g).sin()).scale(3.0)
                + b.e * (b.f.scale(3.0) + two_g).sin();
            let c1 = b.e * b.e * b.s2 * (b.s2.scale(15.0) - S::from_f64(14.0)) / d.scale(8.0)
                * two_g.sin();
            eps * big_g * (b.s2 * per.scale(-0.5) + c1)
        }
        2 => {
            let mut per = S::zero();
            for t in &GAMMA_W2 {
                per = per
                    + t.poly.eval(b.s2)
                        * b.e.powi(2 * t.j as i32 + (t.k as i32).rem_euclid(2))
                        * b.s2.powi(t.l as i32)
                        * (b.f.scale(t.k as f64) + two_g.scale(t.l as f64)).sin();
            }
            let mut cst = S::zero();
            for t in &GAMMA_W2_CONST {
                cst = cst
                    + t.poly.eval(b.s2)
                        * b.e.powi(2 * (t.j + t.l) as i32)
                        * b.s2.powi(t.l as i32)
                        * two_g.scale(t.l as f64).sin();
            }
            eps * eps * big_g * (per / (d * d).scale(32.0) + cst / d.powi(3).scale(64.0))
        }
        3 => {
            let mut per = S::zero();
            for t in &GAMMA_W3 {
                per = per
                    + t.poly.eval(b.s2)
                        * b.e.powi(2 * t.j as i32 + (t.k as i32).rem_euclid(2))
                        * b.s2.powi(t.l as i32)
                        * (b.f.scale(t.k as f64) + two_g.scale(t.l as f64)).sin();
            }
            let mut cst = S::zero();
            for t in &GAMMA_W3_CONST {
                cst = cst
                    + t.poly.eval(b.s2)
                        * b.e.powi(2 * (t.j + t.l) as i32)
                        * b.s2.powi(t.l as i32)
                        * two_g.scale(t.l as f64).sin();
            }
            eps.powi(3) * big_g * (per / d.powi(4).scale(8960.0) + cst / d.powi(5).scale(1536.0))
        }
        _ => panic!("first-stage generating term order {m} not available"),
    }
}

/// Averaged Hamiltonian term of the second stage, m = 0..=3, ε-free for
/// m ≥ 1 (the caller supplies the constant ε^m).
pub fn k_delaunay<S: Scalar>(m: u8, x: &[S; 6], fld: &GravityField) -> S {
    let mu = S::from_f64(fld.mu);
    if m == 0 {
        let l = x[3];
        return -(mu * mu) / (l * l).scale(2.0);
    }
    let b = basis(x, fld.mu);
    let lead = mu / b.p * b.eta.powi(3);
    let d = b.s2.scale(5.0) - S::from_f64(4.0);
    match m {
        1 => lead * (b.s2.scale(3.0) - S::from_f64(2.0)),
        2 => {
            let mut sum = S::zero();
            for (j, poly) in LAMBDA_K2.iter().enumerate() {
                sum = sum + poly.eval(b.s2) * b.eta.powi(j as i32);
            }
            -lead.scale(0.75) * sum
        }
        3 => {
            let mut sum = S::zero();
            for (j, poly) in LAMBDA_K3.iter().enumerate() {
                sum = sum + poly.eval(b.s2) * b.eta.powi(j as i32);
            }
            lead.scale(9.0 / 16.0) / (d * d) * sum
        }
        _ => panic!("second-stage Hamiltonian term order {m} not available"),
    }
}

/// Generating-function term of the second stage, m = 1..=3, ε-free.
pub fn w_delaunay<S: Scalar>(m: u8, x: &[S; 6], fld: &GravityField) -> S {
    let b = basis(x, fld.mu);
    let big_g = x[4];
    let d = b.s2.scale(5.0) - S::from_f64(4.0);
    match m {
        1 => big_g * (b.s2.scale(3.0) - S::from_f64(2.0)) * (b.e * b.f.sin() + b.phi),
        2 => {
            let mut per = S::zero();
            for t in &LAMBDA_W2 {
                per = per
                    + t.poly.eval(b.s2)
                        * b.eta.powi(t.k as i32)
                        * b.e.powi(t.j as i32)
                        * b.f.scale(t.j as f64).sin();
            }
            let cen = PHI_W2[0].eval(b.s2) + PHI_W2[1].eval(b.s2) * b.e * b.e;
            -big_g * b.beta / (d * d).scale(32.0) * per - big_g.scale(0.75) * b.phi * cen
        }
        3 => {
            let mut per = S::zero();
            for t in &LAMBDA_W3 {
                per = per
                    + t.poly.eval(b.s2)
                        * b.eta.powi(t.k as i32 - 1)
                        * b.e.powi(t.j as i32)
                        * b.f.scale(t.j as f64).sin();
            }
            let mut cen = S::zero();
            for t in &PHI_W3 {
                cen = cen
                    + t.poly.eval(b.s2)
                        * b.eta.powi(t.k as i32)
                        * b.e.powi(t.j as i32)
                        * b.f.scale(t.j as f64).cos();
            }
            big_g * b.beta * b.beta / d.powi(3).scale(128.0) * per
                + big_g.scale(3.0 / 16.0) / (d * d) * b.phi * cen
        }
        _ => panic!("second-stage generating term order {m} not available"),
    }
}

/// Fully reduced Hamiltonian Σ_{m=0..=order} ε(G)^m/m! K_m, with ε a function
/// of G so that momentum gradients give the secular frequencies.
pub fn k_secular<S: Scalar>(order: u8, x: &[S; 6], fld: &GravityField) -> S {
    let eps = epsilon(x[4], fld);
    let mut acc = k_delaunay(0, x, fld);
    let mut fact = 1.0;
    for m in 1..=order {
        fact *= m as f64;
        acc = acc + eps.powi(m as i32) * k_delaunay(m, x, fld) / S::from_f64(fact);
    }
    acc
}

// ---------------------------------------------------------------------------
// Table export
// ---------------------------------------------------------------------------

fn dump_poly(indices: &[i64], p: &Poly) -> serde_json::Value {
    serde_json::json!({
        "indices": indices,
        "den": p.den,
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// All coefficient tables with expanded integer coefficients (ascending
/// powers of s², exact decimal strings).
pub fn tables_json() -> serde_json::Value {
    let mut out = serde_json::Map::new();
    let gamma = |v: &[Gamma]| {
        v.iter().map(|t| dump_poly(&[t.j as i64, t.k as i64], &t.poly)).collect::<Vec<_>>()
    };
    let gamma_w = |v: &[GammaW]| {
        v.iter()
            .map(|t| dump_poly(&[t.j as i64, t.k as i64, t.l as i64], &t.poly))
            .collect::<Vec<_>>()
    };
    let coef = |v: &[Coef]| {
        v.iter().map(|t| dump_poly(&[t.j as i64, t.k as i64], &t.poly)).collect::<Vec<_>>()
    };
    let plain = |v: &[Poly]| {
        v.iter().enumerate().map(|(i, p)| dump_poly(&[i as i64], p)).collect::<Vec<_>>()
    };
    let rate = |v: &[Rate]| {
        v.iter().map(|t| dump_poly(&[t.m as i64, t.i as i64], &t.poly)).collect::<Vec<_>>()
    };
    out.insert("stage1_k2".into(), gamma(&GAMMA_K2).into());
    out.insert("stage1_k3".into(), gamma(&GAMMA_K3).into());
    out.insert("stage1_w2".into(), gamma_w(&GAMMA_W2).into());
    out.insert("stage1_w2_const".into(), gamma_w(&GAMMA_W2_CONST).into());
    out.insert("stage1_w3".into(), gamma_w(&GAMMA_W3).into());
    out.insert("stage1_w3_const".into(), gamma_w(&GAMMA_W3_CONST).into());
    out.insert("stage2_k2".into(), plain(&LAMBDA_K2).into());
    out.insert("stage2_k3".into(), plain(&LAMBDA_K3).into());
    out.insert("stage2_w2".into(), coef(&LAMBDA_W2).into());
    out.insert("stage2_w2_center".into(), plain(&PHI_W2).into());
    out.insert("stage2_w3".into(), coef(&LAMBDA_W3).into());
    out.insert("stage2_w3_center".into(), coef(&PHI_W3).into());
    out.insert("rate_latitude".into(), rate(&PSI_F).into());
    out.insert("rate_perigee".into(), rate(&OMEGA_G).into());
    out.insert("rate_node".into(), rate(&OMEGA_H).into());
    serde_json::Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::GravityField;

    #[test]
    fn table_sizes() {
        assert_eq!(GAMMA_K2.len() + GAMMA_K3.len(), 13);
        assert_eq!(GAMMA_W2.len(), 17);
        assert_eq!(GAMMA_W3.len(), 54);
        assert_eq!(LAMBDA_W2.len(), 8);
        assert_eq!(LAMBDA_W3.len(), 29);
        assert_eq!(PSI_F.len(), 12);
        assert_eq!(OMEGA_G.len(), 9);
        assert_eq!(OMEGA_H.len(), 9);
    }

    #[test]
    fn poly_eval_matches_exact() {
        let p = poly!(-12, 7; [5, -4], [7, -6], [15, -14]);
        // s² = 2: (-12/7)·6·8·16
        let (v, den) = p.eval_exact(2);
        assert_eq!(v, -12 * 6 * 8 * 16);
        assert_eq!(den, 7);
        let f = p.eval(2.0_f64);
        assert!((f - v as f64 / den as f64).abs() < 1e-9);
        assert_eq!(p.coeffs().iter().sum::<i128>(), p.eval_exact(1).0);
    }

    #[test]
    fn polar_orbit_equatorial_limits() {
        // Equatorial (s² = 0): first-stage averaged terms keep their leading
        // structure; the node rate coefficient reduces to -6·(-4) = 24.
        assert_eq!(OMEGA_H[0].poly.eval_exact(0).0 * 1, -6 * -4);
        // Perigee rate at the critical value s² = 4/5 must vanish at first
        // order: -3(5s²-4)² = 0.
        let (v, _) = OMEGA_G[0].poly.eval_exact(0);
        assert_eq!(v, -3 * 16);
        assert_eq!(OMEGA_G[0].poly.eval(0.8_f64).abs() < 1e-12, true);
    }

    #[test]
    fn resonance_guard() {
        // 66.04 degrees sits about 0.17 above the critical divisor.
        let s2 = 66.04_f64.to_radians().sin().powi(2);
        let m = resonance_margin(s2);
        assert!(m > 0.1 && m < 0.2, "margin {m}");
        assert!(check_resonance(s2, DEFAULT_GUARD).is_ok());
        let crit = 63.4349_f64.to_radians().sin().powi(2);
        assert!(matches!(
            check_resonance(crit, DEFAULT_GUARD),
            Err(crate::Error::Resonance { .. })
        ));
    }

    #[test]
    fn epsilon_scale() {
        // ε for a LEO-like momentum: p = 6878 km gives ε ≈ 2.3e-4.
        let fld = GravityField::STANDARD;
        let p = 6878.137;
        let big_g = (fld.mu * p).sqrt();
        let eps = epsilon(big_g, &fld);
        let expect = 0.25 * fld.j2 * (fld.re / p).powi(2);
        assert!((eps - expect).abs() / expect < 1e-14);
        assert!(eps > 2.0e-4 && eps < 2.6e-4);
    }

    #[test]
    fn first_stage_order1_values() {
        // Hand-evaluated against the defining expressions at a generic state.
        let fld = GravityField::STANDARD;
        let x = [0.8, 1.1, 0.4, 52000.0, 51000.0, 30000.0];
        let b = crate::elements::basis(&x, fld.mu);
        let eps = epsilon(x[4], &fld);
        let k1 = k_perigee(1, &x, &fld);
        let expect = -eps * fld.mu / b.r * (b.p / b.r).powi(2) * (2.0 - 3.0 * b.s2);
        assert!((k1 - expect).abs() / expect.abs() < 1e-13);
        let full = k_main(&x, &fld);
        let expect_full = -eps * fld.mu / b.r * (b.p / b.r).powi(2)
            * (2.0 - 3.0 * b.s2 + 3.0 * b.s2 * (2.0 * b.f + 2.0 * x[1]).cos());
        assert!((full - expect_full).abs() / expect_full.abs() < 1e-13);

        let w1 = w_perigee(1, &x, &fld);
        let series = -0.5
            * b.s2
            * (3.0 * b.e * (b.f + 2.0 * x[1]).sin()
                + 3.0 * (2.0 * b.f + 2.0 * x[1]).sin()
                + b.e * (3.0 * b.f + 2.0 * x[1]).sin());
        let c1 = (15.0 * b.s2 - 14.0) / (8.0 * (5.0 * b.s2 - 4.0))
            * b.s2
            * b.e
            * b.e
            * (2.0 * x[1]).sin();
        let expect_w = eps * x[4] * (series + c1);
        assert!((w1 - expect_w).abs() / expect_w.abs() < 1e-12);
    }

    #[test]
    fn second_stage_order1_values() {
        let fld = GravityField::STANDARD;
        let x = [2.3, 0.7, 0.2, 52000.0, 50000.0, -20000.0];
        let b = crate::elements::basis(&x, fld.mu);
        let k1 = k_delaunay(1, &x, &fld);
        let expect = fld.mu / b.p * b.eta.powi(3) * (3.0 * b.s2 - 2.0);
        assert!((k1 - expect).abs() / expect.abs() < 1e-13);
        let w1 = w_delaunay(1, &x, &fld);
        let expect_w = x[4] * (3.0 * b.s2 - 2.0) * (b.e * b.f.sin() + b.phi);
        assert!((w1 - expect_w).abs() / expect_w.abs() < 1e-13);
        // Second-stage generating terms carry no g or h dependence.
        let mut x2 = x;
        x2[1] += 0.37;
        x2[2] -= 1.2;
        for m in 1..=3 {
            assert_eq!(w_delaunay(m, &x, &fld), w_delaunay(m, &x2, &fld));
            assert_eq!(k_delaunay(m, &x, &fld), k_delaunay(m, &x2, &fld));
        }
    }

    #[test]
    fn cyclic_variable_structure() {
        // Exact partials through duals: no generator depends on the node;
        // the first-stage averaged terms are free of g; the second-stage
        // averaged terms are functions of the momenta only.
        let fld = GravityField::STANDARD;
        let x = [0.9, 1.3, 0.5, 52000.0, 50500.0, 28000.0];
        let xd = crate::dual::seed(&x);
        for m in 1..=3u8 {
            assert_eq!(w_perigee(m, &xd, &fld).d[2], 0.0);
            assert_eq!(w_delaunay(m, &xd, &fld).d[2], 0.0);
            let kg = k_perigee(m, &xd, &fld);
            assert_eq!(kg.d[1], 0.0);
            assert_eq!(kg.d[2], 0.0);
            let kd = k_delaunay(m, &xd, &fld);
            for q in 0..3 {
                assert_eq!(kd.d[q], 0.0);
            }
            // Second-stage generators carry no g dependence either.
            assert_eq!(w_delaunay(m, &xd, &fld).d[1], 0.0);
        }
        assert_eq!(k_main(&xd, &fld).d[2], 0.0);
    }

    #[test]
    fn dump_is_complete() {
        let v = tables_json();
        let obj = v.as_object().unwrap();
        assert_eq!(obj.len(), 15);
        let n: usize = obj.values().map(|t| t.as_array().unwrap().len()).sum();
        assert_eq!(n, 4 + 9 + 17 + 3 + 54 + 6 + 3 + 5 + 8 + 2 + 29 + 8 + 12 + 9 + 9);
    }
}
