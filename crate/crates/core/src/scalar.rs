//! Coefficients: exact Gaussian rationals with a tagged double-precision
//! fallback.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Default comparison tolerance for inexact scalars.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `re + i·im` with arbitrary-precision rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    /// `(re_num/re_den) + i(im_num/im_den)`.
    pub fn from_fracs(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussianRational::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, exactly.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn mul_ref(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// A field element. Exact arithmetic stays exact; any operand that is
/// inexact makes the result inexact.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(GaussianRational),
    Inexact(Complex64),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(GaussianRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(GaussianRational::one())
    }

    pub fn i() -> Self {
        Scalar::Exact(GaussianRational::i())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(GaussianRational::from_ints(n, 0))
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::Exact(GaussianRational::from_ints(re, im))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(GaussianRational::from_fracs((num, den), (0, 1)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Exact zero, or `|z| ≤ tol` for inexact values.
    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Inexact(c) => c.norm() <= tol,
        }
    }

    /// Structural zero test (no tolerance).
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Inexact(c) => c.re == 0.0 && c.im == 0.0,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(g) => Scalar::Exact(g.conj()),
            Scalar::Inexact(c) => Scalar::Inexact(c.conj()),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(g) => g.to_complex(),
            Scalar::Inexact(c) => *c,
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_complex().norm()
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Exact(g) => g.inv().map(Scalar::Exact),
            Scalar::Inexact(c) => (c.norm() != 0.0).then(|| Scalar::Inexact(c.inv())),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// `|z|`, exact when `|z|²` is a perfect rational square.
    pub fn modulus(&self) -> Scalar {
        match self {
            Scalar::Exact(g) => match rational_sqrt(&g.norm_sqr()) {
                Some(r) => Scalar::Exact(GaussianRational::new(r, BigRational::zero())),
                None => Scalar::Inexact(Complex64::new(g.to_complex().norm(), 0.0)),
            },
            Scalar::Inexact(c) => Scalar::Inexact(Complex64::new(c.norm(), 0.0)),
        }
    }

    /// Principal square root of a unimodular value (`|z| = 1`).
    ///
    /// For `z ≠ −1` the root is `(1 + z)/|1 + z|`, which stays exact whenever
    /// `|1 + z|²` is a rational square. Returns `None` if `z` is zero.
    pub fn unit_sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let one_plus = &Scalar::one() + self;
        if one_plus.is_zero_tol(1e-300) {
            return Some(Scalar::i());
        }
        one_plus.div(&one_plus.modulus())
    }

    /// Nearest point of the lattice `(1/2)·ℤ[i]` and the distance to it.
    pub fn round_to_half_lattice(z: Complex64) -> (Scalar, f64) {
        let re = (2.0 * z.re).round();
        let im = (2.0 * z.im).round();
        let dist = (z - Complex64::new(re / 2.0, im / 2.0)).norm();
        let exact = GaussianRational::from_fracs((re as i64, 2), (im as i64, 2));
        (Scalar::Exact(exact), dist)
    }

    /// Parses a single real component: `"p/q"`, `"p"`, or a decimal (the
    /// latter yields an inexact value).
    fn parse_component(s: &str) -> Result<ParsedComponent, String> {
        let t = s.trim();
        if t.is_empty() {
            return Err("empty number".into());
        }
        let t = t.strip_prefix('+').unwrap_or(t);
        if let Ok(q) = BigRational::from_str(t) {
            return Ok(ParsedComponent::Exact(q));
        }
        if let Ok(i) = BigInt::from_str(t) {
            return Ok(ParsedComponent::Exact(BigRational::from_integer(i)));
        }
        t.parse::<f64>()
            .map(ParsedComponent::Float)
            .map_err(|_| format!("not a rational or decimal number: {s:?}"))
    }

    /// Parses real and imaginary parts given as strings.
    pub fn from_parts(re: &str, im: &str) -> Result<Scalar, String> {
        let re = Self::parse_component(re)?;
        let im = Self::parse_component(im)?;
        Ok(match (re, im) {
            (ParsedComponent::Exact(r), ParsedComponent::Exact(i)) => Scalar::Exact(GaussianRational::new(r, i)),
            (r, i) => Scalar::Inexact(Complex64::new(r.to_f64(), i.to_f64())),
        })
    }

    /// String forms of the real and imaginary parts, as written to JSON.
    pub fn to_parts(&self) -> (String, String) {
        match self {
            Scalar::Exact(g) => (fmt_rational(&g.re), fmt_rational(&g.im)),
            Scalar::Inexact(c) => (fmt_float(c.re), fmt_float(c.im)),
        }
    }
}

enum ParsedComponent {
    Exact(BigRational),
    Float(f64),
}

impl ParsedComponent {
    fn to_f64(&self) -> f64 {
        match self {
            ParsedComponent::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            ParsedComponent::Float(f) => *f,
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// Always contains a '.' or exponent so it re-parses as inexact.
fn fmt_float(f: f64) -> String {
    let s = format!("{f:?}");
    if s.contains('.') || s.contains('e') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        format!("{s}.0")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => {
                if g.im.is_zero() {
                    write!(f, "{}", fmt_rational(&g.re))
                } else if g.re.is_zero() {
                    write!(f, "{}i", fmt_rational(&g.im))
                } else if g.im.is_negative() {
                    write!(f, "{}-{}i", fmt_rational(&g.re), fmt_rational(&-g.im.clone()))
                } else {
                    write!(f, "{}+{}i", fmt_rational(&g.re), fmt_rational(&g.im))
                }
            }
            Scalar::Inexact(c) => write!(f, "~({:e}{:+e}i)", c.re, c.im),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: String,
    im: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (re, im) = self.to_parts();
        ScalarRepr { re, im }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        Scalar::from_parts(&r.re, &r.im).map_err(serde::de::Error::custom)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(g: GaussianRational) -> Self {
        Scalar::Exact(g)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Complex64> for Scalar {
    fn from(c: Complex64) -> Self {
        Scalar::Inexact(c)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(GaussianRational::new(&a.re + &b.re, &a.im + &b.im)),
            _ => Scalar::Inexact(self.to_complex() + rhs.to_complex()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(GaussianRational::new(&a.re - &b.re, &a.im - &b.im)),
            _ => Scalar::Inexact(self.to_complex() - rhs.to_complex()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.mul_ref(b)),
            _ => Scalar::Inexact(self.to_complex() * rhs.to_complex()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(GaussianRational::new(-a.re.clone(), -a.im.clone())),
            Scalar::Inexact(c) => Scalar::Inexact(-c),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
