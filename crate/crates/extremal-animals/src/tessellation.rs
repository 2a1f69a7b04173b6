//! Schläfli pairs and exact arithmetic in the quadratic extension Q(√D).
//!
//! Every closed-form parameter of a {p,q} tessellation lives in the field
//! extension by √D with D = t²-4 and t = (p-2)(q-2)-2. The discriminant is
//! kept as t²-4 verbatim, without reduction to its square-free kernel, so
//! expressions can be transcribed term by term.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Geometry class of a {p,q} tessellation with (p-2)(q-2) >= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Euclidean,
    Hyperbolic,
}

/// A validated Schläfli pair {p,q}: p-gons, q around each vertex.
///
/// Spherical pairs ((p-2)(q-2) < 4) are rejected at construction; everything
/// downstream assumes the plane is Euclidean or hyperbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchlafliPair {
    p: u32,
    q: u32,
    t: i64,
    d: i64,
    geometry: Geometry,
}

impl SchlafliPair {
    /// Validates (p, q) and computes the derived constants t and D = t²-4.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 3 || q < 3 {
            return Err(Error::DegenerateParameter { p, q });
        }
        let product = (p as i64 - 2) * (q as i64 - 2);
        if product < 4 {
            return Err(Error::SphericalPair { p, q, product });
        }
        let t = product - 2;
        let d = t
            .checked_mul(t)
            .and_then(|t2| t2.checked_sub(4))
            .ok_or(Error::ParameterTooLarge { p, q })?;
        let geometry = if t == 2 {
            Geometry::Euclidean
        } else {
            Geometry::Hyperbolic
        };
        Ok(SchlafliPair { p, q, t, d, geometry })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// t = (p-2)(q-2) - 2; the trace of the layer-growth matrix.
    pub fn t(&self) -> i64 {
        self.t
    }

    /// Discriminant D = t² - 4; zero exactly in the Euclidean case.
    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn is_euclidean(&self) -> bool {
        self.geometry == Geometry::Euclidean
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.geometry == Geometry::Hyperbolic
    }

    /// The dual pair {q,p}.
    pub fn dual(&self) -> SchlafliPair {
        SchlafliPair::new(self.q, self.p).expect("dual of a valid pair is valid")
    }

    /// Growth constant α = (t + √D)/2, the larger root of x² - tx + 1.
    pub fn alpha(&self) -> QuadRat {
        QuadRat::new(
            BigRational::new(BigInt::from(self.t), BigInt::from(2)),
            BigRational::new(BigInt::one(), BigInt::from(2)),
            self.d,
        )
    }

    /// β = 1/α = (t - √D)/2, the conjugate root.
    pub fn beta(&self) -> QuadRat {
        self.alpha().conj()
    }
}

impl fmt::Display for SchlafliPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

/// Element a + b·√D of Q(√D), exact.
///
/// D is a shared non-negative integer discriminant; arithmetic between
/// mismatched discriminants is a hard error. D = 0 degenerates to the
/// rationals, which keeps Euclidean and hyperbolic code paths uniform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        assert!(d >= 0, "negative discriminant");
        QuadRat { a, b, d }
    }

    pub fn from_integer(n: impl Into<BigInt>, d: i64) -> Self {
        QuadRat::new(
            BigRational::from_integer(n.into()),
            BigRational::zero(),
            d,
        )
    }

    pub fn from_rational(a: BigRational, d: i64) -> Self {
        QuadRat::new(a, BigRational::zero(), d)
    }

    /// √D itself.
    pub fn sqrt_d(d: i64) -> Self {
        QuadRat::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check_d(&self, other: &QuadRat) -> Result<()> {
        if self.d != other.d {
            Err(Error::MismatchedDiscriminant(self.d, other.d))
        } else {
            Ok(())
        }
    }

    /// Conjugate a - b√D. For α this is β, since αβ = (t² - D)/4 = 1.
    pub fn conj(&self) -> QuadRat {
        QuadRat::new(self.a.clone(), -self.b.clone(), self.d)
    }

    pub fn checked_add(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check_d(other)?;
        Ok(QuadRat::new(&self.a + &other.a, &self.b + &other.b, self.d))
    }

    pub fn checked_sub(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check_d(other)?;
        Ok(QuadRat::new(&self.a - &other.a, &self.b - &other.b, self.d))
    }

    /// (a₁+b₁√D)(a₂+b₂√D) = (a₁a₂ + b₁b₂D) + (a₁b₂ + a₂b₁)√D.
    pub fn checked_mul(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check_d(other)?;
        let d = BigRational::from_integer(BigInt::from(self.d));
        Ok(QuadRat::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &other.a * &self.b,
            self.d,
        ))
    }

    /// Multiplicative inverse via the conjugate; errors on zero.
    pub fn checked_inv(&self) -> Result<QuadRat> {
        let d = BigRational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - &self.b * &self.b * &d;
        if norm.is_zero() {
            return Err(Error::OutOfValidRange("division by zero in Q(√D)".into()));
        }
        Ok(QuadRat::new(&self.a / &norm, -(&self.b) / &norm, self.d))
    }

    pub fn checked_div(&self, other: &QuadRat) -> Result<QuadRat> {
        self.checked_mul(&other.checked_inv()?)
    }

    /// Exact k-th power by repeated squaring.
    pub fn pow(&self, k: u32) -> QuadRat {
        let mut acc = QuadRat::from_integer(1, self.d);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same discriminant");
            }
            base = base.checked_mul(&base).expect("same discriminant");
            k >>= 1;
        }
        acc
    }

    /// Demotes to an integer. Panics if the value is irrational or a
    /// non-integral rational: every closed-form parameter evaluation must
    /// land exactly on an integer, so failure here is a bug, not an input
    /// error.
    pub fn demote_integer(&self) -> BigInt {
        assert!(
            self.b.is_zero(),
            "demotion of irrational value {self}: surd part {} nonzero",
            self.b
        );
        assert!(
            self.a.is_integer(),
            "demotion of non-integral rational {}",
            self.a
        );
        self.a.to_integer()
    }

    /// Encloses the value in exact rational bounds, with √D approximated to
    /// `bits` fractional bits. For b = 0 the bounds are both exact.
    pub fn to_interval(&self, bits: u32) -> (BigRational, BigRational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        let scale = BigInt::one() << bits;
        let scaled = BigInt::from(self.d) * (&scale * &scale);
        let root = scaled.sqrt();
        let lo = BigRational::new(root.clone(), scale.clone());
        let hi = BigRational::new(root + 1, scale);
        // b may be negative; pick bound order accordingly.
        let (slo, shi) = if self.b.is_negative() {
            (&self.b * &hi, &self.b * &lo)
        } else {
            (&self.b * &lo, &self.b * &hi)
        };
        (&self.a + slo, &self.a + shi)
    }

    /// f64 approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let ratio = |r: &BigRational| {
            let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        };
        ratio(&self.a) + ratio(&self.b) * (self.d as f64).sqrt()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}·√{}", self.b, self.d)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.d)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                self.$checked(rhs).expect("mismatched discriminants")
            }
        }
        impl $trait for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.a.clone(), -self.b.clone(), self.d)
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

/// Validates a pair; alias for [`SchlafliPair::new`].
pub fn validate_pair(p: u32, q: u32) -> Result<SchlafliPair> {
    SchlafliPair::new(p, q)
}
