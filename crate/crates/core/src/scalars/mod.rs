//! Exact scalars: rationals and rational functions in a single variable `q`.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use poly::Poly;

/// A quotient of integer polynomials in `q`, kept in lowest terms.
///
/// Canonical form: the numerator and denominator share no factor over Q,
/// their coefficients have joint content 1, and the denominator has a
/// positive leading coefficient. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc::new(p, Poly::one()).expect("unit denominator")
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a rational when neither side involves `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.constant_term(), self.den.constant_term()))
        } else {
            None
        }
    }

    fn add(&self, o: &RatFunc) -> RatFunc {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&o.den)).expect("product of nonzero denominators")
    }

    fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
            .expect("product of nonzero denominators")
    }

    fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(render_rational(x)));
        }
        Ok(self.num.eval(x) / d)
    }
}

/// An exact scalar. `Function` never holds a value free of `q`; such values
/// are demoted to `Rational` so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Function(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::Function(RatFunc::from_poly(Poly::from_i64(&[0, 1])))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        match f.as_rational() {
            Some(r) => Scalar::Rational(r),
            None => Scalar::Function(f),
        }
    }

    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        RatFunc::new(num, den).map(Scalar::from_ratfunc)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Function(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Function(_) => None,
        }
    }

    /// The integer value, if this scalar is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    fn to_ratfunc(&self) -> RatFunc {
        match self {
            Scalar::Rational(r) => RatFunc::from_rational(r),
            Scalar::Function(f) => f.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Function(f) => f.inv().map(Scalar::from_ratfunc),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self * &o.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exponent `k` when this scalar is exactly `q^k`.
    pub fn as_q_power(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_one() => Some(0),
            Scalar::Rational(_) => None,
            Scalar::Function(f) => {
                let (n, d) = (f.numer(), f.denom());
                let unit = |p: &Poly| p.term_count() == 1 && p.leading().is_one();
                if !unit(n) || !unit(d) {
                    return None;
                }
                match (n.degree()?, d.degree()?) {
                    (k, 0) => i64::try_from(k).ok(),
                    (0, k) => i64::try_from(k).ok().map(|k| -k),
                    _ => None,
                }
            }
        }
    }

    /// Evaluate at `q = x`.
    pub fn specialize(&self, x: &BigRational) -> Result<BigRational> {
        match self {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Function(f) => f.eval(x),
        }
    }

    /// Evaluate at `q = x` and keep the result as a scalar.
    pub fn specialize_scalar(&self, x: &BigRational) -> Result<Scalar> {
        self.specialize(x).map(Scalar::Rational)
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().map(rational_to_f64)
    }

    pub fn parse(s: &str) -> Result<Scalar> {
        parse::parse_scalar(s)
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale down huge operands before dividing.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_side(p: &Poly, denominator: bool) -> String {
    let compound = p.term_count() > 1;
    let product = denominator && p.valuation().is_some_and(|v| v > 0) && !p.leading().is_one();
    if compound || product {
        format!("({p})")
    } else {
        p.to_string()
    }
}

/// Rationals render as `n` or `n/d`; rational functions as `N/D` with each
/// side in ascending powers and parenthesized when it has several terms
/// (or, for a denominator, when it is a scaled power of `q`).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", render_rational(r)),
            Scalar::Function(rf) => {
                write!(
                    f,
                    "{}/{}",
                    render_side(rf.numer(), false),
                    render_side(rf.denom(), true)
                )
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().add(&o.to_ratfunc())),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().add(&o.to_ratfunc().neg())),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => Scalar::from_ratfunc(self.to_ratfunc().mul(&o.to_ratfunc())),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Function(f) => Scalar::Function(f.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
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

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

/// `[k]_q = (1 - q^k)/(1 - q)`, a Laurent polynomial for negative `k`.
pub fn q_integer(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let m = k.unsigned_abs() as usize;
    // 1 + q + ... + q^(m-1)
    let sum = Poly::from_coeffs(vec![BigInt::one(); m]);
    if k > 0 {
        Scalar::from_ratfunc(RatFunc::from_poly(sum))
    } else {
        // [-m]_q = -q^(-m) [m]_q
        let den = Poly::monomial(BigInt::one(), m);
        Scalar::from_polys(sum.neg(), den).expect("monomial denominator")
    }
}

/// `[k]` evaluated at a concrete value of the parameter.
pub fn q_integer_at(k: i64, q: &Scalar) -> Result<Scalar> {
    if q.is_one() {
        return Ok(Scalar::int(k));
    }
    let one = Scalar::one();
    (&one - &q.pow(k)?).checked_div(&(&one - q))
}

/// `1 - (1 - q)/a`.
pub fn d_coefficient(a: &Scalar, q: &Scalar) -> Result<Scalar> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let one = Scalar::one();
    Ok(&one - &(&one - q).checked_div(a)?)
}

/// Inverse of [`d_coefficient`]: `(1 - q)/(1 - d)`.
pub fn a_from_d(d: &Scalar, q: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    (&one - q).checked_div(&(&one - d))
}

/// Specialize `x` at `q = value`.
pub fn specialize(x: &Scalar, value: &BigRational) -> Result<BigRational> {
    x.specialize(value)
}

/// Hecke parameters, one scalar per conjugacy class of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    generator_class: Vec<usize>,
    values: Vec<Scalar>,
}

impl HeckeParams {
    /// `generator_class[s]` names the class of generator `s`; `values[c]` is
    /// the parameter for class `c`.
    pub fn new(generator_class: Vec<usize>, values: Vec<Scalar>) -> Result<Self> {
        if let Some(&c) = generator_class.iter().find(|&&c| c >= values.len()) {
            return Err(Error::Precondition(format!(
                "generator class {c} has no parameter"
            )));
        }
        Ok(HeckeParams {
            generator_class,
            values,
        })
    }

    /// Same value on every class.
    pub fn uniform(generator_class: Vec<usize>, value: Scalar) -> Self {
        let n = generator_class.iter().copied().max().map_or(0, |c| c + 1);
        HeckeParams {
            generator_class,
            values: vec![value; n],
        }
    }

    pub fn q_for_generator(&self, s: usize) -> &Scalar {
        &self.values[self.generator_class[s]]
    }

    pub fn generator_class(&self) -> &[usize] {
        &self.generator_class
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Whether all parameters equal one.
    pub fn is_classical(&self) -> bool {
        self.values.iter().all(Scalar::is_one)
    }

    /// Substitute `q = x` in every parameter.
    pub fn specialize(&self, x: &BigRational) -> Result<HeckeParams> {
        let values = self
            .values
            .iter()
            .map(|v| v.specialize_scalar(x))
            .collect::<Result<_>>()?;
        Ok(HeckeParams {
            generator_class: self.generator_class.clone(),
            values,
        })
    }
}
