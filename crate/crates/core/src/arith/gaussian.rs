use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A complex number with rational real and imaginary parts.
///
/// Both parts are `BigRational`s, which are always kept in lowest terms with a
/// positive denominator, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den + 0i`. Panics if `den` is zero.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `(re_num/re_den) + (im_num/im_den)i`. Panics on a zero denominator.
    pub fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            Rational::new(BigInt::from(re_num), BigInt::from(re_den)),
            Rational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, the squared modulus.
    pub fn abs_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let d = rhs.abs_sq();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(Self::new(num.re / &d, num.im / &d))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when the value is a real number strictly greater than zero.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::from_real(re)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_real(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// Canonical text form: `3/5`, `-i`, `4/5+3/5i`, `1-i`, `0`.
///
/// The output is accepted by [`GaussianRational::from_str`] and printing a
/// parsed value reproduces the canonical text.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let coeff = if im_abs.is_one() {
            String::new()
        } else {
            im_abs.to_string()
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coeff}i")
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{sign}{coeff}i", self.re)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntryParser::new(s).parse()
    }
}

/// Recursive-descent parser for the entry grammar
///
/// ```text
/// entry    := sign? real (("+"|"-") coeff? "i")?
///           | sign? coeff? "i"
/// real     := INT ("/" INT)?
/// coeff    := INT ("/" INT)?
/// ```
///
/// Whitespace is ignored anywhere. Error positions are byte offsets into the
/// original input.
struct EntryParser<'a> {
    input: &'a str,
    // (byte offset in `input`, char) for every non-whitespace character.
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> EntryParser<'a> {
    fn new(input: &'a str) -> Self {
        let chars = input
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Self {
            input,
            chars,
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(o, _)| o)
            .unwrap_or(self.input.len())
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> bool {
        if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.err("expected digits"));
        }
        Ok(digits.parse::<BigInt>().expect("ascii digits parse"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.int()?;
        if self.eat('/') {
            let den_pos = self.pos;
            let den = self.int()?;
            if den.is_zero() {
                self.pos = den_pos;
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn at_digit(&self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn finish(&self, value: GaussianRational) -> Result<GaussianRational> {
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(value)
    }

    fn parse(mut self) -> Result<GaussianRational> {
        if self.chars.is_empty() {
            return Err(self.err("empty entry"));
        }
        let negative = self.sign();
        let apply = |r: Rational, neg: bool| if neg { -r } else { r };

        if self.eat('i') {
            let v = GaussianRational::new(Rational::zero(), apply(Rational::one(), negative));
            return self.finish(v);
        }
        let first = apply(self.rational()?, negative);
        if self.eat('i') {
            return self.finish(GaussianRational::new(Rational::zero(), first));
        }
        if self.peek().is_none() {
            return Ok(GaussianRational::from_real(first));
        }
        let im_negative = match self.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => return Err(self.err("expected '+', '-', 'i' or end of entry")),
        };
        self.pos += 1;
        let im = if self.at_digit() {
            self.rational()?
        } else {
            Rational::one()
        };
        if !self.eat('i') {
            return Err(self.err("expected 'i' after imaginary coefficient"));
        }
        self.finish(GaussianRational::new(first, apply(im, im_negative)))
    }
}
