use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::rational::Rat;
use crate::error::{Error, Result};

/// Default prime for the modular backend: 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Runtime description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    Rationals,
    GaussianRationals,
    PrimeField { modulus: u64 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::GaussianRationals => write!(f, "Qi"),
            FieldSpec::PrimeField { modulus } => write!(f, "Fp:{modulus}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `Qi`, `Fp` (default prime) and `Fp:<prime>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldSpec::Rationals),
            "Qi" | "Q(i)" => Ok(FieldSpec::GaussianRationals),
            "Fp" => Ok(FieldSpec::PrimeField { modulus: DEFAULT_PRIME }),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown field tag {other:?}")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad modulus {p:?}")))?;
                PrimeField::new(p)?;
                Ok(FieldSpec::PrimeField { modulus: p })
            }
        }
    }
}

/// An element of ℚ(i). Also the universal exact coefficient type for family
/// parameters and presentation files; it is mapped into a concrete field
/// with [`Field::from_coeff`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

pub type Coeff = Gaussian;

impl Gaussian {
    pub fn real(re: Rat) -> Self {
        Gaussian { re, im: Rat::ZERO }
    }

    pub fn int(n: i64) -> Self {
        Gaussian::real(Rat::int(n))
    }

    pub fn i() -> Self {
        Gaussian {
            re: Rat::ZERO,
            im: Rat::ONE,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Gaussian {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Gaussian {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn neg(&self) -> Self {
        Gaussian {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Gaussian::real(self.re.mul(&o.re));
        }
        Gaussian {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.im.is_zero() {
            return self.re.inv().map(Gaussian::real);
        }
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let n = norm.inv()?;
        Some(Gaussian {
            re: self.re.mul(&n),
            im: self.im.neg().mul(&n),
        })
    }
}

impl From<Rat> for Gaussian {
    fn from(r: Rat) -> Self {
        Gaussian::real(r)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.signum() < 0 {
                    write!(f, "{}-{}i", self.re, self.im.neg())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    /// Parses `p/q`, `bi`, `i`, `-i`, `a+bi`, `a-bi` (rational `a`, `b`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("malformed coefficient {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return t.parse::<Rat>().map(Gaussian::real).map_err(|_| bad());
        };
        // split at the last sign that is not the leading one and not after '/'
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                split = Some(k);
                break;
            }
        }
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => Rat::ONE,
            "-" => Rat::int(-1),
            x => x.trim_start_matches('+').parse::<Rat>().map_err(|_| bad())?,
        };
        let re = re.parse::<Rat>().map_err(|_| bad())?;
        Ok(Gaussian { re, im })
    }
}

/// Exact field arithmetic. Elements are plain values; the field value carries
/// whatever context the arithmetic needs (the modulus for prime fields).
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Maps an exact ℚ(i) coefficient into the field.
    fn from_coeff(&self, c: &Coeff) -> Result<Self::Elem>;
    /// Whether `a` is a well-formed element of this field.
    fn contains(&self, a: &Self::Elem) -> bool;
    fn format(&self, a: &Self::Elem) -> String;
    fn sqrt_minus_one(&self) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc -= a * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(a, b));
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        a.inv()
    }
    fn from_int(&self, n: i64) -> Rat {
        Rat::int(n)
    }
    fn from_coeff(&self, c: &Coeff) -> Result<Rat> {
        if c.is_real() {
            Ok(c.re.clone())
        } else {
            Err(Error::Unrepresentable {
                field: self.spec(),
                value: c.to_string(),
            })
        }
    }
    fn contains(&self, _a: &Rat) -> bool {
        true
    }
    fn format(&self, a: &Rat) -> String {
        a.to_string()
    }
    fn sqrt_minus_one(&self) -> Result<Rat> {
        Err(Error::NoImaginaryUnit(self.spec()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GaussianRationals;

impl Field for GaussianRationals {
    type Elem = Gaussian;

    fn spec(&self) -> FieldSpec {
        FieldSpec::GaussianRationals
    }
    fn zero(&self) -> Gaussian {
        Gaussian::default()
    }
    fn one(&self) -> Gaussian {
        Gaussian::int(1)
    }
    fn is_zero(&self, a: &Gaussian) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.add(b)
    }
    fn sub(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.sub(b)
    }
    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.mul(b)
    }
    fn neg(&self, a: &Gaussian) -> Gaussian {
        a.neg()
    }
    fn inv(&self, a: &Gaussian) -> Option<Gaussian> {
        a.inv()
    }
    fn from_int(&self, n: i64) -> Gaussian {
        Gaussian::int(n)
    }
    fn from_coeff(&self, c: &Coeff) -> Result<Gaussian> {
        Ok(c.clone())
    }
    fn contains(&self, _a: &Gaussian) -> bool {
        true
    }
    fn format(&self, a: &Gaussian) -> String {
        a.to_string()
    }
    fn sqrt_minus_one(&self) -> Result<Gaussian> {
        Ok(Gaussian::i())
    }
}

/// ℤ/pℤ for a prime `p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { modulus: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_int(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_coeff(&self, c: &Coeff) -> Result<u64> {
        let unrep = || Error::Unrepresentable {
            field: self.spec(),
            value: c.to_string(),
        };
        let conv = |r: &Rat| -> Result<u64> {
            let d = self.reduce_big(&r.denom());
            let dinv = self.inv(&d).ok_or_else(unrep)?;
            Ok(self.mul(&self.reduce_big(&r.numer()), &dinv))
        };
        let re = conv(&c.re)?;
        if c.im.is_zero() {
            return Ok(re);
        }
        let im = conv(&c.im)?;
        let i = self.sqrt_minus_one().map_err(|_| unrep())?;
        Ok(self.add(&re, &self.mul(&im, &i)))
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn sqrt_minus_one(&self) -> Result<u64> {
        if self.p == 2 {
            return Ok(1);
        }
        if self.p % 4 != 1 {
            return Err(Error::NoImaginaryUnit(self.spec()));
        }
        // smallest quadratic non-residue c gives i = c^((p-1)/4)
        let mut c = 2u64;
        while self.pow(c, (self.p - 1) / 2) != self.p - 1 {
            c += 1;
        }
        Ok(self.pow(c, (self.p - 1) / 4))
    }
    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = self.sub(acc, &mul_mod(*a, *b, self.p));
    }
    #[inline]
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = self.add(acc, &mul_mod(*a, *b, self.p));
    }
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, b, n);
            }
            b = mul_mod(b, b, n);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Signed integer helper for report code: a rational that is an integer.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_detection() {
        assert!(is_prime(2));
        assert!(is_prime(DEFAULT_PRIME));
        assert!(!is_prime(1));
        assert!(!is_prime(DEFAULT_PRIME * 3));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn imaginary_unit() {
        let f = PrimeField::new(13).unwrap();
        let i = f.sqrt_minus_one().unwrap();
        assert_eq!(f.mul(&i, &i), f.neg(&1));
        assert!(PrimeField::new(DEFAULT_PRIME).unwrap().sqrt_minus_one().is_err());
        let p = PrimeField::new(1_000_000_009).unwrap(); // 1 mod 4
        let i = p.sqrt_minus_one().unwrap();
        assert_eq!(p.mul(&i, &i), p.neg(&1));
        assert!(Rationals.sqrt_minus_one().is_err());
        let gi = GaussianRationals.sqrt_minus_one().unwrap();
        assert_eq!(gi.mul(&gi), Gaussian::int(-1));
    }

    #[test]
    fn coefficients_parse_and_map() {
        let c: Gaussian = "1/2-3i".parse().unwrap();
        assert_eq!(c.re, Rat::new(1, 2));
        assert_eq!(c.im, Rat::int(-3));
        assert_eq!("-i".parse::<Gaussian>().unwrap(), Gaussian::i().neg());
        assert_eq!("2/3i".parse::<Gaussian>().unwrap().im, Rat::new(2, 3));
        assert_eq!("-5".parse::<Gaussian>().unwrap(), Gaussian::int(-5));
        assert!("1+".parse::<Gaussian>().is_err());
        assert_eq!(c.to_string().parse::<Gaussian>().unwrap(), c);
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_coeff(&"1/2".parse().unwrap()).unwrap(), 4);
        assert!(f.from_coeff(&"1/7".parse().unwrap()).is_err());
        assert!(f.from_coeff(&Gaussian::i()).is_err());
        assert!(Rationals.from_coeff(&Gaussian::i()).is_err());
    }

    #[test]
    fn field_spec_tags() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("Qi".parse::<FieldSpec>().unwrap(), FieldSpec::GaussianRationals);
        assert_eq!(
            "Fp:13".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField { modulus: 13 }
        );
        assert!("Fp:12".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        for s in [
            FieldSpec::Rationals,
            FieldSpec::GaussianRationals,
            FieldSpec::PrimeField { modulus: 13 },
        ] {
            assert_eq!(s.to_string().parse::<FieldSpec>().unwrap(), s);
        }
    }
}
