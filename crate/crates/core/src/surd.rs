//! Exact real quadratic surds `(A + B·√D) / C`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(a + b·√d) / c` in canonical form: `c > 0`, `gcd(a, b, c) = 1`, `d`
/// squarefree and `> 1` when `b ≠ 0`; rationals have `b = d = 0`.
///
/// Arithmetic between surds requires a common radicand (or a rational
/// operand); comparison is exact and total across radicands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Splits `n` into `(s, r)` with `n = s²·r` and `r` squarefree.
fn square_part(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::one(), BigUint::zero());
    }
    let (mut s, mut r) = (BigUint::one(), BigUint::one());
    if let Some(small) = n.to_u64() {
        for (p, e) in num_prime::nt_funcs::factorize64(small) {
            s *= BigUint::from(p).pow((e / 2) as u32);
            if e % 2 == 1 {
                r *= BigUint::from(p);
            }
        }
    } else {
        for (p, e) in num_prime::nt_funcs::factorize(n.clone()) {
            s *= p.pow((e / 2) as u32);
            if e % 2 == 1 {
                r *= p;
            }
        }
    }
    (s, r)
}

/// Sign of `x + y·√d` for `d ≥ 0`.
fn sign2(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let sx = x.sign();
    let sy = if d.is_zero() { Sign::NoSign } else { y.sign() };
    match (sx, sy) {
        (_, Sign::NoSign) => x.cmp(&BigInt::zero()),
        (Sign::NoSign, _) => y.cmp(&BigInt::zero()),
        (a, b) if a == b => x.cmp(&BigInt::zero()),
        // opposite signs: compare x² with y²·d
        (Sign::Plus, _) => (x * x).cmp(&(y * y * d)),
        (Sign::Minus, _) => (y * y * d).cmp(&(x * x)),
    }
}

/// Sign of `u + v·√d1 + w·√d2` for `d1, d2 ≥ 0`.
fn sign3(u: &BigInt, v: &BigInt, d1: &BigInt, w: &BigInt, d2: &BigInt) -> Ordering {
    let first = sign2(u, v, d1);
    let second = if d2.is_zero() { Ordering::Equal } else { w.cmp(&BigInt::zero()) };
    if second == Ordering::Equal {
        return first;
    }
    if first == Ordering::Equal || first == second {
        return second;
    }
    // |u + v√d1|² − w²·d2 = (u² + v²d1 − w²d2) + 2uv·√d1
    let diff = sign2(&(u * u + v * v * d1 - w * w * d2), &(BigInt::from(2) * u * v), d1);
    if first == Ordering::Greater {
        diff
    } else {
        diff.reverse()
    }
}

impl QuadraticSurd {
    /// Builds and canonicalizes `(a + b√d)/c`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<QuadraticSurd> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::Parse("negative radicand".into()));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        let (s, r) = square_part(d.magnitude());
        b *= BigInt::from(s);
        let mut d = BigInt::from(r);
        if d.is_one() {
            a += &b;
            b = BigInt::zero();
        }
        if b.is_zero() || d.is_zero() {
            b = BigInt::zero();
            d = BigInt::zero();
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(QuadraticSurd { a, b, c, d })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> QuadraticSurd {
        QuadraticSurd {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<QuadraticSurd> {
        QuadraticSurd::new(num.into(), BigInt::zero(), den.into(), BigInt::zero())
    }

    /// `√n`
    pub fn sqrt(n: impl Into<BigInt>) -> Result<QuadraticSurd> {
        QuadraticSurd::new(BigInt::zero(), BigInt::one(), BigInt::one(), n.into())
    }

    pub fn zero() -> QuadraticSurd {
        QuadraticSurd::from_integer(0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn common_radicand(&self, other: &QuadraticSurd) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(BigInt::zero()),
            (true, false) => Ok(other.d.clone()),
            (false, true) => Ok(self.d.clone()),
            (false, false) if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::IncompatibleRadicands(
                self.d.to_string(),
                other.d.to_string(),
            )),
        }
    }

    pub fn add(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        let d = self.common_radicand(other)?;
        QuadraticSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            d,
        )
    }

    pub fn neg(&self) -> QuadraticSurd {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        let d = self.common_radicand(other)?;
        // (a1 + b1√d)(a2 + b2√d) = (a1a2 + b1b2·d) + (a1b2 + a2b1)√d
        QuadraticSurd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &other.a * &self.b,
            &self.c * &other.c,
            d,
        )
    }

    /// `1 / self`
    pub fn recip(&self) -> Result<QuadraticSurd> {
        // c / (a + b√d) = c(a − b√d) / (a² − b²d)
        let den = &self.a * &self.a - &self.b * &self.b * &self.d;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QuadraticSurd::new(&self.c * &self.a, -(&self.c * &self.b), den, self.d.clone())
    }

    pub fn div(&self, other: &QuadraticSurd) -> Result<QuadraticSurd> {
        self.mul(&other.recip()?)
    }

    /// Exact sign of `self − other`.
    pub fn cmp_exact(&self, other: &QuadraticSurd) -> Ordering {
        // multiply through by c1·c2 > 0
        let u = &self.a * &other.c - &other.a * &self.c;
        let v = &self.b * &other.c;
        let w = -(&other.b * &self.c);
        if self.d == other.d {
            sign2(&u, &(v + w), &self.d)
        } else {
            sign3(&u, &v, &self.d, &w, &other.d)
        }
    }

    /// Truncated decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        // floor((a + b√d)·10^k / c), using floor/ceil of b√d·10^k as appropriate
        let bd = &self.b * &scale;
        let root = (&bd * &bd * &self.d).sqrt();
        let radical = if self.b.is_negative() {
            // -⌈|b|√d·10^k⌉ so that the sum stays a floor
            let exact = &root * &root == &bd * &bd * &self.d;
            -(if exact { root } else { root + 1 })
        } else {
            root
        };
        let numer = &self.a * &scale + radical;
        let q = numer.div_floor(&self.c);
        let negative = q.is_negative();
        let digits_str = q.abs().to_string();
        let padded = format!("{:0>width$}", digits_str, width = digits + 1);
        let (int, frac) = padded.split_at(padded.len() - digits);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(0.0);
        (self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * d.sqrt())
            / self.c.to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for QuadraticSurd {
    /// `3`, `1/2`, `√5`, `2√2`, `√221/5`, `(-1 + √5)/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radical = |b: &BigInt| -> String {
            match b.to_i64() {
                Some(1) => format!("√{}", self.d),
                Some(-1) => format!("-√{}", self.d),
                _ => format!("{}√{}", b, self.d),
            }
        };
        let numer = if self.is_rational() {
            self.a.to_string()
        } else if self.a.is_zero() {
            radical(&self.b)
        } else if self.b.is_negative() {
            format!("{} - {}", self.a, radical(&-&self.b))
        } else {
            format!("{} + {}", self.a, radical(&self.b))
        };
        if self.c.is_one() {
            write!(f, "{numer}")
        } else if self.is_rational() || self.a.is_zero() {
            write!(f, "{numer}/{}", self.c)
        } else {
            write!(f, "({numer})/{}", self.c)
        }
    }
}

/// Exact JSON form: the four integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdJson {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
}

impl From<&QuadraticSurd> for SurdJson {
    fn from(s: &QuadraticSurd) -> SurdJson {
        SurdJson {
            a: s.a.to_string(),
            b: s.b.to_string(),
            c: s.c.to_string(),
            d: s.d.to_string(),
        }
    }
}

impl TryFrom<&SurdJson> for QuadraticSurd {
    type Error = Error;

    fn try_from(j: &SurdJson) -> Result<QuadraticSurd> {
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        };
        QuadraticSurd::new(parse(&j.a)?, parse(&j.b)?, parse(&j.c)?, parse(&j.d)?)
    }
}
