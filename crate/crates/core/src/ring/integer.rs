use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Domain, GcdDomain, ParseError};

/// Arbitrary-precision integer. Canonical associates are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Integer(pub BigInt);

impl Integer {
    pub fn new(value: impl Into<BigInt>) -> Self {
        Integer(value.into())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }
}

impl From<i64> for Integer {
    fn from(value: i64) -> Self {
        Integer(BigInt::from(value))
    }
}

impl From<BigInt> for Integer {
    fn from(value: BigInt) -> Self {
        Integer(value)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Integer {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Integer as GcdDomain>::parse(s)
    }
}

impl GcdDomain for Integer {
    const DOMAIN: Domain = Domain::Int;

    fn zero() -> Self {
        Integer(BigInt::zero())
    }

    fn one() -> Self {
        Integer(BigInt::one())
    }

    fn from_i64(value: i64) -> Self {
        Integer(BigInt::from(value))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Integer(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Integer(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Integer(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Integer(-&self.0)
    }

    fn canonical(&self) -> Self {
        Integer(self.0.abs())
    }

    fn is_unit(&self) -> bool {
        self.0.abs().is_one()
    }

    fn gcd(&self, rhs: &Self) -> Self {
        Integer(self.0.gcd(&rhs.0))
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        r.is_zero().then_some(Integer(q))
    }

    fn parse(text: &str) -> Result<Self, ParseError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(ParseError::new(Domain::Int, text, "empty input"));
        }
        let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
        let digits = compact.trim_start_matches(['+', '-']);
        if compact.len() - digits.len() > 1 || digits.is_empty() {
            return Err(ParseError::new(Domain::Int, text, "malformed sign"));
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::new(Domain::Int, text, "expected decimal digits"));
        }
        BigInt::from_str(&compact)
            .map(Integer)
            .map_err(|e| ParseError::new(Domain::Int, text, e.to_string()))
    }
}
