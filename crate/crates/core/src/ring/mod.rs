//! Exact arithmetic over GCD domains.
//!
//! Two concrete domains are provided: arbitrary-precision integers
//! ([`Integer`]) and univariate integer polynomials ([`IntPoly`]). All
//! graph and spline code is generic over [`GcdDomain`], so one computation
//! always stays inside a single domain.

mod integer;
mod poly;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use integer::Integer;
pub use poly::IntPoly;

/// Which concrete domain a document or a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "int")]
    Int,
    #[serde(rename = "intpoly")]
    IntPoly,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Int => "int",
            Domain::IntPoly => "intpoly",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as {domain} element: {reason}")]
pub struct ParseError {
    pub domain: Domain,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(domain: Domain, input: &str, reason: impl Into<String>) -> Self {
        ParseError {
            domain,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// An integral domain in which any two elements have a greatest common divisor.
///
/// gcd and lcm are only defined up to units; implementations return the
/// canonical associate so results compare with `==`.
pub trait GcdDomain:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// The distinguished representative of the associate class of `self`.
    fn canonical(&self) -> Self;

    fn is_unit(&self) -> bool;

    /// Canonical gcd. `gcd(0, a) = canonical(a)` and `gcd(0, 0) = 0`.
    fn gcd(&self, rhs: &Self) -> Self;

    /// `Some(q)` with `q * rhs == self` when `rhs` divides `self` and `rhs != 0`.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    fn parse(text: &str) -> Result<Self, ParseError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Canonical lcm; `lcm(a, 0) = 0`.
    fn lcm(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(rhs);
        self.checked_div(&g)
            .expect("gcd divides its argument")
            .mul(rhs)
            .canonical()
    }

    /// True iff `self` divides `other`. Zero divides only zero.
    fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.checked_div(self).is_some()
    }

    /// Quotient of an exact division.
    ///
    /// # Panics
    ///
    /// If `rhs` is zero or does not divide `self`. Use [`GcdDomain::divides`]
    /// or [`GcdDomain::checked_div`] when divisibility is in question.
    fn exact_div(&self, rhs: &Self) -> Self {
        match self.checked_div(rhs) {
            Some(q) => q,
            None => panic!("exact_div: {rhs} does not divide {self}"),
        }
    }

    /// True iff `self` and `other` differ by a unit factor.
    fn is_associate(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// gcd of a collection, folded pairwise. The gcd of nothing is zero.
pub fn gcd_all<'a, R: GcdDomain>(items: impl IntoIterator<Item = &'a R>) -> R {
    items
        .into_iter()
        .fold(R::zero(), |acc, x| acc.gcd(x))
}

/// lcm of a collection, folded pairwise. The lcm of nothing is one.
pub fn lcm_all<'a, R: GcdDomain>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc.lcm(x))
}

pub fn product<'a, R: GcdDomain>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc.mul(x))
}
