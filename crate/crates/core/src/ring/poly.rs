use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Pow, Signed, Zero};

use super::{Domain, GcdDomain, ParseError};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector. Canonical associates have a positive leading
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

const MAX_PARSED_EXPONENT: u32 = 4096;

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor, lowest degree first: `[7, -1, 3]` is `3*x^2 - x + 7`.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content(self)`, sign untouched.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    pub fn evaluate(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// `self - k * x^shift * other`, in place.
    fn sub_shifted_scaled(&mut self, other: &Self, k: &BigInt, shift: usize) {
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] -= k * c;
        }
        self.trim();
    }

    fn pow(&self, exp: u32) -> Self {
        let mut result = IntPoly::one();
        for _ in 0..exp {
            result = result.mul(self);
        }
        result
    }

    /// `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let n = divisor.degree().expect("pseudo-division by zero");
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let m = match self.degree() {
            Some(m) if m >= n => m,
            _ => return self.clone(),
        };
        let mut r = self.clone();
        let mut pending = m - n + 1;
        while let Some(d) = r.degree() {
            if d < n {
                break;
            }
            let top = r.leading().cloned().unwrap_or_default();
            r = r.scale(&lc);
            r.sub_shifted_scaled(divisor, &top, d - n);
            pending -= 1;
        }
        r.scale(&Pow::pow(&lc, pending as u32))
    }

    /// gcd of two primitive polynomials via the subresultant remainder
    /// sequence, sign not normalized.
    fn primitive_gcd(a: &Self, b: &Self) -> Self {
        let (mut p, mut q) = if a.degree() >= b.degree() {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = p.degree().unwrap() - q.degree().unwrap();
            let r = p.pseudo_rem(&q);
            match r.degree() {
                None => return q.primitive_part(),
                Some(0) => return IntPoly::one(),
                Some(_) => {}
            }
            let divisor = &g * Pow::pow(&h, delta as u32);
            p = q;
            q = r.div_scalar_exact(&divisor);
            g = p.leading().unwrap().clone();
            if delta > 0 {
                let num = Pow::pow(&g, delta as u32);
                let den = Pow::pow(&h, (delta - 1) as u32);
                h = num / den;
            }
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if deg == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if deg == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{deg}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <IntPoly as GcdDomain>::parse(s)
    }
}

impl GcdDomain for IntPoly {
    const DOMAIN: Domain = Domain::IntPoly;

    fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::from_i64s(&[1])
    }

    fn from_i64(value: i64) -> Self {
        Self::from_i64s(&[value])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        Self::from_coeffs(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn canonical(&self) -> Self {
        match self.leading() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.canonical();
        }
        if rhs.is_zero() {
            return self.canonical();
        }
        let content = self.content().gcd(&rhs.content());
        let prim = Self::primitive_gcd(&self.primitive_part(), &rhs.primitive_part());
        prim.scale(&content).canonical()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.degree()?;
        let m = match self.degree() {
            None => return Some(Self::zero()),
            Some(m) if m < n => return None,
            Some(m) => m,
        };
        let lc = rhs.leading().unwrap();
        let mut quotient = vec![BigInt::zero(); m - n + 1];
        let mut r = self.clone();
        while let Some(d) = r.degree() {
            if d < n {
                return None;
            }
            let (q, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r.sub_shifted_scaled(rhs, &q, d - n);
            quotient[d - n] = q;
        }
        Some(Self::from_coeffs(quotient))
    }

    fn parse(text: &str) -> Result<Self, ParseError> {
        let mut parser = Parser {
            src: text,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        if parser.chars.is_empty() {
            return Err(parser.error("empty input"));
        }
        let value = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error(format!(
                "unexpected {:?} at offset {}",
                parser.chars[parser.pos], parser.pos
            )));
        }
        Ok(value)
    }
}

/// Recursive-descent parser over whitespace-stripped input.
///
/// ```text
/// expr    := [+-] term ([+-] term)*
/// term    := power ([*]? power)*
/// power   := primary [^ digits]
/// primary := digits | x | ( expr )
/// ```
struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> ParseError {
        ParseError::new(Domain::IntPoly, self.src, reason)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(c) if c.is_ascii_digit() || c == 'x' || c == '(' => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected exponent after '^'"));
        }
        let exp: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_PARSED_EXPONENT)
            .ok_or_else(|| self.error(format!("exponent {digits} out of range")))?;
        Ok(base.pow(exp))
    }

    fn primary(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let value = BigInt::from_str(&digits).map_err(|e| self.error(e.to_string()))?;
                Ok(IntPoly::constant(value))
            }
            Some(c) => Err(self.error(format!("unexpected {c:?} at offset {}", self.pos))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}
