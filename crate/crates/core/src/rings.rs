//! Exact arithmetic in the endomorphism rings of the elliptic curves that
//! matter here: ℤ for a generic curve, ℤ[i] for the square lattice and
//! ℤ[τ] (τ = e^{iπ/3}) for the hexagonal lattice.
//!
//! Every imaginary order is presented as ℤ + ℤ·g with g² = T·g − N, so a
//! single multiplication rule serves both.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(OrderKind, OrderKind),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the rational order has no generator component (b = {0})")]
    NotRational(i64),
    #[error("cannot parse {input:?} as an element of the {order} order")]
    Parse { input: String, order: OrderKind },
    #[error("unknown order {0:?} (expected rational, gaussian or eisenstein)")]
    UnknownOrder(String),
}

/// Which endomorphism order an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "gaussian")]
    Gaussian,
    #[serde(rename = "eisenstein")]
    Eisenstein6,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Rational, OrderKind::Gaussian, OrderKind::Eisenstein6];

    /// T in g² = T·g − N. Zero for ℤ, where the generator is unused.
    pub const fn trace_of_gen(self) -> i64 {
        match self {
            OrderKind::Rational | OrderKind::Gaussian => 0,
            OrderKind::Eisenstein6 => 1,
        }
    }

    /// N in g² = T·g − N.
    pub const fn norm_of_gen(self) -> i64 {
        match self {
            OrderKind::Rational => 0,
            OrderKind::Gaussian | OrderKind::Eisenstein6 => 1,
        }
    }

    pub const fn discriminant(self) -> i64 {
        let t = self.trace_of_gen();
        t * t - 4 * self.norm_of_gen()
    }

    pub const fn is_imaginary(self) -> bool {
        !matches!(self, OrderKind::Rational)
    }

    /// Letter used for the generator in the textual grammar.
    pub const fn symbol(self) -> Option<char> {
        match self {
            OrderKind::Rational => None,
            OrderKind::Gaussian => Some('i'),
            OrderKind::Eisenstein6 => Some('t'),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            OrderKind::Rational => "rational",
            OrderKind::Gaussian => "gaussian",
            OrderKind::Eisenstein6 => "eisenstein",
        }
    }

    /// Generator of the (cyclic) unit group.
    fn primitive_unit(self) -> QuadInt {
        match self {
            OrderKind::Rational => QuadInt::integer(self, -1),
            _ => QuadInt { a: 0, b: 1, order: self },
        }
    }

    fn unit_count(self) -> usize {
        match self {
            OrderKind::Rational => 2,
            OrderKind::Gaussian => 4,
            OrderKind::Eisenstein6 => 6,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rational" | "r" | "z" => Ok(OrderKind::Rational),
            "gaussian" | "g" => Ok(OrderKind::Gaussian),
            "eisenstein" | "e" | "eisenstein6" => Ok(OrderKind::Eisenstein6),
            _ => Err(RingError::UnknownOrder(s.to_string())),
        }
    }
}

/// The element `a + b·g` of an order.
///
/// Ordering is lexicographic on `(order, norm, a, b)`; within one order this
/// is the `(norm, a, b)` order used for every canonical output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: i64,
    b: i64,
    order: OrderKind,
}

impl QuadInt {
    pub fn new(order: OrderKind, a: i64, b: i64) -> Result<Self, RingError> {
        if order == OrderKind::Rational && b != 0 {
            return Err(RingError::NotRational(b));
        }
        Ok(QuadInt { a, b, order })
    }

    pub const fn integer(order: OrderKind, a: i64) -> Self {
        QuadInt { a, b: 0, order }
    }

    pub const fn zero(order: OrderKind) -> Self {
        Self::integer(order, 0)
    }

    pub const fn one(order: OrderKind) -> Self {
        Self::integer(order, 1)
    }

    /// `g` itself; `None` for ℤ.
    pub fn generator(order: OrderKind) -> Option<Self> {
        order.is_imaginary().then_some(QuadInt { a: 0, b: 1, order })
    }

    pub const fn a(&self) -> i64 {
        self.a
    }

    pub const fn b(&self) -> i64 {
        self.b
    }

    pub const fn order(&self) -> OrderKind {
        self.order
    }

    pub const fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_unit(&self) -> bool {
        self.norm_wide() == 1
    }

    fn same_order(&self, other: &Self) -> Result<OrderKind, RingError> {
        if self.order == other.order {
            Ok(self.order)
        } else {
            Err(RingError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        let order = self.same_order(other)?;
        Ok(QuadInt {
            a: self.a.checked_add(other.a).ok_or(RingError::Overflow("add"))?,
            b: self.b.checked_add(other.b).ok_or(RingError::Overflow("add"))?,
            order,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        let order = self.same_order(other)?;
        Ok(QuadInt {
            a: self.a.checked_sub(other.a).ok_or(RingError::Overflow("sub"))?,
            b: self.b.checked_sub(other.b).ok_or(RingError::Overflow("sub"))?,
            order,
        })
    }

    pub fn checked_neg(&self) -> Result<Self, RingError> {
        Ok(QuadInt {
            a: self.a.checked_neg().ok_or(RingError::Overflow("neg"))?,
            b: self.b.checked_neg().ok_or(RingError::Overflow("neg"))?,
            order: self.order,
        })
    }

    /// (a₁+b₁g)(a₂+b₂g) = (a₁a₂ − b₁b₂N) + (a₁b₂ + a₂b₁ + b₁b₂T)·g
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        let order = self.same_order(other)?;
        let (t, n) = (order.trace_of_gen() as i128, order.norm_of_gen() as i128);
        let (a1, b1, a2, b2) = (self.a as i128, self.b as i128, other.a as i128, other.b as i128);
        // i64 products fit in i128; only the final narrowing can fail.
        let bb = b1 * b2;
        let a = a1 * a2 - bb * n;
        let b = a1 * b2 + a2 * b1 + bb * t;
        Ok(QuadInt {
            a: narrow(a, "mul")?,
            b: narrow(b, "mul")?,
            order,
        })
    }

    /// Galois conjugate: (a + bT) − b·g.
    pub fn conj(&self) -> Result<Self, RingError> {
        let shift = self
            .b
            .checked_mul(self.order.trace_of_gen())
            .ok_or(RingError::Overflow("conj"))?;
        Ok(QuadInt {
            a: self.a.checked_add(shift).ok_or(RingError::Overflow("conj"))?,
            b: self.b.checked_neg().ok_or(RingError::Overflow("conj"))?,
            order: self.order,
        })
    }

    /// a² + abT + b²N, the index of x·Λ in Λ.
    pub fn norm(&self) -> Result<i64, RingError> {
        i64::try_from(self.norm_wide()).map_err(|_| RingError::Overflow("norm"))
    }

    pub fn trace(&self) -> Result<i64, RingError> {
        let a2 = (self.a as i128) * 2;
        narrow(a2 + (self.b as i128) * (self.order.trace_of_gen() as i128), "trace")
    }

    pub fn conj_norm_trace(&self) -> Result<(Self, i64, i64), RingError> {
        Ok((self.conj()?, self.norm()?, self.trace()?))
    }

    // Exact for every i64 pair: the norm is a positive definite form bounded
    // by 3·2^126 < 2^128.
    fn norm_wide(&self) -> u128 {
        let (a, b) = (self.a.unsigned_abs() as u128, self.b.unsigned_abs() as u128);
        let n = self.order.norm_of_gen() as u128;
        let t = self.order.trace_of_gen();
        let squares = a * a + b * b * n;
        let cross = a * b * (t.unsigned_abs() as u128);
        let cross_negative = (self.a < 0) != (self.b < 0) && t != 0;
        if cross_negative {
            squares - cross
        } else {
            squares + cross
        }
    }

    /// Returns `q` with `q·y = self` when `y` divides `self` in the order.
    pub fn try_div_exact(&self, y: &Self) -> Result<Option<Self>, RingError> {
        self.same_order(y)?;
        if y.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let n = y.norm()?;
        let num = self.checked_mul(&y.conj()?)?;
        if num.a % n != 0 || num.b % n != 0 {
            return Ok(None);
        }
        Ok(Some(QuadInt {
            a: num.a / n,
            b: num.b / n,
            order: self.order,
        }))
    }

    /// Parses a signed sum of integer and generator terms such as `2-t`,
    /// `t-1`, `-3i`, `1+2*i`; bare integers for ℤ.
    pub fn parse(order: OrderKind, input: &str) -> Result<Self, RingError> {
        let err = || RingError::Parse {
            input: input.to_string(),
            order,
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let mut starts: Vec<usize> = s
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .collect();
        starts.insert(0, 0);
        starts.push(s.len());
        let (mut a, mut b) = (0i64, 0i64);
        let (mut seen_a, mut seen_b) = (false, false);
        for w in starts.windows(2) {
            let term = &s[w[0]..w[1]];
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            match order.symbol().and_then(|g| body.strip_suffix(g)) {
                Some(coef) => {
                    if seen_b {
                        return Err(err());
                    }
                    seen_b = true;
                    let coef = match coef.strip_suffix('*') {
                        Some(c) if !c.is_empty() => c,
                        Some(_) => return Err(err()),
                        None => coef,
                    };
                    let c = if coef.is_empty() {
                        1
                    } else if coef.bytes().all(|d| d.is_ascii_digit()) {
                        coef.parse::<i64>().map_err(|_| err())?
                    } else {
                        return Err(err());
                    };
                    b = sign * c;
                }
                None => {
                    if seen_a || body.is_empty() || !body.bytes().all(|d| d.is_ascii_digit()) {
                        return Err(err());
                    }
                    seen_a = true;
                    a = sign * body.parse::<i64>().map_err(|_| err())?;
                }
            }
        }
        QuadInt::new(order, a, b)
    }

    /// All units of the order, as successive powers of a primitive unit.
    pub fn units(order: OrderKind) -> Vec<QuadInt> {
        let zeta = order.primitive_unit();
        let mut out = Vec::with_capacity(order.unit_count());
        let mut x = QuadInt::one(order);
        for _ in 0..order.unit_count() {
            out.push(x);
            x = x.checked_mul(&zeta).expect("unit powers stay tiny");
        }
        out
    }

    /// Inverse of a unit; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<QuadInt> {
        if self.is_unit() {
            self.conj().ok()
        } else {
            None
        }
    }
}

fn narrow(x: i128, what: &'static str) -> Result<i64, RingError> {
    i64::try_from(x).map_err(|_| RingError::Overflow(what))
}

/// Free-standing form of [`QuadInt::units`].
pub fn units(order: OrderKind) -> Vec<QuadInt> {
    QuadInt::units(order)
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.norm_wide().cmp(&other.norm_wide()))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.order.symbol() {
            Some(g) if self.b != 0 => g,
            _ => return write!(f, "{}", self.a),
        };
        let magnitude = self.b.unsigned_abs();
        let coef = if magnitude == 1 {
            String::new()
        } else {
            magnitude.to_string()
        };
        match (self.a, self.b < 0) {
            (0, false) => write!(f, "{coef}{g}"),
            (0, true) => write!(f, "-{coef}{g}"),
            (a, false) => write!(f, "{a}+{coef}{g}"),
            (a, true) => write!(f, "{a}-{coef}{g}"),
        }
    }
}

impl Serialize for QuadInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
