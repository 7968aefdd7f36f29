use std::cmp::{max, min};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Bilattice, BilatticeKind, ValueError};

/// Exact rational used for interval endpoints.
pub type Rational = BigRational;

/// An element `⟨lo, hi⟩` of the interval bilattice over `[0,1]`.
///
/// `lo > hi` is allowed: those are the over-determined (inconsistent) values,
/// with `⊤ = ⟨1,0⟩` at the top of the knowledge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalValue {
    lo: Rational,
    hi: Rational,
}

impl IntervalValue {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, ValueError> {
        for x in [&lo, &hi] {
            if x < &Rational::zero() || x > &Rational::one() {
                return Err(ValueError::OutOfRange(format_rational(x)));
            }
        }
        Ok(IntervalValue { lo, hi })
    }

    /// Parses both endpoints with [`parse_rational`].
    pub fn parse_pair(lo: &str, hi: &str) -> Result<Self, ValueError> {
        IntervalValue::new(parse_rational(lo)?, parse_rational(hi)?)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    fn raw(lo: Rational, hi: Rational) -> Self {
        IntervalValue { lo, hi }
    }
}

impl Bilattice for IntervalValue {
    const KIND: BilatticeKind = BilatticeKind::UnitInterval;

    fn ff() -> Self {
        Self::raw(Rational::zero(), Rational::zero())
    }

    fn tt() -> Self {
        Self::raw(Rational::one(), Rational::one())
    }

    fn bot() -> Self {
        Self::raw(Rational::zero(), Rational::one())
    }

    fn top() -> Self {
        Self::raw(Rational::one(), Rational::zero())
    }

    fn meet_t(&self, other: &Self) -> Self {
        Self::raw(min(&self.lo, &other.lo).clone(), min(&self.hi, &other.hi).clone())
    }

    fn join_t(&self, other: &Self) -> Self {
        Self::raw(max(&self.lo, &other.lo).clone(), max(&self.hi, &other.hi).clone())
    }

    fn meet_k(&self, other: &Self) -> Self {
        Self::raw(min(&self.lo, &other.lo).clone(), max(&self.hi, &other.hi).clone())
    }

    fn join_k(&self, other: &Self) -> Self {
        Self::raw(max(&self.lo, &other.lo).clone(), min(&self.hi, &other.hi).clone())
    }

    fn neg(&self) -> Self {
        let one = Rational::one();
        Self::raw(&one - &self.hi, &one - &self.lo)
    }

    fn leq_t(&self, other: &Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    fn leq_k(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    fn from_interval(lo: Rational, hi: Rational) -> Result<Self, ValueError> {
        IntervalValue::new(lo, hi)
    }
}

impl fmt::Display for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("[{},{}]", format_rational(&self.lo), format_rational(&self.hi));
        f.pad(&s)
    }
}

impl FromStr for IntervalValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('#').unwrap_or(t);
        match t {
            "f" => return Ok(Self::ff()),
            "t" => return Ok(Self::tt()),
            "bot" => return Ok(Self::bot()),
            "top" => return Ok(Self::top()),
            _ => {}
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ValueError::Malformed(s.to_string()))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| ValueError::Malformed(s.to_string()))?;
        IntervalValue::parse_pair(lo, hi)
    }
}

/// Parses `0.35`, `.5`, `1`, or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ValueError> {
    let s = s.trim();
    let bad = || ValueError::Malformed(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as a terminating decimal when its denominator is of
/// the form `2^a·5^b`, and as `p/q` in lowest terms otherwise.
pub fn format_rational(x: &Rational) -> String {
    let mut d = x.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut a, mut b) = (0usize, 0usize);
    while (&d % &two).is_zero() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", x.numer(), x.denom());
    }
    let places = a.max(b);
    if places == 0 {
        return x.numer().to_string();
    }
    let scaled = x * Rational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let scaled = scaled.to_integer();
    let negative = scaled < BigInt::zero();
    let digits = if negative { (-scaled).to_string() } else { scaled.to_string() };
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let frac = frac.trim_end_matches('0');
    format!("{}{int}.{frac}", if negative { "-" } else { "" })
}
