use std::fmt;
use std::str::FromStr;

use super::{Bilattice, BilatticeKind, Rational, ValueError};

/// Belnap's four values.
///
/// Internally a value is the set of classical truth values it asserts:
/// `⊥ = {}`, `f = {f}`, `t = {t}`, `⊤ = {f, t}`. The knowledge order is set
/// inclusion; the truth order compares the `t` parts upwards and the `f`
/// parts downwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FourValue {
    Bottom,
    False,
    True,
    Top,
}

impl FourValue {
    /// All four values, in the order used when enumerating interpretations.
    pub const ALL: [FourValue; 4] = [
        FourValue::Bottom,
        FourValue::False,
        FourValue::True,
        FourValue::Top,
    ];

    fn has_t(self) -> bool {
        matches!(self, FourValue::True | FourValue::Top)
    }

    fn has_f(self) -> bool {
        matches!(self, FourValue::False | FourValue::Top)
    }

    fn from_parts(has_t: bool, has_f: bool) -> Self {
        match (has_t, has_f) {
            (false, false) => FourValue::Bottom,
            (false, true) => FourValue::False,
            (true, false) => FourValue::True,
            (true, true) => FourValue::Top,
        }
    }

    /// True for `f` and `t`.
    pub fn is_total(self) -> bool {
        matches!(self, FourValue::False | FourValue::True)
    }

    /// True for `f`, `t` and `⊥` (a partial classical value).
    pub fn is_classical(self) -> bool {
        self != FourValue::Top
    }

    /// Position in [`FourValue::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl Bilattice for FourValue {
    const KIND: BilatticeKind = BilatticeKind::Four;

    fn ff() -> Self {
        FourValue::False
    }

    fn tt() -> Self {
        FourValue::True
    }

    fn bot() -> Self {
        FourValue::Bottom
    }

    fn top() -> Self {
        FourValue::Top
    }

    fn meet_t(&self, other: &Self) -> Self {
        Self::from_parts(self.has_t() && other.has_t(), self.has_f() || other.has_f())
    }

    fn join_t(&self, other: &Self) -> Self {
        Self::from_parts(self.has_t() || other.has_t(), self.has_f() && other.has_f())
    }

    fn meet_k(&self, other: &Self) -> Self {
        Self::from_parts(self.has_t() && other.has_t(), self.has_f() && other.has_f())
    }

    fn join_k(&self, other: &Self) -> Self {
        Self::from_parts(self.has_t() || other.has_t(), self.has_f() || other.has_f())
    }

    fn neg(&self) -> Self {
        Self::from_parts(self.has_f(), self.has_t())
    }

    fn leq_t(&self, other: &Self) -> bool {
        (!self.has_t() || other.has_t()) && (!other.has_f() || self.has_f())
    }

    fn leq_k(&self, other: &Self) -> bool {
        (!self.has_t() || other.has_t()) && (!self.has_f() || other.has_f())
    }

    fn from_interval(lo: Rational, hi: Rational) -> Result<Self, ValueError> {
        Err(ValueError::WrongKind {
            value: format!("[{lo},{hi}]"),
            kind: BilatticeKind::Four,
        })
    }
}

impl fmt::Display for FourValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            FourValue::False => "f",
            FourValue::True => "t",
            FourValue::Bottom => "bot",
            FourValue::Top => "top",
        })
    }
}

impl FromStr for FourValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.strip_prefix('#').unwrap_or(s) {
            "f" => Ok(FourValue::False),
            "t" => Ok(FourValue::True),
            "bot" => Ok(FourValue::Bottom),
            "top" => Ok(FourValue::Top),
            _ if s.starts_with('[') => Err(ValueError::WrongKind {
                value: s.to_string(),
                kind: BilatticeKind::Four,
            }),
            _ => Err(ValueError::Malformed(s.to_string())),
        }
    }
}
