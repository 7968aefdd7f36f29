//! Truth spaces: interlaced, distributive bilattices with negation.
//!
//! Two concrete algebras are provided, Belnap's [`FourValue`] and the
//! interval bilattice over the rational unit interval ([`IntervalValue`]).
//! Everything downstream (interpretations, operators, semantics) is generic
//! over the [`Bilattice`] trait, so a computation is always single-kinded by
//! construction.

mod four;
mod interval;
pub mod laws;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

pub use four::FourValue;
pub use interval::{format_rational, parse_rational, IntervalValue, Rational};

/// Which concrete bilattice a program is evaluated over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BilatticeKind {
    Four,
    UnitInterval,
}

impl fmt::Display for BilatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BilatticeKind::Four => f.write_str("four"),
            BilatticeKind::UnitInterval => f.write_str("interval"),
        }
    }
}

impl FromStr for BilatticeKind {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "four" => Ok(BilatticeKind::Four),
            "interval" | "unit_interval" | "unit-interval" => Ok(BilatticeKind::UnitInterval),
            other => Err(ValueError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValueError {
    #[error("unknown bilattice kind `{0}` (expected `four` or `interval`)")]
    UnknownKind(String),
    #[error("cannot parse `{0}` as a truth value")]
    Malformed(String),
    #[error("interval endpoint {0} lies outside [0,1]")]
    OutOfRange(String),
    #[error("`{value}` is not a value of the {kind} bilattice")]
    WrongKind { value: String, kind: BilatticeKind },
}

/// A complete bilattice with negation.
///
/// `∧`/`∨` are meet/join under the truth order, `⊗`/`⊕` meet/join under the
/// knowledge order. Implementations must be interlaced and distributive and
/// `neg` must be an involution that reverses `≼_t` and preserves `≼_k`.
pub trait Bilattice:
    Clone + Eq + Hash + fmt::Debug + fmt::Display + FromStr<Err = ValueError> + Send + Sync + 'static
{
    const KIND: BilatticeKind;

    /// `f`, the `≼_t`-least element.
    fn ff() -> Self;
    /// `t`, the `≼_t`-greatest element.
    fn tt() -> Self;
    /// `⊥`, the `≼_k`-least element.
    fn bot() -> Self;
    /// `⊤`, the `≼_k`-greatest element.
    fn top() -> Self;

    fn meet_t(&self, other: &Self) -> Self;
    fn join_t(&self, other: &Self) -> Self;
    fn meet_k(&self, other: &Self) -> Self;
    fn join_k(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn leq_t(&self, other: &Self) -> bool;
    fn leq_k(&self, other: &Self) -> bool;

    /// Builds the interval `⟨lo, hi⟩`, if this bilattice has one.
    fn from_interval(lo: Rational, hi: Rational) -> Result<Self, ValueError>;

    fn big_lub_t<'a, I>(values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        values.into_iter().fold(Self::ff(), |acc, v| acc.join_t(v))
    }

    fn big_glb_t<'a, I>(values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        values.into_iter().fold(Self::tt(), |acc, v| acc.meet_t(v))
    }

    fn big_lub_k<'a, I>(values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        values.into_iter().fold(Self::bot(), |acc, v| acc.join_k(v))
    }

    fn big_glb_k<'a, I>(values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        values.into_iter().fold(Self::top(), |acc, v| acc.meet_k(v))
    }
}

/// The binary bilattice operations, as data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    /// `∧`
    MeetT,
    /// `∨`
    JoinT,
    /// `⊗`
    MeetK,
    /// `⊕`
    JoinK,
}

impl BinOp {
    pub const ALL: [BinOp; 4] = [BinOp::MeetT, BinOp::JoinT, BinOp::MeetK, BinOp::JoinK];

    pub fn apply<V: Bilattice>(self, a: &V, b: &V) -> V {
        match self {
            BinOp::MeetT => a.meet_t(b),
            BinOp::JoinT => a.join_t(b),
            BinOp::MeetK => a.meet_k(b),
            BinOp::JoinK => a.join_k(b),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::MeetT => "&",
            BinOp::JoinT => "|",
            BinOp::MeetK => "*",
            BinOp::JoinK => "+",
        }
    }
}

#[cfg(test)]
mod tests;
