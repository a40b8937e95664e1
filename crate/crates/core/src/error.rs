use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::exact::{Integer, Rational};

pub type Result<T> = core::result::Result<T, Error>;

/// Parameter pairs where the octic machinery breaks down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegenerateCase {
    /// The monster resultant vanishes at `(2, -4)`.
    MuZeroAtTwoMinusFour,
    /// The monster resultant vanishes at `(2/3, -4/3)`.
    MuZeroAtTwoThirds,
    /// The monster resultant vanishes elsewhere (never seen for rational input).
    MuZero { m: Box<Rational>, a: Box<Rational> },
    /// `m = 2`: `u = 1` and the map is not an automorphism.
    MEqualsTwo,
    /// `m = -2`: `u = -1`, the octic is the square of a simplest quartic.
    MEqualsMinusTwo,
    /// `m^2 - 4` is a nonzero rational square.
    SquareDiscriminant,
}

impl DegenerateCase {
    pub fn label(&self) -> &'static str {
        match self {
            DegenerateCase::MuZeroAtTwoMinusFour => "mu=0 at (m,A)=(2,-4)",
            DegenerateCase::MuZeroAtTwoThirds => "mu=0 at (m,A)=(2/3,-4/3)",
            DegenerateCase::MuZero { .. } => "mu=0",
            DegenerateCase::MEqualsTwo => "m=2",
            DegenerateCase::MEqualsMinusTwo => "m=-2",
            DegenerateCase::SquareDiscriminant => "m^2-4 is a square",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    InvalidArgument(String),
    NotSquarefree(Integer),
    NotSumOfTwoSquares(Integer),
    RepeatedRoots,
    Parse(String),
    DivisionByZero,
    ContextMismatch,
    NotInvertible,
    Degenerate(DegenerateCase),
    Hypothesis(String),
    PrecisionExceeded { bits: usize },
    Indeterminate { bits: usize },
    IterationCap(usize),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::NotSquarefree(n) => write!(f, "{n} is not squarefree"),
            Error::NotSumOfTwoSquares(n) => write!(f, "{n} is not a sum of two squares"),
            Error::RepeatedRoots => f.write_str("polynomial has repeated roots"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ContextMismatch => f.write_str("ring context mismatch"),
            Error::NotInvertible => f.write_str("element is not invertible"),
            Error::Degenerate(c) => write!(f, "degenerate parameters: {}", c.label()),
            Error::Hypothesis(s) => write!(f, "hypothesis not satisfied: {s}"),
            Error::PrecisionExceeded { bits } => {
                write!(f, "precision ceiling of {bits} bits exceeded")
            }
            Error::Indeterminate { bits } => {
                write!(f, "indeterminate at {bits} bits of precision")
            }
            Error::IterationCap(n) => write!(f, "iteration cap of {n} reached"),
            Error::Internal(s) => write!(f, "internal consistency failure: {s}"),
        }
    }
}

impl core::error::Error for Error {}
