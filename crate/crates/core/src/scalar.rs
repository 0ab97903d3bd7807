//! Scalar field abstraction.
//!
//! Every axiom decision compares sums and products at equality boundaries, so
//! the engine only accepts exact ordered fields. Floating point types are
//! deliberately not `Scalar`s: they are neither `Ord` nor `Hash`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact ordered field usable as coordinates of alternatives, prices,
/// incomes and transformation parameters.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Parse the textual rational encoding (`"3"`, `"-7/2"`).
    fn parse_exact(s: &str) -> Result<Self, String>;
}

impl<I> Scalar for Ratio<I>
where
    I: Clone + Integer + Signed + Hash + Debug + Display + FromStr + Send + Sync + 'static,
    Ratio<I>: FromStr + FromPrimitive,
    <Ratio<I> as FromStr>::Err: Display,
{
    fn parse_exact(s: &str) -> Result<Self, String> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err("empty rational".to_string());
        }
        if let Some((_, den)) = trimmed.split_once('/') {
            if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
                return Err(format!("zero denominator in \"{s}\""));
            }
        }
        trimmed
            .parse::<Ratio<I>>()
            .map_err(|e| format!("malformed rational \"{s}\": {e}"))
    }
}

/// Dot product of two equally long vectors.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Build a scalar from a small integer.
pub fn from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("every exact field embeds the integers")
}
