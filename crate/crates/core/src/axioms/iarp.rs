use super::saarp::{check_saarp_generic, SearchLimits};
use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::theory::{AffineElement, AffineTheory};
use crate::verdict::Verdict;

/// Default limits for IARP: sequences no longer than one more than the
/// number of observations.
pub fn iarp_limits<T: Scalar>(d: &DataSet<T>) -> SearchLimits {
    SearchLimits { max_depth: Some(d.len() + 1), ..SearchLimits::default() }
}

/// IARP over a finite list of affine maps `x -> αx + (1-α)z`, completed with
/// their inverses. Violations are exact; a pass only covers sequences built
/// from the listed maps within `limits`.
pub fn check_iarp<T: Scalar>(
    d: &DataSet<T>,
    elements: Vec<AffineElement<T>>,
    limits: &SearchLimits,
) -> Result<Verdict<T, AffineElement<T>>> {
    if elements.is_empty() {
        return Err(Error::EmptyElementList);
    }
    let dim = d
        .universe()
        .dimension()
        .ok_or_else(|| Error::InvalidData("IARP needs vector alternatives".into()))?;
    let theory = AffineTheory::new(dim, elements)?.closed_under_inverse();
    let verdict = check_saarp_generic(d, &theory, limits)?;
    Ok(Verdict { axiom: "iarp".into(), ..verdict })
}
