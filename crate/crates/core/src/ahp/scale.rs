use super::AhpError;
use crate::dataset::Grade;

/// Largest judgment on the Saaty scale (extreme dominance).
pub const SAATY_MAX: u8 = 9;

/// Maps a pair of grades to a pairwise judgment.
pub trait GradeScale {
    /// Judgment of `higher` over `lower` where `higher >= lower`; must lie in 1..=9
    /// and be 1 for equal grades.
    fn intensity(&self, higher: Grade, lower: Grade) -> u8;
}

/// `min(difference + 1, 9)`: equal grades give 1, a difference of 8 or more gives 9.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DifferenceScale;

impl GradeScale for DifferenceScale {
    fn intensity(&self, higher: Grade, lower: Grade) -> u8 {
        debug_assert!(higher >= lower);
        (higher.get() - lower.get() + 1).min(SAATY_MAX)
    }
}

/// Judgment of option j over option k, oriented: `(intensity, j_dominates)`.
pub(crate) fn oriented(scale: &dyn GradeScale, gj: Grade, gk: Grade) -> (f64, bool) {
    if gj >= gk {
        (f64::from(scale.intensity(gj, gk)), true)
    } else {
        (f64::from(scale.intensity(gk, gj)), false)
    }
}

/// Saaty-scale value of grade `gj` compared with grade `gk`, in [1/9, 9].
pub fn grade_pair_to_saaty(gj: i64, gk: i64) -> Result<f64, AhpError> {
    let gj = Grade::new(gj).ok_or(AhpError::GradeOutOfRange(gj))?;
    let gk = Grade::new(gk).ok_or(AhpError::GradeOutOfRange(gk))?;
    let (v, forward) = oriented(&DifferenceScale, gj, gk);
    Ok(if forward { v } else { 1.0 / v })
}
