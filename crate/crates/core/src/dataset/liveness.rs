use chrono::{Months, NaiveDate};
use serde::{Deserialize, Serialize};

/// Months since the last update within which a product counts as alive.
pub const LIVENESS_WINDOW_MONTHS: u32 = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Liveness {
    Alive,
    Dead,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("last update {last_updated} is after the reference date {reference}")]
pub struct FutureUpdate {
    pub last_updated: NaiveDate,
    pub reference: NaiveDate,
}

/// Alive iff `last_updated` is no more than 18 calendar months before `reference`.
///
/// The boundary is inclusive. Subtracting months clamps to the end of shorter
/// months, so 2024-08-31 minus 18 months is 2023-02-28.
pub fn classify_liveness(
    last_updated: NaiveDate,
    reference: NaiveDate,
) -> Result<Liveness, FutureUpdate> {
    if last_updated > reference {
        return Err(FutureUpdate {
            last_updated,
            reference,
        });
    }
    let cutoff = reference
        .checked_sub_months(Months::new(LIVENESS_WINDOW_MONTHS))
        .unwrap_or(NaiveDate::MIN);
    Ok(if last_updated >= cutoff {
        Liveness::Alive
    } else {
        Liveness::Dead
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(y: i32, m: u32, day: u32) -> NaiveDate {
        NaiveDate::from_ymd_opt(y, m, day).unwrap()
    }

    #[test]
    fn boundary_months() {
        let reference = d(2016, 6, 15);
        assert_eq!(
            classify_liveness(d(2015, 1, 15), reference),
            Ok(Liveness::Alive)
        ); // 17
        assert_eq!(
            classify_liveness(d(2014, 12, 15), reference),
            Ok(Liveness::Alive)
        ); // 18
        assert_eq!(
            classify_liveness(d(2014, 12, 14), reference),
            Ok(Liveness::Dead)
        );
        assert_eq!(
            classify_liveness(d(2014, 11, 15), reference),
            Ok(Liveness::Dead)
        ); // 19
        assert_eq!(classify_liveness(reference, reference), Ok(Liveness::Alive));
    }

    #[test]
    fn clamps_short_months() {
        let reference = d(2024, 8, 31);
        assert_eq!(
            classify_liveness(d(2023, 2, 28), reference),
            Ok(Liveness::Alive)
        );
        assert_eq!(
            classify_liveness(d(2023, 2, 27), reference),
            Ok(Liveness::Dead)
        );
    }

    #[test]
    fn future_is_an_error() {
        assert!(classify_liveness(d(2020, 1, 2), d(2020, 1, 1)).is_err());
    }
}
