//! Heuristic point estimates for the mean of an extremal cycle, with their
//! guaranteed error bounds.
//!
//! The arithmetic mean of the two optimum cycle means is exact; the
//! geometric mean goes through a double-precision square root and is only
//! defined for a positive mean interval. Reports quote both to two decimals,
//! which is far above the sqrt rounding error.

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EstimateReport {
    /// `(lambda_min + lambda_max) / 2`, exact.
    pub lambda_avg: Rational,
    /// `sqrt(lambda_min * lambda_max)`; defined iff `lambda_min > 0`.
    pub lambda_geo: Option<f64>,
    /// Weight dispersion `(lambda_max - lambda_min) / |lambda_max + lambda_min|`;
    /// undefined when the denominator vanishes.
    pub delta: Option<Rational>,
    /// Half interval width: absolute error of `lambda_avg`.
    pub abs_error_bound_avg: Rational,
    /// Relative error of `lambda_avg`, equal to `delta` when defined.
    pub rel_error_bound_avg: Option<Rational>,
    /// Full interval width: absolute error of `lambda_geo` when defined.
    pub abs_error_bound_geo: Option<Rational>,
    /// `(lambda_max - lambda_min) / lambda_geo` when defined.
    pub rel_error_bound_geo: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EstimateError {
    LambdaOrder,
}

impl core::fmt::Display for EstimateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EstimateError::LambdaOrder => write!(f, "lambda_min exceeds lambda_max"),
        }
    }
}

impl core::error::Error for EstimateError {}

/// Builds the full estimator report for one mean interval.
pub fn estimate(
    lambda_min: Rational,
    lambda_max: Rational,
) -> Result<EstimateReport, EstimateError> {
    if lambda_min > lambda_max {
        return Err(EstimateError::LambdaOrder);
    }
    let two = Rational::from_int(2);
    let width = lambda_max - lambda_min;
    let lambda_avg = (lambda_min + lambda_max) / two;

    let sum = lambda_max + lambda_min;
    let delta = if sum.is_zero() {
        None
    } else {
        Some(width / sum.abs())
    };

    let (lambda_geo, abs_geo, rel_geo) = if lambda_min.is_positive() {
        let geo = libm::sqrt(lambda_min.to_f64() * lambda_max.to_f64());
        (Some(geo), Some(width), Some(width.to_f64() / geo))
    } else {
        (None, None, None)
    };

    Ok(EstimateReport {
        lambda_avg,
        lambda_geo,
        delta,
        abs_error_bound_avg: width / two,
        rel_error_bound_avg: delta,
        abs_error_bound_geo: abs_geo,
        rel_error_bound_geo: rel_geo,
    })
}

/// Denominator convention for the relative error of an estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ErrorDenominator {
    /// Divide by the reference mean itself.
    TrueMean,
    /// Divide by the component's maximum cycle mean.
    LambdaMax,
}

/// Relative error of `estimate` against `reference`, as a percentage.
///
/// `None` when the selected denominator is zero. Both conventions are
/// first-class because published tables use both; reports label which one
/// is in effect.
pub fn heuristic_error(
    reference: Rational,
    estimate: f64,
    denominator: ErrorDenominator,
    lambda_max: Rational,
) -> Option<f64> {
    let denom = match denominator {
        ErrorDenominator::TrueMean => reference,
        ErrorDenominator::LambdaMax => lambda_max,
    };
    if denom.is_zero() {
        return None;
    }
    Some(100.0 * libm::fabs(reference.to_f64() - estimate) / libm::fabs(denom.to_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        libm::fabs(a - b) <= tol
    }

    #[test]
    fn worked_interval_887_to_19942_over_3() {
        let e = estimate(Rational::from_int(887), Rational::new(19942, 3)).unwrap();
        assert_eq!(e.lambda_avg, Rational::new(22603, 6));
        assert!(close(e.lambda_avg.to_f64(), 3767.17, 0.01));
        assert!(close(e.lambda_geo.unwrap(), 2428.21, 0.01));
        assert!(e.delta.is_some());
    }

    #[test]
    fn worked_interval_3436_to_6510() {
        let e = estimate(Rational::from_int(3436), Rational::from_int(6510)).unwrap();
        assert_eq!(e.lambda_avg, Rational::from_int(4973));
        assert!(close(e.lambda_geo.unwrap(), 4729.52, 0.01));
        assert_eq!(e.abs_error_bound_avg, Rational::from_int(1537));
        assert_eq!(e.abs_error_bound_geo, Some(Rational::from_int(3074)));
    }

    #[test]
    fn degenerate_interval_collapses_everything() {
        let e = estimate(Rational::from_int(7), Rational::from_int(7)).unwrap();
        assert_eq!(e.lambda_avg, Rational::from_int(7));
        assert_eq!(e.lambda_geo, Some(7.0));
        assert_eq!(e.delta, Some(Rational::ZERO));
        assert_eq!(e.abs_error_bound_avg, Rational::ZERO);
        assert_eq!(e.rel_error_bound_geo, Some(0.0));
    }

    #[test]
    fn geo_undefined_without_positive_lambda_min() {
        let e = estimate(Rational::from_int(0), Rational::from_int(5)).unwrap();
        assert_eq!(e.lambda_geo, None);
        assert_eq!(e.abs_error_bound_geo, None);
        let e = estimate(Rational::from_int(-3), Rational::from_int(5)).unwrap();
        assert_eq!(e.lambda_geo, None);
    }

    #[test]
    fn delta_undefined_when_interval_is_symmetric() {
        let e = estimate(Rational::from_int(-4), Rational::from_int(4)).unwrap();
        assert_eq!(e.delta, None);
        assert_eq!(e.rel_error_bound_avg, None);
        assert_eq!(e.abs_error_bound_avg, Rational::from_int(4));
    }

    #[test]
    fn ordering_violation_is_an_error() {
        assert_eq!(
            estimate(Rational::from_int(2), Rational::from_int(1)).unwrap_err(),
            EstimateError::LambdaOrder
        );
    }

    #[test]
    fn error_percentages_match_worked_rows() {
        let lmax4 = Rational::new(19942, 3);
        let e4 = estimate(Rational::from_int(887), lmax4).unwrap();
        let eps_avg =
            heuristic_error(lmax4, e4.lambda_avg.to_f64(), ErrorDenominator::LambdaMax, lmax4)
                .unwrap();
        let eps_geo =
            heuristic_error(lmax4, e4.lambda_geo.unwrap(), ErrorDenominator::LambdaMax, lmax4)
                .unwrap();
        assert!(close(eps_avg, 43.3, 0.1));
        assert!(close(eps_geo, 63.5, 0.1));

        let lmax3 = Rational::from_int(6510);
        let e3 = estimate(Rational::from_int(3436), lmax3).unwrap();
        let eps_avg =
            heuristic_error(lmax3, e3.lambda_avg.to_f64(), ErrorDenominator::LambdaMax, lmax3)
                .unwrap();
        let eps_geo =
            heuristic_error(lmax3, e3.lambda_geo.unwrap(), ErrorDenominator::LambdaMax, lmax3)
                .unwrap();
        assert!(close(eps_avg, 23.6, 0.1));
        assert!(close(eps_geo, 27.3, 0.1));
    }

    #[test]
    fn exact_estimate_has_zero_error() {
        let reference = Rational::from_int(1500);
        let err = heuristic_error(reference, 1500.0, ErrorDenominator::TrueMean, reference);
        assert_eq!(err, Some(0.0));
    }

    #[test]
    fn zero_denominator_is_undefined() {
        assert_eq!(
            heuristic_error(
                Rational::ZERO,
                1.0,
                ErrorDenominator::TrueMean,
                Rational::from_int(5)
            ),
            None
        );
        assert_eq!(
            heuristic_error(
                Rational::from_int(5),
                1.0,
                ErrorDenominator::LambdaMax,
                Rational::ZERO
            ),
            None
        );
    }
}
