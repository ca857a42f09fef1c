//! Strict bounds on extremal cycles derived from the optimum cycle means
//! and the collected critical-cycle sets. No enumeration happens here.
//!
//! Case dispatch is total: for each bounded quantity exactly one case fires
//! per input. Every emitted bound must bracket the true value, and the sweep
//! suites enforce that with zero tolerance, so the negative-mean cases below
//! only use inequality chains that stay valid there (see the notes inside
//! `max_weight_bounds` and `min_length_bounds`).

use crate::critical::CriticalSetSummary;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SignClass {
    /// `lambda_min > 0`: every cycle weight is positive.
    Positive,
    /// `lambda_max < 0`: every cycle weight is negative.
    Negative,
    /// `lambda_min = 0`: longest-cycle weight is non-negative.
    NonNegative,
    /// `lambda_max = 0`: longest-cycle weight is exactly zero.
    Zero,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundError {
    /// `lambda_min > lambda_max` is not a valid mean interval.
    LambdaOrder,
}

impl core::fmt::Display for BoundError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundError::LambdaOrder => write!(f, "lambda_min exceeds lambda_max"),
        }
    }
}

impl core::error::Error for BoundError {}

/// Two-sided interval over exact rationals; `None` means unbounded on that
/// side. A side is tight when the case analysis pins the value exactly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
    pub lo_tight: bool,
    pub hi_tight: bool,
}

impl Interval {
    fn lower(v: Rational) -> Interval {
        Interval {
            lo: Some(v),
            ..Interval::default()
        }
    }

    fn upper(v: Rational) -> Interval {
        Interval {
            hi: Some(v),
            ..Interval::default()
        }
    }

    fn point(v: Rational) -> Interval {
        Interval {
            lo: Some(v),
            hi: Some(v),
            lo_tight: true,
            hi_tight: true,
        }
    }

    pub fn contains(&self, v: Rational) -> bool {
        self.lo.is_none_or(|lo| lo <= v) && self.hi.is_none_or(|hi| v <= hi)
    }
}

/// Interval over integer lengths. Rational bounds are ceiled (lower) or
/// floored (upper) before they land here, since cycle lengths are integral.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LengthInterval {
    pub lo: Option<i128>,
    pub hi: Option<i128>,
}

impl LengthInterval {
    fn lower(v: i128) -> LengthInterval {
        LengthInterval {
            lo: Some(v),
            hi: None,
        }
    }

    fn upper(v: i128) -> LengthInterval {
        LengthInterval {
            lo: None,
            hi: Some(v),
        }
    }

    pub fn contains(&self, len: u32) -> bool {
        let len = len as i128;
        self.lo.is_none_or(|lo| lo <= len) && self.hi.is_none_or(|hi| len <= hi)
    }
}

/// Weight and length bounds for one extremal cycle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExtremeBounds {
    pub weight: Interval,
    pub length: LengthInterval,
}

/// The unconditional per-arc bounds `|C| * lambda_min <= w(C) <= |C| * lambda_max`,
/// kept in coefficient form so callers can instantiate them with any
/// hypothesized length (branch-and-bound style).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParametricBounds {
    pub per_arc_lo: Rational,
    pub per_arc_hi: Rational,
}

impl ParametricBounds {
    pub fn instantiate(&self, length: u32) -> (Rational, Rational) {
        let l = Rational::from_int(length as i128);
        (l * self.per_arc_lo, l * self.per_arc_hi)
    }
}

/// Lower bounds induced on simple paths by deleting one arc from a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PathBounds {
    /// `|P_l| >= length_lo`.
    pub length_lo: i128,
    /// `w(P_w) >= weight_lo`.
    pub weight_lo: Rational,
    /// Set when the weight bound is negative and therefore says nothing.
    pub vacuous: bool,
}

/// Sign classification of the longest-cycle weight.
pub fn sign_condition(
    lambda_min: Rational,
    lambda_max: Rational,
) -> Result<SignClass, BoundError> {
    if lambda_min > lambda_max {
        return Err(BoundError::LambdaOrder);
    }
    Ok(if lambda_max.is_zero() {
        SignClass::Zero
    } else if lambda_min.is_positive() {
        SignClass::Positive
    } else if lambda_max.is_negative() {
        SignClass::Negative
    } else if lambda_min.is_zero() {
        SignClass::NonNegative
    } else {
        SignClass::Indeterminate
    })
}

/// Bounds on the max-weight cycle `L_w` from the max-critical set.
pub fn max_weight_bounds(
    lambda_min: Rational,
    lambda_max: Rational,
    critical_max: &CriticalSetSummary,
) -> ExtremeBounds {
    if lambda_max.is_positive() {
        // w(L_w) >= w(C) for critical C forces |L_w| >= |C| once divided by
        // the positive lambda_max, and then w(L_w) >= |L_w| * lambda_min.
        let len = critical_max.len_max as i128;
        ExtremeBounds {
            weight: Interval::lower(Rational::from_int(len) * lambda_min),
            length: LengthInterval::lower(len),
        }
    } else if lambda_max.is_negative() {
        // Dividing the key inequality by the negative lambda_max flips it:
        // |L_w| <= min |C|. For the weight, w(L_w) <= |L_w| * lambda_max
        // DEcreases in |L_w| here, so only the length-1 instantiation
        // w(L_w) <= lambda_max is safe; substituting the length upper bound
        // would over-tighten and can be violated.
        ExtremeBounds {
            weight: Interval::upper(lambda_max),
            length: LengthInterval::upper(critical_max.len_min as i128),
        }
    } else {
        // lambda_max = 0: no positive cycle exists and a zero-mean cycle
        // does, so the max weight is exactly zero.
        ExtremeBounds {
            weight: Interval::point(Rational::ZERO),
            length: LengthInterval::default(),
        }
    }
}

/// Bounds on the max-length cycle `L_l` from the min-critical set.
pub fn max_length_bounds(
    lambda_min: Rational,
    lambda_max: Rational,
    critical_min: &CriticalSetSummary,
) -> ExtremeBounds {
    if lambda_min.is_positive() {
        // |L_l| >= |C| times the positive lambda_min gives
        // w(L_l) >= w(C) for every min-critical C, and dividing the best
        // such weight by lambda_max bounds the length from below.
        let w = critical_min.weight_max;
        ExtremeBounds {
            weight: Interval::lower(w),
            length: LengthInterval::lower((w / lambda_max).ceil()),
        }
    } else if lambda_min.is_negative() {
        // The comparison weakens with negative means; only the parametric
        // per-arc bounds remain.
        ExtremeBounds::default()
    } else {
        ExtremeBounds {
            weight: Interval::lower(Rational::ZERO),
            length: LengthInterval::default(),
        }
    }
}

/// Bounds on the min-weight cycle `S_w` from the min-critical set.
pub fn min_weight_bounds(
    lambda_min: Rational,
    lambda_max: Rational,
    critical_min: &CriticalSetSummary,
) -> ExtremeBounds {
    if lambda_min.is_positive() {
        let len = critical_min.len_min as i128;
        ExtremeBounds {
            weight: Interval::upper(Rational::from_int(len) * lambda_max),
            length: LengthInterval::upper(len),
        }
    } else if lambda_min.is_negative() {
        // w(C_min) < 0 turns the key inequality around: |S_w| >= max |C|.
        // The weight chain w(S_w) <= (min |C|) lambda_min <= (min |C|) lambda_max
        // stays valid for any sign of lambda_max.
        let len = Rational::from_int(critical_min.len_min as i128);
        ExtremeBounds {
            weight: Interval::upper(len * lambda_max),
            length: LengthInterval::lower(critical_min.len_max as i128),
        }
    } else {
        // lambda_min = 0: no negative cycle exists and a zero-weight
        // critical cycle does.
        ExtremeBounds {
            weight: Interval::point(Rational::ZERO),
            length: LengthInterval::default(),
        }
    }
}

/// Bounds on the min-length cycle `S_l` from the max-critical set.
pub fn min_length_bounds(
    lambda_min: Rational,
    lambda_max: Rational,
    critical_max: &CriticalSetSummary,
) -> ExtremeBounds {
    // The weight comparison w(S_l) <= w(C) for max-critical C runs through
    // w(S_l) <= |S_l| * lambda_max <= |C| * lambda_max and needs
    // lambda_max >= 0; with lambda_max < 0 a short light cycle beside a
    // longer max-critical one violates it (see the regression test below),
    // so only the length-1 instantiation w(S_l) <= lambda_max survives.
    let weight_hi = if lambda_max.is_negative() {
        lambda_max
    } else {
        critical_max.weight_min
    };

    if lambda_min.is_positive() {
        ExtremeBounds {
            weight: Interval::upper(weight_hi),
            length: LengthInterval::upper((critical_max.weight_min / lambda_min).floor()),
        }
    } else if lambda_min.is_negative() {
        // Dividing w(S_l) <= w(C) by the negative lambda_min flips it into a
        // length lower bound; that also leans on the lambda_max >= 0 chain.
        let length = if lambda_max.is_negative() {
            LengthInterval::default()
        } else {
            LengthInterval::lower((critical_max.weight_min / lambda_min).ceil())
        };
        ExtremeBounds {
            weight: Interval::upper(weight_hi),
            length,
        }
    } else {
        // lambda_min = 0: every cycle weight is non-negative.
        ExtremeBounds {
            weight: Interval {
                lo: Some(Rational::ZERO),
                hi: Some(weight_hi),
                lo_tight: false,
                hi_tight: false,
            },
            length: LengthInterval::default(),
        }
    }
}

/// Path bounds obtained by deleting one arc from a long or heavy cycle.
///
/// `max_length_lower` is any valid lower bound on (or the exact value of)
/// `|L_l|`, and `max_weight_lower` likewise for `w(L_w)`.
pub fn path_bounds(
    max_length_lower: i128,
    max_weight_lower: Rational,
    w_max: Rational,
) -> PathBounds {
    let weight_lo = max_weight_lower - w_max;
    PathBounds {
        length_lo: max_length_lower - 1,
        weight_lo,
        vacuous: weight_lo.is_negative(),
    }
}

/// Bound gap ratio `(lambda_max - lambda_min) / |lambda_max|`; undefined
/// when `lambda_max = 0`.
pub fn gap_ratio(lambda_min: Rational, lambda_max: Rational) -> Option<Rational> {
    if lambda_max.is_zero() {
        None
    } else {
        Some((lambda_max - lambda_min) / lambda_max.abs())
    }
}

/// Everything the bound theorems say about one component.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub lambda_min: Rational,
    pub lambda_max: Rational,
    pub sign: SignClass,
    pub parametric: ParametricBounds,
    pub critical_min: CriticalSetSummary,
    pub critical_max: CriticalSetSummary,
    /// Bounds for `L_w`.
    pub max_weight: ExtremeBounds,
    /// Bounds for `L_l`.
    pub max_length: ExtremeBounds,
    /// Bounds for `S_w`.
    pub min_weight: ExtremeBounds,
    /// Bounds for `S_l`.
    pub min_length: ExtremeBounds,
    /// Computable path bounds; present when `lambda_max > 0`.
    pub path: Option<PathBounds>,
    pub rho: Option<Rational>,
}

/// Evaluates every theorem for one component.
///
/// `w_max` is the maximum arc weight of the component, needed for the path
/// weight bound.
pub fn evaluate_bounds(
    lambda_min: Rational,
    lambda_max: Rational,
    critical_min: CriticalSetSummary,
    critical_max: CriticalSetSummary,
    w_max: Rational,
) -> Result<BoundReport, BoundError> {
    let sign = sign_condition(lambda_min, lambda_max)?;
    let max_weight = max_weight_bounds(lambda_min, lambda_max, &critical_max);
    let max_length = max_length_bounds(lambda_min, lambda_max, &critical_min);
    let min_weight = min_weight_bounds(lambda_min, lambda_max, &critical_min);
    let min_length = min_length_bounds(lambda_min, lambda_max, &critical_max);
    let path = if lambda_max.is_positive() {
        Some(path_bounds(
            critical_max.len_max as i128,
            Rational::from_int(critical_max.len_max as i128) * lambda_min,
            w_max,
        ))
    } else {
        None
    };
    Ok(BoundReport {
        lambda_min,
        lambda_max,
        sign,
        parametric: ParametricBounds {
            per_arc_lo: lambda_min,
            per_arc_hi: lambda_max,
        },
        critical_min,
        critical_max,
        max_weight,
        max_length,
        min_weight,
        min_length,
        path,
        rho: gap_ratio(lambda_min, lambda_max),
    })
}
