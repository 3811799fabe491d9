#pragma once

// Constants and brackets pinned from pilot runs (seed 1, the acceptance
// grids). Every value here is a default; the command line can override the
// constants.

namespace gpl::calibration {

// Sandwich (B(r) inside the hull).
inline constexpr double kSandwichC = 1.0;
inline constexpr double kSandwichC1 = 0.7;

// Dependency graph. A small truncation constant and fine net are needed
// for the graph to be sparse at desk-scale n.
inline constexpr double kDepgraphC0 = 0.5;
inline constexpr double kDepgraphC1 = 0.25;

// Cell decomposition.
inline constexpr double kCellC = 1.0;
inline constexpr double kCellC1 = 0.8;
inline constexpr double kCellC2 = 20.0;

// Simplex gadget and the event A_i.
inline constexpr double kEventB1 = 4.0;
inline constexpr double kEventB2 = 0.05;
inline constexpr double kEventB3 = 1.0e-12;

// Brackets at the largest grid point, d = 2.
inline constexpr double kExpectF0RatioLo = 0.87;
inline constexpr double kExpectF0RatioHi = 0.94;
inline constexpr double kExpectVolRatioLo = 0.76;
inline constexpr double kExpectVolRatioHi = 0.82;

// Dependency graph brackets over the whole grid, d = 2 and d = 3.
inline constexpr double kNetRatioLo[2] = {9.0, 42.0};
inline constexpr double kNetRatioHi[2] = {15.0, 70.0};
inline constexpr double kDegreeRatioLo[2] = {15.0, 140.0};
inline constexpr double kDegreeRatioHi[2] = {25.0, 300.0};

// Coupling thresholds: multiples of (ln n)^{-C0/2} and n^{-1/2} (ln n)^d.
inline constexpr double kCouplingTruncationFactor = 1.0;
inline constexpr double kCouplingGrowthFactor = 1.0;
inline constexpr double kCouplingEqualFraction = 0.99;

// Verdict tolerances.
inline constexpr double kKsMax = 0.05;
// Standard deviation of sqrt(N) times the one-sample KS statistic under the
// null: sqrt(pi^2/12 - pi ln(2)^2 / 2).
inline constexpr double kKsNullSd = 0.26033;
// Allowed step against a trend, in combined standard errors.
inline constexpr double kTrendSlack = 2.0;
inline constexpr double kSandwichFreq = 0.95;
inline constexpr double kXiWithin3SeFreq = 0.99;
inline constexpr double kConditionBFreq = 0.99;

}  // namespace gpl::calibration
