#pragma once

namespace dpp {

/// Airy function Ai and its derivative.
///
/// Evaluation scheme: for x < 6 the Maclaurin series, accumulated in
/// double-double arithmetic so the oscillatory cancellation on the negative
/// axis does not eat the budget; for x >= 6 the standard exponential
/// asymptotic expansion at optimal truncation. Certified to better than
/// 1e-13 absolute on [-15, 8] (pinned against 40-digit reference values in
/// the test suite).
double airy_ai(double x);
double airy_ai_prime(double x);

/// Range on which the evaluation above is certified.
inline constexpr double kAiryCertifiedLo = -15.0;
inline constexpr double kAiryCertifiedHi = 8.0;

}  // namespace dpp
