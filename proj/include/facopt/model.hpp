#pragma once

#include <optional>

namespace facopt {

// Quality valuation theta > 0 and quality exponent gamma in (0,1].
// The quality response is g(q) = q^gamma: gamma=1 gives a constant marginal
// utility of quality, gamma=1/2 a decreasing one.
struct Preferences {
  double theta = 0.1;
  double gamma = 1.0;
};

// Two facilities on the unit interval: locations 0 <= a <= b <= 1, the
// facility at a holds quality share q, the one at b holds 1-q.
struct FacilityConfig {
  double a = 0.0;
  double b = 1.0;
  double q = 0.5;
};

enum class Facility { A, B };

// Split point dividing the population: individuals in [0, jhat] are served
// at a, those in [jhat, 1] at b.  `raw` is the unclamped solution of
// u(i,a) = u(i,b), present only when the locations differ.  `degenerate`
// marks the one configuration (a==b, q==1/2) where no split point exists;
// jhat is 0 there by convention.
struct IndifferencePoint {
  double jhat = 0.0;
  std::optional<double> raw;
  bool degenerate = false;
};

// Locations closer than this are treated as coincident; the quotient
// defining the split point is ill-conditioned below it.
inline constexpr double kCoincidentTol = 1e-12;

// Throw std::domain_error on invariant violations.
void validate(const Preferences& prefs);
void validate(const FacilityConfig& config);

// g(q) = q^gamma, with exact fast paths for the two cases of interest.
double quality_response(double q, double gamma);

// u(i, x) = theta * qx^gamma - (i - x)^2.
double utility(double i, double x, double qx, const Preferences& prefs);

IndifferencePoint indifferent_point(const FacilityConfig& config,
                                    const Preferences& prefs);

// Facility maximizing individual i's utility; exact ties go to A iff
// i <= jhat, so the welfare integral splits exactly at jhat.
Facility assign(double i, const FacilityConfig& config,
                const Preferences& prefs);

// Reflection i -> 1-i of the whole configuration; welfare-preserving.
FacilityConfig mirrored(const FacilityConfig& config);

}  // namespace facopt
