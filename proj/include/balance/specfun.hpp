#pragma once

#include <span>

#include "balance/rng.hpp"

namespace balance {

// Modified Bessel function of the first kind, integer order, evaluated by
// its power series. Relative accuracy ~1e-14 for x <= 50.
double bessel_i(int order, double x);

// e^{-x} I_order(x), computed term-wise so that e^{x} is never formed.
// Safe for large x where the unscaled function overflows.
double scaled_bessel_i(int order, double x);

// e^{-x} I_0(x): equals 1 at x = 0 and decreases monotonically to 0.
double scaled_bessel_i0(double x);

// Upper tail P(chi^2_df > x) via the regularized incomplete gamma
// (series branch below a+1, continued fraction above).
double chi_squared_sf(double x, int df);

// Exact Poisson draw by inversion (product of uniforms). Valid for
// 0 < lambda <= 30; larger rates are rejected.
int poisson_sample(Rng& rng, double lambda);

struct GofResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

// Pearson goodness-of-fit of observed counts against cell probabilities.
// Probabilities must sum to 1 (within 1e-12) and every expected count must
// be positive.
GofResult multinomial_gof(std::span<const long long> counts,
                          std::span<const double> probabilities);

}  // namespace balance
