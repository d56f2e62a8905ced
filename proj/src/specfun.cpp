#include "balance/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace balance {

namespace {

constexpr int kMaxSeriesTerms = 500;
constexpr double kSeriesEps = 1e-17;

// Above this argument the scaled series would need more than the term cap;
// the large-argument expansion is accurate to ~1e-12 there.
constexpr double kScaledSeriesLimit = 600.0;

// e^{-x} I_a(x) ~ (2 pi x)^{-1/2} [1 - (mu-1)/(8x) + ...], mu = 4a^2.
double scaled_bessel_asymptotic(int order, double x) {
    const double mu = 4.0 * order * order;
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 5; ++k) {
        const double factor = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= -factor * ix / k;
        sum += term;
    }
    return sum / std::sqrt(2.0 * std::acos(-1.0) * x);
}

// Shared series kernel: leading term supplied by the caller, then
// t_{k+1} = t_k * (x/2)^2 / ((k+1)(k+1+order)).
double bessel_series(int order, double x, double leading_term) {
    const double q = 0.25 * x * x;
    double term = leading_term;
    double sum = term;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (term < kSeriesEps * sum) break;
    }
    return sum;
}

double lower_gamma_series(double a, double x) {
    double denom = a;
    double term = 1.0 / a;
    double sum = term;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (term < sum * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a, x), x >= a + 1.
double upper_gamma_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-14) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("bessel_i: order must be non-negative");
    if (!(x >= 0.0)) throw std::domain_error("bessel_i: argument must be non-negative");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    const double leading =
        order == 0 ? 1.0
                   : std::exp(order * std::log(0.5 * x) - std::lgamma(order + 1.0));
    return bessel_series(order, x, leading);
}

double scaled_bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("scaled_bessel_i: order must be non-negative");
    if (!(x >= 0.0)) throw std::domain_error("scaled_bessel_i: argument must be non-negative");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x > kScaledSeriesLimit) return scaled_bessel_asymptotic(order, x);
    const double leading =
        std::exp(-x + order * std::log(0.5 * x) - std::lgamma(order + 1.0));
    return bessel_series(order, x, leading);
}

double scaled_bessel_i0(double x) { return scaled_bessel_i(0, x); }

double chi_squared_sf(double x, int df) {
    if (df < 1) throw std::domain_error("chi_squared_sf: df must be a positive integer");
    if (!(x >= 0.0)) throw std::domain_error("chi_squared_sf: x must be non-negative");
    const double a = 0.5 * df;
    const double half_x = 0.5 * x;
    if (half_x == 0.0) return 1.0;
    const double q = (half_x < a + 1.0) ? 1.0 - lower_gamma_series(a, half_x)
                                        : upper_gamma_cf(a, half_x);
    if (q < 0.0) return 0.0;
    if (q > 1.0) return 1.0;
    return q;
}

int poisson_sample(Rng& rng, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("poisson_sample: lambda must be positive");
    if (lambda > 30.0)
        throw std::domain_error("poisson_sample: lambda above the inversion range (30)");
    const double floor_product = std::exp(-lambda);
    int count = -1;
    double product = 1.0;
    do {
        product *= rng.next_double();
        ++count;
    } while (product > floor_product);
    return count;
}

GofResult multinomial_gof(std::span<const long long> counts,
                          std::span<const double> probabilities) {
    if (counts.size() != probabilities.size())
        throw std::invalid_argument("multinomial_gof: counts and probabilities differ in length");
    const std::size_t m = counts.size();
    if (m < 2) throw std::invalid_argument("multinomial_gof: need at least two cells");

    double prob_sum = 0.0;
    long long total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (counts[i] < 0)
            throw std::invalid_argument("multinomial_gof: negative count in cell " + std::to_string(i));
        if (probabilities[i] < 0.0)
            throw std::invalid_argument("multinomial_gof: negative probability in cell " + std::to_string(i));
        prob_sum += probabilities[i];
        total += counts[i];
    }
    if (std::abs(prob_sum - 1.0) > 1e-12)
        throw std::invalid_argument("multinomial_gof: probabilities must sum to 1");

    double statistic = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double expected = static_cast<double>(total) * probabilities[i];
        if (expected <= 0.0)
            throw std::invalid_argument("multinomial_gof: zero expected count in cell " + std::to_string(i));
        const double diff = static_cast<double>(counts[i]) - expected;
        statistic += diff * diff / expected;
    }
    const int df = static_cast<int>(m) - 1;
    return {statistic, df, chi_squared_sf(statistic, df)};
}

}  // namespace balance
