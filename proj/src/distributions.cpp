#include "balance/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "balance/specfun.hpp"

namespace balance {

double draw_probability(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("draw_probability: lambda must be positive");
    return scaled_bessel_i0(2.0 * lambda);
}

double win_probability(double lambda) { return 0.5 * (1.0 - draw_probability(lambda)); }

DrawCurvePoint draw_curve_point(double lambda) {
    const double d = draw_probability(lambda);
    return {lambda, d, 0.5 * (1.0 - d)};
}

double solve_lambda0() {
    static const double cached = [] {
        // d_lambda is strictly decreasing with d(0.01) > 1/3 > d(10), so the
        // bracket is always valid. Tolerance is taken in d-space.
        double lo = 0.01;
        double hi = 10.0;
        double mid = 0.5 * (lo + hi);
        for (int i = 0; i < 200; ++i) {
            mid = 0.5 * (lo + hi);
            const double d = draw_probability(mid);
            if (std::abs(d - 1.0 / 3.0) < 1e-12) break;
            if (d > 1.0 / 3.0)
                lo = mid;
            else
                hi = mid;
        }
        return mid;
    }();
    return cached;
}

double skellam_pmf(long long k, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("skellam_pmf: lambda must be positive");
    const long long magnitude = k < 0 ? -k : k;
    // Far in the tail the leading series term underflows to exactly 0.
    if (magnitude > 1000000) return 0.0;
    return scaled_bessel_i(static_cast<int>(magnitude), 2.0 * lambda);
}

MatchOutcomeProbs match_outcome_probs(double lambda_home, double lambda_away) {
    if (!(lambda_home > 0.0) || lambda_home > 30.0 || !(lambda_away > 0.0) || lambda_away > 30.0)
        throw std::domain_error("match_outcome_probs: rates must lie in (0, 30]");

    const double lambda_max = lambda_home > lambda_away ? lambda_home : lambda_away;
    const int cap = static_cast<int>(std::ceil(lambda_max + 12.0 * std::sqrt(lambda_max) + 20.0));

    std::vector<double> home_pmf(cap + 1);
    std::vector<double> away_pmf(cap + 1);
    home_pmf[0] = std::exp(-lambda_home);
    away_pmf[0] = std::exp(-lambda_away);
    for (int g = 1; g <= cap; ++g) {
        home_pmf[g] = home_pmf[g - 1] * lambda_home / g;
        away_pmf[g] = away_pmf[g - 1] * lambda_away / g;
    }

    double draw = 0.0;
    double home_win = 0.0;
    double away_win = 0.0;
    double home_cdf = 0.0;  // P(home goals <= g - 1)
    double away_cdf = 0.0;
    for (int g = 0; g <= cap; ++g) {
        draw += home_pmf[g] * away_pmf[g];
        home_win += home_pmf[g] * away_cdf;
        away_win += away_pmf[g] * home_cdf;
        home_cdf += home_pmf[g];
        away_cdf += away_pmf[g];
    }
    return {home_win, draw, away_win};
}

double PairPointsDistribution::prob(int points_a, int points_b) const {
    for (const Cell& cell : cells_)
        if (cell.points_a == points_a && cell.points_b == points_b) return cell.prob;
    return 0.0;
}

double PairPointsDistribution::total() const {
    double sum = 0.0;
    for (const Cell& cell : cells_) sum += cell.prob;
    return sum;
}

PairPointsDistribution pair_points_joint_pmf(double lambda) {
    const double d = draw_probability(lambda);
    const double w = 0.5 * (1.0 - d);
    return PairPointsDistribution({{
        {6, 0, w * w},
        {0, 6, w * w},
        {4, 1, 2.0 * w * d},
        {1, 4, 2.0 * w * d},
        {3, 3, 2.0 * w * w},
        {2, 2, d * d},
    }});
}

}  // namespace balance
