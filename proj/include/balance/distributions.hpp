#pragma once

#include <array>
#include <span>

namespace balance {

struct DrawCurvePoint {
    double lambda = 0.0;
    double draw_prob = 0.0;
    double win_prob = 0.0;  // (1 - draw_prob) / 2, either side
};

// Probability that a match between two independent Poisson(lambda) scorers
// ends level: e^{-2 lambda} I_0(2 lambda).
double draw_probability(double lambda);

// (1 - draw_probability(lambda)) / 2.
double win_probability(double lambda);

DrawCurvePoint draw_curve_point(double lambda);

// The goal rate at which win, draw and loss are each probability 1/3.
// Found once by bisection (draw_probability is strictly decreasing) and
// cached; approximately 0.8803.
double solve_lambda0();

// P(goal difference = k) for two independent Poisson(lambda) scorers:
// e^{-2 lambda} I_|k|(2 lambda), overflow-safe.
double skellam_pmf(long long k, double lambda);

struct MatchOutcomeProbs {
    double home_win = 0.0;
    double draw = 0.0;
    double away_win = 0.0;
};

// Win/draw/loss probabilities for independent Poisson scorers with the
// given rates, by truncated double summation (omitted tail mass < 1e-12).
MatchOutcomeProbs match_outcome_probs(double lambda_home, double lambda_away);

// Joint law of the points two teams take off each other across their two
// fixtures. Support has exactly six cells; with d the draw probability and
// w = (1-d)/2:
//   (6,0) w^2   (0,6) w^2   (4,1) 2wd   (1,4) 2wd   (3,3) 2w^2   (2,2) d^2
class PairPointsDistribution {
  public:
    struct Cell {
        int points_a = 0;
        int points_b = 0;
        double prob = 0.0;
    };

    explicit PairPointsDistribution(const std::array<Cell, 6>& cells) : cells_(cells) {}

    // Probability of the (a, b) cell; 0 off support.
    double prob(int points_a, int points_b) const;

    std::span<const Cell> cells() const { return cells_; }

    double total() const;

  private:
    std::array<Cell, 6> cells_;
};

PairPointsDistribution pair_points_joint_pmf(double lambda);

}  // namespace balance
