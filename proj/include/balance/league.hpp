#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balance/rng.hpp"

namespace balance {

// One played fixture. Teams are indices into SeasonData::teams.
struct MatchRecord {
    int home_team = 0;
    int away_team = 0;
    int home_goals = 0;
    int away_goals = 0;
};

// A complete double round robin: n teams, one match per ordered pair,
// N = n(n-1) matches in total.
struct SeasonData {
    std::vector<std::string> teams;
    std::vector<MatchRecord> matches;

    int team_count() const { return static_cast<int>(teams.size()); }
    int match_count() const { return static_cast<int>(matches.size()); }
};

// Throws std::invalid_argument naming every missing and duplicated ordered
// pair when the fixture list is not a complete double round robin.
void validate_season(const SeasonData& season);

// 3/1/0 points by goal comparison: (home_points, away_points).
std::pair<int, int> score_match(const MatchRecord& match);

struct TeamAggregate {
    int team = 0;
    int points = 0;
    int goals_scored = 0;
    int goals_conceded = 0;
    int goal_difference = 0;
};

// Per-team season sums. Validates the season first.
std::vector<TeamAggregate> aggregate(const SeasonData& season);

enum class TieCriterion { points, goal_difference, goals_scored, head_to_head, random };

const char* to_string(TieCriterion criterion);

// Final table, best team first. decided_by[i] records which criterion
// separates rank i+1 from rank i+2.
struct StandingsTable {
    std::vector<TeamAggregate> rows;
    std::vector<TieCriterion> decided_by;
};

// Ranks teams by points, then goal difference, then goals scored, then
// head-to-head points among the still-tied teams, then a uniformly random
// draw from rng. The random last step keeps fully symmetric seasons
// permutation-uniform.
StandingsTable standings(const SeasonData& season, Rng& rng);

// Each team's share of the total points awarded. Errors on an all-zero
// table, which a complete season cannot produce.
std::vector<double> point_shares(std::span<const TeamAggregate> aggregates);

}  // namespace balance
