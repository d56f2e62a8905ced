#include "balance/league.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace balance {

void validate_season(const SeasonData& season) {
    const int n = season.team_count();
    if (n < 2) throw std::invalid_argument("season: need at least two teams");

    std::vector<int> pair_count(static_cast<std::size_t>(n) * n, 0);
    for (const MatchRecord& match : season.matches) {
        if (match.home_team < 0 || match.home_team >= n || match.away_team < 0 ||
            match.away_team >= n)
            throw std::invalid_argument("season: match references an unknown team index");
        if (match.home_team == match.away_team)
            throw std::invalid_argument("season: team '" + season.teams[match.home_team] +
                                        "' paired against itself");
        if (match.home_goals < 0 || match.away_goals < 0)
            throw std::invalid_argument("season: negative goal count");
        ++pair_count[static_cast<std::size_t>(match.home_team) * n + match.away_team];
    }

    std::string missing;
    std::string duplicated;
    for (int home = 0; home < n; ++home) {
        for (int away = 0; away < n; ++away) {
            if (home == away) continue;
            const int count = pair_count[static_cast<std::size_t>(home) * n + away];
            const std::string pair = season.teams[home] + " vs " + season.teams[away];
            if (count == 0) missing += (missing.empty() ? "" : ", ") + pair;
            if (count > 1) duplicated += (duplicated.empty() ? "" : ", ") + pair;
        }
    }
    if (!missing.empty() || !duplicated.empty()) {
        std::string message = "season: not a complete double round robin";
        if (!missing.empty()) message += "; missing: " + missing;
        if (!duplicated.empty()) message += "; duplicated: " + duplicated;
        throw std::invalid_argument(message);
    }
}

std::pair<int, int> score_match(const MatchRecord& match) {
    if (match.home_goals > match.away_goals) return {3, 0};
    if (match.home_goals < match.away_goals) return {0, 3};
    return {1, 1};
}

std::vector<TeamAggregate> aggregate(const SeasonData& season) {
    validate_season(season);
    const int n = season.team_count();
    std::vector<TeamAggregate> aggregates(n);
    for (int i = 0; i < n; ++i) aggregates[i].team = i;
    for (const MatchRecord& match : season.matches) {
        const auto [home_points, away_points] = score_match(match);
        TeamAggregate& home = aggregates[match.home_team];
        TeamAggregate& away = aggregates[match.away_team];
        home.points += home_points;
        away.points += away_points;
        home.goals_scored += match.home_goals;
        home.goals_conceded += match.away_goals;
        away.goals_scored += match.away_goals;
        away.goals_conceded += match.home_goals;
    }
    for (TeamAggregate& entry : aggregates)
        entry.goal_difference = entry.goals_scored - entry.goals_conceded;
    return aggregates;
}

const char* to_string(TieCriterion criterion) {
    switch (criterion) {
        case TieCriterion::points: return "points";
        case TieCriterion::goal_difference: return "GD";
        case TieCriterion::goals_scored: return "GS";
        case TieCriterion::head_to_head: return "head-to-head";
        case TieCriterion::random: return "random";
    }
    return "?";
}

StandingsTable standings(const SeasonData& season, Rng& rng) {
    const std::vector<TeamAggregate> aggregates = aggregate(season);
    const int n = season.team_count();

    // One random key per team, drawn in team order so the table does not
    // depend on the fixture list ordering.
    std::vector<std::uint64_t> priority(n);
    for (auto& key : priority) key = rng.next_u64();

    // Points each team took off each opponent, for the head-to-head step.
    std::vector<int> mutual_points(static_cast<std::size_t>(n) * n, 0);
    for (const MatchRecord& match : season.matches) {
        const auto [home_points, away_points] = score_match(match);
        mutual_points[static_cast<std::size_t>(match.home_team) * n + match.away_team] +=
            home_points;
        mutual_points[static_cast<std::size_t>(match.away_team) * n + match.home_team] +=
            away_points;
    }

    const auto table_key = [&](int team) {
        const TeamAggregate& a = aggregates[team];
        return std::tuple(a.points, a.goal_difference, a.goals_scored);
    };

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (table_key(a) != table_key(b)) return table_key(a) > table_key(b);
        return priority[a] > priority[b];
    });

    // Refine groups still tied on all three table criteria by the points
    // each member earned against the other members (for a two-team group
    // this is exactly the two mutual fixtures).
    std::vector<int> h2h_points(n, 0);
    int group_begin = 0;
    while (group_begin < n) {
        int group_end = group_begin + 1;
        while (group_end < n && table_key(order[group_end]) == table_key(order[group_begin]))
            ++group_end;
        if (group_end - group_begin > 1) {
            for (int i = group_begin; i < group_end; ++i) {
                int sum = 0;
                for (int j = group_begin; j < group_end; ++j) {
                    if (i == j) continue;
                    sum += mutual_points[static_cast<std::size_t>(order[i]) * n + order[j]];
                }
                h2h_points[order[i]] = sum;
            }
            std::sort(order.begin() + group_begin, order.begin() + group_end,
                      [&](int a, int b) {
                          if (h2h_points[a] != h2h_points[b]) return h2h_points[a] > h2h_points[b];
                          return priority[a] > priority[b];
                      });
        }
        group_begin = group_end;
    }

    StandingsTable table;
    table.rows.reserve(n);
    for (int rank = 0; rank < n; ++rank) table.rows.push_back(aggregates[order[rank]]);
    table.decided_by.reserve(n - 1);
    for (int rank = 0; rank + 1 < n; ++rank) {
        const TeamAggregate& upper = table.rows[rank];
        const TeamAggregate& lower = table.rows[rank + 1];
        TieCriterion criterion = TieCriterion::random;
        if (upper.points != lower.points)
            criterion = TieCriterion::points;
        else if (upper.goal_difference != lower.goal_difference)
            criterion = TieCriterion::goal_difference;
        else if (upper.goals_scored != lower.goals_scored)
            criterion = TieCriterion::goals_scored;
        else if (h2h_points[upper.team] != h2h_points[lower.team])
            criterion = TieCriterion::head_to_head;
        table.decided_by.push_back(criterion);
    }
    return table;
}

std::vector<double> point_shares(std::span<const TeamAggregate> aggregates) {
    long long total = 0;
    for (const TeamAggregate& entry : aggregates) total += entry.points;
    if (total <= 0)
        throw std::invalid_argument(
            "point_shares: total points is zero; a complete season always awards points, "
            "so the input is corrupt");
    std::vector<double> shares;
    shares.reserve(aggregates.size());
    for (const TeamAggregate& entry : aggregates)
        shares.push_back(static_cast<double>(entry.points) / static_cast<double>(total));
    return shares;
}

}  // namespace balance
