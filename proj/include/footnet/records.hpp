#pragma once

#include <cstdint>
#include <string>

namespace footnet {

struct PlayerRecord {
    std::string player_id;
    std::string name;
    int birth_year = 0;
};

// market_value is in pounds; 0 encodes "unknown" and contributes nothing to
// edge weights.
struct AffiliationRecord {
    std::string player_id;
    std::string club_id;
    int season = 0;
    std::int64_t market_value = 0;
};

// avg_ranking is the club's league-table position averaged over seasons
// (>= 1 when known, 0 when the field was empty). avg_value is in pounds,
// 0 when unknown.
struct ClubRecord {
    std::string club_id;
    std::string name;
    std::string league_id;
    double avg_ranking = 0.0;
    std::int64_t avg_value = 0;
};

struct LeagueRecord {
    std::string league_id;
    std::string name;
    int ranking = 0;
};

struct TransferRecord {
    std::string player_id;
    std::string from_club_id;
    std::string to_club_id;
    int season = 0;
};

} // namespace footnet
