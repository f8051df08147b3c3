#include "footnet/cohorts.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "footnet/errors.hpp"

namespace footnet {

CohortTable cohort_rankings(const ScoreTable& scores, const std::vector<PlayerRecord>& players,
                            const std::optional<std::vector<int>>& years) {
    std::unordered_map<std::string_view, int> birth_year;
    birth_year.reserve(players.size());
    for (const PlayerRecord& p : players) birth_year.emplace(p.player_id, p.birth_year);

    CohortTable cohorts;
    for (const ScoreEntry& entry : scores.entries()) {
        auto it = birth_year.find(entry.node_id);
        if (it == birth_year.end()) {
            throw Error(errc::unknown_player,
                        "scored node \"" + entry.node_id + "\" has no player record");
        }
        const int year = it->second;
        if (years && std::find(years->begin(), years->end(), year) == years->end()) continue;
        // Score entries arrive in ranking order, so appending keeps each
        // cohort sorted.
        cohorts[year].push_back(entry);
    }
    if (years) {
        for (int year : *years) cohorts.try_emplace(year);
    }
    return cohorts;
}

void write_cohorts_tsv(std::ostream& out, const CohortTable& cohorts, const NameResolver& name_of,
                       std::optional<std::size_t> top_n) {
    for (const auto& [year, entries] : cohorts) {
        std::size_t limit = entries.size();
        if (top_n) limit = std::min(limit, *top_n);
        for (std::size_t i = 0; i < limit; ++i) {
            const ScoreEntry& entry = entries[i];
            auto name = name_of(entry.node_id);
            if (!name) {
                throw Error(errc::unknown_player,
                            "no name for node \"" + entry.node_id + "\"");
            }
            out << year << "\t" << (i + 1) << "\t" << entry.node_id << "\t" << *name << "\t"
                << format_score(entry.score) << "\n";
        }
    }
    if (!out) throw Error(errc::io_error, "failed writing cohort rankings");
}

} // namespace footnet
