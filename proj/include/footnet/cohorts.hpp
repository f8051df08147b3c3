#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "footnet/records.hpp"
#include "footnet/score_table.hpp"

namespace footnet {

/// Per-birth-year rankings; each list keeps ScoreTable order (descending
/// score, ties by ascending player id).
using CohortTable = std::map<int, std::vector<ScoreEntry>>;

/// Buckets the scored players by birth year, reusing their global scores
/// untouched. With `years`, only those birth years are kept. Throws
/// UnknownPlayer for a scored node without a player record.
CohortTable cohort_rankings(const ScoreTable& scores, const std::vector<PlayerRecord>& players,
                            const std::optional<std::vector<int>>& years = std::nullopt);

/// TSV rows `birth_year<TAB>rank<TAB>node_id<TAB>name<TAB>score`, cohorts
/// ascending by year, at most top_n rows per cohort when given.
void write_cohorts_tsv(std::ostream& out, const CohortTable& cohorts, const NameResolver& name_of,
                       std::optional<std::size_t> top_n = std::nullopt);

} // namespace footnet
