#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace footnet {

struct ScoreEntry {
    std::string node_id;
    double score = 0.0;
};

/// Centrality results in ranking order: descending score, ties broken by
/// ascending node id.
class ScoreTable {
public:
    ScoreTable() = default;

    /// Sorts `entries` into ranking order.
    static ScoreTable ranked(std::vector<ScoreEntry> entries);

    const std::vector<ScoreEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::optional<double> score_of(std::string_view node_id) const;

private:
    std::vector<ScoreEntry> entries_;
};

/// Resolves a node id to a display name; must cover every listed node.
using NameResolver = std::function<std::optional<std::string>(const std::string&)>;

/// Writes `rank<TAB>node_id<TAB>name<TAB>score` rows, scores with six
/// decimals, truncated to top_n rows when given. Throws UnknownPlayer if a
/// node has no name and IoError if the stream fails.
void write_ranking_tsv(std::ostream& out, const ScoreTable& table, const NameResolver& name_of,
                       std::optional<std::size_t> top_n = std::nullopt);

/// Formats a score the way the ranking TSV does (six decimals).
std::string format_score(double score);

} // namespace footnet
