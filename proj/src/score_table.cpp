#include "footnet/score_table.hpp"

#include <algorithm>
#include <cstdio>

#include "footnet/errors.hpp"

namespace footnet {

ScoreTable ScoreTable::ranked(std::vector<ScoreEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const ScoreEntry& x, const ScoreEntry& y) {
        if (x.score != y.score) return x.score > y.score;
        return x.node_id < y.node_id;
    });
    ScoreTable table;
    table.entries_ = std::move(entries);
    return table;
}

std::optional<double> ScoreTable::score_of(std::string_view node_id) const {
    for (const auto& e : entries_)
        if (e.node_id == node_id) return e.score;
    return std::nullopt;
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", score);
    return buf;
}

void write_ranking_tsv(std::ostream& out, const ScoreTable& table, const NameResolver& name_of,
                       std::optional<std::size_t> top_n) {
    std::size_t limit = top_n.value_or(table.size());
    std::size_t rank = 0;
    for (const auto& entry : table.entries()) {
        if (rank >= limit) break;
        ++rank;
        auto name = name_of(entry.node_id);
        if (!name) throw Error(errc::unknown_player, entry.node_id);
        out << rank << '\t' << entry.node_id << '\t' << *name << '\t'
            << format_score(entry.score) << '\n';
    }
    if (!out) throw Error(errc::io_error, "writing ranking table");
}

} // namespace footnet
