#pragma once

#include <cstdint>
#include <filesystem>

#include "footnet/dataset.hpp"

namespace footnet {

/// Desk-scale stand-in for the unscraped transfer-market data.
struct SyntheticSpec {
    std::uint64_t seed = 0;
    int n_players = 0;
    int n_clubs = 0;
    int n_leagues = 0;
    int n_seasons = 0;
    int transfers_per_season = 0;
    std::int64_t value_scale = 100'000; // pounds
};

/// Writes the five CSV files for a seeded random dataset into `out_dir`
/// (created if needed) and returns them loaded. Same spec, same bytes.
/// Players follow career windows across club rosters; market values are
/// heavy-tailed around value_scale; each new season moves
/// transfers_per_season squad members between clubs, which is what the
/// transfer table records. Throws RangeError for a spec violating its
/// invariants and IoError when a file cannot be written.
Dataset gen_synthetic(const SyntheticSpec& spec, const std::filesystem::path& out_dir);

} // namespace footnet
