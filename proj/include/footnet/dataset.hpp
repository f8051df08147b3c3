#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "footnet/config.hpp"
#include "footnet/records.hpp"

namespace footnet {

/// Referentially consistent snapshot of the five record files. Immutable
/// after loading; safe to share across analysis threads.
struct Dataset {
    std::vector<PlayerRecord> players;
    std::vector<ClubRecord> clubs;
    std::vector<LeagueRecord> leagues;
    std::vector<AffiliationRecord> affiliations;
    std::vector<TransferRecord> transfers;

    // Self-transfer rows are data noise and are dropped, not errored;
    // dropped + transfers.size() equals the input row count.
    std::size_t dropped_self_transfers = 0;

    std::unordered_map<std::string, std::size_t> player_index;
    std::unordered_map<std::string, std::size_t> club_index;
    std::unordered_map<std::string, std::size_t> league_index;

    const PlayerRecord* find_player(const std::string& id) const;
    const ClubRecord* find_club(const std::string& id) const;
    const LeagueRecord* find_league(const std::string& id) const;
};

/// Parses players.csv, clubs.csv, leagues.csv, affiliations.csv and
/// transfers.csv from `data_dir`. Throws MissingFile, ParseError,
/// ReferentialError or DuplicateKey.
Dataset load_dataset(const std::filesystem::path& data_dir);

enum class FindingKind {
    player_without_affiliation,
    affiliation_out_of_range,
    degenerate_club_importance,
    duplicate_transfer,
    birth_year_after_reference,
};

const char* finding_kind_name(FindingKind kind);

struct ValidationFinding {
    FindingKind kind;
    std::string subject; // the offending id or key
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;
    bool empty() const { return findings.empty(); }
};

/// Report-only consistency check; never mutates the dataset. An empty
/// report means the dataset is ready for the selected analysis mode.
ValidationReport validate_dataset(const Dataset& dataset, const AnalysisConfig& config);

} // namespace footnet
