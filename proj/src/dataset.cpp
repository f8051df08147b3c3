#include "footnet/dataset.hpp"

#include <set>
#include <sstream>

#include "footnet/csv.hpp"
#include "footnet/errors.hpp"

namespace footnet {

const PlayerRecord* Dataset::find_player(const std::string& id) const {
    auto it = player_index.find(id);
    return it == player_index.end() ? nullptr : &players[it->second];
}

const ClubRecord* Dataset::find_club(const std::string& id) const {
    auto it = club_index.find(id);
    return it == club_index.end() ? nullptr : &clubs[it->second];
}

const LeagueRecord* Dataset::find_league(const std::string& id) const {
    auto it = league_index.find(id);
    return it == league_index.end() ? nullptr : &leagues[it->second];
}

namespace {

[[noreturn]] void duplicate_key(const std::string& file, std::size_t line,
                                const std::string& key) {
    std::ostringstream msg;
    msg << file << ":" << line << ": duplicate key \"" << key << "\"";
    throw Error(errc::duplicate_key, msg.str());
}

[[noreturn]] void missing_ref(const std::string& file, std::size_t line,
                              const std::string& key) {
    std::ostringstream msg;
    msg << file << ":" << line << ": unresolved reference \"" << key << "\"";
    throw Error(errc::referential_error, msg.str());
}

[[noreturn]] void bad_value(const std::string& file, std::size_t line,
                            const std::string& reason) {
    std::ostringstream msg;
    msg << file << ":" << line << ": " << reason;
    throw Error(errc::parse_error, msg.str());
}

void require_nonempty_id(const std::string& id, const std::string& file, std::size_t line,
                         const std::string& what) {
    if (id.empty()) bad_value(file, line, what + " must be non-empty");
}

} // namespace

Dataset load_dataset(const std::filesystem::path& data_dir) {
    Dataset ds;

    {
        const std::string file = "leagues.csv";
        auto rows = csv::read_file(data_dir / file, {"league_id", "name", "ranking"});
        ds.leagues.reserve(rows.size());
        for (const auto& row : rows) {
            LeagueRecord rec;
            rec.league_id = row.fields[0];
            rec.name = row.fields[1];
            rec.ranking = csv::parse_int(row.fields[2], file, row.line, "ranking");
            require_nonempty_id(rec.league_id, file, row.line, "league_id");
            if (rec.ranking < 1) bad_value(file, row.line, "ranking must be >= 1");
            if (!ds.league_index.emplace(rec.league_id, ds.leagues.size()).second)
                duplicate_key(file, row.line, rec.league_id);
            ds.leagues.push_back(std::move(rec));
        }
    }

    {
        const std::string file = "clubs.csv";
        auto rows = csv::read_file(data_dir / file,
                                   {"club_id", "name", "league_id", "avg_ranking", "avg_value"});
        ds.clubs.reserve(rows.size());
        for (const auto& row : rows) {
            ClubRecord rec;
            rec.club_id = row.fields[0];
            rec.name = row.fields[1];
            rec.league_id = row.fields[2];
            require_nonempty_id(rec.club_id, file, row.line, "club_id");
            if (!ds.league_index.contains(rec.league_id))
                missing_ref(file, row.line, rec.league_id);
            // an empty avg_ranking field means "unknown"; validation flags it
            // when the ranking weight mode needs it
            if (!row.fields[3].empty()) {
                rec.avg_ranking = csv::parse_double(row.fields[3], file, row.line, "avg_ranking");
                if (rec.avg_ranking < 1.0) bad_value(file, row.line, "avg_ranking must be >= 1");
            }
            rec.avg_value = csv::parse_int64(row.fields[4], file, row.line, "avg_value");
            if (rec.avg_value < 0) bad_value(file, row.line, "avg_value must be >= 0");
            if (!ds.club_index.emplace(rec.club_id, ds.clubs.size()).second)
                duplicate_key(file, row.line, rec.club_id);
            ds.clubs.push_back(std::move(rec));
        }
    }

    {
        const std::string file = "players.csv";
        auto rows = csv::read_file(data_dir / file, {"player_id", "name", "birth_year"});
        ds.players.reserve(rows.size());
        for (const auto& row : rows) {
            PlayerRecord rec;
            rec.player_id = row.fields[0];
            rec.name = row.fields[1];
            rec.birth_year = csv::parse_int(row.fields[2], file, row.line, "birth_year");
            require_nonempty_id(rec.player_id, file, row.line, "player_id");
            if (rec.birth_year < 1900) bad_value(file, row.line, "birth_year must be >= 1900");
            if (!ds.player_index.emplace(rec.player_id, ds.players.size()).second)
                duplicate_key(file, row.line, rec.player_id);
            ds.players.push_back(std::move(rec));
        }
    }

    {
        const std::string file = "affiliations.csv";
        auto rows = csv::read_file(data_dir / file,
                                   {"player_id", "club_id", "season", "market_value"});
        ds.affiliations.reserve(rows.size());
        std::set<std::tuple<std::string, std::string, int>> seen;
        for (const auto& row : rows) {
            AffiliationRecord rec;
            rec.player_id = row.fields[0];
            rec.club_id = row.fields[1];
            rec.season = csv::parse_int(row.fields[2], file, row.line, "season");
            rec.market_value = csv::parse_int64(row.fields[3], file, row.line, "market_value");
            if (!ds.player_index.contains(rec.player_id)) missing_ref(file, row.line, rec.player_id);
            if (!ds.club_index.contains(rec.club_id)) missing_ref(file, row.line, rec.club_id);
            if (rec.market_value < 0) bad_value(file, row.line, "market_value must be >= 0");
            if (!seen.emplace(rec.player_id, rec.club_id, rec.season).second)
                duplicate_key(file, row.line,
                              rec.player_id + "," + rec.club_id + "," + row.fields[2]);
            ds.affiliations.push_back(std::move(rec));
        }
    }

    {
        const std::string file = "transfers.csv";
        auto rows = csv::read_file(data_dir / file,
                                   {"player_id", "from_club_id", "to_club_id", "season"});
        ds.transfers.reserve(rows.size());
        for (const auto& row : rows) {
            TransferRecord rec;
            rec.player_id = row.fields[0];
            rec.from_club_id = row.fields[1];
            rec.to_club_id = row.fields[2];
            rec.season = csv::parse_int(row.fields[3], file, row.line, "season");
            if (!ds.player_index.contains(rec.player_id)) missing_ref(file, row.line, rec.player_id);
            if (!ds.club_index.contains(rec.from_club_id))
                missing_ref(file, row.line, rec.from_club_id);
            if (!ds.club_index.contains(rec.to_club_id))
                missing_ref(file, row.line, rec.to_club_id);
            if (rec.from_club_id == rec.to_club_id) {
                ++ds.dropped_self_transfers;
                continue;
            }
            ds.transfers.push_back(std::move(rec));
        }
    }

    return ds;
}

const char* finding_kind_name(FindingKind kind) {
    switch (kind) {
    case FindingKind::player_without_affiliation: return "player-without-affiliation";
    case FindingKind::affiliation_out_of_range: return "affiliation-out-of-range";
    case FindingKind::degenerate_club_importance: return "degenerate-club-importance";
    case FindingKind::duplicate_transfer: return "duplicate-transfer";
    case FindingKind::birth_year_after_reference: return "birth-year-after-reference";
    }
    return "unknown";
}

ValidationReport validate_dataset(const Dataset& ds, const AnalysisConfig& config) {
    ValidationReport report;
    auto add = [&report](FindingKind kind, std::string subject, std::string detail) {
        report.findings.push_back({kind, std::move(subject), std::move(detail)});
    };

    std::vector<bool> has_affiliation(ds.players.size(), false);
    for (const auto& aff : ds.affiliations) {
        has_affiliation[ds.player_index.at(aff.player_id)] = true;
        if (aff.season < config.first_season || aff.season > config.reference_season) {
            std::ostringstream detail;
            detail << "season " << aff.season << " outside [" << config.first_season << ", "
                   << config.reference_season << "]";
            add(FindingKind::affiliation_out_of_range,
                aff.player_id + "@" + aff.club_id, detail.str());
        }
    }
    for (std::size_t i = 0; i < ds.players.size(); ++i) {
        if (!has_affiliation[i])
            add(FindingKind::player_without_affiliation, ds.players[i].player_id,
                "no affiliation rows");
        if (ds.players[i].birth_year > config.reference_season)
            add(FindingKind::birth_year_after_reference, ds.players[i].player_id,
                "birth_year " + std::to_string(ds.players[i].birth_year) +
                    " after reference season");
    }

    for (const auto& club : ds.clubs) {
        if (config.weight_mode == WeightMode::ranking && club.avg_ranking < 1.0)
            add(FindingKind::degenerate_club_importance, club.club_id,
                "avg_ranking unknown but weight_mode=ranking");
        if (config.weight_mode == WeightMode::value && club.avg_value <= 0)
            add(FindingKind::degenerate_club_importance, club.club_id,
                "avg_value unknown but weight_mode=value");
    }

    // exact duplicate transfer rows would double-count an arc
    std::set<std::tuple<std::string, std::string, std::string, int>> seen;
    for (const auto& tr : ds.transfers) {
        if (!seen.emplace(tr.player_id, tr.from_club_id, tr.to_club_id, tr.season).second)
            add(FindingKind::duplicate_transfer,
                tr.player_id + ":" + tr.from_club_id + "->" + tr.to_club_id,
                "season " + std::to_string(tr.season));
    }

    return report;
}

} // namespace footnet
