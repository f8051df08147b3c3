#include "footnet/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "footnet/config.hpp"
#include "footnet/errors.hpp"
#include "footnet/rng.hpp"

namespace footnet {

namespace {

std::string padded_id(char prefix, int value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c%0*d", prefix, std::min(width, 10), value);
    return buf;
}

int id_width(int count) {
    int width = 1;
    for (int v = count; v >= 10; v /= 10) ++width;
    return width;
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot write " + path.string());
    return out;
}

void finish_csv(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(errc::io_error, "failed writing " + path.string());
}

} // namespace

Dataset gen_synthetic(const SyntheticSpec& spec, const std::filesystem::path& out_dir) {
    if (spec.n_players < 1 || spec.n_clubs < 1 || spec.n_leagues < 1 || spec.n_seasons < 1 ||
        spec.transfers_per_season < 1) {
        throw Error(errc::range_error, "synthetic spec counts must all be >= 1");
    }
    if (spec.n_clubs < spec.n_leagues) {
        throw Error(errc::range_error, "synthetic spec needs n_clubs >= n_leagues");
    }
    if (spec.value_scale < 1) {
        throw Error(errc::range_error, "synthetic spec needs a positive value_scale");
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(errc::io_error, "cannot create " + out_dir.string());

    Rng rng(spec.seed);
    const AnalysisConfig defaults;
    const int last_season = defaults.reference_season;
    const int first_season = last_season - spec.n_seasons + 1;

    const int league_width = id_width(spec.n_leagues);
    const int club_width = id_width(spec.n_clubs);
    const int player_width = id_width(spec.n_players);

    // Leagues: rankings slide from the paper's top value (100) down to its
    // floor (5).
    {
        auto path = out_dir / "leagues.csv";
        auto out = open_csv(path);
        out << "league_id,name,ranking\n";
        for (int i = 0; i < spec.n_leagues; ++i) {
            int ranking = 100;
            if (spec.n_leagues > 1)
                ranking = 100 - static_cast<int>(std::lround(95.0 * i / (spec.n_leagues - 1)));
            out << padded_id('L', i + 1, league_width) << ",League " << (i + 1) << ","
                << ranking << "\n";
        }
        finish_csv(out, path);
    }

    // Clubs: assigned to leagues in contiguous blocks, with a league-table
    // position in 1..20 and an average squad value inversely related to it.
    {
        auto path = out_dir / "clubs.csv";
        auto out = open_csv(path);
        out << "club_id,name,league_id,avg_ranking,avg_value\n";
        for (int c = 0; c < spec.n_clubs; ++c) {
            int league = static_cast<int>(
                static_cast<long long>(c) * spec.n_leagues / spec.n_clubs);
            int position = 1 + static_cast<int>(rng.uniform(20));
            double quality = 0.5 + rng.uniform_real();
            auto avg_value = static_cast<std::int64_t>(
                std::llround(static_cast<double>(spec.value_scale) * 50.0 / position * quality));
            if (avg_value < 1) avg_value = 1;
            out << padded_id('C', c + 1, club_width) << ",Club " << (c + 1) << ","
                << padded_id('L', league + 1, league_width) << "," << position << ","
                << avg_value << "\n";
        }
        finish_csv(out, path);
    }

    // Players: a career window of up to 7 seasons somewhere in the span,
    // aged 18 to 35 at their own debut, with a heavy-tailed base value.
    struct Player {
        int start = 0;
        int length = 0;
        int birth_year = 0;
        double base_value = 0.0;
        int club = 0;
    };
    std::vector<Player> players(static_cast<std::size_t>(spec.n_players));
    const int max_window = std::min(7, spec.n_seasons);
    for (auto& p : players) {
        p.length = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(max_window)));
        p.start = first_season +
                  static_cast<int>(rng.uniform(
                      static_cast<std::uint64_t>(spec.n_seasons - p.length + 1)));
        p.birth_year = p.start - 18 - static_cast<int>(rng.uniform(18));
        p.base_value =
            rng.pareto(static_cast<double>(spec.value_scale), 1.5,
                       static_cast<double>(spec.value_scale) * 2000.0);
        p.club = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(spec.n_clubs)));
    }

    {
        auto path = out_dir / "players.csv";
        auto out = open_csv(path);
        out << "player_id,name,birth_year\n";
        for (int i = 0; i < spec.n_players; ++i) {
            out << padded_id('P', i + 1, player_width) << ",Player " << (i + 1) << ","
                << players[static_cast<std::size_t>(i)].birth_year << "\n";
        }
        finish_csv(out, path);
    }

    // Seasons in order: move transfers_per_season squad members first, then
    // record the season's rosters. Every draw happens in a fixed order, so
    // the byte stream is a pure function of the spec.
    auto aff_path = out_dir / "affiliations.csv";
    auto tr_path = out_dir / "transfers.csv";
    auto aff_out = open_csv(aff_path);
    auto tr_out = open_csv(tr_path);
    aff_out << "player_id,club_id,season,market_value\n";
    tr_out << "player_id,from_club_id,to_club_id,season\n";

    std::vector<int> eligible;
    for (int season = first_season; season <= last_season; ++season) {
        if (season > first_season && spec.n_clubs > 1) {
            eligible.clear();
            for (int i = 0; i < spec.n_players; ++i) {
                const auto& p = players[static_cast<std::size_t>(i)];
                if (p.start < season && season < p.start + p.length) eligible.push_back(i);
            }
            const auto moves = std::min<std::size_t>(
                static_cast<std::size_t>(spec.transfers_per_season), eligible.size());
            for (std::size_t k = 0; k < moves; ++k) {
                const std::size_t j = k + rng.uniform(eligible.size() - k);
                std::swap(eligible[k], eligible[j]);
                auto& p = players[static_cast<std::size_t>(eligible[k])];
                int to = static_cast<int>(
                    rng.uniform(static_cast<std::uint64_t>(spec.n_clubs - 1)));
                if (to >= p.club) ++to;
                tr_out << padded_id('P', eligible[k] + 1, player_width) << ","
                       << padded_id('C', p.club + 1, club_width) << ","
                       << padded_id('C', to + 1, club_width) << "," << season << "\n";
                p.club = to;
            }
        }
        for (int i = 0; i < spec.n_players; ++i) {
            const auto& p = players[static_cast<std::size_t>(i)];
            if (season < p.start || season >= p.start + p.length) continue;
            const int age = season - p.birth_year;
            const double age_factor = std::max(0.2, 1.0 - 0.06 * std::abs(age - 26));
            const double jitter = 0.85 + 0.3 * rng.uniform_real();
            const auto value =
                static_cast<std::int64_t>(std::llround(p.base_value * age_factor * jitter));
            aff_out << padded_id('P', i + 1, player_width) << ","
                    << padded_id('C', p.club + 1, club_width) << "," << season << "," << value
                    << "\n";
        }
    }
    finish_csv(aff_out, aff_path);
    finish_csv(tr_out, tr_path);

    return load_dataset(out_dir);
}

} // namespace footnet
