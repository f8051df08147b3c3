#pragma once

#include <stdexcept>
#include <string>

namespace footnet {

/// Machine-checkable classification of everything the library can throw.
enum class errc {
    missing_file,
    parse_error,
    referential_error,
    duplicate_key,
    range_error,
    season_in_future,
    degenerate_importance,
    zero_weight_arc,
    not_converged,
    too_large,
    unknown_player,
    empty_graph,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::missing_file: return "MissingFile";
    case errc::parse_error: return "ParseError";
    case errc::referential_error: return "ReferentialError";
    case errc::duplicate_key: return "DuplicateKey";
    case errc::range_error: return "RangeError";
    case errc::season_in_future: return "SeasonInFuture";
    case errc::degenerate_importance: return "DegenerateImportance";
    case errc::zero_weight_arc: return "ZeroWeightArc";
    case errc::not_converged: return "NotConverged";
    case errc::too_large: return "TooLarge";
    case errc::unknown_player: return "UnknownPlayer";
    case errc::empty_graph: return "EmptyGraph";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace footnet
