#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace footnet::csv {

struct Row {
    std::size_t line = 0; // 1-based line number in the file
    std::vector<std::string> fields;
};

/// Reads a comma-separated file (UTF-8, LF or CRLF). The first line must
/// match `header` exactly; every data row must have the same field count.
/// Throws MissingFile or ParseError.
std::vector<Row> read_file(const std::filesystem::path& path,
                           const std::vector<std::string>& header);

/// Field parsers; `context` is "file:line:field" material for error text.
int parse_int(const std::string& field, const std::string& file, std::size_t line,
              const std::string& what);
std::int64_t parse_int64(const std::string& field, const std::string& file, std::size_t line,
                         const std::string& what);
double parse_double(const std::string& field, const std::string& file, std::size_t line,
                    const std::string& what);

} // namespace footnet::csv
