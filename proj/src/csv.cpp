#include "footnet/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "footnet/errors.hpp"

namespace footnet::csv {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

} // namespace

std::vector<Row> read_file(const std::filesystem::path& path,
                           const std::vector<std::string>& header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::missing_file, path.filename().string());

    const std::string file = path.filename().string();
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (split_fields(line) != header)
                throw Error(errc::parse_error,
                            file + ":1: expected header \"" + join(header) + "\", got \"" + line +
                                "\"");
            continue;
        }
        if (line.empty()) continue; // tolerate a trailing blank line
        Row row;
        row.line = lineno;
        row.fields = split_fields(line);
        if (row.fields.size() != header.size()) {
            std::ostringstream msg;
            msg << file << ":" << lineno << ": expected " << header.size() << " fields, got "
                << row.fields.size();
            throw Error(errc::parse_error, msg.str());
        }
        rows.push_back(std::move(row));
    }
    if (lineno == 0) throw Error(errc::parse_error, file + ": empty file, header required");
    return rows;
}

namespace {

[[noreturn]] void bad_field(const std::string& file, std::size_t line, const std::string& what,
                            const std::string& field) {
    std::ostringstream msg;
    msg << file << ":" << line << ": invalid " << what << " \"" << field << "\"";
    throw Error(errc::parse_error, msg.str());
}

} // namespace

int parse_int(const std::string& field, const std::string& file, std::size_t line,
              const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        bad_field(file, line, what, field);
    return value;
}

std::int64_t parse_int64(const std::string& field, const std::string& file, std::size_t line,
                         const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        bad_field(file, line, what, field);
    return value;
}

double parse_double(const std::string& field, const std::string& file, std::size_t line,
                    const std::string& what) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        bad_field(file, line, what, field);
    return value;
}

} // namespace footnet::csv
