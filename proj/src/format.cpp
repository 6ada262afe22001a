#include "debox/format.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "debox/errors.hpp"

namespace debox {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

double parse_real(const std::string& text, const std::string& where) {
    const char* first = text.data();
    const char* last = first + text.size();
    double value = 0;
    // from_chars rejects a leading '+', which %.17g never emits but humans
    // editing fixtures might; accept it.
    const char* begin = (first != last && *first == '+') ? first + 1 : first;
    auto [ptr, ec] = std::from_chars(begin, last, value);
    if (ec != std::errc() || ptr != last) {
        throw DataError(where + ": not a real number: '" + text + "'");
    }
    return value;
}

std::int64_t parse_int(const std::string& text, const std::string& where) {
    const char* first = text.data();
    const char* last = first + text.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw DataError(where + ": not an integer: '" + text + "'");
    }
    return value;
}

std::uint64_t parse_uint(const std::string& text, const std::string& where) {
    const char* first = text.data();
    const char* last = first + text.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw DataError(where + ": not an unsigned integer: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// The list parsers read flag values, not files, so a bad token is a usage
// problem rather than a data problem.
std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    try {
        for (const auto& tok : split_csv_line(text)) out.push_back(parse_real(tok, what));
    } catch (const DataError& e) {
        throw ArgumentError(e.what());
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    try {
        for (const auto& tok : split_csv_line(text)) {
            out.push_back(static_cast<int>(parse_int(tok, what)));
        }
    } catch (const DataError& e) {
        throw ArgumentError(e.what());
    }
    return out;
}

}  // namespace debox
