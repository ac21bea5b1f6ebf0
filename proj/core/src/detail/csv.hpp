#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iit::detail {

/// Reads LF or CRLF terminated lines; the trailing CR is stripped.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string_view& line) {
        if (!std::getline(in_, buffer_)) return false;
        ++line_number_;
        if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
        line = buffer_;
        return true;
    }

    std::size_t line_number() const noexcept { return line_number_; }

private:
    std::istream& in_;
    std::string buffer_;
    std::size_t line_number_ = 0;
};

/// Splits one CSV line. Double-quoted fields may contain the delimiter and
/// escaped quotes (""). Returns false with `reason` set on malformed quoting.
inline bool split_csv_line(std::string_view line, char delim, std::vector<std::string>& cells,
                           std::string& reason) {
    cells.clear();
    std::string cell;
    std::size_t i = 0;
    while (true) {
        cell.clear();
        if (i < line.size() && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        cell.push_back('"');
                        i += 2;
                        continue;
                    }
                    closed = true;
                    ++i;
                    break;
                }
                cell.push_back(line[i++]);
            }
            if (!closed) {
                reason = "unterminated quoted field";
                return false;
            }
            if (i < line.size() && line[i] != delim) {
                reason = "unexpected character after closing quote";
                return false;
            }
        } else {
            const auto end = line.find(delim, i);
            const auto stop = end == std::string_view::npos ? line.size() : end;
            cell.assign(line.substr(i, stop - i));
            if (cell.find('"') != std::string::npos) {
                reason = "stray quote in unquoted field";
                return false;
            }
            i = stop;
        }
        cells.push_back(cell);
        if (i >= line.size()) break;
        ++i;  // delimiter
        if (i == line.size()) {
            cells.emplace_back();
            break;
        }
    }
    return true;
}

/// Plain decimal: optional sign, digits with an optional '.' fraction, and
/// an optional exponent. No thousands separators, no inf/nan, no hex.
inline std::optional<double> parse_decimal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    const std::size_t mantissa_start = i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    }
    if (digits == 0) return std::nullopt;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++exp_digits;
        if (exp_digits == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;

    double value = 0.0;
    const char* first = text.data() + mantissa_start;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) return std::nullopt;
    return text.front() == '-' ? -value : value;
}

}  // namespace iit::detail
