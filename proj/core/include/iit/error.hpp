#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data: malformed rows, negative values, unit conflicts.
/// `row()` is the 1-based physical line number of the offending row, or 0
/// when the error is not tied to a single row.
class DataError : public Error {
public:
    explicit DataError(const std::string& what, std::size_t row = 0)
        : Error(what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A method parameter outside its domain (alpha, threshold, sweep grid).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An index evaluated where it is undefined (zero total trade, empty group).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace iit
