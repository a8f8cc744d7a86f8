#pragma once

#include <stdexcept>
#include <string>

namespace gapsort {

/// Invalid parameters or plan/CLI configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (n < 2, y <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Design matrix is numerically rank deficient; `column()` is the first
/// column found to be a linear combination of the ones before it.
class RankDeficientError : public std::runtime_error {
public:
    RankDeficientError(std::size_t column, const std::string& name)
        : std::runtime_error("design matrix is rank deficient: column " + std::to_string(column) +
                             " (" + name + ") is collinear with earlier columns"),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace gapsort
