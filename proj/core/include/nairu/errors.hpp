#pragma once

#include <stdexcept>
#include <string>

namespace nairu {

/// A value lies outside the model's domain (invalid constant, u >= 1, ...).
/// `field()` names the offending quantity, e.g. "a", "n", "unemployment".
class DomainError : public std::domain_error {
public:
    DomainError(std::string field, const std::string& message);

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Numerical integration left the admissible region 0 <= u < 1.
class IntegrationAbort : public DomainError {
public:
    IntegrationAbort(double time, const std::string& message);

    [[nodiscard]] double time() const noexcept { return time_; }
    /// Message without the "integration aborted at t=..." prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    double time_;
    std::string detail_;
};

/// A series is too short, constant, or otherwise unusable for estimation.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration text. Line and column are 1-based; 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string key, const std::string& message);

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }
    [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
    int line_;
    int column_;
    std::string key_;
};

/// Malformed trajectory file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nairu
