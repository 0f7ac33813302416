#include "nairu/errors.hpp"

#include <cstdio>
#include <utility>

namespace nairu {

DomainError::DomainError(std::string field, const std::string& message)
    : std::domain_error(message), field_(std::move(field)) {}

namespace {
std::string abort_message(double time, const std::string& message) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "integration aborted at t=%.6g years: ", time);
    return buf + message;
}

std::string located(int line, int column, const std::string& message) {
    if (line <= 0) {
        return message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
           message;
}
}  // namespace

IntegrationAbort::IntegrationAbort(double time, const std::string& message)
    : DomainError("unemployment", abort_message(time, message)), time_(time), detail_(message) {}

ParseError::ParseError(int line, int column, std::string key, const std::string& message)
    : std::runtime_error(located(line, column, message)),
      line_(line),
      column_(column),
      key_(std::move(key)) {}

}  // namespace nairu
