#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nairu::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kConfigError = 2,
    kDomainError = 3,
    kIntegrationAbort = 4,
    kAnalysisError = 5,
};

/// Runs one `nairu` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nairu::cli
