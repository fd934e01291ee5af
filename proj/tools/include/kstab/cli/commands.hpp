#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kstab::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kCertificateError = 3 };

/// Full command-line entry point: parses `args` (without the program name),
/// writes the document to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kstab::cli
