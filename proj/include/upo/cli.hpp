#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upo {

/// Entry point behind the `upo` binary, callable in-process for tests.
/// `args` excludes the program name. Exit codes: 0 success / all requested
/// checks pass, 1 a check or composition failed, 2 unusable input or usage
/// error.
int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace upo
