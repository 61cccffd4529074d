#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpcyc::cli {

/// Runs one command; `args` excludes the program name. Returns 0 on success,
/// 1 when a verification fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpcyc::cli
