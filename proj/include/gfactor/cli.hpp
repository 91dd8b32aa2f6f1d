#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfactor::cli {

/// Runs one command; `args` excludes the program name. Returns 0 on success,
/// 1 for usage or parse errors (including zero or scalar input to factor and
/// irreducible), 2 for admissibility and domain errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gfactor::cli
