#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dds::cli {

enum Exit : int { ok = 0, input_error = 2, cap_exceeded = 3, invariant_violation = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dds::cli
