#pragma once

#include <ostream>

namespace lfvo::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kValidation = 1,
  kPathological = 2,
  kInconclusive = 3,
  kUsage = 64,
  kInfeasiblePoint = 65,
  kDirectionNotInCone = 66,
};

/// lfvo classify|check-point|probe-ray|generate|examples|verify ...
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfvo::cli
