#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lfvo/problem_file.hpp"

/// Bundled example instances with known efficient sets.
namespace lfvo::fixtures {

/// quadrant, three-criteria, strip, three-rays, orthant-family
const std::vector<std::string>& names();

/// `criteria` only applies to orthant-family (2 <= criteria <= 8).
/// Throws Error(UnknownExample).
io::ProblemFile make(std::string_view name, std::size_t criteria = 3);

/// Two objectives on the nonnegative quadrant, f1 = -x2, f2 = x2/(x1+x2+1).
io::ProblemFile quadrant();
/// f1 = -x1-x2, f2 = x2/(x1+x2+1), f3 = x1-x2 on the nonnegative quadrant.
io::ProblemFile three_criteria();
/// K = {x1 >= 2, 0 <= x2 <= 4}, f1 = -x1/(x1+x2-1), f2 = -x1/(x1-x2+3).
io::ProblemFile strip();
/// n = m = 3 cone-like set whose recession directions are (t, t, t).
io::ProblemFile three_rays();
/// n = m, K = {x >= 0, sum x >= 1}, f_i = (-x_i + 1/2)/(sum x - 3/4).
io::ProblemFile orthant_family(std::size_t m);

}  // namespace lfvo::fixtures
