#include <utility>

#include "common.hpp"
#include "lfvo/ratlp.hpp"

namespace lfvo::analysis {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AllProper: return "AllProper";
    case Verdict::Pathological: return "Pathological";
    case Verdict::ProperAtAllPoints: return "ProperAtAllPoints";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

std::optional<RatioTrace> try_trace(const ValidatedProblem& vp, const Point& x, const Vector& v,
                                    unsigned grid_max_exp) {
  try {
    return ratio_probe(vp, x, v, geometric_grid(grid_max_exp));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoDecreasingCriterion) return std::nullopt;
    throw;
  }
}

}  // namespace

ClassificationReport classify(const ValidatedProblem& vp, const std::vector<Point>& points,
                              const ClassifyOptions& options) {
  detail::require_criteria(vp, 2);
  const auto& problem = vp.problem();
  for (const auto& x : points) detail::require_feasible(problem, x);

  const std::uint64_t lp_start = ratlp::solve_count();
  ClassificationReport report;
  report.name = problem.name;
  report.validation = vp.report();
  report.bounded = cone::is_bounded(problem.polyhedron);
  if (!report.bounded) {
    report.growth_certificate = find_growth_certificate(vp);
    report.split_certificate = find_split_certificate(vp);
  }

  bool all_proper = !points.empty();
  bool any_efficient = false;
  for (const auto& x : points) {
    PointRecord record;
    record.point = x;
    record.efficiency = is_efficient(vp, x);
    if (record.efficiency.efficient) {
      any_efficient = true;
      record.properness = necessary_condition_scan(vp, x);
      record.regularity = regularity_conditions(vp, x);
      if (!record.properness->proper) all_proper = false;
      if (report.split_certificate) {
        record.benson = benson_witness(vp, x, *report.split_certificate);
        record.trace = try_trace(vp, x, report.split_certificate->direction.vector(), options.grid_max_exp);
      } else if (record.properness->direction) {
        record.trace = try_trace(vp, x, record.properness->direction->vector(), options.grid_max_exp);
      }
    }
    report.points.push_back(std::move(record));
  }

  if (report.bounded) {
    report.verdict = Verdict::AllProper;
  } else if (report.split_certificate) {
    report.verdict = Verdict::Pathological;
  } else if (any_efficient && all_proper) {
    report.verdict = Verdict::ProperAtAllPoints;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  report.lp_calls = ratlp::solve_count() - lp_start;
  return report;
}

}  // namespace lfvo::analysis
