#include "lfvo/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lfvo/analysis.hpp"
#include "lfvo/error.hpp"
#include "lfvo/fixtures.hpp"
#include "lfvo/problem_file.hpp"
#include "lfvo/report.hpp"

namespace lfvo::cli {

namespace {

using io::Json;

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownExample: return kUsage;
    case ErrorCode::InfeasiblePoint: return kInfeasiblePoint;
    case ErrorCode::DirectionNotInCone: return kDirectionNotInCone;
    default: return kValidation;
  }
}

std::vector<Rational> parse_t_values(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& r : io::parse_point(text)) out.push_back(r);
  return out;
}

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Options {
  std::string path;
  std::string points;
  std::string point;
  std::string direction;
  std::string t_values;
  unsigned grid_max_exp = 40;
  bool json = false;
  bool text = false;
  std::size_t n = 2;
  std::size_t m = 2;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string name;
  std::size_t family_m = 3;
  std::string report_path;
};

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_classify(const Options& o, std::ostream& out) {
  const io::ProblemFile file = io::read_problem_file(o.path);
  const ValidatedProblem vp(file.problem);
  const std::vector<Point> points = o.points.empty() ? file.points : io::parse_point_list(o.points);
  analysis::ClassifyOptions opts;
  opts.grid_max_exp = o.grid_max_exp;
  const auto report = analysis::classify(vp, points, opts);
  if (o.text) {
    out << io::report_to_text(report);
  } else {
    write_json(out, io::report_to_json(report));
  }
  return io::exit_code(report.verdict);
}

int cmd_check_point(const Options& o, std::ostream& out) {
  const io::ProblemFile file = io::read_problem_file(o.path);
  const ValidatedProblem vp(file.problem);
  const Point x = io::parse_point(o.point);
  analysis::PointRecord record;
  record.point = x;
  record.efficiency = analysis::is_efficient(vp, x);
  if (record.efficiency.efficient) {
    record.properness = analysis::necessary_condition_scan(vp, x);
    if (vp.criteria() >= 2) record.regularity = analysis::regularity_conditions(vp, x);
  }
  if (o.text) {
    out << "problem: " << file.problem.name << "\n" << io::point_record_to_text(record);
  } else {
    Json j;
    j["schema_version"] = io::kReportSchemaVersion;
    j["name"] = file.problem.name;
    j["record"] = io::point_record_to_json(record);
    write_json(out, j);
  }
  const bool inconclusive = record.properness && !record.properness->proper;
  return inconclusive ? kInconclusive : kOk;
}

int cmd_probe_ray(const Options& o, std::ostream& out, std::ostream& err) {
  const io::ProblemFile file = io::read_problem_file(o.path);
  const ValidatedProblem vp(file.problem);
  const Point x = io::parse_point(o.point);
  const Vector v = io::parse_point(o.direction);
  const auto grid = o.t_values.empty() ? analysis::geometric_grid(o.grid_max_exp) : parse_t_values(o.t_values);
  const std::size_t m = vp.criteria();
  try {
    const auto trace = analysis::ratio_probe(vp, x, v, grid);
    const std::size_t i = trace.loser;
    out << "t,drop_" << i + 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) out << ",gain_" << j + 1;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) out << ",ratio_" << j + 1 << ",ratio_" << j + 1 << "_float";
    }
    out << "\n";
    for (const auto& s : trace.samples) {
      out << s.t << "," << s.drop;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) out << "," << s.gain[j];
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        if (s.ratio[j]) {
          out << "," << *s.ratio[j] << "," << shortest(s.ratio[j]->to_double());
        } else {
          out << ",,";
        }
      }
      out << "\n";
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoDecreasingCriterion) throw;
    err << "note: NoDecreasingCriterion: no criterion decreases along this ray, only drops are reported\n";
    const auto drops = analysis::ray_drops(vp, x, v, grid);
    out << "t";
    for (std::size_t j = 0; j < m; ++j) out << ",drop_" << j + 1;
    out << "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      out << grid[k];
      for (const auto& d : drops[k]) out << "," << d;
      out << "\n";
    }
  }
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  io::ProblemFile file;
  try {
    file.problem = analysis::generate_pathological(o.n, o.m, o.seed);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  file.comment = "generated instance with a pathology certificate along (1, ..., 1)";
  const std::string text = io::serialize(file);
  if (o.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + o.out_path);
  return kOk;
}

int cmd_examples(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    for (const auto& n : fixtures::names()) out << n << "\n";
    return kOk;
  }
  out << io::serialize(fixtures::make(o.name, o.family_m));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const io::ProblemFile file = io::read_problem_file(o.path);
  std::ifstream in(o.report_path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + o.report_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json report;
  try {
    report = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const auto failures = io::verify_report(file, report);
  for (const auto& f : failures) err << "FAIL " << f << "\n";
  if (failures.empty()) {
    out << "ok: every witness re-verified\n";
    return kOk;
  }
  return kValidation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper efficiency analysis for linear fractional vector problems", "lfvo"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify a problem file");
  classify->add_option("path", o.path, "problem file")->required();
  classify->add_option("--points", o.points, "sample points, e.g. \"[2,0];[3,4]\"");
  classify->add_option("--grid-max-exp", o.grid_max_exp, "ratio traces run to t = 2^k")->capture_default_str();
  auto* json_flag = classify->add_flag("--json", o.json, "JSON report (default)");
  classify->add_flag("--text", o.text, "text report")->excludes(json_flag);

  auto* check = app.add_subcommand("check-point", "Efficiency and properness scan at one point");
  check->add_option("path", o.path, "problem file")->required();
  check->add_option("point", o.point, "point, e.g. \"[1,0]\"")->required();
  auto* check_json = check->add_flag("--json", o.json, "JSON report (default)");
  check->add_flag("--text", o.text, "text report")->excludes(check_json);

  auto* probe = app.add_subcommand("probe-ray", "CSV trace of trade-off ratios along a ray");
  probe->add_option("path", o.path, "problem file")->required();
  probe->add_option("point", o.point, "base point")->required();
  probe->add_option("direction", o.direction, "recession direction")->required();
  probe->add_option("--grid-max-exp", o.grid_max_exp, "grid t = 2^0 .. 2^k")->capture_default_str();
  probe->add_option("--t-values", o.t_values, "explicit t values, e.g. \"1,7,1/2\"");

  auto* generate = app.add_subcommand("generate", "Emit a generated pathological instance");
  generate->add_option("--n", o.n, "dimension (>= 2)")->required();
  generate->add_option("--m", o.m, "criteria (>= 2)")->required();
  generate->add_option("--seed", o.seed, "seed")->required();
  generate->add_option("--out", o.out_path, "output file (default stdout)");

  auto* examples = app.add_subcommand("examples", "List or emit bundled examples");
  examples->add_option("name", o.name, "example name");
  examples->add_option("--m", o.family_m, "criteria for orthant-family (2..8)")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Re-verify every witness in a report");
  verify->add_option("problem", o.path, "problem file")->required();
  verify->add_option("report", o.report_path, "report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*check) return cmd_check_point(o, out);
    if (*probe) return cmd_probe_ray(o, out, err);
    if (*generate) return cmd_generate(o, out);
    if (*examples) return cmd_examples(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace lfvo::cli
