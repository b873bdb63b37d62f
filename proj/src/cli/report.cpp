#include "lfvo/report.hpp"

#include <sstream>

#include "lfvo/error.hpp"

namespace lfvo::io {

namespace {

using analysis::NecessaryProperty;
using analysis::SplitTag;

Json index_or_null(const std::optional<std::size_t>& i) {
  return i ? Json(*i + 1) : Json(nullptr);
}

Json trace_summary(const analysis::RatioTrace& trace) {
  Json out;
  out["loser"] = trace.loser + 1;
  out["v"] = vector_to_strings(trace.direction);
  out["samples"] = trace.samples.size();
  const auto& last = trace.samples.back();
  out["t_max"] = last.t.str();
  out["drop_at_t_max"] = last.drop.str();
  Json at_max = Json::object();
  Json sup = Json::object();
  for (std::size_t j = 0; j < last.ratio.size(); ++j) {
    if (last.ratio[j]) at_max[std::to_string(j + 1)] = last.ratio[j]->str();
    if (trace.supremum[j]) sup[std::to_string(j + 1)] = trace.supremum[j]->str();
  }
  out["ratios_at_t_max"] = std::move(at_max);
  out["supremum"] = std::move(sup);
  return out;
}

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

}  // namespace

Json certificate_to_json(const analysis::PathologyCertificate& cert) {
  Json out;
  const char* key = cert.kind == analysis::CertificateKind::StrictGrowth ? "k" : "i";
  out[key] = cert.index + 1;
  out["v"] = vector_to_strings(cert.direction.vector());
  Json split = Json::array();
  for (const auto& e : cert.split) {
    split.push_back({{"j", e.criterion + 1}, {"tag", e.tag == SplitTag::StrictPos ? "StrictPos" : "ZeroNeg"}});
  }
  out["split"] = std::move(split);
  return out;
}

Json point_record_to_json(const analysis::PointRecord& record) {
  Json out;
  out["point"] = vector_to_strings(record.point);
  const auto& eff = record.efficiency;
  out["efficient"] = {{"efficient", eff.efficient},
                      {"witness", eff.dominator ? vector_to_strings(*eff.dominator) : Json(nullptr)},
                      {"improved", index_or_null(eff.improved)}};

  Json verdict;
  if (!record.properness) {
    verdict["status"] = "NotEfficient";
    verdict["property"] = nullptr;
  } else if (record.properness->proper) {
    verdict["status"] = "Proper";
    verdict["property"] = nullptr;
  } else {
    const auto& p = *record.properness;
    verdict["status"] = "Inconclusive";
    verdict["property"] = *p.property == NecessaryProperty::C ? "c" : "d";
    verdict["i"] = index_or_null(p.criterion);
    verdict["v"] = vector_to_strings(p.direction->vector());
    verdict["note"] = "a property (c)/(d) witness is necessary for improper efficiency, not sufficient";
  }
  out["verdict"] = std::move(verdict);

  if (record.regularity) {
    out["regularity"] = {{"c1", record.regularity->c1}, {"c2", record.regularity->c2},
                         {"c3", record.regularity->c3}};
  } else {
    out["regularity"] = nullptr;
  }
  out["ratio_trace"] = record.trace ? trace_summary(*record.trace) : Json(nullptr);
  out["benson"] = record.benson ? vector_to_strings(record.benson->ybar) : Json(nullptr);
  return out;
}

Json report_to_json(const analysis::ClassificationReport& report) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["name"] = report.name;
  out["verdict"] = std::string(analysis::to_string(report.verdict));
  Json minima = Json::array();
  for (const auto& m : report.validation.denominator_minima) minima.push_back(m.str());
  out["validation"] = {{"valid", report.validation.valid},
                       {"denominator_minima", std::move(minima)},
                       {"recession_check", report.validation.recession_check_passed ? "pass" : "fail"}};
  out["bounded"] = report.bounded;
  out["growth_certificate"] = report.growth_certificate ? certificate_to_json(*report.growth_certificate) : Json(nullptr);
  out["split_certificate"] = report.split_certificate ? certificate_to_json(*report.split_certificate) : Json(nullptr);
  Json points = Json::array();
  for (const auto& r : report.points) points.push_back(point_record_to_json(r));
  out["points"] = std::move(points);
  out["lp_call_count"] = report.lp_calls;
  return out;
}

std::string point_record_to_text(const analysis::PointRecord& record) {
  std::ostringstream os;
  os << "point " << to_string(record.point) << ": ";
  if (!record.efficiency.efficient) {
    os << "not efficient, dominated by " << to_string(*record.efficiency.dominator) << "\n";
    return os.str();
  }
  os << "efficient\n";
  const auto& p = *record.properness;
  if (p.proper) {
    os << "  no recession direction satisfies property (c) or property (d): properly efficient\n";
  } else if (*p.property == NecessaryProperty::C) {
    os << "  property (c) holds for i = " << *p.criterion + 1 << " with v = "
       << to_string(p.direction->vector()) << " (necessary condition only: inconclusive)\n";
  } else {
    os << "  property (d) holds with v = " << to_string(p.direction->vector())
       << " (necessary condition only: inconclusive)\n";
  }
  if (record.regularity) {
    os << "  regularity: c1 " << yes_no(record.regularity->c1) << ", c2 " << yes_no(record.regularity->c2)
       << ", c3 " << yes_no(record.regularity->c3) << "\n";
  }
  if (record.trace) {
    const auto& last = record.trace->samples.back();
    for (std::size_t j = 0; j < last.ratio.size(); ++j) {
      if (!last.ratio[j]) continue;
      os << "  ratio A_{" << record.trace->loser + 1 << "," << j + 1 << "} at t = " << last.t
         << ": " << last.ratio[j]->str() << " (~" << last.ratio[j]->to_double() << ")\n";
    }
  }
  if (record.benson) os << "  Benson limit point: " << to_string(record.benson->ybar) << "\n";
  return os.str();
}

std::string report_to_text(const analysis::ClassificationReport& report) {
  std::ostringstream os;
  os << "problem: " << report.name << "\n";
  os << "validation: ok, denominator minima over K:";
  for (const auto& m : report.validation.denominator_minima) os << " " << m;
  os << "\n";
  os << "constraint set: " << (report.bounded ? "bounded" : "unbounded") << "\n";
  switch (report.verdict) {
    case analysis::Verdict::AllProper:
      os << "verdict: bounded constraint set, every efficient solution is properly efficient\n";
      break;
    case analysis::Verdict::Pathological:
      os << "verdict: pathological, every efficient solution is improperly efficient\n";
      break;
    case analysis::Verdict::ProperAtAllPoints:
      os << "verdict: every sampled efficient solution is properly efficient\n";
      break;
    case analysis::Verdict::Inconclusive:
      os << "verdict: inconclusive\n";
      break;
  }
  if (report.growth_certificate) {
    os << "certificate (all other denominators grow): k = " << report.growth_certificate->index + 1
       << ", v = " << to_string(report.growth_certificate->direction.vector()) << "\n";
  }
  if (report.split_certificate) {
    os << "certificate (split): i = " << report.split_certificate->index + 1
       << ", v = " << to_string(report.split_certificate->direction.vector());
    for (const auto& e : report.split_certificate->split) {
      os << ", j = " << e.criterion + 1 << (e.tag == SplitTag::StrictPos ? " StrictPos" : " ZeroNeg");
    }
    os << "\n";
  }
  for (const auto& r : report.points) os << point_record_to_text(r);
  os << "lp calls: " << report.lp_calls << "\n";
  return os.str();
}

int exit_code(analysis::Verdict verdict) {
  switch (verdict) {
    case analysis::Verdict::AllProper:
    case analysis::Verdict::ProperAtAllPoints: return 0;
    case analysis::Verdict::Pathological: return 2;
    case analysis::Verdict::Inconclusive: return 3;
  }
  return 3;
}

// ---------------------------------------------------------------------------
// Independent verification

namespace {

class Checker {
 public:
  explicit Checker(const Problem& p) : p_(p) {}

  void fail(const std::string& what) { failures_.push_back(what); }
  std::vector<std::string> take() { return std::move(failures_); }

  bool in_k(const Vector& x) {
    if (x.size() != p_.dimension()) return false;
    for (std::size_t r = 0; r < p_.polyhedron.rows(); ++r) {
      if (dot(p_.polyhedron.C[r], x) > p_.polyhedron.d[r]) return false;
    }
    return true;
  }

  bool in_cone(const Vector& v) {
    if (v.size() != p_.dimension() || lfvo::is_zero(v)) return false;
    for (const auto& row : p_.polyhedron.C) {
      if (dot(row, v).sign() > 0) return false;
    }
    return true;
  }

  Rational f(std::size_t j, const Vector& x) {
    const auto& o = p_.objectives[j];
    return (dot(o.a, x) + o.alpha) / (dot(o.b, x) + o.beta);
  }

  void certificate(const Json& cert, const char* label) {
    const std::size_t m = p_.criteria();
    const std::size_t i = cert.contains("k") ? cert.at("k").get<std::size_t>() : cert.at("i").get<std::size_t>();
    const Vector v = vector_from_json(cert.at("v"));
    const std::string tag = std::string(label) + ": ";
    if (i < 1 || i > m) return fail(tag + "index out of range");
    if (!in_cone(v)) return fail(tag + "v is not a nonzero recession direction");
    const auto& o = p_.objectives[i - 1];
    if (!dot(o.b, v).is_zero()) fail(tag + "b_i^T v != 0");
    if (dot(o.a, v).sign() >= 0) fail(tag + "a_i^T v is not negative");
    std::size_t seen = 0;
    for (const auto& e : cert.at("split")) {
      const std::size_t j = e.at("j").get<std::size_t>();
      if (j < 1 || j > m || j == i) return fail(tag + "bad split index");
      ++seen;
      const auto& oj = p_.objectives[j - 1];
      if (e.at("tag") == "StrictPos") {
        if (dot(oj.b, v).sign() <= 0) fail(tag + "StrictPos entry has b_j^T v <= 0");
      } else {
        if (cert.contains("k")) fail(tag + "all-growth certificate with a ZeroNeg entry");
        if (!dot(oj.b, v).is_zero() || dot(oj.a, v).sign() > 0) fail(tag + "ZeroNeg entry violated");
      }
    }
    if (seen + 1 != m) fail(tag + "split does not cover every other criterion");
  }

  void record(const Json& rec, const Json& certificate32) {
    const Vector x = vector_from_json(rec.at("point"));
    const std::string tag = "point " + to_string(x) + ": ";
    if (!in_k(x)) return fail(tag + "not feasible");
    const Json& eff = rec.at("efficient");
    if (!eff.at("efficient").get<bool>()) {
      const Vector y = vector_from_json(eff.at("witness"));
      if (!in_k(y)) return fail(tag + "dominating witness infeasible");
      bool strict = false;
      for (std::size_t j = 0; j < p_.criteria(); ++j) {
        const Rational fy = f(j, y);
        const Rational fx = f(j, x);
        if (fy > fx) fail(tag + "witness does not dominate");
        if (fy < fx) strict = true;
      }
      if (!strict) fail(tag + "witness has identical objective values");
      return;
    }
    const Json& verdict = rec.at("verdict");
    if (verdict.at("status") == "Inconclusive") {
      const Vector v = vector_from_json(verdict.at("v"));
      if (!in_cone(v)) fail(tag + "necessary-condition witness not in 0+K \\ {0}");
      if (verdict.at("property") == "c") {
        const auto& o = p_.objectives.at(verdict.at("i").get<std::size_t>() - 1);
        if (!dot(o.b, v).is_zero() || dot(o.a, v).sign() > 0) fail(tag + "property (c) witness violated");
      } else {
        for (const auto& o : p_.objectives) {
          const Rational den = dot(o.b, x) + o.beta;
          const Rational dd = den * dot(o.a, v) - (dot(o.a, x) + o.alpha) * dot(o.b, v);
          if (!dd.is_zero()) fail(tag + "property (d) witness violated");
        }
      }
    }
    if (!rec.at("benson").is_null()) {
      const Vector ybar = vector_from_json(rec.at("benson"));
      if (certificate32.is_null()) return fail(tag + "Benson point without a certificate");
      const Vector v = vector_from_json(certificate32.at("v"));
      bool negative = false;
      for (std::size_t l = 0; l < p_.criteria(); ++l) {
        const auto& o = p_.objectives[l];
        const Rational expected =
            dot(o.b, v).is_zero() ? dot(o.a, v) / (dot(o.b, x) + o.beta) : Rational(0);
        if (ybar.size() != p_.criteria() || ybar[l] != expected) fail(tag + "Benson point mismatch");
        if (ybar.size() == p_.criteria() && ybar[l].sign() > 0) fail(tag + "Benson point not in -R^m_+");
        if (ybar.size() == p_.criteria() && ybar[l].sign() < 0) negative = true;
      }
      if (!negative) fail(tag + "Benson point is zero");
    }
    if (!rec.at("ratio_trace").is_null()) {
      const Json& tr = rec.at("ratio_trace");
      const Vector v = vector_from_json(tr.at("v"));
      const Rational t = Rational::parse(tr.at("t_max").get<std::string>());
      const std::size_t i = tr.at("loser").get<std::size_t>() - 1;
      const Vector xt = add_scaled(x, t, v);
      const Rational drop = f(i, x) - f(i, xt);
      if (drop != Rational::parse(tr.at("drop_at_t_max").get<std::string>())) fail(tag + "trace drop mismatch");
      for (const auto& [key, value] : tr.at("ratios_at_t_max").items()) {
        const std::size_t j = std::stoul(key) - 1;
        const Rational gain = f(j, xt) - f(j, x);
        if (gain.sign() <= 0 || drop / gain != Rational::parse(value.get<std::string>())) {
          fail(tag + "trace ratio mismatch for criterion " + key);
        }
      }
    }
  }

 private:
  const Problem& p_;
  std::vector<std::string> failures_;
};

}  // namespace

std::vector<std::string> verify_report(const ProblemFile& file, const Json& report) {
  Checker check(file.problem);
  try {
    if (!report.contains("schema_version")) check.fail("schema_version missing");
    if (report.contains("growth_certificate") && !report.at("growth_certificate").is_null()) {
      check.certificate(report.at("growth_certificate"), "growth_certificate");
    }
    const Json split_cert = report.contains("split_certificate") ? report.at("split_certificate") : Json(nullptr);
    if (!split_cert.is_null()) check.certificate(split_cert, "split_certificate");
    if (report.contains("points")) {
      for (const auto& rec : report.at("points")) check.record(rec, split_cert);
    }
    if (report.contains("record")) check.record(report.at("record"), Json(nullptr));
  } catch (const std::exception& e) {
    check.fail(std::string("malformed report: ") + e.what());
  }
  return check.take();
}

}  // namespace lfvo::io
