#include <utility>

#include "common.hpp"

namespace lfvo::analysis {

namespace {

cone::HomogeneousSystem split_system(const Problem& problem, std::size_t i,
                                     const std::vector<SplitEntry>& split) {
  auto sys = cone::recession_cone(problem.polyhedron);
  const auto& loser = problem.objectives[i];
  sys.zero_rows.push_back(loser.b);
  sys.strictneg_rows.push_back(loser.a);
  for (const auto& entry : split) {
    const auto& obj = problem.objectives[entry.criterion];
    if (entry.tag == SplitTag::StrictPos) {
      sys.strictpos_rows.push_back(obj.b);
    } else {
      // On 0+K every b_j^T v >= 0, so b_j^T v <= 0 already means equality.
      sys.cone_rows.push_back(obj.b);
      sys.cone_rows.push_back(obj.a);
    }
  }
  return sys;
}

// StrictPos on an affine criterion asks for 0 > 0.
bool trivially_empty(const Problem& problem, const std::vector<SplitEntry>& split) {
  for (const auto& entry : split) {
    if (entry.tag == SplitTag::StrictPos && problem.objectives[entry.criterion].is_affine()) {
      return true;
    }
  }
  return false;
}

std::optional<PathologyCertificate> try_split(const Problem& problem, std::size_t i,
                                              std::vector<SplitEntry> split, CertificateKind kind) {
  if (trivially_empty(problem, split)) return std::nullopt;
  auto v = cone::strict_feasible(split_system(problem, i, split));
  if (!v) return std::nullopt;
  return PathologyCertificate{i, std::move(*v), std::move(split), kind};
}

}  // namespace

bool verify_certificate(const Problem& problem, const PathologyCertificate& cert) {
  const std::size_t m = problem.criteria();
  if (cert.index >= m || cert.split.size() + 1 != m) return false;
  const Vector& v = cert.direction.vector();
  if (!detail::in_recession_cone(problem, v)) return false;

  const auto& loser = problem.objectives[cert.index];
  if (!dot(loser.b, v).is_zero() || dot(loser.a, v).sign() >= 0) return false;

  std::size_t expected = 0;
  for (const auto& entry : cert.split) {
    if (expected == cert.index) ++expected;
    if (entry.criterion != expected++) return false;
    const auto& obj = problem.objectives[entry.criterion];
    const Rational bv = dot(obj.b, v);
    if (entry.tag == SplitTag::StrictPos) {
      if (bv.sign() <= 0) return false;
    } else {
      if (cert.kind == CertificateKind::StrictGrowth) return false;
      if (!bv.is_zero() || dot(obj.a, v).sign() > 0) return false;
    }
  }
  return true;
}

std::optional<PathologyCertificate> find_growth_certificate(const ValidatedProblem& vp) {
  detail::require_criteria(vp, 2);
  const auto& problem = vp.problem();
  const std::size_t m = vp.criteria();
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<SplitEntry> split;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != k) split.push_back({j, SplitTag::StrictPos});
    }
    if (auto cert = try_split(problem, k, std::move(split), CertificateKind::StrictGrowth)) {
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<PathologyCertificate> find_split_certificate(const ValidatedProblem& vp) {
  detail::require_criteria(vp, 2);
  const auto& problem = vp.problem();
  const std::size_t m = vp.criteria();
  const std::size_t others = m - 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
      std::vector<SplitEntry> split;
      std::size_t position = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        const bool zero_neg = ((mask >> (others - 1 - position)) & 1U) != 0;
        split.push_back({j, zero_neg ? SplitTag::ZeroNeg : SplitTag::StrictPos});
        ++position;
      }
      if (auto cert = try_split(problem, i, std::move(split), CertificateKind::MixedSplit)) {
        return cert;
      }
    }
  }
  return std::nullopt;
}

BensonWitness benson_witness(const ValidatedProblem& vp, const Point& x,
                             const PathologyCertificate& cert) {
  const auto& problem = vp.problem();
  detail::require_feasible(problem, x);
  if (!verify_certificate(problem, cert)) {
    throw Error(ErrorCode::InvalidCertificate, "certificate does not re-verify against the problem");
  }
  const Vector& v = cert.direction.vector();
  BensonWitness w;
  w.ybar.reserve(vp.criteria());
  for (const auto& obj : problem.objectives) {
    // t^{-1}(f(x + t v) - f(x)) = den(x) <grad f(x), v> / (den(x) + t b^T v),
    // which tends to a^T v / den(x) when b^T v = 0 and to 0 otherwise.
    if (dot(obj.b, v).is_zero()) {
      w.ybar.push_back(dot(obj.a, v) / obj.denominator(x));
    } else {
      w.ybar.emplace_back(0);
    }
  }
  return w;
}

}  // namespace lfvo::analysis
