#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfvo/cone.hpp"
#include "lfvo/model.hpp"

/// Certificates about Geoffrion proper efficiency of linear fractional
/// vector problems. Criterion indices are zero-based throughout this API.
namespace lfvo::analysis {

using cone::Direction;

enum class SplitTag {
  StrictPos,  ///< b_j^T v > 0
  ZeroNeg,    ///< b_j^T v = 0 and a_j^T v <= 0
};

enum class CertificateKind {
  /// Every other criterion has b_j^T v > 0 (at most one affine criterion).
  StrictGrowth,
  /// Mixed split of the other criteria into StrictPos and ZeroNeg.
  MixedSplit,
};

struct SplitEntry {
  std::size_t criterion;
  SplitTag tag;
  friend bool operator==(const SplitEntry&, const SplitEntry&) = default;
};

/// A recession direction v along which criterion `index` falls linearly
/// (b_i^T v = 0, a_i^T v < 0) while no other criterion can compensate at a
/// bounded rate. Its existence makes every efficient point improper.
struct PathologyCertificate {
  std::size_t index;
  Direction direction;
  std::vector<SplitEntry> split;  ///< one entry per j != index, ascending j
  CertificateKind kind;
};

/// Exact re-check of a certificate against the raw problem data.
bool verify_certificate(const Problem& problem, const PathologyCertificate& cert);

/// Searches k = 0..m-1 for v in 0+K \ {0} with b_k^T v = 0, a_k^T v < 0 and
/// b_j^T v > 0 for all j != k. Throws Error(TooFewCriteria) when m < 2.
std::optional<PathologyCertificate> find_growth_certificate(const ValidatedProblem& vp);

/// For each i, enumerates the 2^(m-1) StrictPos/ZeroNeg splits of the other
/// criteria (StrictPos first, lower j more significant) and returns the
/// first strictly feasible one. Throws Error(TooFewCriteria) when m < 2.
std::optional<PathologyCertificate> find_split_certificate(const ValidatedProblem& vp);

enum class NecessaryProperty { C, D };

/// Proper: no nonzero recession direction satisfies property (c) for any
/// criterion or property (d) at the point, so the point is properly
/// efficient provided it is efficient. Inconclusive: a witness was found;
/// that is a necessary condition for improperness, not a proof of it.
struct PropernessVerdict {
  bool proper = false;
  /// Systems shown to contain only v = 0 (filled when proper).
  std::vector<cone::HomogeneousSystem> c_systems;
  std::optional<cone::HomogeneousSystem> d_system;
  /// Witness (filled when inconclusive).
  std::optional<NecessaryProperty> property;
  std::optional<std::size_t> criterion;  ///< only for property (c)
  std::optional<Direction> direction;
};

/// Caller must already know the point is efficient.
/// Throws Error(InfeasiblePoint).
PropernessVerdict necessary_condition_scan(const ValidatedProblem& vp, const Point& x);

/// Re-check an inconclusive witness by substitution.
bool verify_necessary_witness(const Problem& problem, const Point& x, const PropernessVerdict& verdict);

struct EfficiencyVerdict {
  bool efficient = false;
  /// Feasible point with f(y) <= f(x) and f_k(y) < f_k(x) for `improved`.
  std::optional<Point> dominator;
  std::optional<std::size_t> improved;
};

/// Exact efficiency test through linearized dominance LPs.
/// Throws Error(InfeasiblePoint).
EfficiencyVerdict is_efficient(const ValidatedProblem& vp, const Point& x);

/// y is feasible, f(y) <= f(x) componentwise and f(y) != f(x).
bool dominates(const Problem& problem, const Point& y, const Point& x);

struct RatioSample {
  Rational t;
  Rational drop;  ///< f_i(x) - f_i(x + t v) for the loser i
  Vector gain;    ///< f_j(x + t v) - f_j(x) for every j
  /// drop / gain_j where gain_j > 0; nullopt elsewhere and at the loser.
  std::vector<std::optional<Rational>> ratio;
};

struct RatioTrace {
  Point base;
  Vector direction;  ///< as given, not normalized
  std::size_t loser;
  std::vector<RatioSample> samples;
  /// Largest realized ratio per criterion over the grid.
  std::vector<std::optional<Rational>> supremum;
};

/// 2^0, 2^1, ..., 2^max_exp.
std::vector<Rational> geometric_grid(unsigned max_exp = 40);

/// Follows x + t v over the grid. The loser is the lowest-index criterion
/// with <grad f_i(x), v> < 0; along a ray that sign holds for every t > 0.
/// Throws Error(InfeasiblePoint), Error(DirectionNotInCone),
/// Error(NoDecreasingCriterion), or std::invalid_argument for a bad grid.
RatioTrace ratio_probe(const ValidatedProblem& vp, const Point& x, const Vector& v,
                       const std::vector<Rational>& grid);

/// f_j(x) - f_j(x + t v) for every j and grid value, for rays with no loser.
std::vector<Vector> ray_drops(const ValidatedProblem& vp, const Point& x, const Vector& v,
                              const std::vector<Rational>& grid);

/// Limit point of t^{-1} (f(x + t v) - f(x)) as t -> infinity. Lies in
/// -R^m_+ \ {0} for every valid certificate.
struct BensonWitness {
  Vector ybar;
};

/// Throws Error(InvalidCertificate) or Error(InfeasiblePoint).
BensonWitness benson_witness(const ValidatedProblem& vp, const Point& x,
                             const PathologyCertificate& cert);

/// Each flag is true when the corresponding system has no nonzero
/// solution in 0+K.
struct RegularityFlags {
  /// no i != j with <grad f_i, v> = 0 and <grad f_j, v> = 0
  bool c1 = true;
  /// no i != j with b_i^T v = 0, <grad f_i, v> <= 0, <grad f_j, v> > 0
  bool c2 = true;
  /// no distinct i, j, k with <grad f_i, v> < 0, <grad f_j, v> = 0, <grad f_k, v> > 0
  bool c3 = true;
};

/// Throws Error(InfeasiblePoint), Error(TooFewCriteria).
RegularityFlags regularity_conditions(const ValidatedProblem& vp, const Point& x);

enum class Verdict {
  AllProper,          ///< bounded K: every efficient point is proper
  Pathological,       ///< certificate found: every efficient point is improper
  ProperAtAllPoints,  ///< every sampled efficient point certified proper
  Inconclusive,       ///< some sampled point undecided, or nothing sampled
};

std::string_view to_string(Verdict v);

struct PointRecord {
  Point point;
  EfficiencyVerdict efficiency;
  /// Remaining fields are filled for efficient points only.
  std::optional<PropernessVerdict> properness;
  std::optional<RegularityFlags> regularity;
  std::optional<RatioTrace> trace;
  std::optional<BensonWitness> benson;
};

struct ClassifyOptions {
  unsigned grid_max_exp = 40;
};

struct ClassificationReport {
  std::string name;
  ValidationReport validation;
  bool bounded = false;
  std::optional<PathologyCertificate> growth_certificate;
  std::optional<PathologyCertificate> split_certificate;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<PointRecord> points;
  std::uint64_t lp_calls = 0;
};

/// Bounded fast path first, then the pathology certificates, then per-point
/// scans. Infeasible sample points raise Error(InfeasiblePoint).
ClassificationReport classify(const ValidatedProblem& vp, const std::vector<Point>& points,
                              const ClassifyOptions& options = {});

/// Deterministic instance on K = R^n_+ with a pathology certificate along
/// v = (1, ..., 1). Criterion 1 is affine with a_1^T v < 0, criterion 2 is
/// fractional with positive b, criterion 3 (when m >= 3) is affine with
/// a_3^T v <= 0, and later criteria pick either kind from the seed.
/// Throws std::invalid_argument unless n >= 2 and m >= 2.
Problem generate_pathological(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace lfvo::analysis
