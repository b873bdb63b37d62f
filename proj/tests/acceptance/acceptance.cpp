// One PASS/FAIL line per acceptance criterion. Thresholds are fixed below.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "lfvo/analysis.hpp"
#include "lfvo/fixtures.hpp"
#include "oracles.hpp"

using namespace lfvo;
using namespace lfvo::analysis;

namespace {

constexpr double kFastSeconds = 1.0;         // criteria 1-3
constexpr double kFamilySeconds = 10.0;      // criterion 5
constexpr double kSweepSeconds = 60.0;       // criterion 10
constexpr double kGradientRelTol = 1e-6;     // criterion 8
constexpr double kFiniteStep = 1e-5;         // criterion 8
constexpr int kGradientProbes = 200;         // criterion 8
constexpr int kIdentityTriples = 1000;       // criterion 7
constexpr unsigned kRatioMaxExp = 40;        // criterion 6
constexpr int kSweepSeeds = 100;             // criterion 10
constexpr int kImplicationInstances = 100;   // criterion 11
constexpr int kRandomViolationProbes = 1000; // criterion 5

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

Vector V(std::initializer_list<Rational> xs) { return Vector(xs); }

ValidatedProblem fixture(const char* name, std::size_t m = 3) { return ValidatedProblem(fixtures::make(name, m).problem); }

int report(int id, const std::string& title, const std::function<void(Outcome&)>& body, double limit = 0) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0) {
    std::ostringstream t;
    t << "runtime " << secs << " s exceeds " << limit << " s";
    o.require(secs < limit, t.str());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << o.detail.str()
            << (o.detail.str().empty() ? "" : ", ") << secs << " s)\n";
  return o.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;

  failures += report(1, "quadrant is pathological with k=1, v=(0,1)", [](Outcome& o) {
    const auto f = fixtures::quadrant();
    const ValidatedProblem vp(f.problem);
    const auto rep = classify(vp, f.points);
    o.require(rep.verdict == Verdict::Pathological, "verdict is not Pathological");
    const auto c = find_growth_certificate(vp);
    o.require(c.has_value(), "no all-growth certificate");
    if (c) {
      o.require(c->index == 0, "k != 1");
      o.require(c->direction.vector() == V({0, 1}), "v != (0,1): " + to_string(c->direction.vector()));
      o.require(verify_certificate(f.problem, *c), "certificate does not re-verify");
    }
  }, kFastSeconds);

  failures += report(2, "three-criteria: split certificate i=1, v=(1,1), Benson limit (-2,0,0)", [](Outcome& o) {
    const auto vp = fixture("three-criteria");
    o.require(!find_growth_certificate(vp).has_value(), "all-growth certificate unexpectedly found");
    const auto c = find_split_certificate(vp);
    o.require(c.has_value(), "no split certificate");
    if (!c) return;
    o.require(c->index == 0, "i != 1");
    o.require(c->direction.vector() == V({1, 1}), "v != (1,1): " + to_string(c->direction.vector()));
    o.require(verify_certificate(vp.problem(), *c), "certificate does not re-verify");
    const auto y = benson_witness(vp, V({0, 0}), *c).ybar;
    o.require(y == V({-2, 0, 0}), "Benson limit " + to_string(y));
    o.require(y[0].sign() < 0, "first component not negative");
    o.detail << "ybar = " << to_string(y);
  }, kFastSeconds);

  failures += report(3, "strip: cone {(v1,0): v1>=0}, scan Proper at (2,0) and (3,4)", [](Outcome& o) {
    const auto vp = fixture("strip");
    const auto rc = cone::recession_cone(vp.polyhedron());
    int probes = 0;
    for (long a = -8; a <= 8; ++a) {
      for (long b = -8; b <= 8; ++b) {
        const Vector v = V({Rational(a, 2), Rational(b, 2)});
        ++probes;
        o.require(rc.satisfied_by(v) == (a >= 0 && b == 0), "membership wrong at " + to_string(v));
      }
    }
    auto nonzero_second = rc;
    nonzero_second.strictpos_rows = {V({0, 1})};
    o.require(!cone::strict_feasible(nonzero_second), "cone has a direction with v2 > 0");
    nonzero_second.strictpos_rows = {V({0, -1})};
    o.require(!cone::strict_feasible(nonzero_second), "cone has a direction with v2 < 0");
    for (const auto& x : {V({2, 0}), V({3, 4})}) {
      o.require(is_efficient(vp, x).efficient, to_string(x) + " not efficient");
      o.require(necessary_condition_scan(vp, x).proper, to_string(x) + " not Proper");
    }
    o.detail << probes << " membership probes";
  }, kFastSeconds);

  failures += report(4, "three-rays n=m=3: <grad f1(1,0,0), (1,1,1)> = 20 = 5/(4 p), scan Proper", [](Outcome& o) {
    const auto vp = fixture("three-rays");
    const Point x = V({1, 0, 0});
    const auto& f1 = vp.objective(0);
    const Rational lhs = dot(gradient(f1, x), V({1, 1, 1}));
    const Rational den = f1.denominator(x);
    const Rational closed = Rational(5) / (Rational(4) * den * den);
    o.require(lhs == Rational(20), "directional derivative " + lhs.str());
    o.require(lhs == closed, "closed form gives " + closed.str());
    o.require(is_efficient(vp, x).efficient, "(1,0,0) not efficient");
    o.require(necessary_condition_scan(vp, x).proper, "scan not Proper");
    o.detail << "derivative " << lhs << ", closed form " << closed;
  });

  failures += report(5, "orthant family m=2..5: no nonzero (c)/(d) solution at e1, all Proper", [](Outcome& o) {
    oracle::Rng rng(5);
    for (std::size_t m = 2; m <= 5; ++m) {
      const auto vp = fixture("orthant-family", m);
      Point e1(m);
      e1[0] = 1;
      o.require(is_efficient(vp, e1).efficient, "e1 not efficient");
      const auto s = necessary_condition_scan(vp, e1);
      o.require(s.proper, "m=" + std::to_string(m) + " not Proper");
      if (!s.proper) continue;
      std::vector<cone::HomogeneousSystem> systems = s.c_systems;
      systems.push_back(*s.d_system);
      o.require(s.c_systems.size() == m, "missing property (c) systems");
      for (const auto& sys : systems) {
        o.require(!cone::nontrivial_member(sys).has_value(), "system has a nonzero member");
        for (int k = 0; k < kRandomViolationProbes; ++k) {
          Vector v = rng.vector(m, -3, 3, 6);
          if (is_zero(v)) continue;
          o.require(!sys.satisfied_by(v), "random vector satisfies a system");
        }
      }
    }
  }, kFamilySeconds);

  failures += report(6, "quadrant ray (0,0)+t(0,1): A12(t) = t+1 on the grid, > 1e12 at 2^40", [](Outcome& o) {
    const auto vp = fixture("quadrant");
    const auto trace = ratio_probe(vp, V({0, 0}), V({0, 1}), geometric_grid(kRatioMaxExp));
    o.require(trace.loser == 0, "loser is not criterion 1");
    for (const auto& s : trace.samples) {
      o.require(s.ratio[1].has_value() && *s.ratio[1] == s.t + Rational(1), "A12 != t+1 at t=" + s.t.str());
    }
    const auto& last = *trace.samples.back().ratio[1];
    o.require(last > Rational(1000000000000LL), "A12(2^40) not above 1e12");
    o.detail << "A12(2^40) = " << last;
  });

  failures += report(7, "fractional identity residual is exactly 0 on random triples", [](Outcome& o) {
    oracle::Rng rng(7);
    int zero = 0;
    for (int k = 0; k < kIdentityTriples; ++k) {
      const auto s = oracle::identity_sample(rng, static_cast<std::size_t>(rng.integer(1, 5)));
      if (fractional_identity_residual(s.obj, s.x, s.y).is_zero()) ++zero;
    }
    o.require(zero == kIdentityTriples, "nonzero residuals found");
    o.detail << zero << "/" << kIdentityTriples << " exact zeros";
  });

  failures += report(8, "gradient vs central finite differences", [](Outcome& o) {
    oracle::Rng rng(8);
    double worst = 0, worst_pure = 0;
    int probes = 0;
    while (probes < kGradientProbes) {
      const auto s = oracle::identity_sample(rng, static_cast<std::size_t>(rng.integer(1, 4)));
      if (s.obj.denominator(s.x) < Rational(1)) continue;  // keep the denominator away from 0
      ++probes;
      const auto g = to_doubles(gradient(s.obj, s.x));
      const auto a = to_doubles(s.obj.a), b = to_doubles(s.obj.b);
      const double alpha = s.obj.alpha.to_double(), beta = s.obj.beta.to_double();
      auto f = [&](const std::vector<double>& x) {
        double num = alpha, den = beta;
        for (std::size_t k = 0; k < x.size(); ++k) {
          num += a[k] * x[k];
          den += b[k] * x[k];
        }
        return num / den;
      };
      const auto x = to_doubles(s.x);
      double err = 0, scale = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        auto xp = x, xm = x;
        xp[k] += kFiniteStep;
        xm[k] -= kFiniteStep;
        const double fd = (f(xp) - f(xm)) / (2 * kFiniteStep);
        err = std::max(err, std::abs(fd - g[k]));
        scale = std::max(scale, std::abs(g[k]));
      }
      // Scale floored at 1 so near-zero gradients are compared absolutely.
      worst = std::max(worst, err / std::max(scale, 1.0));
      if (scale > 0) worst_pure = std::max(worst_pure, err / scale);
    }
    o.require(worst <= kGradientRelTol, "relative error too large");
    o.detail << probes << " probes, worst relative error " << worst << " (unfloored " << worst_pure << ")";
  });

  failures += report(9, "efficiency LP agrees with grid domination on [0,4]^2 step 1/4", [](Outcome& o) {
    for (const char* name : {"quadrant", "three-criteria"}) {
      const auto vp = fixture(name);
      const auto grid = oracle::grid_in_k(vp.problem(), Rational(0), Rational(4), Rational(1, 4));
      int efficient = 0, dominated = 0;
      for (const auto& x : grid) {
        const auto e = is_efficient(vp, x);
        if (e.efficient) {
          ++efficient;
          for (const auto& y : grid) {
            o.require(!oracle::dominates(vp.problem(), y, x), std::string(name) + ": efficient point dominated");
          }
        } else {
          ++dominated;
          o.require(oracle::dominates(vp.problem(), *e.dominator, x), std::string(name) + ": witness fails");
        }
      }
      if (std::string(name) != "quadrant") o.detail << "; ";
      o.detail << name << " " << grid.size() << " points, " << efficient << " efficient, " << dominated
               << " dominated";
    }
  });

  failures += report(10, "soundness sweep over generated instances, seeds 0-99", [](Outcome& o) {
    int certified = 0, scans = 0;
    for (int seed = 0; seed < kSweepSeeds; ++seed) {
      const std::size_t n = 2 + static_cast<std::size_t>(seed % 3);
      const std::size_t m = 2 + static_cast<std::size_t>((seed / 3) % 3);
      const auto p = generate_pathological(n, m, static_cast<std::uint64_t>(seed));
      const auto rep = validate(p);
      o.require(rep.valid, "seed " + std::to_string(seed) + " fails validation");
      if (!rep.valid) continue;
      const ValidatedProblem vp(p);
      const auto c = find_split_certificate(vp);
      o.require(c.has_value(), "seed " + std::to_string(seed) + " has no split certificate");
      if (!c) continue;
      o.require(verify_certificate(p, *c), "seed " + std::to_string(seed) + " certificate fails");
      ++certified;
      std::vector<Point> samples = {Point(n), Point(n, Rational(1)), Point(n, Rational(5, 2))};
      for (std::size_t k = 0; k < n; ++k) {
        Point e(n);
        e[k] = 3;
        samples.push_back(e);
      }
      for (const auto& x : samples) {
        if (!p.polyhedron.contains(x)) continue;
        ++scans;
        o.require(!necessary_condition_scan(vp, x).proper, "seed " + std::to_string(seed) + " scan Proper");
      }
    }
    o.detail << certified << " certificates re-verified, " << scans << " scans";
  }, kSweepSeconds);

  failures += report(11, "m=2: scan Proper implies regularity c1 and c2", [](Outcome& o) {
    oracle::Rng rng(11);
    int instances = 0, points = 0, proper = 0;
    while (instances < kImplicationInstances) {
      const auto p = oracle::random_instance(rng, static_cast<std::size_t>(rng.integer(2, 3)), 2);
      if (!p) continue;
      ++instances;
      const ValidatedProblem vp(*p);
      const auto start = ratlp::feasible(p->dimension(), p->polyhedron.C, p->polyhedron.d);
      const auto x = oracle::efficient_point_from(*p, *start);
      if (!x || !is_efficient(vp, *x).efficient) continue;
      ++points;
      if (!necessary_condition_scan(vp, *x).proper) continue;
      ++proper;
      const auto r = regularity_conditions(vp, *x);
      o.require(r.c1 && r.c2, "Proper point with c1 or c2 false");
    }
    o.require(proper > 0, "no Proper points sampled, implication untested");
    o.detail << instances << " instances, " << points << " efficient samples, " << proper << " Proper";
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
