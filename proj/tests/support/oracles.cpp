#include "oracles.hpp"

#include <functional>

namespace oracle {

using lfvo::dot;

std::optional<Vector> solve_full_rank(const Matrix& M, const Vector& r) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  Matrix T = M;
  for (std::size_t i = 0; i < rows; ++i) T[i].push_back(r[i]);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && T[sel][c].is_zero()) ++sel;
    if (sel == rows) return std::nullopt;  // rank deficient
    std::swap(T[sel], T[pivot_row]);
    const Rational inv = Rational(1) / T[pivot_row][c];
    for (auto& e : T[pivot_row]) e *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || T[i][c].is_zero()) continue;
      const Rational f = T[i][c];
      for (std::size_t k = 0; k <= cols; ++k) T[i][k] -= f * T[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t i = pivot_row; i < rows; ++i) {
    if (!T[i][cols].is_zero()) return std::nullopt;
  }
  Vector y(cols);
  for (std::size_t c = 0; c < cols; ++c) y[c] = T[c][cols];
  return y;
}

namespace {

void for_each_subset(std::size_t p, std::size_t max_size, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) f(cur);
    if (cur.size() == max_size) return;
    for (std::size_t k = start; k < p; ++k) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

BruteResult brute_force_lp(const Vector& c, const Matrix& A, const Vector& b) {
  const std::size_t n = c.size();
  const std::size_t p = A.size();
  BruteResult out{lfvo::ratlp::Status::Unbounded, {}, {}, {}};

  // Farkas: y >= 0, A^T y = 0, b^T y = -1, basic in the augmented rows.
  for_each_subset(p, n + 1, [&](const std::vector<std::size_t>& S) {
    if (out.farkas) return;
    Matrix M(n + 1, Vector(S.size()));
    for (std::size_t k = 0; k < S.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) M[j][k] = A[S[k]][j];
      M[n][k] = b[S[k]];
    }
    Vector rhs(n + 1);
    rhs[n] = -1;
    auto y = solve_full_rank(M, rhs);
    if (!y) return;
    for (const auto& e : *y) {
      if (e.sign() < 0) return;
    }
    Vector full(p);
    for (std::size_t k = 0; k < S.size(); ++k) full[S[k]] = (*y)[k];
    out.farkas = full;
  });
  if (out.farkas) {
    out.status = lfvo::ratlp::Status::Infeasible;
    return out;
  }

  // Dual: y >= 0, A^T y = -c; value -b^T y. c = 0 is dual feasible with y = 0.
  auto consider = [&](const Vector& full) {
    const Rational value = -dot(b, full);
    if (!out.value || value > *out.value) {
      out.value = value;
      out.dual = full;
    }
  };
  if (lfvo::is_zero(c)) consider(Vector(p));
  for_each_subset(p, n, [&](const std::vector<std::size_t>& S) {
    Matrix M(n, Vector(S.size()));
    for (std::size_t k = 0; k < S.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) M[j][k] = A[S[k]][j];
    }
    Vector rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = -c[j];
    auto y = solve_full_rank(M, rhs);
    if (!y) return;
    for (const auto& e : *y) {
      if (e.sign() < 0) return;
    }
    Vector full(p);
    for (std::size_t k = 0; k < S.size(); ++k) full[S[k]] = (*y)[k];
    consider(full);
  });
  out.status = out.value ? lfvo::ratlp::Status::Optimal : lfvo::ratlp::Status::Unbounded;
  return out;
}

IdentitySample identity_sample(Rng& rng, std::size_t n) {
  for (;;) {
    IdentitySample s{{rng.vector(n, -5, 5), rng.rational(-5, 5), rng.vector(n, -3, 3), rng.rational(-5, 5)},
                     rng.vector(n, -4, 4),
                     rng.vector(n, -4, 4)};
    if (s.obj.denominator(s.x).sign() > 0 && s.obj.denominator(s.y).sign() > 0) return s;
  }
}

bool dominates(const lfvo::Problem& p, const Point& y, const Point& x) {
  if (!p.polyhedron.contains(y)) return false;
  bool strict = false;
  for (const auto& o : p.objectives) {
    const Rational fy = (dot(o.a, y) + o.alpha) / (dot(o.b, y) + o.beta);
    const Rational fx = (dot(o.a, x) + o.alpha) / (dot(o.b, x) + o.beta);
    if (fy > fx) return false;
    if (fy < fx) strict = true;
  }
  return strict;
}

std::vector<Point> grid_in_k(const lfvo::Problem& p, const Rational& lo, const Rational& hi,
                             const Rational& step) {
  const std::size_t n = p.dimension();
  std::vector<Point> out;
  Point cur(n, lo);
  for (;;) {
    if (p.polyhedron.contains(cur)) out.push_back(cur);
    std::size_t k = 0;
    while (k < n) {
      cur[k] += step;
      if (cur[k] <= hi) break;
      cur[k] = lo;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

std::optional<Point> efficient_point_from(const lfvo::Problem& p, const Point& start) {
  const std::size_t n = p.dimension();
  const std::size_t m = p.criteria();
  const auto& C = p.polyhedron.C;
  const auto& d = p.polyhedron.d;
  Point x = start;
  for (std::size_t i = 0; i < m; ++i) {
    // Variables (z, s): y = z / s, s > 0 on K since denominators are positive.
    lfvo::ratlp::LinearProgram lp;
    const auto& oi = p.objectives[i];
    lp.objective = oi.a;
    lp.objective.push_back(oi.alpha);
    for (std::size_t r = 0; r < C.size(); ++r) {
      Vector row = C[r];
      row.push_back(-d[r]);
      lp.A.push_back(row);
      lp.b.push_back(0);
    }
    for (const auto& o : p.objectives) {
      const Rational level = lfvo::evaluate(o, x);
      Vector row;
      for (std::size_t k = 0; k < n; ++k) row.push_back(o.a[k] - level * o.b[k]);
      row.push_back(o.alpha - level * o.beta);
      lp.A.push_back(row);
      lp.b.push_back(0);
    }
    Vector s_row(n + 1);
    s_row[n] = -1;
    lp.A.push_back(s_row);
    lp.b.push_back(0);
    Vector norm = oi.b;
    norm.push_back(oi.beta);
    lp.E.push_back(norm);
    lp.g.push_back(1);
    const auto res = lfvo::ratlp::solve(lp);
    if (!res.optimal() || res.point[n].sign() <= 0) return std::nullopt;
    Point next(n);
    for (std::size_t k = 0; k < n; ++k) next[k] = res.point[k] / res.point[n];
    x = next;
  }
  return x;
}

std::optional<lfvo::Problem> random_instance(Rng& rng, std::size_t n, std::size_t m) {
  lfvo::Problem p;
  p.name = "random";
  p.polyhedron.C = lfvo::identity(n, -1);
  p.polyhedron.d = Vector(n);
  const long cuts = rng.integer(0, 2);
  for (long c = 0; c < cuts; ++c) {
    Vector row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(rng.integer(-2, 3));
    p.polyhedron.C.push_back(row);
    p.polyhedron.d.push_back(rng.integer(1, 6));
  }
  for (std::size_t i = 0; i < m; ++i) {
    lfvo::LFObjective o;
    o.a = rng.vector(n, -3, 3, 2);
    o.alpha = rng.integer(-3, 3);
    if (rng.integer(0, 2) == 0) {
      o.b = Vector(n);
    } else {
      for (std::size_t k = 0; k < n; ++k) o.b.push_back(rng.integer(0, 2));
    }
    o.beta = rng.integer(1, 4);
    p.objectives.push_back(o);
  }
  if (!lfvo::validate(p).valid) return std::nullopt;
  return p;
}

}  // namespace oracle
