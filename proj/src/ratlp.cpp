#include "lfvo/ratlp.hpp"

#include <string>

#include "lfvo/error.hpp"

namespace lfvo::ratlp {

namespace {

thread_local std::uint64_t g_solve_count = 0;

void check_shapes(const LinearProgram& lp) {
  const std::size_t n = lp.dimension();
  if (lp.A.size() != lp.b.size() || !has_columns(lp.A, n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "inequality block must be " + std::to_string(lp.b.size()) + " x " +
                    std::to_string(n));
  }
  if (lp.E.size() != lp.g.size() || !has_columns(lp.E, n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "equality block must be " + std::to_string(lp.g.size()) + " x " +
                    std::to_string(n));
  }
}

// Standard-form tableau. Columns: x+ (n), x- (n), one slack per row, then
// artificials. The last entry of every row is the right-hand side.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : n_(lp.dimension()) {
    Matrix rows = lp.A;
    Vector rhs = lp.b;
    for (std::size_t k = 0; k < lp.E.size(); ++k) {
      rows.push_back(lp.E[k]);
      rhs.push_back(lp.g[k]);
      rows.push_back(scaled(lp.E[k], -1));
      rhs.push_back(-lp.g[k]);
    }
    const std::size_t m = rows.size();
    std::size_t artificials = 0;
    for (const auto& r : rhs) {
      if (r.sign() < 0) ++artificials;
    }
    first_artificial_ = 2 * n_ + m;
    cols_ = first_artificial_ + artificials;

    table_.assign(m, Vector(cols_ + 1));
    basis_.assign(m, 0);
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational flip = rhs[i].sign() < 0 ? Rational(-1) : Rational(1);
      Vector& row = table_[i];
      for (std::size_t k = 0; k < n_; ++k) {
        row[k] = flip * rows[i][k];
        row[n_ + k] = -row[k];
      }
      row[2 * n_ + i] = flip;
      row[cols_] = flip * rhs[i];
      if (flip.sign() < 0) {
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = 2 * n_ + i;
      }
    }
  }

  // Phase one. Returns false when the artificial sum cannot reach zero.
  bool find_feasible_basis() {
    if (cols_ == first_artificial_) return true;
    Vector cost(cols_);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1;
    const auto entering = run(cost, cols_);
    (void)entering;  // phase one is bounded below by zero
    if (reduced_[cols_].sign() != 0) return false;

    // Pivot remaining zero-level artificials out of the basis; a row with no
    // structural or slack entry left is redundant.
    for (std::size_t i = 0; i < table_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!table_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == first_artificial_) {
        table_.erase(table_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, col);
        ++i;
      }
    }
    return true;
  }

  // Phase two over the original columns. Returns the unbounded entering
  // column, or nullopt at optimality.
  std::optional<std::size_t> optimize(const Vector& objective) {
    Vector cost(cols_);
    for (std::size_t k = 0; k < n_; ++k) {
      cost[k] = objective[k];
      cost[n_ + k] = -objective[k];
    }
    return run(cost, first_artificial_);
  }

  [[nodiscard]] Vector solution() const {
    Vector standard(cols_);
    for (std::size_t i = 0; i < table_.size(); ++i) standard[basis_[i]] = table_[i][cols_];
    Vector x(n_);
    for (std::size_t k = 0; k < n_; ++k) x[k] = standard[k] - standard[n_ + k];
    return x;
  }

  [[nodiscard]] Vector ray(std::size_t entering) const {
    Vector direction(cols_);
    direction[entering] = 1;
    for (std::size_t i = 0; i < table_.size(); ++i) direction[basis_[i]] = -table_[i][entering];
    Vector r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = direction[k] - direction[n_ + k];
    return r;
  }

 private:
  // Minimizes cost over columns [0, allowed) with Bland's rule.
  std::optional<std::size_t> run(const Vector& cost, std::size_t allowed) {
    reduced_.assign(cols_ + 1, Rational());
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!table_[i][j].is_zero()) reduced_[j] -= cb * table_[i][j];
      }
    }
    for (;;) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return std::nullopt;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < table_.size(); ++i) {
        const Rational& a = table_[i][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = table_[i][cols_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return entering;
      pivot(*leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Vector& p = table_[row];
    const Rational inv = Rational(1) / p[col];
    for (auto& x : p) {
      if (!x.is_zero()) x *= inv;
    }
    auto eliminate = [&](Vector& target) {
      if (target[col].is_zero()) return;
      const Rational factor = target[col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!p[j].is_zero()) target[j] -= factor * p[j];
      }
    };
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i != row) eliminate(table_[i]);
    }
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  Matrix table_;
  std::vector<std::size_t> basis_;
  Vector reduced_;
};

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  check_shapes(lp);
  ++g_solve_count;

  Tableau tableau(lp);
  LPOutcome out;
  if (!tableau.find_feasible_basis()) {
    out.status = Status::Infeasible;
    return out;
  }
  if (const auto entering = tableau.optimize(lp.objective)) {
    out.status = Status::Unbounded;
    out.point = tableau.solution();
    out.ray = tableau.ray(*entering);
    return out;
  }
  out.status = Status::Optimal;
  out.point = tableau.solution();
  out.value = dot(lp.objective, out.point);
  return out;
}

std::optional<Vector> feasible(std::size_t dimension, const Matrix& A, const Vector& b,
                               const Matrix& E, const Vector& g) {
  LinearProgram lp{Vector(dimension), A, b, E, g};
  auto out = solve(lp);
  if (out.infeasible()) return std::nullopt;
  return std::move(out.point);
}

bool verify(const LinearProgram& lp, const LPOutcome& outcome) {
  const std::size_t n = lp.dimension();
  auto point_ok = [&](const Vector& x) {
    if (x.size() != n) return false;
    for (std::size_t i = 0; i < lp.A.size(); ++i) {
      if (dot(lp.A[i], x) > lp.b[i]) return false;
    }
    for (std::size_t i = 0; i < lp.E.size(); ++i) {
      if (dot(lp.E[i], x) != lp.g[i]) return false;
    }
    return true;
  };
  switch (outcome.status) {
    case Status::Infeasible:
      return true;
    case Status::Optimal:
      return point_ok(outcome.point) && dot(lp.objective, outcome.point) == outcome.value;
    case Status::Unbounded: {
      if (!point_ok(outcome.point) || outcome.ray.size() != n) return false;
      for (const auto& row : lp.A) {
        if (dot(row, outcome.ray).sign() > 0) return false;
      }
      for (const auto& row : lp.E) {
        if (!dot(row, outcome.ray).is_zero()) return false;
      }
      return dot(lp.objective, outcome.ray).sign() < 0;
    }
  }
  return false;
}

std::uint64_t solve_count() { return g_solve_count; }

}  // namespace lfvo::ratlp
