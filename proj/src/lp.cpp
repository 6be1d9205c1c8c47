#include "peelkit/lp.hpp"

#include <cassert>

namespace peelkit::lp {

namespace {

// Dense tableau for min sum(artificials) s.t. A' x + I a = b', x, a >= 0.
class PhaseOne {
 public:
  PhaseOne(const Matrix& a, const std::vector<Scalar>& b)
      : rows_(b.size()), cols_(rows_ == 0 ? 0 : a[0].size()), flip_(rows_, 1) {
    const std::size_t width = cols_ + rows_ + 1;
    tab_.assign(rows_, std::vector<Scalar>(width));
    cost_.assign(cols_ + rows_, Scalar(0));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (b[i] < 0) flip_[i] = -1;
      for (std::size_t j = 0; j < cols_; ++j) tab_[i][j] = flip_[i] * a[i][j];
      tab_[i][cols_ + i] = 1;
      tab_[i][width - 1] = flip_[i] * b[i];
      basis_[i] = cols_ + i;
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= tab_[i][j];
    }
  }

  EqualityResult run() {
    while (true) {
      std::size_t enter = cost_.size();
      for (std::size_t j = 0; j < cost_.size(); ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cost_.size()) break;
      pivot(pick_leaving(enter), enter);
    }

    EqualityResult res;
    const std::size_t rhs = cols_ + rows_;
    Scalar infeasibility = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= cols_) infeasibility += tab_[i][rhs];
    }
    if (infeasibility == 0) {
      res.feasible = true;
      res.x.assign(cols_, Scalar(0));
      for (std::size_t i = 0; i < rows_; ++i) {
        if (basis_[i] < cols_) res.x[basis_[i]] = tab_[i][rhs];
      }
    } else {
      res.farkas.resize(rows_);
      for (std::size_t i = 0; i < rows_; ++i) res.farkas[i] = flip_[i] * (1 - cost_[cols_ + i]);
    }
    return res;
  }

 private:
  std::size_t pick_leaving(std::size_t enter) const {
    const std::size_t rhs = cols_ + rows_;
    std::size_t best = rows_;
    Scalar best_ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (tab_[i][enter] <= 0) continue;
      Scalar ratio = tab_[i][rhs] / tab_[i][enter];
      if (best == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so a leaving row always exists.
    assert(best < rows_);
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& prow = tab_[row];
    const Scalar inv = 1 / prow[col];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      const Scalar f = tab_[i][col];
      for (std::size_t j = 0; j < prow.size(); ++j) {
        if (prow[j] != 0) tab_[i][j] -= f * prow[j];
      }
    }
    if (cost_[col] != 0) {
      const Scalar f = cost_[col];
      for (std::size_t j = 0; j < cost_.size(); ++j) {
        if (prow[j] != 0) cost_[j] -= f * prow[j];
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<int> flip_;
  std::vector<std::vector<Scalar>> tab_;
  std::vector<Scalar> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

EqualityResult solve_nonnegative(const Matrix& a, const std::vector<Scalar>& b) {
  return PhaseOne(a, b).run();
}

std::optional<std::vector<Scalar>> solve_inequalities(const Matrix& a, const std::vector<Scalar>& b) {
  // x = u - v, A u - A v + s = b with u, v, s >= 0.
  const std::size_t rows = a.size();
  if (rows == 0) return std::vector<Scalar>{};
  const std::size_t n = a[0].size();
  Matrix std_form(rows, std::vector<Scalar>(2 * n + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std_form[i][j] = a[i][j];
      std_form[i][n + j] = -a[i][j];
    }
    std_form[i][2 * n + i] = 1;
  }
  auto res = solve_nonnegative(std_form, b);
  if (!res.feasible) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = res.x[j] - res.x[n + j];
  return x;
}

}  // namespace peelkit::lp
