#include "peelkit/geom.hpp"

#include <algorithm>
#include <numeric>

#include "peelkit/combinatorics.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/lp.hpp"

namespace peelkit {

int determinant_sign(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  int s = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return s * sgn(a[n - 1][n - 1]);
}

int matrix_rank(const std::vector<std::vector<Scalar>>& m) {
  auto a = m;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Scalar f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int orientation(const std::vector<Point>& simplex, int dim) {
  if (simplex.size() != static_cast<std::size_t>(dim) + 1) {
    throw InputError("orientation needs exactly d+1 points");
  }
  for (const auto& p : simplex) {
    if (p.size() != static_cast<std::size_t>(dim)) throw InputError("orientation: dimension mismatch");
  }
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(dim);
  for (int i = 1; i <= dim; ++i) rows.push_back(simplex[i] - simplex[0]);
  return determinant_sign(rows);
}

std::optional<std::vector<std::size_t>> find_degeneracy(const PointSet& p) {
  const std::size_t n = p.size();
  const std::size_t d = static_cast<std::size_t>(p.dim);
  if (d == 1) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p[a][0] < p[b][0]; });
    for (std::size_t i = 1; i < n; ++i) {
      if (p[order[i]][0] == p[order[i - 1]][0]) {
        return std::vector<std::size_t>{std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])};
      }
    }
    return std::nullopt;
  }
  if (n <= d) {
    if (n <= 1) return std::nullopt;
    std::vector<std::vector<Scalar>> diffs;
    for (std::size_t i = 1; i < n; ++i) diffs.push_back(p[i] - p[0]);
    if (matrix_rank(diffs) < static_cast<int>(n - 1)) {
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    return std::nullopt;
  }
  std::optional<std::vector<std::size_t>> bad;
  std::vector<Point> simplex(d + 1);
  for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i <= d; ++i) simplex[i] = p[idx[i]];
    if (orientation(simplex, p.dim) == 0) {
      bad = idx;
      return false;
    }
    return true;
  });
  return bad;
}

bool is_general_position(const PointSet& p) { return !find_degeneracy(p).has_value(); }

void require_general_position(const PointSet& p) {
  if (auto bad = find_degeneracy(p)) {
    std::string msg = "point set is not in general position: points {";
    for (std::size_t i = 0; i < bad->size(); ++i) msg += (i ? "," : "") + std::to_string((*bad)[i]);
    msg += "} lie on a common hyperplane";
    throw DegenerateError(msg, *bad);
  }
}

namespace {

MembershipCertificate membership_1d(const Point& q, const PointSet& p) {
  MembershipCertificate cert;
  const Scalar& x = q[0];
  std::size_t lo = p.size(), hi = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Scalar& v = p[i][0];
    if (v <= x && (lo == p.size() || v > p[lo][0])) lo = i;
    if (v >= x && (hi == p.size() || v < p[hi][0])) hi = i;
  }
  if (lo == p.size() || hi == p.size()) {
    cert.kind = MembershipCertificate::Kind::kSeparator;
    if (lo == p.size()) {
      // Everything lies strictly right of q.
      Scalar mn = p[0][0];
      for (const auto& s : p.points) mn = std::min(mn, s[0]);
      cert.normal = {Scalar(-1)};
      cert.offset = -mn;
    } else {
      Scalar mx = p[0][0];
      for (const auto& s : p.points) mx = std::max(mx, s[0]);
      cert.normal = {Scalar(1)};
      cert.offset = mx;
    }
    return cert;
  }
  cert.kind = MembershipCertificate::Kind::kWeights;
  cert.weights.assign(p.size(), Scalar(0));
  if (lo == hi) {
    cert.weights[lo] = 1;
  } else {
    const Scalar span = p[hi][0] - p[lo][0];
    cert.weights[lo] = (p[hi][0] - x) / span;
    cert.weights[hi] = (x - p[lo][0]) / span;
  }
  return cert;
}

}  // namespace

MembershipCertificate convex_membership(const Point& q, const PointSet& p) {
  if (static_cast<int>(q.size()) != p.dim) throw InputError("convex_membership: dimension mismatch");
  MembershipCertificate cert;
  if (p.empty()) {
    cert.kind = MembershipCertificate::Kind::kSeparator;
    cert.normal = origin(p.dim);
    cert.normal[0] = 1;
    cert.offset = q[0] - 1;
    return cert;
  }
  if (p.dim == 1) return membership_1d(q, p);

  const std::size_t d = static_cast<std::size_t>(p.dim);
  lp::Matrix a(d + 1, std::vector<Scalar>(p.size()));
  std::vector<Scalar> b(d + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = p[j][i];
    a[d][j] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = q[i];
  b[d] = 1;

  auto res = lp::solve_nonnegative(a, b);
  if (res.feasible) {
    cert.kind = MembershipCertificate::Kind::kWeights;
    cert.weights = std::move(res.x);
  } else {
    // y = (u, u0) with u.s + u0 <= 0 for all s and u.q + u0 > 0.
    cert.kind = MembershipCertificate::Kind::kSeparator;
    cert.normal.assign(res.farkas.begin(), res.farkas.begin() + d);
    cert.offset = -res.farkas[d];
  }
  return cert;
}

bool verify_certificate(const MembershipCertificate& cert, const Point& q, const PointSet& p) {
  if (cert.is_member()) {
    if (cert.weights.size() != p.size() || p.empty()) return false;
    Scalar total = 0;
    Point acc = origin(p.dim);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (cert.weights[i] < 0) return false;
      total += cert.weights[i];
      if (cert.weights[i] != 0) acc = acc + cert.weights[i] * p[i];
    }
    return total == 1 && acc == q;
  }
  if (static_cast<int>(cert.normal.size()) != p.dim) return false;
  if (!(dot(cert.normal, q) > cert.offset)) return false;
  for (const auto& s : p.points) {
    if (dot(cert.normal, s) > cert.offset) return false;
  }
  return true;
}

std::vector<std::size_t> hull_vertices(const PointSet& p) {
  std::vector<std::size_t> out;
  if (p.size() == 1) return {0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    PointSet rest(p.dim, {});
    rest.points.reserve(p.size() - 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i) rest.points.push_back(p[j]);
    }
    if (!convex_membership(p[i], rest).is_member()) out.push_back(i);
  }
  return out;
}

}  // namespace peelkit

namespace peelkit {

Point null_vector(const std::vector<Point>& rows, int dim) {
  // Reduced row echelon form, then set the first free column to 1.
  auto a = rows;
  const std::size_t cols = static_cast<std::size_t>(dim);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const Scalar inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0, k = 0; c < cols; ++c) {
    if (k < pivot_col.size() && pivot_col[k] == c) {
      ++k;
      continue;
    }
    free_col = c;
    break;
  }
  if (free_col == cols) throw InputError("null_vector: rows have full column rank");
  Point x(cols, Scalar(0));
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free_col];
  return x;
}

}  // namespace peelkit
