#include "peelkit/defense.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "peelkit/combinatorics.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/lp.hpp"
#include "peelkit/peeling.hpp"

namespace peelkit {

int open_count(const PointSet& s, const Point& p, const Point& direction) {
  int c = 0;
  for (const auto& q : s.points) {
    if (dot(direction, q - p) > 0) ++c;
  }
  return c;
}

DepthReport open_halfspace_depth(const PointSet& s, const Point& p) {
  if (static_cast<int>(p.size()) != s.dim) throw InputError("depth: dimension mismatch");
  require_general_position(s.with_point(p));
  const int d = s.dim;
  DepthReport best;
  if (d == 1) {
    int left = 0, right = 0;
    for (const auto& q : s.points) (q[0] < p[0] ? left : right)++;
    best.depth = std::min(left, right);
    best.witness = {Scalar(left < right ? -1 : 1)};
    return best;
  }

  std::vector<Point> rel;
  rel.reserve(s.size());
  for (const auto& q : s.points) rel.push_back(q - p);

  if (rel.size() < static_cast<std::size_t>(d - 1) || rel.empty()) {
    best.depth = 0;
    best.witness = rel.empty() ? Point(origin(d)) : null_vector(rel, d);
    if (rel.empty()) best.witness[0] = 1;
    return best;
  }

  best.depth = static_cast<int>(rel.size()) + 1;
  std::vector<Point> rows(static_cast<std::size_t>(d - 1));
  for_each_combination(rel.size(), static_cast<std::size_t>(d - 1), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) rows[j] = rel[idx[j]];
    const Point a = null_vector(rows, d);
    int pos = 0, neg = 0;
    for (const auto& v : rel) {
      const int sg = sgn(dot(a, v));
      if (sg > 0) ++pos;
      if (sg < 0) ++neg;
    }
    if (pos < best.depth) {
      best.depth = pos;
      best.witness = a;
    }
    if (neg < best.depth) {
      best.depth = neg;
      best.witness = Scalar(-1) * a;
    }
    return best.depth > 0;
  });
  return best;
}

int depth_oracle(const PointSet& s, const Point& p, std::size_t limit) {
  if (s.size() > limit) throw InputError("depth_oracle is limited to " + std::to_string(limit) + " points");
  if (s.empty() || !convex_membership(p, s).is_member()) return 0;

  std::vector<Point> rel;
  for (const auto& q : s.points) rel.push_back(q - p);
  const std::size_t n = rel.size();
  // Is there a with a.v >= 1 on the chosen k points and a.v <= 0 elsewhere?
  for (std::size_t k = 1; k <= n; ++k) {
    bool found = false;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& chosen) {
      lp::Matrix a;
      std::vector<Scalar> b;
      std::size_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool positive = c < chosen.size() && chosen[c] == i;
        if (positive) {
          ++c;
          a.push_back(Scalar(-1) * rel[i]);
          b.push_back(-1);
        } else {
          a.push_back(rel[i]);
          b.push_back(0);
        }
      }
      found = lp::solve_inequalities(a, b).has_value();
      return !found;
    });
    if (found) return static_cast<int>(k);
  }
  throw CertificationError("depth_oracle found no feasible direction");
}

namespace {

constexpr int kPerturbationBudget = 256;

PointSet moment_curve_points(int d, int n, const Scalar& step) {
  PointSet out(d, {});
  for (int i = 1; i <= n; ++i) {
    const Scalar radial = 1 + step * i;
    Point w(static_cast<std::size_t>(d));
    Scalar power = 1;
    for (int c = 0; c < d; ++c) {
      w[static_cast<std::size_t>(c)] = (i % 2 == 0 ? 1 : -1) * radial * power;
      power *= i;
    }
    out.points.push_back(std::move(w));
  }
  return out;
}

}  // namespace

PointSet gale_set(int d, int m) {
  if (d < 1 || m < 1) throw InputError("gale_set needs d >= 1 and m >= 1");
  const int n = d + 2 * m - 1;
  const Point o = origin(d);
  // Radial nudges keep every open-halfspace count and only break affine
  // coincidences, so the first general-position attempt is accepted.
  for (int attempt = 0; attempt < kPerturbationBudget; ++attempt) {
    const Scalar step = attempt == 0 ? Scalar(0) : Scalar(1, n + attempt);
    PointSet w = moment_curve_points(d, n, step);
    if (!is_general_position(w.with_point(o))) continue;
    if (open_halfspace_depth(w, o).depth != m) continue;
    return w;
  }
  throw CertificationError("gale_set(" + std::to_string(d) + "," + std::to_string(m) +
                           ") could not be certified within the perturbation budget");
}

namespace {

Scalar l1_norm(const Point& p) {
  Scalar acc = 0;
  for (const auto& v : p) acc += abs(v);
  return acc;
}

bool cross_polytope_inside(const PointSet& pts, std::size_t subset_size, const Scalar& r) {
  const int d = pts.dim;
  std::vector<Point> probes;
  for (int i = 0; i < d; ++i) {
    for (int sgn_ : {1, -1}) {
      Point v = origin(d);
      v[static_cast<std::size_t>(i)] = Scalar(sgn_ * d) * r;
      probes.push_back(std::move(v));
    }
  }
  return for_each_combination(pts.size(), subset_size, [&](const std::vector<std::size_t>& idx) {
    const PointSet sub = pts.subset(idx);
    for (const auto& v : probes) {
      if (!convex_membership(v, sub).is_member()) return false;
    }
    return true;
  });
}

Scalar pow2_inverse(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Scalar(mpz_class(1), den);
}

}  // namespace

Scalar certified_inner_radius(const PointSet& pts, std::size_t subset_size) {
  unsigned lo = 0, hi = 64;
  if (!cross_polytope_inside(pts, subset_size, pow2_inverse(hi))) {
    throw CertificationError("origin is not interior to every subset; no inner radius exists");
  }
  while (lo < hi) {
    const unsigned mid = (lo + hi) / 2;
    if (cross_polytope_inside(pts, subset_size, pow2_inverse(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return pow2_inverse(lo + 1);
}

BaseSet base_set(int d, int m) {
  if (d < 2 || m < 1) throw InputError("base_set needs d >= 2 and m >= 1");
  const int total = d + 2 * m - 1;
  const std::size_t keep = static_cast<std::size_t>(total - m + 1);
  const Point o = origin(d);

  PointSet gale = gale_set(d, m);
  Scalar radius = 0;
  for (const auto& p : gale.points) radius = std::max(radius, l1_norm(p));
  for (auto& p : gale.points) p = (1 / radius) * p;

  BaseSet out;
  out.m = m;
  out.points = PointSet(d, std::vector<Point>(gale.points.begin(), gale.points.begin() + static_cast<std::ptrdiff_t>(keep)));
  for (int j = 1; j <= m - 1; ++j) {
    Scalar eps = certified_inner_radius(out.points, keep);
    const Point& next = gale.points[keep + static_cast<std::size_t>(j) - 1];
    // Halve further only if the shrunken point lands on a hyperplane.
    int tries = 0;
    while (!is_general_position(out.points.with_point(eps * next).with_point(o))) {
      if (++tries > 64) throw CertificationError("base_set: no general-position radius found");
      eps /= 2;
    }
    out.points.points.push_back(eps * next);
    out.scaling_radii.push_back(eps);
  }

  if (!defends_by_peeling(out.points, o, m)) {
    throw CertificationError("base_set: origin is not defended for m steps");
  }
  const PointSet united = out.points.with_point(o);
  HullIndex index(united);
  const std::size_t cap = static_cast<std::size_t>(d + m);
  std::unordered_set<PeelState> frontier{index.full()};
  for (int step = 0; step < m; ++step) {
    std::unordered_set<PeelState> next;
    for (PeelState s : frontier) {
      const PeelState h = index.hull(s);
      if (static_cast<std::size_t>(popcount(h)) > cap) {
        std::string prefix;
        for (std::size_t i = 0; i < united.size(); ++i) {
          if (!(s & bit(i))) prefix += (prefix.empty() ? "" : ",") + std::to_string(i);
        }
        throw CertificationError("base_set: more than d+m hull vertices after removing {" + prefix + "}");
      }
      for (PeelState rest = h; rest; rest &= rest - 1) next.insert(s & ~(rest & -rest));
    }
    frontier = std::move(next);
  }
  return out;
}

PointSet sample_general_position(int d, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const Point o = origin(d);
  while (true) {
    PointSet s(d, {});
    for (std::size_t i = 0; i < n; ++i) {
      Point p(static_cast<std::size_t>(d));
      for (auto& c : p) {
        c = Scalar(draw(-40, 40), draw(1, 6));
        c.canonicalize();
      }
      s.points.push_back(std::move(p));
    }
    if (is_general_position(s.with_point(o))) return s;
  }
}

ThresholdReport below_threshold_search(int d, int m, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("below_threshold_search needs at least one trial");
  if (d < 1 || m < 1) throw InputError("below_threshold_search needs d >= 1 and m >= 1");
  ThresholdReport report;
  report.d = d;
  report.m = m;
  report.trials = trials;
  const std::size_t size = static_cast<std::size_t>(d + 2 * m - 2);
  report.depth_histogram.assign(size + 1, 0);
  const Point o = origin(d);
  for (std::uint64_t t = 0; t < trials; ++t) {
    PointSet s = sample_general_position(d, size, seed, t);
    const int depth = open_halfspace_depth(s, o).depth;
    ++report.depth_histogram[static_cast<std::size_t>(depth)];
    if (depth > report.max_depth) {
      report.max_depth = depth;
      report.worst = std::move(s);
    }
  }
  return report;
}

}  // namespace peelkit
